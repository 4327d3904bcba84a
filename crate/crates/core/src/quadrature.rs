//! Adaptive Gauss–Kronrod quadrature.
//!
//! A 21-point Kronrod rule with its embedded 10-point Gauss rule drives a
//! globally adaptive bisection (the interval with the largest error is split
//! first). Semi-infinite integrals over `(0, ∞)` are mapped to the real line
//! with `z = e^y`, which turns the power-law ends of the spectral-efficiency
//! integrands into exponentially decaying tails.

#![allow(clippy::excessive_precision)]

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Maximum number of subintervals held by the adaptive scheme.
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-8,
            abs_tol: 1e-300,
            max_subdivisions: 4000,
        }
    }
}

impl QuadratureConfig {
    pub fn with_rel_tol(rel_tol: f64) -> Self {
        QuadratureConfig {
            rel_tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::invalid("quadrature tolerances must be positive"));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::invalid("max_subdivisions must be at least 1"));
        }
        Ok(())
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
}

const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600525452218,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One application of the 21-point rule with the QUADPACK error heuristic.
pub fn gk21<F: FnMut(f64) -> f64>(f: &mut F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut res_k = fc * WGK[10];
    let mut res_abs = res_k.abs();
    let mut res_g = 0.0;
    let mut fv1 = [0.0; 10];
    let mut fv2 = [0.0; 10];
    for j in 0..10 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        res_k += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_g += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * res_k;
    let mut res_asc = WGK[10] * (fc - mean).abs();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = res_k * half;
    res_abs *= half.abs();
    res_asc *= half.abs();
    let mut err = ((res_k - res_g) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (value, err)
}

/// Integrates `f` over `[a, b]`.
pub fn integrate<F: FnMut(f64) -> f64>(f: F, a: f64, b: f64, cfg: &QuadratureConfig) -> Result<Integral> {
    integrate_pieces(f, &[a, b], cfg)
}

/// Integrates `f` over `[points[0], points[last]]`, starting from the given
/// partition. Breakpoints at kinks or steep features speed convergence.
pub fn integrate_pieces<F: FnMut(f64) -> f64>(
    mut f: F,
    points: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Integral> {
    cfg.validate()?;
    if points.len() < 2 {
        return Err(Error::invalid("need at least two integration points"));
    }
    if points.iter().any(|p| !p.is_finite()) {
        return Err(Error::invalid("integration limits must be finite"));
    }
    let mut heap = BinaryHeap::with_capacity(cfg.max_subdivisions.max(points.len()) + 1);
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    for w in points.windows(2) {
        if w[0] == w[1] {
            continue;
        }
        let (v, e) = gk21(&mut f, w[0], w[1]);
        evaluations += 21;
        value += v;
        error += e;
        heap.push(Segment { a: w[0], b: w[1], value: v, error: e });
    }
    loop {
        if !value.is_finite() || !error.is_finite() {
            return Err(Error::Quadrature {
                partial: value,
                abs_error: error,
                reason: "non-finite integrand value".into(),
            });
        }
        if error <= cfg.target(value) {
            return Ok(Integral { value, abs_error: error, evaluations });
        }
        if heap.len() >= cfg.max_subdivisions {
            return Err(Error::Quadrature {
                partial: value,
                abs_error: error,
                reason: format!("subdivision limit {} reached", cfg.max_subdivisions),
            });
        }
        let Some(worst) = heap.pop() else {
            return Ok(Integral { value, abs_error: error, evaluations });
        };
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval at machine resolution; nothing more to gain here
            return Err(Error::Quadrature {
                partial: value,
                abs_error: error,
                reason: "roundoff limit reached".into(),
            });
        }
        let (v1, e1) = gk21(&mut f, worst.a, mid);
        let (v2, e2) = gk21(&mut f, mid, worst.b);
        evaluations += 42;
        value += v1 + v2 - worst.value;
        error += e1 + e2 - worst.error;
        heap.push(Segment { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, error: e2 });
        // refresh the running error sum to stop cancellation drift
        if heap.len() % 256 == 0 {
            error = heap.iter().map(|s| s.error).sum();
            value = heap.iter().map(|s| s.value).sum();
        }
    }
}

/// Integrates `f` over `(0, ∞)` through `z = e^y`.
///
/// `hint` is a characteristic scale of the integrand. A coarse scan in `y`
/// locates the region where `f(z)·z` exceeds `1e-20` of its peak; the tails
/// outside that region are discarded and the rest is integrated adaptively.
pub fn integrate_semi_infinite<F: FnMut(f64) -> f64>(
    mut f: F,
    hint: f64,
    cfg: &QuadratureConfig,
) -> Result<Integral> {
    if !(hint.is_finite() && hint > 0.0) {
        return Err(Error::invalid("scale hint must be positive and finite"));
    }
    let mut g = |y: f64| {
        let z = y.exp();
        if z == 0.0 || !z.is_finite() {
            0.0
        } else {
            f(z) * z
        }
    };
    const STEP: f64 = 0.5;
    const REL_FLOOR: f64 = 1e-20;
    const Y_MAX: f64 = 700.0;
    let center = hint.ln();
    let mut ys: Vec<f64> = Vec::new();
    let mut gs: Vec<f64> = Vec::new();
    let mut y = (center - 60.0).max(-Y_MAX);
    while y <= (center + 60.0).min(Y_MAX) {
        ys.push(y);
        gs.push(g(y).abs());
        y += STEP;
    }
    let peak = |gs: &[f64]| gs.iter().copied().fold(0.0, f64::max);
    // extend while the scan edges still carry weight
    while gs[0] > REL_FLOOR * peak(&gs) && ys[0] - STEP >= -Y_MAX {
        let y0 = ys[0] - STEP;
        ys.insert(0, y0);
        gs.insert(0, g(y0).abs());
    }
    while gs[gs.len() - 1] > REL_FLOOR * peak(&gs) && ys[ys.len() - 1] + STEP <= Y_MAX {
        let y1 = ys[ys.len() - 1] + STEP;
        ys.push(y1);
        gs.push(g(y1).abs());
    }
    let top = peak(&gs);
    if !top.is_finite() {
        return Err(Error::Quadrature {
            partial: f64::NAN,
            abs_error: f64::INFINITY,
            reason: "non-finite integrand value".into(),
        });
    }
    if top == 0.0 {
        return Ok(Integral { value: 0.0, abs_error: 0.0, evaluations: ys.len() });
    }
    let first = gs.iter().position(|&v| v > REL_FLOOR * top).unwrap_or(0);
    let last = gs.iter().rposition(|&v| v > REL_FLOOR * top).unwrap_or(gs.len() - 1);
    let lo = ys[first.saturating_sub(1)];
    let hi = ys[(last + 1).min(ys.len() - 1)];
    let pieces = (((hi - lo) / 2.0).ceil() as usize).clamp(1, 400);
    let points: Vec<f64> = (0..=pieces)
        .map(|i| lo + (hi - lo) * i as f64 / pieces as f64)
        .collect();
    let scan = ys.len();
    integrate_pieces(g, &points, cfg).map(|r| Integral {
        evaluations: r.evaluations + scan,
        ..r
    })
}
