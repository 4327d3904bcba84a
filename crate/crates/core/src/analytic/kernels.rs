//! Laplace-transform kernels shared by the exact integrals.

use std::f64::consts::{LN_2, PI};

use crate::error::{Error, Result};
use crate::quadrature::{gk21, integrate_pieces, integrate_semi_infinite, Integral, QuadratureConfig};
use crate::special::{bessel_k_scaled, hyp2f1_family, ln_gamma, sinc};

/// `E[e^{-z I d^α}] = exp(−λπd² z^{2/α} / sinc(2/α))` for the PPP
/// interference with unit-mean exponential marks.
pub fn laplace_interference(z: f64, lambda: f64, alpha: f64, d: f64) -> f64 {
    (-lambda * PI * d * d * z.powf(2.0 / alpha) / sinc(2.0 / alpha)).exp()
}

/// `1 − (1 + s)^{-n}` without cancellation for small `s`.
#[inline]
pub fn one_minus_inv_pow(s: f64, n: f64) -> f64 {
    -(-n * s.ln_1p()).exp_m1()
}

/// `Σ_{k=1}^{n} C(n,k) s^k / (1+s)^n`, the expanded form of
/// [`one_minus_inv_pow`].
pub fn binomial_form(s: f64, n: u32) -> f64 {
    let mut c = 1.0;
    let mut sum = 0.0;
    for k in 1..=n {
        c *= (n - k + 1) as f64 / k as f64;
        sum += c * s.powi(k as i32);
    }
    sum / (1.0 + s).powi(n as i32)
}

/// `E[log₂(1 + X/(Y + a))]` for independent non-negative X and Y given their
/// Laplace transforms, in bits.
///
/// Integrated in `y = ln z`, where the `1/z` factor is absorbed by `dz = z dy`
/// and the integrand vanishes smoothly at both ends.
pub fn ergodic_rate_transform<LX, LY>(laplace_x: LX, laplace_y: LY, a: f64, quad: &QuadratureConfig) -> Result<Integral>
where
    LX: Fn(f64) -> f64,
    LY: Fn(f64) -> f64,
{
    if !(a >= 0.0) {
        return Err(Error::invalid(format!("noise offset a must be ≥ 0, got {a}")));
    }
    let hint = if a > 0.0 { 1.0 / a } else { 1.0 };
    let r = integrate_semi_infinite(
        |z| (-a * z).exp() / z * (1.0 - laplace_x(z)) * laplace_y(z),
        hint,
        quad,
    )?;
    Ok(Integral {
        value: r.value / LN_2,
        abs_error: r.abs_error / LN_2,
        ..r
    })
}

/// `G(a) = ∫_a^∞ dw / (1 + w^{α/2})`, the normalized interference exponent
/// of a PPP with the nearest points removed.
///
/// `G(a) = (2/(α−2)) a^{1−α/2} ₂F₁(1, 1−2/α; 2−2/α; −a^{−α/2})`, summed as the
/// hypergeometric series for `a ≥ 1.43`, as `G(0)` minus the Taylor series of
/// the complement for `a ≤ 0.7`, and by a Kronrod panel in between.
#[derive(Debug, Clone, Copy)]
pub struct TailIntegral {
    alpha: f64,
    p: f64,
    g0: f64,
    g_hi: f64,
}

const TAIL_LO: f64 = 0.7;
const TAIL_HI: f64 = 1.43;

impl TailIntegral {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 2.0 && alpha.is_finite()) {
            return Err(Error::invalid(format!("requires path-loss exponent α > 2, got {alpha}")));
        }
        let p = 0.5 * alpha;
        let mut t = TailIntegral {
            alpha,
            p,
            g0: 1.0 / sinc(2.0 / alpha),
            g_hi: 0.0,
        };
        t.g_hi = t.upper_series(TAIL_HI);
        Ok(t)
    }

    /// `G(0) = 1 / sinc(2/α)`.
    pub fn at_zero(&self) -> f64 {
        self.g0
    }

    fn upper_series(&self, a: f64) -> f64 {
        let r = a.powf(-self.p);
        let mut pow = a.powf(1.0 - self.p);
        let mut sum = 0.0;
        for k in 0..2000 {
            let term = pow / (self.p * (k + 1) as f64 - 1.0);
            sum += if k % 2 == 0 { term } else { -term };
            if term < 1e-17 * sum.abs() {
                break;
            }
            pow *= r;
        }
        sum
    }

    fn lower_series(&self, a: f64) -> f64 {
        let r = a.powf(self.p);
        let mut pow = a;
        let mut sum = 0.0;
        for k in 0..2000 {
            let term = pow / (self.p * k as f64 + 1.0);
            sum += if k % 2 == 0 { term } else { -term };
            if term < 1e-17 * sum.abs() {
                break;
            }
            pow *= r;
        }
        self.g0 - sum
    }

    pub fn eval(&self, a: f64) -> f64 {
        if a <= 0.0 {
            self.g0
        } else if a <= TAIL_LO {
            self.lower_series(a)
        } else if a >= TAIL_HI {
            self.upper_series(a)
        } else {
            let p = self.p;
            self.g_hi + gk21(&mut |w: f64| 1.0 / (1.0 + w.powf(p)), a, TAIL_HI).0
        }
    }

    /// Same quantity through the ₂F₁ Euler integral.
    pub fn eval_hypergeometric(&self, a: f64) -> Result<f64> {
        Ok(2.0 / (self.alpha - 2.0) * a.powf(1.0 - self.p) * hyp2f1_family(self.alpha, a.powf(-self.p))?)
    }

    /// Same quantity by direct quadrature of the defining integral.
    pub fn eval_direct(&self, a: f64) -> Result<f64> {
        let p = self.p;
        let r = integrate_semi_infinite(
            |z: f64| 1.0 / (1.0 + (a + z).powf(p)),
            a.max(1.0),
            &QuadratureConfig::with_rel_tol(1e-12),
        )?;
        Ok(r.value)
    }

    /// Compares the series evaluation with direct quadrature and with the
    /// ₂F₁ integral at a few points; fails beyond `1e-6` relative.
    pub fn cross_check(&self) -> Result<()> {
        for a in [0.05, 0.5, 1.0, 2.0, 20.0] {
            let primary = self.eval(a);
            for (what, other) in [("direct quadrature", self.eval_direct(a)?), ("₂F₁ integral", self.eval_hypergeometric(a)?)] {
                if ((primary - other) / other).abs() > 1e-6 {
                    return Err(Error::Quadrature {
                        partial: primary,
                        abs_error: (primary - other).abs(),
                        reason: format!("tail integral at a = {a} disagrees with {what} ({other})"),
                    });
                }
            }
        }
        Ok(())
    }
}

/// `ln` of the Gamma(L, 1) density.
fn ln_gamma_pdf(t: f64, shape: f64, ln_norm: f64) -> f64 {
    (shape - 1.0) * t.ln() - t - ln_norm
}

/// Support `[0, t_max]` covering Gamma(L, 1) up to a tail below 1e-20.
fn gamma_support(shape: f64) -> f64 {
    shape + 15.0 * shape.sqrt() + 45.0
}

/// Laplace transform of the residual interference after cancelling the `L`
/// nearest interferers, in the normalized variable `s = λπ z^{2/α}`:
/// `E_t[exp(−s G(t/s))]` with `t = λπ d_L² ~ Gamma(L, 1)`.
pub(crate) fn sic_laplace_normalized(tail: &TailIntegral, l: usize, s: f64, quad: &QuadratureConfig) -> Result<f64> {
    if s <= 0.0 {
        return Ok(1.0);
    }
    let shape = l as f64;
    let ln_norm = ln_gamma(shape);
    let t_max = gamma_support(shape);
    let mode = (shape - 1.0).max(0.0);
    let mut points = vec![0.0];
    for k in [-4.0, -1.0, 1.0, 4.0] {
        let t = mode + k * shape.sqrt();
        if t > points[points.len() - 1] && t < t_max {
            points.push(t);
        }
    }
    points.push(t_max);
    let r = integrate_pieces(
        |t: f64| (ln_gamma_pdf(t, shape, ln_norm) - s * tail.eval(t / s)).exp(),
        &points,
        quad,
    )?;
    Ok(r.value.min(1.0))
}

/// `L_Ĩ(L; z)`, the Laplace transform of the interference left after ZF-SIC
/// of the `L ≥ 1` nearest interferers.
pub fn sic_laplace(l: usize, z: f64, lambda: f64, alpha: f64, quad: &QuadratureConfig) -> Result<f64> {
    if l < 1 {
        return Err(Error::invalid("requires L ≥ 1 cancelled interferers"));
    }
    if !(z >= 0.0) {
        return Err(Error::invalid("requires z ≥ 0"));
    }
    let tail = TailIntegral::new(alpha)?;
    tail.cross_check()?;
    sic_laplace_normalized(&tail, l, lambda * PI * z.powf(2.0 / alpha), quad)
}

/// Lower bound on `L_Ĩ(L; z)` for α = 4 obtained from
/// `π/2 − atan(x) ≤ 1/x`: `2 b^{L/2} K_L(2√b) / Γ(L)` with `b = (λπ)² z`.
pub fn sic_bessel_lower(l: usize, z: f64, lambda: f64) -> Result<f64> {
    if l < 1 {
        return Err(Error::invalid("requires L ≥ 1 cancelled interferers"));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let b = (lambda * PI).powi(2) * z;
    let x = 2.0 * b.sqrt();
    let nu = l as f64;
    let ln_val = 2f64.ln() + 0.5 * nu * b.ln() - x + bessel_k_scaled(nu, x)?.ln() - ln_gamma(nu);
    Ok(ln_val.exp())
}
