//! Special functions needed by the closed forms and kernels.
//!
//! Everything here is double precision and targets ~1e-13 relative accuracy
//! away from zeros of the function.

#![allow(clippy::excessive_precision)]

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_pieces, QuadratureConfig};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `sin(πx) / (πx)`.
pub fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        (PI * x).sin() / (PI * x)
    }
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum(x: f64) -> f64 {
    // x is the shifted argument (original minus one)
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    a
}

/// Γ(x). Poles at non-positive integers return NaN.
pub fn gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / ((PI * x).sin() * gamma(1.0 - x));
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    let xm = x - 1.0;
    let t = xm + LANCZOS_G + 0.5;
    // split the power so t^(x-1/2) cannot overflow before e^-t is applied
    let half = t.powf(0.5 * (xm + 0.5));
    (2.0 * PI).sqrt() * half * (-t).exp() * half * lanczos_sum(xm)
}

/// ln |Γ(x)|.
pub fn ln_gamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return f64::INFINITY;
    }
    if x < 0.5 {
        return (PI / (PI * x).sin().abs()).ln() - ln_gamma(1.0 - x);
    }
    let xm = x - 1.0;
    let t = xm + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (xm + 0.5) * t.ln() - t + lanczos_sum(xm).ln()
}

/// ψ(x) = Γ'(x)/Γ(x).
pub fn digamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return f64::NAN;
    }
    if x < 0.0 {
        return digamma(1.0 - x) - PI / (PI * x).tan();
    }
    let mut acc = 0.0;
    let mut y = x;
    while y < 10.0 {
        acc -= 1.0 / y;
        y += 1.0;
    }
    let r = 1.0 / (y * y);
    // Bernoulli asymptotic series through x^-12
    let tail = r
        * (1.0 / 12.0
            - r * (1.0 / 120.0
                - r * (1.0 / 252.0
                    - r * (1.0 / 240.0 - r * (1.0 / 132.0 - r * 691.0 / 32760.0)))));
    acc + y.ln() - 0.5 / y - tail
}

/// ψ(n) for a positive integer: `-γ + H_{n-1}`.
pub fn digamma_int(n: u32) -> f64 {
    assert!(n >= 1, "digamma_int requires n >= 1");
    -EULER_GAMMA + (1..n).map(|k| 1.0 / k as f64).sum::<f64>()
}

/// Continued fraction for `e^{ix} E1(ix)`, valid for x > 2.
fn e1_imag_cf(x: f64) -> Complex64 {
    let tiny = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / tiny, 0.0);
    let mut d = Complex64::new(1.0, 0.0) / b;
    let mut h = d;
    for i in 2..100_000u32 {
        let a = -((i - 1) as f64).powi(2);
        b += 2.0;
        d = Complex64::new(1.0, 0.0) / (d * a + b);
        c = b + Complex64::new(a, 0.0) / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).norm() < 1e-16 {
            break;
        }
    }
    h
}

const SICI_SERIES_MAX: f64 = 4.0;

fn si_ci_series(x: f64) -> (f64, f64) {
    let mut si = 0.0;
    let mut ci = 0.0;
    // term_k = (-1)^k x^k / k!
    let mut term = 1.0;
    let mut k = 1u32;
    loop {
        term *= x / k as f64;
        let contribution = term / k as f64;
        if !k.is_multiple_of(2) {
            si += if (k / 2).is_multiple_of(2) { contribution } else { -contribution };
        } else {
            ci += if (k / 2).is_multiple_of(2) { contribution } else { -contribution };
        }
        if k > 3 && term < 1e-17 * si.abs() {
            break;
        }
        k += 1;
    }
    (si, EULER_GAMMA + x.ln() + ci)
}

/// Sine and cosine integrals `(Si(x), Ci(x))` for x > 0.
pub fn si_ci(x: f64) -> (f64, f64) {
    if x.is_nan() || x <= 0.0 {
        return (if x == 0.0 { 0.0 } else { f64::NAN }, f64::NAN);
    }
    if x <= SICI_SERIES_MAX {
        return si_ci_series(x);
    }
    let h = e1_imag_cf(x) * Complex64::new(x.cos(), -x.sin());
    (FRAC_PI_2 + h.im, -h.re)
}

pub fn si(x: f64) -> f64 {
    if x < 0.0 {
        -si(-x)
    } else {
        si_ci(x).0
    }
}

pub fn ci(x: f64) -> f64 {
    si_ci(x).1
}

/// Auxiliary function `g(x) = sin(x)(π/2 − Si(x)) − cos(x) Ci(x)`, evaluated
/// without cancellation for large x where it decays like `1/x²`.
pub fn sici_aux_g(x: f64) -> f64 {
    if x <= SICI_SERIES_MAX {
        let (s, c) = si_ci(x);
        x.sin() * (FRAC_PI_2 - s) - x.cos() * c
    } else {
        e1_imag_cf(x).re
    }
}

/// `e^{-x} I_ν(x)`, the exponentially scaled modified Bessel function of the
/// first kind, for ν ≥ 0 and x ≥ 0.
pub fn bessel_i_scaled(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= 0.0 && x >= 0.0) || !nu.is_finite() || x.is_nan() {
        return Err(Error::invalid(format!("I_ν(x) needs ν ≥ 0 and x ≥ 0, got ν = {nu}, x = {x}")));
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if x > 50.0_f64.max(2.0 * nu * nu) {
        return Ok(bessel_i_scaled_asymptotic(nu, x));
    }
    // power series, summed outward from its largest term
    let q = 0.25 * x * x;
    let peak = {
        let b = nu + 2.0;
        let c = nu + 1.0 - q;
        ((-b + (b * b - 4.0 * c).sqrt()) / 2.0).ceil().max(0.0)
    };
    let log_peak =
        (2.0 * peak + nu) * (0.5 * x).ln() - ln_gamma(peak + 1.0) - ln_gamma(peak + nu + 1.0) - x;
    let t_peak = log_peak.exp();
    let mut sum = t_peak;
    let mut t = t_peak;
    let mut k = peak;
    loop {
        t *= q / ((k + 1.0) * (k + nu + 1.0));
        k += 1.0;
        sum += t;
        if t < 1e-17 * sum {
            break;
        }
    }
    let mut t = t_peak;
    let mut k = peak;
    while k > 0.0 {
        t *= k * (k + nu) / q;
        k -= 1.0;
        sum += t;
        if t < 1e-17 * sum {
            break;
        }
    }
    Ok(sum)
}

fn bessel_i_scaled_asymptotic(nu: f64, x: f64) -> f64 {
    let mu = 4.0 * nu * nu;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let odd = (2 * k - 1) as f64;
        let next = -term * (mu - odd * odd) / (k as f64 * 8.0 * x);
        if next.abs() > term.abs() {
            break;
        }
        term = next;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
    }
    sum / (2.0 * PI * x).sqrt()
}

pub fn bessel_i(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_i_scaled(nu, x)? * x.exp())
}

/// `e^{x} K_ν(x)` for x > 0, from `∫₀^∞ exp(−x(cosh t − 1)) cosh(νt) dt`.
pub fn bessel_k_scaled(nu: f64, x: f64) -> Result<f64> {
    if !(x > 0.0 && x.is_finite()) || !nu.is_finite() {
        return Err(Error::invalid(format!("K_ν(x) needs x > 0, got x = {x}")));
    }
    let nu = nu.abs();
    let exponent = |t: f64| -x * (t.cosh() - 1.0) + nu * t;
    let t_peak = (nu / x).asinh();
    let top = exponent(t_peak);
    let mut t_end = t_peak + 1.0;
    while exponent(t_end) > top - 60.0 {
        t_end += 1.0 + 0.5 * t_end;
    }
    let f = |t: f64| {
        let e = exponent(t);
        0.5 * (e - top).exp() * (1.0 + (-2.0 * nu * t).exp())
    };
    let mut points = vec![0.0];
    if t_peak > 0.0 {
        points.push(t_peak);
    }
    points.push(t_end);
    let r = integrate_pieces(f, &points, &QuadratureConfig::with_rel_tol(1e-13))?;
    Ok(r.value * top.exp())
}

pub fn bessel_k(nu: f64, x: f64) -> Result<f64> {
    Ok(bessel_k_scaled(nu, x)? * (-x).exp())
}

/// `₂F₁(1, 1 − 2/α; 2 − 2/α; −v)` for α > 2 and v ≥ 0, from the Euler
/// integral `∫₀¹ ds / (1 + v s^{α/(α−2)})`.
pub fn hyp2f1_family(alpha: f64, v: f64) -> Result<f64> {
    if !(alpha > 2.0 && alpha.is_finite()) {
        return Err(Error::invalid(format!("₂F₁ family needs α > 2, got {alpha}")));
    }
    if !(v >= 0.0 && v.is_finite()) {
        return Err(Error::invalid(format!("₂F₁ family needs finite v ≥ 0, got {v}")));
    }
    if v == 0.0 {
        return Ok(1.0);
    }
    let q = alpha / (alpha - 2.0);
    let knee = v.powf(-1.0 / q);
    let mut points = vec![0.0];
    if knee < 1.0 {
        points.push(knee);
    }
    points.push(1.0);
    let r = integrate_pieces(
        |s: f64| 1.0 / (1.0 + v * s.powf(q)),
        &points,
        &QuadratureConfig::with_rel_tol(1e-13),
    )?;
    Ok(r.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn sinc_half() {
        assert!((sinc(0.5) - 2.0 / PI).abs() < 1e-16);
        assert_eq!(sinc(0.0), 1.0);
        assert!(sinc(1.0).abs() < 1e-16);
    }

    #[test]
    fn gamma_at_integers_is_factorial() {
        let mut fact = 1.0;
        for n in 1..20 {
            assert!(rel(gamma(n as f64), fact) < 1e-13, "Γ({n})");
            fact *= n as f64;
        }
        assert!(gamma(0.0).is_nan());
        assert!(gamma(-3.0).is_nan());
    }

    #[test]
    fn digamma_integer_form_agrees() {
        for n in 1..40 {
            assert!((digamma(n as f64) - digamma_int(n)).abs() < 1e-13, "ψ({n})");
        }
        assert!((digamma(1.0) + EULER_GAMMA).abs() < 1e-14);
    }

    #[test]
    fn aux_g_matches_definition_at_moderate_x() {
        for x in [4.5, 6.0, 9.0, 15.0] {
            let (s, c) = si_ci(x);
            let direct = x.sin() * (FRAC_PI_2 - s) - x.cos() * c;
            assert!((sici_aux_g(x) - direct).abs() < 1e-14, "x = {x}");
        }
    }

    #[test]
    fn sici_continuous_at_switch() {
        let (s1, c1) = si_ci_series(SICI_SERIES_MAX);
        let h = e1_imag_cf(SICI_SERIES_MAX)
            * Complex64::new(SICI_SERIES_MAX.cos(), -SICI_SERIES_MAX.sin());
        assert!((s1 - (FRAC_PI_2 + h.im)).abs() < 1e-14);
        assert!((c1 + h.re).abs() < 1e-14);
    }

    #[test]
    fn hyp2f1_alpha4_arctan_identity() {
        for v in [0.1, 1.0, 10.0] {
            let s = f64::sqrt(v);
            assert!(rel(hyp2f1_family(4.0, v).unwrap(), s.atan() / s) < 1e-12, "v = {v}");
        }
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_i_scaled(-1.0, 1.0).is_err());
        assert!(bessel_i_scaled(1.0, -1.0).is_err());
        assert!(bessel_k_scaled(1.0, 0.0).is_err());
        assert!(hyp2f1_family(2.0, 1.0).is_err());
        assert!(hyp2f1_family(4.0, -1.0).is_err());
        assert!(ci(-1.0).is_nan());
    }

    #[test]
    fn bessel_i_series_and_asymptotic_meet() {
        for nu in [0.0, 1.0, 3.0] {
            let x = 50.0_f64.max(2.0 * nu * nu);
            let a = bessel_i_scaled_asymptotic(nu, x * 1.0000001);
            let s = bessel_i_scaled(nu, x).unwrap();
            assert!(rel(a, s) < 1e-6, "ν = {nu}");
        }
    }

    #[test]
    fn bessel_wronskian() {
        // I_ν K_{ν+1} + I_{ν+1} K_ν = 1/x
        for (nu, x) in [(0.0, 0.7), (2.0, 3.0), (5.0, 12.0), (10.0, 40.0)] {
            let w = bessel_i_scaled(nu, x).unwrap() * bessel_k_scaled(nu + 1.0, x).unwrap()
                + bessel_i_scaled(nu + 1.0, x).unwrap() * bessel_k_scaled(nu, x).unwrap();
            assert!(rel(w, 1.0 / x) < 1e-12, "ν = {nu}, x = {x}");
        }
    }
}
