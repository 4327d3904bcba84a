//! Zero-forcing successive interference cancellation with local CSIR.

use std::f64::consts::{LN_2, PI};

use crate::analytic::kernels::{one_minus_inv_pow, sic_laplace_normalized, TailIntegral};
use crate::analytic::{inner_config, AnalyticValue, ErrorSlot, Method};
use crate::config::{NetworkConfig, PathLoss};
use crate::error::{ensure, Result};
use crate::quadrature::{integrate, integrate_semi_infinite, QuadratureConfig};
use crate::special::{gamma, ln_gamma};

/// `E_x[1 − (1 + z x^{-α})^{-N_r}]` under the annulus distance law,
/// integrated in `ln x²`.
pub(crate) fn distance_averaged<F>(cfg: &NetworkConfig, quad: &QuadratureConfig, signal: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let r2 = cfg.comm_range * cfg.comm_range;
    let top = r2.ln();
    let r = integrate(|v: f64| signal((-0.5 * cfg.alpha * v).exp()) * v.exp(), 0.0, top, quad)?;
    Ok(r.value / (r2 - 1.0))
}

/// Sum spectral efficiency with ZF-SIC of the `L` nearest interferers.
///
/// Integrated over `z` outermost; the distance average of the signal term and
/// the residual-interference transform are independent inner integrals.
pub fn sic_sum_se_exact(cfg: &NetworkConfig, l: usize, quad: &QuadratureConfig) -> Result<AnalyticValue> {
    cfg.validate()?;
    ensure(cfg.pathloss == PathLoss::Unbounded, "unbounded path loss")?;
    ensure(l >= 1 && l < cfg.n_rx, "1 ≤ L ≤ N_r − 1")?;
    let tail = TailIntegral::new(cfg.alpha)?;
    tail.cross_check()?;
    let inner = inner_config(quad);
    let slot = ErrorSlot::default();
    let n = cfg.n_rx as f64;
    let inv_snr = cfg.inverse_snr();
    let lp = cfg.density * PI;
    let two_over_alpha = 2.0 / cfg.alpha;
    // scale where the residual interference becomes O(1): s = λπ z^{2/α} ~ 1
    let hint = lp.powf(-0.5 * cfg.alpha);
    let outer = integrate_semi_infinite(
        |z: f64| {
            let noise = (-z * inv_snr).exp();
            if noise == 0.0 {
                return 0.0;
            }
            let signal = slot.value(distance_averaged(cfg, &inner, |g| one_minus_inv_pow(z * g, n)));
            if signal == 0.0 {
                return 0.0;
            }
            let s = lp * z.powf(two_over_alpha);
            let li = slot.value(sic_laplace_normalized(&tail, l, s, &inner));
            noise * signal * li / z
        },
        hint,
        quad,
    );
    let r = slot.finish(outer)?;
    Ok(AnalyticValue::from_per_link(
        cfg.density,
        r.value / LN_2,
        r.abs_error / LN_2,
        Method::ExactIntegral,
    ))
}

fn check_bound_cfg(cfg: &NetworkConfig) -> Result<()> {
    cfg.validate()?;
    ensure(cfg.pathloss == PathLoss::Unbounded, "unbounded path loss")?;
    ensure(cfg.is_interference_limited(), "interference-limited operation (σ² = 0)")
}

/// Lower bound with `L = N_r − 1`:
/// `λ log₂(1 + ((α−2)(α+2)/2^{α/2+1}) (N_r−1)(N_r−1−α/2)^{α/2−1} / (λπR_d²)^{α/2})`.
pub fn sic_lower_bound(cfg: &NetworkConfig) -> Result<AnalyticValue> {
    check_bound_cfg(cfg)?;
    let a = cfg.alpha;
    let p = 0.5 * a;
    let m = cfg.n_rx as f64 - 1.0;
    ensure(m > p, "N_r − 1 > α/2")?;
    let r2 = cfg.comm_range * cfg.comm_range;
    let sir = (a - 2.0) * (a + 2.0) / 2f64.powf(p + 1.0) * m * (m - p).powf(p - 1.0)
        / (cfg.density * PI * r2).powf(p);
    Ok(AnalyticValue::from_per_link(cfg.density, sir.ln_1p() / LN_2, 0.0, Method::LowerBound))
}

/// Upper bound with `L = N_r − 1`:
/// `λ log₂(1 + (α/2^{α/2+1}) ((N_r−1)/(πλ))^{α/2} (N_r/(N_r−1)) · 2(1 − R_d^{2−α})/((α−2)(R_d²−1)))`.
pub fn sic_upper_bound(cfg: &NetworkConfig) -> Result<AnalyticValue> {
    check_bound_cfg(cfg)?;
    ensure(cfg.n_rx >= 2, "N_r ≥ 2")?;
    let a = cfg.alpha;
    let p = 0.5 * a;
    let n = cfg.n_rx as f64;
    let m = n - 1.0;
    let rd = cfg.comm_range;
    let geometry = 2.0 * (1.0 - rd.powf(2.0 - a)) / ((a - 2.0) * (rd * rd - 1.0));
    let sir = a / 2f64.powf(p + 1.0) * (m / (PI * cfg.density)).powf(p) * (n / m) * geometry;
    Ok(AnalyticValue::from_per_link(cfg.density, sir.ln_1p() / LN_2, 0.0, Method::UpperBound))
}

/// Averaged residual interference power as used by the lower bound:
/// `(2πλ)^{α/2} Γ(1 − α/2 + L) / ((α − 2) Γ(L))`, for `L > α/2 − 1`.
///
/// This exceeds the true mean ([`sic_interference_mean_exact`]) by the factor
/// `2^{α/2−1}`.
pub fn sic_interference_mean(lambda: f64, alpha: f64, l: usize) -> Result<f64> {
    let lf = l as f64;
    ensure(lf > 0.5 * alpha - 1.0, "L > α/2 − 1")?;
    Ok((2.0 * PI * lambda).powf(0.5 * alpha) * gamma_ratio(lf + 1.0 - 0.5 * alpha, lf) / (alpha - 2.0))
}

/// Mean residual interference after removing the `L` nearest interferers:
/// `2(λπ)^{α/2} Γ(L + 1 − α/2) / ((α − 2) Γ(L))`.
pub fn sic_interference_mean_exact(lambda: f64, alpha: f64, l: usize) -> Result<f64> {
    let lf = l as f64;
    ensure(lf > 0.5 * alpha - 1.0, "L > α/2 − 1")?;
    Ok(2.0 * (PI * lambda).powf(0.5 * alpha) * gamma_ratio(lf + 1.0 - 0.5 * alpha, lf) / (alpha - 2.0))
}

/// `Γ(a) / Γ(b)`.
pub fn gamma_ratio(a: f64, b: f64) -> f64 {
    if a < 150.0 && b < 150.0 && a > 0.0 && b > 0.0 {
        gamma(a) / gamma(b)
    } else {
        (ln_gamma(a) - ln_gamma(b)).exp()
    }
}
