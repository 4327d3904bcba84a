//! Maximum ratio combining with direct CSIR.

use std::f64::consts::{LN_2, PI};

use crate::analytic::kernels::one_minus_inv_pow;
use crate::analytic::{inner_config, AnalyticValue, ErrorSlot, Method};
use crate::config::NetworkConfig;
use crate::error::{ensure, Result};
use crate::quadrature::{integrate, integrate_semi_infinite, Integral, QuadratureConfig};
use crate::special::{gamma, sici_aux_g, sinc};

fn check_unbounded(cfg: &NetworkConfig) -> Result<()> {
    cfg.validate()?;
    ensure(
        cfg.pathloss == crate::config::PathLoss::Unbounded,
        "unbounded path loss",
    )
}

/// Per-link ergodic spectral efficiency (bits) of a link of length `d`.
///
/// Evaluated in `u = (λπd² / sinc(2/α)) z^{2/α}`, which makes the interference
/// kernel `e^{-u}`; the integral over `(0, ∞)` is then taken in `ln u`.
pub fn mrc_per_link_at_distance(cfg: &NetworkConfig, d: f64, quad: &QuadratureConfig) -> Result<Integral> {
    ensure(d.is_finite() && d > 0.0, "link distance d > 0")?;
    let p = 0.5 * cfg.alpha;
    let sn = sinc(2.0 / cfg.alpha);
    let n = cfg.n_rx as f64;
    let inv_snr = cfg.inverse_snr();
    let lp = cfg.density * PI;
    let noise_scale = (sn / lp).powf(p) * inv_snr;
    let signal_scale = (sn / (lp * d * d)).powf(p);
    let r = integrate_semi_infinite(
        |u: f64| {
            let up = u.powf(p);
            let kernel = (-u - noise_scale * up).exp();
            kernel / u * one_minus_inv_pow(signal_scale * up, n)
        },
        1.0,
        quad,
    )?;
    let scale = p / LN_2;
    Ok(Integral {
        value: scale * r.value,
        abs_error: scale * r.abs_error,
        ..r
    })
}

/// Sum spectral efficiency with every link pinned to distance `d`.
pub fn mrc_sum_se_fixed_distance(cfg: &NetworkConfig, d: f64, quad: &QuadratureConfig) -> Result<AnalyticValue> {
    check_unbounded(cfg)?;
    let r = mrc_per_link_at_distance(cfg, d, quad)?;
    Ok(AnalyticValue::from_per_link(cfg.density, r.value, r.abs_error, Method::ExactIntegral))
}

/// Sum spectral efficiency with MRC: the per-link value averaged over the
/// annulus distance law `2r/(R_d² − 1)` and scaled by λ.
pub fn mrc_sum_se_exact(cfg: &NetworkConfig, quad: &QuadratureConfig) -> Result<AnalyticValue> {
    check_unbounded(cfg)?;
    let inner = inner_config(quad);
    let slot = ErrorSlot::default();
    let r2 = cfg.comm_range * cfg.comm_range;
    let norm = 2.0 / (r2 - 1.0);
    let outer = integrate(
        |r: f64| slot.value(mrc_per_link_at_distance(cfg, r, &inner).map(|i| i.value)) * norm * r,
        1.0,
        cfg.comm_range,
        quad,
    );
    let r = slot.finish(outer)?;
    Ok(AnalyticValue::from_per_link(cfg.density, r.value, r.abs_error, Method::ExactIntegral))
}

/// `(2/ln 2) [sin w (π/2 − Si w) − cos w Ci w]`, bits per link.
fn siso_form(w: f64) -> f64 {
    2.0 / LN_2 * sici_aux_g(w)
}

/// Per-link spectral efficiency for `N_r = 1`, α = 4, no noise, fixed `d`:
/// closed form in the sine and cosine integrals with `w = λπ²d²/2`.
pub fn mrc_closed_form_siso(lambda: f64, d: f64) -> f64 {
    siso_form(lambda * PI * PI * d * d / 2.0)
}

/// Multi-antenna approximation of the α = 4 fixed-distance value: the SISO
/// closed form with `w = λπ²d² / (2√N_r)`.
pub fn mrc_approx_multiantenna(lambda: f64, d: f64, n_rx: usize) -> f64 {
    siso_form(lambda * PI * PI * d * d / (2.0 * (n_rx as f64).sqrt()))
}

fn check_interference_limited(cfg: &NetworkConfig) -> Result<()> {
    check_unbounded(cfg)?;
    ensure(cfg.is_interference_limited(), "interference-limited operation (σ² = 0)")
}

/// Lower bound `λ(2/α) log₂(1 + (2 sinc(2/α))^{α/2} (N_r − 1) / (λπ(R_d² + 1))^{α/2})`.
/// Zero for a single antenna.
pub fn mrc_lower_bound(cfg: &NetworkConfig) -> Result<AnalyticValue> {
    check_interference_limited(cfg)?;
    let a = cfg.alpha;
    let p = 0.5 * a;
    let n = cfg.n_rx as f64;
    let r2 = cfg.comm_range * cfg.comm_range;
    let sir = (2.0 * sinc(2.0 / a)).powf(p) * (n - 1.0) / (cfg.density * PI * (r2 + 1.0)).powf(p);
    let per_link = 2.0 / a * sir.ln_1p() / LN_2;
    Ok(AnalyticValue::from_per_link(cfg.density, per_link, 0.0, Method::LowerBound))
}

/// Upper bound from Jensen and the negative moment of the interference.
pub fn mrc_upper_bound(cfg: &NetworkConfig) -> Result<AnalyticValue> {
    check_interference_limited(cfg)?;
    let a = cfg.alpha;
    let p = 0.5 * a;
    let n = cfg.n_rx as f64;
    let rd = cfg.comm_range;
    let r2 = rd * rd;
    let geometry = 2.0 * (rd.powf(a) - r2) / ((a - 2.0) * (r2 - 1.0));
    let sir = geometry * gamma(1.0 + p) * sinc(2.0 / a).powf(p) * n / (cfg.density * PI * r2).powf(p);
    let per_link = sir.ln_1p() / LN_2;
    Ok(AnalyticValue::from_per_link(cfg.density, per_link, 0.0, Method::UpperBound))
}

/// `E[1/I] = Γ(1 + α/2) sinc(2/α)^{α/2} / (λπ)^{α/2}`.
pub fn interference_negative_moment(lambda: f64, alpha: f64) -> f64 {
    let p = 0.5 * alpha;
    gamma(1.0 + p) * sinc(2.0 / alpha).powf(p) / (lambda * PI).powf(p)
}

/// High-SIR maximizer of the lower bound over λ:
/// `2 sinc(2/α)(N_r − 1)^{2/α} / (π(1 + R_d²))`.
pub fn optimal_density(n_rx: usize, alpha: f64, comm_range: f64) -> f64 {
    2.0 * sinc(2.0 / alpha) * ((n_rx as f64) - 1.0).powf(2.0 / alpha)
        / (PI * (1.0 + comm_range * comm_range))
}

/// Probability that a link of length `d` satisfies the ITLinQ condition:
/// `exp(−λπ (P/(σ² N_r))^{1/α} d)`.
pub fn itlinq_probability(lambda: f64, tx_power: f64, noise_power: f64, n_rx: usize, alpha: f64, d: f64) -> f64 {
    (-lambda * PI * (tx_power / (noise_power * n_rx as f64)).powf(1.0 / alpha) * d).exp()
}
