//! Lower bound with receive-antenna correlation.

use std::f64::consts::{LN_2, PI};

use crate::analytic::sic::distance_averaged;
use crate::analytic::{inner_config, AnalyticValue, ErrorSlot, Method};
use crate::config::{NetworkConfig, PathLoss};
use crate::error::{ensure, Error, Result};
use crate::quadrature::{integrate_semi_infinite, QuadratureConfig};
use crate::special::{sinc, EULER_GAMMA};

fn check_eigenvalues(mu: &[f64]) -> Result<()> {
    ensure(!mu.is_empty(), "at least one eigenvalue")?;
    if let Some(bad) = mu.iter().find(|m| !(m.is_finite() && **m > 0.0)) {
        return Err(Error::NonPsdCorrelation(format!("eigenvalue {bad} is not positive")));
    }
    ensure(mu.windows(2).all(|w| w[0] >= w[1]), "eigenvalues sorted descending")
}

/// Lower bound on the sum spectral efficiency for correlation eigenvalues
/// `μ₁ ≥ … ≥ μ_r > 0`: the interference is dominated by exponential marks of
/// mean `μ₁`, the signal gain is `Σ μ_n X_n`.
pub fn corr_sum_se_lower(cfg: &NetworkConfig, eigenvalues: &[f64], quad: &QuadratureConfig) -> Result<AnalyticValue> {
    cfg.validate()?;
    ensure(cfg.pathloss == PathLoss::Unbounded, "unbounded path loss")?;
    check_eigenvalues(eigenvalues)?;
    ensure(eigenvalues.len() <= cfg.n_rx, "rank ≤ N_r")?;
    let inner = inner_config(quad);
    let slot = ErrorSlot::default();
    let inv_snr = cfg.inverse_snr();
    let two_over_alpha = 2.0 / cfg.alpha;
    let mu1 = eigenvalues[0];
    let interference = mu1.powf(two_over_alpha) * cfg.density * PI / sinc(two_over_alpha);
    let hint = interference.powf(-0.5 * cfg.alpha);
    let outer = integrate_semi_infinite(
        |z: f64| {
            let kernel = (-interference * z.powf(two_over_alpha) - z * inv_snr).exp();
            if kernel == 0.0 {
                return 0.0;
            }
            let signal = slot.value(distance_averaged(cfg, &inner, |g| {
                let log_prod: f64 = eigenvalues.iter().map(|m| (m * z * g).ln_1p()).sum();
                -(-log_prod).exp_m1()
            }));
            kernel * signal / z
        },
        hint,
        quad,
    );
    let r = slot.finish(outer)?;
    Ok(AnalyticValue::from_per_link(
        cfg.density,
        r.value / LN_2,
        r.abs_error / LN_2,
        Method::LowerBound,
    ))
}

/// `ln r + (1/r) Σ ln μ_n − γ`, a lower bound on `E[ln Σ μ_n X_n]`.
pub fn corr_log_gain(eigenvalues: &[f64]) -> Result<f64> {
    check_eigenvalues(eigenvalues)?;
    let r = eigenvalues.len() as f64;
    Ok(r.ln() + eigenvalues.iter().map(|m| m.ln()).sum::<f64>() / r - EULER_GAMMA)
}
