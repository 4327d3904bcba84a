//! Bounded path loss `min(1, r^{-α})`.

use std::f64::consts::{LN_2, PI};

use crate::analytic::{AnalyticValue, Method};
use crate::config::{NetworkConfig, PathLoss};
use crate::error::{ensure, Result};

/// Campbell mean of the interference with unit-mean marks:
/// `2πλ(1/2 + 1/(α − 2))`.
pub fn campbell_mean_bounded(lambda: f64, alpha: f64) -> f64 {
    2.0 * PI * lambda * (0.5 + 1.0 / (alpha - 2.0))
}

/// `λ log₂(1 + (N_r − 1) e^{α/(2R_d²) − α/2} / (2πλ(1/2 + 1/(α−2))))`.
pub fn bounded_pl_lower_bound(cfg: &NetworkConfig) -> Result<AnalyticValue> {
    cfg.validate()?;
    ensure(cfg.pathloss == PathLoss::Bounded, "bounded path loss")?;
    ensure(cfg.is_interference_limited(), "interference-limited operation (σ² = 0)")?;
    let a = cfg.alpha;
    let n = cfg.n_rx as f64;
    let r2 = cfg.comm_range * cfg.comm_range;
    let sir = (n - 1.0) * (a / (2.0 * r2) - 0.5 * a).exp() / campbell_mean_bounded(cfg.density, a);
    Ok(AnalyticValue::from_per_link(cfg.density, sir.ln_1p() / LN_2, 0.0, Method::LowerBound))
}
