//! Density sweeps with `N_r = ceil(c λ^β)` antennas and fits of the resulting
//! scaling behaviour.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analytic::{mrc_lower_bound, mrc_sum_se_exact, mrc_upper_bound, sic_lower_bound, sic_sum_se_exact, sic_upper_bound};
use crate::channel::CorrelationSpec;
use crate::config::NetworkConfig;
use crate::error::{ensure, Error, Result};
use crate::quadrature::QuadratureConfig;
use crate::simulator::{estimate_sum_se, Receiver};
use crate::stats::{linear_fit, LinearFit};

/// Antenna counts are capped here to keep quadrature and Monte Carlo tractable.
pub const MAX_ANTENNAS: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepReceiver {
    Mrc,
    /// ZF-SIC cancelling `N_r − 1` interferers.
    ZfSic,
}

impl SweepReceiver {
    pub fn at(self, n_rx: usize) -> Receiver {
        match self {
            SweepReceiver::Mrc => Receiver::Mrc,
            SweepReceiver::ZfSic => Receiver::ZfSic { cancel: n_rx.saturating_sub(1) },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMethod {
    Mc,
    Exact,
    Lower,
    Upper,
}

impl SweepMethod {
    pub fn label(self) -> &'static str {
        match self {
            SweepMethod::Mc => "mc",
            SweepMethod::Exact => "exact",
            SweepMethod::Lower => "lower",
            SweepMethod::Upper => "upper",
        }
    }

    pub fn is_bound(self) -> bool {
        matches!(self, SweepMethod::Lower | SweepMethod::Upper)
    }
}

impl fmt::Display for SweepMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl std::str::FromStr for SweepMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mc" => Ok(SweepMethod::Mc),
            "exact" => Ok(SweepMethod::Exact),
            "lower" => Ok(SweepMethod::Lower),
            "upper" => Ok(SweepMethod::Upper),
            other => Err(Error::invalid(format!("unknown sweep method '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    /// Strictly increasing densities (links/m²).
    pub lambda_grid: Vec<f64>,
    pub c: f64,
    pub beta: f64,
    pub receiver: SweepReceiver,
    pub methods: Vec<SweepMethod>,
    pub base: NetworkConfig,
    /// Monte Carlo budget per grid point (used by [`SweepMethod::Mc`]).
    pub realizations: u64,
    pub seed: u64,
    pub quad: QuadratureConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub lambda: f64,
    pub n_rx: usize,
    pub receiver: SweepReceiver,
    /// Interferers cancelled (ZF-SIC) or zero.
    pub cancel: usize,
    pub method: SweepMethod,
    /// Sum spectral efficiency, bit/s/Hz/m²; NaN when `error` is set.
    pub value: f64,
    /// Per-link spectral efficiency, bit/s/Hz.
    pub per_link: f64,
    /// Monte Carlo standard error of `value`.
    pub stderr: Option<f64>,
    /// Quadrature error estimate of `value`.
    pub abs_err: Option<f64>,
    pub n: Option<u64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub seed: u64,
    pub config_hash: String,
    /// True when the sweep ran with σ² = 0.
    pub interference_limited: bool,
}

/// `n` densities spaced geometrically from `min` to `max` inclusive.
pub fn geometric_grid(min: f64, max: f64, n: usize) -> Result<Vec<f64>> {
    ensure(n >= 2, "at least two grid points")?;
    ensure(min > 0.0 && max > min && max.is_finite(), "0 < λ_min < λ_max")?;
    let (a, b) = (min.ln(), max.ln());
    Ok((0..n)
        .map(|i| {
            if i == 0 {
                min
            } else if i == n - 1 {
                max
            } else {
                (a + (b - a) * i as f64 / (n - 1) as f64).exp()
            }
        })
        .collect())
}

/// `ceil(c λ^β)`, at least one and at most [`MAX_ANTENNAS`].
pub fn antenna_count(c: f64, beta: f64, lambda: f64) -> usize {
    let raw = (c * lambda.powf(beta)).ceil();
    if raw.is_nan() || raw < 1.0 {
        1
    } else {
        (raw as usize).min(MAX_ANTENNAS)
    }
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        ensure(self.lambda_grid.len() >= 2, "a λ grid of at least two points")?;
        ensure(
            self.lambda_grid.windows(2).all(|w| w[0] < w[1]) && self.lambda_grid[0] > 0.0,
            "a strictly increasing positive λ grid",
        )?;
        ensure(self.c > 0.0 && self.c.is_finite(), "antenna constant c > 0")?;
        ensure(self.beta >= 0.0 && self.beta.is_finite(), "antenna exponent β ≥ 0")?;
        ensure(!self.methods.is_empty(), "at least one method")?;
        self.quad.validate()?;
        self.base.validate()
    }

    /// σ² is forced to zero when any bound is requested so that every row of
    /// the sweep describes the same network.
    pub fn interference_limited(&self) -> bool {
        self.base.is_interference_limited() || self.methods.iter().any(|m| m.is_bound())
    }

    fn config_at(&self, lambda: f64) -> NetworkConfig {
        let mut cfg = self.base.with_density(lambda);
        cfg.n_rx = antenna_count(self.c, self.beta, lambda);
        if self.interference_limited() {
            cfg.noise_power_mw = 0.0;
        }
        cfg
    }

    /// FNV-1a digest of the full specification.
    pub fn config_hash(&self) -> String {
        let text = format!("{self:?}");
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in text.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
        format!("{h:016x}")
    }
}

fn evaluate(spec: &SweepSpec, lambda: f64, method: SweepMethod) -> SweepRow {
    let cfg = spec.config_at(lambda);
    let n_rx = cfg.n_rx;
    let cancel = spec.receiver.at(n_rx).cancelled();
    let mut row = SweepRow {
        lambda,
        n_rx,
        receiver: spec.receiver,
        cancel,
        method,
        value: f64::NAN,
        per_link: f64::NAN,
        stderr: None,
        abs_err: None,
        n: None,
        error: None,
    };
    let analytic = |f: &dyn Fn() -> Result<crate::AnalyticValue>| f();
    let outcome = match method {
        SweepMethod::Mc => {
            estimate_sum_se(&cfg, spec.receiver.at(n_rx), &CorrelationSpec::none(n_rx), spec.realizations, spec.seed)
                .map(|e| {
                    row.stderr = Some(e.sum_stderr());
                    row.n = Some(e.n_realizations);
                    (e.sum_se, e.per_link_se)
                })
        }
        _ => analytic(&|| match (spec.receiver, method, cancel) {
            (SweepReceiver::Mrc, SweepMethod::Exact, _) => mrc_sum_se_exact(&cfg, &spec.quad),
            (SweepReceiver::Mrc, SweepMethod::Lower, _) => mrc_lower_bound(&cfg),
            (SweepReceiver::Mrc, SweepMethod::Upper, _) => mrc_upper_bound(&cfg),
            // nothing to cancel with a single antenna: ZF-SIC is MRC
            (SweepReceiver::ZfSic, SweepMethod::Exact, 0) => mrc_sum_se_exact(&cfg, &spec.quad),
            (SweepReceiver::ZfSic, SweepMethod::Exact, l) => sic_sum_se_exact(&cfg, l, &spec.quad),
            (SweepReceiver::ZfSic, SweepMethod::Lower, _) => sic_lower_bound(&cfg),
            (SweepReceiver::ZfSic, SweepMethod::Upper, _) => sic_upper_bound(&cfg),
            (_, SweepMethod::Mc, _) => unreachable!("handled above"),
        })
        .map(|v| {
            row.abs_err = Some(v.abs_error_estimate);
            (v.value, v.per_link)
        }),
    };
    match outcome {
        Ok((value, per_link)) => {
            row.value = value;
            row.per_link = per_link;
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// Evaluates every method at every grid point. Failures are recorded in the
/// row's `error` field and do not abort the sweep.
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    if spec.methods.contains(&SweepMethod::Mc) {
        ensure(spec.realizations >= crate::simulator::MIN_REALIZATIONS, "at least 100 realizations for mc")?;
    }
    let jobs: Vec<(f64, SweepMethod)> = spec
        .lambda_grid
        .iter()
        .flat_map(|&l| spec.methods.iter().map(move |&m| (l, m)))
        .collect();
    let rows = jobs.into_par_iter().map(|(l, m)| evaluate(spec, l, m)).collect();
    Ok(SweepResult {
        rows,
        seed: spec.seed,
        config_hash: spec.config_hash(),
        interference_limited: spec.interference_limited(),
    })
}

/// Least-squares fit over the asymptotic window (top half of the grid in ln λ).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WindowFit {
    pub fit: LinearFit,
    /// Densities used, ascending.
    pub window: Vec<f64>,
    pub residuals: Vec<f64>,
}

fn window_rows(result: &SweepResult, method: SweepMethod) -> Result<Vec<&SweepRow>> {
    let mut rows: Vec<&SweepRow> = result
        .rows
        .iter()
        .filter(|r| r.method == method && r.error.is_none() && r.per_link.is_finite())
        .collect();
    rows.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
    if rows.is_empty() {
        return Err(Error::InsufficientData(format!("no usable '{method}' rows")));
    }
    let lo = rows[0].lambda.ln();
    let hi = rows[rows.len() - 1].lambda.ln();
    let mid = 0.5 * (lo + hi);
    let window: Vec<&SweepRow> = rows.into_iter().filter(|r| r.lambda.ln() >= mid - 1e-12).collect();
    if window.len() < 4 {
        return Err(Error::InsufficientData(format!(
            "{} points in the asymptotic window, need at least 4",
            window.len()
        )));
    }
    Ok(window)
}

fn fit_window(rows: &[&SweepRow], y: Vec<f64>) -> Result<WindowFit> {
    let x: Vec<f64> = rows.iter().map(|r| r.lambda.ln()).collect();
    let fit = linear_fit(&x, &y)?;
    let residuals = x.iter().zip(&y).map(|(xi, yi)| yi - (fit.intercept + fit.slope * xi)).collect();
    Ok(WindowFit {
        fit,
        window: rows.iter().map(|r| r.lambda).collect(),
        residuals,
    })
}

/// Slope of `ln(per-link SE)` against `ln λ` in the asymptotic window.
pub fn fit_asymptotic_exponent(result: &SweepResult, method: SweepMethod) -> Result<WindowFit> {
    let rows = window_rows(result, method)?;
    if let Some(bad) = rows.iter().find(|r| r.per_link <= 0.0) {
        return Err(Error::InsufficientData(format!(
            "non-positive per-link value at λ = {:e}",
            bad.lambda
        )));
    }
    // measured relative to the first point so constant data fits a slope of exactly zero
    let y0 = rows[0].per_link;
    let y = rows.iter().map(|r| (r.per_link / y0).ln()).collect();
    fit_window(&rows, y)
}

/// Slope of the per-link SE (bits) against `ln λ` in the asymptotic window;
/// linear growth indicates logarithmic scaling.
pub fn fit_log_growth(result: &SweepResult, method: SweepMethod) -> Result<WindowFit> {
    let rows = window_rows(result, method)?;
    let y = rows.iter().map(|r| r.per_link).collect();
    fit_window(&rows, y)
}

/// Spread `(max − min) / min` of the per-link value over
/// `[λ_max / 10^decades, λ_max]`.
pub fn relative_spread(result: &SweepResult, method: SweepMethod, decades: f64) -> Result<f64> {
    let values: Vec<&SweepRow> = result
        .rows
        .iter()
        .filter(|r| r.method == method && r.error.is_none())
        .collect();
    let top = values
        .iter()
        .map(|r| r.lambda)
        .fold(f64::NEG_INFINITY, f64::max);
    let lo = top / 10f64.powf(decades) * (1.0 - 1e-12);
    let chosen: Vec<f64> = values.iter().filter(|r| r.lambda >= lo).map(|r| r.per_link).collect();
    if chosen.len() < 2 {
        return Err(Error::InsufficientData("fewer than two points in range".into()));
    }
    let min = chosen.iter().copied().fold(f64::INFINITY, f64::min);
    let max = chosen.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((max - min) / min)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(lambda: f64, per_link: f64) -> SweepRow {
        SweepRow {
            lambda,
            n_rx: 1,
            receiver: SweepReceiver::Mrc,
            cancel: 0,
            method: SweepMethod::Exact,
            value: lambda * per_link,
            per_link,
            stderr: None,
            abs_err: None,
            n: None,
            error: None,
        }
    }

    fn result(rows: Vec<SweepRow>) -> SweepResult {
        SweepResult {
            rows,
            seed: 0,
            config_hash: String::new(),
            interference_limited: true,
        }
    }

    #[test]
    fn grid_endpoints() {
        let g = geometric_grid(1e-4, 1e-2, 5).unwrap();
        assert_eq!(g[0], 1e-4);
        assert_eq!(g[4], 1e-2);
        assert!((g[2] - 1e-3).abs() < 1e-15);
        assert!(geometric_grid(1e-2, 1e-4, 5).is_err());
        assert!(geometric_grid(1e-4, 1e-2, 1).is_err());
    }

    #[test]
    fn antenna_rounding() {
        assert_eq!(antenna_count(1.0, 0.0, 1e-3), 1);
        assert_eq!(antenna_count(2.5, 0.0, 1e-3), 3);
        assert_eq!(antenna_count(1e-9, 1.0, 1e-3), 1);
        assert_eq!(antenna_count(1e9, 1.0, 1.0), MAX_ANTENNAS);
    }

    #[test]
    fn constant_data_slope_is_zero() {
        let g = geometric_grid(1e-4, 1e-1, 8).unwrap();
        let r = result(g.iter().map(|&l| row(l, 3.7)).collect());
        let fit = fit_asymptotic_exponent(&r, SweepMethod::Exact).unwrap();
        assert_eq!(fit.fit.slope, 0.0);
        assert_eq!(fit.window.len(), 4);
    }

    #[test]
    fn power_law_slope_recovered() {
        let g = geometric_grid(1e-4, 1e-1, 10).unwrap();
        let r = result(g.iter().map(|&l| row(l, 5.0 * l.powf(-2.0))).collect());
        let fit = fit_asymptotic_exponent(&r, SweepMethod::Exact).unwrap();
        assert!((fit.fit.slope + 2.0).abs() < 1e-10);
    }

    #[test]
    fn too_few_points() {
        let g = geometric_grid(1e-4, 1e-1, 5).unwrap();
        let r = result(g.iter().map(|&l| row(l, 1.0)).collect());
        assert!(matches!(fit_asymptotic_exponent(&r, SweepMethod::Exact), Err(Error::InsufficientData(_))));
    }
}
