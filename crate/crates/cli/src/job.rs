//! Resolved, serializable descriptions of a run and their execution.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use densecap_core::analytic::*;
use densecap_core::scaling::run_sweep;
use densecap_core::simulator::estimate_sum_se;
use densecap_core::{CorrelationSpec, NetworkConfig, QuadratureConfig, Receiver, SweepSpec};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Corr {
    None,
    Exponential { rho: f64 },
}

impl Corr {
    pub fn spec(self, n_rx: usize) -> Result<CorrelationSpec> {
        Ok(match self {
            Corr::None => CorrelationSpec::none(n_rx),
            Corr::Exponential { rho } => CorrelationSpec::exponential(n_rx, rho)?,
        })
    }
}

impl fmt::Display for Corr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Corr::None => f.write_str("none"),
            Corr::Exponential { rho } => write!(f, "exp:{rho}"),
        }
    }
}

impl FromStr for Corr {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s == "none" {
            return Ok(Corr::None);
        }
        let rho = s
            .strip_prefix("exp:")
            .and_then(|r| r.parse::<f64>().ok())
            .ok_or_else(|| format!("expected none or exp:<rho>, got '{s}'"))?;
        Ok(Corr::Exponential { rho })
    }
}

/// `mrc` or `zfsic:<L>`.
pub fn parse_receiver(s: &str) -> std::result::Result<Receiver, String> {
    if s == "mrc" {
        return Ok(Receiver::Mrc);
    }
    s.strip_prefix("zfsic:")
        .and_then(|l| l.parse::<usize>().ok())
        .map(|cancel| Receiver::ZfSic { cancel })
        .ok_or_else(|| format!("expected mrc or zfsic:<L>, got '{s}'"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Expr {
    MrcExact,
    SicExact,
    MrcLower,
    MrcUpper,
    SicLower,
    SicUpper,
    CorrLower,
    BoundedLower,
    SisoClosed,
    OptimalDensity,
    Itlinq,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Job {
    Simulate {
        config: NetworkConfig,
        receiver: Receiver,
        corr: Corr,
        realizations: u64,
        seed: u64,
    },
    Analytic {
        config: NetworkConfig,
        expr: Expr,
        /// ZF-SIC cancellations for `sic_exact`; `N_r − 1` when absent.
        cancel: Option<usize>,
        /// Link distance for the fixed-distance forms.
        distance: Option<f64>,
        corr: Corr,
    },
    Sweep {
        spec: SweepSpec,
    },
}

impl Job {
    pub fn name(&self) -> &'static str {
        match self {
            Job::Simulate { .. } => "simulate",
            Job::Analytic { .. } => "analytic",
            Job::Sweep { .. } => "sweep",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Job::Simulate { seed, .. } => Some(*seed),
            Job::Sweep { spec } => Some(spec.seed),
            Job::Analytic { .. } => None,
        }
    }
}

/// One CSV record. Column order is fixed; `per_link` is appended last.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub lambda: f64,
    pub n_rx: usize,
    pub receiver: String,
    #[serde(rename = "L")]
    pub cancel: usize,
    pub corr: String,
    pub method: String,
    /// Sum SE in bit/s/Hz/m² (density for `optimal_density`, probability for `itlinq`).
    pub value: f64,
    pub stderr: Option<f64>,
    pub abs_err: Option<f64>,
    pub n: Option<u64>,
    pub seed: Option<u64>,
    /// Per-link SE in bit/s/Hz.
    pub per_link: Option<f64>,
}

/// Output of a job: the rows plus failures that did not abort it.
pub struct Outcome {
    pub rows: Vec<Row>,
    pub failures: Vec<String>,
}

fn analytic_row(cfg: &NetworkConfig, receiver: &str, cancel: usize, corr: Corr, v: AnalyticValue) -> Row {
    Row {
        lambda: cfg.density,
        n_rx: cfg.n_rx,
        receiver: receiver.into(),
        cancel,
        corr: corr.to_string(),
        method: v.method.label().into(),
        value: v.value,
        stderr: None,
        abs_err: Some(v.abs_error_estimate),
        n: None,
        seed: None,
        per_link: Some(v.per_link),
    }
}

fn scalar_row(cfg: &NetworkConfig, method: &str, value: f64) -> Row {
    Row {
        lambda: cfg.density,
        n_rx: cfg.n_rx,
        receiver: "mrc".into(),
        cancel: 0,
        corr: "none".into(),
        method: method.into(),
        value,
        stderr: None,
        abs_err: Some(0.0),
        n: None,
        seed: None,
        per_link: None,
    }
}

fn analytic(cfg: &NetworkConfig, expr: Expr, cancel: Option<usize>, distance: Option<f64>, corr: Corr) -> Result<Row> {
    let q = QuadratureConfig::default();
    if corr != Corr::None && expr != Expr::CorrLower {
        return Err(CliError::Usage("--corr only applies to corr_lower".into()));
    }
    let l = cancel.unwrap_or(cfg.n_rx.saturating_sub(1));
    let need_distance = || distance.ok_or_else(|| CliError::Usage("this expression requires --distance".into()));
    let row = match expr {
        Expr::MrcExact => {
            let v = match distance {
                Some(d) => mrc_sum_se_fixed_distance(cfg, d, &q)?,
                None => mrc_sum_se_exact(cfg, &q)?,
            };
            analytic_row(cfg, "mrc", 0, corr, v)
        }
        Expr::SicExact => analytic_row(cfg, "zfsic", l, corr, sic_sum_se_exact(cfg, l, &q)?),
        Expr::MrcLower => analytic_row(cfg, "mrc", 0, corr, mrc_lower_bound(cfg)?),
        Expr::MrcUpper => analytic_row(cfg, "mrc", 0, corr, mrc_upper_bound(cfg)?),
        Expr::SicLower => analytic_row(cfg, "zfsic", cfg.n_rx - 1, corr, sic_lower_bound(cfg)?),
        Expr::SicUpper => analytic_row(cfg, "zfsic", cfg.n_rx - 1, corr, sic_upper_bound(cfg)?),
        Expr::CorrLower => {
            let mu = corr.spec(cfg.n_rx)?.eigenvalues()?;
            analytic_row(cfg, "mrc", 0, corr, corr_sum_se_lower(cfg, &mu, &q)?)
        }
        Expr::BoundedLower => analytic_row(cfg, "mrc", 0, corr, bounded_pl_lower_bound(cfg)?),
        Expr::SisoClosed => {
            let d = distance.unwrap_or(1.0 / (cfg.density * PI).sqrt());
            let per_link = mrc_closed_form_siso(cfg.density, d);
            Row {
                per_link: Some(per_link),
                ..scalar_row(cfg, "closed_form", cfg.density * per_link)
            }
        }
        Expr::OptimalDensity => scalar_row(cfg, "closed_form", optimal_density(cfg.n_rx, cfg.alpha, cfg.comm_range)),
        Expr::Itlinq => {
            let d = need_distance()?;
            let p = itlinq_probability(cfg.density, cfg.tx_power_mw, cfg.noise_power_mw, cfg.n_rx, cfg.alpha, d);
            scalar_row(cfg, "closed_form", p)
        }
    };
    Ok(row)
}

pub fn execute(job: &Job) -> Result<Outcome> {
    match job {
        Job::Simulate {
            config,
            receiver,
            corr,
            realizations,
            seed,
        } => {
            let e = estimate_sum_se(config, *receiver, &corr.spec(config.n_rx)?, *realizations, *seed)?;
            let mut failures = Vec::new();
            if e.flagged {
                failures.push(format!(
                    "{} infinite-SINR and {} window-exhausted realizations (estimate flagged)",
                    e.infinite_sinr, e.window_exhausted
                ));
            }
            let row = Row {
                lambda: config.density,
                n_rx: config.n_rx,
                receiver: receiver.label().into(),
                cancel: receiver.cancelled(),
                corr: corr.to_string(),
                method: "mc".into(),
                value: e.sum_se,
                stderr: Some(e.sum_stderr()),
                abs_err: None,
                n: Some(e.n_realizations),
                seed: Some(*seed),
                per_link: Some(e.per_link_se),
            };
            Ok(Outcome { rows: vec![row], failures })
        }
        Job::Analytic {
            config,
            expr,
            cancel,
            distance,
            corr,
        } => Ok(Outcome {
            rows: vec![analytic(config, *expr, *cancel, *distance, *corr)?],
            failures: Vec::new(),
        }),
        Job::Sweep { spec } => {
            let result = run_sweep(spec)?;
            let mut rows = Vec::new();
            let mut failures = Vec::new();
            for r in result.rows {
                if let Some(e) = r.error {
                    failures.push(format!("λ = {:e}, N_r = {}, {}: {e}", r.lambda, r.n_rx, r.method));
                    continue;
                }
                let mc = r.method == densecap_core::SweepMethod::Mc;
                rows.push(Row {
                    lambda: r.lambda,
                    n_rx: r.n_rx,
                    receiver: spec.receiver.at(r.n_rx).label().into(),
                    cancel: r.cancel,
                    corr: "none".into(),
                    method: r.method.label().into(),
                    value: r.value,
                    stderr: r.stderr,
                    abs_err: r.abs_err,
                    n: r.n,
                    seed: mc.then_some(result.seed),
                    per_link: Some(r.per_link),
                });
            }
            Ok(Outcome { rows, failures })
        }
    }
}
