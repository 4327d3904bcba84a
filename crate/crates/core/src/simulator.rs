//! Monte Carlo estimation of the ergodic sum spectral efficiency and of the
//! interference statistics used to cross-check the analytic module.
//!
//! Realization `i` draws, from stream `(seed, i)` and in this order: the link
//! distance, the interferer count and radii, the direct fading vector and one
//! fading vector per interferer (nearest first). MRC and ZF-SIC therefore see
//! identical randomness, and ZF-SIC with `L = 0` reproduces MRC bit for bit.

use std::f64::consts::LN_2;

use rand::Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{CorrelationSpec, GainSampler};
use crate::config::{NetworkConfig, PathLoss};
use crate::error::{ensure, Error, Result};
use crate::geometry::{link_distance_quantile, sample_interferer_distances};
use crate::rng::{stream, Stream};
use crate::stats::{merge_tree, Moments};

/// Realizations per reduction chunk. Fixed so that results do not depend on
/// the number of worker threads.
pub const CHUNK: u64 = 1 << 14;

/// Fraction of degenerate realizations above which an estimate is flagged.
pub const FLAG_FRACTION: f64 = 1e-3;

pub const MIN_REALIZATIONS: u64 = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Receiver {
    Mrc,
    /// Zero-forcing SIC of the `cancel` nearest interferers.
    ZfSic { cancel: usize },
}

impl Receiver {
    pub fn cancelled(self) -> usize {
        match self {
            Receiver::Mrc => 0,
            Receiver::ZfSic { cancel } => cancel,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Receiver::Mrc => "mrc",
            Receiver::ZfSic { .. } => "zfsic",
        }
    }

    fn check(self, cfg: &NetworkConfig, corr: &CorrelationSpec) -> Result<()> {
        ensure(corr.n_rx == cfg.n_rx, "correlation spec sized for N_r antennas")?;
        corr.validate()?;
        if let Receiver::ZfSic { cancel } = self {
            if !corr.is_uncorrelated() {
                return Err(Error::Unsupported("ZF-SIC with correlated fading".into()));
            }
            if cancel >= cfg.n_rx {
                return Err(Error::invalid(format!(
                    "ZF-SIC cancels at most N_r - 1 = {} interferers, got L = {cancel}",
                    cfg.n_rx - 1
                )));
            }
        }
        Ok(())
    }
}

/// Monte Carlo estimate of the sum spectral efficiency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeEstimate {
    /// bit/s/Hz/m²
    pub sum_se: f64,
    /// bit/s/Hz per link; `sum_se = density · per_link_se`.
    pub per_link_se: f64,
    /// Standard error of `per_link_se`.
    pub stderr: f64,
    /// Realizations entering the mean.
    pub n_realizations: u64,
    pub seed: u64,
    pub receiver: Receiver,
    /// Realizations whose SINR was infinite (excluded from the mean).
    pub infinite_sinr: u64,
    /// Realizations in which SIC removed every interferer inside the window.
    pub window_exhausted: u64,
    /// True when `infinite_sinr + window_exhausted` exceeds 0.1% of the draws.
    pub flagged: bool,
    /// Interference added per realization for the field beyond `sim_radius`.
    pub far_field_interference: f64,
}

impl SeEstimate {
    /// Standard error of `sum_se`.
    pub fn sum_stderr(&self) -> f64 {
        self.stderr * self.sum_se / self.per_link_se.max(f64::MIN_POSITIVE)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct SimOptions {
    /// Stratify the link distance over realizations (off by default).
    pub stratify_distance: bool,
    /// Pin the direct link to this distance instead of sampling it.
    pub fixed_distance: Option<f64>,
}

/// Reusable per-worker state for drawing realizations.
struct Workspace {
    sampler: GainSampler,
    distances: Vec<f64>,
}

enum Draw {
    Finite(f64),
    Infinite,
}

struct Realization {
    sinr: Draw,
    window_exhausted: bool,
}

impl Workspace {
    fn new(corr: &CorrelationSpec) -> Result<Self> {
        Ok(Workspace {
            sampler: GainSampler::new(corr)?,
            distances: Vec::new(),
        })
    }

    fn realize<R: Rng + ?Sized>(
        &mut self,
        cfg: &NetworkConfig,
        receiver: Receiver,
        link_distance: impl FnOnce(&mut R) -> f64,
        rng: &mut R,
    ) -> Realization {
        let d = link_distance(rng);
        sample_interferer_distances(cfg, rng, &mut self.distances);
        let direct = self.sampler.draw_direct(rng);
        let cancel = receiver.cancelled();
        let mut interference = 0.0;
        for (j, &r) in self.distances.iter().enumerate() {
            let g = self.sampler.draw_interference_gain(rng);
            if j >= cancel {
                interference += g * cfg.pathloss.gain(r, cfg.alpha);
            }
        }
        interference += cfg.far_field_mean() * self.sampler.conditional_mean_gain();
        let window_exhausted = cancel > 0 && self.distances.len() <= cancel;
        let denom = interference + cfg.inverse_snr();
        let signal = direct * cfg.pathloss.gain(d, cfg.alpha);
        let sinr = if denom > 0.0 {
            Draw::Finite(signal / denom)
        } else {
            Draw::Infinite
        };
        Realization {
            sinr,
            window_exhausted,
        }
    }
}

/// One SINR draw for the typical receiver.
pub fn sinr_sample<R: Rng + ?Sized>(
    cfg: &NetworkConfig,
    receiver: Receiver,
    corr: &CorrelationSpec,
    rng: &mut R,
) -> Result<f64> {
    cfg.validate()?;
    receiver.check(cfg, corr)?;
    let mut ws = Workspace::new(corr)?;
    let r = ws.realize(
        cfg,
        receiver,
        |s: &mut R| link_distance_quantile(cfg.comm_range, s.random()),
        rng,
    );
    Ok(match r.sinr {
        Draw::Finite(x) => x,
        Draw::Infinite => f64::INFINITY,
    })
}

#[derive(Default, Clone, Copy)]
struct ChunkTally {
    moments: Moments,
    infinite: u64,
    exhausted: u64,
}

fn reduce_chunks(parts: Vec<ChunkTally>) -> ChunkTally {
    let moments: Vec<Moments> = parts.iter().map(|p| p.moments).collect();
    ChunkTally {
        moments: merge_tree(&moments),
        infinite: parts.iter().map(|p| p.infinite).sum(),
        exhausted: parts.iter().map(|p| p.exhausted).sum(),
    }
}

fn chunk_ranges(n: u64) -> Vec<(u64, u64)> {
    (0..n.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(n)))
        .collect()
}

pub fn estimate_sum_se(
    cfg: &NetworkConfig,
    receiver: Receiver,
    corr: &CorrelationSpec,
    n_realizations: u64,
    seed: u64,
) -> Result<SeEstimate> {
    estimate_sum_se_with(cfg, receiver, corr, n_realizations, seed, SimOptions::default())
}

pub fn estimate_sum_se_with(
    cfg: &NetworkConfig,
    receiver: Receiver,
    corr: &CorrelationSpec,
    n_realizations: u64,
    seed: u64,
    options: SimOptions,
) -> Result<SeEstimate> {
    cfg.validate()?;
    receiver.check(cfg, corr)?;
    ensure(
        n_realizations >= MIN_REALIZATIONS,
        "at least 100 realizations",
    )?;
    if let Some(d) = options.fixed_distance {
        ensure(d.is_finite() && d > 0.0, "fixed link distance > 0")?;
    }
    let n = n_realizations;
    let parts: Vec<ChunkTally> = chunk_ranges(n)
        .into_par_iter()
        .map(|(start, end)| {
            let mut ws = Workspace::new(corr).expect("validated correlation");
            let mut tally = ChunkTally::default();
            for i in start..end {
                let mut rng = stream(seed, i);
                let link = |s: &mut Stream| match options.fixed_distance {
                    Some(d) => d,
                    None if options.stratify_distance => {
                        let u: f64 = s.random();
                        link_distance_quantile(cfg.comm_range, (i as f64 + u) / n as f64)
                    }
                    None => link_distance_quantile(cfg.comm_range, s.random()),
                };
                let r = ws.realize(cfg, receiver, link, &mut rng);
                if r.window_exhausted {
                    tally.exhausted += 1;
                }
                match r.sinr {
                    Draw::Finite(s) => tally.moments.push(s.ln_1p() / LN_2),
                    Draw::Infinite => tally.infinite += 1,
                }
            }
            tally
        })
        .collect();
    let total = reduce_chunks(parts);
    if total.moments.n < 2 {
        return Err(Error::InsufficientData(
            "fewer than two finite-SINR realizations".into(),
        ));
    }
    let per_link = total.moments.mean;
    let flagged = (total.infinite + total.exhausted) as f64 > FLAG_FRACTION * n as f64;
    Ok(SeEstimate {
        sum_se: cfg.density * per_link,
        per_link_se: per_link,
        stderr: total.moments.stderr(),
        n_realizations: total.moments.n,
        seed,
        receiver,
        infinite_sinr: total.infinite,
        window_exhausted: total.exhausted,
        flagged,
        far_field_interference: cfg.far_field_mean(),
    })
}

/// Sample mean with its standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanEstimate {
    pub mean: f64,
    pub stderr: f64,
    /// Samples entering the mean.
    pub n: u64,
    /// Draws skipped (empty field where the statistic is undefined).
    pub skipped: u64,
    pub flagged: bool,
}

fn run_scalar<F>(n: u64, seed: u64, flag_fraction: f64, f: F) -> Result<MeanEstimate>
where
    F: Fn(&mut Stream, &mut Vec<f64>) -> Option<f64> + Sync,
{
    ensure(n >= MIN_REALIZATIONS, "at least 100 realizations")?;
    let parts: Vec<(Moments, u64)> = chunk_ranges(n)
        .into_par_iter()
        .map(|(start, end)| {
            let mut buf = Vec::new();
            let mut m = Moments::new();
            let mut skipped = 0;
            for i in start..end {
                match f(&mut stream(seed, i), &mut buf) {
                    Some(x) => m.push(x),
                    None => skipped += 1,
                }
            }
            (m, skipped)
        })
        .collect();
    let moments: Vec<Moments> = parts.iter().map(|p| p.0).collect();
    let m = merge_tree(&moments);
    let skipped: u64 = parts.iter().map(|p| p.1).sum();
    Ok(MeanEstimate {
        mean: m.mean,
        stderr: m.stderr(),
        n: m.n,
        skipped,
        flagged: skipped as f64 > flag_fraction * n as f64,
    })
}

/// Aggregate interference at the origin with unit-mean exponential marks,
/// skipping the `cancel` nearest interferers. `None` for an empty field.
fn marked_interference(cfg: &NetworkConfig, cancel: usize, rng: &mut Stream, buf: &mut Vec<f64>) -> Option<f64> {
    sample_interferer_distances(cfg, rng, buf);
    if buf.is_empty() {
        return None;
    }
    let mut total = 0.0;
    for (j, &r) in buf.iter().enumerate() {
        let x: f64 = rng.sample(Exp1);
        if j >= cancel {
            total += x * cfg.pathloss.gain(r, cfg.alpha);
        }
    }
    Some(total + cfg.far_field_mean())
}

/// `E[1/I]` for the unbounded path loss, over realizations with at least one
/// interferer. Flagged when more than 1% of the fields are empty.
pub fn estimate_negative_moment(cfg: &NetworkConfig, n_realizations: u64, seed: u64) -> Result<MeanEstimate> {
    cfg.validate()?;
    ensure(cfg.pathloss == PathLoss::Unbounded, "unbounded path loss")?;
    run_scalar(n_realizations, seed, 0.01, |rng, buf| {
        marked_interference(cfg, 0, rng, buf).map(|i| 1.0 / i)
    })
}

/// `E[I]` after removing the `cancel` nearest interferers (all realizations,
/// an empty field contributes the far-field term only).
pub fn estimate_interference_mean(
    cfg: &NetworkConfig,
    cancel: usize,
    n_realizations: u64,
    seed: u64,
) -> Result<MeanEstimate> {
    cfg.validate()?;
    run_scalar(n_realizations, seed, f64::INFINITY, |rng, buf| {
        Some(marked_interference(cfg, cancel, rng, buf).unwrap_or(cfg.far_field_mean()))
    })
}

/// Probability that the link at distance `d` meets the ITLinQ condition
/// `√(N_r P / (d^α σ²)) ≥ P / (d₁^α σ²)` against its nearest interferer.
pub fn estimate_itlinq_probability(
    cfg: &NetworkConfig,
    d: f64,
    n_realizations: u64,
    seed: u64,
) -> Result<MeanEstimate> {
    cfg.validate()?;
    ensure(cfg.noise_power_mw > 0.0, "noise power σ² > 0")?;
    ensure(d.is_finite() && d > 0.0, "link distance d > 0")?;
    let snr = cfg.snr();
    let own = (cfg.n_rx as f64 * snr * d.powf(-cfg.alpha)).sqrt();
    run_scalar(n_realizations, seed, f64::INFINITY, |rng, buf| {
        sample_interferer_distances(cfg, rng, buf);
        let ok = match buf.first() {
            None => true,
            Some(&d1) => own >= snr * d1.powf(-cfg.alpha),
        };
        Some(if ok { 1.0 } else { 0.0 })
    })
}
