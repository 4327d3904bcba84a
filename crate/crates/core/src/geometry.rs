//! Spatial layer: the Poisson interferer field and the direct-link distance
//! seen by the typical receiver at the origin.

use rand::Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};

use crate::config::NetworkConfig;

/// Interferer distances from the origin, ascending.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct InterfererField {
    pub distances: Vec<f64>,
}

impl InterfererField {
    pub fn count(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    /// Distance to the `n`-th nearest interferer (1-based).
    pub fn nth_nearest(&self, n: usize) -> Option<f64> {
        n.checked_sub(1).and_then(|i| self.distances.get(i).copied())
    }
}

/// Draws a Poisson count with the given mean.
///
/// Backed by `rand_distr::Poisson`: inversion-style multiplication below a
/// mean of 12 and the PTRS transformed-rejection sampler above.
pub fn sample_poisson<R: Rng + ?Sized>(mean: f64, rng: &mut R) -> usize {
    if mean <= 0.0 {
        return 0;
    }
    let k: f64 = Poisson::new(mean).expect("finite positive Poisson mean").sample(rng);
    k as usize
}

/// Fills `out` with the sorted interferer distances of one realization.
pub fn sample_interferer_distances<R: Rng + ?Sized>(cfg: &NetworkConfig, rng: &mut R, out: &mut Vec<f64>) {
    out.clear();
    let k = sample_poisson(cfg.mean_window_count(), rng);
    out.extend((0..k).map(|_| {
        // 1 - U lies in (0, 1], so no interferer sits exactly at the origin
        let u: f64 = 1.0 - rng.random::<f64>();
        cfg.sim_radius * u.sqrt()
    }));
    // stable sort: exact ties keep draw order
    out.sort_by(f64::total_cmp);
}

/// Homogeneous PPP of intensity λ restricted to the disk of radius `sim_radius`.
pub fn sample_interferer_field<R: Rng + ?Sized>(cfg: &NetworkConfig, rng: &mut R) -> InterfererField {
    let mut distances = Vec::new();
    sample_interferer_distances(cfg, rng, &mut distances);
    InterfererField { distances }
}

/// Direct-link distance, uniform over the annulus `1 ≤ d ≤ R_d`.
pub fn sample_link_distance<R: Rng + ?Sized>(cfg: &NetworkConfig, rng: &mut R) -> f64 {
    let u: f64 = rng.random();
    link_distance_quantile(cfg.comm_range, u)
}

/// Inverse CDF of the annulus distance law `2d / (R_d² − 1)` on `[1, R_d]`.
pub fn link_distance_quantile(comm_range: f64, u: f64) -> f64 {
    (1.0 + u * (comm_range * comm_range - 1.0)).sqrt()
}

/// `E[d^{-α}]` under the annulus law.
pub fn link_distance_neg_moment(comm_range: f64, alpha: f64) -> f64 {
    let r2 = comm_range * comm_range;
    2.0 * (1.0 - comm_range.powf(2.0 - alpha)) / ((alpha - 2.0) * (r2 - 1.0))
}

/// `E[d²]` under the annulus law.
pub fn link_distance_second_moment(comm_range: f64) -> f64 {
    0.5 * (comm_range * comm_range + 1.0)
}
