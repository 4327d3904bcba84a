//! Physical parameters of one network scenario.

use serde::{Deserialize, Serialize};

use crate::error::{ensure, Result};

/// Path-loss law applied to every link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PathLoss {
    /// `‖x‖^-α`
    #[default]
    Unbounded,
    /// `min(1, ‖x‖^-α)`
    Bounded,
}

impl PathLoss {
    #[inline]
    pub fn gain(self, distance: f64, alpha: f64) -> f64 {
        match self {
            PathLoss::Unbounded => distance.powf(-alpha),
            PathLoss::Bounded => {
                if distance <= 1.0 {
                    1.0
                } else {
                    distance.powf(-alpha)
                }
            }
        }
    }
}

/// How interferers outside the simulation window are accounted for.
///
/// The Poisson field is only sampled inside a disk of radius `sim_radius`.
/// `MeanField` adds the Campbell mean of the interference from outside the
/// disk, `2πλ R_sim^{2-α} / (α-2)` scaled by the conditional mean fading
/// gain, to every realization. `Truncate` ignores it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum FarField {
    #[default]
    MeanField,
    Truncate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkConfig {
    /// Link density λ in links per m².
    pub density: f64,
    /// Path-loss exponent α (> 2).
    pub alpha: f64,
    /// Maximum link distance R_d in m (> 1).
    pub comm_range: f64,
    /// Receive antennas N_r.
    pub n_rx: usize,
    /// Transmit power P in mW.
    pub tx_power_mw: f64,
    /// Noise power σ² in mW; zero means interference-limited.
    pub noise_power_mw: f64,
    pub pathloss: PathLoss,
    /// Radius of the simulation window around the typical receiver, in m.
    pub sim_radius: f64,
    pub far_field: FarField,
}

pub fn dbm_to_mw(dbm: f64) -> f64 {
    10f64.powf(dbm / 10.0)
}

pub fn mw_to_dbm(mw: f64) -> f64 {
    10.0 * mw.log10()
}

impl Default for NetworkConfig {
    /// α = 4, R_d = 50 m, P = 20 dBm, σ² = -104 dBm, λ = 5·10⁻⁵, N_r = 4.
    fn default() -> Self {
        let comm_range = 50.0;
        NetworkConfig {
            density: 5e-5,
            alpha: 4.0,
            comm_range,
            n_rx: 4,
            tx_power_mw: dbm_to_mw(20.0),
            noise_power_mw: dbm_to_mw(-104.0),
            pathloss: PathLoss::Unbounded,
            sim_radius: 10.0 * comm_range,
            far_field: FarField::MeanField,
        }
    }
}

impl NetworkConfig {
    pub fn validate(&self) -> Result<()> {
        ensure(self.density.is_finite() && self.density > 0.0, "density λ > 0")?;
        ensure(self.alpha.is_finite() && self.alpha > 2.0, "path-loss exponent α > 2")?;
        ensure(
            self.comm_range.is_finite() && self.comm_range > 1.0,
            "communication range R_d > 1",
        )?;
        ensure(self.n_rx >= 1, "receive antennas N_r ≥ 1")?;
        ensure(
            self.tx_power_mw.is_finite() && self.tx_power_mw > 0.0,
            "transmit power P > 0",
        )?;
        ensure(
            self.noise_power_mw.is_finite() && self.noise_power_mw >= 0.0,
            "noise power σ² ≥ 0",
        )?;
        ensure(
            self.sim_radius.is_finite() && self.sim_radius >= 10.0 * self.comm_range,
            "simulation radius R_sim ≥ 10·R_d",
        )?;
        Ok(())
    }

    /// `P / σ²`; infinite when interference-limited.
    pub fn snr(&self) -> f64 {
        if self.noise_power_mw == 0.0 {
            f64::INFINITY
        } else {
            self.tx_power_mw / self.noise_power_mw
        }
    }

    pub fn is_interference_limited(&self) -> bool {
        self.noise_power_mw == 0.0
    }

    /// `1 / SNR`, zero when interference-limited.
    pub fn inverse_snr(&self) -> f64 {
        self.noise_power_mw / self.tx_power_mw
    }

    pub fn with_density(&self, density: f64) -> Self {
        NetworkConfig {
            density,
            ..self.clone()
        }
    }

    pub fn with_n_rx(&self, n_rx: usize) -> Self {
        NetworkConfig {
            n_rx,
            ..self.clone()
        }
    }

    pub fn interference_limited(&self) -> Self {
        NetworkConfig {
            noise_power_mw: 0.0,
            ..self.clone()
        }
    }

    /// Campbell mean of the interference from interferers beyond `sim_radius`
    /// with unit-mean marks. Zero under [`FarField::Truncate`].
    pub fn far_field_mean(&self) -> f64 {
        match self.far_field {
            FarField::Truncate => 0.0,
            // both path-loss laws coincide beyond R_sim > 1
            FarField::MeanField => {
                2.0 * std::f64::consts::PI * self.density * self.sim_radius.powf(2.0 - self.alpha)
                    / (self.alpha - 2.0)
            }
        }
    }

    /// Mean number of interferers inside the simulation window.
    pub fn mean_window_count(&self) -> f64 {
        self.density * std::f64::consts::PI * self.sim_radius * self.sim_radius
    }
}
