//! Ergodic sum spectral efficiency of dense random wireless networks.
//!
//! Transmitters form a homogeneous Poisson point process; every receiver
//! has `N_r` antennas and decodes its own transmitter, which sits uniformly
//! in an annulus of radii `1` and `R_d` around it. Two receivers are
//! modelled: maximum ratio combining (direct CSIR) and zero-forcing
//! successive interference cancellation of the `L` nearest interferers
//! (local CSIR).
//!
//! The crate offers two independent routes to the same quantities:
//!
//! * [`simulator`] samples the typical link (Palm viewpoint) and averages
//!   `log2(1 + SINR)` by Monte Carlo;
//! * [`analytic`] evaluates the exact Laplace-transform integrals, the
//!   closed forms and the closed-form bounds by adaptive quadrature.
//!
//! [`scaling`] sweeps density with `N_r = ceil(c * lambda^beta)` antennas to
//! exhibit the capacity scaling regimes.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod channel;
pub mod config;
pub mod error;
pub mod geometry;
pub mod quadrature;
pub mod rng;
pub mod scaling;
pub mod simulator;
pub mod special;
pub mod stats;

pub use analytic::{AnalyticValue, Method};
pub use channel::{CorrelationKind, CorrelationSpec, EffectiveGains};
pub use config::{FarField, NetworkConfig, PathLoss};
pub use error::{Error, Result};
pub use geometry::InterfererField;
pub use quadrature::QuadratureConfig;
pub use scaling::{SweepMethod, SweepReceiver, SweepResult, SweepRow, SweepSpec};
pub use simulator::{Receiver, SeEstimate};
