//! Exact integrals, closed forms and bounds for the ergodic sum spectral
//! efficiency.
//!
//! Every exact expression is an instance of
//! `E[ln(1 + X/(Y + a))] = ∫₀^∞ e^{-az}/z · (1 − L_X(z)) · L_Y(z) dz`
//! with `L_X` the Laplace transform of the post-combining signal gain and
//! `L_Y` that of the (scaled) aggregate interference.

use serde::{Deserialize, Serialize};

pub mod bounded;
pub mod corr;
pub mod kernels;
pub mod mrc;
pub mod sic;

pub use bounded::{bounded_pl_lower_bound, campbell_mean_bounded};
pub use corr::{corr_log_gain, corr_sum_se_lower};
pub use kernels::{
    ergodic_rate_transform, laplace_interference, one_minus_inv_pow, sic_bessel_lower, sic_laplace,
    TailIntegral,
};
pub use mrc::{
    interference_negative_moment, itlinq_probability, mrc_approx_multiantenna, mrc_closed_form_siso,
    mrc_lower_bound, mrc_per_link_at_distance, mrc_sum_se_exact, mrc_sum_se_fixed_distance,
    mrc_upper_bound, optimal_density,
};
pub use sic::{
    gamma_ratio, sic_interference_mean, sic_interference_mean_exact, sic_lower_bound, sic_sum_se_exact,
    sic_upper_bound,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ExactIntegral,
    ClosedForm,
    LowerBound,
    UpperBound,
    Approximation,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Method::ExactIntegral => "exact",
            Method::ClosedForm => "closed_form",
            Method::LowerBound => "lower",
            Method::UpperBound => "upper",
            Method::Approximation => "approx",
        }
    }
}

/// An analytic sum spectral efficiency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnalyticValue {
    /// bit/s/Hz/m²
    pub value: f64,
    /// bit/s/Hz per link (`value / λ`).
    pub per_link: f64,
    /// Error estimate of `value`; zero for closed forms.
    pub abs_error_estimate: f64,
    pub method: Method,
}

impl AnalyticValue {
    pub(crate) fn from_per_link(density: f64, per_link: f64, per_link_error: f64, method: Method) -> Self {
        AnalyticValue {
            value: density * per_link,
            per_link,
            abs_error_estimate: density * per_link_error,
            method,
        }
    }
}

/// Tolerance for an inner integral nested inside one solved to `outer`.
pub(crate) fn inner_config(outer: &crate::QuadratureConfig) -> crate::QuadratureConfig {
    crate::QuadratureConfig {
        rel_tol: (outer.rel_tol * 1e-2).max(1e-12),
        ..*outer
    }
}

/// Collects the first error raised inside a quadrature closure, which can
/// only return `f64`.
#[derive(Default)]
pub(crate) struct ErrorSlot(std::cell::RefCell<Option<crate::Error>>);

impl ErrorSlot {
    pub(crate) fn value(&self, r: crate::Result<f64>) -> f64 {
        match r {
            Ok(v) => v,
            Err(e) => {
                self.0.borrow_mut().get_or_insert(e);
                f64::NAN
            }
        }
    }

    /// Prefers an inner failure over the outer one it caused.
    pub(crate) fn finish<T>(self, outer: crate::Result<T>) -> crate::Result<T> {
        match self.0.into_inner() {
            Some(e) => Err(e),
            None => outer,
        }
    }
}
