//! Monte Carlo versus analytic checks for one configuration.

use std::f64::consts::PI;

use densecap_core::analytic::*;
use densecap_core::simulator::{estimate_interference_mean, estimate_negative_moment, estimate_sum_se};
use densecap_core::{CorrelationSpec, NetworkConfig, PathLoss, QuadratureConfig, Receiver};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, pass: bool, detail: String) -> Self {
        Check { name, pass, detail }
    }
}

fn agreement(name: &'static str, mc: f64, stderr: f64, exact: f64) -> Check {
    let z = (mc - exact).abs() / stderr;
    let gap = ((mc - exact) / exact).abs();
    Check::new(
        name,
        z <= 3.0 && gap <= 0.03,
        format!("mc {mc:.6e} ± {stderr:.1e}, exact {exact:.6e}, z = {z:.2}, rel = {gap:.4}"),
    )
}

/// Runs every check that applies to `cfg`. Errors are reported as failed checks.
pub fn run_checks(cfg: &NetworkConfig, realizations: u64, seed: u64) -> Result<Vec<Check>> {
    cfg.validate()?;
    let q = QuadratureConfig::default();
    let n = cfg.n_rx;
    let none = CorrelationSpec::none(n);
    let mut checks = Vec::new();
    let failed = |name, e: densecap_core::Error| Check::new(name, false, e.to_string());

    if cfg.pathloss == PathLoss::Bounded {
        let il = cfg.interference_limited();
        let c = match estimate_interference_mean(&il, 0, realizations, seed) {
            Ok(mc) => {
                let want = campbell_mean_bounded(cfg.density, cfg.alpha);
                let z = (mc.mean - want).abs() / mc.stderr;
                Check::new("mean_interference", z <= 3.0, format!("mc {:.6e}, closed form {want:.6e}, z = {z:.2}", mc.mean))
            }
            Err(e) => failed("mean_interference", e),
        };
        checks.push(c);
        return Ok(checks);
    }

    let c = match (estimate_sum_se(cfg, Receiver::Mrc, &none, realizations, seed), mrc_sum_se_exact(cfg, &q)) {
        (Ok(mc), Ok(ex)) => agreement("mrc_mc_vs_exact", mc.sum_se, mc.sum_stderr(), ex.value),
        (Err(e), _) | (_, Err(e)) => failed("mrc_mc_vs_exact", e),
    };
    checks.push(c);

    if n >= 2 {
        let l = n - 1;
        let mut wide = cfg.clone();
        wide.sim_radius = wide.sim_radius.max((40.0 * (l as f64 + 1.0) / (cfg.density * PI)).sqrt());
        let c = match (
            estimate_sum_se(&wide, Receiver::ZfSic { cancel: l }, &none, realizations, seed.wrapping_add(1)),
            sic_sum_se_exact(&wide, l, &q),
        ) {
            (Ok(mc), Ok(ex)) => agreement("zfsic_mc_vs_exact", mc.sum_se, mc.sum_stderr(), ex.value),
            (Err(e), _) | (_, Err(e)) => failed("zfsic_mc_vs_exact", e),
        };
        checks.push(c);
    }

    let small = realizations.min(10_000);
    let c = match (
        estimate_sum_se(cfg, Receiver::Mrc, &none, small, seed),
        estimate_sum_se(cfg, Receiver::ZfSic { cancel: 0 }, &none, small, seed),
    ) {
        (Ok(a), Ok(b)) => Check::new(
            "zfsic0_equals_mrc",
            a.sum_se.to_bits() == b.sum_se.to_bits(),
            format!("{:e} vs {:e}", a.sum_se, b.sum_se),
        ),
        (Err(e), _) | (_, Err(e)) => failed("zfsic0_equals_mrc", e),
    };
    checks.push(c);

    let il = cfg.interference_limited();
    let mut violations = Vec::new();
    let sandwich = (|| -> densecap_core::Result<usize> {
        let mut count = 1;
        let e = mrc_sum_se_exact(&il, &q)?.value;
        let (lo, hi) = (mrc_lower_bound(&il)?.value, mrc_upper_bound(&il)?.value);
        if !(lo <= e && e <= hi) {
            violations.push(format!("mrc {lo:e} ≤ {e:e} ≤ {hi:e}"));
        }
        if n >= 2 {
            count += 1;
            let e = sic_sum_se_exact(&il, n - 1, &q)?.value;
            let hi = sic_upper_bound(&il)?.value;
            let lo = sic_lower_bound(&il).ok().map(|v| v.value);
            if !(lo.is_none_or(|lo| lo <= e) && e <= hi) {
                violations.push(format!("zfsic {lo:?} ≤ {e:e} ≤ {hi:e}"));
            }
        }
        Ok(count)
    })();
    checks.push(match sandwich {
        Ok(count) => Check::new(
            "bound_sandwich",
            violations.is_empty(),
            format!("{count} sandwiches at σ² = 0, {} violations{}", violations.len(), violations.iter().map(|v| format!("; {v}")).collect::<String>()),
        ),
        Err(e) => failed("bound_sandwich", e),
    });

    checks.push(match estimate_negative_moment(&il, realizations, seed.wrapping_add(2)) {
        Ok(mc) => {
            let want = interference_negative_moment(cfg.density, cfg.alpha);
            let gap = ((mc.mean - want) / want).abs();
            Check::new("negative_moment", gap <= 0.05, format!("mc {:.6e}, closed form {want:.6e}, rel = {gap:.4}", mc.mean))
        }
        Err(e) => failed("negative_moment", e),
    });

    checks.push(match (corr_sum_se_lower(cfg, &vec![1.0; n], &q), mrc_sum_se_exact(cfg, &q)) {
        (Ok(b), Ok(e)) => {
            let gap = ((b.value - e.value) / e.value).abs();
            Check::new("unit_correlation_bound", gap <= 1e-6, format!("rel gap {gap:.1e}"))
        }
        (Err(e), _) | (_, Err(e)) => failed("unit_correlation_bound", e),
    });
    Ok(checks)
}
