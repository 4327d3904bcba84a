use std::f64::consts::PI;

use densecap_core::analytic::kernels::*;
use densecap_core::analytic::*;
use densecap_core::channel::CorrelationSpec;
use densecap_core::quadrature::integrate;
use densecap_core::rng::stream;
use densecap_core::stats::Moments;
use densecap_core::*;
use proptest::prelude::*;
use rand::Rng;
use rand_distr::Exp1;

fn q() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn baseline(lambda: f64, n_rx: usize) -> NetworkConfig {
    NetworkConfig::default().with_density(lambda).with_n_rx(n_rx)
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

/// `E_d[(1 + z d^{-α})^{-N}]` under the annulus law, by direct quadrature in d.
fn signal_laplace(cfg: &NetworkConfig, z: f64) -> f64 {
    let r2 = cfg.comm_range * cfg.comm_range;
    let n = cfg.n_rx as f64;
    integrate(
        |d: f64| (1.0 + z * d.powf(-cfg.alpha)).powf(-n) * 2.0 * d / (r2 - 1.0),
        1.0,
        cfg.comm_range,
        &QuadratureConfig::with_rel_tol(1e-12),
    )
    .unwrap()
    .value
}

#[test]
fn mrc_matches_generic_ergodic_composition() {
    for (lambda, n) in [(1e-5, 1), (5e-5, 4), (1e-4, 8)] {
        let cfg = baseline(lambda, n);
        let direct = mrc_sum_se_exact(&cfg, &q()).unwrap().per_link;
        let composed = ergodic_rate_transform(
            |z| signal_laplace(&cfg, z),
            |z| laplace_interference(z, lambda, cfg.alpha, 1.0),
            cfg.inverse_snr(),
            &q(),
        )
        .unwrap()
        .value;
        assert!(rel(direct, composed) < 1e-8, "λ = {lambda}, N_r = {n}: {direct} vs {composed}");
    }
}

#[test]
fn zfsic_matches_generic_ergodic_composition() {
    for (lambda, n, l) in [(5e-5, 4, 3), (1e-4, 8, 7), (1e-4, 4, 1)] {
        let cfg = baseline(lambda, n);
        let direct = sic_sum_se_exact(&cfg, l, &q()).unwrap().per_link;
        let composed = ergodic_rate_transform(
            |z| signal_laplace(&cfg, z),
            |z| sic_laplace(l, z, lambda, cfg.alpha, &QuadratureConfig::with_rel_tol(1e-11)).unwrap(),
            cfg.inverse_snr(),
            &q(),
        )
        .unwrap()
        .value;
        assert!(rel(direct, composed) < 1e-8, "λ = {lambda}, L = {l}: {direct} vs {composed}");
    }
}

#[test]
fn siso_closed_form_matches_quadrature() {
    for lambda in [1e-5, 1e-4] {
        let cfg = baseline(lambda, 1).interference_limited();
        for d in [1.0, 5.0, 30.0, 120.0] {
            let closed = mrc_closed_form_siso(lambda, d);
            let quad = mrc_sum_se_fixed_distance(&cfg, d, &q()).unwrap().per_link;
            assert!(rel(closed, quad) < 1e-9, "λ = {lambda}, d = {d}: {closed} vs {quad}");
        }
    }
}

#[test]
fn multiantenna_approximation_is_ordered() {
    let (lambda, d) = (1e-4, 30.0);
    let mut prev = mrc_closed_form_siso(lambda, d);
    assert_eq!(mrc_approx_multiantenna(lambda, d, 1), prev);
    for n in [2, 4, 8, 16] {
        let v = mrc_approx_multiantenna(lambda, d, n);
        assert!(v > prev);
        prev = v;
    }
}

#[test]
fn exact_values_monotone_in_snr_and_antennas() {
    let q = q();
    for lambda in [1e-5, 1e-4] {
        let mut prev = 0.0;
        for n in [1, 2, 4, 8, 16] {
            let v = mrc_sum_se_exact(&baseline(lambda, n), &q).unwrap().value;
            assert!(v > prev);
            prev = v;
        }
        let mut prev = 0.0;
        for noise_dbm in [-80.0, -90.0, -104.0, f64::NEG_INFINITY] {
            let cfg = NetworkConfig {
                noise_power_mw: config::dbm_to_mw(noise_dbm),
                ..baseline(lambda, 4)
            };
            let m = mrc_sum_se_exact(&cfg, &q).unwrap().value;
            let s = sic_sum_se_exact(&cfg, 3, &q).unwrap().value;
            assert!(m >= prev && s >= m);
            prev = m;
        }
    }
}

#[test]
fn bounds_require_interference_limited_operation() {
    let cfg = baseline(1e-4, 4);
    for r in [mrc_lower_bound(&cfg), mrc_upper_bound(&cfg), sic_lower_bound(&cfg), sic_upper_bound(&cfg)] {
        assert!(matches!(r, Err(Error::InvalidParameter(_))));
    }
    let il = cfg.interference_limited();
    assert_eq!(mrc_lower_bound(&il.with_n_rx(1)).unwrap().value, 0.0);
    assert!(sic_lower_bound(&il.with_n_rx(3)).is_err());
    assert!(sic_sum_se_exact(&il, 4, &q()).is_err());
    assert!(sic_sum_se_exact(&il, 0, &q()).is_err());
}

#[test]
fn optimal_density_tracks_the_numerical_maximizer() {
    // maximize λ ↦ mrc_lower_bound by golden section in ln λ
    let argmax = |n: usize| {
        let f = |x: f64| -mrc_lower_bound(&baseline(x.exp(), n).interference_limited()).unwrap().value;
        let (mut a, mut b) = ((1e-9f64).ln(), (1e-1f64).ln());
        let g = 0.5 * (5f64.sqrt() - 1.0);
        for _ in 0..200 {
            let c = b - g * (b - a);
            let d = a + g * (b - a);
            if f(c) < f(d) {
                b = d;
            } else {
                a = c;
            }
        }
        (0.5 * (a + b)).exp()
    };
    let ratios: Vec<f64> = [4, 16, 64]
        .into_iter()
        .map(|n| argmax(n) / optimal_density(n, 4.0, 50.0))
        .collect();
    for r in &ratios {
        assert!(rel(*r, ratios[0]) < 1e-6, "{ratios:?}");
    }
    // the printed density sits above the maximizer by a fixed factor
    assert!(ratios[0] > 0.4 && ratios[0] < 0.6, "{ratios:?}");
    let grow = optimal_density(17, 4.0, 50.0) / optimal_density(5, 4.0, 50.0);
    assert!(rel(grow, 2.0) < 1e-12);
}

#[test]
fn correlation_lowers_the_bound() {
    let q = q();
    for lambda in [1e-5, 1e-4, 1e-3] {
        let cfg = baseline(lambda, 4);
        let exact = mrc_sum_se_exact(&cfg, &q).unwrap().value;
        let mut prev = corr_sum_se_lower(&cfg, &[1.0; 4], &q).unwrap().value;
        assert!(rel(prev, exact) < 1e-8);
        for rho in [0.3, 0.6, 0.9] {
            let mu = CorrelationSpec::exponential(4, rho).unwrap().eigenvalues().unwrap();
            let v = corr_sum_se_lower(&cfg, &mu, &q).unwrap().value;
            assert!(v < prev, "λ = {lambda}, ρ = {rho}");
            prev = v;
        }
    }
    assert!(corr_sum_se_lower(&baseline(1e-4, 2), &[1.0, 1.0, 1.0], &q).is_err());
    assert!(corr_sum_se_lower(&baseline(1e-4, 2), &[1.0, -1.0], &q).is_err());
}

#[test]
fn log_gain_bound_holds_for_random_eigenvalues() {
    let mut rng = stream(31, 0);
    for _ in 0..10 {
        let r = rng.random_range(1..6);
        let mut mu: Vec<f64> = (0..r).map(|_| rng.random_range(0.05..3.0)).collect();
        mu.sort_by(|a, b| b.total_cmp(a));
        let m: Moments = (0..40_000)
            .map(|_| mu.iter().map(|m| m * rng.sample::<f64, _>(Exp1)).sum::<f64>().ln())
            .collect();
        assert!(m.mean + 3.0 * m.stderr() >= corr_log_gain(&mu).unwrap(), "{mu:?}");
    }
}

#[test]
fn bessel_bound_is_below_the_transform() {
    let lambda = 1e-4;
    for l in [1, 3, 7] {
        for z in [1e3, 1e6, 1e7, 1e8, 1e9] {
            let exact = sic_laplace(l, z, lambda, 4.0, &q()).unwrap();
            let lower = sic_bessel_lower(l, z, lambda).unwrap();
            assert!(lower <= exact * (1.0 + 1e-10), "L = {l}, z = {z}: {lower} > {exact}");
        }
    }
}

#[test]
fn negative_moment_formula() {
    let v = interference_negative_moment(1e-3, 4.0);
    let want = 2.0 * (2.0 / PI).powi(2) / (1e-3 * PI).powi(2);
    assert!(rel(v, want) < 1e-13);
}

#[test]
fn bounded_bound_vanishes_for_one_antenna() {
    let cfg = NetworkConfig {
        pathloss: PathLoss::Bounded,
        ..baseline(1e-4, 1)
    }
    .interference_limited();
    assert_eq!(bounded_pl_lower_bound(&cfg).unwrap().value, 0.0);
    assert!(bounded_pl_lower_bound(&baseline(1e-4, 2).interference_limited()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sandwiches_hold(log_lambda in -5.0f64..-2.5, n in 2usize..24, alpha in 2.5f64..5.0) {
        let cfg = NetworkConfig { alpha, ..baseline(10f64.powf(log_lambda), n) }.interference_limited();
        let exact = mrc_sum_se_exact(&cfg, &q()).unwrap().value;
        prop_assert!(exact >= 0.0);
        prop_assert!(mrc_lower_bound(&cfg).unwrap().value <= exact);
        prop_assert!(exact <= mrc_upper_bound(&cfg).unwrap().value);
        let sic = sic_sum_se_exact(&cfg, n - 1, &q()).unwrap().value;
        prop_assert!(sic <= sic_upper_bound(&cfg).unwrap().value);
        if let Ok(lo) = sic_lower_bound(&cfg) {
            prop_assert!(lo.value <= sic);
        }
    }

    #[test]
    fn per_link_decreases_with_density(log_lambda in -5.5f64..-2.0, n in 1usize..16) {
        let a = mrc_sum_se_exact(&baseline(10f64.powf(log_lambda), n), &q()).unwrap().per_link;
        let b = mrc_sum_se_exact(&baseline(10f64.powf(log_lambda + 0.1), n), &q()).unwrap().per_link;
        prop_assert!(b < a);
    }
}
