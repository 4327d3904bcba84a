//! Small-scale fading: IID or receive-correlated Rayleigh vectors reduced to
//! the scalar power gains seen after MRC or ZF-SIC combining.
//!
//! Entries are CN(0, 1), so without correlation the direct gain is
//! Gamma(N_r, 1) and each interference gain is Exp(1).

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{ensure, Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CorrelationKind {
    None,
    /// Entries `ρ^{|i-j|}`.
    Exponential { rho: f64 },
    /// Correlation given by its eigenvalues (any eigenbasis gives the same
    /// gain distributions).
    Explicit { eigenvalues: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationSpec {
    pub kind: CorrelationKind,
    pub n_rx: usize,
}

impl CorrelationSpec {
    pub fn none(n_rx: usize) -> Self {
        CorrelationSpec {
            kind: CorrelationKind::None,
            n_rx,
        }
    }

    pub fn exponential(n_rx: usize, rho: f64) -> Result<Self> {
        let spec = CorrelationSpec {
            kind: CorrelationKind::Exponential { rho },
            n_rx,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Eigenvalues are sorted descending; zeros are allowed (rank-deficient C).
    pub fn explicit(n_rx: usize, mut eigenvalues: Vec<f64>) -> Result<Self> {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        let spec = CorrelationSpec {
            kind: CorrelationKind::Explicit { eigenvalues },
            n_rx,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn is_uncorrelated(&self) -> bool {
        matches!(self.kind, CorrelationKind::None)
            || matches!(self.kind, CorrelationKind::Exponential { rho } if rho == 0.0)
    }

    pub fn validate(&self) -> Result<()> {
        ensure(self.n_rx >= 1, "receive antennas N_r ≥ 1")?;
        match &self.kind {
            CorrelationKind::None => Ok(()),
            CorrelationKind::Exponential { rho } => {
                ensure((0.0..1.0).contains(rho), "correlation coefficient 0 ≤ ρ < 1")
            }
            CorrelationKind::Explicit { eigenvalues } => {
                if let Some(bad) = eigenvalues.iter().find(|m| !(m.is_finite() && **m >= 0.0)) {
                    return Err(Error::NonPsdCorrelation(format!("eigenvalue {bad}")));
                }
                ensure(
                    eigenvalues.len() <= self.n_rx,
                    "at most N_r eigenvalues (rank ≤ N_r)",
                )?;
                ensure(
                    eigenvalues.iter().any(|&m| m > 0.0),
                    "at least one positive eigenvalue",
                )
            }
        }
    }

    /// The correlation matrix (diagonal in the eigenbasis for explicit input).
    pub fn matrix(&self) -> Result<DMatrix<f64>> {
        self.validate()?;
        let n = self.n_rx;
        Ok(match &self.kind {
            CorrelationKind::None => DMatrix::identity(n, n),
            CorrelationKind::Exponential { rho } => {
                DMatrix::from_fn(n, n, |i, j| rho.powi(i.abs_diff(j) as i32))
            }
            CorrelationKind::Explicit { eigenvalues } => {
                DMatrix::from_fn(n, n, |i, j| if i == j { eigenvalues.get(i).copied().unwrap_or(0.0) } else { 0.0 })
            }
        })
    }

    /// Positive eigenvalues of C, descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        self.validate()?;
        let mut mu = match &self.kind {
            CorrelationKind::None => vec![1.0; self.n_rx],
            CorrelationKind::Exponential { .. } => {
                SymmetricEigen::new(self.matrix()?).eigenvalues.iter().copied().collect()
            }
            CorrelationKind::Explicit { eigenvalues } => eigenvalues.clone(),
        };
        mu.sort_by(|a, b| b.total_cmp(a));
        let top = mu[0];
        mu.retain(|&m| m > 1e-14 * top);
        Ok(mu)
    }

    /// `C^{1/2} = V Λ^{1/2} Vᵀ`, or `None` when C is the identity.
    pub fn sqrt_matrix(&self) -> Result<Option<DMatrix<f64>>> {
        self.validate()?;
        match &self.kind {
            CorrelationKind::None => Ok(None),
            CorrelationKind::Exponential { rho } if *rho == 0.0 => Ok(None),
            CorrelationKind::Exponential { .. } => {
                let eig = SymmetricEigen::new(self.matrix()?);
                let v = &eig.eigenvectors;
                let root = eig.eigenvalues.map(|m| m.max(0.0).sqrt());
                Ok(Some(v * DMatrix::from_diagonal(&root) * v.transpose()))
            }
            CorrelationKind::Explicit { eigenvalues } => {
                let n = self.n_rx;
                Ok(Some(DMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        eigenvalues.get(i).copied().unwrap_or(0.0).sqrt()
                    } else {
                        0.0
                    }
                })))
            }
        }
    }
}

/// Positive eigenvalues of the correlation matrix, descending.
pub fn correlation_eigenvalues(corr: &CorrelationSpec) -> Result<Vec<f64>> {
    corr.eigenvalues()
}

/// Post-combining power gains of one realization.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct EffectiveGains {
    pub direct_gain: f64,
    /// One gain per interferer, aligned with the field's ascending distances.
    /// Cancelled interferers carry a gain of zero.
    pub interference_gains: Vec<f64>,
    /// Number of nearest interferers removed by SIC.
    pub cancelled: usize,
}

/// Draws fading vectors and reduces them to combiner gains, reusing buffers
/// across realizations.
#[derive(Debug, Clone)]
pub struct GainSampler {
    n_rx: usize,
    sqrt_c: Option<DMatrix<f64>>,
    c: Option<DMatrix<f64>>,
    raw: Vec<Complex64>,
    h: Vec<Complex64>,
    w: Vec<Complex64>,
}

impl GainSampler {
    pub fn new(corr: &CorrelationSpec) -> Result<Self> {
        let sqrt_c = corr.sqrt_matrix()?;
        let c = match sqrt_c {
            Some(_) => Some(corr.matrix()?),
            None => None,
        };
        let n = corr.n_rx;
        Ok(GainSampler {
            n_rx: n,
            sqrt_c,
            c,
            raw: vec![Complex64::default(); n],
            h: vec![Complex64::default(); n],
            w: vec![Complex64::default(); n],
        })
    }

    pub fn n_rx(&self) -> usize {
        self.n_rx
    }

    fn draw<R: Rng + ?Sized>(&mut self, rng: &mut R) {
        const S: f64 = std::f64::consts::FRAC_1_SQRT_2;
        for x in self.raw.iter_mut() {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            *x = Complex64::new(S * re, S * im);
        }
        match &self.sqrt_c {
            None => self.h.copy_from_slice(&self.raw),
            Some(m) => {
                for i in 0..self.n_rx {
                    let mut acc = Complex64::default();
                    for j in 0..self.n_rx {
                        acc += self.raw[j] * m[(i, j)];
                    }
                    self.h[i] = acc;
                }
            }
        }
    }

    /// Draws the direct vector, sets the MRC weight `w = h / ‖h‖` and returns
    /// `‖h‖²`. The same `w` is the first QR column `q₁` of ZF-SIC.
    pub fn draw_direct<R: Rng + ?Sized>(&mut self, rng: &mut R) -> f64 {
        self.draw(rng);
        let norm2: f64 = self.h.iter().map(|x| x.norm_sqr()).sum();
        let norm = norm2.sqrt();
        if norm > 0.0 {
            for (w, h) in self.w.iter_mut().zip(&self.h) {
                *w = h / norm;
            }
        } else {
            self.w.fill(Complex64::default());
        }
        norm2
    }

    /// Draws one interferer vector `g` and returns `|w* g|²`.
    pub fn draw_interference_gain<R: Rng + ?Sized>(&mut self, rng: &mut R) -> f64 {
        self.draw(rng);
        self.projected_gain()
    }

    fn projected_gain(&self) -> f64 {
        self.w
            .iter()
            .zip(&self.h)
            .map(|(w, g)| w.conj() * g)
            .sum::<Complex64>()
            .norm_sqr()
    }

    /// The last drawn vector.
    pub fn last_vector(&self) -> &[Complex64] {
        &self.h
    }

    /// The current combining weight.
    pub fn weight(&self) -> &[Complex64] {
        &self.w
    }

    /// `E[|w* g|² | w] = w* C w`; one without correlation.
    pub fn conditional_mean_gain(&self) -> f64 {
        match &self.c {
            None => 1.0,
            Some(c) => {
                let mut acc = Complex64::default();
                for i in 0..self.n_rx {
                    for j in 0..self.n_rx {
                        acc += self.w[i].conj() * c[(i, j)] * self.w[j];
                    }
                }
                acc.re
            }
        }
    }
}

/// MRC gains for a field of `field_size` interferers.
pub fn sample_mrc_gains<R: Rng + ?Sized>(
    field_size: usize,
    corr: &CorrelationSpec,
    rng: &mut R,
) -> Result<EffectiveGains> {
    let mut sampler = GainSampler::new(corr)?;
    let direct_gain = sampler.draw_direct(rng);
    let interference_gains = (0..field_size)
        .map(|_| sampler.draw_interference_gain(rng))
        .collect();
    Ok(EffectiveGains {
        direct_gain,
        interference_gains,
        cancelled: 0,
    })
}

/// Thin QR factorization by modified Gram–Schmidt.
///
type Columns = Vec<Vec<Complex64>>;

/// Returns the orthonormal columns `Q` and the upper-triangular `R` (row-major
/// `r[i][j]`, i ≤ j). Fails on rank-deficient input.
pub fn qr_mgs(columns: &[Vec<Complex64>]) -> Result<(Columns, Columns)> {
    let k = columns.len();
    let mut q: Vec<Vec<Complex64>> = columns.to_vec();
    let mut r = vec![vec![Complex64::default(); k]; k];
    for j in 0..k {
        let norm2: f64 = q[j].iter().map(|x| x.norm_sqr()).sum();
        let norm = norm2.sqrt();
        if norm == 0.0 {
            return Err(Error::invalid(format!("column {j} is linearly dependent")));
        }
        r[j][j] = Complex64::new(norm, 0.0);
        for x in q[j].iter_mut() {
            *x /= norm;
        }
        let (done, rest) = q.split_at_mut(j + 1);
        let qj = &done[j];
        for (offset, col) in rest.iter_mut().enumerate() {
            let rij: Complex64 = qj.iter().zip(col.iter()).map(|(a, b)| a.conj() * b).sum();
            r[j][j + 1 + offset] = rij;
            for (c, a) in col.iter_mut().zip(qj) {
                *c -= rij * a;
            }
        }
    }
    Ok((q, r))
}

/// ZF-SIC gains: the `cancel` nearest interferers are zero-forced and removed;
/// the rest are seen through `q₁`, the first column of the QR factor of
/// `[h_direct, h_1, …, h_L]`.
pub fn sample_zfsic_gains<R: Rng + ?Sized>(
    field_distances: &[f64],
    corr: &CorrelationSpec,
    cancel: usize,
    rng: &mut R,
) -> Result<EffectiveGains> {
    if !corr.is_uncorrelated() {
        return Err(Error::Unsupported("ZF-SIC with correlated fading".into()));
    }
    if cancel >= corr.n_rx {
        return Err(Error::invalid(format!(
            "ZF-SIC cancels at most N_r - 1 = {} interferers, got L = {cancel}",
            corr.n_rx - 1
        )));
    }
    let mut sampler = GainSampler::new(&CorrelationSpec::none(corr.n_rx))?;
    let direct_gain = sampler.draw_direct(rng);
    let mut columns = vec![sampler.last_vector().to_vec()];
    let mut interference_gains = Vec::with_capacity(field_distances.len());
    let cancelled = cancel.min(field_distances.len());
    for j in 0..field_distances.len() {
        let g = sampler.draw_interference_gain(rng);
        if j < cancelled {
            columns.push(sampler.last_vector().to_vec());
            interference_gains.push(0.0);
        } else {
            interference_gains.push(g);
        }
    }
    let (q, _) = qr_mgs(&columns)?;
    debug_assert!(q[0].iter().zip(sampler.weight()).all(|(a, b)| a == b));
    Ok(EffectiveGains {
        direct_gain,
        interference_gains,
        cancelled,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::stream;

    #[test]
    fn identity_eigenvalues() {
        assert_eq!(CorrelationSpec::exponential(4, 0.0).unwrap().eigenvalues().unwrap(), vec![1.0; 4]);
    }

    #[test]
    fn two_by_two_eigenvalues() {
        for rho in [0.1, 0.5, 0.9] {
            let mu = CorrelationSpec::exponential(2, rho).unwrap().eigenvalues().unwrap();
            assert!((mu[0] - (1.0 + rho)).abs() < 1e-14);
            assert!((mu[1] - (1.0 - rho)).abs() < 1e-14);
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let spec = CorrelationSpec::exponential(5, 0.7).unwrap();
        let s = spec.sqrt_matrix().unwrap().unwrap();
        let c = spec.matrix().unwrap();
        assert!((&s * &s - c).abs().max() < 1e-13);
    }

    #[test]
    fn rejects_negative_eigenvalue() {
        assert!(matches!(
            CorrelationSpec::explicit(3, vec![2.0, 1.5, -0.5]),
            Err(Error::NonPsdCorrelation(_))
        ));
        assert!(CorrelationSpec::exponential(3, 1.0).is_err());
        assert!(CorrelationSpec::explicit(2, vec![1.0, 1.0, 1.0]).is_err());
    }

    #[test]
    fn qr_is_orthonormal_and_reconstructs() {
        let mut rng = stream(3, 0);
        let mut sampler = GainSampler::new(&CorrelationSpec::none(5)).unwrap();
        let cols: Vec<Vec<Complex64>> = (0..4)
            .map(|_| {
                sampler.draw_direct(&mut rng);
                sampler.last_vector().to_vec()
            })
            .collect();
        let (q, r) = qr_mgs(&cols).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let ip: Complex64 = q[a].iter().zip(&q[b]).map(|(x, y)| x.conj() * y).sum();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((ip - want).norm() < 1e-13);
            }
            for row in 0..5 {
                let rebuilt: Complex64 = (0..=a).map(|i| q[i][row] * r[i][a]).sum();
                assert!((rebuilt - cols[a][row]).norm() < 1e-13);
            }
        }
        let norm2: f64 = cols[0].iter().map(|x| x.norm_sqr()).sum();
        assert!((r[0][0].norm_sqr() - norm2).abs() < 1e-13 * norm2);
    }

    #[test]
    fn zfsic_matches_mrc_on_shared_stream() {
        let spec = CorrelationSpec::none(4);
        let dists = [3.0, 5.0, 8.0, 13.0, 21.0];
        for l in 0..4 {
            let mrc = sample_mrc_gains(dists.len(), &spec, &mut stream(11, 2)).unwrap();
            let sic = sample_zfsic_gains(&dists, &spec, l, &mut stream(11, 2)).unwrap();
            assert_eq!(sic.direct_gain, mrc.direct_gain);
            assert_eq!(sic.cancelled, l);
            assert!(sic.interference_gains[..l].iter().all(|&g| g == 0.0));
            assert_eq!(sic.interference_gains[l..], mrc.interference_gains[l..]);
        }
    }

    #[test]
    fn zfsic_budget_and_correlation_errors() {
        let mut rng = stream(0, 0);
        assert!(matches!(
            sample_zfsic_gains(&[1.0], &CorrelationSpec::none(4), 4, &mut rng),
            Err(Error::InvalidParameter(_))
        ));
        let corr = CorrelationSpec::exponential(4, 0.5).unwrap();
        assert!(matches!(
            sample_zfsic_gains(&[1.0], &corr, 1, &mut rng),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn cancel_everything() {
        let g = sample_zfsic_gains(&[2.0, 3.0, 4.0], &CorrelationSpec::none(4), 3, &mut stream(1, 1)).unwrap();
        assert_eq!(g.cancelled, 3);
        assert!(g.interference_gains.iter().all(|&x| x == 0.0));
    }
}
