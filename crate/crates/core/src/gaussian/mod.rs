//! The zero-mean Gaussian measure `N(0, Σ)` and integration against it.
//!
//! Exact expectations of polynomials come from the Gaussian integration by
//! parts (Stein) identity
//!
//! ```text
//! E[X^a] = Σ_k Σ_ik (a - e_i)_k E[X^(a - e_i - e_k)],   a_i > 0,
//! ```
//!
//! memoized per measure. Expectations of `p(X) exp(cᵀX)` reduce to a shifted
//! polynomial expectation, `exp(½ cᵀΣc) E[p(X + Σc)]`.
//!
//! Sampling comes in two flavors: deterministic Sobol points pushed through
//! the inverse normal CDF and the Cholesky factor, and seeded pseudo-random
//! draws for Monte Carlo benchmarks.

pub mod io;
pub mod normal;
pub mod sobol;
mod sobol_table;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub use sobol::{sobol_points, QmcConfig, SobolSequence};

use crate::error::{Error, Result};
use crate::hermite::SparsePolynomial;
use crate::indexing::MultiIndex;
use crate::linalg;

/// Construction is rejected above this condition estimate.
pub const MAX_CONDITION: f64 = 1e12;

const SYMMETRY_TOL: f64 = 1e-12;

/// Validated SPD covariance with cached precision, Cholesky factor, and
/// log-determinant. Cheap to clone; clones share the moment memo.
#[derive(Clone)]
pub struct GaussianMeasure {
    inner: Arc<Inner>,
}

struct Inner {
    covariance: DMatrix<f64>,
    precision: DMatrix<f64>,
    chol_lower: DMatrix<f64>,
    log_det: f64,
    condition: f64,
    moments: Mutex<HashMap<MultiIndex, f64>>,
}

impl fmt::Debug for GaussianMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaussianMeasure")
            .field("dimension", &self.dimension())
            .field("covariance", &self.inner.covariance)
            .field("log_det", &self.inner.log_det)
            .finish()
    }
}

impl GaussianMeasure {
    /// Validates and factors a covariance matrix.
    pub fn new(covariance: DMatrix<f64>) -> Result<Self> {
        let (rows, cols) = covariance.shape();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::EmptyDimension);
        }
        let scale = covariance.abs().max();
        let mut sym = covariance;
        for i in 0..rows {
            for j in 0..i {
                let (upper, lower) = (sym[(j, i)], sym[(i, j)]);
                if (upper - lower).abs() > SYMMETRY_TOL * scale {
                    return Err(Error::Asymmetric {
                        row: j,
                        col: i,
                        upper,
                        lower,
                    });
                }
                let v = 0.5 * (upper + lower);
                sym[(i, j)] = v;
                sym[(j, i)] = v;
            }
        }
        let chol_lower = linalg::cholesky_lower(&sym)?;
        let precision = linalg::cholesky_inverse(&chol_lower);
        let condition = linalg::condition_estimate(&sym, &precision);
        if !(condition <= MAX_CONDITION) {
            return Err(Error::IllConditioned {
                estimate: condition,
                limit: MAX_CONDITION,
            });
        }
        let log_det = 2.0 * chol_lower.diagonal().iter().map(|d| d.ln()).sum::<f64>();
        Ok(GaussianMeasure {
            inner: Arc::new(Inner {
                covariance: sym,
                precision,
                chol_lower,
                log_det,
                condition,
                moments: Mutex::new(HashMap::new()),
            }),
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Self::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn identity(dim: usize) -> Result<Self> {
        Self::new(DMatrix::identity(dim, dim))
    }

    /// Unit variances with a common correlation `rho`.
    pub fn equicorrelated(dim: usize, rho: f64) -> Result<Self> {
        Self::new(DMatrix::from_fn(dim, dim, |i, j| if i == j { 1.0 } else { rho }))
    }

    pub fn dimension(&self) -> usize {
        self.inner.covariance.nrows()
    }

    pub fn covariance(&self) -> &DMatrix<f64> {
        &self.inner.covariance
    }

    /// `Σ⁻¹`.
    pub fn precision(&self) -> &DMatrix<f64> {
        &self.inner.precision
    }

    /// Lower-triangular `L` with `L Lᵀ = Σ`.
    pub fn chol_lower(&self) -> &DMatrix<f64> {
        &self.inner.chol_lower
    }

    pub fn log_det(&self) -> f64 {
        self.inner.log_det
    }

    /// Power-iteration estimate of the 2-norm condition number of `Σ`.
    pub fn condition_estimate(&self) -> f64 {
        self.inner.condition
    }

    pub fn covariance_rows(&self) -> Vec<Vec<f64>> {
        io::matrix_rows(&self.inner.covariance)
    }

    fn check_point(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dimension() {
            return Err(Error::Dimension {
                expected: self.dimension(),
                got: x.len(),
            });
        }
        Ok(())
    }

    pub fn log_density(&self, x: &[f64]) -> Result<f64> {
        self.check_point(x)?;
        let v = DVector::from_column_slice(x);
        let quad = v.dot(&(&self.inner.precision * &v));
        let n = self.dimension() as f64;
        Ok(-0.5 * n * (2.0 * std::f64::consts::PI).ln() - 0.5 * self.inner.log_det - 0.5 * quad)
    }

    /// Joint density `φ(x; Σ)`.
    pub fn density(&self, x: &[f64]) -> Result<f64> {
        self.log_density(x).map(f64::exp)
    }

    /// `E[X^a]`, exact up to rounding; exactly zero for odd `|a|`.
    pub fn monomial_moment(&self, a: &MultiIndex) -> Result<f64> {
        if a.len() != self.dimension() {
            return Err(Error::Dimension {
                expected: self.dimension(),
                got: a.len(),
            });
        }
        let mut memo = self.lock_memo();
        Ok(self.moment_memo(&mut memo, a))
    }

    fn lock_memo(&self) -> std::sync::MutexGuard<'_, HashMap<MultiIndex, f64>> {
        // a panic while holding the lock cannot leave a wrong entry behind:
        // values are inserted only once fully computed
        self.inner
            .moments
            .lock()
            .unwrap_or_else(|poisoned| poisoned.into_inner())
    }

    fn moment_memo(&self, memo: &mut HashMap<MultiIndex, f64>, a: &MultiIndex) -> f64 {
        let degree = a.degree();
        if degree == 0 {
            return 1.0;
        }
        if degree % 2 == 1 {
            return 0.0;
        }
        if let Some(&v) = memo.get(a) {
            return v;
        }
        let cov = &self.inner.covariance;
        let i = a.entries().iter().position(|&e| e > 0).expect("nonzero degree");
        let reduced = a.decremented(i).expect("a_i > 0");
        let mut total = 0.0;
        for k in 0..a.len() {
            let count = reduced.get(k);
            if count == 0 || cov[(i, k)] == 0.0 {
                continue;
            }
            let rest = reduced.decremented(k).expect("count > 0");
            total += cov[(i, k)] * count as f64 * self.moment_memo(memo, &rest);
        }
        memo.insert(a.clone(), total);
        total
    }

    /// `E[p(X)]` by linearity over monomial moments.
    pub fn polynomial_expectation(&self, p: &SparsePolynomial) -> Result<f64> {
        if p.dimension() != self.dimension() {
            return Err(Error::Dimension {
                expected: self.dimension(),
                got: p.dimension(),
            });
        }
        let mut memo = self.lock_memo();
        Ok(p.terms()
            .map(|(idx, c)| c * self.moment_memo(&mut memo, idx))
            .sum())
    }

    /// `E[p(X) exp(cᵀX)] = exp(½ cᵀΣc) E[p(X + Σc)]`.
    pub fn tilted_expectation(&self, p: &SparsePolynomial, c: &[f64]) -> Result<f64> {
        self.check_point(c)?;
        if c.iter().all(|&v| v == 0.0) {
            return self.polynomial_expectation(p);
        }
        let cv = DVector::from_column_slice(c);
        let shift = &self.inner.covariance * &cv;
        let factor = (0.5 * cv.dot(&shift)).exp();
        let shifted = p.shifted(shift.as_slice())?;
        Ok(factor * self.polynomial_expectation(&shifted)?)
    }

    /// Maps a point of the open unit cube to `L Φ⁻¹(u)`.
    pub fn gaussian_map(&self, u: &[f64]) -> Result<Vec<f64>> {
        self.check_point(u)?;
        if let Some(bad) = u.iter().find(|&&v| !(v > 0.0 && v < 1.0)) {
            return Err(Error::Domain(format!(
                "unit-cube coordinate {bad} is not strictly inside (0, 1)"
            )));
        }
        let z: Vec<f64> = u.iter().map(|&v| normal::inverse_cdf(v)).collect();
        Ok(self.correlate(&z))
    }

    /// `L z` for a standard normal vector `z`.
    fn correlate(&self, z: &[f64]) -> Vec<f64> {
        let l = &self.inner.chol_lower;
        (0..z.len())
            .map(|i| (0..=i).map(|k| l[(i, k)] * z[k]).sum())
            .collect()
    }

    /// `n` reproducible pseudo-random draws from `N(0, Σ)`.
    pub fn random_gaussian(&self, seed: u64, n: usize) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = self.dimension();
        let mut z = vec![0.0; dim];
        (0..n)
            .map(|_| {
                for v in z.iter_mut() {
                    *v = StandardNormal.sample(&mut rng);
                }
                self.correlate(&z)
            })
            .collect()
    }

    /// Sobol points mapped through [`Self::gaussian_map`].
    pub fn qmc_points(&self, config: &QmcConfig) -> Result<Vec<Vec<f64>>> {
        if config.dimension != self.dimension() {
            return Err(Error::Dimension {
                expected: self.dimension(),
                got: config.dimension,
            });
        }
        sobol_points(config)?
            .iter()
            .map(|u| self.gaussian_map(u))
            .collect()
    }
}

/// `Σ_ij = variance · exp(-|ξ_i - ξ_j| / corr_length)` on the given
/// coordinates. Whether the result is positive definite is left to
/// [`GaussianMeasure::new`].
pub fn exponential_field_covariance(
    coords: &[f64],
    variance: f64,
    corr_length: f64,
) -> Result<DMatrix<f64>> {
    if !(variance > 0.0) || !(corr_length > 0.0) {
        return Err(Error::Domain(format!(
            "variance ({variance}) and correlation length ({corr_length}) must be positive"
        )));
    }
    let m = coords.len();
    Ok(DMatrix::from_fn(m, m, |i, j| {
        variance * (-(coords[i] - coords[j]).abs() / corr_length).exp()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec()).unwrap()
    }

    fn case2() -> GaussianMeasure {
        GaussianMeasure::equicorrelated(3, 0.2).unwrap()
    }

    fn random_spd(rng: &mut ChaCha8Rng, n: usize) -> GaussianMeasure {
        let b = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
        GaussianMeasure::new(&b * b.transpose() + DMatrix::identity(n, n) * 0.3).unwrap()
    }

    #[test]
    fn identity_measure() {
        let m = GaussianMeasure::identity(3).unwrap();
        assert_eq!(m.precision(), &DMatrix::identity(3, 3));
        assert_eq!(m.log_det(), 0.0);
        assert!((m.condition_estimate() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn equicorrelated_precision_closed_form() {
        let p = case2().precision().clone();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { 15.0 / 14.0 } else { -5.0 / 28.0 };
                assert!((p[(i, j)] - expected).abs() < 1e-14, "({i},{j})");
            }
        }
        let back = case2().covariance() * &p;
        assert!((back - DMatrix::identity(3, 3)).abs().max() < 1e-10);
    }

    #[test]
    fn rejects_bad_covariances() {
        let dup = DMatrix::from_row_slice(3, 3, &[1.0, 1.0, 0.2, 1.0, 1.0, 0.2, 0.2, 0.2, 1.0]);
        assert!(matches!(GaussianMeasure::new(dup), Err(Error::NotPositiveDefinite { .. })));
        let asym = DMatrix::from_row_slice(2, 2, &[1.0, 0.3, 0.2, 1.0]);
        assert!(matches!(GaussianMeasure::new(asym), Err(Error::Asymmetric { .. })));
        let rect = DMatrix::<f64>::zeros(2, 3);
        assert!(matches!(GaussianMeasure::new(rect), Err(Error::NotSquare { .. })));
        let eps = 1e-13;
        let near = DMatrix::from_row_slice(2, 2, &[1.0, 1.0 - eps, 1.0 - eps, 1.0]);
        assert!(matches!(GaussianMeasure::new(near), Err(Error::IllConditioned { .. })));
    }

    #[test]
    fn density_values() {
        let m = GaussianMeasure::identity(2).unwrap();
        let d = m.density(&[0.0, 0.0]).unwrap();
        assert!((d - 1.0 / (2.0 * std::f64::consts::PI)).abs() < 1e-15);
        let m1 = GaussianMeasure::from_rows(&[vec![0.25]]).unwrap();
        assert!((m1.density(&[0.0]).unwrap() - 0.7978845608028654).abs() < 1e-12);
        let m3 = case2();
        let x = [0.3, -1.2, 0.7];
        let neg = [-0.3, 1.2, -0.7];
        assert_eq!(m3.density(&x).unwrap(), m3.density(&neg).unwrap());
        assert!(m3.density(&x).unwrap() > 0.0);
        assert!(m3.density(&[1.0]).is_err());
    }

    #[test]
    fn density_integrates_to_one() {
        for (s1, s2) in [(1.0, 1.0), (0.25, 4.0), (2.0, 0.5)] {
            let m = GaussianMeasure::from_rows(&[vec![s1, 0.0], vec![0.0, s2]]).unwrap();
            let (h1, h2) = (s1.sqrt(), s2.sqrt());
            let cells = 800;
            let (dx, dy) = (16.0 * h1 / cells as f64, 16.0 * h2 / cells as f64);
            let mut total = 0.0;
            for i in 0..cells {
                let x = -8.0 * h1 + (i as f64 + 0.5) * dx;
                for j in 0..cells {
                    let y = -8.0 * h2 + (j as f64 + 0.5) * dy;
                    total += m.density(&[x, y]).unwrap();
                }
            }
            assert!((total * dx * dy - 1.0).abs() < 1e-6, "{s1} {s2}: {}", total * dx * dy);
        }
    }

    #[test]
    fn moment_examples() {
        let m = GaussianMeasure::from_rows(&[vec![2.0, 0.7], vec![0.7, 0.5]]).unwrap();
        assert_eq!(m.monomial_moment(&mi(&[1, 1])).unwrap(), 0.7);
        assert_eq!(m.monomial_moment(&mi(&[2, 0])).unwrap(), 2.0);
        let expected = 2.0 * 0.5 + 2.0 * 0.7 * 0.7;
        assert!((m.monomial_moment(&mi(&[2, 2])).unwrap() - expected).abs() < 1e-14);
        assert_eq!(m.monomial_moment(&mi(&[2, 1])).unwrap(), 0.0);
        assert_eq!(m.monomial_moment(&mi(&[0, 0])).unwrap(), 1.0);
        assert!(m.monomial_moment(&mi(&[1])).is_err());
    }

    /// Isserlis: the sum over perfect matchings of the expanded index list.
    fn isserlis(cov: &DMatrix<f64>, a: &MultiIndex) -> f64 {
        let mut vars = Vec::new();
        for (axis, &e) in a.entries().iter().enumerate() {
            vars.extend(std::iter::repeat(axis).take(e as usize));
        }
        fn matchings(cov: &DMatrix<f64>, vars: &[usize]) -> f64 {
            if vars.is_empty() {
                return 1.0;
            }
            if vars.len() % 2 == 1 {
                return 0.0;
            }
            let first = vars[0];
            let mut total = 0.0;
            for k in 1..vars.len() {
                let rest: Vec<usize> = vars[1..]
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i + 1 != k)
                    .map(|(_, &v)| v)
                    .collect();
                total += cov[(first, vars[k])] * matchings(cov, &rest);
            }
            total
        }
        matchings(cov, &vars)
    }

    #[test]
    fn moments_match_pair_partition_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..20 {
            let n = 1 + trial % 3;
            let m = random_spd(&mut rng, n);
            for idx in crate::indexing::enumerate_total(n, 8).unwrap() {
                let got = m.monomial_moment(&idx).unwrap();
                let want = isserlis(m.covariance(), &idx);
                assert!(
                    (got - want).abs() <= 1e-10 * want.abs().max(1e-300),
                    "trial {trial} {idx}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn moments_match_crude_monte_carlo() {
        let m = GaussianMeasure::from_rows(&[
            vec![1.0, 0.4, -0.3],
            vec![0.4, 0.8, 0.1],
            vec![-0.3, 0.1, 1.5],
        ])
        .unwrap();
        let n = 1_000_000;
        let draws = m.random_gaussian(20240611, n);
        for idx in crate::indexing::enumerate_total(3, 4).unwrap() {
            if idx.is_zero() {
                continue;
            }
            let vals: Vec<f64> = draws
                .iter()
                .map(|x| {
                    x.iter()
                        .zip(idx.entries())
                        .map(|(v, &e)| v.powi(e as i32))
                        .product()
                })
                .collect();
            let mean = vals.iter().sum::<f64>() / n as f64;
            let var = vals.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
            let se = (var / n as f64).sqrt();
            let exact = m.monomial_moment(&idx).unwrap();
            assert!((mean - exact).abs() <= 4.0 * se, "{idx}: {mean} vs {exact} (se {se})");
        }
    }

    #[test]
    fn polynomial_expectations() {
        let m = case2();
        let one = SparsePolynomial::constant(3, 1.0);
        assert_eq!(m.polynomial_expectation(&one).unwrap(), 1.0);
        let x1x2 = SparsePolynomial::monomial(mi(&[1, 1, 0]), 1.0);
        assert!((m.polynomial_expectation(&x1x2).unwrap() - 0.2).abs() < 1e-15);
        let ind = GaussianMeasure::identity(3).unwrap();
        assert_eq!(ind.polynomial_expectation(&x1x2).unwrap(), 0.0);
    }

    #[test]
    fn tilted_expectation_matches_lognormal_moments() {
        let m = GaussianMeasure::from_rows(&[vec![0.3, 0.1], vec![0.1, 0.2]]).unwrap();
        // E[exp(X1 + 2 X2)] = exp(½ (0.3 + 4·0.1 + 4·0.2))
        let one = SparsePolynomial::constant(2, 1.0);
        let got = m.tilted_expectation(&one, &[1.0, 2.0]).unwrap();
        assert!((got - (0.5f64 * 1.5).exp()).abs() < 1e-14);
        // E[X2 exp(X1)] = Σ_21 exp(Σ_11 / 2)
        let x2 = SparsePolynomial::monomial(mi(&[0, 1]), 1.0);
        let got = m.tilted_expectation(&x2, &[1.0, 0.0]).unwrap();
        assert!((got - 0.1 * (0.15f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn gaussian_map_values() {
        let m = case2();
        assert_eq!(m.gaussian_map(&[0.5, 0.5, 0.5]).unwrap(), vec![0.0, 0.0, 0.0]);
        let m1 = GaussianMeasure::from_rows(&[vec![4.0]]).unwrap();
        let x = m1.gaussian_map(&[0.975]).unwrap()[0];
        assert!((x - 3.919927969080108).abs() < 1e-9);
        assert!(matches!(m.gaussian_map(&[0.0, 0.5, 0.5]), Err(Error::Domain(_))));
        assert!(matches!(m.gaussian_map(&[0.5, 1.0, 0.5]), Err(Error::Domain(_))));
    }

    fn empirical_cov(points: &[Vec<f64>]) -> DMatrix<f64> {
        let n = points[0].len();
        let count = points.len() as f64;
        let mean: Vec<f64> = (0..n)
            .map(|i| points.iter().map(|p| p[i]).sum::<f64>() / count)
            .collect();
        DMatrix::from_fn(n, n, |i, j| {
            points
                .iter()
                .map(|p| (p[i] - mean[i]) * (p[j] - mean[j]))
                .sum::<f64>()
                / (count - 1.0)
        })
    }

    fn rel_frobenius(a: &DMatrix<f64>, b: &DMatrix<f64>) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn mapped_sobol_points_reproduce_covariance() {
        let m = GaussianMeasure::from_rows(&[
            vec![1.0, 0.5, 0.2],
            vec![0.5, 2.0, -0.4],
            vec![0.2, -0.4, 0.7],
        ])
        .unwrap();
        let pts = m.qmc_points(&QmcConfig::new(4096, 0, 3).unwrap()).unwrap();
        assert!(rel_frobenius(&empirical_cov(&pts), m.covariance()) < 0.02);
    }

    #[test]
    fn qmc_second_moments_converge() {
        let m = GaussianMeasure::from_rows(&[vec![1.0, 0.6], vec![0.6, 1.5]]).unwrap();
        let errors: Vec<f64> = [1024usize, 2048, 4096, 8192]
            .iter()
            .map(|&n| {
                let pts = m.qmc_points(&QmcConfig::new(n, 0, 2).unwrap()).unwrap();
                let mut worst: f64 = 0.0;
                for idx in crate::indexing::enumerate_total(2, 2).unwrap() {
                    let est = pts
                        .iter()
                        .map(|p| p[0].powi(idx.get(0) as i32) * p[1].powi(idx.get(1) as i32))
                        .sum::<f64>()
                        / n as f64;
                    worst = worst.max((est - m.monomial_moment(&idx).unwrap()).abs());
                }
                worst
            })
            .collect();
        let violations = errors.windows(2).filter(|w| w[1] > w[0]).count();
        assert!(violations <= 1, "{errors:?}");
        assert!(errors[3] < errors[0]);
    }

    #[test]
    fn random_draws_are_reproducible_and_calibrated() {
        let m = GaussianMeasure::identity(2).unwrap();
        assert_eq!(m.random_gaussian(5, 10), m.random_gaussian(5, 10));
        assert_ne!(m.random_gaussian(5, 10), m.random_gaussian(6, 10));
        let draws = m.random_gaussian(99, 100_000);
        for i in 0..2 {
            let mean = draws.iter().map(|p| p[i]).sum::<f64>() / draws.len() as f64;
            assert!(mean.abs() < 0.02);
        }
        let corr = GaussianMeasure::equicorrelated(3, 0.5).unwrap();
        let draws = corr.random_gaussian(3, 100_000);
        assert!(rel_frobenius(&empirical_cov(&draws), corr.covariance()) < 0.03);
    }

    #[test]
    fn exponential_kernel() {
        let coords: Vec<f64> = (0..11).map(|i| 0.2 * i as f64).collect();
        let var = (1.04f64).ln();
        let cov = exponential_field_covariance(&coords, var, 0.4).unwrap();
        for i in 0..11 {
            assert_eq!(cov[(i, i)], var);
        }
        assert!((cov[(0, 1)] - var * (-0.5f64).exp()).abs() < 1e-16);
        assert_eq!(cov, cov.transpose());
        assert!(GaussianMeasure::new(cov).is_ok());
        assert!(exponential_field_covariance(&coords, var, 0.0).is_err());
        assert!(exponential_field_covariance(&coords, -1.0, 0.4).is_err());
    }

    #[test]
    fn shared_memo_across_threads() {
        let m = case2();
        let idx = mi(&[4, 2, 2]);
        let expected = m.monomial_moment(&idx).unwrap();
        let fresh = GaussianMeasure::equicorrelated(3, 0.2).unwrap();
        let got: Vec<f64> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..4)
                .map(|_| s.spawn(|| fresh.monomial_moment(&idx).unwrap()))
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        assert!(got.iter().all(|&v| v == expected));
    }
}
