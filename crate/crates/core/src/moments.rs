//! Closed-form second moments of the Hermite polynomials and the per-degree
//! Gram matrices.
//!
//! For `|j| = |k|`,
//!
//! ```text
//! E[H_j H_k] = j! k! Σ_θ Π_pq (Σ⁻¹_pq)^θ_pq / θ_pq!
//! ```
//!
//! where θ ranges over the nonnegative integer matrices with row sums `j`
//! and column sums `k`. Polynomials of different total degree are orthogonal.

use nalgebra::DMatrix;

use crate::error::{Error, Result, Stage};
use crate::gaussian::GaussianMeasure;
use crate::indexing::{enumerate_degree, enumerate_margin_matrices, IndexMatrix, MultiIndex};
use crate::linalg;

fn check_len(measure: &GaussianMeasure, j: &MultiIndex) -> Result<()> {
    if j.len() != measure.dimension() {
        return Err(Error::Dimension {
            expected: measure.dimension(),
            got: j.len(),
        });
    }
    Ok(())
}

fn theta_term(precision: &DMatrix<f64>, theta: &IndexMatrix) -> Result<f64> {
    let n = theta.dim();
    let mut term = 1.0 / theta.factorial()? as f64;
    for p in 0..n {
        for q in 0..n {
            let e = theta.get(p, q);
            if e > 0 {
                term *= precision[(p, q)].powi(e as i32);
            }
        }
    }
    Ok(term)
}

/// `E[H_j H_k]`.
pub fn second_moment_h(measure: &GaussianMeasure, j: &MultiIndex, k: &MultiIndex) -> Result<f64> {
    check_len(measure, j)?;
    check_len(measure, k)?;
    if j.degree() != k.degree() {
        return Ok(0.0);
    }
    let precision = measure.precision();
    let mut sum = 0.0;
    for theta in enumerate_margin_matrices(j, k)? {
        sum += theta_term(precision, &theta)?;
    }
    Ok(j.factorial()? as f64 * k.factorial()? as f64 * sum)
}

/// `E[H_j²]`, strictly positive.
pub fn norm_sq_h(measure: &GaussianMeasure, j: &MultiIndex) -> Result<f64> {
    let v = second_moment_h(measure, j, j)?;
    if !(v > 0.0) {
        return Err(Error::Internal(format!(
            "second moment of H_{j} evaluated to {v:e}"
        )));
    }
    Ok(v)
}

/// `E[Ψ_j Ψ_k]`; exactly 1 on the diagonal.
pub fn second_moment_psi(measure: &GaussianMeasure, j: &MultiIndex, k: &MultiIndex) -> Result<f64> {
    if j == k {
        check_len(measure, j)?;
        return Ok(1.0);
    }
    let h = second_moment_h(measure, j, k)?;
    if h == 0.0 {
        return Ok(0.0);
    }
    Ok(h / (norm_sq_h(measure, j)? * norm_sq_h(measure, k)?).sqrt())
}

/// `A_l = [E[Ψ_j Ψ_k]]` over the degree-`l` indices in grlex order, with
/// its Cholesky factor.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    degree: u32,
    indices: Vec<MultiIndex>,
    entries: DMatrix<f64>,
    chol_lower: DMatrix<f64>,
}

impl GramMatrix {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `K_{N,l}`.
    pub fn order(&self) -> usize {
        self.indices.len()
    }

    pub fn indices(&self) -> &[MultiIndex] {
        &self.indices
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// Power-iteration estimate of the 2-norm condition number.
    pub fn condition_estimate(&self) -> f64 {
        let inv = linalg::cholesky_inverse(&self.chol_lower);
        linalg::condition_estimate(&self.entries, &inv)
    }

    /// Solves `A c = b`, returning `c` and `‖A c - b‖∞`.
    pub fn solve(&self, b: &[f64]) -> Result<(Vec<f64>, f64)> {
        if b.len() != self.order() {
            return Err(Error::Dimension {
                expected: self.order(),
                got: b.len(),
            });
        }
        let c = linalg::cholesky_solve(&self.chol_lower, b);
        let residual = self
            .apply(&c)
            .iter()
            .zip(b)
            .map(|(ac, bv)| (ac - bv).abs())
            .fold(0.0, f64::max);
        Ok((c, residual))
    }

    fn apply(&self, c: &[f64]) -> Vec<f64> {
        let n = self.order();
        (0..n)
            .map(|i| (0..n).map(|k| self.entries[(i, k)] * c[k]).sum())
            .collect()
    }

    /// `cᵀ A c`.
    pub fn quadratic_form(&self, c: &[f64]) -> f64 {
        self.apply(c).iter().zip(c).map(|(a, b)| a * b).sum()
    }

    /// CSV with a header row of index labels.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let header: Vec<String> = self.indices.iter().map(|j| format!("\"{}\"", j.label())).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for i in 0..self.order() {
            let row: Vec<String> = (0..self.order())
                .map(|k| format_sig(self.entries[(i, k)]))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Twelve significant digits, trailing zeros trimmed.
pub fn format_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return v.to_string();
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        let s = format!("{v:.11e}");
        let (mantissa, e) = s.split_once('e').expect("exponent form");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{e}")
    }
}

/// Gram matrix of degree `l`.
pub fn gram_matrix(measure: &GaussianMeasure, l: u32) -> Result<GramMatrix> {
    let indices = enumerate_degree(measure.dimension(), l).map_err(|e| e.at(Stage::Gram, l))?;
    let norms = indices
        .iter()
        .map(|j| norm_sq_h(measure, j))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.at(Stage::Gram, l))?;
    assemble(measure, l, indices, &norms)
}

/// Gram matrix from precomputed `E[H_j²]`, one per index.
pub(crate) fn assemble(
    measure: &GaussianMeasure,
    l: u32,
    indices: Vec<MultiIndex>,
    norms: &[f64],
) -> Result<GramMatrix> {
    let n = indices.len();
    let mut entries = DMatrix::<f64>::identity(n, n);
    for p in 0..n {
        for q in 0..p {
            let h = second_moment_h(measure, &indices[p], &indices[q])
                .map_err(|e| e.at(Stage::Gram, l))?;
            let v = h / (norms[p] * norms[q]).sqrt();
            entries[(p, q)] = v;
            entries[(q, p)] = v;
        }
    }
    let chol_lower = match linalg::cholesky_lower(&entries) {
        Ok(f) => f,
        Err(_) => {
            let estimate = linalg::condition_estimate_general(&entries);
            return Err(Error::IllConditioned {
                estimate,
                limit: crate::gaussian::MAX_CONDITION,
            }
            .at(Stage::Gram, l));
        }
    };
    Ok(GramMatrix {
        degree: l,
        indices,
        entries,
        chol_lower,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::hermite_polynomial;
    use crate::indexing::enumerate_total;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec()).unwrap()
    }

    #[test]
    fn scalar_and_identity_examples() {
        let one = GaussianMeasure::identity(1).unwrap();
        assert_eq!(second_moment_h(&one, &mi(&[3]), &mi(&[3])).unwrap(), 6.0);
        let mut fact = 1.0;
        for n in 0..=6u32 {
            if n > 0 {
                fact *= n as f64;
            }
            assert_eq!(norm_sq_h(&one, &mi(&[n])).unwrap(), fact);
        }
        let id2 = GaussianMeasure::identity(2).unwrap();
        assert_eq!(second_moment_h(&id2, &mi(&[1, 0]), &mi(&[0, 1])).unwrap(), 0.0);
        assert_eq!(second_moment_h(&id2, &mi(&[1, 0]), &mi(&[1, 1])).unwrap(), 0.0);
        assert_eq!(norm_sq_h(&id2, &mi(&[0, 0])).unwrap(), 1.0);
    }

    #[test]
    fn equicorrelated_examples() {
        let m = GaussianMeasure::equicorrelated(3, 0.2).unwrap();
        assert!((norm_sq_h(&m, &mi(&[1, 0, 0])).unwrap() - 15.0 / 14.0).abs() < 1e-14);
        let psi = second_moment_psi(&m, &mi(&[1, 0, 0]), &mi(&[0, 1, 0])).unwrap();
        assert!((psi + 1.0 / 6.0).abs() < 1e-14);
        assert_eq!(second_moment_psi(&m, &mi(&[2, 0, 0]), &mi(&[2, 0, 0])).unwrap(), 1.0);
        let g = gram_matrix(&m, 1).unwrap();
        for p in 0..3 {
            for q in 0..3 {
                let want = if p == q { 1.0 } else { -1.0 / 6.0 };
                assert!((g.entries()[(p, q)] - want).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn identity_gram_is_identity() {
        let id = GaussianMeasure::identity(3).unwrap();
        for l in 0..=3 {
            let g = gram_matrix(&id, l).unwrap();
            assert_eq!(g.entries(), &DMatrix::identity(g.order(), g.order()));
        }
        let g0 = gram_matrix(&GaussianMeasure::equicorrelated(3, 0.5).unwrap(), 0).unwrap();
        assert_eq!(g0.order(), 1);
        assert_eq!(g0.entries()[(0, 0)], 1.0);
    }

    fn random_spd(rng: &mut ChaCha8Rng, n: usize) -> GaussianMeasure {
        let b = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
        GaussianMeasure::new(&b * b.transpose() + DMatrix::identity(n, n) * 0.3).unwrap()
    }

    #[test]
    fn closed_form_matches_moment_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for trial in 0..20 {
            let n = 1 + trial % 3;
            let m = random_spd(&mut rng, n);
            let idx = enumerate_total(n, 4).unwrap();
            let hs: Vec<_> = idx.iter().map(|j| hermite_polynomial(&m, j).unwrap()).collect();
            for (a, j) in idx.iter().enumerate() {
                for (b, k) in idx.iter().enumerate().skip(a) {
                    let closed = second_moment_h(&m, j, k).unwrap();
                    let oracle = m.polynomial_expectation(&hs[a].mul(&hs[b]).unwrap()).unwrap();
                    if j.degree() != k.degree() {
                        assert_eq!(closed, 0.0);
                        assert!(oracle.abs() <= 1e-10, "{j} {k}: {oracle:e}");
                    } else {
                        let scale = closed.abs().max(norm_sq_h(&m, j).unwrap().sqrt() * norm_sq_h(&m, k).unwrap().sqrt() * 1e-3);
                        assert!((closed - oracle).abs() <= 1e-9 * scale, "{j} {k}: {closed} vs {oracle}");
                    }
                }
            }
        }
    }

    #[test]
    fn gram_conditioning_grows_with_correlation() {
        let mut last = 0.0;
        for rho in [0.0, 0.2, 0.5, 0.8, 0.95] {
            let m = GaussianMeasure::equicorrelated(3, rho).unwrap();
            for l in 0..=4 {
                gram_matrix(&m, l).unwrap();
            }
            let c = gram_matrix(&m, 2).unwrap().condition_estimate();
            assert!(c >= last, "rho {rho}: {c} < {last}");
            last = c;
        }
    }

    #[test]
    fn solve_and_quadratic_form() {
        let m = GaussianMeasure::equicorrelated(3, 0.2).unwrap();
        let g = gram_matrix(&m, 1).unwrap();
        let (c, r) = g.solve(&[1.0, 2.0, 3.0]).unwrap();
        assert!(r < 1e-14);
        let q = g.quadratic_form(&c);
        let direct: f64 = c.iter().zip([1.0, 2.0, 3.0]).map(|(a, b)| a * b).sum();
        assert!((q - direct).abs() < 1e-12);
        assert!(g.solve(&[1.0]).is_err());
        let id = gram_matrix(&GaussianMeasure::identity(2).unwrap(), 1).unwrap();
        assert_eq!(id.solve(&[0.5, -2.0]).unwrap().0, vec![0.5, -2.0]);
    }

    #[test]
    fn csv_has_labelled_header() {
        let g = gram_matrix(&GaussianMeasure::equicorrelated(3, 0.2).unwrap(), 1).unwrap();
        let csv = g.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "\"1,0,0\",\"0,1,0\",\"0,0,1\"");
        assert_eq!(lines.next().unwrap(), "1,-0.166666666667,-0.166666666667");
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(12.0), "12");
        assert_eq!(format_sig(71.76), "71.76");
        assert_eq!(format_sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_sig(2.65667e-11), "2.65667e-11");
        assert_eq!(format_sig(-1e-20), "-1e-20");
        assert_eq!(format_sig(123456789012345.0), "1.23456789012e14");
    }
}
