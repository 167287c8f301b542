//! Small dense SPD kernels: Cholesky with pivot diagnostics, triangular
//! solves, and power-iteration condition estimates.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Lower factor `L` with `L Lᵀ = A`, reading only the lower triangle of `A`.
pub(crate) fn cholesky_lower(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let mut l = DMatrix::<f64>::zeros(n, n);
    for j in 0..n {
        let mut d = a[(j, j)];
        for k in 0..j {
            d -= l[(j, k)] * l[(j, k)];
        }
        if !(d > 0.0) {
            return Err(Error::NotPositiveDefinite { pivot: j, value: d });
        }
        let d = d.sqrt();
        l[(j, j)] = d;
        for i in j + 1..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)];
            }
            l[(i, j)] = s / d;
        }
    }
    Ok(l)
}

/// Solves `L Lᵀ x = b`.
pub(crate) fn cholesky_solve(l: &DMatrix<f64>, b: &[f64]) -> Vec<f64> {
    let n = l.nrows();
    let mut y = b.to_vec();
    for i in 0..n {
        let mut s = y[i];
        for k in 0..i {
            s -= l[(i, k)] * y[k];
        }
        y[i] = s / l[(i, i)];
    }
    for i in (0..n).rev() {
        let mut s = y[i];
        for k in i + 1..n {
            s -= l[(k, i)] * y[k];
        }
        y[i] = s / l[(i, i)];
    }
    y
}

pub(crate) fn cholesky_inverse(l: &DMatrix<f64>) -> DMatrix<f64> {
    let n = l.nrows();
    let mut inv = DMatrix::<f64>::zeros(n, n);
    let mut e = vec![0.0; n];
    for j in 0..n {
        e.iter_mut().for_each(|v| *v = 0.0);
        e[j] = 1.0;
        let col = cholesky_solve(l, &e);
        for i in 0..n {
            inv[(i, j)] = col[i];
        }
    }
    // exact symmetry for downstream consumers
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (inv[(i, j)] + inv[(j, i)]);
            inv[(i, j)] = v;
            inv[(j, i)] = v;
        }
    }
    inv
}

/// Dominant eigenvalue magnitude of a symmetric matrix by power iteration.
pub(crate) fn spectral_radius(apply: impl Fn(&DVector<f64>) -> DVector<f64>, n: usize) -> f64 {
    // deterministic start with distinct entries, so it is not orthogonal to
    // the dominant eigenvector of the usual structured matrices
    let mut v = DVector::from_fn(n, |i, _| 1.0 + (i as f64 + 1.0).sqrt() / (n as f64 + 1.0));
    v /= v.norm();
    let mut lambda = 0.0;
    for _ in 0..1000 {
        let w = apply(&v);
        let norm = w.norm();
        if norm == 0.0 || !norm.is_finite() {
            return norm;
        }
        // Rayleigh quotient of the current unit vector
        let next = v.dot(&w).abs();
        v = w / norm;
        if (next - lambda).abs() <= 1e-12 * next {
            return next;
        }
        lambda = next;
    }
    lambda
}

/// Condition estimate `λmax(A) · λmax(A⁻¹)` of an SPD matrix given its inverse.
pub(crate) fn condition_estimate(a: &DMatrix<f64>, a_inv: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    spectral_radius(|v| a * v, n) * spectral_radius(|v| a_inv * v, n)
}

/// Condition estimate for a matrix that may not be invertible by Cholesky.
pub(crate) fn condition_estimate_general(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    let upper = spectral_radius(|v| a * v, n);
    match a.clone().lu().try_inverse() {
        Some(inv) => upper * spectral_radius(|v| &inv * v, n),
        None => f64::INFINITY,
    }
}
