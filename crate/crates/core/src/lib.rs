//! Polynomial chaos expansion for dependent Gaussian inputs.
//!
//! The classical Wiener–Hermite expansion assumes independent standard
//! normal inputs. This crate builds the expansion directly in correlated
//! Gaussian variables `X ~ N(0, Σ)`: the basis is the family of multivariate
//! Hermite polynomials generated by the density of `X` itself, which is only
//! *weakly* orthogonal (polynomials of different total degree are orthogonal,
//! polynomials of the same degree generally are not). Coefficients are found
//! by solving one small symmetric positive-definite system per degree.
//!
//! ```
//! use gpce::{GaussianMeasure, OutputFunction, Method, build_pce, SparsePolynomial};
//!
//! // X1, X2 with unit variances and correlation 0.3; y = 1 + x1 x2
//! let measure = GaussianMeasure::from_rows(&[vec![1.0, 0.3], vec![0.3, 1.0]])?;
//! let y: SparsePolynomial = "{\"0,0\": 1.0, \"1,1\": 1.0}".parse()?;
//! let model = build_pce(&measure, &OutputFunction::from(y), 2, &Method::Exact)?;
//!
//! assert!((model.mean() - 1.3).abs() < 1e-12);
//! // var(X1 X2) = 1 + ρ²
//! assert!((model.variance().variance - 1.09).abs() < 1e-12);
//! # Ok::<(), gpce::Error>(())
//! ```
//!
//! Module map:
//!
//! - [`indexing`]: multi-indices, graded lexicographic order, index matrices.
//! - [`gaussian`]: the measure, exact Gaussian moments, Sobol points, sampling.
//! - [`hermite`]: sparse polynomials and the Hermite basis.
//! - [`moments`]: closed-form second moments and per-degree Gram matrices.
//! - [`pce`]: expansion builds, statistics, surrogate sampling, model files.
//! - [`scenarios`]: the reference problems used by the validation suites.
//! - [`validate`]: the validation suites behind `gpce validate`.

pub mod error;
pub mod gaussian;
pub mod hermite;
pub mod indexing;
pub(crate) mod linalg;
pub mod moments;
pub mod pce;
pub mod scenarios;
pub mod validate;

pub use error::{Error, Result, Stage};
pub use gaussian::{exponential_field_covariance, sobol_points, GaussianMeasure, QmcConfig};
pub use hermite::{build_basis, hermite_polynomial, HermiteBasis, SparsePolynomial};
pub use indexing::{
    count_degree, count_total, enumerate_degree, enumerate_margin_matrices, enumerate_total,
    grlex_compare,
    IndexMatrix, MultiIndex,
};
pub use moments::{format_sig, gram_matrix, norm_sq_h, second_moment_h, second_moment_psi, GramMatrix};
pub use pce::{
    build_pce, l1_variance_error, rhs_exact, rhs_qmc, solve_degree, Evaluate, ExpPolynomial,
    Method, MomentReport, OutputFunction, PceModel,
};
