//! Expansion builds, surrogate statistics, and sampling.
//!
//! Degree `l` coefficients solve their own `K_{N,l} × K_{N,l}` system
//! `A_l c_l = b_l`, with `b_l = E[y Ψ_j]` over the degree-`l` indices.
//! Degrees never couple, so no system over the full basis is formed.

mod build;
mod io;
mod model;
mod output;

pub use build::{
    build_pce, rhs_exact, rhs_qmc, solve_degree, BuildMeta, Method, RESIDUAL_TOLERANCE,
};
pub use model::{
    l1_variance_error, Bin, DegreeVariance, Histogram, MomentReport, PceModel, SurrogateSample,
    MAX_BINS,
};
pub use output::{Evaluate, ExpPolynomial, OutputFunction};
