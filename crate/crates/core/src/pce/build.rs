use serde::{Deserialize, Serialize};

use super::model::PceModel;
use super::output::OutputFunction;
use crate::error::{Error, Result, Stage};
use crate::gaussian::{GaussianMeasure, QmcConfig};
use crate::hermite::{build_basis, HermiteBasis};
use crate::moments::{assemble, GramMatrix};

/// Relative tolerance on `‖A c - b‖∞ / (1 + ‖b‖∞)` for every degree solve.
pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// How `E[y Ψ_j]` is obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Closed-form Gaussian integration; needs a polynomial or exp-polynomial
    /// output.
    Exact,
    /// Sobol points mapped to the measure, shared by every right-hand side.
    Qmc(QmcConfig),
}

/// Provenance stored with a model.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BuildMeta {
    /// `"exact"` or `"qmc"`.
    pub method: String,
    pub qmc_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub qmc_skip: Option<usize>,
    /// `‖A_l c_l - b_l‖∞` for `l = 0..=m`.
    pub residuals: Vec<f64>,
}

fn check_dimension(measure: &GaussianMeasure, y: &OutputFunction) -> Result<()> {
    if y.dimension() != measure.dimension() {
        return Err(Error::Dimension {
            expected: measure.dimension(),
            got: y.dimension(),
        });
    }
    Ok(())
}

/// `b_{l,p} = E[y Ψ_{j_p}]` over the degree-`l` basis, in closed form.
pub fn rhs_exact(
    measure: &GaussianMeasure,
    basis: &HermiteBasis,
    y: &OutputFunction,
    l: u32,
) -> Result<Vec<f64>> {
    check_dimension(measure, y)?;
    basis
        .degree(l)
        .iter()
        .map(|e| Ok(y.derivative_expectation(measure, &e.index)? / e.norm_sq.sqrt()))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.at(Stage::RightHandSide, l))
}

/// Output values at mapped Sobol points, computed once per build.
pub(crate) struct QmcSamples {
    points: Vec<Vec<f64>>,
    values: Vec<f64>,
}

impl QmcSamples {
    pub(crate) fn new(measure: &GaussianMeasure, y: &OutputFunction, config: &QmcConfig) -> Result<Self> {
        check_dimension(measure, y)?;
        let points = measure.qmc_points(config)?;
        let values = y.evaluate_all(&points)?;
        Ok(QmcSamples { points, values })
    }

    fn rhs(&self, basis: &HermiteBasis, l: u32) -> Vec<f64> {
        let k = basis.degree(l).len();
        let mut b = vec![0.0; k];
        for (x, &y) in self.points.iter().zip(&self.values) {
            for (acc, psi) in b.iter_mut().zip(basis.evaluate_degree(l, x)) {
                *acc += y * psi;
            }
        }
        let n = self.points.len() as f64;
        b.iter_mut().for_each(|v| *v /= n);
        b
    }
}

/// `b_{l,p} ≈ (1/L) Σ_k y(x_k) Ψ_{j_p}(x_k)` over `L` mapped Sobol points.
pub fn rhs_qmc(
    measure: &GaussianMeasure,
    basis: &HermiteBasis,
    y: &OutputFunction,
    l: u32,
    config: &QmcConfig,
) -> Result<Vec<f64>> {
    let samples = QmcSamples::new(measure, y, config).map_err(|e| e.at(Stage::RightHandSide, l))?;
    Ok(samples.rhs(basis, l))
}

/// Solves `A_l c_l = b_l`, failing when the residual exceeds
/// [`RESIDUAL_TOLERANCE`]. Returns `c_l` and the residual.
pub fn solve_degree(gram: &GramMatrix, b: &[f64]) -> Result<(Vec<f64>, f64)> {
    let l = gram.degree();
    let (c, residual) = gram.solve(b).map_err(|e| e.at(Stage::Solve, l))?;
    let b_norm = b.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tolerance = RESIDUAL_TOLERANCE * (1.0 + b_norm);
    if !(residual <= tolerance) {
        return Err(Error::Residual {
            degree: l,
            residual,
            tolerance,
        });
    }
    Ok((c, residual))
}

/// Builds the order-`m` expansion of `y`, one uncoupled solve per degree.
pub fn build_pce(
    measure: &GaussianMeasure,
    y: &OutputFunction,
    m: u32,
    method: &Method,
) -> Result<PceModel> {
    check_dimension(measure, y)?;
    if *method == Method::Exact && !y.has_closed_form() {
        return Err(Error::Invalid(
            "the exact method needs a polynomial or exp-polynomial output; use QMC".into(),
        ));
    }
    let basis = build_basis(measure, m)?;
    let samples = match method {
        Method::Exact => None,
        Method::Qmc(config) => Some(QmcSamples::new(measure, y, config)?),
    };
    let mut grams = Vec::with_capacity(m as usize + 1);
    let mut coefficients = Vec::with_capacity(m as usize + 1);
    let mut residuals = Vec::with_capacity(m as usize + 1);
    for l in 0..=m {
        let level = basis.degree(l);
        let indices = level.iter().map(|e| e.index.clone()).collect();
        let norms: Vec<f64> = level.iter().map(|e| e.norm_sq).collect();
        let gram = assemble(measure, l, indices, &norms)?;
        let b = match &samples {
            None => rhs_exact(measure, &basis, y, l)?,
            Some(s) => s.rhs(&basis, l),
        };
        let (c, residual) = solve_degree(&gram, &b).map_err(|e| e.at(Stage::Solve, l))?;
        grams.push(gram);
        coefficients.push(c);
        residuals.push(residual);
    }
    let meta = match method {
        Method::Exact => BuildMeta {
            method: "exact".into(),
            qmc_size: None,
            qmc_skip: None,
            residuals,
        },
        Method::Qmc(config) => BuildMeta {
            method: "qmc".into(),
            qmc_size: Some(config.sample_count),
            qmc_skip: Some(config.skip),
            residuals,
        },
    };
    PceModel::from_parts(basis, grams, coefficients, meta)
}
