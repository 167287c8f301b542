//! Validation suites: golden-value comparisons and property sweeps.
//!
//! Every suite returns a [`SuiteReport`] of named checks. A relative
//! tolerance falls back to an absolute one when the expected value is zero.

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gaussian::GaussianMeasure;
use crate::hermite::{build_basis, hermite_polynomial, SparsePolynomial};
use crate::indexing::{enumerate_total, MultiIndex};
use crate::moments::{gram_matrix, second_moment_h};
use crate::pce::{build_pce, l1_variance_error, Method, OutputFunction};
use crate::scenarios;

/// One comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: f64,
    pub got: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    /// `|got - expected| ≤ tolerance · |expected|`, absolute when `expected = 0`.
    pub fn relative(name: impl Into<String>, expected: f64, got: f64, tolerance: f64) -> Self {
        let scale = if expected == 0.0 { 1.0 } else { expected.abs() };
        Check {
            name: name.into(),
            expected,
            got,
            tolerance,
            passed: (got - expected).abs() <= tolerance * scale,
        }
    }

    /// A yes/no property, reported as expected 1 and got 1 or 0.
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Check {
            name: name.into(),
            expected: 1.0,
            got: if ok { 1.0 } else { 0.0 },
            tolerance: 0.0,
            passed: ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str, checks: Vec<Check>) -> Self {
        SuiteReport {
            suite: suite.into(),
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 3] = ["example1", "example2", "properties"];

pub fn run_suite(name: &str) -> Result<SuiteReport> {
    match name {
        "example1" => example1(),
        "example2" => example2(),
        "properties" => properties(),
        other => Err(Error::Invalid(format!(
            "unknown suite {other:?}; expected one of {}",
            SUITES.join(", ")
        ))),
    }
}

/// Coefficients, means, and variances of the four Example 1 cases.
pub fn example1() -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let y = OutputFunction::from(scenarios::example1_output());
    for case in 1..=4u8 {
        let measure = scenarios::example1_measure(case)?;
        let model = build_pce(&measure, &y, 2, &Method::Exact)?;
        let want = scenarios::example1_coefficients(case)?;
        for ((j, got), expected) in model.coefficients().into_iter().zip(want) {
            checks.push(Check::relative(
                format!("case{case}/C({})", j.label()),
                expected,
                got,
                1e-10,
            ));
        }
        let (mean, variance) = scenarios::example1_moments(case)?;
        checks.push(Check::relative(format!("case{case}/mean"), mean, model.mean(), 1e-10));
        checks.push(Check::relative(
            format!("case{case}/variance"),
            variance,
            model.variance().variance,
            1e-10,
        ));
    }
    Ok(SuiteReport::new("example1", checks))
}

/// `e_m` for `m = 1..=6` at `t = 1` and the given correlation.
pub fn example2_errors(rho: f64) -> Result<Vec<f64>> {
    let measure = scenarios::example2_measure(rho)?;
    let y = OutputFunction::from(scenarios::example2_output(1.0)?);
    let exact = scenarios::ode_exact_variance(1.0, rho)?;
    (1..=6)
        .map(|m| l1_variance_error(exact, &build_pce(&measure, &y, m, &Method::Exact)?))
        .collect()
}

/// Least-squares slope of `log10 e_m` against `m`.
pub fn log_slope(errors: &[f64]) -> f64 {
    let n = errors.len() as f64;
    let xs: Vec<f64> = (1..=errors.len()).map(|m| m as f64).collect();
    let ys: Vec<f64> = errors.iter().map(|e| e.log10()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Variance errors at `ρ = 1/2` and the convergence trend at every `ρ`.
pub fn example2() -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let errors = example2_errors(0.5)?;
    for (m, (&got, &expected)) in errors.iter().zip(&scenarios::EXAMPLE2_ERRORS).enumerate() {
        let tolerance = if m == 5 { 1e-3 } else { 1e-6 };
        checks.push(Check::relative(format!("rho=0.5/e{}", m + 1), expected, got, tolerance));
    }
    for &rho in &scenarios::EXAMPLE2_RHOS {
        let errors = example2_errors(rho)?;
        let decreasing = errors.windows(2).all(|w| w[1] < w[0]);
        checks.push(Check::holds(format!("rho={rho}/strictly-decreasing"), decreasing));
        let slope = log_slope(&errors);
        checks.push(Check {
            name: format!("rho={rho}/log10-slope"),
            expected: -1.0,
            got: slope,
            tolerance: 0.0,
            passed: slope <= -1.0,
        });
    }
    Ok(SuiteReport::new("example2", checks))
}

fn random_spd(rng: &mut ChaCha8Rng, n: usize) -> Result<GaussianMeasure> {
    let b = DMatrix::from_fn(n, n, |_, _| rng.random_range(-1.0..1.0));
    GaussianMeasure::new(&b * b.transpose() + DMatrix::identity(n, n) * 0.3)
}

/// Random polynomial of total degree `degree` with coefficients in `[-1, 1]`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, dim: usize, degree: u32) -> Result<SparsePolynomial> {
    let terms: Vec<(MultiIndex, f64)> = enumerate_total(dim, degree)?
        .into_iter()
        .map(|j| (j, rng.random_range(-1.0..1.0)))
        .collect();
    SparsePolynomial::from_terms(dim, terms)
}

/// Closed-form moments against the moment oracle, Gram definiteness,
/// the independent-input reduction, and polynomial exactness.
pub fn properties() -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);

    // closed form vs oracle, |j|, |k| ≤ 3 on 6 random measures
    for trial in 0..6 {
        let n = 1 + trial % 3;
        let m = random_spd(&mut rng, n)?;
        let idx = enumerate_total(n, 3)?;
        let hs = idx
            .iter()
            .map(|j| hermite_polynomial(&m, j))
            .collect::<Result<Vec<_>>>()?;
        let mut worst: f64 = 0.0;
        for (a, j) in idx.iter().enumerate() {
            for (b, k) in idx.iter().enumerate() {
                let closed = second_moment_h(&m, j, k)?;
                let oracle = m.polynomial_expectation(&hs[a].mul(&hs[b])?)?;
                let scale = closed.abs().max(1.0);
                worst = worst.max((closed - oracle).abs() / scale);
            }
        }
        checks.push(Check::relative(format!("oracle/trial{trial}"), 0.0, worst, 1e-9));
    }

    for rho in [0.0, 0.2, 0.5, 0.8, 0.95] {
        let m = GaussianMeasure::equicorrelated(3, rho)?;
        let ok = (0..=4).all(|l| gram_matrix(&m, l).is_ok());
        checks.push(Check::holds(format!("gram-spd/rho={rho}"), ok));
    }

    let id = GaussianMeasure::identity(3)?;
    let basis = build_basis(&id, 3)?;
    for trial in 0..3 {
        let y = random_polynomial(&mut rng, 3, 3)?;
        let model = build_pce(&id, &OutputFunction::from(y.clone()), 3, &Method::Exact)?;
        let mut worst: f64 = 0.0;
        for e in basis.entries() {
            let direct = id.polynomial_expectation(&y.mul(&e.standardized)?)?;
            let got = model.coefficient(&e.index).unwrap_or(f64::NAN);
            worst = worst.max((got - direct).abs());
        }
        checks.push(Check::relative(format!("independent/trial{trial}"), 0.0, worst, 1e-10));
    }

    for trial in 0..3 {
        let n = 1 + trial % 3;
        let m = random_spd(&mut rng, n)?;
        let y = random_polynomial(&mut rng, n, 3)?;
        let model = build_pce(&m, &OutputFunction::from(y.clone()), 3, &Method::Exact)?;
        let diff = model.expand().max_coeff_diff(&y)?;
        checks.push(Check::relative(format!("exactness/trial{trial}"), 0.0, diff, 1e-9));
    }

    Ok(SuiteReport::new("properties", checks))
}
