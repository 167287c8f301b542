//! Reference problems with known answers.
//!
//! - Example 1: a quadratic in three unit-variance Gaussians under four
//!   correlation structures, with exact coefficients and moments.
//! - Example 2: the solution of `dy/dt = -(1 + X₁)(y - (1 + X₂))`, `y(0) = 0`,
//!   with `X ~ N(0, (1/16)[[1, ρ], [ρ, 1]])`.
//! - Example 3 (synthetic): an 11-dimensional lognormal-field integral on an
//!   exponentially correlated grid.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::gaussian::{exponential_field_covariance, GaussianMeasure};
use crate::hermite::SparsePolynomial;
use crate::indexing::MultiIndex;
use crate::pce::ExpPolynomial;

fn mi(v: &[u32]) -> MultiIndex {
    MultiIndex::new(v.to_vec()).expect("nonempty literal")
}

/// Correlations `(ρ₁₂, ρ₁₃, ρ₂₃)` of Example 1, cases 1 through 4.
pub fn example1_correlations(case: u8) -> Result<(f64, f64, f64)> {
    match case {
        1 => Ok((0.0, 0.0, 0.0)),
        2 => Ok((0.2, 0.2, 0.2)),
        3 => Ok((0.2, 0.4, 0.8)),
        4 => Ok((-0.2, 0.4, -0.8)),
        _ => Err(Error::Invalid(format!("Example 1 has cases 1-4, not {case}"))),
    }
}

pub fn example1_covariance(case: u8) -> Result<DMatrix<f64>> {
    let (r12, r13, r23) = example1_correlations(case)?;
    Ok(DMatrix::from_row_slice(
        3,
        3,
        &[1.0, r12, r13, r12, 1.0, r23, r13, r23, 1.0],
    ))
}

pub fn example1_measure(case: u8) -> Result<GaussianMeasure> {
    GaussianMeasure::new(example1_covariance(case)?)
}

/// `y = 12 + 4(x₁ + x₂ + x₃) + x₁x₂ + x₁x₃ + x₂x₃`.
pub fn example1_output() -> SparsePolynomial {
    SparsePolynomial::from_terms(
        3,
        [
            (mi(&[0, 0, 0]), 12.0),
            (mi(&[1, 0, 0]), 4.0),
            (mi(&[0, 1, 0]), 4.0),
            (mi(&[0, 0, 1]), 4.0),
            (mi(&[1, 1, 0]), 1.0),
            (mi(&[1, 0, 1]), 1.0),
            (mi(&[0, 1, 1]), 1.0),
        ],
    )
    .expect("fixed dimension")
}

/// Exact second-order coefficients of Example 1, basis rank order.
pub fn example1_coefficients(case: u8) -> Result<[f64; 10]> {
    let r = f64::sqrt;
    Ok(match case {
        1 => [12.0, 4.0, 4.0, 4.0, 0.0, 1.0, 1.0, 0.0, 1.0, 0.0],
        2 => {
            let a = 2.0 * r(42.0 / 5.0);
            let d = 33.0 / (35.0 * r(2.0));
            let o = 19.0 * r(37.0) / 70.0;
            [63.0 / 5.0, a, a, a, d, o, o, d, o, d]
        }
        3 => [
            67.0 / 5.0,
            16.0 / r(5.0),
            4.0 * r(35.0 / 3.0),
            44.0 * r(2.0 / 15.0),
            17.0 / (10.0 * r(2.0)),
            31.0 / 15.0 * r(11.0 / 2.0),
            32.0 * r(7.0) / 15.0,
            203.0 / (30.0 * r(2.0)),
            34.0 * r(23.0) / 15.0,
            76.0 * r(2.0) / 15.0,
        ],
        4 => [
            57.0 / 5.0,
            12.0 / r(5.0),
            0.0,
            4.0 * r(6.0 / 5.0),
            3.0 / (10.0 * r(2.0)),
            3.0 / 5.0 * r(11.0 / 2.0),
            -r(7.0) / 5.0,
            -49.0 / (10.0 * r(2.0)),
            7.0 * r(23.0) / 5.0,
            -12.0 * r(2.0) / 5.0,
        ],
        _ => return Err(Error::Invalid(format!("Example 1 has cases 1-4, not {case}"))),
    })
}

/// Exact `(mean, variance)` of Example 1.
pub fn example1_moments(case: u8) -> Result<(f64, f64)> {
    match case {
        1 => Ok((12.0, 51.0)),
        2 => Ok((63.0 / 5.0, 1794.0 / 25.0)),
        3 => Ok((67.0 / 5.0, 2514.0 / 25.0)),
        4 => Ok((57.0 / 5.0, 774.0 / 25.0)),
        _ => Err(Error::Invalid(format!("Example 1 has cases 1-4, not {case}"))),
    }
}

/// Input variance of both Example 2 variables.
pub const EXAMPLE2_VARIANCE: f64 = 1.0 / 16.0;

/// Correlations for which Example 2 is tabulated.
pub const EXAMPLE2_RHOS: [f64; 5] = [-0.9, -0.5, 0.0, 0.5, 0.9];

/// Variance errors of orders 1 through 6 at `ρ = 1/2`, `t = 1`.
pub const EXAMPLE2_ERRORS: [f64; 6] = [
    9.26928e-3,
    3.22487e-4,
    8.03445e-6,
    1.50027e-7,
    2.20588e-9,
    2.65667e-11,
];

fn check_rho(rho: f64) -> Result<()> {
    if !(rho > -1.0 && rho < 1.0) {
        return Err(Error::Domain(format!("correlation {rho} is outside (-1, 1)")));
    }
    Ok(())
}

fn check_t(t: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::Domain(format!("time {t} is outside [0, 1]")));
    }
    Ok(())
}

pub fn example2_covariance(rho: f64) -> Result<DMatrix<f64>> {
    check_rho(rho)?;
    let v = EXAMPLE2_VARIANCE;
    Ok(DMatrix::from_row_slice(2, 2, &[v, rho * v, rho * v, v]))
}

pub fn example2_measure(rho: f64) -> Result<GaussianMeasure> {
    GaussianMeasure::new(example2_covariance(rho)?)
}

/// `y(t; x) = (1 + x₂)(1 - exp(-(1 + x₁) t))`.
pub fn ode_solution(t: f64, x: &[f64]) -> f64 {
    (1.0 + x[1]) * (1.0 - (-(1.0 + x[0]) * t).exp())
}

/// [`ode_solution`] as `(1 + x₂) - e^{-t}(1 + x₂) exp(-t x₁)`.
pub fn example2_output(t: f64) -> Result<ExpPolynomial> {
    check_t(t)?;
    let p = SparsePolynomial::from_terms(2, [(mi(&[0, 0]), 1.0), (mi(&[0, 1]), 1.0)])
        .expect("fixed dimension");
    ExpPolynomial::new(2)
        .with_term(p.clone(), vec![0.0, 0.0])?
        .with_term(p.scale(-(-t).exp()), vec![-t, 0.0])
}

/// First two raw moments of the Example 2 solution.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OdeMoments {
    pub mean: f64,
    pub second_moment: f64,
}

impl OdeMoments {
    /// `E[y²] - E[y]²` from the raw moments. Loses about four digits to
    /// cancellation; [`ode_exact_variance`] does not.
    pub fn variance(&self) -> f64 {
        self.second_moment - self.mean * self.mean
    }
}

/// Closed-form `E[y(t)]` and `E[y(t)²]` for `t ∈ [0, 1]`, `ρ ∈ (-1, 1)`.
pub fn ode_exact_moments(t: f64, rho: f64) -> Result<OdeMoments> {
    check_t(t)?;
    check_rho(rho)?;
    let rt = rho * t;
    let mean = 1.0 + (rt / 16.0 - 1.0) * (t * t / 32.0 - t).exp();
    let second_moment = (-2.0 * t).exp() / 128.0
        * (136.0 * (2.0 * t).exp() - (t + t * t / 32.0).exp() * (272.0 + rt * (rt - 32.0))
            + 2.0 * (t * t / 8.0).exp() * (68.0 + rt * (rt - 16.0)));
    Ok(OdeMoments {
        mean,
        second_moment,
    })
}

/// `var[y(t)]` without subtracting the raw moments.
///
/// With `u = exp(-(1 + X₁)t)`, `s = t²σ²/2`, `a = ρt/8`:
///
/// ```text
/// var = σ² - 2 e^{s-t} (σ² - a/2 + a²/4)
///          + e^{2s-2t} [expm1(2s)((1 - a)² + σ²) + σ² - a + 3a²/4]
/// ```
///
/// The middle term is `2E[X₂(1 + X₂)u]` and the last is `var[(1 + X₂)u]`,
/// both by the Gaussian shift identity. Agrees with the raw-moment formulas
/// while keeping full double precision.
pub fn ode_exact_variance(t: f64, rho: f64) -> Result<f64> {
    check_t(t)?;
    check_rho(rho)?;
    let v = EXAMPLE2_VARIANCE;
    let s = 0.5 * t * t * v;
    let a = rho * t / 8.0;
    let cross = 2.0 * (s - t).exp() * (v - 0.5 * a + 0.25 * a * a);
    let bracket = (2.0 * s).exp_m1() * ((1.0 - a) * (1.0 - a) + v) + v - a + 0.75 * a * a;
    Ok(v - cross + (2.0 * (s - t)).exp() * bracket)
}

/// Grid, kernel, and output scale of the synthetic Example 3.
pub const EXAMPLE3_POINTS: usize = 11;
pub const EXAMPLE3_LENGTH: f64 = 2.0;
pub const EXAMPLE3_MEAN_THICKNESS: f64 = 0.01;
pub const EXAMPLE3_CV: f64 = 0.2;

/// Log-field variance `ln(1 + v²)`.
pub fn example3_log_variance() -> f64 {
    (1.0 + EXAMPLE3_CV * EXAMPLE3_CV).ln()
}

pub fn example3_coordinates() -> Vec<f64> {
    let h = EXAMPLE3_LENGTH / (EXAMPLE3_POINTS - 1) as f64;
    (0..EXAMPLE3_POINTS).map(|i| i as f64 * h).collect()
}

/// Trapezoid weights on [`example3_coordinates`].
pub fn example3_weights() -> Vec<f64> {
    let h = EXAMPLE3_LENGTH / (EXAMPLE3_POINTS - 1) as f64;
    (0..EXAMPLE3_POINTS)
        .map(|i| if i == 0 || i + 1 == EXAMPLE3_POINTS { h / 2.0 } else { h })
        .collect()
}

pub fn example3_covariance() -> Result<DMatrix<f64>> {
    exponential_field_covariance(
        &example3_coordinates(),
        example3_log_variance(),
        0.2 * EXAMPLE3_LENGTH,
    )
}

pub fn example3_measure() -> Result<GaussianMeasure> {
    GaussianMeasure::new(example3_covariance()?)
}

/// `y = Σ_i w_i c exp(x_i)` with `c = μ / sqrt(1 + v²)`, so each
/// `c exp(X_i)` has mean `μ` and coefficient of variation `v`.
pub fn example3_output() -> ExpPolynomial {
    let c = EXAMPLE3_MEAN_THICKNESS / (1.0 + EXAMPLE3_CV * EXAMPLE3_CV).sqrt();
    let mut y = ExpPolynomial::new(EXAMPLE3_POINTS);
    for (i, w) in example3_weights().into_iter().enumerate() {
        let mut rate = vec![0.0; EXAMPLE3_POINTS];
        rate[i] = 1.0;
        y = y
            .with_term(SparsePolynomial::constant(EXAMPLE3_POINTS, w * c), rate)
            .expect("fixed dimension");
    }
    y
}
