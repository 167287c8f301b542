use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gaussian::GaussianMeasure;
use crate::hermite::SparsePolynomial;
use crate::indexing::MultiIndex;

/// A deterministic map `ℝᴺ → ℝ` supplied by the caller.
///
/// Implementations must return the same value for the same point. Unless
/// [`Evaluate::is_serial`] says otherwise, builds may call `evaluate` from
/// several threads at once.
pub trait Evaluate: Send + Sync {
    fn dimension(&self) -> usize;

    fn evaluate(&self, x: &[f64]) -> f64;

    /// When true, builds evaluate one point at a time on a single thread.
    fn is_serial(&self) -> bool {
        false
    }
}

struct FnOutput<F> {
    dim: usize,
    serial: bool,
    f: F,
}

impl<F> Evaluate for FnOutput<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    fn dimension(&self) -> usize {
        self.dim
    }

    fn evaluate(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }

    fn is_serial(&self) -> bool {
        self.serial
    }
}

/// `Σ_k p_k(x) exp(c_kᵀx)`: polynomials times Gaussian-friendly exponentials,
/// which still have closed-form expectations.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpPolynomial {
    dim: usize,
    terms: Vec<(SparsePolynomial, Vec<f64>)>,
}

impl ExpPolynomial {
    pub fn new(dim: usize) -> Self {
        ExpPolynomial {
            dim,
            terms: Vec::new(),
        }
    }

    /// Adds `p(x) exp(rateᵀx)`.
    pub fn with_term(mut self, p: SparsePolynomial, rate: Vec<f64>) -> Result<Self> {
        for got in [p.dimension(), rate.len()] {
            if got != self.dim {
                return Err(Error::Dimension {
                    expected: self.dim,
                    got,
                });
            }
        }
        self.terms.push((p, rate));
        Ok(self)
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &[(SparsePolynomial, Vec<f64>)] {
        &self.terms
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(p, c)| {
                let s: f64 = c.iter().zip(x).map(|(a, b)| a * b).sum();
                p.evaluate_unchecked(x) * s.exp()
            })
            .sum()
    }

    /// `E[∂ʲ self(X)]` in closed form, using `∂ᵢ(p e^{cᵀx}) = (∂ᵢp + cᵢp) e^{cᵀx}`.
    pub fn derivative_expectation(&self, measure: &GaussianMeasure, j: &MultiIndex) -> Result<f64> {
        let mut total = 0.0;
        for (p, c) in &self.terms {
            let mut q = p.clone();
            for (axis, &n) in j.entries().iter().enumerate() {
                for _ in 0..n {
                    q = q.diff(axis)?.axpy(c[axis], &q)?;
                }
            }
            total += measure.tilted_expectation(&q, c)?;
        }
        Ok(total)
    }

    /// `E[q(X) · self(X)]` in closed form.
    pub fn weighted_expectation(&self, measure: &GaussianMeasure, q: &SparsePolynomial) -> Result<f64> {
        let mut total = 0.0;
        for (p, c) in &self.terms {
            total += measure.tilted_expectation(&p.mul(q)?, c)?;
        }
        Ok(total)
    }
}

/// The quantity being expanded.
#[derive(Clone)]
pub enum OutputFunction {
    Polynomial(SparsePolynomial),
    ExpPolynomial(ExpPolynomial),
    Evaluator(Arc<dyn Evaluate>),
}

impl fmt::Debug for OutputFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OutputFunction::Polynomial(p) => f.debug_tuple("Polynomial").field(p).finish(),
            OutputFunction::ExpPolynomial(p) => f.debug_tuple("ExpPolynomial").field(p).finish(),
            OutputFunction::Evaluator(e) => f
                .debug_struct("Evaluator")
                .field("dimension", &e.dimension())
                .field("serial", &e.is_serial())
                .finish(),
        }
    }
}

impl From<SparsePolynomial> for OutputFunction {
    fn from(p: SparsePolynomial) -> Self {
        OutputFunction::Polynomial(p)
    }
}

impl From<ExpPolynomial> for OutputFunction {
    fn from(p: ExpPolynomial) -> Self {
        OutputFunction::ExpPolynomial(p)
    }
}

impl OutputFunction {
    /// Wraps a closure that may be called concurrently.
    pub fn from_fn<F>(dim: usize, f: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        OutputFunction::Evaluator(Arc::new(FnOutput {
            dim,
            serial: false,
            f,
        }))
    }

    /// Wraps a closure that must be called from one thread at a time.
    pub fn from_serial_fn<F>(dim: usize, f: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        OutputFunction::Evaluator(Arc::new(FnOutput {
            dim,
            serial: true,
            f,
        }))
    }

    pub fn dimension(&self) -> usize {
        match self {
            OutputFunction::Polynomial(p) => p.dimension(),
            OutputFunction::ExpPolynomial(p) => p.dimension(),
            OutputFunction::Evaluator(e) => e.dimension(),
        }
    }

    /// True when expectations against the basis are available in closed form.
    pub fn has_closed_form(&self) -> bool {
        !matches!(self, OutputFunction::Evaluator(_))
    }

    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension() {
            return Err(Error::Dimension {
                expected: self.dimension(),
                got: x.len(),
            });
        }
        Ok(match self {
            OutputFunction::Polynomial(p) => p.evaluate_unchecked(x),
            OutputFunction::ExpPolynomial(p) => p.evaluate(x),
            OutputFunction::Evaluator(e) => e.evaluate(x),
        })
    }

    fn is_serial(&self) -> bool {
        matches!(self, OutputFunction::Evaluator(e) if e.is_serial())
    }

    /// Values at every point, in order; each point is evaluated once.
    pub(crate) fn evaluate_all(&self, points: &[Vec<f64>]) -> Result<Vec<f64>> {
        if let Some(p) = points.iter().find(|p| p.len() != self.dimension()) {
            return Err(Error::Dimension {
                expected: self.dimension(),
                got: p.len(),
            });
        }
        let threads = if self.is_serial() {
            1
        } else {
            std::thread::available_parallelism()
                .map_or(1, |n| n.get())
                .min(points.len().div_ceil(256))
                .max(1)
        };
        let values: Vec<f64> = if threads == 1 {
            points.iter().map(|x| self.evaluate_point(x)).collect()
        } else {
            let chunk = points.len().div_ceil(threads);
            std::thread::scope(|s| {
                let handles: Vec<_> = points
                    .chunks(chunk)
                    .map(|part| s.spawn(move || part.iter().map(|x| self.evaluate_point(x)).collect::<Vec<_>>()))
                    .collect();
                handles
                    .into_iter()
                    .flat_map(|h| h.join().expect("output evaluation panicked"))
                    .collect()
            })
        };
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Evaluation { index, value });
        }
        Ok(values)
    }

    fn evaluate_point(&self, x: &[f64]) -> f64 {
        match self {
            OutputFunction::Polynomial(p) => p.evaluate_unchecked(x),
            OutputFunction::ExpPolynomial(p) => p.evaluate(x),
            OutputFunction::Evaluator(e) => e.evaluate(x),
        }
    }

    /// `E[q(X) y(X)]` in closed form.
    /// `E[∂ʲ y(X)]`, which equals `E[y(X) H_j(X)]` by Gaussian integration
    /// by parts and avoids the cancellation of expanding `y · H_j`.
    pub(crate) fn derivative_expectation(
        &self,
        measure: &GaussianMeasure,
        j: &MultiIndex,
    ) -> Result<f64> {
        match self {
            OutputFunction::Polynomial(p) => {
                let mut q = p.clone();
                for (axis, &n) in j.entries().iter().enumerate() {
                    for _ in 0..n {
                        q = q.diff(axis)?;
                    }
                }
                measure.polynomial_expectation(&q)
            }
            OutputFunction::ExpPolynomial(p) => p.derivative_expectation(measure, j),
            OutputFunction::Evaluator(_) => Err(Error::Invalid(
                "the exact method needs a polynomial or exp-polynomial output".into(),
            )),
        }
    }
}
