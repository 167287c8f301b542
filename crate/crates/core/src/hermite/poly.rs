use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::indexing::MultiIndex;

/// Coefficients below this magnitude are dropped after every operation.
pub const PRUNE: f64 = 1e-14;

/// Multivariate polynomial as a map from exponent vector to coefficient.
///
/// Terms iterate in basis rank order (degree ascending). The zero polynomial
/// has no terms.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePolynomial {
    dim: usize,
    terms: BTreeMap<MultiIndex, f64>,
}

impl SparsePolynomial {
    pub fn zero(dim: usize) -> Self {
        SparsePolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, value: f64) -> Self {
        Self::monomial(MultiIndex::zero(dim), value)
    }

    pub fn monomial(index: MultiIndex, coeff: f64) -> Self {
        let mut p = Self::zero(index.len());
        p.add_term(index, coeff);
        p.prune();
        p
    }

    /// The coordinate polynomial `x_axis`.
    pub fn variable(dim: usize, axis: usize) -> Self {
        Self::monomial(MultiIndex::unit(dim, axis), 1.0)
    }

    /// `Σ_k coeffs[k] x_k`.
    pub fn linear(coeffs: &[f64]) -> Self {
        let dim = coeffs.len();
        let mut p = Self::zero(dim);
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(MultiIndex::unit(dim, k), c);
        }
        p.prune();
        p
    }

    /// Builds from `(index, coeff)` pairs; repeated indices accumulate.
    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (MultiIndex, f64)>,
    ) -> Result<Self> {
        let mut p = Self::zero(dim);
        for (idx, c) in terms {
            if idx.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: idx.len(),
                });
            }
            p.add_term(idx, c);
        }
        p.prune();
        Ok(p)
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, f64)> + '_ {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    /// Coefficient of `x^index`, zero when absent.
    pub fn coeff(&self, index: &MultiIndex) -> f64 {
        self.terms.get(index).copied().unwrap_or(0.0)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(MultiIndex::degree).max().unwrap_or(0)
    }

    fn add_term(&mut self, index: MultiIndex, coeff: f64) {
        *self.terms.entry(index).or_insert(0.0) += coeff;
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| c.abs() >= PRUNE);
    }

    fn check(&self, other: &SparsePolynomial) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: other.dim,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePolynomial) -> Result<Self> {
        self.axpy(1.0, other)
    }

    pub fn sub(&self, other: &SparsePolynomial) -> Result<Self> {
        self.axpy(-1.0, other)
    }

    /// `self + a · other`.
    pub fn axpy(&self, a: f64, other: &SparsePolynomial) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (idx, &c) in &other.terms {
            out.add_term(idx.clone(), a * c);
        }
        out.prune();
        Ok(out)
    }

    pub fn scale(&self, a: f64) -> Self {
        let mut out = self.clone();
        out.terms.values_mut().for_each(|c| *c *= a);
        out.prune();
        out
    }

    pub fn mul(&self, other: &SparsePolynomial) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.dim);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.plus(b)?, ca * cb);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Formal partial derivative `∂/∂x_axis`.
    pub fn diff(&self, axis: usize) -> Result<Self> {
        if axis >= self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: axis + 1,
            });
        }
        let mut out = Self::zero(self.dim);
        for (idx, &c) in &self.terms {
            if let Some(lower) = idx.decremented(axis) {
                out.add_term(lower, c * idx.get(axis) as f64);
            }
        }
        out.prune();
        Ok(out)
    }

    /// `Σ coeff · x^j`, powers by repeated multiplication.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(self.evaluate_unchecked(x))
    }

    pub(crate) fn evaluate_unchecked(&self, x: &[f64]) -> f64 {
        let mut total = 0.0;
        for (idx, &c) in &self.terms {
            let mut term = c;
            for (&xi, &e) in x.iter().zip(idx.entries()) {
                for _ in 0..e {
                    term *= xi;
                }
            }
            total += term;
        }
        total
    }

    /// `p(x + s)` as a polynomial in `x`.
    pub fn shifted(&self, s: &[f64]) -> Result<Self> {
        if s.len() != self.dim {
            return Err(Error::Dimension {
                expected: self.dim,
                got: s.len(),
            });
        }
        let mut out = Self::zero(self.dim);
        for (idx, &c) in &self.terms {
            // expand Π (x_i + s_i)^{a_i} binomially, one axis at a time
            let mut partial: Vec<(Vec<u32>, f64)> = vec![(Vec::with_capacity(self.dim), c)];
            for (axis, &a) in idx.entries().iter().enumerate() {
                let mut next = Vec::with_capacity(partial.len() * (a as usize + 1));
                let mut binom = 1.0;
                for k in 0..=a {
                    let w = binom * s[axis].powi((a - k) as i32);
                    if w != 0.0 {
                        for (e, v) in &partial {
                            let mut e = e.clone();
                            e.push(k);
                            next.push((e, v * w));
                        }
                    }
                    binom = binom * (a - k) as f64 / (k + 1) as f64;
                }
                partial = next;
            }
            for (e, v) in partial {
                out.add_term(MultiIndex::new(e)?, v);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Largest absolute coefficient difference, over the union of supports.
    pub fn max_coeff_diff(&self, other: &SparsePolynomial) -> Result<f64> {
        Ok(self
            .sub(other)?
            .terms
            .values()
            .fold(0.0, |m, c| m.max(c.abs())))
    }

    /// JSON object mapping `"j1,…,jN"` labels to coefficients.
    pub fn to_json_value(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, &v)| (k.label(), serde_json::Value::from(v)))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json_value(value: &serde_json::Value) -> Result<Self> {
        let map = value
            .as_object()
            .ok_or_else(|| Error::Invalid("polynomial must be a JSON object".into()))?;
        let mut dim = None;
        let mut terms = Vec::with_capacity(map.len());
        for (label, v) in map {
            let idx: MultiIndex = label.parse()?;
            match dim {
                None => dim = Some(idx.len()),
                Some(d) if d != idx.len() => {
                    return Err(Error::Dimension {
                        expected: d,
                        got: idx.len(),
                    })
                }
                _ => {}
            }
            let c = v.as_f64().ok_or_else(|| {
                Error::Invalid(format!("coefficient of {label} is not a number"))
            })?;
            terms.push((idx, c));
        }
        let dim = dim.ok_or_else(|| {
            Error::Invalid("empty polynomial object has no dimension".into())
        })?;
        Self::from_terms(dim, terms)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json_value())
    }
}

/// Parses the JSON map form, e.g. `{"0,0": 1.0, "1,1": 2.0}`.
impl FromStr for SparsePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse {
            row: e.line(),
            col: e.column(),
            message: e.to_string(),
        })?;
        Self::from_json_value(&value)
    }
}
