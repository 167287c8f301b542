//! Hermite polynomials generated by a correlated Gaussian density.
//!
//! `H_j(x; Σ)` is defined through derivatives of the density,
//! `H_j = (-1)^|j| φ⁻¹ ∂^j φ`. Differentiating once more gives the recursion
//!
//! ```text
//! H_{j+e_i} = (Σ⁻¹x)_i H_j - ∂H_j/∂x_i,    H_0 = 1,
//! ```
//!
//! which is what [`hermite_polynomial`] runs. The standardized polynomials
//! are `Ψ_j = H_j / sqrt(E[H_j²])`.

mod poly;

use std::collections::HashMap;

pub use poly::{SparsePolynomial, PRUNE};

use crate::error::{Error, Result};
use crate::gaussian::GaussianMeasure;
use crate::indexing::{enumerate_degree, MultiIndex};
use crate::moments::norm_sq_h;

/// `(Σ⁻¹x)_i` for every axis.
fn precision_forms(measure: &GaussianMeasure) -> Vec<SparsePolynomial> {
    let p = measure.precision();
    (0..measure.dimension())
        .map(|i| {
            let row: Vec<f64> = (0..p.ncols()).map(|k| p[(i, k)]).collect();
            SparsePolynomial::linear(&row)
        })
        .collect()
}

fn step(forms: &[SparsePolynomial], h: &SparsePolynomial, axis: usize) -> Result<SparsePolynomial> {
    forms[axis].mul(h)?.sub(&h.diff(axis)?)
}

/// The axis whose removal gives the recursion parent of `j`: the last
/// nonzero entry, so paths fill axis 1 first.
fn parent_axis(j: &MultiIndex) -> Option<usize> {
    j.entries().iter().rposition(|&e| e > 0)
}

/// `H_j(x; Σ)` as a sparse polynomial of degree `|j|`.
pub fn hermite_polynomial(measure: &GaussianMeasure, j: &MultiIndex) -> Result<SparsePolynomial> {
    let dim = measure.dimension();
    if j.len() != dim {
        return Err(Error::Dimension {
            expected: dim,
            got: j.len(),
        });
    }
    let forms = precision_forms(measure);
    let mut h = SparsePolynomial::constant(dim, 1.0);
    for (axis, &e) in j.entries().iter().enumerate() {
        for _ in 0..e {
            h = step(&forms, &h, axis)?;
        }
    }
    Ok(h)
}

/// One basis element: the index, `H_j`, `E[H_j²]`, and `Ψ_j`.
#[derive(Clone, Debug)]
pub struct BasisEntry {
    pub index: MultiIndex,
    pub hermite: SparsePolynomial,
    pub norm_sq: f64,
    pub standardized: SparsePolynomial,
}

/// All `H_j`, `Ψ_j` with `|j| ≤ m`, grouped by degree, grlex within a degree.
#[derive(Clone, Debug)]
pub struct HermiteBasis {
    measure: GaussianMeasure,
    degrees: Vec<Vec<BasisEntry>>,
}

impl HermiteBasis {
    pub fn measure(&self) -> &GaussianMeasure {
        &self.measure
    }

    pub fn dimension(&self) -> usize {
        self.measure.dimension()
    }

    pub fn max_degree(&self) -> u32 {
        (self.degrees.len() - 1) as u32
    }

    /// Entries of total degree `l`, grlex order.
    pub fn degree(&self, l: u32) -> &[BasisEntry] {
        self.degrees.get(l as usize).map_or(&[], Vec::as_slice)
    }

    /// All entries in basis rank order.
    pub fn entries(&self) -> impl Iterator<Item = &BasisEntry> + '_ {
        self.degrees.iter().flatten()
    }

    pub fn len(&self) -> usize {
        self.degrees.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, index: &MultiIndex) -> Option<&BasisEntry> {
        self.degree(index.degree())
            .iter()
            .find(|e| &e.index == index)
    }

    /// `Ψ_j(x)` for every entry of degree `l`.
    pub(crate) fn evaluate_degree(&self, l: u32, x: &[f64]) -> Vec<f64> {
        self.degree(l)
            .iter()
            .map(|e| e.standardized.evaluate_unchecked(x))
            .collect()
    }
}

/// Builds `H_j`, `E[H_j²]`, and `Ψ_j` for every `|j| ≤ max_degree`.
pub fn build_basis(measure: &GaussianMeasure, max_degree: u32) -> Result<HermiteBasis> {
    let dim = measure.dimension();
    let forms = precision_forms(measure);
    let mut cache: HashMap<MultiIndex, SparsePolynomial> = HashMap::new();
    cache.insert(MultiIndex::zero(dim), SparsePolynomial::constant(dim, 1.0));
    let mut degrees = Vec::with_capacity(max_degree as usize + 1);
    for l in 0..=max_degree {
        let indices = enumerate_degree(dim, l).map_err(|e| e.at(crate::Stage::Basis, l))?;
        let mut level = Vec::with_capacity(indices.len());
        for j in indices {
            let hermite = match parent_axis(&j) {
                None => SparsePolynomial::constant(dim, 1.0),
                Some(axis) => {
                    let parent = j.decremented(axis).expect("axis is nonzero");
                    step(&forms, &cache[&parent], axis)?
                }
            };
            let norm_sq = norm_sq_h(measure, &j).map_err(|e| e.at(crate::Stage::Basis, l))?;
            let standardized = hermite.scale(1.0 / norm_sq.sqrt());
            cache.insert(j.clone(), hermite.clone());
            level.push(BasisEntry {
                index: j,
                hermite,
                norm_sq,
                standardized,
            });
        }
        // parents one degree down are no longer needed
        if l >= 1 {
            cache.retain(|k, _| k.degree() >= l);
        }
        degrees.push(level);
    }
    Ok(HermiteBasis {
        measure: measure.clone(),
        degrees,
    })
}

/// `Σ_{|j| ≤ cap} t^j / j! · H_j(x)`, a truncation of the generating
/// function `exp(tᵀΣ⁻¹x - ½ tᵀΣ⁻¹t)`.
pub fn generating_function_partial_sum(
    measure: &GaussianMeasure,
    t: &[f64],
    x: &[f64],
    cap: u32,
) -> Result<f64> {
    let dim = measure.dimension();
    for v in [t, x] {
        if v.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                got: v.len(),
            });
        }
    }
    let basis = build_hermite_only(measure, cap)?;
    let mut total = 0.0;
    for (j, h) in basis {
        let mut w = 1.0 / j.factorial()? as f64;
        for (&ti, &e) in t.iter().zip(j.entries()) {
            w *= ti.powi(e as i32);
        }
        if w != 0.0 {
            total += w * h.evaluate_unchecked(x);
        }
    }
    Ok(total)
}

/// `H_j` for all `|j| ≤ cap`, without norms.
fn build_hermite_only(
    measure: &GaussianMeasure,
    cap: u32,
) -> Result<Vec<(MultiIndex, SparsePolynomial)>> {
    let dim = measure.dimension();
    let forms = precision_forms(measure);
    let mut out: Vec<(MultiIndex, SparsePolynomial)> = Vec::new();
    let mut cache: HashMap<MultiIndex, usize> = HashMap::new();
    for l in 0..=cap {
        for j in enumerate_degree(dim, l)? {
            let h = match parent_axis(&j) {
                None => SparsePolynomial::constant(dim, 1.0),
                Some(axis) => {
                    let parent = j.decremented(axis).expect("axis is nonzero");
                    step(&forms, &out[cache[&parent]].1, axis)?
                }
            };
            cache.insert(j.clone(), out.len());
            out.push((j, h));
        }
    }
    Ok(out)
}
