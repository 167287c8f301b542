use serde::{Deserialize, Serialize};

use super::build::BuildMeta;
use crate::error::{Error, Result};
use crate::gaussian::GaussianMeasure;
use crate::hermite::{HermiteBasis, SparsePolynomial};
use crate::indexing::MultiIndex;
use crate::moments::GramMatrix;

/// Histograms never use more bins than this.
pub const MAX_BINS: usize = 512;

/// A built expansion `y_m = Σ_{|j| ≤ m} C_j Ψ_j`.
#[derive(Clone, Debug)]
pub struct PceModel {
    basis: HermiteBasis,
    grams: Vec<GramMatrix>,
    coefficients: Vec<Vec<f64>>,
    meta: BuildMeta,
}

/// Variance carried by the degree-`degree` terms, `c_lᵀ A_l c_l`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeVariance {
    pub degree: u32,
    pub variance: f64,
}

/// Mean and variance of the surrogate.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MomentReport {
    pub mean: f64,
    pub variance: f64,
    /// One entry per degree `1..=m`.
    pub per_degree: Vec<DegreeVariance>,
}

impl MomentReport {
    /// Pretty JSON with every number rounded to twelve significant digits.
    pub fn to_json(&self) -> String {
        let round = |v: f64| crate::moments::format_sig(v).parse::<f64>().unwrap_or(v);
        let rounded = MomentReport {
            mean: round(self.mean),
            variance: round(self.variance),
            per_degree: self
                .per_degree
                .iter()
                .map(|d| DegreeVariance {
                    degree: d.degree,
                    variance: round(d.variance),
                })
                .collect(),
        };
        let mut s = serde_json::to_string_pretty(&rounded).expect("report serializes");
        s.push('\n');
        s
    }

    /// Two columns: `quantity,value`.
    pub fn to_csv(&self) -> String {
        let fmt = crate::moments::format_sig;
        let mut out = String::from("quantity,value\n");
        out.push_str(&format!("mean,{}\n", fmt(self.mean)));
        out.push_str(&format!("variance,{}\n", fmt(self.variance)));
        for d in &self.per_degree {
            out.push_str(&format!("variance_degree_{},{}\n", d.degree, fmt(d.variance)));
        }
        out
    }
}

/// One fixed-width histogram bin.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bin {
    pub left: f64,
    pub right: f64,
    pub count: usize,
    /// `count / (n · width)`.
    pub density: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub bins: Vec<Bin>,
}

impl Histogram {
    /// Freedman–Diaconis width `2 IQR n^{-1/3}`, at most [`MAX_BINS`] bins.
    /// Samples with no spread get one unit-width bin centered on the value.
    pub fn freedman_diaconis(values: &[f64]) -> Self {
        if values.is_empty() {
            return Histogram { bins: Vec::new() };
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        let (lo, hi) = (sorted[0], sorted[sorted.len() - 1]);
        let n = values.len() as f64;
        let range = hi - lo;
        let width = 2.0 * (quantile(&sorted, 0.75) - quantile(&sorted, 0.25)) / n.cbrt();
        let count = if range > 0.0 && width > 0.0 {
            ((range / width).ceil() as usize).clamp(1, MAX_BINS)
        } else if range > 0.0 {
            // all spread lives outside the quartiles
            MAX_BINS.min(values.len())
        } else {
            0
        };
        if count == 0 {
            return Histogram {
                bins: vec![Bin {
                    left: lo - 0.5,
                    right: lo + 0.5,
                    count: values.len(),
                    density: 1.0,
                }],
            };
        }
        let step = range / count as f64;
        let mut counts = vec![0usize; count];
        for &v in &sorted {
            let k = (((v - lo) / step) as usize).min(count - 1);
            counts[k] += 1;
        }
        let bins = counts
            .into_iter()
            .enumerate()
            .map(|(k, c)| {
                let left = lo + k as f64 * step;
                let right = if k + 1 == count { hi } else { lo + (k + 1) as f64 * step };
                Bin {
                    left,
                    right,
                    count: c,
                    density: c as f64 / (n * step),
                }
            })
            .collect();
        Histogram { bins }
    }

    /// `bin_left,bin_right,count,density`.
    pub fn to_csv(&self) -> String {
        let fmt = crate::moments::format_sig;
        let mut out = String::from("bin_left,bin_right,count,density\n");
        for b in &self.bins {
            out.push_str(&format!(
                "{},{},{},{}\n",
                fmt(b.left),
                fmt(b.right),
                b.count,
                fmt(b.density)
            ));
        }
        out
    }
}

/// Linear-interpolation quantile of sorted data.
fn quantile(sorted: &[f64], q: f64) -> f64 {
    let pos = q * (sorted.len() - 1) as f64;
    let i = pos.floor() as usize;
    let frac = pos - i as f64;
    if i + 1 < sorted.len() {
        sorted[i] + frac * (sorted[i + 1] - sorted[i])
    } else {
        sorted[i]
    }
}

/// Raw surrogate draws with their histogram.
#[derive(Clone, Debug, PartialEq)]
pub struct SurrogateSample {
    pub values: Vec<f64>,
    pub histogram: Histogram,
}

impl SurrogateSample {
    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    /// Unbiased sample variance; zero for a single draw.
    pub fn variance(&self) -> f64 {
        let n = self.values.len();
        if n < 2 {
            return 0.0;
        }
        let mean = self.mean();
        self.values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64
    }

    /// One value per line under a `value` header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value\n");
        for v in &self.values {
            out.push_str(&crate::moments::format_sig(*v));
            out.push('\n');
        }
        out
    }
}

impl PceModel {
    pub(crate) fn from_parts(
        basis: HermiteBasis,
        grams: Vec<GramMatrix>,
        coefficients: Vec<Vec<f64>>,
        meta: BuildMeta,
    ) -> Result<Self> {
        let m = basis.max_degree() as usize;
        if grams.len() != m + 1 || coefficients.len() != m + 1 {
            return Err(Error::Internal("per-degree data does not cover 0..=m".into()));
        }
        for (l, c) in coefficients.iter().enumerate() {
            if c.len() != basis.degree(l as u32).len() {
                return Err(Error::Internal(format!("degree {l} coefficient count mismatch")));
            }
        }
        Ok(PceModel {
            basis,
            grams,
            coefficients,
            meta,
        })
    }

    pub fn measure(&self) -> &GaussianMeasure {
        self.basis.measure()
    }

    pub fn dimension(&self) -> usize {
        self.basis.dimension()
    }

    /// Expansion order `m`.
    pub fn order(&self) -> u32 {
        self.basis.max_degree()
    }

    pub fn basis(&self) -> &HermiteBasis {
        &self.basis
    }

    pub fn gram(&self, l: u32) -> Option<&GramMatrix> {
        self.grams.get(l as usize)
    }

    pub fn meta(&self) -> &BuildMeta {
        &self.meta
    }

    /// `c_l` in grlex order.
    pub fn degree_coefficients(&self, l: u32) -> &[f64] {
        self.coefficients.get(l as usize).map_or(&[], Vec::as_slice)
    }

    /// All `(j, C_j)` in basis rank order.
    pub fn coefficients(&self) -> Vec<(MultiIndex, f64)> {
        self.basis
            .entries()
            .map(|e| e.index.clone())
            .zip(self.coefficients.iter().flatten().copied())
            .collect()
    }

    pub fn coefficient(&self, j: &MultiIndex) -> Option<f64> {
        let level = self.basis.degree(j.degree());
        let p = level.iter().position(|e| &e.index == j)?;
        Some(self.coefficients[j.degree() as usize][p])
    }

    /// `E[y_m] = C_0`.
    pub fn mean(&self) -> f64 {
        self.coefficients[0][0]
    }

    /// `var[y_m] = Σ_{l≥1} c_lᵀ A_l c_l`, with the per-degree split.
    pub fn variance(&self) -> MomentReport {
        let per_degree: Vec<DegreeVariance> = (1..=self.order())
            .map(|l| DegreeVariance {
                degree: l,
                variance: self.grams[l as usize].quadratic_form(&self.coefficients[l as usize]),
            })
            .collect();
        MomentReport {
            mean: self.mean(),
            variance: per_degree.iter().map(|d| d.variance).sum(),
            per_degree,
        }
    }

    /// `y_m(x)`.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dimension() {
            return Err(Error::Dimension {
                expected: self.dimension(),
                got: x.len(),
            });
        }
        Ok(self
            .basis
            .entries()
            .zip(self.coefficients.iter().flatten())
            .map(|(e, c)| c * e.standardized.evaluate_unchecked(x))
            .sum())
    }

    /// `Σ C_j Ψ_j` collected into monomials.
    pub fn expand(&self) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero(self.dimension());
        for (e, &c) in self.basis.entries().zip(self.coefficients.iter().flatten()) {
            out = out.axpy(c, &e.standardized).expect("basis shares the dimension");
        }
        out
    }

    /// Evaluates the surrogate on `n` seeded draws from the input measure.
    pub fn sample_surrogate(&self, n: usize, seed: u64) -> SurrogateSample {
        let poly = self.expand();
        let values: Vec<f64> = self
            .measure()
            .random_gaussian(seed, n)
            .iter()
            .map(|x| poly.evaluate_unchecked(x))
            .collect();
        let histogram = Histogram::freedman_diaconis(&values);
        SurrogateSample { values, histogram }
    }
}

/// `|exact - var[y_m]| / exact`.
pub fn l1_variance_error(exact_variance: f64, model: &PceModel) -> Result<f64> {
    if !(exact_variance > 0.0) {
        return Err(Error::Domain(format!(
            "exact variance must be positive, got {exact_variance}"
        )));
    }
    Ok((exact_variance - model.variance().variance).abs() / exact_variance)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn histogram_counts_everything() {
        let values: Vec<f64> = (0..1000).map(|i| (i as f64 * 0.37).sin()).collect();
        let h = Histogram::freedman_diaconis(&values);
        assert!(h.bins.len() > 1 && h.bins.len() <= MAX_BINS);
        assert_eq!(h.bins.iter().map(|b| b.count).sum::<usize>(), 1000);
        let area: f64 = h.bins.iter().map(|b| b.density * (b.right - b.left)).sum();
        assert!((area - 1.0).abs() < 1e-9);
        assert_eq!(h.bins[0].left, values.iter().copied().fold(f64::INFINITY, f64::min));
    }

    #[test]
    fn constant_sample_has_one_bin() {
        let h = Histogram::freedman_diaconis(&[3.0; 10]);
        assert_eq!(h.bins.len(), 1);
        assert_eq!(h.bins[0].count, 10);
    }

    #[test]
    fn bin_cap() {
        // heavy tails stretch the range far beyond the quartiles
        let mut values: Vec<f64> = (0..100).map(|i| i as f64 * 1e-3).collect();
        values.push(1e9);
        assert_eq!(Histogram::freedman_diaconis(&values).bins.len(), MAX_BINS);
    }

    #[test]
    fn quantiles() {
        let s = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile(&s, 0.0), 1.0);
        assert_eq!(quantile(&s, 1.0), 4.0);
        assert_eq!(quantile(&s, 0.5), 2.5);
    }
}
