//! Model files.
//!
//! ```json
//! {
//!   "N": 3, "m": 2,
//!   "covariance": [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
//!   "coefficients": [{"index": "0,0,0", "value": 12.0}, ...],
//!   "build": {"method": "exact", "qmc_size": null, "residuals": [0, 0, 0]}
//! }
//! ```
//!
//! Coefficients appear in basis rank order and must cover every `|j| ≤ m`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::build::BuildMeta;
use super::model::PceModel;
use crate::error::{Error, Result};
use crate::gaussian::GaussianMeasure;
use crate::hermite::build_basis;
use crate::indexing::{count_total, MultiIndex};
use crate::moments::assemble;

#[derive(Serialize, Deserialize)]
struct CoefficientRecord {
    index: String,
    value: f64,
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    #[serde(rename = "N")]
    n: usize,
    m: u32,
    covariance: Vec<Vec<f64>>,
    coefficients: Vec<CoefficientRecord>,
    build: BuildMeta,
}

fn schema(message: impl Into<String>) -> Error {
    Error::Invalid(format!("model file: {}", message.into()))
}

impl PceModel {
    pub fn to_json(&self) -> String {
        let file = ModelFile {
            n: self.dimension(),
            m: self.order(),
            covariance: self.measure().covariance_rows(),
            coefficients: self
                .coefficients()
                .into_iter()
                .map(|(j, value)| CoefficientRecord {
                    index: j.label(),
                    value,
                })
                .collect(),
            build: self.meta().clone(),
        };
        let mut text = serde_json::to_string_pretty(&file).expect("finite model serializes");
        text.push('\n');
        text
    }

    /// Parses a model file, rebuilding the basis and Gram matrices from the
    /// stored covariance.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            row: e.line(),
            col: e.column(),
            message: e.to_string(),
        })?;
        if file.covariance.len() != file.n {
            return Err(schema(format!(
                "covariance has {} rows but N is {}",
                file.covariance.len(),
                file.n
            )));
        }
        let expected = count_total(file.n, file.m)?;
        if file.coefficients.len() as u64 != expected {
            return Err(schema(format!(
                "{} coefficients, expected {expected} for N = {}, m = {}",
                file.coefficients.len(),
                file.n,
                file.m
            )));
        }
        if file.build.residuals.len() != file.m as usize + 1 {
            return Err(schema("one residual per degree 0..=m is required"));
        }
        let measure = GaussianMeasure::from_rows(&file.covariance)?;
        let basis = build_basis(&measure, file.m)?;
        let mut coefficients = Vec::with_capacity(file.m as usize + 1);
        let mut records = file.coefficients.iter();
        for l in 0..=file.m {
            let level = basis.degree(l);
            let mut c = Vec::with_capacity(level.len());
            for entry in level {
                let rec = records.next().expect("count checked above");
                let j: MultiIndex = rec.index.parse()?;
                if j != entry.index {
                    return Err(schema(format!(
                        "coefficient {} found where {} belongs",
                        rec.index,
                        entry.index.label()
                    )));
                }
                if !rec.value.is_finite() {
                    return Err(schema(format!("coefficient {} is not finite", rec.index)));
                }
                c.push(rec.value);
            }
            coefficients.push(c);
        }
        let grams = (0..=file.m)
            .map(|l| {
                let level = basis.degree(l);
                let norms: Vec<f64> = level.iter().map(|e| e.norm_sq).collect();
                assemble(&measure, l, level.iter().map(|e| e.index.clone()).collect(), &norms)
            })
            .collect::<Result<Vec<_>>>()?;
        PceModel::from_parts(basis, grams, coefficients, file.build)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.to_json())?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }
}
