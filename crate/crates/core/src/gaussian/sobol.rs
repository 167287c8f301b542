//! Unscrambled Sobol points in base 2 (Gray-code ordering).
//!
//! The first point of every Sobol sequence is the origin, which the Gaussian
//! map would send to minus infinity. `skip` counts leading points dropped,
//! origin included, and the origin is dropped even when `skip` is zero.

use serde::{Deserialize, Serialize};

use super::sobol_table::{DIRECTIONS, MAX_DIMENSION};
use crate::error::{Error, Result};

const BITS: usize = 32;
const SCALE: f64 = 1.0 / 4_294_967_296.0;

/// Sample size, dimension, and burn-in for a quasi-Monte Carlo point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QmcConfig {
    pub sample_count: usize,
    /// Leading points dropped, origin included; 0 and 1 agree.
    pub skip: usize,
    pub dimension: usize,
}

impl QmcConfig {
    pub fn new(sample_count: usize, skip: usize, dimension: usize) -> Result<Self> {
        if sample_count == 0 {
            return Err(Error::Invalid("QMC sample count must be at least 1".into()));
        }
        if dimension == 0 {
            return Err(Error::EmptyDimension);
        }
        Ok(QmcConfig {
            sample_count,
            skip,
            dimension,
        })
    }

    /// Default burn-in. For `L = 2^m` the points are indices `L..2L`, a
    /// complete digitally shifted net with no zero coordinate; dropping only
    /// the origin from the leading net unbalances it and leaves a bias that
    /// decays like `1/L`. Other sizes admit no complete net and use the
    /// leading points.
    pub fn with_default_skip(sample_count: usize, dimension: usize) -> Result<Self> {
        let skip = if sample_count.is_power_of_two() {
            sample_count
        } else {
            0
        };
        Self::new(sample_count, skip, dimension)
    }
}

/// Largest dimension the embedded direction-number table supports.
pub const fn max_dimension() -> usize {
    MAX_DIMENSION
}

/// Iterator over Sobol points, origin included.
#[derive(Clone, Debug)]
pub struct SobolSequence {
    directions: Vec<[u32; BITS]>,
    state: Vec<u32>,
    index: u64,
}

impl SobolSequence {
    pub fn new(dimension: usize) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::EmptyDimension);
        }
        if dimension > MAX_DIMENSION {
            return Err(Error::Capacity {
                requested: dimension,
                supported: MAX_DIMENSION,
            });
        }
        let mut directions = Vec::with_capacity(dimension);
        let mut first = [0u32; BITS];
        for (k, v) in first.iter_mut().enumerate() {
            *v = 1 << (BITS - 1 - k);
        }
        directions.push(first);
        for entry in DIRECTIONS.iter().take(dimension - 1) {
            let s = entry.degree as usize;
            let mut v = [0u32; BITS];
            for k in 0..s.min(BITS) {
                v[k] = entry.initial[k] << (BITS - 1 - k);
            }
            for k in s..BITS {
                v[k] = v[k - s] ^ (v[k - s] >> s);
                for i in 1..s {
                    if (entry.coeffs >> (s - 1 - i)) & 1 == 1 {
                        v[k] ^= v[k - i];
                    }
                }
            }
            directions.push(v);
        }
        Ok(SobolSequence {
            directions,
            state: vec![0; dimension],
            index: 0,
        })
    }

    pub fn dimension(&self) -> usize {
        self.directions.len()
    }
}

impl Iterator for SobolSequence {
    type Item = Vec<f64>;

    fn next(&mut self) -> Option<Vec<f64>> {
        if self.index >= 1u64 << BITS {
            return None;
        }
        let point = self.state.iter().map(|&s| s as f64 * SCALE).collect();
        // advance along the Gray code: flip the direction of the lowest zero bit
        let c = (!self.index).trailing_zeros() as usize;
        if c < BITS {
            for (s, v) in self.state.iter_mut().zip(&self.directions) {
                *s ^= v[c];
            }
        }
        self.index += 1;
        Some(point)
    }
}

/// `sample_count` Sobol points in `(0,1)^d` after dropping the first
/// `max(skip, 1)` points.
pub fn sobol_points(config: &QmcConfig) -> Result<Vec<Vec<f64>>> {
    let seq = SobolSequence::new(config.dimension)?;
    let drop = config.skip.max(1);
    let needed = drop as u64 + config.sample_count as u64;
    if needed > 1u64 << BITS {
        return Err(Error::Invalid(format!(
            "{needed} Sobol points exceed the 2^32 period"
        )));
    }
    Ok(seq
        .skip(drop)
        .take(config.sample_count)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn one_dimensional_van_der_corput() {
        let pts = sobol_points(&QmcConfig::new(3, 1, 1).unwrap()).unwrap();
        assert_eq!(pts, vec![vec![0.5], vec![0.75], vec![0.25]]);
        assert_eq!(sobol_points(&QmcConfig::new(3, 0, 1).unwrap()).unwrap(), pts);
    }

    /// Reference values from an independent unscrambled Sobol implementation
    /// using the same Joe–Kuo table (scipy.stats.qmc.Sobol, scramble=False).
    #[test]
    fn matches_reference_generator() {
        let cols = [0usize, 1, 2, 10, 63, 127];
        let reference: [(usize, [f64; 6]); 7] = [
            (1, [0.5, 0.5, 0.5, 0.5, 0.5, 0.5]),
            (2, [0.75, 0.25, 0.25, 0.75, 0.75, 0.25]),
            (3, [0.25, 0.75, 0.75, 0.25, 0.25, 0.75]),
            (7, [0.125, 0.625, 0.375, 0.625, 0.375, 0.375]),
            (100, [0.4140625, 0.2578125, 0.7734375, 0.4609375, 0.6484375, 0.4609375]),
            (513, [0.5029296875, 0.7509765625, 0.4541015625, 0.4775390625, 0.0419921875, 0.6943359375]),
            (1023, [0.0009765625, 0.7529296875, 0.6123046875, 0.6787109375, 0.0400390625, 0.7001953125]),
        ];
        let all: Vec<Vec<f64>> = SobolSequence::new(128).unwrap().take(1024).collect();
        assert!(all[0].iter().all(|&v| v == 0.0));
        for (i, row) in reference {
            for (c, expected) in cols.iter().zip(row) {
                assert_eq!(all[i][*c], expected, "point {i} coordinate {c}");
            }
        }
    }

    #[test]
    fn coordinates_are_interior_and_skip_shifts() {
        let cfg = QmcConfig::new(500, 0, 11).unwrap();
        let pts = sobol_points(&cfg).unwrap();
        assert_eq!(pts.len(), 500);
        assert!(pts.iter().flatten().all(|&u| u > 0.0 && u < 1.0));
        let skipped = sobol_points(&QmcConfig::new(10, 5, 11).unwrap()).unwrap();
        assert_eq!(skipped[..], pts[4..14]);
    }

    #[test]
    fn capacity_error() {
        assert!(matches!(
            sobol_points(&QmcConfig::new(4, 0, 129).unwrap()),
            Err(Error::Capacity { requested: 129, supported: 128 })
        ));
        assert!(max_dimension() >= 64);
    }

    /// Max absolute deviation of box counts from the uniform expectation on
    /// a `cells x cells` grid.
    fn box_discrepancy(pts: &[Vec<f64>], cells: usize) -> f64 {
        let mut counts = vec![0usize; cells * cells];
        for p in pts {
            let i = ((p[0] * cells as f64) as usize).min(cells - 1);
            let j = ((p[1] * cells as f64) as usize).min(cells - 1);
            counts[i * cells + j] += 1;
        }
        let expected = pts.len() as f64 / (cells * cells) as f64;
        counts
            .iter()
            .map(|&c| (c as f64 - expected).abs())
            .fold(0.0, f64::max)
    }

    #[test]
    fn more_uniform_than_pseudo_random() {
        let sobol = sobol_points(&QmcConfig::new(1024, 0, 2).unwrap()).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let random: Vec<Vec<f64>> = (0..1024)
            .map(|_| vec![rng.random::<f64>(), rng.random::<f64>()])
            .collect();
        let qs = box_discrepancy(&sobol, 16);
        let rs = box_discrepancy(&random, 16);
        assert!(qs < rs, "sobol {qs} vs random {rs}");
    }
}
