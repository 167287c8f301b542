//! Run configuration: where the covariance comes from, which output is
//! expanded, and how the coefficients are integrated.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use gpce::gaussian::io;
use gpce::{scenarios, GaussianMeasure, OutputFunction, SparsePolynomial};
use serde::Deserialize;

/// Covariance given inline as nested arrays or as a CSV/JSON file path.
#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum SigmaSource {
    Inline(Vec<Vec<f64>>),
    Path(PathBuf),
}

impl FromStr for SigmaSource {
    type Err = anyhow::Error;

    /// Text starting with `[` is inline JSON, anything else a path.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            Ok(SigmaSource::Inline(io::parse_json(s)?))
        } else {
            Ok(SigmaSource::Path(PathBuf::from(s)))
        }
    }
}

impl SigmaSource {
    pub fn rows(&self) -> Result<Vec<Vec<f64>>> {
        match self {
            SigmaSource::Inline(rows) => Ok(rows.clone()),
            SigmaSource::Path(path) => io::read_covariance(path)
                .with_context(|| format!("reading covariance {}", path.display())),
        }
    }

    pub fn measure(&self) -> Result<GaussianMeasure> {
        Ok(GaussianMeasure::from_rows(&self.rows()?)?)
    }
}

/// A builtin output or a polynomial literal.
#[derive(Clone, Debug, PartialEq)]
pub enum FunctionSpec {
    Example1(u8),
    Example2 { t: f64, rho: f64 },
    Example3,
    Polynomial(SparsePolynomial),
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSpec::Example1(case) => write!(f, "example1_case{case}"),
            FunctionSpec::Example2 { t, rho } => write!(f, "example2(t={t}, rho={rho})"),
            FunctionSpec::Example3 => f.write_str("example3_synthetic"),
            FunctionSpec::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for FunctionSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('{') {
            return s
                .parse::<SparsePolynomial>()
                .map(FunctionSpec::Polynomial)
                .map_err(|e| anyhow!("polynomial literal: {e}"));
        }
        if let Some(case) = s.strip_prefix("example1_case") {
            return match case {
                "1" | "2" | "3" | "4" => Ok(FunctionSpec::Example1(case.parse()?)),
                _ => bail!("unknown Example 1 case {case:?}; expected 1 to 4"),
            };
        }
        if s == "example3_synthetic" {
            return Ok(FunctionSpec::Example3);
        }
        if let Some(rest) = s.strip_prefix("example2") {
            return parse_example2(rest);
        }
        bail!(
            "unknown output function {s:?}; expected example1_case1..4, example2(t, rho), \
             example3_synthetic, or a JSON polynomial literal"
        )
    }
}

/// `""`, `(1, 0.5)`, or `(t=1, rho=0.5)`; omitted values default to
/// `t = 1`, `rho = 0.5`.
fn parse_example2(rest: &str) -> Result<FunctionSpec> {
    let (mut t, mut rho) = (1.0, 0.5);
    let rest = rest.trim();
    if rest.is_empty() {
        return Ok(FunctionSpec::Example2 { t, rho });
    }
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| anyhow!("example2 arguments must be written as (t, rho)"))?;
    for (pos, arg) in inner.split(',').map(str::trim).filter(|a| !a.is_empty()).enumerate() {
        let (name, value) = match arg.split_once('=') {
            Some((n, v)) => (n.trim(), v.trim()),
            None => (["t", "rho"].get(pos).copied().unwrap_or("?"), arg),
        };
        let value: f64 = value
            .parse()
            .map_err(|_| anyhow!("example2 argument {name}: not a number: {value:?}"))?;
        match name {
            "t" => t = value,
            "rho" => rho = value,
            other => bail!("example2 takes t and rho, got {other:?}"),
        }
    }
    Ok(FunctionSpec::Example2 { t, rho })
}

impl FunctionSpec {
    /// The covariance a builtin comes with; polynomial literals have none.
    pub fn default_measure(&self) -> Result<Option<GaussianMeasure>> {
        Ok(match self {
            FunctionSpec::Example1(case) => Some(scenarios::example1_measure(*case)?),
            FunctionSpec::Example2 { rho, .. } => Some(scenarios::example2_measure(*rho)?),
            FunctionSpec::Example3 => Some(scenarios::example3_measure()?),
            FunctionSpec::Polynomial(_) => None,
        })
    }

    pub fn output(&self) -> Result<OutputFunction> {
        Ok(match self {
            FunctionSpec::Example1(_) => scenarios::example1_output().into(),
            FunctionSpec::Example2 { t, .. } => scenarios::example2_output(*t)?.into(),
            FunctionSpec::Example3 => OutputFunction::from(scenarios::example3_output()),
            FunctionSpec::Polynomial(p) => p.clone().into(),
        })
    }
}

/// Optional settings read from `--config <json>`; command-line flags win.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub dimension: Option<usize>,
    pub sigma: Option<SigmaSource>,
    pub order: Option<u32>,
    pub function: Option<String>,
    pub method: Option<String>,
    pub qmc: Option<usize>,
    pub skip: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

impl FileConfig {
    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let mut config: FileConfig = serde_json::from_str(&text)
            .map_err(|e| gpce::Error::Invalid(format!("config {}: {e}", path.display())))?;
        // relative covariance paths resolve against the config's directory
        if let Some(SigmaSource::Path(p)) = &mut config.sigma {
            if p.is_relative() {
                if let Some(dir) = path.parent() {
                    *p = dir.join(&*p);
                }
            }
        }
        Ok(config)
    }
}

/// Fully resolved settings for `gpce build`.
pub struct RunConfig {
    pub measure: GaussianMeasure,
    pub function: FunctionSpec,
    pub order: u32,
    pub method: gpce::Method,
    pub out: PathBuf,
}

pub struct BuildFlags {
    pub config: Option<PathBuf>,
    pub sigma: Option<SigmaSource>,
    pub function: Option<String>,
    pub order: Option<u32>,
    pub qmc: Option<usize>,
    pub skip: Option<usize>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn resolve(flags: BuildFlags) -> Result<Self> {
        let file = match &flags.config {
            Some(path) => FileConfig::read(path)?,
            None => FileConfig::default(),
        };
        let function: FunctionSpec = flags
            .function
            .or(file.function)
            .ok_or_else(|| invalid("no output function; pass --function or set it in --config"))?
            .parse()
            .map_err(|e: anyhow::Error| invalid(e.to_string()))?;
        let measure = match flags.sigma.or(file.sigma) {
            Some(source) => source.measure()?,
            None => function.default_measure()?.ok_or_else(|| {
                invalid("a polynomial literal needs a covariance; pass --sigma")
            })?,
        };
        if let Some(n) = file.dimension {
            if n != measure.dimension() {
                return Err(gpce::Error::Dimension {
                    expected: n,
                    got: measure.dimension(),
                }
                .into());
            }
        }
        let order = flags
            .order
            .or(file.order)
            .ok_or_else(|| invalid("no expansion order; pass --order"))?;
        // a --qmc flag overrides whatever method the config names
        let qmc = match (flags.qmc, file.method.as_deref(), file.qmc) {
            (Some(size), _, _) => Some(size),
            (None, None | Some("qmc"), size @ Some(_)) => size,
            (None, None | Some("exact"), None) => None,
            (None, Some("qmc"), None) => return Err(invalid("method qmc needs a sample count (qmc)")),
            (None, Some("exact"), Some(_)) => {
                return Err(invalid("config sets method exact together with a qmc sample count"))
            }
            (None, Some(m), _) => {
                return Err(invalid(format!("unknown method {m:?}; expected exact or qmc")))
            }
        };
        let method = match qmc {
            Some(size) => {
                let dim = measure.dimension();
                gpce::Method::Qmc(match flags.skip.or(file.skip) {
                    Some(skip) => gpce::QmcConfig::new(size, skip, dim)?,
                    None => gpce::QmcConfig::with_default_skip(size, dim)?,
                })
            }
            None => gpce::Method::Exact,
        };
        // seed is accepted for symmetry with `sample`; builds are seed-free
        let _ = flags.seed.or(file.seed);
        let out = flags
            .out
            .or(file.out)
            .ok_or_else(|| invalid("no output path; pass --out"))?;
        Ok(RunConfig {
            measure,
            function,
            order,
            method,
            out,
        })
    }
}

fn invalid(message: impl Into<String>) -> anyhow::Error {
    gpce::Error::Invalid(message.into()).into()
}
