use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use gpce::validate::run_suite;
use gpce::{
    build_pce, format_sig, gram_matrix, hermite_polynomial, norm_sq_h, MomentReport, MultiIndex,
    PceModel, SparsePolynomial,
};

use crate::config::{RunConfig, SigmaSource};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Process exit status; `Failed` means a validation suite did not pass.
#[derive(Debug, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Failed,
}

/// Writes `text` to `out`, or to stdout when no path is given.
fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report_text(report: &MomentReport, format: Format) -> String {
    match format {
        Format::Csv => report.to_csv(),
        Format::Json => report.to_json(),
    }
}

fn read_model(path: &Path) -> Result<PceModel> {
    PceModel::read(path).with_context(|| format!("reading model {}", path.display()))
}

pub fn build(config: RunConfig, format: Format) -> Result<Outcome> {
    let y = config.function.output()?;
    let model = build_pce(&config.measure, &y, config.order, &config.method)
        .with_context(|| format!("building {} at order {}", config.function, config.order))?;
    model
        .write(&config.out)
        .with_context(|| format!("writing model {}", config.out.display()))?;
    emit(&report_text(&model.variance(), format), None)?;
    Ok(Outcome::Ok)
}

pub fn stats(model: &Path, format: Format, out: Option<&Path>) -> Result<Outcome> {
    let model = read_model(model)?;
    emit(&report_text(&model.variance(), format), out)?;
    Ok(Outcome::Ok)
}

/// `samples.csv` gets a sibling `samples_hist.csv` unless a path is given.
fn histogram_path(out: &Path) -> PathBuf {
    let stem = out.file_stem().and_then(|s| s.to_str()).unwrap_or("samples");
    out.with_file_name(format!("{stem}_hist.csv"))
}

pub fn sample(
    model: &Path,
    n: usize,
    seed: u64,
    out: &Path,
    histogram: Option<&Path>,
) -> Result<Outcome> {
    let model = read_model(model)?;
    let s = model.sample_surrogate(n, seed);
    emit(&s.to_csv(), Some(out))?;
    let hist = histogram.map_or_else(|| histogram_path(out), Path::to_path_buf);
    emit(&s.histogram.to_csv(), Some(&hist))?;
    emit(
        &format!(
            "quantity,value\nsamples,{n}\nmean,{}\nvariance,{}\n",
            format_sig(s.mean()),
            format_sig(s.variance())
        ),
        None,
    )?;
    Ok(Outcome::Ok)
}

pub fn validate(suite: &str, out: Option<&Path>) -> Result<Outcome> {
    let report = run_suite(suite)?;
    emit(&report.to_json(), out)?;
    match report.first_failure() {
        None => Ok(Outcome::Ok),
        Some(c) => {
            eprintln!(
                "check {} failed: expected {}, got {}, tolerance {}",
                c.name,
                format_sig(c.expected),
                format_sig(c.got),
                format_sig(c.tolerance)
            );
            Ok(Outcome::Failed)
        }
    }
}

pub fn gram(sigma: &SigmaSource, degree: u32, out: Option<&Path>) -> Result<Outcome> {
    let g = gram_matrix(&sigma.measure()?, degree)?;
    emit(&g.to_csv(), out)?;
    Ok(Outcome::Ok)
}

pub fn hermite(sigma: &SigmaSource, index: &str, raw: bool, out: Option<&Path>) -> Result<Outcome> {
    let measure = sigma.measure()?;
    let j: MultiIndex = index.parse()?;
    let h = hermite_polynomial(&measure, &j)?;
    let p = if raw {
        h
    } else {
        h.scale(1.0 / norm_sq_h(&measure, &j)?.sqrt())
    };
    let rounded = SparsePolynomial::from_terms(
        p.dimension(),
        p.terms()
            .map(|(k, c)| (k.clone(), format_sig(c).parse::<f64>().unwrap_or(c))),
    )?;
    let mut text = serde_json::to_string_pretty(&rounded.to_json_value())?;
    text.push('\n');
    emit(&text, out)?;
    Ok(Outcome::Ok)
}
