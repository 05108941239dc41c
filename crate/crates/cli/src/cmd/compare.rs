//! `compare`: decide whether two curves are related by a rigid motion plus
//! uniform scaling. Exit 0 when similar, 1 when not, 5 when the pair cannot
//! be matched at all.

use std::path::PathBuf;

use clap::Args;

use quatcurve::{similar_check, Criterion, SimilarityOptions, SimilarityReport};

use crate::cmd::write_out;
use crate::config::Defaults;
use crate::curves::{resolve_range, uniform_grid, CurveSpec};

#[derive(Args, Debug)]
pub struct CompareArgs {
    /// First curve: a spec like "salkowski:m=1,t0=0.1,t1=2" or a CSV path.
    #[arg(long, value_name = "SPEC|PATH")]
    pub a: String,
    /// Second curve, same forms as --a.
    #[arg(long, value_name = "SPEC|PATH")]
    pub b: String,
    /// Matching criterion: tangent, normal, binormal, or ratio.
    #[arg(long)]
    pub criterion: Option<String>,
    /// Similarity tolerance on the matched-field discrepancy.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Grid points per curve.
    #[arg(long)]
    pub n: Option<usize>,
    /// Margin fraction for the salkowski domains.
    #[arg(long)]
    pub margin: Option<f64>,
    /// Identify a curve with its antipodal image: compare the magnitude of
    /// the torsion-to-curvature ratio instead of its sign.
    #[arg(long)]
    pub magnitude_ratio: bool,
    /// Print the report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &CompareArgs, defaults: &Defaults) -> anyhow::Result<i32> {
    let margin = args.margin.unwrap_or(defaults.margin);
    let n = args.n.unwrap_or(defaults.grid);
    let mut grids = Vec::new();
    let mut curves = Vec::new();
    for text in [&args.a, &args.b] {
        let spec = CurveSpec::parse(text)?;
        let curve = spec.build(margin)?;
        let (t0, t1) = spec.range();
        let (lo, hi) = resolve_range(&curve, t0, t1)?;
        grids.push(uniform_grid(lo, hi, n)?);
        curves.push(curve);
    }
    let criterion: Criterion = match &args.criterion {
        Some(text) => text.parse()?,
        None => Criterion::Tangent,
    };
    let opts = SimilarityOptions {
        criterion,
        tol: args.tol.unwrap_or(defaults.tol),
        magnitude_ratio: args.magnitude_ratio,
    };
    let report = similar_check(&curves[0], &grids[0], &curves[1], &grids[1], &opts)?;

    let content = if args.json {
        render_json(&report, &opts)
    } else {
        render_text(&report, &opts)
    };
    write_out(args.out.as_deref(), &content)?;
    Ok(if report.verdict { 0 } else { 1 })
}

/// Mean and spread of the curvature-ratio samples; the scale factor of the
/// similarity when the verdict holds.
fn scale_summary(report: &SimilarityReport) -> Option<(f64, f64)> {
    if report.transformation_samples.is_empty() {
        return None;
    }
    let mean = report
        .transformation_samples
        .iter()
        .map(|(_, lambda)| lambda)
        .sum::<f64>()
        / report.transformation_samples.len() as f64;
    let spread = report
        .transformation_samples
        .iter()
        .map(|(_, lambda)| (lambda - mean).abs())
        .fold(0.0, f64::max);
    Some((mean, spread))
}

fn render_text(report: &SimilarityReport, opts: &SimilarityOptions) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "criterion: {}", report.criterion).unwrap();
    writeln!(
        out,
        "max discrepancy: {:.3e} (tolerance {:.1e})",
        report.max_discrepancy, opts.tol
    )
    .unwrap();
    match scale_summary(report) {
        Some((mean, spread)) => {
            writeln!(out, "scale factor: {mean:.6} (spread {spread:.2e})").unwrap()
        }
        None => writeln!(out, "scale factor: n/a (degenerate pair)").unwrap(),
    }
    writeln!(
        out,
        "verdict: {}",
        if report.verdict {
            "similar"
        } else {
            "not similar"
        }
    )
    .unwrap();
    out
}

fn render_json(report: &SimilarityReport, opts: &SimilarityOptions) -> String {
    let samples: Vec<[f64; 2]> = report
        .transformation_samples
        .iter()
        .map(|&(s, lambda)| [s, lambda])
        .collect();
    let value = serde_json::json!({
        "criterion": report.criterion.to_string(),
        "tolerance": opts.tol,
        "max_discrepancy": report.max_discrepancy,
        "scale_samples": samples,
        "verdict": report.verdict,
    });
    let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
    text.push('\n');
    text
}
