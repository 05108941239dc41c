//! `verify`: run one certification suite against the curve families and
//! report every measured quantity against its tolerance. Exit code 0 only
//! when the whole report passes.

use std::path::PathBuf;

use clap::Args;

use quatcurve::{
    binormal_duality_check, corollary_suite, frame_field, salkowski, salkowski_torsion_law,
    slant_helix_check, tangent_ode_residual, Error, FrameField, SalkowskiParams,
};

use crate::cmd::write_out;
use crate::config::Defaults;
use crate::curves::uniform_grid;
use crate::report::{ReportBuilder, VerificationReport};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Which suite to run: salkowski-intrinsics, slant-helix, torsion-law,
    /// duality, tangent-ode, or corollaries.
    pub check: String,
    /// Family shape parameter the suite is run at.
    #[arg(long)]
    pub m: Option<f64>,
    /// Grid points (tangent-ode defaults to 4001, everything else to the
    /// configured grid size).
    #[arg(long)]
    pub n: Option<usize>,
    /// Replaces the default tolerance of every assertion in the suite.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Margin fraction for the salkowski domains.
    #[arg(long)]
    pub margin: Option<f64>,
    /// Print the report as JSON (see schema/verification-report.schema.json).
    #[arg(long)]
    pub json: bool,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

struct Setup {
    m: f64,
    n: usize,
    margin: f64,
    tol: Option<f64>,
}

pub fn run(args: &VerifyArgs, defaults: &Defaults) -> anyhow::Result<i32> {
    let setup = Setup {
        m: args.m.unwrap_or(1.0),
        n: args.n.unwrap_or(if args.check == "tangent-ode" {
            4001
        } else {
            defaults.grid
        }),
        margin: args.margin.unwrap_or(defaults.margin),
        tol: args.tol,
    };
    let report = match args.check.as_str() {
        "salkowski-intrinsics" => intrinsics(&setup)?,
        "slant-helix" => slant_helix(&setup)?,
        "torsion-law" => torsion_law(&setup)?,
        "duality" => duality(&setup)?,
        "tangent-ode" => tangent_ode(&setup)?,
        "corollaries" => corollaries(&setup, defaults)?,
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown check {other:?}; expected salkowski-intrinsics, slant-helix, \
                 torsion-law, duality, tangent-ode, or corollaries"
            ))
            .into())
        }
    };
    let content = if args.json {
        report.to_json()
    } else {
        report.to_text()
    };
    write_out(args.out.as_deref(), &content)?;
    Ok(if report.pass { 0 } else { 1 })
}

fn builder(check: &str, setup: &Setup) -> ReportBuilder {
    let mut b = ReportBuilder::new(check, setup.tol);
    b.param("m", setup.m)
        .param("n", setup.n as f64)
        .param("margin", setup.margin);
    b
}

fn full_domain_field(setup: &Setup) -> anyhow::Result<FrameField> {
    let c = salkowski(setup.m, setup.margin)?;
    let (lo, hi) = c.domain();
    Ok(frame_field(&c, &uniform_grid(lo, hi, setup.n)?, None)?)
}

/// Constant unit curvature, torsion tan(nt), arc length sin(nt)/m.
fn intrinsics(setup: &Setup) -> anyhow::Result<VerificationReport> {
    let mut b = builder("salkowski-intrinsics", setup);
    let c = salkowski(setup.m, setup.margin)?;
    let p = SalkowskiParams::new(setup.m, setup.margin)?;
    let (lo, hi) = c.domain();
    let ff = frame_field(&c, &uniform_grid(lo, hi, setup.n)?, None)?;
    let s_ref = c.arc_length(lo, 0.0)?;
    let mut worst_k = 0.0f64;
    let mut worst_r = 0.0f64;
    let mut worst_s = 0.0f64;
    for samp in ff.samples() {
        worst_k = worst_k.max((samp.curvature - 1.0).abs());
        worst_r = worst_r.max((samp.torsion - (p.n * samp.t).tan()).abs());
        worst_s = worst_s.max((samp.s - s_ref - (p.n * samp.t).sin() / setup.m).abs());
    }
    b.assert_below("max |curvature - 1|", worst_k, 1e-5)
        .assert_below("max |torsion - tan(nt)|", worst_r, 1e-4)
        .assert_below("max |arc length - sin(nt)/m|", worst_s, 1e-8);
    Ok(b.finish())
}

/// The principal normal keeps a fixed angle with a fixed direction.
fn slant_helix(setup: &Setup) -> anyhow::Result<VerificationReport> {
    let mut b = builder("slant-helix", setup);
    let ff = full_domain_field(setup)?;
    let rep = slant_helix_check(&ff, setup.tol.unwrap_or(1e-4))?;
    let want_cos = setup.m / (1.0 + setup.m * setup.m).sqrt();
    b.assert_below("max axis drift", rep.max_axis_drift, 1e-4)
        .assert_below("max angle deviation", rep.max_angle_deviation, 1e-5)
        .assert_below(
            "|cos angle| error vs m/sqrt(1+m^2)",
            (rep.cos_angle.abs() - want_cos).abs(),
            1e-4,
        );
    Ok(b.finish())
}

/// Torsion against arc length follows r(s) = bs/sqrt(1 - b^2 s^2) with b = m.
fn torsion_law(setup: &Setup) -> anyhow::Result<VerificationReport> {
    let mut b = builder("torsion-law", setup);
    let ff = full_domain_field(setup)?;
    let rep = salkowski_torsion_law(&ff, setup.tol.unwrap_or(1e-3))?;
    b.assert_below("|fitted b - m|", (rep.b - setup.m).abs(), 1e-4)
        .assert_below("sup fit residual", rep.max_residual, 1e-3)
        .assert_holds("slope detected (not a plane arc)", !rep.degenerate_plane);
    Ok(b.finish())
}

/// The integrated binormal's frame is the original frame rearranged.
fn duality(setup: &Setup) -> anyhow::Result<VerificationReport> {
    let mut b = builder("duality", setup);
    let c = salkowski(setup.m, setup.margin)?;
    let p = SalkowskiParams::new(setup.m, setup.margin)?;
    // the negative-torsion lobe, where all five relations hold
    let grid = uniform_grid(p.t_lo, p.t_lo / 19.0, setup.n)?;
    let rep = binormal_duality_check(&c, &grid, setup.tol.unwrap_or(1e-3))?;
    b.assert_below("curvature relation", rep.curvature_residual, 1e-3)
        .assert_below("torsion relation", rep.torsion_residual, 1e-3)
        .assert_below("tangent relation", rep.tangent_residual, 1e-3)
        .assert_below("normal relation", rep.normal_residual, 1e-3)
        .assert_below("binormal relation", rep.binormal_residual, 1e-3);
    Ok(b.finish())
}

/// The unit tangent satisfies the third-order equation in the
/// total-curvature parameter; the residual must vanish at second order.
fn tangent_ode(setup: &Setup) -> anyhow::Result<VerificationReport> {
    let mut b = builder("tangent-ode", setup);
    let c = salkowski(setup.m, setup.margin)?;
    let (_, hi) = c.domain();
    let residual_at = |n: usize| -> anyhow::Result<f64> {
        let ff = frame_field(&c, &uniform_grid(0.15 * hi, 0.9 * hi, n)?, None)?;
        Ok(tangent_ode_residual(&ff)?)
    };
    let fine = residual_at(setup.n)?;
    // convergence is judged one refinement behind the requested grid, where
    // truncation still dominates roundoff
    let quarter = residual_at(setup.n / 4)?;
    let half = residual_at(setup.n / 2)?;
    let order_defect = ((quarter / half).log2() - 2.0).abs();
    b.assert_below("sup residual", fine, 1e-3).assert_below(
        "refinement order defect",
        order_defect,
        1.0,
    );
    Ok(b.finish())
}

/// The six similarity fixtures: lines, circles, helices, rigid copies, and
/// the antipodal image.
fn corollaries(setup: &Setup, defaults: &Defaults) -> anyhow::Result<VerificationReport> {
    let tol = setup.tol.unwrap_or(defaults.tol);
    let mut b = ReportBuilder::new("corollaries", setup.tol);
    b.param("tol", tol);
    let cases = corollary_suite(tol)?;
    for case in &cases {
        let name = format!("{} ({})", case.name, case.criterion);
        b.assert_below(&name, case.max_discrepancy, tol);
    }
    Ok(b.finish())
}
