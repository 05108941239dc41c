//! `frenet`: the Frenet apparatus along a curve as CSV. Grid points where
//! the frame does not exist (vanishing curvature or speed) come out with
//! NaN in the affected columns and a warning on stderr; if no grid point
//! has a frame, the exit code says so.

use std::path::PathBuf;

use clap::Args;

use quatcurve::frame_field_lenient;

use crate::cmd::{fmt, write_out};
use crate::config::Defaults;
use crate::curves::{resolve_range, spec_from_flags, uniform_grid, CurveSpec};

#[derive(Args, Debug)]
pub struct FrenetArgs {
    /// Curve spec like "salkowski:m=1" or a sample CSV path; alternative to
    /// the family flags.
    #[arg(long, value_name = "SPEC|PATH")]
    pub input: Option<String>,
    /// Curve family (when --input is not used).
    #[arg(long)]
    pub family: Option<String>,
    /// Shape parameter of the salkowski and anti-salkowski families.
    #[arg(long)]
    pub m: Option<f64>,
    /// Radius of the circle and helix families.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Vertical climb rate of the helix family.
    #[arg(long)]
    pub pitch: Option<f64>,
    /// Base point of the line family, as "x,y,z".
    #[arg(long, value_name = "X,Y,Z")]
    pub point: Option<String>,
    /// Direction of the line family, as "x,y,z".
    #[arg(long, value_name = "X,Y,Z")]
    pub direction: Option<String>,
    /// Left end of the parameter range; defaults to the domain start.
    #[arg(long)]
    pub t0: Option<f64>,
    /// Right end of the parameter range; defaults to the domain end.
    #[arg(long)]
    pub t1: Option<f64>,
    /// Number of rows to emit.
    #[arg(long)]
    pub n: Option<usize>,
    /// Finite-difference step for curves without attached derivatives.
    #[arg(long)]
    pub fd_step: Option<f64>,
    /// Margin fraction for the salkowski domains.
    #[arg(long)]
    pub margin: Option<f64>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub const HEADER: &str = "t,s,speed,tx,ty,tz,n1x,n1y,n1z,n2x,n2y,n2z,k,r";

pub fn run(args: &FrenetArgs, defaults: &Defaults) -> anyhow::Result<i32> {
    let spec = match (&args.input, &args.family) {
        (Some(text), None) => CurveSpec::parse(text)?,
        (None, Some(family)) => spec_from_flags(
            family,
            args.m,
            args.radius,
            args.pitch,
            args.point.as_deref(),
            args.direction.as_deref(),
            None,
        )?,
        _ => {
            return Err(quatcurve::Error::InvalidParameter(
                "give exactly one of --input or --family".into(),
            )
            .into())
        }
    };
    let curve = spec.build(args.margin.unwrap_or(defaults.margin))?;
    let (spec_t0, spec_t1) = spec.range();
    let (t0, t1) = resolve_range(&curve, args.t0.or(spec_t0), args.t1.or(spec_t1))?;
    let grid = uniform_grid(t0, t1, args.n.unwrap_or(defaults.grid))?;
    let step = args.fd_step.or(defaults.fd_step);

    let (samples, degraded) = frame_field_lenient(&curve, &grid, step)?;
    let mut text = String::from(HEADER);
    text.push('\n');
    for s in &samples {
        let cells = [
            s.t,
            s.s,
            s.speed,
            s.tangent.x,
            s.tangent.y,
            s.tangent.z,
            s.normal1.x,
            s.normal1.y,
            s.normal1.z,
            s.normal2.x,
            s.normal2.y,
            s.normal2.z,
            s.curvature,
            s.torsion,
        ];
        let row: Vec<String> = cells.iter().map(|&x| fmt(x)).collect();
        text.push_str(&row.join(","));
        text.push('\n');
    }
    write_out(args.out.as_deref(), &text)?;

    if degraded == samples.len() {
        eprintln!(
            "error: the Frenet frame is undefined at every one of the {} grid points",
            samples.len()
        );
        return Ok(4);
    }
    if degraded > 0 {
        eprintln!(
            "warning: frame undefined at {degraded} of {} grid points; \
             affected columns hold NaN",
            samples.len()
        );
    }
    Ok(0)
}
