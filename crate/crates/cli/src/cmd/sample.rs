//! `sample`: evaluate a curve on a uniform grid and write rows of
//! `t, s, x, y, z`, where `s` is the arc length accumulated from the first
//! emitted row.

use std::path::PathBuf;

use clap::Args;

use crate::cmd::{fmt, write_out};
use crate::config::Defaults;
use crate::curves::{resolve_range, spec_from_flags, uniform_grid};

#[derive(Args, Debug)]
pub struct SampleArgs {
    /// Curve family: salkowski, anti-salkowski, line, circle, helix, or file.
    #[arg(long)]
    pub family: String,
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
    /// Curve file to read for the file family.
    #[arg(long, value_name = "PATH")]
    pub input: Option<String>,
    /// Left end of the parameter range; defaults to the domain start.
    #[arg(long)]
    pub t0: Option<f64>,
    /// Right end of the parameter range; defaults to the domain end.
    #[arg(long)]
    pub t1: Option<f64>,
    /// Number of rows to emit.
    #[arg(long)]
    pub n: Option<usize>,
    /// Margin fraction for the salkowski domains.
    #[arg(long)]
    pub margin: Option<f64>,
    /// Output path; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Emit a JSON array instead of CSV.
    #[arg(long)]
    pub json: bool,
}

pub fn run(args: &SampleArgs, defaults: &Defaults) -> anyhow::Result<i32> {
    let spec = spec_from_flags(
        &args.family,
        args.m,
        args.radius,
        args.pitch,
        args.point.as_deref(),
        args.direction.as_deref(),
        args.input.as_deref(),
    )?;
    let curve = spec.build(args.margin.unwrap_or(defaults.margin))?;
    let (t0, t1) = resolve_range(&curve, args.t0, args.t1)?;
    let grid = uniform_grid(t0, t1, args.n.unwrap_or(defaults.grid))?;

    let mut s = 0.0;
    let mut rows = Vec::with_capacity(grid.len());
    for (i, &t) in grid.iter().enumerate() {
        if i > 0 {
            s += curve.arc_length(grid[i - 1], t)?;
        }
        let p = curve.eval(t);
        rows.push((t, s, p));
    }

    let content = if args.json {
        let values: Vec<serde_json::Value> = rows
            .iter()
            .map(|(t, s, p)| serde_json::json!({ "t": t, "s": s, "x": p.x, "y": p.y, "z": p.z }))
            .collect();
        let mut text = serde_json::to_string_pretty(&values).expect("rows serialize");
        text.push('\n');
        text
    } else {
        let mut text = String::from("t,s,x,y,z\n");
        for (t, s, p) in &rows {
            text.push_str(&format!(
                "{},{},{},{},{}\n",
                fmt(*t),
                fmt(*s),
                fmt(p.x),
                fmt(p.y),
                fmt(p.z)
            ));
        }
        text
    };
    write_out(args.out.as_deref(), &content)?;
    Ok(0)
}
