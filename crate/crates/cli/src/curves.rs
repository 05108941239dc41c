//! Turning command-line curve descriptions into [`Curve`] values.
//!
//! A curve is named either by flags (`--family salkowski --m 1`) or by a
//! compact spec string (`salkowski:m=1,t0=0.1,t1=2`). Both feed the same
//! builder. The `file` family re-ingests a CSV written by `sample`: the
//! rows become spline nodes, so evaluation between them interpolates.

use std::collections::BTreeMap;
use std::io;
use std::path::Path;

use quatcurve::{
    anti_salkowski, circle, circular_helix, line, salkowski, Curve, Error, Result, Spatial,
};

/// A parsed curve description: family name, numeric parameters, and the
/// requested parameter range if any.
#[derive(Debug, Clone, Default)]
pub struct CurveSpec {
    pub family: String,
    pub params: BTreeMap<String, f64>,
    pub path: Option<String>,
}

impl CurveSpec {
    /// Parses `name`, `name:key=val,...`, or `file:path`. A bare string that
    /// names an existing file is taken as a curve file.
    pub fn parse(text: &str) -> Result<CurveSpec> {
        if text.is_empty() {
            return Err(Error::InvalidParameter("empty curve spec".into()));
        }
        if Path::new(text).is_file() {
            return Ok(CurveSpec {
                family: "file".into(),
                path: Some(text.into()),
                ..CurveSpec::default()
            });
        }
        let (family, rest) = match text.split_once(':') {
            Some((f, r)) => (f, Some(r)),
            None => (text, None),
        };
        let mut spec = CurveSpec {
            family: family.into(),
            ..CurveSpec::default()
        };
        if family == "file" {
            match rest {
                Some(path) if !path.is_empty() => spec.path = Some(path.into()),
                _ => {
                    return Err(Error::InvalidParameter(
                        "the file family needs a path, as in file:curve.csv".into(),
                    ))
                }
            }
            return Ok(spec);
        }
        for item in rest.unwrap_or("").split(',').filter(|s| !s.is_empty()) {
            let Some((key, value)) = item.split_once('=') else {
                return Err(Error::InvalidParameter(format!(
                    "malformed spec item {item:?}; expected key=value"
                )));
            };
            let value: f64 = value.parse().map_err(|_| {
                Error::InvalidParameter(format!("parameter {key} is not a number: {value:?}"))
            })?;
            spec.params.insert(key.trim().into(), value);
        }
        Ok(spec)
    }

    /// The `t0`/`t1` range requested in the curve spec itself, if any.
    pub fn range(&self) -> (Option<f64>, Option<f64>) {
        (
            self.params.get("t0").copied(),
            self.params.get("t1").copied(),
        )
    }

    /// Builds the curve, using `margin` for the salkowski families unless the
    /// curve spec carries its own.
    pub fn build(&self, margin: f64) -> anyhow::Result<Curve> {
        let p = &self.params;
        let take = |key: &str| p.get(key).copied();
        let require = |key: &str| {
            take(key).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "the {} family needs --{key} (or {key}= in the curve spec)",
                    self.family
                ))
            })
        };
        let margin = take("margin").unwrap_or(margin);
        let allowed: &[&str] = match self.family.as_str() {
            "salkowski" | "anti-salkowski" => &["m", "margin", "t0", "t1"],
            "circle" => &["radius", "t0", "t1"],
            "helix" => &["radius", "pitch", "t0", "t1"],
            "line" => &["px", "py", "pz", "dx", "dy", "dz", "t0", "t1"],
            "file" => &["t0", "t1"],
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family {other:?}; expected salkowski, anti-salkowski, \
                     line, circle, helix, or file"
                ))
                .into())
            }
        };
        if let Some(key) = p.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(Error::InvalidParameter(format!(
                "parameter {key:?} does not apply to the {} family",
                self.family
            ))
            .into());
        }
        let curve = match self.family.as_str() {
            "salkowski" => salkowski(require("m")?, margin)?,
            "anti-salkowski" => anti_salkowski(require("m")?, margin)?,
            "circle" => circle(take("radius").unwrap_or(1.0))?,
            "helix" => circular_helix(take("radius").unwrap_or(1.0), take("pitch").unwrap_or(1.0))?,
            "line" => line(
                Spatial::new(
                    take("px").unwrap_or(0.0),
                    take("py").unwrap_or(0.0),
                    take("pz").unwrap_or(0.0),
                ),
                Spatial::new(
                    take("dx").unwrap_or(0.0),
                    take("dy").unwrap_or(0.0),
                    take("dz").unwrap_or(1.0),
                ),
            )?,
            "file" => {
                let path = self.path.as_deref().ok_or_else(|| {
                    Error::InvalidParameter("the file family needs --input".into())
                })?;
                read_curve_file(Path::new(path))?
            }
            _ => unreachable!("family validated above"),
        };
        Ok(curve)
    }
}

/// Assembles a spec from the individual flags shared by `sample` and
/// `frenet`.
#[allow(clippy::too_many_arguments)]
pub fn spec_from_flags(
    family: &str,
    m: Option<f64>,
    radius: Option<f64>,
    pitch: Option<f64>,
    point: Option<&str>,
    direction: Option<&str>,
    input: Option<&str>,
) -> Result<CurveSpec> {
    let mut spec = CurveSpec {
        family: family.into(),
        path: input.map(Into::into),
        ..CurveSpec::default()
    };
    let mut put = |key: &str, value: Option<f64>| {
        if let Some(v) = value {
            spec.params.insert(key.into(), v);
        }
    };
    put("m", m);
    put("radius", radius);
    put("pitch", pitch);
    if let Some(text) = point {
        let [x, y, z] = parse_triple(text)?;
        put("px", Some(x));
        put("py", Some(y));
        put("pz", Some(z));
    }
    if let Some(text) = direction {
        let [x, y, z] = parse_triple(text)?;
        put("dx", Some(x));
        put("dy", Some(y));
        put("dz", Some(z));
    }
    Ok(spec)
}

fn parse_triple(text: &str) -> Result<[f64; 3]> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::InvalidParameter(format!(
            "expected three comma-separated numbers, got {text:?}"
        )));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("not a number in triple: {part:?}")))?;
    }
    Ok(out)
}

/// Reads a CSV emitted by `sample` (or any file with `t,x,y,z` columns)
/// back into a spline-interpolated curve.
pub fn read_curve_file(path: &Path) -> io::Result<Curve> {
    let text = std::fs::read_to_string(path)?;
    let bad = |msg: String| io::Error::new(io::ErrorKind::InvalidData, msg);
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| bad(format!("{}: empty curve file", path.display())))?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    let index_of = |name: &str| {
        columns.iter().position(|c| *c == name).ok_or_else(|| {
            bad(format!(
                "{}: header {header:?} lacks a {name:?} column",
                path.display()
            ))
        })
    };
    let (it, ix, iy, iz) = (
        index_of("t")?,
        index_of("x")?,
        index_of("y")?,
        index_of("z")?,
    );
    let mut ts = Vec::new();
    let mut points = Vec::new();
    for (row, lineno) in lines.zip(2..) {
        let cells: Vec<&str> = row.split(',').map(str::trim).collect();
        let field = |i: usize| -> io::Result<f64> {
            cells
                .get(i)
                .and_then(|c| c.parse().ok())
                .ok_or_else(|| bad(format!("{}:{lineno}: malformed row", path.display())))
        };
        ts.push(field(it)?);
        points.push(Spatial::new(field(ix)?, field(iy)?, field(iz)?));
    }
    Curve::from_samples(&ts, &points)
        .map_err(|e| bad(format!("{}: {e}", path.display())))
        .map(|c| c.with_label(format!("file({})", path.display())))
}

/// The evaluation range: explicit `t0`/`t1` when given (checked against the
/// domain), the full domain otherwise.
pub fn resolve_range(curve: &Curve, t0: Option<f64>, t1: Option<f64>) -> Result<(f64, f64)> {
    let (lo, hi) = curve.domain();
    let t0 = t0.unwrap_or(lo);
    let t1 = t1.unwrap_or(hi);
    if !curve.contains(t0) || !curve.contains(t1) {
        return Err(Error::InvalidParameter(format!(
            "range [{t0}, {t1}] leaves the curve domain [{lo}, {hi}]"
        )));
    }
    if t0 >= t1 {
        return Err(Error::InvalidParameter(format!(
            "empty range: t0 = {t0} must be below t1 = {t1}"
        )));
    }
    Ok((t0, t1))
}

pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "a grid needs at least 2 points, got {n}"
        )));
    }
    Ok((0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect())
}
