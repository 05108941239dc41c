//! Detection of slant helices: curves whose principal normal keeps a
//! constant angle with a fixed direction.

use crate::error::{Error, Result};
use crate::frenet::FrameField;
use crate::numeric::stencil::d1_3pt;
use crate::quaternion::Spatial;

/// Torsion magnitudes at or below this classify the field as planar.
pub(crate) const PLANAR_TORSION_TOL: f64 = 1e-8;

/// Outcome of a slant-helix test on a frame field.
#[derive(Debug, Clone, Copy)]
pub struct SlantHelixReport {
    /// The recovered fixed direction (unit vector, mean of the per-sample
    /// candidates).
    pub axis: Spatial,
    /// Cosine of the angle the principal normal keeps with the axis.
    pub cos_angle: f64,
    /// Largest deviation of `inner(axis, normal1)` from `cos_angle`.
    pub max_angle_deviation: f64,
    /// Largest distance between a per-sample axis candidate and the first.
    pub max_axis_drift: f64,
    pub verdict: bool,
}

/// Tests whether the field belongs to a slant helix and recovers the axis.
///
/// For a slant helix the combination
///
/// ```text
/// d = t * (e f sin(theta) / sqrt(1 + f^2))
///   + n1 * cos(theta)
///   + n2 * (e sin(theta) / sqrt(1 + f^2))
/// ```
///
/// with `f = torsion / curvature` is one constant unit vector; `theta` is
/// the angle the normal keeps with it and `e` is a sign. The angle comes
/// from the growth rate `cot(theta) = f'(s) / (curvature (1 + f^2)^(3/2))`,
/// which is constant exactly for slant helices: a stencil estimate at the
/// best-conditioned sample seeds a one-dimensional minimization of the axis
/// drift. Both signs are tried, and the branch with the smaller drift wins,
/// ties broken toward `cos_angle >= 0`. The verdict requires both the axis
/// candidates and the normal angle to stay put within `tol`.
///
/// Planar fields (vanishing torsion throughout) are reported as
/// non-slant-helices with the binormal direction as axis, since every
/// quantity above degenerates there.
pub fn slant_helix_check(ff: &FrameField, tol: f64) -> Result<SlantHelixReport> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let samples = ff.samples();
    let n = samples.len();
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "slant-helix check needs at least 5 samples, got {n}"
        )));
    }

    if samples
        .iter()
        .all(|s| s.torsion.abs() <= PLANAR_TORSION_TOL)
    {
        let mut mean = Spatial::ZERO;
        for s in samples {
            mean = mean + s.normal2;
        }
        let axis = mean.normalized().ok_or_else(|| {
            Error::InvalidParameter("binormal samples cancel; field is inconsistent".into())
        })?;
        return Ok(SlantHelixReport {
            axis,
            cos_angle: 0.0,
            max_angle_deviation: 0.0,
            max_axis_drift: 0.0,
            verdict: false,
        });
    }

    let f: Vec<f64> = samples.iter().map(|s| s.torsion / s.curvature).collect();
    // seed the growth rate of the ratio where the ratio is smallest, which
    // is where the three-point stencil is best conditioned
    let best = (1..n - 1)
        .min_by(|&i, &j| f[i].abs().total_cmp(&f[j].abs()))
        .unwrap();
    let h0 = samples[best].s - samples[best - 1].s;
    let h1 = samples[best + 1].s - samples[best].s;
    let df = d1_3pt(f[best - 1], f[best], f[best + 1], h0, h1);
    let seed = df / (samples[best].curvature * (1.0 + f[best] * f[best]).powf(1.5));

    let candidates = |sigma: f64, eps: f64| -> Vec<Spatial> {
        let sin_theta = 1.0 / (1.0 + sigma * sigma).sqrt();
        let cos_theta = eps * sigma * sin_theta;
        samples
            .iter()
            .zip(&f)
            .map(|(s, &fi)| {
                let w = 1.0 / (1.0 + fi * fi).sqrt();
                s.tangent * (eps * fi * sin_theta * w)
                    + s.normal1 * cos_theta
                    + s.normal2 * (eps * sin_theta * w)
            })
            .collect()
    };
    let drift_of = |d: &[Spatial]| d.iter().map(|v| (*v - d[0]).norm()).fold(0.0f64, f64::max);

    // refine by minimizing the drift itself (golden-section search); a true
    // slant helix has one sharp minimum at its constant growth rate, and
    // the two sign branches produce exact negatives with identical drift
    let span = 0.5 * (1.0 + seed.abs());
    let (mut lo, mut hi) = (seed - span, seed + span);
    let inv_phi = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut g1 = drift_of(&candidates(x1, 1.0));
    let mut g2 = drift_of(&candidates(x2, 1.0));
    for _ in 0..80 {
        if g1 <= g2 {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = drift_of(&candidates(x1, 1.0));
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = drift_of(&candidates(x2, 1.0));
        }
    }
    let sigma = 0.5 * (lo + hi);
    let sin_theta = 1.0 / (1.0 + sigma * sigma).sqrt();

    let plus = candidates(sigma, 1.0);
    let minus = candidates(sigma, -1.0);
    let (drift_plus, drift_minus) = (drift_of(&plus), drift_of(&minus));
    // the two branches are exact negatives, so the drifts tie in practice
    let eps = if drift_plus < drift_minus {
        1.0
    } else if drift_minus < drift_plus {
        -1.0
    } else if sigma >= 0.0 {
        1.0
    } else {
        -1.0
    };
    let (d, max_axis_drift) = if eps > 0.0 {
        (plus, drift_plus)
    } else {
        (minus, drift_minus)
    };
    let cos_angle = eps * sigma * sin_theta;

    let mut mean = Spatial::ZERO;
    for v in &d {
        mean = mean + *v;
    }
    let axis = mean.normalized().ok_or_else(|| {
        Error::InvalidParameter("axis candidates cancel; field is inconsistent".into())
    })?;
    let max_angle_deviation = samples
        .iter()
        .map(|s| (axis.dot(s.normal1) - cos_angle).abs())
        .fold(0.0f64, f64::max);

    Ok(SlantHelixReport {
        axis,
        cos_angle,
        max_angle_deviation,
        max_axis_drift,
        verdict: max_axis_drift < tol && max_angle_deviation < tol,
    })
}

/// Runs the slant-helix check on the unit-torsion family.
///
/// The field is built on the positive half of the domain, clear of both the
/// curvature zero at the center and the speed collapse at the end, so the
/// frame is defined everywhere on the grid.
pub fn slant_helix_of_anti_salkowski(m: f64, samples: usize, tol: f64) -> Result<SlantHelixReport> {
    let c = crate::families::anti_salkowski(m, 0.05)?;
    let (_, hi) = c.domain();
    if samples < 5 {
        return Err(Error::InvalidParameter(format!(
            "need at least 5 samples, got {samples}"
        )));
    }
    let grid: Vec<f64> = (0..samples)
        .map(|i| hi * (0.15 + 0.75 * i as f64 / (samples - 1) as f64))
        .collect();
    let ff = crate::frenet::frame_field(&c, &grid, None)?;
    slant_helix_check(&ff, tol)
}

/// Outcome of the weaker test on the binormal direction.
#[derive(Debug, Clone, Copy)]
pub struct N2SlantHelixReport {
    /// Mean of `torsion / curvature`; the tangent of the angle between the
    /// binormal's fixed direction and the axis when the verdict holds.
    pub tan_angle: f64,
    /// Largest deviation of the ratio from its mean.
    pub max_deviation: f64,
    pub verdict: bool,
}

/// Tests whether the binormal keeps a constant angle with a fixed direction,
/// which happens exactly when `torsion / curvature` is constant (general
/// helices). Planar fields pass trivially with a zero ratio.
pub fn n2_slant_helix_check(ff: &FrameField, tol: f64) -> Result<N2SlantHelixReport> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let samples = ff.samples();
    if samples.len() < 2 {
        return Err(Error::InvalidParameter(
            "binormal-angle check needs at least 2 samples".into(),
        ));
    }
    let f: Vec<f64> = samples.iter().map(|s| s.torsion / s.curvature).collect();
    let mean = f.iter().sum::<f64>() / f.len() as f64;
    let max_deviation = f.iter().map(|v| (v - mean).abs()).fold(0.0f64, f64::max);
    Ok(N2SlantHelixReport {
        tan_angle: mean,
        max_deviation,
        verdict: max_deviation < tol,
    })
}
