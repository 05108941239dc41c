//! Duality between a curve and the integral of its binormal: the two swap
//! curvature with torsion and tangent with binormal.

use crate::curve::Curve;
use crate::error::Result;
use crate::families::binormal_integral;
use crate::frenet::{frame_field, frenet_parts};

use super::slant_helix::PLANAR_TORSION_TOL;

/// Residuals of the five frame relations between a curve and its binormal
/// integral. On planar inputs the dual is a straight line, so only the
/// curvature and tangent relations are measurable; the other three come
/// back as NaN and do not enter the verdict.
#[derive(Debug, Clone, Copy)]
pub struct DualityReport {
    /// sup |curvature_dual - |torsion||
    pub curvature_residual: f64,
    /// sup |torsion_dual - curvature|
    pub torsion_residual: f64,
    /// sup |tangent_dual - normal2|
    pub tangent_residual: f64,
    /// sup |normal1_dual - normal1|
    pub normal_residual: f64,
    /// sup |normal2_dual + tangent|
    pub binormal_residual: f64,
    pub verdict: bool,
}

/// Integrates the binormal of `c` along `grid` and measures how well the
/// dual curve's Frenet data matches the predicted swap.
///
/// The curvature, torsion, and tangent relations hold for any Frenet curve;
/// the two orientation relations (`normal1` fixed, `normal2` turning into
/// the reversed tangent) additionally need negative torsion, so a field with
/// positive torsion fails the verdict through those two residuals. All
/// residuals are taken over the interior grid nodes: the dual is an
/// interpolated curve whose outermost spline pieces are one order less
/// accurate, and measuring on top of them would drown the interior signal.
///
/// Planar inputs take a reduced path: the dual of a plane curve is a
/// straight line, whose frame is undefined, so only the curvature and
/// tangent relations are checked (against zero and the constant binormal).
pub fn binormal_duality_check(c: &Curve, grid: &[f64], tol: f64) -> Result<DualityReport> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(crate::error::Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let ff = frame_field(c, grid, None)?;
    let samples = ff.samples();
    if samples.len() < 3 {
        return Err(crate::error::Error::InvalidParameter(
            "duality check needs at least 3 grid nodes".into(),
        ));
    }
    let beta = binormal_integral(c, grid)?;
    let planar = samples
        .iter()
        .all(|s| s.torsion.abs() <= PLANAR_TORSION_TOL);

    if planar {
        let mut curvature_residual: f64 = 0.0;
        let mut tangent_residual: f64 = 0.0;
        for s in &samples[1..samples.len() - 1] {
            let d1 = beta.derivative(s.t, 1, None)?;
            let d2 = beta.derivative(s.t, 2, None)?;
            let v = d1.norm();
            curvature_residual = curvature_residual.max(d1.cross(d2).norm() / (v * v * v));
            tangent_residual = tangent_residual.max((d1 / v - s.normal2).norm());
        }
        return Ok(DualityReport {
            curvature_residual,
            torsion_residual: f64::NAN,
            tangent_residual,
            normal_residual: f64::NAN,
            binormal_residual: f64::NAN,
            verdict: curvature_residual < tol && tangent_residual < tol,
        });
    }

    let mut curvature_residual: f64 = 0.0;
    let mut torsion_residual: f64 = 0.0;
    let mut tangent_residual: f64 = 0.0;
    let mut normal_residual: f64 = 0.0;
    let mut binormal_residual: f64 = 0.0;
    for s in &samples[1..samples.len() - 1] {
        let (_, tangent_b, normal1_b, normal2_b, curvature_b, torsion_b) =
            frenet_parts(&beta, s.t, None)?;
        curvature_residual = curvature_residual.max((curvature_b - s.torsion.abs()).abs());
        torsion_residual = torsion_residual.max((torsion_b - s.curvature).abs());
        tangent_residual = tangent_residual.max((tangent_b - s.normal2).norm());
        normal_residual = normal_residual.max((normal1_b - s.normal1).norm());
        binormal_residual = binormal_residual.max((normal2_b + s.tangent).norm());
    }
    let worst = curvature_residual
        .max(torsion_residual)
        .max(tangent_residual)
        .max(normal_residual)
        .max(binormal_residual);
    Ok(DualityReport {
        curvature_residual,
        torsion_residual,
        tangent_residual,
        normal_residual,
        binormal_residual,
        verdict: worst < tol,
    })
}
