//! The torsion law of unit-curvature curves: in arc length, the quantity
//! `torsion / sqrt(1 + torsion^2)` is an affine function of `s`.

use crate::error::{Error, Result};
use crate::frenet::FrameField;

/// How far curvature may stray from 1 before the law does not apply.
pub const UNIT_CURVATURE_TOL: f64 = 1e-4;

/// Outcome of fitting the unit-curvature torsion law.
#[derive(Debug, Clone, Copy)]
pub struct TorsionLawReport {
    /// Slant angle implied by the slope: `pi/2 - atan(b)`.
    pub theta: f64,
    /// Magnitude of the fitted slope; the family's shape parameter.
    pub b: f64,
    /// Sign of the fitted slope.
    pub sign: f64,
    /// Largest absolute residual of the affine fit.
    pub max_residual: f64,
    /// True when the slope is below `tol`, i.e. torsion is constant and the
    /// law carries no shape information (zero torsion means a plane arc).
    pub degenerate_plane: bool,
    pub verdict: bool,
}

/// Fits `torsion / sqrt(1 + torsion^2)` against arc length by least squares
/// and reports how well the affine law holds.
///
/// The field must have unit curvature throughout (within
/// [`UNIT_CURVATURE_TOL`]); the intercept of the fit absorbs the arbitrary
/// arc-length origin. The fitted line must stay inside `(-1, 1)` over the
/// sampled range, since the quantity is a sine; crossing that bound means
/// the samples extend past where any curve of this family can reach.
pub fn salkowski_torsion_law(ff: &FrameField, tol: f64) -> Result<TorsionLawReport> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let samples = ff.samples();
    if samples.len() < 3 {
        return Err(Error::InvalidParameter(
            "torsion-law fit needs at least 3 samples".into(),
        ));
    }
    let worst_curvature = samples
        .iter()
        .map(|s| (s.curvature - 1.0).abs())
        .fold(0.0f64, f64::max);
    if worst_curvature > UNIT_CURVATURE_TOL {
        return Err(Error::NotUnitCurvature(format!(
            "curvature deviates from 1 by {worst_curvature:.3e}"
        )));
    }

    let n = samples.len() as f64;
    let ys: Vec<f64> = samples
        .iter()
        .map(|s| s.torsion / (1.0 + s.torsion * s.torsion).sqrt())
        .collect();
    let mean_s = samples.iter().map(|s| s.s).sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (s, y) in samples.iter().zip(&ys) {
        cov += (s.s - mean_s) * (y - mean_y);
        var += (s.s - mean_s) * (s.s - mean_s);
    }
    let slope = cov / var;
    let intercept = mean_y - slope * mean_s;

    let mut max_residual: f64 = 0.0;
    for (s, y) in samples.iter().zip(&ys) {
        let fitted = intercept + slope * s.s;
        if fitted.abs() >= 1.0 - 1e-12 {
            return Err(Error::DomainExceeded(format!(
                "fitted law reaches {fitted} at s = {}; |.| must stay below 1",
                s.s
            )));
        }
        max_residual = max_residual.max((y - fitted).abs());
    }

    let b = slope.abs();
    let degenerate_plane = b <= tol;
    Ok(TorsionLawReport {
        theta: std::f64::consts::FRAC_PI_2 - b.atan(),
        b,
        sign: if slope >= 0.0 { 1.0 } else { -1.0 },
        max_residual,
        degenerate_plane,
        verdict: max_residual < tol && !degenerate_plane,
    })
}
