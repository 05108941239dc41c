//! Similarity of space curves: whether one curve maps onto another under a
//! rigid motion combined with uniform scaling.
//!
//! Two curves are compared through their frame fields after matching points
//! by an intrinsic, scale-invariant parameter (total curvature, or total
//! torsion for the binormal criterion). Four interchangeable criteria are
//! offered; on well-behaved data they agree.

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::frenet::{frame_field, FrameField, DEFAULT_SPEED_TOL};
use crate::numeric::procrustes::best_rotation;
use crate::quaternion::Spatial;

use super::slant_helix::PLANAR_TORSION_TOL;

/// Curvatures at or below this classify a probe as straight.
const LINE_CURVATURE_TOL: f64 = 1e-8;

/// Which matched field the discrepancy is measured on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    /// Unit tangents at equal total curvature.
    Tangent,
    /// Principal normals at equal total curvature.
    Normal,
    /// Binormals at equal total torsion; needs torsion of constant sign.
    Binormal,
    /// Torsion-to-curvature ratios at equal total curvature; gauge-free.
    Ratio,
}

impl std::fmt::Display for Criterion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Criterion::Tangent => "tangent",
            Criterion::Normal => "normal",
            Criterion::Binormal => "binormal",
            Criterion::Ratio => "ratio",
        })
    }
}

impl std::str::FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Criterion> {
        match s {
            "tangent" => Ok(Criterion::Tangent),
            "normal" => Ok(Criterion::Normal),
            "binormal" => Ok(Criterion::Binormal),
            "ratio" => Ok(Criterion::Ratio),
            other => Err(Error::InvalidParameter(format!(
                "unknown criterion {other:?}; expected tangent, normal, binormal, or ratio"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SimilarityOptions {
    pub criterion: Criterion,
    pub tol: f64,
    /// Compare |ratio| instead of the signed ratio, which identifies a curve
    /// with its antipodal image (the point reflection flips torsion).
    pub magnitude_ratio: bool,
}

impl Default for SimilarityOptions {
    fn default() -> SimilarityOptions {
        SimilarityOptions {
            criterion: Criterion::Tangent,
            tol: 1e-4,
            magnitude_ratio: false,
        }
    }
}

/// Outcome of a similarity comparison.
#[derive(Debug, Clone)]
pub struct SimilarityReport {
    pub criterion: Criterion,
    /// Thinned `(arc length on b, curvature ratio k_b / k_a)` pairs at the
    /// matched points; for genuinely similar curves the ratio is the
    /// constant scale factor.
    pub transformation_samples: Vec<(f64, f64)>,
    pub max_discrepancy: f64,
    pub verdict: bool,
}

/// Degeneracy class of a curve, from coarse probing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveClass {
    Line,
    Planar,
    Regular,
}

/// Classifies a curve by probing curvature and torsion at up to 33 of the
/// grid nodes.
pub fn classify_curve(c: &Curve, grid: &[f64]) -> Result<CurveClass> {
    if grid.len() < 2 {
        return Err(Error::InvalidParameter(
            "classification needs at least 2 grid nodes".into(),
        ));
    }
    let count = grid.len().min(33);
    let mut curved = false;
    let mut twisted = false;
    for j in 0..count {
        let t = grid[j * (grid.len() - 1) / (count - 1)];
        let d1 = c.derivative(t, 1, None)?;
        let d2 = c.derivative(t, 2, None)?;
        let v = d1.norm();
        if v <= DEFAULT_SPEED_TOL {
            return Err(Error::SingularPoint { t });
        }
        let cross = d1.cross(d2);
        let curvature = cross.norm() / (v * v * v);
        if curvature > LINE_CURVATURE_TOL {
            curved = true;
            let d3 = c.derivative(t, 3, None)?;
            if (cross.dot(d3) / cross.norm_squared()).abs() > PLANAR_TORSION_TOL {
                twisted = true;
            }
        }
    }
    Ok(if !curved {
        CurveClass::Line
    } else if !twisted {
        CurveClass::Planar
    } else {
        CurveClass::Regular
    })
}

/// The matching parameter along a field: total curvature, or signed total
/// torsion for the binormal criterion (oriented so it increases).
fn match_values(ff: &FrameField, criterion: Criterion) -> Result<Vec<f64>> {
    let samples = ff.samples();
    let mut u = vec![0.0; samples.len()];
    match criterion {
        Criterion::Binormal => {
            if let Some(s) = samples
                .iter()
                .find(|s| s.torsion.abs() <= PLANAR_TORSION_TOL)
            {
                return Err(Error::CriterionInapplicable(format!(
                    "binormal matching needs torsion of constant sign, \
                     but it vanishes near t = {}",
                    s.t
                )));
            }
            let orient = samples[0].torsion.signum();
            if let Some(s) = samples.iter().find(|s| s.torsion.signum() != orient) {
                return Err(Error::CriterionInapplicable(format!(
                    "binormal matching needs torsion of constant sign, \
                     but it changes sign near t = {}",
                    s.t
                )));
            }
            for i in 1..samples.len() {
                let g0 = samples[i - 1].torsion * samples[i - 1].speed;
                let g1 = samples[i].torsion * samples[i].speed;
                u[i] = u[i - 1] + orient * 0.5 * (g0 + g1) * (samples[i].t - samples[i - 1].t);
            }
        }
        _ => {
            for i in 1..samples.len() {
                let g0 = samples[i - 1].curvature * samples[i - 1].speed;
                let g1 = samples[i].curvature * samples[i].speed;
                u[i] = u[i - 1] + 0.5 * (g0 + g1) * (samples[i].t - samples[i - 1].t);
            }
        }
    }
    Ok(u)
}

struct Interpolated {
    tangent: Spatial,
    normal1: Spatial,
    normal2: Spatial,
    curvature: f64,
    ratio: f64,
    s: f64,
}

/// Linear interpolation of the field data of `b` at matching value `u`.
/// Interpolated frame vectors are deliberately not renormalized; the error
/// that introduces is quadratic in the grid spacing, like everything else.
fn interpolate(u_b: &[f64], ff: &FrameField, u: f64) -> Interpolated {
    let samples = ff.samples();
    let j = u_b.partition_point(|&x| x < u).clamp(1, u_b.len() - 1);
    let (u0, u1) = (u_b[j - 1], u_b[j]);
    let w = if u1 > u0 { (u - u0) / (u1 - u0) } else { 0.0 };
    let (s0, s1) = (&samples[j - 1], &samples[j]);
    let lerp = |a: Spatial, b: Spatial| a + (b - a) * w;
    let lerp_f = |a: f64, b: f64| a + (b - a) * w;
    Interpolated {
        tangent: lerp(s0.tangent, s1.tangent),
        normal1: lerp(s0.normal1, s1.normal1),
        normal2: lerp(s0.normal2, s1.normal2),
        curvature: lerp_f(s0.curvature, s1.curvature),
        ratio: lerp_f(s0.torsion / s0.curvature, s1.torsion / s1.curvature),
        s: lerp_f(s0.s, s1.s),
    }
}

fn bypass_report(criterion: Criterion) -> SimilarityReport {
    SimilarityReport {
        criterion,
        transformation_samples: Vec::new(),
        max_discrepancy: 0.0,
        verdict: true,
    }
}

/// Decides whether two curves are similar under the chosen criterion.
///
/// Both curves are sampled on their own grids, matched at equal values of
/// the intrinsic parameter, and compared over the shared range of that
/// parameter (both measured from the respective grid start, so the grids
/// should start at corresponding points). Frame-vector criteria are
/// evaluated after a single best-fit rotation computed from the matched
/// tangent pairs, since similarity is only claimed up to rigid motion; the
/// ratio criterion needs no gauge.
///
/// Degenerate inputs short-circuit: any two straight lines are similar, as
/// are any two plane curves under the binormal criterion (both binormal
/// fields are constant). A degenerate curve paired with a regular one is
/// not comparable and errors out, as does an empty shared matching range.
pub fn similar_check(
    a: &Curve,
    grid_a: &[f64],
    b: &Curve,
    grid_b: &[f64],
    opts: &SimilarityOptions,
) -> Result<SimilarityReport> {
    if !opts.tol.is_finite() || opts.tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {}",
            opts.tol
        )));
    }
    let class_a = classify_curve(a, grid_a)?;
    let class_b = classify_curve(b, grid_b)?;
    match (class_a, class_b) {
        (CurveClass::Line, CurveClass::Line) => return Ok(bypass_report(opts.criterion)),
        (CurveClass::Line, _) | (_, CurveClass::Line) => {
            return Err(Error::CriterionInapplicable(
                "a straight line is only comparable to another straight line".into(),
            ));
        }
        (CurveClass::Planar, CurveClass::Planar) => {
            if opts.criterion == Criterion::Binormal {
                return Ok(bypass_report(opts.criterion));
            }
        }
        (CurveClass::Planar, CurveClass::Regular) | (CurveClass::Regular, CurveClass::Planar) => {
            return Err(Error::CriterionInapplicable(
                "a plane curve is only comparable to another plane curve".into(),
            ));
        }
        (CurveClass::Regular, CurveClass::Regular) => {}
    }

    let ff_a = frame_field(a, grid_a, None)?;
    let ff_b = frame_field(b, grid_b, None)?;
    let u_a = match_values(&ff_a, opts.criterion)?;
    let u_b = match_values(&ff_b, opts.criterion)?;
    let hi = u_a[u_a.len() - 1].min(u_b[u_b.len() - 1]);
    if hi <= 1e-12 {
        return Err(Error::IncomparableRange(
            "the curves share no range of the matching parameter".into(),
        ));
    }

    let slack = 1e-12 * hi;
    let mut matches = Vec::new();
    for (i, &u) in u_a.iter().enumerate() {
        if u <= hi + slack {
            matches.push((i, interpolate(&u_b, &ff_b, u.min(hi))));
        }
    }
    if matches.len() < 2 {
        return Err(Error::IncomparableRange(
            "fewer than 2 samples fall in the shared matching range".into(),
        ));
    }

    let samples_a = ff_a.samples();
    let gauge = match opts.criterion {
        Criterion::Ratio => None,
        _ => {
            let pairs: Vec<(Spatial, Spatial)> = matches
                .iter()
                .map(|(i, m)| (samples_a[*i].tangent, m.tangent))
                .collect();
            Some(best_rotation(&pairs))
        }
    };

    let stride = (matches.len() / 64).max(1);
    let mut transformation_samples = Vec::new();
    let mut max_discrepancy: f64 = 0.0;
    for (pos, (i, m)) in matches.iter().enumerate() {
        let sa = &samples_a[*i];
        let disc = match opts.criterion {
            Criterion::Tangent => (gauge.unwrap().apply(sa.tangent) - m.tangent).norm(),
            Criterion::Normal => (gauge.unwrap().apply(sa.normal1) - m.normal1).norm(),
            Criterion::Binormal => (gauge.unwrap().apply(sa.normal2) - m.normal2).norm(),
            Criterion::Ratio => {
                let fa = sa.torsion / sa.curvature;
                if opts.magnitude_ratio {
                    (fa.abs() - m.ratio.abs()).abs()
                } else {
                    (fa - m.ratio).abs()
                }
            }
        };
        max_discrepancy = max_discrepancy.max(disc);
        if pos % stride == 0 {
            transformation_samples.push((m.s, m.curvature / sa.curvature));
        }
    }

    Ok(SimilarityReport {
        criterion: opts.criterion,
        transformation_samples,
        max_discrepancy,
        verdict: max_discrepancy < opts.tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{circle, circular_helix, line, salkowski};
    use crate::numeric::procrustes::Rotation;

    fn uniform(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    fn opts(criterion: Criterion) -> SimilarityOptions {
        SimilarityOptions {
            criterion,
            tol: 1e-4,
            magnitude_ratio: false,
        }
    }

    #[test]
    fn classification() {
        let grid = uniform(0.0, 6.0, 65);
        let l = line(Spatial::ZERO, Spatial::new(1.0, 1.0, 0.0)).unwrap();
        assert_eq!(classify_curve(&l, &grid).unwrap(), CurveClass::Line);
        let c = circle(2.0).unwrap();
        assert_eq!(classify_curve(&c, &grid).unwrap(), CurveClass::Planar);
        let h = circular_helix(1.0, 0.3).unwrap();
        assert_eq!(classify_curve(&h, &grid).unwrap(), CurveClass::Regular);
    }

    #[test]
    fn circles_of_different_radius_are_similar() {
        let a = circle(1.0).unwrap();
        let b = circle(2.0).unwrap();
        let grid = uniform(0.0, 6.0, 301);
        let report = similar_check(&a, &grid, &b, &grid, &opts(Criterion::Tangent)).unwrap();
        assert!(report.verdict, "discrepancy {}", report.max_discrepancy);
        for (_, lambda) in &report.transformation_samples {
            assert!((lambda - 0.5).abs() < 1e-9);
        }
    }

    #[test]
    fn scaled_helices_agree_under_every_criterion() {
        let a = circular_helix(1.0, 1.0).unwrap();
        let b = circular_helix(2.0, 2.0).unwrap();
        let grid = uniform(0.1, 6.1, 401);
        for criterion in [
            Criterion::Tangent,
            Criterion::Normal,
            Criterion::Binormal,
            Criterion::Ratio,
        ] {
            let report = similar_check(&a, &grid, &b, &grid, &opts(criterion)).unwrap();
            assert!(
                report.verdict,
                "{criterion}: discrepancy {}",
                report.max_discrepancy
            );
        }
        let report = similar_check(&a, &grid, &b, &grid, &opts(Criterion::Tangent)).unwrap();
        for (_, lambda) in &report.transformation_samples {
            assert!((lambda - 0.5).abs() < 1e-6);
        }
    }

    #[test]
    fn rigid_copies_are_similar_with_unit_scale() {
        let a = salkowski(1.0, 0.05).unwrap();
        let (_, hi) = a.domain();
        let rot = Rotation::from_axis_angle(Spatial::new(1.0, 2.0, 3.0), 1.1).unwrap();
        let b = a.transformed(rot, Spatial::new(0.3, -1.0, 2.0));
        let grid = uniform(hi / 19.0, hi, 401);
        for criterion in [
            Criterion::Tangent,
            Criterion::Normal,
            Criterion::Binormal,
            Criterion::Ratio,
        ] {
            let report = similar_check(&a, &grid, &b, &grid, &opts(criterion)).unwrap();
            assert!(
                report.verdict && report.max_discrepancy < 1e-6,
                "{criterion}: discrepancy {}",
                report.max_discrepancy
            );
        }
    }

    #[test]
    fn antipodal_images_need_the_magnitude_ratio() {
        let a = salkowski(1.0, 0.05).unwrap();
        let b = a.antipodal();
        let (_, hi) = a.domain();
        let grid = uniform(hi / 19.0, hi, 401);
        let plain = similar_check(&a, &grid, &b, &grid, &opts(Criterion::Ratio)).unwrap();
        assert!(!plain.verdict);
        let magnitude = SimilarityOptions {
            criterion: Criterion::Ratio,
            tol: 1e-4,
            magnitude_ratio: true,
        };
        let report = similar_check(&a, &grid, &b, &grid, &magnitude).unwrap();
        assert!(report.verdict, "discrepancy {}", report.max_discrepancy);
        assert!(
            !similar_check(&a, &grid, &b, &grid, &opts(Criterion::Tangent))
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn degenerate_pairings() {
        let grid = uniform(0.0, 6.0, 65);
        let l1 = line(Spatial::ZERO, Spatial::new(1.0, 2.0, 2.0)).unwrap();
        let l2 = line(Spatial::new(1.0, 1.0, 1.0), Spatial::new(-3.0, 0.0, 4.0)).unwrap();
        assert!(
            similar_check(&l1, &grid, &l2, &grid, &opts(Criterion::Tangent))
                .unwrap()
                .verdict
        );
        let c = circle(1.0).unwrap();
        assert!(matches!(
            similar_check(&l1, &grid, &c, &grid, &opts(Criterion::Tangent)),
            Err(Error::CriterionInapplicable(_))
        ));
        let h = circular_helix(1.0, 1.0).unwrap();
        assert!(matches!(
            similar_check(&c, &grid, &h, &grid, &opts(Criterion::Tangent)),
            Err(Error::CriterionInapplicable(_))
        ));
        // plane curves all share a constant binormal
        let c2 = circle(3.0).unwrap();
        assert!(
            similar_check(&c, &grid, &c2, &grid, &opts(Criterion::Binormal))
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn binormal_matching_requires_single_signed_torsion() {
        let a = salkowski(1.0, 0.05).unwrap();
        let (lo, hi) = a.domain();
        let grid = uniform(lo, hi, 201);
        assert!(matches!(
            similar_check(&a, &grid, &a, &grid, &opts(Criterion::Binormal)),
            Err(Error::CriterionInapplicable(_))
        ));
    }

    #[test]
    fn verdicts_are_symmetric() {
        let a = circular_helix(1.0, 1.0).unwrap();
        let b = circular_helix(2.0, 2.0).unwrap();
        let grid = uniform(0.1, 6.1, 201);
        let ab = similar_check(&a, &grid, &b, &grid, &opts(Criterion::Tangent)).unwrap();
        let ba = similar_check(&b, &grid, &a, &grid, &opts(Criterion::Tangent)).unwrap();
        assert_eq!(ab.verdict, ba.verdict);

        let s = salkowski(1.0, 0.05).unwrap();
        let (_, hi) = s.domain();
        let gs = uniform(hi / 19.0, hi, 201);
        let sb = similar_check(&s, &gs, &b, &grid, &opts(Criterion::Tangent)).unwrap();
        let bs = similar_check(&b, &grid, &s, &gs, &opts(Criterion::Tangent)).unwrap();
        assert_eq!(sb.verdict, bs.verdict);
        assert!(!sb.verdict);
    }
}
