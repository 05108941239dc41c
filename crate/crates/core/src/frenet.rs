//! Frenet apparatus: frames, curvature, torsion, and the tangent equation.

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::numeric::stencil::{d1_3pt, d2_3pt};
use crate::quaternion::Spatial;

/// Speeds at or below this are treated as singular parametrization points.
pub const DEFAULT_SPEED_TOL: f64 = 1e-12;

/// Curvatures at or below this leave the principal normal undefined.
pub const DEFAULT_CURVATURE_TOL: f64 = 1e-8;

/// The Frenet data of one curve point.
#[derive(Debug, Clone, Copy)]
pub struct FrenetSample {
    pub t: f64,
    /// Arc length measured from the left end of the curve domain.
    pub s: f64,
    pub speed: f64,
    pub tangent: Spatial,
    pub normal1: Spatial,
    pub normal2: Spatial,
    pub curvature: f64,
    pub torsion: f64,
}

/// Frenet samples along a parameter grid, with orientation made continuous.
#[derive(Debug, Clone)]
pub struct FrameField {
    samples: Vec<FrenetSample>,
    analytic: bool,
}

impl FrameField {
    pub fn samples(&self) -> &[FrenetSample] {
        &self.samples
    }

    /// True when every derivative used was analytic rather than numerical.
    pub fn is_analytic(&self) -> bool {
        self.analytic
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }
}

pub(crate) fn frenet_parts(
    c: &Curve,
    t: f64,
    step: Option<f64>,
) -> Result<(f64, Spatial, Spatial, Spatial, f64, f64)> {
    let d1 = c.derivative(t, 1, step)?;
    let d2 = c.derivative(t, 2, step)?;
    let d3 = c.derivative(t, 3, step)?;
    let v = d1.norm();
    if v <= DEFAULT_SPEED_TOL {
        return Err(Error::SingularPoint { t });
    }
    let tangent = d1 / v;
    let cross = d1.cross(d2);
    let curvature = cross.norm() / (v * v * v);
    if curvature <= DEFAULT_CURVATURE_TOL {
        return Err(Error::UndefinedFrame { t });
    }
    // normalized curvature vector: remove the tangential part of c'' first
    let v2 = v * v;
    let normal1 = (d2 / v2 - d1 * (d1.dot(d2) / (v2 * v2))) / curvature;
    let normal2 = tangent.cross(normal1);
    let torsion = cross.dot(d3) / cross.norm_squared();
    Ok((v, tangent, normal1, normal2, curvature, torsion))
}

/// The Frenet sample at a single parameter.
///
/// Fails with a singular-point error where the speed vanishes and an
/// undefined-frame error where the curvature does. The arc length is taken
/// from the left end of the domain, which costs one adaptive quadrature.
pub fn frenet_at(c: &Curve, t: f64, step: Option<f64>) -> Result<FrenetSample> {
    let (speed, tangent, normal1, normal2, curvature, torsion) = frenet_parts(c, t, step)?;
    let s = c.arc_length(c.domain().0, t)?;
    Ok(FrenetSample {
        t,
        s,
        speed,
        tangent,
        normal1,
        normal2,
        curvature,
        torsion,
    })
}

/// Frenet samples along `grid`, which must be strictly increasing and lie in
/// the curve domain.
///
/// Arc length is accumulated per grid interval, and the `(normal1, normal2)`
/// pair is sign-flipped where needed so the frame varies continuously along
/// the grid (the raw principal normal reverses across a curvature minimum
/// when the curve has an inflection between adjacent nodes).
pub fn frame_field(c: &Curve, grid: &[f64], step: Option<f64>) -> Result<FrameField> {
    if grid.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "frame field needs at least 2 grid points, got {}",
            grid.len()
        )));
    }
    if grid.iter().any(|t| t.is_nan()) || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "frame-field grid must be strictly increasing".into(),
        ));
    }
    let (lo, hi) = c.domain();
    let slack = 1e-9 * (hi - lo);
    if grid[0] < lo - slack || grid[grid.len() - 1] > hi + slack {
        return Err(Error::InvalidParameter(format!(
            "grid [{}, {}] leaves the curve domain [{lo}, {hi}]",
            grid[0],
            grid[grid.len() - 1]
        )));
    }

    let mut samples = Vec::with_capacity(grid.len());
    let mut s = c.arc_length(lo, grid[0])?;
    let mut prev_t = grid[0];
    for (i, &t) in grid.iter().enumerate() {
        if i > 0 {
            s += c.arc_length(prev_t, t)?;
            prev_t = t;
        }
        let (speed, tangent, normal1, normal2, curvature, torsion) = frenet_parts(c, t, step)?;
        samples.push(FrenetSample {
            t,
            s,
            speed,
            tangent,
            normal1,
            normal2,
            curvature,
            torsion,
        });
    }
    for i in 1..samples.len() {
        if samples[i].normal1.dot(samples[i - 1].normal1) < 0.0 {
            samples[i].normal1 = -samples[i].normal1;
            samples[i].normal2 = -samples[i].normal2;
        }
    }
    let analytic = c.has_analytic(1) && c.has_analytic(2) && c.has_analytic(3);
    Ok(FrameField { samples, analytic })
}

/// Like [`frame_field`], but a node where the frame does not exist degrades
/// into a partial sample instead of failing the whole grid: the normals and
/// the torsion are NaN there, and so are tangent and curvature if even the
/// speed vanishes. Arc length is always filled in. Returns the samples and
/// the number of degraded nodes. Meant for inspecting curves with isolated
/// flat points or sampled data of unknown quality; the checks in this crate
/// deliberately refuse such fields, so this returns plain samples rather
/// than a [`FrameField`].
pub fn frame_field_lenient(
    c: &Curve,
    grid: &[f64],
    step: Option<f64>,
) -> Result<(Vec<FrenetSample>, usize)> {
    if grid.len() < 2 {
        return Err(Error::InvalidParameter(format!(
            "frame field needs at least 2 grid points, got {}",
            grid.len()
        )));
    }
    if grid.iter().any(|t| t.is_nan()) || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter(
            "frame-field grid must be strictly increasing".into(),
        ));
    }
    let (lo, hi) = c.domain();
    let slack = 1e-9 * (hi - lo);
    if grid[0] < lo - slack || grid[grid.len() - 1] > hi + slack {
        return Err(Error::InvalidParameter(format!(
            "grid [{}, {}] leaves the curve domain [{lo}, {hi}]",
            grid[0],
            grid[grid.len() - 1]
        )));
    }

    let undefined = Spatial::new(f64::NAN, f64::NAN, f64::NAN);
    let mut samples = Vec::with_capacity(grid.len());
    let mut degraded = 0;
    let mut s = c.arc_length(lo, grid[0])?;
    let mut prev_t = grid[0];
    for (i, &t) in grid.iter().enumerate() {
        if i > 0 {
            s += c.arc_length(prev_t, t)?;
            prev_t = t;
        }
        let sample = match frenet_parts(c, t, step) {
            Ok((speed, tangent, normal1, normal2, curvature, torsion)) => FrenetSample {
                t,
                s,
                speed,
                tangent,
                normal1,
                normal2,
                curvature,
                torsion,
            },
            Err(Error::SingularPoint { .. }) | Err(Error::UndefinedFrame { .. }) => {
                degraded += 1;
                let d1 = c.derivative(t, 1, step)?;
                let v = d1.norm();
                let (tangent, curvature) = if v > DEFAULT_SPEED_TOL {
                    let d2 = c.derivative(t, 2, step)?;
                    (d1 / v, d1.cross(d2).norm() / (v * v * v))
                } else {
                    (undefined, f64::NAN)
                };
                FrenetSample {
                    t,
                    s,
                    speed: v,
                    tangent,
                    normal1: undefined,
                    normal2: undefined,
                    curvature,
                    torsion: f64::NAN,
                }
            }
            Err(err) => return Err(err),
        };
        samples.push(sample);
    }
    // keep the normal pair continuous across the defined stretches
    let mut last_defined: Option<usize> = None;
    for i in 0..samples.len() {
        if samples[i].normal1.x.is_nan() {
            continue;
        }
        if let Some(j) = last_defined {
            if samples[i].normal1.dot(samples[j].normal1) < 0.0 {
                samples[i].normal1 = -samples[i].normal1;
                samples[i].normal2 = -samples[i].normal2;
            }
        }
        last_defined = Some(i);
    }
    Ok((samples, degraded))
}

/// Total curvature `phi(t) = integral of curvature * speed` from the first
/// grid node to `t`, by the trapezoid rule on the field's own grid.
pub fn total_curvature(ff: &FrameField, t: f64) -> Result<f64> {
    let samples = ff.samples();
    let first = samples[0].t;
    let last = samples[samples.len() - 1].t;
    if !(first..=last).contains(&t) {
        return Err(Error::OutOfRange(format!(
            "t = {t} outside the sampled range [{first}, {last}]"
        )));
    }
    let g = |s: &FrenetSample| s.curvature * s.speed;
    let mut phi = 0.0;
    for w in samples.windows(2) {
        if t <= w[1].t {
            let h = w[1].t - w[0].t;
            let u = (t - w[0].t) / h;
            let gt = g(&w[0]) + u * (g(&w[1]) - g(&w[0]));
            return Ok(phi + (t - w[0].t) * 0.5 * (g(&w[0]) + gt));
        }
        phi += 0.5 * (g(&w[0]) + g(&w[1])) * (w[1].t - w[0].t);
    }
    Ok(phi)
}

/// Largest residual of the intrinsic third-order tangent equation.
///
/// In the total-curvature parameter `phi`, the unit tangent of any frame
/// field with torsion-to-curvature ratio `f` satisfies
///
/// ```text
/// d/dphi (t'' / f) + ((1 + f^2) / f) t' - (f' / f^2) t = 0
/// ```
///
/// where primes are `d/dphi`. This evaluates the left side by nonuniform
/// three-point differences on the field's grid and returns the largest norm
/// over the interior (the outermost two nodes at each end only feed the
/// stencils). The ratio must stay away from zero; fields with vanishing
/// torsion are rejected as degenerate.
pub fn tangent_ode_residual(ff: &FrameField) -> Result<f64> {
    let samples = ff.samples();
    let n = samples.len();
    if n < 7 {
        return Err(Error::InvalidParameter(format!(
            "tangent equation needs at least 7 samples, got {n}"
        )));
    }
    let f: Vec<f64> = samples.iter().map(|s| s.torsion / s.curvature).collect();
    if let Some(i) = f.iter().position(|v| v.abs() < 1e-8) {
        return Err(Error::DegenerateRatio(format!(
            "torsion-to-curvature ratio vanishes near t = {}",
            samples[i].t
        )));
    }
    let mut phi = vec![0.0; n];
    for i in 1..n {
        let g0 = samples[i - 1].curvature * samples[i - 1].speed;
        let g1 = samples[i].curvature * samples[i].speed;
        phi[i] = phi[i - 1] + 0.5 * (g0 + g1) * (samples[i].t - samples[i - 1].t);
    }
    // first pass: tangent and ratio derivatives on nodes 1..n-1
    let mut dt1 = vec![Spatial::ZERO; n];
    let mut dt2 = vec![Spatial::ZERO; n];
    let mut df1 = vec![0.0; n];
    let mut g = vec![Spatial::ZERO; n];
    for i in 1..n - 1 {
        let h0 = phi[i] - phi[i - 1];
        let h1 = phi[i + 1] - phi[i];
        let (t0, t1, t2) = (
            samples[i - 1].tangent,
            samples[i].tangent,
            samples[i + 1].tangent,
        );
        dt1[i] = d1_3pt(t0, t1, t2, h0, h1);
        dt2[i] = d2_3pt(t0, t1, t2, h0, h1);
        df1[i] = d1_3pt(f[i - 1], f[i], f[i + 1], h0, h1);
        g[i] = dt2[i] / f[i];
    }
    // second pass: d/dphi of g on nodes 2..n-2, then the residual
    let mut worst: f64 = 0.0;
    for i in 2..n - 2 {
        let h0 = phi[i] - phi[i - 1];
        let h1 = phi[i + 1] - phi[i];
        let dg = d1_3pt(g[i - 1], g[i], g[i + 1], h0, h1);
        let residual = dg + dt1[i] * ((1.0 + f[i] * f[i]) / f[i])
            - samples[i].tangent * (df1[i] / (f[i] * f[i]));
        worst = worst.max(residual.norm());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn helix(a: f64, b: f64) -> Curve {
        Curve::new(0.0, 2.0 * std::f64::consts::PI, move |t| {
            Spatial::new(a * t.cos(), a * t.sin(), b * t)
        })
        .unwrap()
        .with_derivative(1, move |t| Spatial::new(-a * t.sin(), a * t.cos(), b))
        .with_derivative(2, move |t| Spatial::new(-a * t.cos(), -a * t.sin(), 0.0))
        .with_derivative(3, move |t| Spatial::new(a * t.sin(), -a * t.cos(), 0.0))
    }

    fn uniform(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn helix_frame_matches_closed_form() {
        let (a, b) = (2.0, 0.5);
        let c = helix(a, b);
        let w2 = a * a + b * b;
        for &t in &[0.0, 0.9, 2.4, 5.5] {
            let fs = frenet_at(&c, t, None).unwrap();
            assert!((fs.curvature - a / w2).abs() < 1e-12);
            assert!((fs.torsion - b / w2).abs() < 1e-12);
            assert!((fs.speed - w2.sqrt()).abs() < 1e-12);
            let n1 = Spatial::new(-t.cos(), -t.sin(), 0.0);
            assert!((fs.normal1 - n1).norm() < 1e-12);
            // orthonormal right-handed triple
            assert!(fs.tangent.dot(fs.normal1).abs() < 1e-12);
            assert!((fs.tangent.cross(fs.normal1) - fs.normal2).norm() < 1e-15);
            assert!((fs.s - w2.sqrt() * t).abs() < 1e-9);
        }
    }

    #[test]
    fn degenerate_inputs_are_reported() {
        let line = Curve::new(0.0, 1.0, |t| Spatial::new(t, 2.0 * t, -t)).unwrap();
        assert!(matches!(
            frenet_at(&line, 0.5, None),
            Err(Error::UndefinedFrame { .. })
        ));
        let cusp = Curve::new(-1.0, 1.0, |t| Spatial::new(t * t, t * t * t, 0.0)).unwrap();
        assert!(matches!(
            frenet_at(&cusp, 0.0, None),
            Err(Error::SingularPoint { .. })
        ));
    }

    #[test]
    fn field_grid_validation() {
        let c = helix(1.0, 1.0);
        assert!(frame_field(&c, &[0.5], None).is_err());
        assert!(frame_field(&c, &[0.5, 0.5], None).is_err());
        assert!(frame_field(&c, &[0.5, 0.4], None).is_err());
        assert!(frame_field(&c, &[-0.5, 0.5], None).is_err());
    }

    #[test]
    fn field_arclength_is_cumulative() {
        let c = helix(1.0, 2.0);
        let grid = uniform(0.5, 4.5, 41);
        let ff = frame_field(&c, &grid, None).unwrap();
        let w = (5.0f64).sqrt();
        for s in ff.samples() {
            assert!((s.s - w * s.t).abs() < 1e-9);
        }
        assert!(ff.is_analytic());
    }

    #[test]
    fn orientation_is_continuous_across_an_inflection() {
        // planar cubic: curvature vanishes at t = 0 and the raw principal
        // normal reverses there
        let c = Curve::new(-1.0, 1.0, |t| Spatial::new(t, t * t * t, 0.0)).unwrap();
        let grid: Vec<f64> = uniform(-0.9, 0.9, 31)
            .into_iter()
            .filter(|t| t.abs() > 0.05)
            .collect();
        let ff = frame_field(&c, &grid, None).unwrap();
        for w in ff.samples().windows(2) {
            assert!(
                w[0].normal1.dot(w[1].normal1) > 0.0,
                "normal flipped between t = {} and t = {}",
                w[0].t,
                w[1].t
            );
        }
    }

    #[test]
    fn total_curvature_of_a_circle_is_the_angle() {
        let r = 2.5;
        let c = Curve::new(0.0, 6.0, move |t| {
            Spatial::new(r * t.cos(), r * t.sin(), 0.0)
        })
        .unwrap();
        let grid = uniform(0.0, 6.0, 201);
        let ff = frame_field(&c, &grid, None).unwrap();
        for &t in &[0.0, 1.234, 3.0, 6.0] {
            assert!((total_curvature(&ff, t).unwrap() - t).abs() < 1e-6);
        }
        assert!(total_curvature(&ff, 6.5).is_err());
        assert!(total_curvature(&ff, -0.1).is_err());
    }

    #[test]
    fn tangent_equation_on_a_helix() {
        let c = helix(1.0, 1.0);
        let grid = uniform(0.1, 6.0, 201);
        let ff = frame_field(&c, &grid, None).unwrap();
        let residual = tangent_ode_residual(&ff).unwrap();
        assert!(residual < 1e-2, "helix residual {residual}");
    }

    #[test]
    fn tangent_equation_rejects_vanishing_torsion() {
        let circle = Curve::new(0.0, 6.0, |t| Spatial::new(t.cos(), t.sin(), 0.0)).unwrap();
        let grid = uniform(0.1, 5.9, 61);
        let ff = frame_field(&circle, &grid, None).unwrap();
        assert!(matches!(
            tangent_ode_residual(&ff),
            Err(Error::DegenerateRatio(_))
        ));
    }

    #[test]
    fn lenient_field_degrades_flat_nodes() {
        // straight line: every node lacks a frame, but tangent and arc
        // length still come out
        let line = Curve::new(0.0, 2.0, |t| Spatial::new(t, 2.0 * t, 2.0 * t)).unwrap();
        let grid = uniform(0.1, 1.9, 7);
        let (samples, degraded) = frame_field_lenient(&line, &grid, None).unwrap();
        assert_eq!(degraded, 7);
        let dir = Spatial::new(1.0, 2.0, 2.0) / 3.0;
        for s in &samples {
            assert!((s.tangent - dir).norm() < 1e-9);
            assert!((s.s - 3.0 * s.t).abs() < 1e-9);
            assert!(s.normal1.x.is_nan() && s.torsion.is_nan());
        }
    }

    #[test]
    fn lenient_field_matches_strict_one_on_good_grids() {
        let c = helix(1.0, 2.0);
        let grid = uniform(0.5, 4.5, 41);
        let strict = frame_field(&c, &grid, None).unwrap();
        let (samples, degraded) = frame_field_lenient(&c, &grid, None).unwrap();
        assert_eq!(degraded, 0);
        for (a, b) in samples.iter().zip(strict.samples()) {
            assert!((a.normal1 - b.normal1).norm() < 1e-15);
            assert!((a.torsion - b.torsion).abs() < 1e-15);
            assert!((a.s - b.s).abs() < 1e-15);
        }
    }

    #[test]
    fn lenient_field_flags_an_isolated_inflection() {
        let c = Curve::new(-1.0, 1.0, |t| Spatial::new(t, t * t * t, 0.0)).unwrap();
        let grid = uniform(-0.8, 0.8, 17); // hits t = 0 exactly
        let (samples, degraded) = frame_field_lenient(&c, &grid, None).unwrap();
        assert_eq!(degraded, 1);
        assert!(samples[8].normal1.x.is_nan());
        assert!(!samples[7].normal1.x.is_nan());
        // the defined stretches stay mutually consistent across the gap
        for w in samples.windows(2) {
            let inner = w[0].normal1.dot(w[1].normal1);
            assert!(inner.is_nan() || inner > 0.0);
        }
    }
}
