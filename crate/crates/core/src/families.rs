//! Curve families with constant curvature or constant torsion, plus the
//! standard fixtures (lines, circles, circular helices) used in tests and
//! comparisons.

use crate::curve::Curve;
use crate::error::{Error, Result};
use crate::frenet::{frame_field, frenet_parts};
use crate::numeric::spline::{Boundary, CubicSpline};
use crate::quaternion::Spatial;

/// Derived constants shared by the two families.
///
/// For a shape parameter `m`, the angle scale is `n = m / sqrt(1 + m^2)` and
/// the largest symmetric parameter interval on which the apparatus stays
/// finite is `(-pi/(2n), pi/(2n))`. The stored bounds keep a fraction of
/// that interval away from each end.
#[derive(Debug, Clone, Copy)]
pub struct SalkowskiParams {
    pub m: f64,
    pub n: f64,
    pub t_lo: f64,
    pub t_hi: f64,
}

impl SalkowskiParams {
    /// Validates `m` and the margin fraction and derives the safe domain.
    ///
    /// `m` must be finite, nonzero, and stay away from the two degenerate
    /// values where one of the mixing frequencies `1 +- 2n` vanishes.
    /// `margin_fraction` is the fraction of the half-interval clipped off
    /// each end and must lie strictly between 0 and 1.
    pub fn new(m: f64, margin_fraction: f64) -> Result<SalkowskiParams> {
        if !m.is_finite() || m == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "shape parameter must be finite and nonzero, got {m}"
            )));
        }
        if !(0.0..1.0).contains(&margin_fraction) || margin_fraction == 0.0 {
            return Err(Error::InvalidParameter(format!(
                "margin fraction must lie in (0, 1), got {margin_fraction}"
            )));
        }
        let n = m / (1.0 + m * m).sqrt();
        let p = 1.0 + 2.0 * n;
        let q = 1.0 - 2.0 * n;
        if p.abs() < 1e-12 || q.abs() < 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "m = {m} makes a mixing frequency vanish (n = {n}); \
                 the closed form degenerates there"
            )));
        }
        let half = std::f64::consts::FRAC_PI_2 / n.abs();
        let reach = half * (1.0 - margin_fraction);
        Ok(SalkowskiParams {
            m,
            n,
            t_lo: -reach,
            t_hi: reach,
        })
    }
}

/// `(cos(w t) - 1) / w` without cancellation near `w t = 0`.
fn cosm1(w: f64, t: f64) -> f64 {
    let half = (0.5 * w * t).sin();
    -2.0 * half * half / w
}

/// The unit-curvature curve with torsion `tan(n t)`.
///
/// Curvature is identically 1; torsion, speed, and arc length from `t = 0`
/// are `tan(n t)`, `cos(n t) / sqrt(1 + m^2)`, and `sin(n t) / m`. All three
/// derivatives are attached in closed form. The principal normal makes the
/// constant angle `arccos(n)` with the fixed direction `-e3`, which is what
/// the slant-helix check recovers.
pub fn salkowski(m: f64, margin_fraction: f64) -> Result<Curve> {
    let SalkowskiParams { m, n, t_lo, t_hi } = SalkowskiParams::new(m, margin_fraction)?;
    let pre = 1.0 / (1.0 + m * m).sqrt();
    let p = 1.0 + 2.0 * n;
    let q = 1.0 - 2.0 * n;
    let (a, b) = ((1.0 - n) / 4.0, (1.0 + n) / 4.0);

    let pos = move |t: f64| {
        Spatial::new(
            pre * (a * (p * t).sin() / p + b * (q * t).sin() / q + t.sin() / 2.0),
            pre * (a * (p * t).cos() / p + b * (q * t).cos() / q + t.cos() / 2.0),
            pre * (2.0 * n * t).cos() / (4.0 * m),
        )
    };
    let d1 = move |t: f64| {
        Spatial::new(
            pre * (a * (p * t).cos() + b * (q * t).cos() + t.cos() / 2.0),
            pre * (-a * (p * t).sin() - b * (q * t).sin() - t.sin() / 2.0),
            -pre * n * (2.0 * n * t).sin() / (2.0 * m),
        )
    };
    let d2 = move |t: f64| {
        Spatial::new(
            pre * (-a * p * (p * t).sin() - b * q * (q * t).sin() - t.sin() / 2.0),
            pre * (-a * p * (p * t).cos() - b * q * (q * t).cos() - t.cos() / 2.0),
            -pre * n * n * (2.0 * n * t).cos() / m,
        )
    };
    let d3 = move |t: f64| {
        Spatial::new(
            pre * (-a * p * p * (p * t).cos() - b * q * q * (q * t).cos() - t.cos() / 2.0),
            pre * (a * p * p * (p * t).sin() + b * q * q * (q * t).sin() + t.sin() / 2.0),
            2.0 * pre * n * n * n * (2.0 * n * t).sin() / m,
        )
    };

    Ok(Curve::new(t_lo, t_hi, pos)?
        .with_derivative(1, d1)
        .with_derivative(2, d2)
        .with_derivative(3, d3)
        .with_label(format!("salkowski(m={m})"))
        .with_param("m", m)
        .with_param("n", n)
        .with_param("margin", margin_fraction))
}

/// The Frenet triple of the unit-curvature family in closed form.
///
/// Returns `(tangent, normal1, normal2)` at parameter `t`. Unlike the curve
/// constructor this accepts any finite `t`; the formulas are entire.
pub fn salkowski_frame_closed_form(m: f64, t: f64) -> Result<(Spatial, Spatial, Spatial)> {
    let params = SalkowskiParams::new(m, 0.5)?;
    let n = params.n;
    if !t.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "t must be finite, got {t}"
        )));
    }
    let pre = 1.0 / (1.0 + m * m).sqrt();
    let (st, ct) = t.sin_cos();
    let (sn, cn) = (n * t).sin_cos();
    let tangent = Spatial::new(ct * cn + n * st * sn, n * ct * sn - st * cn, -(n / m) * sn);
    let normal1 = Spatial::new(-pre * st, -pre * ct, -n);
    let normal2 = Spatial::new(n * cn * st - ct * sn, n * ct * cn + st * sn, -(n / m) * cn);
    Ok((tangent, normal1, normal2))
}

/// The unit-torsion curve with curvature `|tan(n t)|`.
///
/// Torsion is identically 1; curvature vanishes at `t = 0`, where the frame
/// is undefined, and equals `|tan(n t)|` elsewhere. Speed matches the
/// unit-curvature family: `cos(n t) / sqrt(1 + m^2)`. All three derivatives
/// are attached in closed form.
pub fn anti_salkowski(m: f64, margin_fraction: f64) -> Result<Curve> {
    let SalkowskiParams { m, n, t_lo, t_hi } = SalkowskiParams::new(m, margin_fraction)?;
    let pre = 1.0 / (1.0 + m * m).sqrt();
    let p = 1.0 + 2.0 * n;
    let q = 1.0 - 2.0 * n;
    let (a, b) = ((1.0 - n) / 4.0, (1.0 + n) / 4.0);

    let pos = move |t: f64| {
        Spatial::new(
            pre * (a * cosm1(p, t) - b * cosm1(q, t) - (n / 2.0) * (t.cos() - 1.0)),
            pre * ((n / 2.0) * t.sin() - a * (p * t).sin() / p + b * (q * t).sin() / q),
            -pre * (2.0 * n * t + (2.0 * n * t).sin()) / (4.0 * m),
        )
    };
    let d1 = move |t: f64| {
        Spatial::new(
            pre * (-a * (p * t).sin() + b * (q * t).sin() + (n / 2.0) * t.sin()),
            pre * ((n / 2.0) * t.cos() - a * (p * t).cos() + b * (q * t).cos()),
            -pre * n * (1.0 + (2.0 * n * t).cos()) / (2.0 * m),
        )
    };
    let d2 = move |t: f64| {
        Spatial::new(
            pre * (-a * p * (p * t).cos() + b * q * (q * t).cos() + (n / 2.0) * t.cos()),
            pre * (-(n / 2.0) * t.sin() + a * p * (p * t).sin() - b * q * (q * t).sin()),
            pre * n * n * (2.0 * n * t).sin() / m,
        )
    };
    let d3 = move |t: f64| {
        Spatial::new(
            pre * (a * p * p * (p * t).sin() - b * q * q * (q * t).sin() - (n / 2.0) * t.sin()),
            pre * (-(n / 2.0) * t.cos() + a * p * p * (p * t).cos() - b * q * q * (q * t).cos()),
            2.0 * pre * n * n * n * (2.0 * n * t).cos() / m,
        )
    };

    Ok(Curve::new(t_lo, t_hi, pos)?
        .with_derivative(1, d1)
        .with_derivative(2, d2)
        .with_derivative(3, d3)
        .with_label(format!("anti-salkowski(m={m})"))
        .with_param("m", m)
        .with_param("n", n)
        .with_param("margin", margin_fraction))
}

/// Integrates the unit binormal against arc length along `grid`:
/// `beta(t) = integral of normal2(u) * speed(u) du`.
///
/// The antiderivative is accumulated per grid interval by Simpson's rule
/// with a midpoint frame (orientation-aligned to the left node), then
/// interpolated by a clamped cubic spline whose end slopes are the exact
/// integrand values. The result is a curve whose tangent is the input's
/// binormal, which swaps the roles of curvature and torsion.
pub fn binormal_integral(c: &Curve, grid: &[f64]) -> Result<Curve> {
    let ff = frame_field(c, grid, None)?;
    let samples = ff.samples();
    let n = samples.len();
    let mut values = vec![Spatial::ZERO; n];
    for i in 0..n - 1 {
        let (t0, t1) = (samples[i].t, samples[i + 1].t);
        let tm = 0.5 * (t0 + t1);
        let (vm, _, n1m, n2m, _, _) = frenet_parts(c, tm, None)?;
        let n2m = if n1m.dot(samples[i].normal1) < 0.0 {
            -n2m
        } else {
            n2m
        };
        let g0 = samples[i].normal2 * samples[i].speed;
        let gm = n2m * vm;
        let g1 = samples[i + 1].normal2 * samples[i + 1].speed;
        values[i + 1] = values[i] + (g0 + gm * 4.0 + g1) * ((t1 - t0) / 6.0);
    }
    let slope_lo = samples[0].normal2 * samples[0].speed;
    let slope_hi = samples[n - 1].normal2 * samples[n - 1].speed;
    let spline = CubicSpline::new(grid.to_vec(), values, Boundary::Clamped(slope_lo, slope_hi))?;
    let base = if c.label().is_empty() {
        "curve"
    } else {
        c.label()
    };
    Ok(Curve::from_spline(
        spline,
        format!("binormal-integral({base})"),
    ))
}

/// A straight line through `point` with velocity `direction`, on `[0, 2pi]`.
pub fn line(point: Spatial, direction: Spatial) -> Result<Curve> {
    if !(point.norm().is_finite() && direction.norm().is_finite()) {
        return Err(Error::InvalidParameter("line data must be finite".into()));
    }
    if direction.norm() == 0.0 {
        return Err(Error::InvalidParameter(
            "line direction must be nonzero".into(),
        ));
    }
    Ok(Curve::new(0.0, 2.0 * std::f64::consts::PI, move |t| {
        point + direction * t
    })?
    .with_derivative(1, move |_| direction)
    .with_derivative(2, |_| Spatial::ZERO)
    .with_derivative(3, |_| Spatial::ZERO)
    .with_label("line")
    .with_param("speed", direction.norm()))
}

/// The circle of the given radius in the `e1 e2` plane, on `[0, 2pi]`.
pub fn circle(radius: f64) -> Result<Curve> {
    if !radius.is_finite() || radius <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "circle radius must be positive, got {radius}"
        )));
    }
    Ok(Curve::new(0.0, 2.0 * std::f64::consts::PI, move |t| {
        Spatial::new(radius * t.cos(), radius * t.sin(), 0.0)
    })?
    .with_derivative(1, move |t| {
        Spatial::new(-radius * t.sin(), radius * t.cos(), 0.0)
    })
    .with_derivative(2, move |t| {
        Spatial::new(-radius * t.cos(), -radius * t.sin(), 0.0)
    })
    .with_derivative(3, move |t| {
        Spatial::new(radius * t.sin(), -radius * t.cos(), 0.0)
    })
    .with_label(format!("circle(r={radius})"))
    .with_param("radius", radius))
}

/// The circular helix `(a cos t, a sin t, b t)` on `[0, 2pi]`.
///
/// Curvature and torsion are the constants `a / (a^2 + b^2)` and
/// `b / (a^2 + b^2)`.
pub fn circular_helix(a: f64, b: f64) -> Result<Curve> {
    if !a.is_finite() || a <= 0.0 || !b.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "helix needs a > 0 and finite b, got a = {a}, b = {b}"
        )));
    }
    Ok(Curve::new(0.0, 2.0 * std::f64::consts::PI, move |t| {
        Spatial::new(a * t.cos(), a * t.sin(), b * t)
    })?
    .with_derivative(1, move |t| Spatial::new(-a * t.sin(), a * t.cos(), b))
    .with_derivative(2, move |t| Spatial::new(-a * t.cos(), -a * t.sin(), 0.0))
    .with_derivative(3, move |t| Spatial::new(a * t.sin(), -a * t.cos(), 0.0))
    .with_label(format!("helix(a={a},b={b})"))
    .with_param("radius", a)
    .with_param("pitch", b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frenet::frenet_at;

    fn uniform(lo: f64, hi: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn parameter_validation() {
        assert!(SalkowskiParams::new(0.0, 0.05).is_err());
        assert!(SalkowskiParams::new(f64::NAN, 0.05).is_err());
        assert!(SalkowskiParams::new(1.0, 0.0).is_err());
        assert!(SalkowskiParams::new(1.0, 1.0).is_err());
        // n = 1/2 makes 1 - 2n vanish; that is m = 1/sqrt(3)
        let bad = 1.0 / 3.0f64.sqrt();
        assert!(SalkowskiParams::new(bad, 0.05).is_err());
        assert!(SalkowskiParams::new(-bad, 0.05).is_err());
        assert!(SalkowskiParams::new(bad + 1e-3, 0.05).is_ok());
        assert!(circle(0.0).is_err());
        assert!(circular_helix(-1.0, 1.0).is_err());
        assert!(line(Spatial::ZERO, Spatial::ZERO).is_err());
    }

    #[test]
    fn unit_curvature_family_pinned_values() {
        let c = salkowski(1.0, 0.05).unwrap();
        let p0 = c.eval(0.0);
        assert!((p0 - Spatial::new(0.0, -0.3535533905932739, 0.1767766952966369)).norm() < 1e-15);
        let p4 = c.eval(0.4);
        assert!(
            (p4 - Spatial::new(0.2754778545455731, -0.3807320343655608, 0.1492386717887192)).norm()
                < 1e-15
        );
        assert!((c.speed(0.0).unwrap() - 0.7071067811865475).abs() < 1e-15);
        let fs = frenet_at(&c, 0.3, None).unwrap();
        assert!((fs.curvature - 1.0).abs() < 1e-12);
        assert!((fs.torsion - 0.2153723531327084).abs() < 1e-12);
        let s = c.arc_length(0.0, 0.5).unwrap();
        assert!((s - 0.3462335937805355).abs() < 1e-12);
    }

    #[test]
    fn unit_torsion_family_pinned_values() {
        let c = anti_salkowski(1.0, 0.05).unwrap();
        let p = c.eval(0.5);
        assert!(
            (p - Spatial::new(0.0012176130396889, 0.2496245599632641, -0.239840671233196)).norm()
                < 1e-15
        );
        let fs = frenet_at(&c, 0.5, None).unwrap();
        assert!((fs.curvature - 0.3690606067812008).abs() < 1e-12);
        assert!((fs.torsion - 1.0).abs() < 1e-10);
        // curvature vanishes at the midpoint, so the frame is undefined there
        assert!(frenet_at(&c, 0.0, None).is_err());
    }

    #[test]
    fn attached_derivatives_agree_with_numerical_ones() {
        for (name, c) in [
            ("unit-curvature", salkowski(0.7, 0.05).unwrap()),
            ("unit-torsion", anti_salkowski(0.7, 0.05).unwrap()),
        ] {
            let (lo, hi) = c.domain();
            let shadow = c.clone();
            let plain = Curve::new(lo, hi, move |t| shadow.eval(t)).unwrap();
            for &t in &[-1.2, -0.3, 0.6, 1.4] {
                for (order, tol) in [(1, 1e-9), (2, 1e-7), (3, 1e-4)] {
                    let got = c.derivative(t, order, None).unwrap();
                    let fd = plain.derivative(t, order, None).unwrap();
                    assert!(
                        (got - fd).norm() < tol,
                        "{name} order {order} at t = {t}: analytic {got:?} vs fd {fd:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_frame_matches_the_frenet_construction() {
        let m = 0.8;
        let c = salkowski(m, 0.05).unwrap();
        for &t in &[-1.5, -0.4, 0.0, 0.7, 1.6] {
            let fs = frenet_at(&c, t, None).unwrap();
            let (tg, n1, n2) = salkowski_frame_closed_form(m, t).unwrap();
            assert!((fs.tangent - tg).norm() < 1e-12, "tangent at {t}");
            assert!((fs.normal1 - n1).norm() < 1e-12, "normal1 at {t}");
            assert!((fs.normal2 - n2).norm() < 1e-12, "normal2 at {t}");
        }
    }

    #[test]
    fn speed_profiles_of_the_two_families_coincide() {
        let m = 1.3f64;
        let n = m / (1.0 + m * m).sqrt();
        let a = salkowski(m, 0.05).unwrap();
        let b = anti_salkowski(m, 0.05).unwrap();
        for &t in &[-0.9, 0.2, 1.1] {
            let want = (n * t).cos() / (1.0 + m * m).sqrt();
            assert!((a.speed(t).unwrap() - want).abs() < 1e-14);
            assert!((b.speed(t).unwrap() - want).abs() < 1e-14);
        }
    }

    #[test]
    fn binormal_integral_of_a_circle_is_a_vertical_line() {
        let c = circle(2.0).unwrap();
        let grid = uniform(0.0, 2.0 * std::f64::consts::PI, 101);
        let beta = binormal_integral(&c, &grid).unwrap();
        for &t in &[0.3, 2.0, 5.1] {
            assert!((beta.eval(t) - Spatial::new(0.0, 0.0, 2.0 * t)).norm() < 1e-9);
            assert!(beta.derivative(t, 2, None).unwrap().norm() < 1e-7);
        }
    }

    #[test]
    fn binormal_integral_swaps_curvature_and_torsion() {
        let m = 1.0f64;
        let n = m / (1.0 + m * m).sqrt();
        let c = salkowski(m, 0.05).unwrap();
        let (lo, hi) = c.domain();
        let grid = uniform(lo, hi, 301);
        let beta = binormal_integral(&c, &grid).unwrap();
        for &t in &[-1.1, 0.4, 1.3] {
            let fs = frenet_at(&beta, t, None).unwrap();
            assert!(
                (fs.curvature - (n * t).tan().abs()).abs() < 1e-2,
                "curvature at {t}: {}",
                fs.curvature
            );
            assert!(
                (fs.torsion - 1.0).abs() < 1e-2,
                "torsion at {t}: {}",
                fs.torsion
            );
        }
    }
}
