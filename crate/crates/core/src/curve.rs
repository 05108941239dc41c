//! Parametric space curves with optional analytic derivatives.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numeric::procrustes::Rotation;
use crate::numeric::quadrature::adaptive_simpson;
use crate::numeric::spline::{Boundary, CubicSpline};
use crate::numeric::stencil::{fd_derivative, one_sided_reach};
use crate::quaternion::Spatial;

pub(crate) type PointFn = dyn Fn(f64) -> Spatial + Send + Sync;

/// Absolute tolerance used by the adaptive arc-length quadrature.
pub const ARC_LENGTH_TOL: f64 = 1e-12;

/// A curve `t -> E^3` on a closed parameter interval.
///
/// The position map is mandatory; analytic derivatives of orders 1..=3 are
/// optional and, where absent, are filled in by fourth-order finite
/// differences. Curves are cheap to clone and share their closures.
#[derive(Clone)]
pub struct Curve {
    t_lo: f64,
    t_hi: f64,
    eval: Arc<PointFn>,
    derivs: [Option<Arc<PointFn>>; 3],
    label: String,
    params: BTreeMap<String, f64>,
}

impl std::fmt::Debug for Curve {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Curve")
            .field("label", &self.label)
            .field("domain", &(self.t_lo, self.t_hi))
            .field("params", &self.params)
            .finish()
    }
}

impl Curve {
    /// A curve from a position closure on the domain `[t_lo, t_hi]`.
    pub fn new<F>(t_lo: f64, t_hi: f64, eval: F) -> Result<Curve>
    where
        F: Fn(f64) -> Spatial + Send + Sync + 'static,
    {
        if !t_lo.is_finite() || !t_hi.is_finite() || t_lo >= t_hi {
            return Err(Error::InvalidParameter(format!(
                "curve domain must be a finite interval, got [{t_lo}, {t_hi}]"
            )));
        }
        Ok(Curve {
            t_lo,
            t_hi,
            eval: Arc::new(eval),
            derivs: [None, None, None],
            label: String::new(),
            params: BTreeMap::new(),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Curve {
        self.label = label.into();
        self
    }

    pub fn with_param(mut self, name: impl Into<String>, value: f64) -> Curve {
        self.params.insert(name.into(), value);
        self
    }

    /// Attaches an analytic derivative of the given order (1..=3).
    ///
    /// Panics on other orders; that is a programming error, not input.
    pub fn with_derivative<F>(mut self, order: usize, deriv: F) -> Curve
    where
        F: Fn(f64) -> Spatial + Send + Sync + 'static,
    {
        assert!((1..=3).contains(&order), "derivative order must be 1..=3");
        self.derivs[order - 1] = Some(Arc::new(deriv));
        self
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.t_lo, self.t_hi)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    /// True when an analytic derivative of this order is attached.
    pub fn has_analytic(&self, order: usize) -> bool {
        (1..=3).contains(&order) && self.derivs[order - 1].is_some()
    }

    pub fn eval(&self, t: f64) -> Spatial {
        (self.eval)(t)
    }

    /// The step used by finite differences when none is supplied.
    pub fn default_step(&self) -> f64 {
        1e-4 * (self.t_hi - self.t_lo)
    }

    /// Whether `t` lies in the domain, up to a sliver of slack for
    /// floating-point endpoints.
    pub fn contains(&self, t: f64) -> bool {
        let slack = 1e-9 * (self.t_hi - self.t_lo);
        t >= self.t_lo - slack && t <= self.t_hi + slack
    }

    /// Derivative of order 1..=3 at `t`.
    ///
    /// Analytic derivatives are used as far as they reach; the remaining
    /// orders come from fourth-order finite differences with step `step`
    /// (default: `1e-4` of the domain length), one-sided near the ends.
    pub fn derivative(&self, t: f64, order: usize, step: Option<f64>) -> Result<Spatial> {
        if !(1..=3).contains(&order) {
            return Err(Error::InvalidParameter(format!(
                "derivative order must be 1..=3, got {order}"
            )));
        }
        if !self.contains(t) {
            return Err(Error::InvalidParameter(format!(
                "t = {t} outside the domain [{}, {}]",
                self.t_lo, self.t_hi
            )));
        }
        // use the highest attached derivative not exceeding the request
        let from = (1..=order).rev().find(|&j| self.derivs[j - 1].is_some());
        if from == Some(order) {
            return Ok(self.derivs[order - 1].as_ref().unwrap()(t));
        }
        let span = self.t_hi - self.t_lo;
        let h = step.unwrap_or_else(|| self.default_step());
        if !h.is_finite() || h <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "finite-difference step must be positive, got {h}"
            )));
        }
        if h < 1e-12 * span {
            return Err(Error::InvalidParameter(format!(
                "step {h} is below 1e-12 of the domain length {span}"
            )));
        }
        let fd_order = order - from.unwrap_or(0);
        if one_sided_reach(fd_order) as f64 * h > span {
            return Err(Error::InvalidParameter(format!(
                "step {h} too large: no order-{fd_order} stencil fits the domain"
            )));
        }
        let result = match from {
            None => {
                let g = &self.eval;
                fd_derivative(|u| g(u), t, h, fd_order, self.t_lo, self.t_hi)
            }
            Some(j) => {
                let g = self.derivs[j - 1].as_ref().unwrap();
                fd_derivative(|u| g(u), t, h, fd_order, self.t_lo, self.t_hi)
            }
        };
        Ok(result)
    }

    /// Parametric speed `|c'(t)|` with the default step.
    pub fn speed(&self, t: f64) -> Result<f64> {
        Ok(self.derivative(t, 1, None)?.norm())
    }

    /// Signed arc length from `t0` to `t1` (negative when `t1 < t0`).
    pub fn arc_length(&self, t0: f64, t1: f64) -> Result<f64> {
        if !self.contains(t0) || !self.contains(t1) {
            return Err(Error::InvalidParameter(format!(
                "arc-length bounds [{t0}, {t1}] leave the domain [{}, {}]",
                self.t_lo, self.t_hi
            )));
        }
        let speed = |u: f64| {
            self.derivative(u, 1, None)
                .expect("in-domain derivative with default step")
                .norm()
        };
        Ok(adaptive_simpson(&speed, t0, t1, ARC_LENGTH_TOL, 32))
    }

    /// Inverts arc length: the parameter `t` with `arc_length(t_lo, t) = s`.
    ///
    /// `s` must lie in `[0, length]`. Fails with a singular-point error when
    /// the speed (sampled on a coarse scan) vanishes, since `s` is then not
    /// invertible.
    pub fn param_at_arclength(&self, s: f64) -> Result<f64> {
        let span = self.t_hi - self.t_lo;
        let mut max_speed: f64 = 0.0;
        let mut speeds = [0.0; 65];
        for (i, sp) in speeds.iter_mut().enumerate() {
            let t = self.t_lo + span * i as f64 / 64.0;
            *sp = self.speed(t)?;
            max_speed = max_speed.max(*sp);
        }
        for (i, &sp) in speeds.iter().enumerate() {
            if sp <= 1e-12 * (1.0 + max_speed) {
                return Err(Error::SingularPoint {
                    t: self.t_lo + span * i as f64 / 64.0,
                });
            }
        }
        let total = self.arc_length(self.t_lo, self.t_hi)?;
        let slack = 1e-9 * (1.0 + total);
        if !s.is_finite() || s < -slack || s > total + slack {
            return Err(Error::InvalidParameter(format!(
                "arc length {s} outside [0, {total}]"
            )));
        }
        let s = s.clamp(0.0, total);
        let (mut lo, mut hi) = (self.t_lo, self.t_hi);
        let mut t = self.t_lo + span * (s / total);
        for _ in 0..100 {
            let err = self.arc_length(self.t_lo, t)? - s;
            if err.abs() <= 1e-10 * (1.0 + total) {
                return Ok(t);
            }
            if err > 0.0 {
                hi = t;
            } else {
                lo = t;
            }
            let speed = self.speed(t)?;
            let newton = t - err / speed;
            t = if newton > lo && newton < hi {
                newton
            } else {
                0.5 * (lo + hi)
            };
            if hi - lo < 1e-14 * span {
                return Ok(t);
            }
        }
        Ok(t)
    }

    /// The antipodal image `t -> -c(t)`: curvature is preserved, torsion
    /// changes sign.
    pub fn antipodal(&self) -> Curve {
        let eval = self.eval.clone();
        let mut out = Curve {
            t_lo: self.t_lo,
            t_hi: self.t_hi,
            eval: Arc::new(move |t| -eval(t)),
            derivs: [None, None, None],
            label: if self.label.is_empty() {
                "antipodal".into()
            } else {
                format!("antipodal({})", self.label)
            },
            params: self.params.clone(),
        };
        for (i, d) in self.derivs.iter().enumerate() {
            if let Some(d) = d {
                let d = d.clone();
                out.derivs[i] = Some(Arc::new(move |t| -d(t)));
            }
        }
        out
    }

    /// The rigid image `t -> R c(t) + shift`.
    pub fn transformed(&self, rotation: Rotation, shift: Spatial) -> Curve {
        let eval = self.eval.clone();
        let mut out = Curve {
            t_lo: self.t_lo,
            t_hi: self.t_hi,
            eval: Arc::new(move |t| rotation.apply(eval(t)) + shift),
            derivs: [None, None, None],
            label: if self.label.is_empty() {
                "moved".into()
            } else {
                format!("moved({})", self.label)
            },
            params: self.params.clone(),
        };
        for (i, d) in self.derivs.iter().enumerate() {
            if let Some(d) = d {
                let d = d.clone();
                out.derivs[i] = Some(Arc::new(move |t| rotation.apply(d(t))));
            }
        }
        out
    }

    /// Interpolates `(ts, points)` samples with a C^2 cubic spline and wraps
    /// it as a curve carrying all three spline derivatives.
    pub fn from_samples(ts: &[f64], points: &[Spatial]) -> Result<Curve> {
        let spline = Arc::new(CubicSpline::new(
            ts.to_vec(),
            points.to_vec(),
            Boundary::NotAKnot,
        )?);
        let (lo, hi) = spline.domain();
        let s0 = spline.clone();
        let s1 = spline.clone();
        let s2 = spline.clone();
        let s3 = spline;
        Ok(Curve::new(lo, hi, move |t| s0.eval(t))?
            .with_derivative(1, move |t| s1.deriv1(t))
            .with_derivative(2, move |t| s2.deriv2(t))
            .with_derivative(3, move |t| s3.deriv3(t))
            .with_label("sampled")
            .with_param("nodes", ts.len() as f64))
    }

    /// Wraps an already-built spline; used by the binormal integral.
    pub(crate) fn from_spline(spline: CubicSpline, label: String) -> Curve {
        let spline = Arc::new(spline);
        let (lo, hi) = spline.domain();
        let s0 = spline.clone();
        let s1 = spline.clone();
        let s2 = spline.clone();
        let s3 = spline;
        Curve {
            t_lo: lo,
            t_hi: hi,
            eval: Arc::new(move |t| s0.eval(t)),
            derivs: [
                Some(Arc::new(move |t| s1.deriv1(t))),
                Some(Arc::new(move |t| s2.deriv2(t))),
                Some(Arc::new(move |t| s3.deriv3(t))),
            ],
            label,
            params: BTreeMap::new(),
        }
    }
}
