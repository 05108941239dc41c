//! C^2 cubic interpolating splines for 3-vector valued samples.

use crate::error::{Error, Result};
use crate::quaternion::Spatial;

/// End conditions for [`CubicSpline::new`].
pub(crate) enum Boundary {
    /// Prescribed first derivatives at both ends.
    Clamped(Spatial, Spatial),
    /// Third derivative continuous across the second and second-to-last
    /// knots. Reproduces cubic polynomials exactly; needs at least 4 nodes.
    NotAKnot,
}

/// Interpolating cubic spline through `(x_i, y_i)` with vector values,
/// stored via the nodal second derivatives.
pub(crate) struct CubicSpline {
    xs: Vec<f64>,
    ys: Vec<Spatial>,
    m: Vec<Spatial>,
}

impl CubicSpline {
    pub fn new(xs: Vec<f64>, ys: Vec<Spatial>, boundary: Boundary) -> Result<CubicSpline> {
        let n = xs.len();
        if n != ys.len() {
            return Err(Error::InvalidParameter(format!(
                "spline needs as many values as nodes (got {} nodes, {} values)",
                n,
                ys.len()
            )));
        }
        let min_nodes = match boundary {
            Boundary::Clamped(..) => 2,
            Boundary::NotAKnot => 4,
        };
        if n < min_nodes {
            return Err(Error::InvalidParameter(format!(
                "spline needs at least {min_nodes} nodes, got {n}"
            )));
        }
        if xs.iter().any(|x| !x.is_finite()) || ys.iter().any(|y| !y.norm().is_finite()) {
            return Err(Error::InvalidParameter("spline data must be finite".into()));
        }
        if xs.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidParameter(
                "spline nodes must be strictly increasing".into(),
            ));
        }

        let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
        let d: Vec<Spatial> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / h[i]).collect();

        let m = match boundary {
            Boundary::Clamped(s0, sn) => {
                // unknowns M_0..M_n
                let mut sub = vec![0.0; n];
                let mut diag = vec![0.0; n];
                let mut sup = vec![0.0; n];
                let mut rhs = vec![Spatial::ZERO; n];
                diag[0] = h[0] / 3.0;
                sup[0] = h[0] / 6.0;
                rhs[0] = d[0] - s0;
                for i in 1..n - 1 {
                    sub[i] = h[i - 1] / 6.0;
                    diag[i] = (h[i - 1] + h[i]) / 3.0;
                    sup[i] = h[i] / 6.0;
                    rhs[i] = d[i] - d[i - 1];
                }
                sub[n - 1] = h[n - 2] / 6.0;
                diag[n - 1] = h[n - 2] / 3.0;
                rhs[n - 1] = sn - d[n - 2];
                thomas(&sub, &diag, &sup, &rhs)
            }
            Boundary::NotAKnot => {
                // eliminate M_0 and M_n, solve for M_1..M_{n-2}
                let k = n - 2;
                let mut sub = vec![0.0; k];
                let mut diag = vec![0.0; k];
                let mut sup = vec![0.0; k];
                let mut rhs = vec![Spatial::ZERO; k];
                let r0 = h[0] / h[1];
                diag[0] = (h[0] + h[1]) / 3.0 + h[0] / 6.0 * (1.0 + r0);
                sup[0] = h[1] / 6.0 - h[0] * r0 / 6.0;
                rhs[0] = d[1] - d[0];
                for j in 1..k - 1 {
                    let i = j + 1; // original node index
                    sub[j] = h[i - 1] / 6.0;
                    diag[j] = (h[i - 1] + h[i]) / 3.0;
                    sup[j] = h[i] / 6.0;
                    rhs[j] = d[i] - d[i - 1];
                }
                let rn = h[n - 2] / h[n - 3];
                sub[k - 1] = h[n - 3] / 6.0 - h[n - 2] * rn / 6.0;
                diag[k - 1] = (h[n - 3] + h[n - 2]) / 3.0 + h[n - 2] / 6.0 * (1.0 + rn);
                rhs[k - 1] = d[n - 2] - d[n - 3];
                let inner = thomas(&sub, &diag, &sup, &rhs);
                let mut m = Vec::with_capacity(n);
                m.push(inner[0] * (1.0 + r0) + inner[1] * (-r0));
                m.extend_from_slice(&inner);
                m.push(inner[k - 1] * (1.0 + rn) + inner[k - 2] * (-rn));
                m
            }
        };

        Ok(CubicSpline { xs, ys, m })
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.xs[0], *self.xs.last().unwrap())
    }

    fn locate(&self, x: f64) -> usize {
        let n = self.xs.len();
        match self.xs.partition_point(|&xi| xi <= x) {
            0 => 0,
            p if p >= n => n - 2,
            p => p - 1,
        }
    }

    pub fn eval(&self, x: f64) -> Spatial {
        let i = self.locate(x);
        let h = self.xs[i + 1] - self.xs[i];
        let a = (self.xs[i + 1] - x) / h;
        let b = (x - self.xs[i]) / h;
        self.ys[i] * a
            + self.ys[i + 1] * b
            + (self.m[i] * (a.powi(3) - a) + self.m[i + 1] * (b.powi(3) - b)) * (h * h / 6.0)
    }

    pub fn deriv1(&self, x: f64) -> Spatial {
        let i = self.locate(x);
        let h = self.xs[i + 1] - self.xs[i];
        let a = (self.xs[i + 1] - x) / h;
        let b = (x - self.xs[i]) / h;
        (self.ys[i + 1] - self.ys[i]) / h
            - (self.m[i] * (3.0 * a * a - 1.0) - self.m[i + 1] * (3.0 * b * b - 1.0)) * (h / 6.0)
    }

    pub fn deriv2(&self, x: f64) -> Spatial {
        let i = self.locate(x);
        let h = self.xs[i + 1] - self.xs[i];
        let a = (self.xs[i + 1] - x) / h;
        let b = (x - self.xs[i]) / h;
        self.m[i] * a + self.m[i + 1] * b
    }

    /// Third derivative. The raw spline value is piecewise constant, a first
    /// order approximation; interpolating the per-piece constants between
    /// interval midpoints recovers second order away from the ends.
    pub fn deriv3(&self, x: f64) -> Spatial {
        let n = self.xs.len();
        let c = |i: usize| (self.m[i + 1] - self.m[i]) / (self.xs[i + 1] - self.xs[i]);
        let mid = |i: usize| 0.5 * (self.xs[i] + self.xs[i + 1]);
        if n == 2 || x <= mid(0) {
            return c(0);
        }
        if x >= mid(n - 2) {
            return c(n - 2);
        }
        // x lies between midpoints of pieces j and j+1
        let i = self.locate(x);
        let j = if x < mid(i) { i - 1 } else { i };
        let w = (x - mid(j)) / (mid(j + 1) - mid(j));
        c(j) * (1.0 - w) + c(j + 1) * w
    }
}

/// Thomas algorithm for a tridiagonal system with vector right-hand side.
fn thomas(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[Spatial]) -> Vec<Spatial> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![Spatial::ZERO; n];
    c[0] = sup[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let denom = diag[i] - sub[i] * c[i - 1];
        if i + 1 < n {
            c[i] = sup[i] / denom;
        }
        d[i] = (rhs[i] - d[i - 1] * sub[i]) / denom;
    }
    for i in (0..n - 1).rev() {
        d[i] = d[i] - d[i + 1] * c[i];
    }
    d
}
