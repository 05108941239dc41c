//! Finite-difference stencils, fourth order on uniform grids plus the 3-point
//! rules for non-uniform grids.

use std::ops::{Add, Mul};

use crate::quaternion::Spatial;

// Central weights, offsets -reach..=reach, divided by h^order.
const CENTRAL_1: [f64; 5] = [1.0 / 12.0, -8.0 / 12.0, 0.0, 8.0 / 12.0, -1.0 / 12.0];
const CENTRAL_2: [f64; 5] = [
    -1.0 / 12.0,
    16.0 / 12.0,
    -30.0 / 12.0,
    16.0 / 12.0,
    -1.0 / 12.0,
];
const CENTRAL_3: [f64; 7] = [
    1.0 / 8.0,
    -1.0,
    13.0 / 8.0,
    0.0,
    -13.0 / 8.0,
    1.0,
    -1.0 / 8.0,
];

// One-sided weights, offsets 0..len.
const FORWARD_1: [f64; 5] = [-25.0 / 12.0, 4.0, -3.0, 4.0 / 3.0, -0.25];
const FORWARD_2: [f64; 6] = [
    15.0 / 4.0,
    -77.0 / 6.0,
    107.0 / 6.0,
    -13.0,
    61.0 / 12.0,
    -5.0 / 6.0,
];
const FORWARD_3: [f64; 7] = [
    -49.0 / 8.0,
    29.0,
    -461.0 / 8.0,
    62.0,
    -307.0 / 8.0,
    13.0,
    -15.0 / 8.0,
];

fn central(order: usize) -> &'static [f64] {
    match order {
        1 => &CENTRAL_1,
        2 => &CENTRAL_2,
        3 => &CENTRAL_3,
        _ => unreachable!("derivative order must be 1..=3"),
    }
}

fn forward(order: usize) -> &'static [f64] {
    match order {
        1 => &FORWARD_1,
        2 => &FORWARD_2,
        3 => &FORWARD_3,
        _ => unreachable!("derivative order must be 1..=3"),
    }
}

/// Number of nodes a one-sided stencil of this order reaches past the base
/// point. Callers use it to check that the step fits the domain.
pub(crate) fn one_sided_reach(order: usize) -> usize {
    forward(order).len() - 1
}

/// Fourth-order finite difference of `g` at `t` with step `h`, switching to a
/// one-sided stencil when the centered one would leave `[lo, hi]`.
pub(crate) fn fd_derivative<F>(g: F, t: f64, h: f64, order: usize, lo: f64, hi: f64) -> Spatial
where
    F: Fn(f64) -> Spatial,
{
    let slack = 1e-9 * (hi - lo).abs();
    let w = central(order);
    let reach = (w.len() / 2) as isize;
    let scale = h.powi(order as i32);
    if t - reach as f64 * h >= lo - slack && t + reach as f64 * h <= hi + slack {
        let mut acc = Spatial::ZERO;
        for (j, &wj) in w.iter().enumerate() {
            if wj != 0.0 {
                acc = acc + g(t + (j as isize - reach) as f64 * h) * wj;
            }
        }
        return acc / scale;
    }
    let w = forward(order);
    let reach = (w.len() - 1) as f64;
    // near the upper end the stencil is mirrored, flipping odd derivatives
    let (step, sign) = if t + reach * h <= hi + slack {
        (h, 1.0)
    } else {
        (-h, if order % 2 == 1 { -1.0 } else { 1.0 })
    };
    let mut acc = Spatial::ZERO;
    for (j, &wj) in w.iter().enumerate() {
        acc = acc + g(t + j as f64 * step) * wj;
    }
    acc * (sign / scale)
}

/// First derivative at the middle node of three non-uniformly spaced nodes,
/// with `h0 = x1 - x0` and `h1 = x2 - x1`. Second order accurate.
pub(crate) fn d1_3pt<T>(y0: T, y1: T, y2: T, h0: f64, h1: f64) -> T
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
{
    y0 * (-h1 / (h0 * (h0 + h1))) + y1 * ((h1 - h0) / (h0 * h1)) + y2 * (h0 / (h1 * (h0 + h1)))
}

/// Second derivative at the middle node of three non-uniformly spaced nodes.
pub(crate) fn d2_3pt<T>(y0: T, y1: T, y2: T, h0: f64, h1: f64) -> T
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
{
    y0 * (2.0 / (h0 * (h0 + h1))) + y1 * (-2.0 / (h0 * h1)) + y2 * (2.0 / (h1 * (h0 + h1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lift<F: Fn(f64) -> f64>(f: F) -> impl Fn(f64) -> Spatial {
        move |t| Spatial::new(f(t), 0.0, 0.0)
    }

    #[test]
    fn exact_on_quartics() {
        // order-4 stencils differentiate t^4 exactly (up to roundoff)
        let f = lift(|t| t.powi(4));
        let cases = [
            (1, 0.5, 4.0 * 0.5f64.powi(3)),
            (2, 0.5, 12.0 * 0.25),
            (3, 0.5, 24.0 * 0.5),
            // near the ends one-sided stencils take over
            (1, -0.99, 4.0 * (-0.99f64).powi(3)),
            (2, 0.99, 12.0 * 0.99f64.powi(2)),
            (3, -0.99, 24.0 * -0.99),
        ];
        for (order, t, want) in cases {
            let got = fd_derivative(&f, t, 1e-3, order, -1.0, 1.0).x;
            assert!(
                (got - want).abs() < 1e-6 * (1.0 + want.abs()),
                "order {order} at {t}: got {got}, want {want}"
            );
        }
    }

    #[test]
    fn fourth_order_convergence_on_sine() {
        let f = lift(|t| t.sin());
        let t = 0.7f64;
        for order in 1..=3usize {
            let truth = match order {
                1 => t.cos(),
                2 => -t.sin(),
                _ => -t.cos(),
            };
            let e1 = (fd_derivative(&f, t, 2e-2, order, -10.0, 10.0).x - truth).abs();
            let e2 = (fd_derivative(&f, t, 1e-2, order, -10.0, 10.0).x - truth).abs();
            let rate = (e1 / e2).log2();
            assert!(rate > 3.5, "order {order}: rate {rate}, errors {e1} {e2}");
        }
    }

    #[test]
    fn one_sided_matches_central_inside() {
        let f = lift(|t| (2.0 * t).cos() + t * t);
        // force backward stencil by shrinking the admissible interval
        let t = 0.4;
        let c = fd_derivative(&f, t, 1e-3, 1, 0.0, 1.0).x;
        let b = fd_derivative(&f, t, 1e-3, 1, 0.0, t + 1e-9).x;
        let fwd = fd_derivative(&f, t, 1e-3, 1, t - 1e-9, 1.0).x;
        assert!((c - b).abs() < 1e-8);
        assert!((c - fwd).abs() < 1e-8);
    }

    #[test]
    fn nonuniform_rules_exact_on_quadratics() {
        let f = |x: f64| 3.0 * x * x - 2.0 * x + 1.0;
        let (x0, x1, x2) = (0.2, 0.5, 1.1);
        let d1 = d1_3pt(f(x0), f(x1), f(x2), x1 - x0, x2 - x1);
        let d2 = d2_3pt(f(x0), f(x1), f(x2), x1 - x0, x2 - x1);
        assert!((d1 - (6.0 * x1 - 2.0)).abs() < 1e-12);
        assert!((d2 - 6.0).abs() < 1e-12);
    }
}
