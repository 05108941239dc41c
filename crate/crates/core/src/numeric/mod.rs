//! Small numerical kernels: finite differences, adaptive quadrature,
//! interpolating splines and rigid alignment.

pub(crate) mod quadrature;
pub(crate) mod spline;
pub(crate) mod stencil;

pub mod procrustes;
