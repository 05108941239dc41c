//! Quaternion-based toolkit for spatial curves.
//!
//! The crate has four layers:
//!
//! - [`quaternion`]: real quaternions and their spatial (pure-vector) part,
//!   the algebra everything else is phrased in.
//! - [`curve`] and [`frenet`]: parametric curves with optional analytic
//!   derivatives, arc length, and the Frenet apparatus (frames, curvature,
//!   torsion, the intrinsic tangent equation).
//! - [`families`]: closed-form constructions of the unit-curvature family
//!   with torsion `tan(n t)`, its unit-torsion counterpart, the binormal
//!   integral connecting them, and the usual fixtures (lines, circles,
//!   circular helices).
//! - [`characterize`]: numerical certification of their structural
//!   properties: slant-helix axis recovery, the linear torsion law,
//!   curvature/torsion duality under the binormal integral, and similarity
//!   of curves up to rigid motion and scaling.
//!
//! Everything is pure and deterministic; checks return reports with
//! measured residuals rather than bare booleans, so callers can log how
//! much margin a verdict had.

pub mod characterize;
pub mod curve;
pub mod error;
pub mod families;
pub mod frenet;
mod numeric;
pub mod quaternion;

pub use characterize::{
    binormal_duality_check, classify_curve, corollary_suite, n2_slant_helix_check,
    salkowski_torsion_law, similar_check, slant_helix_check, slant_helix_of_anti_salkowski,
    CorollaryCase, Criterion, CurveClass, DualityReport, N2SlantHelixReport, SimilarityOptions,
    SimilarityReport, SlantHelixReport, TorsionLawReport,
};
pub use curve::Curve;
pub use error::{Error, Result};
pub use families::{
    anti_salkowski, binormal_integral, circle, circular_helix, line, salkowski,
    salkowski_frame_closed_form, SalkowskiParams,
};
pub use frenet::{
    frame_field, frame_field_lenient, frenet_at, tangent_ode_residual, total_curvature, FrameField,
    FrenetSample,
};
pub use numeric::procrustes::Rotation;
pub use quaternion::{Quaternion, Spatial};
