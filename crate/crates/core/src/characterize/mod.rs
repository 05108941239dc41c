//! Classification checks built on frame fields: slant-helix detection, the
//! unit-curvature torsion law, binormal duality, and curve similarity.

mod corollaries;
mod duality;
mod similar;
mod slant_helix;
mod torsion_law;

pub use corollaries::{corollary_suite, CorollaryCase};
pub use duality::{binormal_duality_check, DualityReport};
pub use similar::{
    classify_curve, similar_check, Criterion, CurveClass, SimilarityOptions, SimilarityReport,
};
pub use slant_helix::{
    n2_slant_helix_check, slant_helix_check, slant_helix_of_anti_salkowski, N2SlantHelixReport,
    SlantHelixReport,
};
pub use torsion_law::{salkowski_torsion_law, TorsionLawReport, UNIT_CURVATURE_TOL};
