//! Error taxonomy shared by the whole crate.

/// Everything that can go wrong while constructing curves, differentiating
/// them, or running one of the geometric checks.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value is outside its documented range (step sizes,
    /// family parameters, malformed grids, ...).
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The parametrization is singular: the speed vanishes at `t`, so arc
    /// length cannot be inverted and no unit tangent exists there.
    #[error("singular parametrization: speed vanishes near t = {t}")]
    SingularPoint { t: f64 },

    /// The curvature vanishes at `t`; the principal normal, and with it the
    /// whole Frenet frame, is undefined there.
    #[error("Frenet frame undefined: curvature vanishes near t = {t}")]
    UndefinedFrame { t: f64 },

    /// A lookup fell outside the sampled range of a frame field.
    #[error("out of sampled range: {0}")]
    OutOfRange(String),

    /// Two curves cannot be compared because the matched quantity (total
    /// curvature or total torsion) sweeps disjoint ranges.
    #[error("incomparable ranges: {0}")]
    IncomparableRange(String),

    /// The requested similarity criterion does not apply to this pair of
    /// curves (e.g. the binormal criterion when one curve is planar).
    #[error("criterion inapplicable: {0}")]
    CriterionInapplicable(String),

    /// The torsion/curvature ratio vanishes somewhere, so an expression
    /// dividing by it is meaningless on this grid.
    #[error("degenerate torsion/curvature ratio: {0}")]
    DegenerateRatio(String),

    /// A check that assumes curvature identically one was handed a curve
    /// whose curvature measurably deviates from one.
    #[error("curvature is not identically one: {0}")]
    NotUnitCurvature(String),

    /// A fitted quantity left the domain on which it can be inverted.
    #[error("fit leaves admissible domain: {0}")]
    DomainExceeded(String),
}

/// Convenient alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
