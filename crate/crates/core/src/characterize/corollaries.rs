//! A fixed suite of similarity facts that the comparison machinery must
//! reproduce: all lines are alike, scaled circles and helices are similar,
//! and both special families are similar to their rigid and antipodal
//! images.

use crate::error::Result;
use crate::families::{anti_salkowski, circle, circular_helix, line, salkowski};
use crate::numeric::procrustes::Rotation;
use crate::quaternion::Spatial;

use super::similar::{similar_check, Criterion, SimilarityOptions};

#[derive(Debug, Clone)]
pub struct CorollaryCase {
    pub name: String,
    pub criterion: Criterion,
    pub max_discrepancy: f64,
    pub verdict: bool,
}

fn uniform(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

/// Runs the six standard cases at the given verdict tolerance.
///
/// Every case is expected to come back with `verdict = true`; a failure
/// points at the comparison pipeline, not at the fixtures.
pub fn corollary_suite(tol: f64) -> Result<Vec<CorollaryCase>> {
    let n = 1001;
    let opts = |criterion| SimilarityOptions {
        criterion,
        tol,
        magnitude_ratio: false,
    };
    let mut cases = Vec::new();

    let l1 = line(Spatial::ZERO, Spatial::new(1.0, 2.0, 2.0))?;
    let l2 = line(Spatial::new(1.0, 1.0, 1.0), Spatial::new(-3.0, 0.0, 4.0))?;
    let grid = uniform(0.0, 2.0 * std::f64::consts::PI, n);
    let report = similar_check(&l1, &grid, &l2, &grid, &opts(Criterion::Tangent))?;
    cases.push(CorollaryCase {
        name: "lines".into(),
        criterion: report.criterion,
        max_discrepancy: report.max_discrepancy,
        verdict: report.verdict,
    });

    let c1 = circle(1.0)?;
    let c2 = circle(2.0)?;
    let report = similar_check(&c1, &grid, &c2, &grid, &opts(Criterion::Tangent))?;
    cases.push(CorollaryCase {
        name: "circles".into(),
        criterion: report.criterion,
        max_discrepancy: report.max_discrepancy,
        verdict: report.verdict,
    });

    let h1 = circular_helix(1.0, 1.0)?;
    let h2 = circular_helix(2.0, 2.0)?;
    let hgrid = uniform(0.1, 6.1, n);
    let report = similar_check(&h1, &hgrid, &h2, &hgrid, &opts(Criterion::Tangent))?;
    cases.push(CorollaryCase {
        name: "helices".into(),
        criterion: report.criterion,
        max_discrepancy: report.max_discrepancy,
        verdict: report.verdict,
    });

    // the special families, on the positive-torsion half of their domains
    let sal = salkowski(1.0, 0.05)?;
    let (_, hi) = sal.domain();
    let sgrid = uniform(hi / 19.0, hi, n);
    let rot = Rotation::from_axis_angle(Spatial::new(0.2, -1.0, 0.7), 0.9)?;
    let moved = sal.transformed(rot, Spatial::new(-1.0, 0.5, 2.0));
    let report = similar_check(&sal, &sgrid, &moved, &sgrid, &opts(Criterion::Tangent))?;
    cases.push(CorollaryCase {
        name: "unit-curvature-rigid".into(),
        criterion: report.criterion,
        max_discrepancy: report.max_discrepancy,
        verdict: report.verdict,
    });

    let flipped = sal.antipodal();
    let magnitude = SimilarityOptions {
        criterion: Criterion::Ratio,
        tol,
        magnitude_ratio: true,
    };
    let report = similar_check(&sal, &sgrid, &flipped, &sgrid, &magnitude)?;
    cases.push(CorollaryCase {
        name: "unit-curvature-antipodal".into(),
        criterion: report.criterion,
        max_discrepancy: report.max_discrepancy,
        verdict: report.verdict,
    });

    let anti = anti_salkowski(1.0, 0.05)?;
    let (_, ahi) = anti.domain();
    let agrid = uniform(0.15 * ahi, 0.9 * ahi, n);
    let moved = anti.transformed(rot, Spatial::new(0.4, 0.4, -3.0));
    let report = similar_check(&anti, &agrid, &moved, &agrid, &opts(Criterion::Tangent))?;
    cases.push(CorollaryCase {
        name: "unit-torsion-rigid".into(),
        criterion: report.criterion,
        max_discrepancy: report.max_discrepancy,
        verdict: report.verdict,
    });

    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_six_cases_hold() {
        let cases = corollary_suite(1e-4).unwrap();
        assert_eq!(cases.len(), 6);
        for case in &cases {
            assert!(
                case.verdict,
                "{} ({}) failed with discrepancy {:.3e}",
                case.name, case.criterion, case.max_discrepancy
            );
        }
    }
}
