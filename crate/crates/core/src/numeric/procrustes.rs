//! Proper rotations and the orthogonal Procrustes fit used to gauge away
//! rigid motions when comparing frame fields.

use nalgebra::Matrix3;

use crate::error::{Error, Result};
use crate::quaternion::Spatial;

/// A proper rotation of R^3, stored as a row-major 3x3 matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation {
    m: [[f64; 3]; 3],
}

impl Rotation {
    pub const IDENTITY: Rotation = Rotation {
        m: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
    };

    /// Rodrigues rotation about `axis` by `angle` radians.
    pub fn from_axis_angle(axis: Spatial, angle: f64) -> Result<Rotation> {
        let u = axis.normalized().ok_or_else(|| {
            Error::InvalidParameter("rotation axis must be a nonzero vector".into())
        })?;
        let (s, c) = angle.sin_cos();
        let t = 1.0 - c;
        let (x, y, z) = (u.x, u.y, u.z);
        Ok(Rotation {
            m: [
                [c + x * x * t, x * y * t - z * s, x * z * t + y * s],
                [y * x * t + z * s, c + y * y * t, y * z * t - x * s],
                [z * x * t - y * s, z * y * t + x * s, c + z * z * t],
            ],
        })
    }

    pub fn apply(&self, v: Spatial) -> Spatial {
        let m = &self.m;
        Spatial::new(
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        )
    }

    pub fn transpose(&self) -> Rotation {
        let m = &self.m;
        Rotation {
            m: [
                [m[0][0], m[1][0], m[2][0]],
                [m[0][1], m[1][1], m[2][1]],
                [m[0][2], m[1][2], m[2][2]],
            ],
        }
    }

    /// `self` after `other` (matrix product `self * other`).
    pub fn compose(&self, other: &Rotation) -> Rotation {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, item) in row.iter_mut().enumerate() {
                *item = (0..3).map(|k| self.m[i][k] * other.m[k][j]).sum();
            }
        }
        Rotation { m }
    }

    pub fn determinant(&self) -> f64 {
        let m = &self.m;
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }
}

/// Least-squares proper rotation sending the first vector of each pair onto
/// the second (Kabsch fit via SVD).
pub(crate) fn best_rotation(pairs: &[(Spatial, Spatial)]) -> Rotation {
    let mut h = Matrix3::<f64>::zeros();
    for (a, b) in pairs {
        let a = nalgebra::Vector3::new(a.x, a.y, a.z);
        let b = nalgebra::Vector3::new(b.x, b.y, b.z);
        h += a * b.transpose();
    }
    let svd = h.svd(true, true);
    let u = svd.u.expect("svd with u requested");
    let vt = svd.v_t.expect("svd with v_t requested");
    let d = (vt.transpose() * u.transpose()).determinant().signum();
    let fix = Matrix3::from_diagonal(&nalgebra::Vector3::new(1.0, 1.0, d));
    let r = vt.transpose() * fix * u.transpose();
    let mut m = [[0.0; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, item) in row.iter_mut().enumerate() {
            *item = r[(i, j)];
        }
    }
    Rotation { m }
}
