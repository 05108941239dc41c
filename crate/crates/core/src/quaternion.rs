//! Real quaternions with the scalar unit written `e4`.
//!
//! The basis is `{e1, e2, e3, e4}` where `e4` is the multiplicative identity
//! and `e1, e2, e3` are the spatial units obeying `ei * ei = -e4` and the
//! cyclic products `e1 * e2 = e3`, `e2 * e3 = e1`, `e3 * e1 = e2`.
//! A quaternion `a1 e1 + a2 e2 + a3 e3 + a4 e4` is stored as `(x, y, z, w)`
//! with `w` the scalar part, so purely spatial quaternions double as points
//! and vectors of Euclidean 3-space.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A quaternion `x e1 + y e2 + z e3 + w e4`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub w: f64,
}

/// A spatial (pure) quaternion `x e1 + y e2 + z e3`, i.e. a vector of R^3.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Spatial {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    /// The scalar unit `e4`.
    pub const E4: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);
    pub const E1: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const E2: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const E3: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64, w: f64) -> Self {
        Quaternion { x, y, z, w }
    }

    /// Assembles a quaternion from its spatial and scalar parts.
    pub const fn from_parts(vector: Spatial, scalar: f64) -> Self {
        Quaternion::new(vector.x, vector.y, vector.z, scalar)
    }

    pub const fn scalar_part(self) -> f64 {
        self.w
    }

    pub const fn vector_part(self) -> Spatial {
        Spatial::new(self.x, self.y, self.z)
    }

    /// Splits into `(vector part, scalar part)`.
    pub const fn split(self) -> (Spatial, f64) {
        (self.vector_part(), self.w)
    }

    /// Conjugation: the spatial part changes sign, the scalar part is kept.
    pub fn conjugate(self) -> Self {
        Quaternion::new(-self.x, -self.y, -self.z, self.w)
    }

    /// The Euclidean inner product of the coefficient vectors. It agrees
    /// with the scalar part of `(q * p.conjugate() + p * q.conjugate()) / 2`.
    pub fn inner(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z + self.w * other.w
    }

    pub fn norm_squared(self) -> f64 {
        self.inner(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Multiplicative inverse `conjugate / norm^2`.
    ///
    /// Fails on the zero quaternion, the only non-invertible element.
    pub fn inverse(self) -> Result<Self> {
        let n2 = self.norm_squared();
        if n2 == 0.0 {
            return Err(Error::InvalidParameter(
                "the zero quaternion has no inverse".into(),
            ));
        }
        Ok(self.conjugate() / n2)
    }
}

impl Spatial {
    pub const ZERO: Spatial = Spatial::new(0.0, 0.0, 0.0);

    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Spatial { x, y, z }
    }

    /// Embeds the vector as a quaternion with vanishing scalar part.
    pub const fn to_quaternion(self) -> Quaternion {
        Quaternion::new(self.x, self.y, self.z, 0.0)
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Self) -> Self {
        Spatial::new(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )
    }

    pub fn norm_squared(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_squared().sqrt()
    }

    /// Unit vector in the same direction, or `None` for (numerically) zero
    /// input.
    pub fn normalized(self) -> Option<Self> {
        let n = self.norm();
        if n <= f64::EPSILON * 16.0 {
            None
        } else {
            Some(self / n)
        }
    }
}

/// Quaternion product. For `q = (s_q, v_q)` and `p = (s_p, v_p)`:
/// scalar part `s_q s_p - <v_q, v_p>`, spatial part
/// `s_q v_p + s_p v_q + v_q x v_p`.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let (vq, sq) = self.split();
        let (vp, sp) = rhs.split();
        let scalar = sq * sp - vq.dot(vp);
        let vector = vp * sq + vq * sp + vq.cross(vp);
        Quaternion::from_parts(vector, scalar)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
            self.w + rhs.w,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
            self.w - rhs.w,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.x, -self.y, -self.z, -self.w)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.x * s, self.y * s, self.z * s, self.w * s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, s: f64) -> Quaternion {
        Quaternion::new(self.x / s, self.y / s, self.z / s, self.w / s)
    }
}

impl Add for Spatial {
    type Output = Spatial;
    fn add(self, rhs: Spatial) -> Spatial {
        Spatial::new(self.x + rhs.x, self.y + rhs.y, self.z + rhs.z)
    }
}

impl Sub for Spatial {
    type Output = Spatial;
    fn sub(self, rhs: Spatial) -> Spatial {
        Spatial::new(self.x - rhs.x, self.y - rhs.y, self.z - rhs.z)
    }
}

impl Neg for Spatial {
    type Output = Spatial;
    fn neg(self) -> Spatial {
        Spatial::new(-self.x, -self.y, -self.z)
    }
}

impl Mul<f64> for Spatial {
    type Output = Spatial;
    fn mul(self, s: f64) -> Spatial {
        Spatial::new(self.x * s, self.y * s, self.z * s)
    }
}

impl Div<f64> for Spatial {
    type Output = Spatial;
    fn div(self, s: f64) -> Spatial {
        Spatial::new(self.x / s, self.y / s, self.z / s)
    }
}

impl From<Spatial> for Quaternion {
    fn from(v: Spatial) -> Quaternion {
        v.to_quaternion()
    }
}
