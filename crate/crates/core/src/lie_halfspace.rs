//! The ambient space: the upper half-space `z > 0` carrying the metric
//! `<u, v> / z^2`, together with its Lie group structure.
//!
//! The group law comes from the semidirect product `R^2 x| R` whose
//! height coordinate acts on the plane by the dilation `e^w`. Pushed
//! through `(x, y, w) -> (x, y, e^w)` it reads
//!
//! ```text
//! (x1, y1, z1) * (x2, y2, z2) = (z1 x2 + x1, z1 y2 + y1, z1 z2)
//! ```
//!
//! so the identity is `(0, 0, 1)`, left translation by a point of height one
//! is a parabolic translation and left translation by `(0, 0, z)` is the
//! hyperbolic dilation `p -> z p`.

use std::ops::Mul;

use nalgebra::Matrix3;

use crate::error::{Error, Result};
use crate::Vec3;

/// A point of the upper half-space model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfSpacePoint {
    x: f64,
    y: f64,
    z: f64,
}

impl HalfSpacePoint {
    pub const IDENTITY: HalfSpacePoint = HalfSpacePoint {
        x: 0.0,
        y: 0.0,
        z: 1.0,
    };

    /// Rejects non-finite coordinates and `z <= 0`.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        check_finite("x", x)?;
        check_finite("y", y)?;
        check_finite("z", z)?;
        if z <= 0.0 {
            return Err(Error::NonPositiveHeight { z });
        }
        Ok(HalfSpacePoint { x, y, z })
    }

    pub fn from_vector(v: &Vec3) -> Result<Self> {
        Self::new(v.x, v.y, v.z)
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn to_vector(&self) -> Vec3 {
        Vec3::new(self.x, self.y, self.z)
    }

    /// The Lie product `self * other`.
    pub fn product(&self, other: &HalfSpacePoint) -> HalfSpacePoint {
        HalfSpacePoint {
            x: self.z * other.x + self.x,
            y: self.z * other.y + self.y,
            z: self.z * other.z,
        }
    }

    pub fn inverse(&self) -> HalfSpacePoint {
        HalfSpacePoint {
            x: -self.x / self.z,
            y: -self.y / self.z,
            z: 1.0 / self.z,
        }
    }

    /// Rotation by `theta` about the vertical axis through the origin.
    pub fn rotated(&self, theta: f64) -> HalfSpacePoint {
        let (sin, cos) = theta.sin_cos();
        HalfSpacePoint {
            x: self.x * cos - self.y * sin,
            y: self.x * sin + self.y * cos,
            z: self.z,
        }
    }

    /// Hyperbolic inner product of two tangent vectors at this point.
    pub fn inner(&self, u: &Vec3, v: &Vec3) -> f64 {
        u.dot(v) / (self.z * self.z)
    }
}

impl Mul for HalfSpacePoint {
    type Output = HalfSpacePoint;

    fn mul(self, rhs: HalfSpacePoint) -> HalfSpacePoint {
        self.product(&rhs)
    }
}

/// A point of `R^2 x| R` before the height is exponentiated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemidirectPoint {
    pub x: f64,
    pub y: f64,
    pub w: f64,
}

impl SemidirectPoint {
    pub fn new(x: f64, y: f64, w: f64) -> Result<Self> {
        check_finite("x", x)?;
        check_finite("y", y)?;
        check_finite("w", w)?;
        Ok(SemidirectPoint { x, y, w })
    }

    /// The semidirect product `(x1 + e^w1 x2, y1 + e^w1 y2, w1 + w2)`.
    pub fn compose(&self, other: &SemidirectPoint) -> SemidirectPoint {
        let scale = self.w.exp();
        SemidirectPoint {
            x: self.x + scale * other.x,
            y: self.y + scale * other.y,
            w: self.w + other.w,
        }
    }
}

fn check_finite(what: &'static str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what, value })
    }
}

pub fn lie_product(p: &HalfSpacePoint, q: &HalfSpacePoint) -> HalfSpacePoint {
    p.product(q)
}

pub fn lie_inverse(p: &HalfSpacePoint) -> HalfSpacePoint {
    p.inverse()
}

/// The group isomorphism `(x, y, w) -> (x, y, e^w)`.
pub fn semidirect_to_halfspace(p: &SemidirectPoint) -> Result<HalfSpacePoint> {
    let z = p.w.exp();
    if !z.is_finite() {
        return Err(Error::HeightOverflow { w: p.w });
    }
    if z == 0.0 {
        return Err(Error::NonPositiveHeight { z });
    }
    HalfSpacePoint::new(p.x, p.y, z)
}

pub fn rotation_about_vertical(theta: f64, p: &HalfSpacePoint) -> HalfSpacePoint {
    p.rotated(theta)
}

/// The matrix of [`rotation_about_vertical`], for acting on tangent vectors.
pub fn vertical_rotation_matrix(theta: f64) -> Matrix3<f64> {
    let (sin, cos) = theta.sin_cos();
    Matrix3::new(cos, -sin, 0.0, sin, cos, 0.0, 0.0, 0.0, 1.0)
}

pub fn hyperbolic_inner(p: &HalfSpacePoint, u: &Vec3, v: &Vec3) -> f64 {
    p.inner(u, v)
}
