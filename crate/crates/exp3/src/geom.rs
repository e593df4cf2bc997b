//! Plane and space vectors.

use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// A plane vector. Checked constructors reject non-finite components;
/// arithmetic on valid values is unchecked.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Vec2<T> {
    pub fn new(x: T, y: T) -> Result<Self> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn zero() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
        }
    }

    /// Unit vector at angle `alpha` from the positive x-axis.
    pub fn unit(alpha: T) -> Self {
        Self {
            x: alpha.cos(),
            y: alpha.sin(),
        }
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product; twice the signed area of (0, self, other).
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    pub fn scale(self, s: T) -> Self {
        Self {
            x: self.x * s,
            y: self.y * s,
        }
    }

    pub fn rotated(self, alpha: T) -> Self {
        let (s, c) = alpha.sin_cos();
        Self {
            x: c * self.x - s * self.y,
            y: s * self.x + c * self.y,
        }
    }

    pub fn is_zero(self) -> bool {
        self.x == T::zero() && self.y == T::zero()
    }

    pub fn dist(self, other: Self) -> T {
        (self - other).norm()
    }
}

impl<T: Real> Add for Vec2<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl<T: Real> Sub for Vec2<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
        }
    }
}

impl<T: Real> Neg for Vec2<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            x: -self.x,
            y: -self.y,
        }
    }
}

impl<T: Real> Mul<T> for Vec2<T> {
    type Output = Self;
    fn mul(self, s: T) -> Self {
        self.scale(s)
    }
}

/// A space vector, used for projected curves and stereographic images.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vec3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

impl<T: Real> Vec3<T> {
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        if x.is_finite() && y.is_finite() && z.is_finite() {
            Ok(Self { x, y, z })
        } else {
            Err(Error::NonFinite)
        }
    }

    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    pub fn cross(self, other: Self) -> Self {
        Self {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
        }
    }

    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    pub fn norm(self) -> T {
        self.norm_sq().sqrt()
    }

    pub fn scale(self, s: T) -> Self {
        Self {
            x: self.x * s,
            y: self.y * s,
            z: self.z * s,
        }
    }

    pub fn normalized(self) -> Self {
        self.scale(T::one() / self.norm())
    }

    pub fn dist(self, other: Self) -> T {
        (self - other).norm()
    }
}

impl<T: Real> Add for Vec3<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
            z: self.z + rhs.z,
        }
    }
}

impl<T: Real> Sub for Vec3<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
            z: self.z - rhs.z,
        }
    }
}

/// Distance between closed 3-D segments [p0,p1] and [q0,q1].
pub(crate) fn segment_distance_3d<T: Real>(
    p0: Vec3<T>,
    p1: Vec3<T>,
    q0: Vec3<T>,
    q1: Vec3<T>,
) -> T {
    let d1 = p1 - p0;
    let d2 = q1 - q0;
    let r = p0 - q0;
    let a = d1.dot(d1);
    let e = d2.dot(d2);
    let f = d2.dot(r);
    let zero = T::zero();
    let one = T::one();
    let clamp = |v: T| v.max(zero).min(one);

    let (s, t);
    let tiny = T::c(1e-300);
    if a <= tiny && e <= tiny {
        return r.norm();
    }
    if a <= tiny {
        s = zero;
        t = clamp(f / e);
    } else {
        let c = d1.dot(r);
        if e <= tiny {
            t = zero;
            s = clamp(-c / a);
        } else {
            let b = d1.dot(d2);
            let denom = a * e - b * b;
            let s0 = if denom > tiny {
                clamp((b * f - c * e) / denom)
            } else {
                zero
            };
            let t0 = (b * s0 + f) / e;
            if t0 < zero {
                t = zero;
                s = clamp(-c / a);
            } else if t0 > one {
                t = one;
                s = clamp((b - c) / a);
            } else {
                t = t0;
                s = s0;
            }
        }
    }
    ((p0 + d1.scale(s)) - (q0 + d2.scale(t))).norm()
}
