//! The circle of lines through the origin and its subsets of size at most 3.
//!
//! Lines are parametrized by angles in [0, pi); the circle metric is
//! `min(|a-b|, pi-|a-b|)` and subsets carry the induced Hausdorff distance.

use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::scalar::Real;

/// Default tolerance for collapsing nearly coincident lines in a subset.
pub const DEFAULT_DEDUP_TOL: f64 = 1e-9;

/// A line through the origin, as an angle reduced into [0, pi).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct ProjAngle<T>(T);

impl<T: Real> ProjAngle<T> {
    /// Reduce any finite real modulo pi.
    pub fn new(theta: T) -> Result<Self> {
        if !theta.is_finite() {
            return Err(Error::NonFinite);
        }
        let pi = T::PI();
        let mut t = theta % pi;
        if t < T::zero() {
            t = t + pi;
        }
        if t >= pi {
            t = T::zero();
        }
        Ok(Self(t))
    }

    pub fn radians(self) -> T {
        self.0
    }

    /// Circle distance between two lines, in [0, pi/2].
    pub fn dist(self, other: Self) -> T {
        let d = (self.0 - other.0).abs();
        d.min(T::PI() - d)
    }

    pub fn rotated(self, phi: T) -> Result<Self> {
        Self::new(self.0 + phi)
    }
}

/// Direction of the line spanned by a nonzero vector.
pub fn proj_angle_of<T: Real>(v: Vec2<T>) -> Result<ProjAngle<T>> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    ProjAngle::new(v.y.atan2(v.x))
}

/// A set of one, two or three distinct lines, sorted by angle.
#[derive(Debug, Clone, PartialEq)]
pub struct CircleSubset<T> {
    points: Vec<ProjAngle<T>>,
}

impl<T: Real> CircleSubset<T> {
    /// Reduce the angles mod pi, collapse points within `tol` of each other
    /// (wraparound-aware), and sort.
    pub fn from_angles(angles: &[T], tol: T) -> Result<Self> {
        if angles.is_empty() {
            return Err(Error::EmptyInput);
        }
        if angles.len() > 3 {
            return Err(Error::TooManyPoints);
        }
        let mut pts: Vec<ProjAngle<T>> = angles
            .iter()
            .map(|&a| ProjAngle::new(a))
            .collect::<Result<_>>()?;
        pts.sort_by(|a, b| a.partial_cmp(b).expect("angles are finite"));
        let mut kept: Vec<ProjAngle<T>> = Vec::with_capacity(pts.len());
        for p in pts {
            if !kept.iter().any(|q| q.dist(p) <= tol) {
                kept.push(p);
            }
        }
        Ok(Self { points: kept })
    }

    pub fn from_proj_angles(angles: &[ProjAngle<T>], tol: T) -> Result<Self> {
        let raw: Vec<T> = angles.iter().map(|a| a.radians()).collect();
        Self::from_angles(&raw, tol)
    }

    /// The singleton {x}; the diagonal embedding of the circle.
    pub fn singleton(x: ProjAngle<T>) -> Self {
        Self { points: vec![x] }
    }

    pub fn angles(&self) -> &[ProjAngle<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least one point by construction
    }

    /// Hausdorff distance: the larger of the two directed sup-inf distances.
    pub fn hausdorff(&self, other: &Self) -> T {
        let directed = |from: &Self, to: &Self| {
            from.points
                .iter()
                .map(|p| {
                    to.points
                        .iter()
                        .map(|q| p.dist(*q))
                        .fold(T::infinity(), T::min)
                })
                .fold(T::zero(), T::max)
        };
        directed(self, other).max(directed(other, self))
    }

    /// Rotate every line by `phi` (finite); an isometry of the subset space.
    pub fn rotated(&self, phi: T) -> Self {
        let mut pts: Vec<ProjAngle<T>> = self
            .points
            .iter()
            .map(|p| p.rotated(phi).expect("finite rotation"))
            .collect();
        pts.sort_by(|a, b| a.partial_cmp(b).expect("angles are finite"));
        Self { points: pts }
    }

    /// Smallest pairwise circle distance; `None` for singletons.
    pub fn min_gap(&self) -> Option<T> {
        if self.points.len() < 2 {
            return None;
        }
        let mut best = T::infinity();
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                best = best.min(self.points[i].dist(self.points[j]));
            }
        }
        Some(best)
    }
}

/// The diagonal embedding x -> {x}.
pub fn delta_embed<T: Real>(x: ProjAngle<T>) -> CircleSubset<T> {
    CircleSubset::singleton(x)
}
