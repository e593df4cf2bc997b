//! The correspondence between compactified plane lattices and subsets of the
//! circle of lines.
//!
//! Forward direction: reduce the lattice basis, take the canonical generator
//! triangle (0, u, v), and record the three lines joining its circumcenter to
//! its vertices. Two of the lines coincide exactly when the lattice is
//! rectangular, and a degenerate lattice maps to the single line containing
//! it, so the image has 1, 2 or 3 points. The inverse lifts a 3-subset to the
//! unique inscribed non-obtuse triangle with circumcenter at the origin, and
//! a 2-subset to the orthogonal basis whose generator triangle produces the
//! pair.

use crate::circle::{proj_angle_of, CircleSubset, ProjAngle, DEFAULT_DEDUP_TOL};
use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::lattice::{circumcenter, gauss_reduce, Basis, Triangle};
use crate::scalar::Real;

/// A point of the compactified lattice space: a genuine lattice given by a
/// basis, or a degenerate lattice given by the line containing it. Semantics
/// are always modulo scaling by a nonzero real.
#[derive(Debug, Clone, PartialEq)]
pub enum CompactifiedLattice<T> {
    NonDegenerate(Basis<T>),
    Degenerate(ProjAngle<T>),
}

impl<T: Real> CompactifiedLattice<T> {
    pub fn rotated(&self, alpha: T) -> Self {
        match self {
            Self::NonDegenerate(b) => Self::NonDegenerate(b.rotated(alpha)),
            Self::Degenerate(d) => Self::Degenerate(d.rotated(alpha).expect("finite rotation")),
        }
    }
}

/// Lines from the circumcenter of `t` to its three vertices, collapsed with
/// the given tolerance. Any generator triangle of a lattice yields the same
/// subset; the canonical route goes through the reduced basis.
pub fn subset_from_triangle<T: Real>(t: &Triangle<T>, tol: T) -> Result<CircleSubset<T>> {
    let o = circumcenter(t)?;
    let mut angles = [T::zero(); 3];
    for (slot, p) in angles.iter_mut().zip(t.vertices()) {
        *slot = proj_angle_of(p - o)?.radians();
    }
    CircleSubset::from_angles(&angles, tol)
}

/// Map a compactified lattice to its subset of circle lines.
pub fn phi<T: Real>(lattice: &CompactifiedLattice<T>) -> Result<CircleSubset<T>> {
    phi_with_tol(lattice, T::c(DEFAULT_DEDUP_TOL))
}

pub fn phi_with_tol<T: Real>(lattice: &CompactifiedLattice<T>, tol: T) -> Result<CircleSubset<T>> {
    match lattice {
        CompactifiedLattice::Degenerate(d) => Ok(CircleSubset::singleton(*d)),
        CompactifiedLattice::NonDegenerate(b) => {
            let r = gauss_reduce(b)?;
            let tri = Triangle::new(Vec2::zero(), r.u(), r.v());
            subset_from_triangle(&tri, tol)
        }
    }
}

/// Choose unit-circle representatives of three distinct lines such that the
/// inscribed triangle is non-obtuse (equivalently: no open half-circle
/// contains all three points, so the circumcenter is the origin). Exactly one
/// of the four sign classes modulo a global antipodal flip qualifies.
pub fn lift_nonobtuse<T: Real>(
    a: ProjAngle<T>,
    b: ProjAngle<T>,
    c: ProjAngle<T>,
    tol: T,
) -> Result<Triangle<T>> {
    if a.dist(b) <= tol || a.dist(c) <= tol || b.dist(c) <= tol {
        return Err(Error::NotDistinct);
    }
    let pi = T::PI();
    let two_pi = pi + pi;
    let slack = T::c(1e-9);

    let mut best: Option<(T, [T; 3])> = None;
    let mut qualifying = 0usize;
    for class in 0..4u8 {
        let alphas = [
            a.radians(),
            b.radians() + if class & 1 == 1 { pi } else { T::zero() },
            c.radians() + if class & 2 == 2 { pi } else { T::zero() },
        ];
        let mut sorted = alphas;
        sorted.sort_by(|x, y| x.partial_cmp(y).expect("finite angles"));
        let gaps = [
            sorted[1] - sorted[0],
            sorted[2] - sorted[1],
            two_pi - (sorted[2] - sorted[0]),
        ];
        let max_gap = gaps[0].max(gaps[1]).max(gaps[2]);
        if max_gap <= pi + slack {
            qualifying += 1;
        }
        if best.is_none_or(|(m, _)| max_gap < m) {
            best = Some((max_gap, alphas));
        }
    }
    let (max_gap, alphas) = best.expect("four classes examined");
    if qualifying == 0 || max_gap > pi + slack {
        return Err(Error::NotDistinct);
    }
    Ok(Triangle::new(
        Vec2::unit(alphas[0]),
        Vec2::unit(alphas[1]),
        Vec2::unit(alphas[2]),
    ))
}

/// Number of sign classes (of four) whose lifted triple lies in no open
/// half-circle. Exposed for the uniqueness check in the verification suites.
pub fn qualifying_sign_classes<T: Real>(
    a: ProjAngle<T>,
    b: ProjAngle<T>,
    c: ProjAngle<T>,
) -> usize {
    let pi = T::PI();
    let two_pi = pi + pi;
    let slack = T::c(1e-12);
    let mut count = 0;
    for class in 0..4u8 {
        let mut alphas = [
            a.radians(),
            b.radians() + if class & 1 == 1 { pi } else { T::zero() },
            c.radians() + if class & 2 == 2 { pi } else { T::zero() },
        ];
        alphas.sort_by(|x, y| x.partial_cmp(y).expect("finite angles"));
        let gaps = [
            alphas[1] - alphas[0],
            alphas[2] - alphas[1],
            two_pi - (alphas[2] - alphas[0]),
        ];
        if gaps.iter().all(|g| *g <= pi + slack) {
            count += 1;
        }
    }
    count
}

/// Orthogonal basis whose line pair under the forward map is exactly {p, q}.
///
/// With representatives 0 <= phi1 < phi2 < pi, the bisector angle is
/// psi = (phi1+phi2)/2 and the half-gap delta = (phi2-phi1)/2; the sides are
/// cos(delta) e(psi) and sin(delta) e(psi+pi/2). The alternative bisector
/// psi + pi/2 yields the same lattice.
pub fn rect_from_pair<T: Real>(p: ProjAngle<T>, q: ProjAngle<T>, tol: T) -> Result<Basis<T>> {
    if p.dist(q) <= tol {
        return Err(Error::NotDistinct);
    }
    let (lo, hi) = if p.radians() <= q.radians() {
        (p.radians(), q.radians())
    } else {
        (q.radians(), p.radians())
    };
    let half = T::c(0.5);
    let psi = (lo + hi) * half;
    let delta = (hi - lo) * half;
    let u = Vec2::unit(psi).scale(delta.cos());
    let v = Vec2::unit(psi + T::FRAC_PI_2()).scale(delta.sin());
    Basis::new(u, v)
}

/// Constructive inverse of the forward map. Returns a reduced representative
/// basis; equality statements about the result are modulo scale.
pub fn phi_inverse<T: Real>(s: &CircleSubset<T>) -> Result<CompactifiedLattice<T>> {
    let pts = s.angles();
    match pts.len() {
        1 => Ok(CompactifiedLattice::Degenerate(pts[0])),
        2 => {
            let b = rect_from_pair(pts[0], pts[1], T::zero())?;
            let r = gauss_reduce(&b)?;
            Ok(CompactifiedLattice::NonDegenerate(r.as_basis()))
        }
        3 => {
            let t = lift_nonobtuse(pts[0], pts[1], pts[2], T::zero())?;
            let b = Basis::new(t.b - t.a, t.c - t.a)?;
            let r = gauss_reduce(&b)?;
            Ok(CompactifiedLattice::NonDegenerate(r.as_basis()))
        }
        _ => Err(Error::TooManyPoints),
    }
}
