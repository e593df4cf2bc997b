//! Empirical knot certification for closed space curves: generic projection,
//! crossing diagram, Kauffman bracket, Jones polynomial, trefoil verdict.
//!
//! Verdicts are certificates up to Jones equivalence: the Jones polynomial
//! separates the two trefoils from each other and from the unknot, which is
//! all these suites need. Chirality convention: the trefoil whose Jones
//! polynomial is supported on negative exponents (-t^-4 + t^-3 + t^-1) is
//! labelled right-handed.

mod bracket;
mod diagram;
mod laurent;
mod project;

pub use bracket::{jones, jones_right_trefoil, kauffman_bracket};
pub use diagram::{Crossing, PlanarDiagram, Role, MAX_CROSSINGS};
pub use laurent::LaurentPoly;
pub use project::{project_generic, Polyline3, MAX_ATTEMPTS, MIN_POINTS};

use crate::error::Result;
use crate::scalar::Real;

/// Outcome of certifying a closed curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrefoilVerdict {
    RightTrefoil,
    LeftTrefoil,
    Unknot,
    Other,
}

impl core::fmt::Display for TrefoilVerdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let s = match self {
            Self::RightTrefoil => "RightTrefoil",
            Self::LeftTrefoil => "LeftTrefoil",
            Self::Unknot => "Unknot",
            Self::Other => "Other",
        };
        write!(f, "{s}")
    }
}

/// Full certification record for a curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: TrefoilVerdict,
    pub jones: LaurentPoly,
    pub crossings: usize,
    pub writhe: i64,
}

/// Project the curve with the given seed, compute the Jones polynomial, and
/// classify it against the trefoils and the unknot.
pub fn certify<T: Real>(curve: &Polyline3<T>, seed: u64) -> Result<Certificate> {
    let diagram = project_generic(curve, seed)?;
    let jones_poly = jones(&diagram)?;
    let right = jones_right_trefoil();
    let verdict = if jones_poly == right {
        TrefoilVerdict::RightTrefoil
    } else if jones_poly == right.mirrored() {
        TrefoilVerdict::LeftTrefoil
    } else if jones_poly == LaurentPoly::one() {
        TrefoilVerdict::Unknot
    } else {
        TrefoilVerdict::Other
    };
    Ok(Certificate {
        verdict,
        jones: jones_poly,
        crossings: diagram.crossing_count(),
        writhe: diagram.writhe(),
    })
}

/// Verdict-only convenience wrapper around [`certify`].
pub fn is_trefoil<T: Real>(curve: &Polyline3<T>, seed: u64) -> Result<TrefoilVerdict> {
    Ok(certify(curve, seed)?.verdict)
}
