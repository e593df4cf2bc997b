//! Kauffman bracket state sum and the Jones polynomial.

use crate::error::{Error, Result};
use crate::knot::diagram::{PlanarDiagram, MAX_CROSSINGS};
use crate::knot::laurent::LaurentPoly;

/// Union-find over arc ids, sized for 2 * MAX_CROSSINGS arcs.
struct ArcSets {
    parent: [u8; 2 * MAX_CROSSINGS],
    n: usize,
}

impl ArcSets {
    fn new(n: usize) -> Self {
        let mut parent = [0u8; 2 * MAX_CROSSINGS];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        Self { parent, n }
    }

    fn find(&mut self, mut x: u8) -> u8 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    fn union(&mut self, a: u8, b: u8) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra as usize] = rb;
        }
    }

    fn component_count(&mut self) -> usize {
        (0..self.n).filter(|&i| self.parent[i] == i as u8).count()
    }
}

/// The bracket polynomial in the variable A, by summation over all
/// smoothing states. Loops of a state are counted with union-find over the
/// diagram arcs; the contribution is A^(#A - #B) (-A^2 - A^-2)^(loops - 1).
/// A crossingless diagram (one round loop) has bracket 1.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPoly> {
    let c = d.crossing_count();
    if c > MAX_CROSSINGS {
        return Err(Error::TooManyCrossings {
            max: MAX_CROSSINGS,
            got: c,
        });
    }
    if c == 0 {
        return Ok(LaurentPoly::one());
    }

    // tally[(a_count, loops)] over all 2^c states
    let mut tally = vec![0u64; (c + 1) * (c + 2)];
    let crossings = d.crossings();
    for state in 0..(1u32 << c) {
        let mut sets = ArcSets::new(d.n_arcs());
        let mut a_count = 0usize;
        for (k, x) in crossings.iter().enumerate() {
            let a_smoothing = state >> k & 1 == 0;
            if a_smoothing {
                a_count += 1;
            }
            // positive crossing: A joins over-in/under-out and over-out/under-in;
            // negative crossing swaps the two pairings
            if (x.sign > 0) == a_smoothing {
                sets.union(x.over_in as u8, x.under_out as u8);
                sets.union(x.over_out as u8, x.under_in as u8);
            } else {
                sets.union(x.over_in as u8, x.under_in as u8);
                sets.union(x.over_out as u8, x.under_out as u8);
            }
        }
        let loops = sets.component_count();
        tally[a_count * (c + 2) + loops] += 1;
    }

    let loop_factor = LaurentPoly::from_terms(&[(2, -1), (-2, -1)]);
    let mut loop_powers = Vec::with_capacity(c + 1);
    loop_powers.push(LaurentPoly::one());
    for _ in 0..c {
        let next = loop_powers.last().expect("non-empty") * &loop_factor;
        loop_powers.push(next);
    }

    let mut bracket = LaurentPoly::zero();
    for a_count in 0..=c {
        for loops in 1..=c + 1 {
            let count = tally[a_count * (c + 2) + loops];
            if count == 0 {
                continue;
            }
            let exponent = 2 * a_count as i64 - c as i64;
            let base = LaurentPoly::monomial(exponent, count as i64);
            bracket = &bracket + &(&base * &loop_powers[loops - 1]);
        }
    }
    Ok(bracket)
}

/// Jones polynomial in t: V = (-A)^(-3 writhe) times the bracket, t = A^-4.
/// Bracket exponents of a knot diagram become multiples of four after the
/// writhe correction; anything else means the diagram is not a single
/// closed curve.
pub fn jones(d: &PlanarDiagram) -> Result<LaurentPoly> {
    let bracket = kauffman_bracket(d)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut shifted = LaurentPoly::zero();
    for (e, c) in bracket.terms() {
        shifted.add_term(e - 3 * w, sign * c);
    }
    if shifted.terms().any(|(e, _)| e % 4 != 0) {
        return Err(Error::NonKnotDiagram);
    }
    Ok(shifted.map_exponents(|e| -e / 4))
}

/// Jones polynomial of the trefoil this crate labels right-handed.
pub fn jones_right_trefoil() -> LaurentPoly {
    LaurentPoly::from_terms(&[(-4, -1), (-3, 1), (-1, 1)])
}
