//! Knot diagrams as crossing lists with arc connectivity.
//!
//! A diagram of a single closed curve with `c` crossings has `2c` passages
//! through crossings; the passages cut the curve into `2c` arcs. Each
//! crossing records the arcs entering and leaving on the over- and
//! under-strand plus its orientation sign (the sign of det(over direction,
//! under direction) in the projection plane). That is exactly the data a
//! Gauss code carries, and all the bracket computation needs.

use crate::error::{Error, Result};

/// Maximum crossings the state-sum bracket will accept.
pub const MAX_CROSSINGS: usize = 24;

/// Whether a passage runs over or under its crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Over,
    Under,
}

/// One crossing: the four incident arc ends and the orientation sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub sign: i8,
}

/// A diagram of one closed curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    n_arcs: usize,
    writhe: i64,
}

impl PlanarDiagram {
    /// The crossingless diagram of a round circle.
    pub fn unknotted() -> Self {
        Self {
            crossings: Vec::new(),
            n_arcs: 0,
            writhe: 0,
        }
    }

    /// Build from the cyclic passage sequence: `events[k]` names the crossing
    /// passed at position `k` and the role there; `signs[i]` is the sign of
    /// crossing `i`. Every crossing must be passed exactly once over and once
    /// under.
    pub fn from_gauss(events: &[(usize, Role)], signs: &[i8]) -> Result<Self> {
        let c = signs.len();
        if c > MAX_CROSSINGS {
            return Err(Error::TooManyCrossings {
                max: MAX_CROSSINGS,
                got: c,
            });
        }
        if events.len() != 2 * c {
            return Err(Error::BadDiagram("need exactly two passages per crossing"));
        }
        if signs.iter().any(|s| s.abs() != 1) {
            return Err(Error::BadDiagram("crossing signs must be +1 or -1"));
        }
        let n_arcs = 2 * c;
        let mut over_pos = vec![usize::MAX; c];
        let mut under_pos = vec![usize::MAX; c];
        for (pos, &(id, role)) in events.iter().enumerate() {
            if id >= c {
                return Err(Error::BadDiagram("crossing id out of range"));
            }
            let slot = match role {
                Role::Over => &mut over_pos[id],
                Role::Under => &mut under_pos[id],
            };
            if *slot != usize::MAX {
                return Err(Error::BadDiagram("crossing passed twice in the same role"));
            }
            *slot = pos;
        }
        let crossings = (0..c)
            .map(|id| {
                let po = over_pos[id];
                let pu = under_pos[id];
                Crossing {
                    over_in: (po + n_arcs - 1) % n_arcs,
                    over_out: po,
                    under_in: (pu + n_arcs - 1) % n_arcs,
                    under_out: pu,
                    sign: signs[id],
                }
            })
            .collect::<Vec<_>>();
        let writhe = signs.iter().map(|&s| s as i64).sum();
        let d = Self {
            crossings,
            n_arcs,
            writhe,
        };
        d.validate()?;
        Ok(d)
    }

    /// Every arc has two ends, so it must appear exactly twice among the
    /// crossing ends.
    fn validate(&self) -> Result<()> {
        let mut degree = vec![0usize; self.n_arcs];
        for x in &self.crossings {
            for end in [x.over_in, x.over_out, x.under_in, x.under_out] {
                if end >= self.n_arcs {
                    return Err(Error::BadDiagram("arc id out of range"));
                }
                degree[end] += 1;
            }
        }
        if degree.iter().any(|&d| d != 2) {
            return Err(Error::BadDiagram("every arc needs exactly two ends"));
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_arcs(&self) -> usize {
        self.n_arcs
    }

    pub fn writhe(&self) -> i64 {
        self.writhe
    }

    /// Standard closed-braid trefoil diagram with three crossings of the
    /// given sign (-1 gives the chirality this crate labels "right": Jones
    /// supported on negative exponents).
    pub fn trefoil(sign: i8) -> Self {
        use Role::{Over, Under};
        let events = [
            (0, Over),
            (1, Under),
            (2, Over),
            (0, Under),
            (1, Over),
            (2, Under),
        ];
        Self::from_gauss(&events, &[sign; 3]).expect("fixed trefoil data is consistent")
    }

    /// Unknot diagram with `k` kinks of the given signs.
    pub fn unknot_with_kinks(signs: &[i8]) -> Result<Self> {
        use Role::{Over, Under};
        let events: Vec<(usize, Role)> = (0..signs.len())
            .flat_map(|i| [(i, Over), (i, Under)])
            .collect();
        Self::from_gauss(&events, signs)
    }
}
