//! Integer-coefficient Laurent polynomials in one variable.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exponent: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exponent, coeff);
        }
        Self { coeffs }
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.coeffs.entry(exponent).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.coeffs.get(&exponent).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Substitute the variable by its inverse (exponent negation).
    pub fn mirrored(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Map every exponent, requiring the image map to stay injective.
    pub fn map_exponents(&self, f: impl Fn(i64) -> i64) -> Self {
        let coeffs: BTreeMap<i64, i64> = self.coeffs.iter().map(|(&e, &c)| (f(e), c)).collect();
        assert_eq!(
            coeffs.len(),
            self.coeffs.len(),
            "exponent map must be injective"
        );
        Self { coeffs }
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Render with the given variable name, highest exponent first.
    pub fn display(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            match (mag, e) {
                (_, 0) => out.push_str(&mag.to_string()),
                (1, 1) => out.push_str(var),
                (1, _) => out.push_str(&format!("{var}^{e}")),
                (_, 1) => out.push_str(&format!("{mag}{var}")),
                (_, _) => out.push_str(&format!("{mag}{var}^{e}")),
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("x"))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(e, -c);
        }
        out
    }
}
