//! Perimeter-one non-obtuse triangle shapes and the quotient map onto
//! compactified lattices.
//!
//! A shape is stored as two side vectors from a base vertex, modulo
//! translation; the third side is their difference. Degenerate shapes (one
//! side of length zero, both adjacent angles right) are stored exactly with
//! the first side zero, so the boundary of the lattice space is exact and
//! continuity can be probed along paths.

use crate::circle::proj_angle_of;
use crate::error::{Error, Result};
use crate::geom::Vec2;
use crate::lattice::Basis;
use crate::phi::CompactifiedLattice;
use crate::scalar::Real;

/// A triangle of perimeter one, each angle at most a right angle, possibly
/// degenerate (first side exactly zero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleShape<T> {
    a: Vec2<T>,
    b: Vec2<T>,
}

impl<T: Real> TriangleShape<T> {
    /// First side from the base vertex; zero exactly for degenerate shapes.
    pub fn side_a(&self) -> Vec2<T> {
        self.a
    }

    /// Second side from the base vertex.
    pub fn side_b(&self) -> Vec2<T> {
        self.b
    }

    pub fn is_degenerate(&self) -> bool {
        self.a.is_zero()
    }

    pub fn perimeter(&self) -> T {
        self.a.norm() + self.b.norm() + (self.b - self.a).norm()
    }
}

/// Build a shape from two side vectors, rescaling to perimeter one.
///
/// Accepts non-obtuse triangles and exact degenerate inputs (one side zero);
/// nonzero collinear sides are rejected since no admissible triangle has a
/// zero angle with all sides positive.
pub fn make_shape<T: Real>(a: Vec2<T>, b: Vec2<T>) -> Result<TriangleShape<T>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidDegenerate);
    }
    // canonical degenerate form keeps the zero side first
    let (a, b) = if b.is_zero() { (b, a) } else { (a, b) };

    if !a.is_zero() {
        if a.cross(b).abs() <= T::c(1e-12) * a.norm() * b.norm() {
            return Err(Error::InvalidDegenerate);
        }
        let tol = T::c(1e-9);
        let third = b - a;
        let checks = [
            a.dot(b),         // angle at the base vertex
            (-a).dot(third),  // angle at the end of side a
            (-b).dot(-third), // angle at the end of side b
        ];
        let scales = [
            a.norm() * b.norm(),
            a.norm() * third.norm(),
            b.norm() * third.norm(),
        ];
        for (dot, scale) in checks.iter().zip(scales) {
            if *dot < -tol * scale {
                return Err(Error::ObtuseTriangle);
            }
        }
    }

    let perimeter = a.norm() + b.norm() + (b - a).norm();
    let s = T::one() / perimeter;
    Ok(TriangleShape {
        a: a.scale(s),
        b: b.scale(s),
    })
}

/// The quotient map: a shape goes to the lattice generated by its sides, and
/// a degenerate shape to the degenerate lattice along its remaining side.
pub fn p_map<T: Real>(t: &TriangleShape<T>) -> CompactifiedLattice<T> {
    if t.is_degenerate() {
        CompactifiedLattice::Degenerate(
            proj_angle_of(t.b).expect("degenerate shape has a nonzero side"),
        )
    } else {
        CompactifiedLattice::NonDegenerate(Basis { u: t.a, v: t.b })
    }
}

/// Perimeter-normalized right triangle with legs in ratio `eps : 1`, the long
/// leg along `direction`. Converges to the degenerate shape along `direction`
/// as `eps` goes to zero; `eps = 1` is the right isoceles triangle.
pub fn degenerate_path<T: Real>(direction: T, eps: T) -> Result<TriangleShape<T>> {
    if !(eps > T::zero() && eps <= T::one()) || !eps.is_finite() || !direction.is_finite() {
        return Err(Error::OutOfRange);
    }
    let long = Vec2::unit(direction);
    let short = Vec2::unit(direction + T::FRAC_PI_2()).scale(eps);
    make_shape(short, long)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::lattice_eq_mod_scale;
    use crate::phi::phi;

    #[test]
    fn degenerate_shape_normalizes_perimeter() {
        let a = Vec2::<f64>::new(0.0, 0.0).unwrap();
        let b = Vec2::new(1.0, 0.0).unwrap();
        let t = make_shape(a, b).unwrap();
        assert!(t.is_degenerate());
        assert_eq!(t.side_b().x, 0.5);
        assert_eq!(t.side_b().y, 0.0);
        assert!((t.perimeter() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn right_isoceles_is_admissible() {
        let t = make_shape(
            Vec2::<f64>::new(1.0, 0.0).unwrap(),
            Vec2::new(0.0, 1.0).unwrap(),
        )
        .unwrap();
        assert!(!t.is_degenerate());
        assert!((t.perimeter() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn obtuse_rejected() {
        let r = make_shape(Vec2::new(1.0, 0.0).unwrap(), Vec2::new(-0.9, 0.1).unwrap());
        assert_eq!(r.err(), Some(Error::ObtuseTriangle));
        let r = make_shape(Vec2::new(1.0, 0.0).unwrap(), Vec2::new(2.0, 0.0).unwrap());
        assert_eq!(r.err(), Some(Error::InvalidDegenerate));
    }

    #[test]
    fn p_map_examples() {
        let square =
            make_shape(Vec2::new(1.0, 0.0).unwrap(), Vec2::new(0.0, 1.0).unwrap()).unwrap();
        match p_map(&square) {
            CompactifiedLattice::NonDegenerate(b) => {
                let unit = Basis::from_coords(1.0, 0.0, 0.0, 1.0).unwrap();
                assert!(lattice_eq_mod_scale(&b, &unit, 1e-9).unwrap());
            }
            _ => panic!("non-degenerate shape maps to a lattice"),
        }

        let degenerate = make_shape(Vec2::zero(), Vec2::new(1.0, 0.0).unwrap()).unwrap();
        match p_map(&degenerate) {
            CompactifiedLattice::Degenerate(d) => assert_eq!(d.radians(), 0.0),
            _ => panic!("degenerate shape maps to a degenerate lattice"),
        }

        let s3 = 3f64.sqrt() / 2.0;
        let equilateral = make_shape(
            Vec2::new(1.0 / 3.0, 0.0).unwrap(),
            Vec2::new(1.0 / 6.0, s3 / 3.0).unwrap(),
        )
        .unwrap();
        match p_map(&equilateral) {
            CompactifiedLattice::NonDegenerate(b) => {
                let hex = Basis::from_coords(1.0, 0.0, 0.5, s3).unwrap();
                assert!(lattice_eq_mod_scale(&b, &hex, 1e-9).unwrap());
            }
            _ => panic!("equilateral maps to the hexagonal lattice"),
        }
    }

    #[test]
    fn side_pair_choice_does_not_matter() {
        let a = Vec2::new(0.9, 0.1).unwrap();
        let b = Vec2::new(0.2, 1.1).unwrap();
        // the same triangle described from each of its three vertices
        let pairs = [(a, b), (b - a, -a), (a - b, -b)];
        let lattices: Vec<Basis<f64>> = pairs
            .iter()
            .map(|&(p, q)| match p_map(&make_shape(p, q).unwrap()) {
                CompactifiedLattice::NonDegenerate(l) => l,
                _ => unreachable!(),
            })
            .collect();
        for pair in lattices.windows(2) {
            assert!(lattice_eq_mod_scale(&pair[0], &pair[1], 1e-9).unwrap());
        }
    }

    #[test]
    fn admissibility_matches_the_angle_predicate() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut accepted = 0;
        for _ in 0..2000 {
            let a = Vec2::<f64>::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)).unwrap();
            let b = Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)).unwrap();
            if a.is_zero() || b.is_zero() || a.cross(b).abs() <= 1e-6 * a.norm() * b.norm() {
                continue;
            }
            let third = b - a;
            let dots = [
                (a.dot(b), a.norm() * b.norm()),
                ((-a).dot(third), a.norm() * third.norm()),
                ((-b).dot(-third), b.norm() * third.norm()),
            ];
            let admissible = dots.iter().all(|(d, s)| *d >= -1e-9 * s);
            assert_eq!(make_shape(a, b).is_ok(), admissible);
            if admissible {
                accepted += 1;
            }
        }
        assert!(accepted > 100, "sampling must hit admissible shapes");
    }

    #[test]
    fn degenerate_path_probes_the_boundary() {
        let iso = degenerate_path::<f64>(0.0, 1.0).unwrap();
        assert!((iso.side_a().norm() - iso.side_b().norm()).abs() < 1e-15);

        let t = degenerate_path(0.0, 0.01).unwrap();
        let s = phi(&p_map(&t)).unwrap();
        let target = crate::circle::CircleSubset::from_angles(&[0.0], 1e-9).unwrap();
        assert!(s.hausdorff(&target) < 0.011);

        assert_eq!(degenerate_path(0.0, 0.0).err(), Some(Error::OutOfRange));
        assert_eq!(degenerate_path(0.0, 1.5).err(), Some(Error::OutOfRange));
    }
}
