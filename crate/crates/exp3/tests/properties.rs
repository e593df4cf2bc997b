//! Property tests for the metric structure and the reduction.

use proptest::prelude::*;

use lattice_exp3::circle::{CircleSubset, ProjAngle};
use lattice_exp3::lattice::{gauss_reduce, lattice_eq_mod_scale, Basis};
use lattice_exp3::phi::{phi, CompactifiedLattice};
use lattice_exp3::Vec2;

fn angle() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

fn well_conditioned_basis() -> impl Strategy<Value = Basis<f64>> {
    (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64).prop_filter_map(
        "independent",
        |(ux, uy, vx, vy)| {
            let b = Basis::from_coords(ux, uy, vx, vy).ok()?;
            (b.u.cross(b.v).abs() > 1e-3 * b.u.norm() * b.v.norm()).then_some(b)
        },
    )
}

proptest! {
    // metric axioms are cheap; sample them densely
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn circle_dist_is_a_metric(a in angle(), b in angle(), c in angle()) {
        let p = ProjAngle::new(a).unwrap();
        let q = ProjAngle::new(b).unwrap();
        let r = ProjAngle::new(c).unwrap();
        prop_assert!(p.dist(q) >= 0.0);
        prop_assert!((p.dist(q) - q.dist(p)).abs() <= 1e-15);
        prop_assert!(p.dist(q) <= std::f64::consts::FRAC_PI_2 + 1e-15);
        prop_assert!(p.dist(r) <= p.dist(q) + q.dist(r) + 1e-12);
        prop_assert!(p.dist(p) == 0.0);
    }

    #[test]
    fn hausdorff_is_a_metric(
        xs in prop::collection::vec(angle(), 1..=3),
        ys in prop::collection::vec(angle(), 1..=3),
        zs in prop::collection::vec(angle(), 1..=3),
    ) {
        let s = CircleSubset::from_angles(&xs, 1e-9).unwrap();
        let t = CircleSubset::from_angles(&ys, 1e-9).unwrap();
        let u = CircleSubset::from_angles(&zs, 1e-9).unwrap();
        prop_assert!((s.hausdorff(&t) - t.hausdorff(&s)).abs() <= 1e-15);
        prop_assert!(s.hausdorff(&s) == 0.0);
        prop_assert!(s.hausdorff(&u) <= s.hausdorff(&t) + t.hausdorff(&u) + 1e-12);
        // zero iff equal as sets
        if s.hausdorff(&t) == 0.0 {
            prop_assert_eq!(s.len(), t.len());
        }
    }

    #[test]
    fn make_subset_is_permutation_invariant(xs in prop::collection::vec(angle(), 1..=3)) {
        let s = CircleSubset::from_angles(&xs, 1e-9).unwrap();
        let mut rev = xs.clone();
        rev.reverse();
        let t = CircleSubset::from_angles(&rev, 1e-9).unwrap();
        prop_assert!(s.hausdorff(&t) <= 1e-15);
    }

    #[test]
    fn rotation_is_a_hausdorff_isometry(
        xs in prop::collection::vec(angle(), 1..=3),
        ys in prop::collection::vec(angle(), 1..=3),
        by in angle(),
    ) {
        let s = CircleSubset::from_angles(&xs, 1e-9).unwrap();
        let t = CircleSubset::from_angles(&ys, 1e-9).unwrap();
        let before = s.hausdorff(&t);
        let after = s.rotated(by).hausdorff(&t.rotated(by));
        prop_assert!((before - after).abs() <= 1e-12);
    }

    #[test]
    fn reduction_is_idempotent_and_canonical(b in well_conditioned_basis()) {
        let r = gauss_reduce(&b).unwrap();
        prop_assert!(r.u().norm() <= r.v().norm() * (1.0 + 1e-12));
        let dot = r.u().dot(r.v());
        prop_assert!(dot >= -1e-12);
        prop_assert!(dot <= 0.5 * r.u().norm_sq() + 1e-12);
        // u points into the upper half-plane (line angle in [0, pi))
        prop_assert!(r.u().y > 0.0 || (r.u().y == 0.0 && r.u().x > 0.0));
        // reducing again changes nothing
        let rr = gauss_reduce(&r.as_basis()).unwrap();
        prop_assert!(rr.u().dist(r.u()) <= 1e-15);
        prop_assert!(rr.v().dist(r.v()) <= 1e-15);
        // and the reduced basis spans the same lattice
        prop_assert!(lattice_eq_mod_scale(&b, &r.as_basis(), 1e-9).unwrap());
    }

    #[test]
    fn phi_image_size_matches_rectangularity(b in well_conditioned_basis()) {
        let s = phi(&CompactifiedLattice::NonDegenerate(b)).unwrap();
        let r = gauss_reduce(&b).unwrap();
        let normalized_dot = r.u().dot(r.v()) / (r.u().norm() * r.v().norm());
        // random bases land far from the dedup boundary on either side
        prop_assume!(!(1e-12..=1e-6).contains(&normalized_dot));
        if normalized_dot < 1e-12 {
            prop_assert_eq!(s.len(), 2);
        } else {
            prop_assert_eq!(s.len(), 3);
        }
    }

    #[test]
    fn scaling_by_integers_preserves_the_lattice_test(
        b in well_conditioned_basis(),
        m in 1i64..5,
    ) {
        let scaled = b.scaled(m as f64);
        prop_assert!(lattice_eq_mod_scale(&b, &scaled, 1e-9).unwrap());
        // sublattices are not equal
        let sub = Basis::new(b.u.scale(2.0), b.v).unwrap();
        prop_assert!(!lattice_eq_mod_scale(&b, &sub, 1e-9).unwrap());
    }
}

#[test]
fn vec2_alias_is_f64() {
    let v: Vec2 = Vec2::new(1.0, 2.0).unwrap();
    assert_eq!(v.x, 1.0f64);
}

#[test]
fn core_runs_at_f32_too() {
    use lattice_exp3::geom::Vec2 as GVec2;
    use lattice_exp3::lattice::Basis as GBasis;

    let b: GBasis<f32> = GBasis::new(
        GVec2::new(1.0f32, 0.0).unwrap(),
        GVec2::new(5.0f32, 1.0).unwrap(),
    )
    .unwrap();
    let r = gauss_reduce(&b).unwrap();
    assert!((r.u().x - 1.0).abs() < 1e-6 && r.v().y.abs() > 0.9);

    let s = phi(&lattice_exp3::phi::CompactifiedLattice::NonDegenerate(b)).unwrap();
    assert_eq!(s.len(), 2);
    let quarter = std::f32::consts::FRAC_PI_4;
    assert!((s.angles()[0].radians() - quarter).abs() < 1e-5);

    let p = lattice_exp3::chart::torus_knot_point(0.3f32);
    assert!(p.discriminant().norm() < 1e-5);
}
