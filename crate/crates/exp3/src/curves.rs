//! Closed curves on the unit sphere in C^2 and their images in space.
//!
//! Two families matter here: the analytic torus-knot curve on the
//! discriminant locus, and the push-off of the circle of degenerate lattices,
//! obtained by carrying the subsets {theta - delta, theta, theta + delta}
//! through the inverse correspondence and the Eisenstein chart.

use crate::chart::{chart_point, torus_knot_point, S3Point};
use crate::circle::CircleSubset;
use crate::error::{Error, Result};
use crate::geom::Vec3;
use crate::knot::Polyline3;
use crate::phi::{phi_inverse, CompactifiedLattice};
use crate::scalar::Real;

/// Number of candidate poles examined by [`select_pole`].
pub const POLE_GRID: usize = 1024;

/// The subsets {theta - delta, theta, theta + delta} for `samples` values of
/// theta uniform in [0, pi); the delta-push-off of the diagonal circle.
pub fn pushed_off_subsets<T: Real>(
    samples: usize,
    delta: T,
    tol: T,
) -> Result<Vec<CircleSubset<T>>> {
    if samples < 8 {
        return Err(Error::OutOfRange);
    }
    if !(delta > T::zero() && delta < T::FRAC_PI_6()) {
        return Err(Error::OutOfRange);
    }
    let pi = T::PI();
    let step = pi / T::c(samples as f64);
    (0..samples)
        .map(|k| {
            let theta = step * T::c(k as f64);
            CircleSubset::from_angles(&[theta - delta, theta, theta + delta], tol)
        })
        .collect()
}

/// Push-off curve through the inverse correspondence and the chart.
pub fn pushed_off_curve<T: Real>(samples: usize, delta: T, tol: T) -> Result<Vec<S3Point<T>>> {
    pushed_off_subsets(samples, delta, tol)?
        .iter()
        .map(|s| match phi_inverse(s)? {
            CompactifiedLattice::NonDegenerate(b) => chart_point(&b),
            CompactifiedLattice::Degenerate(_) => Err(Error::DegenerateInput),
        })
        .collect()
}

/// The analytic torus-knot curve sampled at `samples` parameters in [0, 2 pi).
pub fn torus_curve<T: Real>(samples: usize) -> Result<Vec<S3Point<T>>> {
    if samples < 8 {
        return Err(Error::OutOfRange);
    }
    let step = (T::PI() + T::PI()) / T::c(samples as f64);
    Ok((0..samples)
        .map(|k| torus_knot_point(step * T::c(k as f64)))
        .collect())
}

/// Deterministic low-discrepancy grid on the sphere in C^2, in Hopf-style
/// coordinates driven by a Kronecker sequence.
fn pole_grid<T: Real>() -> Vec<S3Point<T>> {
    // inverses of powers of the plastic number
    let a1 = 0.819172513396164_f64;
    let a2 = 0.671043606703789_f64;
    let a3 = 0.549700477901970_f64;
    let two_pi = core::f64::consts::TAU;
    (0..POLE_GRID)
        .map(|k| {
            let kf = k as f64 + 0.5;
            let frac = |x: f64| x - x.floor();
            let eta = frac(kf * a1).sqrt().asin();
            let xi1 = two_pi * frac(kf * a2);
            let xi2 = two_pi * frac(kf * a3);
            let z = num_complex::Complex::from_polar(T::c(eta.cos()), T::c(xi1));
            let w = num_complex::Complex::from_polar(T::c(eta.sin()), T::c(xi2));
            S3Point::new(z, w).expect("grid points are unit norm")
        })
        .collect()
}

/// Pole for stereographic projection: the grid point maximizing the minimum
/// distance to the curve. Fails only if every candidate touches the curve.
pub fn select_pole<T: Real>(curve: &[S3Point<T>]) -> Result<S3Point<T>> {
    let mut best: Option<(T, S3Point<T>)> = None;
    for cand in pole_grid::<T>() {
        let min_dist = curve
            .iter()
            .map(|p| cand.dist(p))
            .fold(T::infinity(), T::min);
        if best.is_none_or(|(d, _)| min_dist > d) {
            best = Some((min_dist, cand));
        }
    }
    match best {
        Some((d, pole)) if d > T::c(1e-6) => Ok(pole),
        _ => Err(Error::PoleHit),
    }
}

/// Stereographic image of a sphere curve as a closed polyline.
pub fn stereographic_polyline<T: Real>(
    curve: &[S3Point<T>],
    pole: &S3Point<T>,
) -> Result<Polyline3<T>> {
    let pts: Vec<Vec3<T>> = curve
        .iter()
        .map(|p| crate::chart::stereographic(p, pole))
        .collect::<Result<_>>()?;
    Polyline3::new(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pushed_off_subsets_have_three_lines() {
        let subs = pushed_off_subsets(16, 0.1f64, 1e-9).unwrap();
        assert_eq!(subs.len(), 16);
        assert!(subs.iter().all(|s| s.len() == 3));
        assert!(pushed_off_subsets(4, 0.1f64, 1e-9).is_err());
        assert!(pushed_off_subsets(16, 0.0f64, 1e-9).is_err());
        assert!(pushed_off_subsets(16, 0.6f64, 1e-9).is_err());
    }

    #[test]
    fn pushed_off_curve_lies_near_the_knot() {
        let curve = pushed_off_curve(32, 0.05f64, 1e-9).unwrap();
        let knot = torus_curve::<f64>(4096).unwrap();
        for p in &curve {
            let d = knot.iter().map(|q| p.dist(q)).fold(f64::INFINITY, f64::min);
            assert!(d < 0.2, "point strays from the knot locus: {d}");
        }
    }

    #[test]
    fn pole_selection_clears_the_curve() {
        let curve = torus_curve::<f64>(512).unwrap();
        let pole = select_pole(&curve).unwrap();
        let min = curve
            .iter()
            .map(|p| pole.dist(p))
            .fold(f64::INFINITY, f64::min);
        assert!(min > 0.2, "pole too close: {min}");
        let line = stereographic_polyline(&curve, &pole).unwrap();
        assert_eq!(line.len(), 512);
    }
}
