//! Closed polylines in space and generic planar projection to a diagram.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{segment_distance_3d, Vec2, Vec3};
use crate::knot::diagram::{PlanarDiagram, Role, MAX_CROSSINGS};
use crate::scalar::Real;

/// Minimum vertex count for a closed polyline.
pub const MIN_POINTS: usize = 8;

/// Attempts before giving up on finding a generic projection direction.
pub const MAX_ATTEMPTS: usize = 64;

/// A closed polyline in space: the segment list implicitly returns from the
/// last point to the first. Constructors enforce an embedded curve:
/// consecutive points distinct and non-adjacent segments separated by more
/// than 1e-9.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline3<T> {
    points: Vec<Vec3<T>>,
}

impl<T: Real> Polyline3<T> {
    pub fn new(points: Vec<Vec3<T>>) -> Result<Self> {
        let n = points.len();
        if n < MIN_POINTS {
            return Err(Error::InvalidPolyline("need at least 8 points"));
        }
        let sep = T::c(1e-9);
        for i in 0..n {
            let j = (i + 1) % n;
            if points[i].dist(points[j]) <= sep {
                return Err(Error::InvalidPolyline("consecutive points coincide"));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                // skip adjacent segments (they share an endpoint)
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let d = segment_distance_3d(
                    points[i],
                    points[(i + 1) % n],
                    points[j],
                    points[(j + 1) % n],
                );
                if d <= sep {
                    return Err(Error::InvalidPolyline("curve intersects itself"));
                }
            }
        }
        Ok(Self { points })
    }

    pub fn points(&self) -> &[Vec3<T>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // at least MIN_POINTS by construction
    }
}

struct Passage<T> {
    seg: usize,
    param: T,
    crossing: usize,
    role: Role,
}

/// Project the curve along seeded random directions until the image diagram
/// is generic: all intersections transverse (angle above 1e-3 rad), away from
/// segment endpoints, with distinct depths, and no two crossings within 1e-6
/// of each other. Over/under comes from depth along the view direction and
/// the crossing sign from the projected orientations.
pub fn project_generic<T: Real>(curve: &Polyline3<T>, seed: u64) -> Result<PlanarDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..MAX_ATTEMPTS {
        let dir = random_unit(&mut rng);
        let (e1, e2) = orthonormal_frame(dir);
        let pts = curve.points();
        let n = pts.len();
        let flat: Vec<Vec2<T>> = pts
            .iter()
            .map(|p| Vec2 {
                x: p.dot(e1),
                y: p.dot(e2),
            })
            .collect();
        let depth: Vec<T> = pts.iter().map(|p| p.dot(dir)).collect();

        // a segment nearly parallel to the view direction is not generic
        for i in 0..n {
            let j = (i + 1) % n;
            let len3 = pts[i].dist(pts[j]);
            if flat[i].dist(flat[j]) < T::c(1e-6) * len3 {
                continue 'attempt;
            }
        }

        let param_margin = T::c(1e-6);
        let min_sin = T::c(1e-3);
        let depth_gap = T::c(1e-9);
        let mut passages: Vec<Passage<T>> = Vec::new();
        let mut signs: Vec<i8> = Vec::new();
        let mut positions: Vec<Vec2<T>> = Vec::new();

        for i in 0..n {
            let i1 = (i + 1) % n;
            for j in i + 1..n {
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                let j1 = (j + 1) % n;
                let r = flat[i1] - flat[i];
                let w = flat[j1] - flat[j];
                let denom = r.cross(w);
                let sin_angle = denom.abs() / (r.norm() * w.norm());
                if sin_angle < min_sin {
                    // near-parallel segments that come close are not generic
                    if segments_close_2d(flat[i], flat[i1], flat[j], flat[j1], T::c(1e-6)) {
                        continue 'attempt;
                    }
                    continue;
                }
                let q = flat[j] - flat[i];
                let s = q.cross(w) / denom;
                let t = q.cross(r) / denom;
                let one = T::one();
                if s <= T::zero() || s >= one || t <= T::zero() || t >= one {
                    continue;
                }
                if s < param_margin
                    || s > one - param_margin
                    || t < param_margin
                    || t > one - param_margin
                {
                    continue 'attempt; // crossing too close to a vertex
                }
                let di = depth[i] + (depth[i1] - depth[i]) * s;
                let dj = depth[j] + (depth[j1] - depth[j]) * t;
                if (di - dj).abs() <= depth_gap {
                    continue 'attempt;
                }
                let crossing = signs.len();
                let (over_dir, under_dir) = if di > dj { (r, w) } else { (w, r) };
                signs.push(if over_dir.cross(under_dir) > T::zero() {
                    1
                } else {
                    -1
                });
                positions.push(flat[i] + r.scale(s));
                let (role_i, role_j) = if di > dj {
                    (Role::Over, Role::Under)
                } else {
                    (Role::Under, Role::Over)
                };
                passages.push(Passage {
                    seg: i,
                    param: s,
                    crossing,
                    role: role_i,
                });
                passages.push(Passage {
                    seg: j,
                    param: t,
                    crossing,
                    role: role_j,
                });
            }
        }

        // triple points (or nearly so) are not generic
        for a in 0..positions.len() {
            for b in a + 1..positions.len() {
                if positions[a].dist(positions[b]) <= T::c(1e-6) {
                    continue 'attempt;
                }
            }
        }

        if signs.len() > MAX_CROSSINGS {
            return Err(Error::TooManyCrossings {
                max: MAX_CROSSINGS,
                got: signs.len(),
            });
        }

        passages.sort_by(|a, b| {
            (a.seg, a.param)
                .partial_cmp(&(b.seg, b.param))
                .expect("finite parameters")
        });
        let events: Vec<(usize, Role)> = passages.iter().map(|p| (p.crossing, p.role)).collect();
        return PlanarDiagram::from_gauss(&events, &signs);
    }
    Err(Error::NoGenericDirection(MAX_ATTEMPTS))
}

fn segments_close_2d<T: Real>(p0: Vec2<T>, p1: Vec2<T>, q0: Vec2<T>, q1: Vec2<T>, tol: T) -> bool {
    let point_seg = |p: Vec2<T>, a: Vec2<T>, b: Vec2<T>| {
        let ab = b - a;
        let t = ((p - a).dot(ab) / ab.norm_sq())
            .max(T::zero())
            .min(T::one());
        (p - (a + ab.scale(t))).norm()
    };
    point_seg(p0, q0, q1).min(point_seg(p1, q0, q1)) <= tol
        || point_seg(q0, p0, p1).min(point_seg(q1, p0, p1)) <= tol
}

fn random_unit<T: Real, R: Rng>(rng: &mut R) -> Vec3<T> {
    loop {
        let x = 2.0 * rng.gen::<f64>() - 1.0;
        let y = 2.0 * rng.gen::<f64>() - 1.0;
        let z = 2.0 * rng.gen::<f64>() - 1.0;
        let r2 = x * x + y * y + z * z;
        if r2 > 1e-4 && r2 <= 1.0 {
            let inv = 1.0 / r2.sqrt();
            return Vec3 {
                x: T::c(x * inv),
                y: T::c(y * inv),
                z: T::c(z * inv),
            };
        }
    }
}

fn orthonormal_frame<T: Real>(d: Vec3<T>) -> (Vec3<T>, Vec3<T>) {
    let axes = [
        Vec3 {
            x: T::one(),
            y: T::zero(),
            z: T::zero(),
        },
        Vec3 {
            x: T::zero(),
            y: T::one(),
            z: T::zero(),
        },
        Vec3 {
            x: T::zero(),
            y: T::zero(),
            z: T::one(),
        },
    ];
    let comps = [d.x.abs(), d.y.abs(), d.z.abs()];
    let mut k = 0;
    for i in 1..3 {
        if comps[i] < comps[k] {
            k = i;
        }
    }
    let a = axes[k];
    let e1 = (a - d.scale(a.dot(d))).normalized();
    let e2 = d.cross(e1);
    (e1, e2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn circle(n: usize) -> Polyline3<f64> {
        let pts = (0..n)
            .map(|k| {
                let t = 2.0 * PI * (k as f64) / (n as f64);
                Vec3::new(t.cos(), t.sin(), 0.0).unwrap()
            })
            .collect();
        Polyline3::new(pts).unwrap()
    }

    #[test]
    fn polyline_validation() {
        assert!(matches!(
            Polyline3::new(vec![Vec3::new(0.0, 0.0, 0.0).unwrap(); 4]),
            Err(Error::InvalidPolyline(_))
        ));
        // repeated point
        let mut pts: Vec<Vec3<f64>> = (0..8)
            .map(|k| {
                let t = 2.0 * PI * (k as f64) / 8.0;
                Vec3::new(t.cos(), t.sin(), 0.0).unwrap()
            })
            .collect();
        pts[3] = pts[2];
        assert!(matches!(
            Polyline3::new(pts),
            Err(Error::InvalidPolyline(_))
        ));
        assert!(Polyline3::new(circle(16).points().to_vec()).is_ok());
    }

    #[test]
    fn self_intersecting_curve_rejected() {
        // figure-eight flattened in a plane crosses itself
        let pts: Vec<Vec3<f64>> = (0..32)
            .map(|k| {
                let t = 2.0 * PI * (k as f64) / 32.0;
                Vec3::new(t.sin(), t.sin() * t.cos(), 0.0).unwrap()
            })
            .collect();
        assert!(matches!(
            Polyline3::new(pts),
            Err(Error::InvalidPolyline(_))
        ));
    }

    #[test]
    fn circle_projects_without_crossings() {
        let c = circle(64);
        let d = project_generic(&c, 1).unwrap();
        assert_eq!(d.crossing_count(), 0);
    }

    #[test]
    fn degenerate_first_direction_succeeds_via_retry() {
        // build a circle in a plane containing the seed's first direction,
        // so the first projection collapses the curve onto a line
        let seed = 9u64;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d: Vec3<f64> = random_unit(&mut rng);
        let (e1, _) = orthonormal_frame(d);
        let pts = (0..48)
            .map(|k| {
                let t = 2.0 * PI * (k as f64) / 48.0;
                d.scale(t.cos()) + e1.scale(t.sin())
            })
            .collect();
        let c = Polyline3::new(pts).unwrap();
        let diagram = project_generic(&c, seed).unwrap();
        assert_eq!(diagram.crossing_count(), 0);
    }

    #[test]
    fn busy_curves_exceed_the_crossing_cap() {
        // a (2,25) torus knot has crossing number 25, above the cap in
        // every projection
        let pts = (0..800)
            .map(|k| {
                let t = 2.0 * PI * (k as f64) / 800.0;
                let r = 2.0 + (25.0 * t).cos();
                Vec3::new(r * (2.0 * t).cos(), r * (2.0 * t).sin(), (25.0 * t).sin()).unwrap()
            })
            .collect();
        let c = Polyline3::new(pts).unwrap();
        assert!(matches!(
            project_generic(&c, 0),
            Err(Error::TooManyCrossings { max: 24, got: _ })
        ));
    }
}
