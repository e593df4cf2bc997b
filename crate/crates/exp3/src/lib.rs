//! Plane lattices and subsets of the circle of lines.
//!
//! A plane lattice, taken up to scaling, determines a small set of lines
//! through the origin: reduce a basis, take the generator triangle it spans,
//! and join the circumcenter of that triangle to its vertices. The resulting
//! correspondence between compactified lattices (genuine lattices plus the
//! circle of degenerate ones) and subsets of at most three lines is
//! implemented here together with its constructive inverse, the space of
//! perimeter-one non-obtuse triangles that models the compactification, the
//! Eisenstein chart onto the unit sphere in C^2, and an empirical knot
//! certificate (Kauffman bracket / Jones polynomial) for the curves the
//! degenerate circle sweeps out on that sphere.
//!
//! Core modules are generic over the scalar type through [`Real`]
//! (`f32` or `f64`); the crate root exports `f64` aliases for the common
//! types, which is what the CLI and the verification suites use.

pub mod chart;
pub mod circle;
pub mod curves;
pub mod error;
pub mod geom;
pub mod knot;
pub mod lattice;
pub mod phi;
pub mod scalar;
pub mod triangle_space;
pub mod verify;

pub use error::{Error, Result};
pub use knot::{Certificate, LaurentPoly, PlanarDiagram, TrefoilVerdict};
pub use scalar::Real;

/// Default tolerance for collapsing nearly coincident lines.
pub use circle::DEFAULT_DEDUP_TOL;

/// `f64` aliases for the generic core types.
pub type Vec2 = geom::Vec2<f64>;
pub type Vec3 = geom::Vec3<f64>;
pub type Basis = lattice::Basis<f64>;
pub type ReducedBasis = lattice::ReducedBasis<f64>;
pub type Triangle = lattice::Triangle<f64>;
pub type ProjAngle = circle::ProjAngle<f64>;
pub type CircleSubset = circle::CircleSubset<f64>;
pub type CompactifiedLattice = phi::CompactifiedLattice<f64>;
pub type TriangleShape = triangle_space::TriangleShape<f64>;
pub type TauForm = chart::TauForm<f64>;
pub type ComplexVal = chart::ComplexVal<f64>;
pub type S3Point = chart::S3Point<f64>;
pub type Polyline3 = knot::Polyline3<f64>;
