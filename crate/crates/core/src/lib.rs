//! Exact engine for patterns of lines `Ax + By = 1`.
//!
//! A point `(A, B)` of the coefficient plane (the real plane with the origin
//! removed) names the Euclidean line `Ax + By = 1`; every line that misses the
//! Euclidean origin has exactly one such name. This crate works entirely in
//! exact rational arithmetic and provides:
//!
//! * [`geometry`]: the coefficient/Euclidean point types and the primitive
//!   predicates relating a coefficient point to its line.
//! * [`lattice`]: generators for rectangular lattices, lattice points in
//!   convex polygons, and the known counterexample sets.
//! * [`walk`]: the cell walk, which travels clockwise around a cell using only
//!   coefficient-plane data, and exhaustive face enumeration built on it.
//! * [`origin`]: the sides of the cell containing the origin, read off the
//!   convex hull of the point set.
//! * [`subdivision`]: an independent brute-force planar subdivision used as
//!   ground truth for the walk.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod geometry;
pub mod hull;
pub mod lattice;
pub mod origin;
mod point_set;
pub mod rational;
pub mod subdivision;
mod vec2;
pub mod walk;

pub use error::Error;
pub use geometry::{CoeffPoint, EuclidPoint, Orientation, OriginSide, Transform2};
pub use lattice::LatticeSpec;
pub use origin::{origin_region, HullCase, OriginRegion};
pub use point_set::PointSet;
pub use rational::Rational;
pub use subdivision::{Face, Subdivision};
pub use walk::{enumerate_faces, walk_face, DSide, FaceWalk};

pub type Result<T, E = Error> = core::result::Result<T, E>;
