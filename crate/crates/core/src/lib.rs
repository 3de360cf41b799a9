//! Unit-distance geometry and colorings of spheres.
//!
//! Points live on the sphere of radius `r` in ambient 3-space and two points
//! are adjacent when their chordal distance is exactly 1.
//!
//! - [`geom`]: chordal distances, the unit-distance circle, the angle `θ(r)`
//!   and rotations.
//! - [`radius_class`]: rational angles `θ = (p/q)·π`, the parity criterion
//!   and the exceptional radii.
//! - [`colorings`]: the tetrahedral, octahedral, dodecahedral and
//!   cap-and-stripes colorings.
//! - [`verifier`]: sampling, adversarial search and threshold scans.
//! - [`udg`]: odd cycles, the diamond configuration and an exact solver.

pub mod colorings;
pub mod error;
pub mod geom;
pub mod radius_class;
pub mod udg;
pub mod verifier;

pub use error::{Error, Result};
pub use geom::{Radius, SpherePoint};
