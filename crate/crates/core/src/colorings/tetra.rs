//! Spherical Voronoi cells of an inscribed regular tetrahedron.

use super::{argmax_first, score_margins, Depths};
use crate::geom::{SpherePoint, Vec3, INV_SQRT_3};

/// The four vertex directions; `(±1, ±1, ±1)` with an even number of minus
/// signs, normalized.
pub fn tetra_vertices() -> [Vec3; 4] {
    [
        Vec3::new(1.0, 1.0, 1.0) * INV_SQRT_3,
        Vec3::new(1.0, -1.0, -1.0) * INV_SQRT_3,
        Vec3::new(-1.0, 1.0, -1.0) * INV_SQRT_3,
        Vec3::new(-1.0, -1.0, 1.0) * INV_SQRT_3,
    ]
}

/// Color of the nearest vertex, ties going to the smallest index.
pub fn tetra_color(x: &SpherePoint) -> u8 {
    color(&x.direction())
}

fn scores(dir: &Vec3) -> [f64; 4] {
    tetra_vertices().map(|v| v.dot(dir))
}

pub(super) fn color(dir: &Vec3) -> u8 {
    argmax_first(&scores(dir)) as u8 + 1
}

pub(super) fn depths(dir: &Vec3) -> Depths {
    score_margins(&scores(dir))
}

/// Cell centers, cell corners (the antipodes of the vertices) and edge
/// midpoints (the coordinate axes).
pub(super) fn directed_starts() -> Vec<Vec3> {
    let mut out = Vec::with_capacity(14);
    for v in tetra_vertices() {
        out.push(v);
        out.push(-v);
    }
    for axis in [Vec3::x(), Vec3::y(), Vec3::z()] {
        out.push(axis);
        out.push(-axis);
    }
    out
}
