//! Curved octahedron at r = 1/√2, with antipodal octants identified.
//!
//! Interior points are colored by the sign class of their coordinates under
//! `s ~ -s`. Boundary points follow a fixed table: each coordinate great
//! circle uses only two classes, so the axis orthogonal to it can take one
//! of the two it avoids.

use super::Depths;
use crate::geom::{SpherePoint, Vec3};

/// Sign representatives of the four classes K1..K4.
const CLASSES: [[f64; 3]; 4] = [[1.0, 1.0, 1.0], [1.0, 1.0, -1.0], [1.0, -1.0, 1.0], [1.0, -1.0, -1.0]];

pub fn octa_color(x: &SpherePoint) -> u8 {
    color(&x.direction())
}

fn sign(v: f64) -> i8 {
    if v > 0.0 {
        1
    } else if v < 0.0 {
        -1
    } else {
        0
    }
}

pub(super) fn color(dir: &Vec3) -> u8 {
    let (sx, sy, sz) = (sign(dir.x), sign(dir.y), sign(dir.z));
    match (sx, sy, sz) {
        (0, 0, _) => 2,
        (0, _, 0) => 1,
        (_, 0, 0) => 4,
        // Great circle z = 0: {K1, K4}.
        (_, _, 0) => {
            if sx * sy > 0 {
                1
            } else {
                4
            }
        }
        // Great circle x = 0: {K1, K2}.
        (0, _, _) => {
            if sy * sz > 0 {
                1
            } else {
                2
            }
        }
        // Great circle y = 0: {K3, K4}.
        (_, 0, _) => {
            if sx * sz > 0 {
                3
            } else {
                4
            }
        }
        _ => match (sx * sy, sx * sz) {
            (1, 1) => 1,
            (1, _) => 2,
            (_, 1) => 3,
            _ => 4,
        },
    }
}

pub(super) fn depths(dir: &Vec3) -> Depths {
    let mut out = [f64::NEG_INFINITY; super::MAX_COLORS];
    for (slot, s) in out.iter_mut().zip(CLASSES) {
        let inside = (s[0] * dir.x).min(s[1] * dir.y).min(s[2] * dir.z);
        let opposite = (-s[0] * dir.x).min(-s[1] * dir.y).min(-s[2] * dir.z);
        *slot = inside.max(opposite);
    }
    out
}

/// Axis points, quarter-arc midpoints and octant centers.
pub(super) fn directed_starts() -> Vec<Vec3> {
    let mut out = Vec::with_capacity(26);
    for sx in [-1.0, 0.0, 1.0] {
        for sy in [-1.0, 0.0, 1.0] {
            for sz in [-1.0, 0.0, 1.0] {
                let v = Vec3::new(sx, sy, sz);
                if v != Vec3::zeros() {
                    out.push(v.normalize());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Radius;

    fn r() -> Radius {
        Radius::new(std::f64::consts::FRAC_1_SQRT_2).unwrap()
    }

    #[test]
    fn sign_classes() {
        let p = SpherePoint::from_coords(1.0, 1.0, 1.0, r()).unwrap();
        assert_eq!(octa_color(&p), 1);
        assert_eq!(octa_color(&-p), 1);
        assert_eq!(octa_color(&SpherePoint::from_coords(2.0, 1.0, -1.0, r()).unwrap()), 2);
        assert_eq!(octa_color(&SpherePoint::from_coords(-1.0, 3.0, -1.0, r()).unwrap()), 3);
        assert_eq!(octa_color(&SpherePoint::from_coords(-1.0, 1.0, 1.0, r()).unwrap()), 4);
    }

    #[test]
    fn axis_table() {
        let rr = r().get();
        let e1 = SpherePoint::from_coords(rr, 0.0, 0.0, r()).unwrap();
        let e2 = SpherePoint::from_coords(0.0, rr, 0.0, r()).unwrap();
        let e3 = SpherePoint::from_coords(0.0, 0.0, -rr, r()).unwrap();
        assert_eq!((octa_color(&e1), octa_color(&e2), octa_color(&e3)), (4, 1, 2));
        assert!((crate::geom::chord_distance(&e1, &e2).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn every_directed_start_differs_from_its_orthogonal_starts() {
        let starts = directed_starts();
        for a in &starts {
            for b in &starts {
                if a.dot(b) == 0.0 {
                    assert_ne!(color(a), color(b), "{a:?} vs {b:?}");
                }
            }
        }
    }
}
