//! Antipodal pairs of faces of a regular dodecahedron.

use super::{argmax_first, score_margins, Depths};
use crate::geom::{SpherePoint, Vec3};

/// One face center from each antipodal pair, in the orientation with two
/// faces perpendicular to the z-axis: the pole, then five centers at height
/// `1/√5` spaced 72° apart starting at azimuth 0.
pub fn dodeca_face_centers() -> [Vec3; 6] {
    let h = 1.0 / 5f64.sqrt();
    let rho = 2.0 * h;
    let mut out = [Vec3::z(); 6];
    for (k, f) in out.iter_mut().enumerate().skip(1) {
        let a = (k - 1) as f64 * std::f64::consts::TAU / 5.0;
        *f = Vec3::new(rho * a.cos(), rho * a.sin(), h);
    }
    out
}

/// Index of the face pair `{f, -f}` maximizing `|x·f|`, ties going to the
/// smallest index.
pub fn dodeca_color(x: &SpherePoint) -> u8 {
    color(&x.direction())
}

fn scores(dir: &Vec3) -> [f64; 6] {
    dodeca_face_centers().map(|f| f.dot(dir).abs())
}

pub(super) fn color(dir: &Vec3) -> u8 {
    argmax_first(&scores(dir)) as u8 + 1
}

pub(super) fn depths(dir: &Vec3) -> Depths {
    score_margins(&scores(dir))
}

/// All twelve face centers, the twenty vertices and the thirty edge
/// midpoints.
pub(super) fn directed_starts() -> Vec<Vec3> {
    let adjacent = 1.0 / 5f64.sqrt();
    let faces: Vec<Vec3> = dodeca_face_centers().iter().flat_map(|&f| [f, -f]).collect();
    let touches = |a: &Vec3, b: &Vec3| (a.dot(b) - adjacent).abs() < 1e-9;
    let mut out = faces.clone();
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            if !touches(&faces[i], &faces[j]) {
                continue;
            }
            out.push((faces[i] + faces[j]).normalize());
            for k in j + 1..faces.len() {
                if touches(&faces[i], &faces[k]) && touches(&faces[j], &faces[k]) {
                    out.push((faces[i] + faces[j] + faces[k]).normalize());
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

    #[test]
    fn own_face_and_antipode() {
        let r = Radius::new(0.8).unwrap();
        for (i, f) in dodeca_face_centers().iter().enumerate() {
            assert_eq!(dodeca_color(&SpherePoint::new(*f, r).unwrap()), i as u8 + 1);
            assert_eq!(dodeca_color(&SpherePoint::new(-*f, r).unwrap()), i as u8 + 1);
        }
    }

    #[test]
    fn solid_is_regular() {
        let starts = directed_starts();
        // 12 faces + 30 edge midpoints + 20 vertices.
        assert_eq!(starts.len(), 62);
        // Non-adjacent vertices of one face have cosine 1/3: the face
        // diameter, matching the unit angle at r = √3/2.
        let faces: Vec<Vec3> = dodeca_face_centers().iter().flat_map(|&f| [f, -f]).collect();
        let nearest = |v: &Vec3| faces.iter().map(|f| f.dot(v)).fold(f64::NEG_INFINITY, f64::max);
        let ties = |v: &Vec3| faces.iter().filter(|f| (f.dot(v) - nearest(v)).abs() < 1e-12).count();
        let vertices: Vec<_> = starts.iter().filter(|v| ties(v) == 3).collect();
        assert_eq!(vertices.len(), 20);
        let f1 = Vec3::z();
        let highest = vertices.iter().map(|v| v.dot(&f1)).fold(f64::NEG_INFINITY, f64::max);
        let top: Vec<_> = vertices.iter().filter(|v| (v.dot(&f1) - highest).abs() < 1e-12).collect();
        assert_eq!(top.len(), 5);
        let max_dot_diameter = top.iter().flat_map(|a| top.iter().map(move |b| a.dot(b))).fold(f64::INFINITY, f64::min);
        assert!((max_dot_diameter - 1.0 / 3.0).abs() < 1e-12);
    }
}
