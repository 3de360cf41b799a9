//! Finite unit-distance graphs and their JSON form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{chord_distance, Radius, SpherePoint, Vec3};

/// Edge tolerance for graphs whose edges are unit by construction, and the
/// default for user-supplied point sets.
pub const EDGE_TOL: f64 = 1e-9;
pub const MAX_EDGE_TOL: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq)]
pub struct UnitDistanceGraph {
    pub r: Radius,
    pub points: Vec<SpherePoint>,
    /// Edges `(i, j)` with `i < j`, without duplicates.
    pub edges: Vec<(usize, usize)>,
    pub tol: f64,
    /// True when the edges are unit by construction rather than detected.
    pub exact: bool,
}

/// On-disk form: `{"radius", "tol", "exact", "points": [[x,y,z]], "edges": [[i,j]]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphFile {
    pub radius: f64,
    pub tol: f64,
    pub exact: bool,
    pub points: Vec<[f64; 3]>,
    pub edges: Vec<[usize; 2]>,
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol <= MAX_EDGE_TOL {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("edge tolerance must lie in (0, {MAX_EDGE_TOL}], got {tol}")))
    }
}

/// Joins every pair of points at chordal distance `1 ± tol`.
pub fn build_graph(points: Vec<SpherePoint>, tol: f64) -> Result<UnitDistanceGraph> {
    check_tol(tol)?;
    let first = points.first().ok_or_else(|| Error::InvalidInput("a graph needs at least one point".into()))?;
    let r = first.radius();
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if (chord_distance(&points[i], &points[j])? - 1.0).abs() <= tol {
                edges.push((i, j));
            }
        }
    }
    Ok(UnitDistanceGraph { r, points, edges, tol, exact: false })
}

impl UnitDistanceGraph {
    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    /// Checks the structural invariants: indices in range, no self-loops or
    /// duplicates, and every edge of chordal length `1 ± tol`.
    pub fn validate(&self) -> Result<()> {
        check_tol(self.tol)?;
        let n = self.points.len();
        let mut seen = std::collections::BTreeSet::new();
        for &(i, j) in &self.edges {
            if i >= n || j >= n {
                return Err(Error::InvalidInput(format!("edge ({i}, {j}) out of range for {n} vertices")));
            }
            if i == j {
                return Err(Error::InvalidInput(format!("self-loop at vertex {i}")));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::InvalidInput(format!("duplicate edge ({i}, {j})")));
            }
            let d = chord_distance(&self.points[i], &self.points[j])?;
            if (d - 1.0).abs() > self.tol {
                return Err(Error::InvalidInput(format!(
                    "edge ({i}, {j}) has chordal length {d}, not 1 ± {}",
                    self.tol
                )));
            }
        }
        Ok(())
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            radius: self.r.get(),
            tol: self.tol,
            exact: self.exact,
            points: self.points.iter().map(SpherePoint::to_array).collect(),
            edges: self.edges.iter().map(|&(i, j)| [i, j]).collect(),
        }
    }

    pub fn from_file(file: &GraphFile) -> Result<Self> {
        let r = Radius::new(file.radius)?;
        let points = file.points.iter().map(|p| SpherePoint::new(Vec3::from(*p), r)).collect::<Result<Vec<_>>>()?;
        let g = UnitDistanceGraph {
            r,
            points,
            edges: file.edges.iter().map(|&[i, j]| (i.min(j), i.max(j))).collect(),
            tol: file.tol,
            exact: file.exact,
        };
        g.validate()?;
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("graph files always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(s).map_err(|e| Error::InvalidInput(format!("malformed graph JSON: {e}")))?;
        Self::from_file(&file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::circle_point;

    #[test]
    fn antipodes_are_not_adjacent() {
        let r = Radius::new(1.0).unwrap();
        let g = build_graph(vec![SpherePoint::north_pole(r), SpherePoint::south_pole(r)], EDGE_TOL).unwrap();
        assert!(g.edges.is_empty());
    }

    #[test]
    fn pole_and_circle_point() {
        let r = Radius::new(0.9).unwrap();
        let g = build_graph(vec![SpherePoint::north_pole(r), circle_point(r, 0.0).unwrap()], EDGE_TOL).unwrap();
        assert_eq!(g.edges, vec![(0, 1)]);
        assert!(!g.exact);
    }

    #[test]
    fn rejects_bad_input() {
        let a = SpherePoint::north_pole(Radius::new(1.0).unwrap());
        let b = SpherePoint::north_pole(Radius::new(2.0).unwrap());
        assert!(matches!(build_graph(vec![a, b], EDGE_TOL), Err(Error::InvalidInput(_))));
        assert!(build_graph(vec![a], 0.0).is_err());
        assert!(build_graph(vec![a], 1e-2).is_err());
        assert!(build_graph(vec![], EDGE_TOL).is_err());
    }

    #[test]
    fn json_rejects_fake_edges() {
        let bad = r#"{"radius":1.0,"tol":1e-9,"exact":false,"points":[[0,0,1],[0,0,-1]],"edges":[[0,1]]}"#;
        assert!(UnitDistanceGraph::from_json(bad).is_err());
        let looped = r#"{"radius":1.0,"tol":1e-9,"exact":false,"points":[[0,0,1]],"edges":[[0,0]]}"#;
        assert!(UnitDistanceGraph::from_json(looped).is_err());
    }
}
