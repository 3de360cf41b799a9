//! Odd unit-distance cycles on the unit circle of the north pole.

use std::f64::consts::TAU;

use super::graph::{UnitDistanceGraph, EDGE_TOL};
use crate::error::{Error, Result};
use crate::geom::circle_point;
use crate::radius_class::{radius_from_rational, RationalAngle};

/// Order in which the cycle of `a = p/q` visits the `q` circle points: steps
/// of `p/2` positions, each subtending the angle `θ = pπ/q`.
pub fn cycle_order(a: &RationalAngle) -> Result<Vec<usize>> {
    if !a.has_even_numerator() {
        return Err(Error::NotApplicable(format!(
            "θ = {a}·π has an odd numerator: its circle points form no unit-distance cycle"
        )));
    }
    let (step, q) = (a.p() / 2, a.q());
    Ok((0..q).map(|k| ((k * step) % q) as usize).collect())
}

/// The `q` points at azimuths `2πj/q` on the unit circle of the north pole
/// at the radius where `θ = (p/q)·π`, joined into a single odd cycle. The
/// edges are unit by construction and no other pair is: chord length is
/// strictly monotone in the subtended angle.
pub fn build_cycle(a: &RationalAngle) -> Result<UnitDistanceGraph> {
    let order = cycle_order(a)?;
    let r = radius_from_rational(a);
    let q = a.q() as usize;
    let points = (0..q).map(|j| circle_point(r, TAU * j as f64 / q as f64)).collect::<Result<Vec<_>>>()?;
    let edges = (0..q)
        .map(|k| {
            let (i, j) = (order[k], order[(k + 1) % q]);
            (i.min(j), i.max(j))
        })
        .collect();
    Ok(UnitDistanceGraph { r, points, edges, tol: EDGE_TOL, exact: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::chord_distance;

    #[test]
    fn five_cycles() {
        let a = RationalAngle::new(4, 5).unwrap();
        assert_eq!(cycle_order(&a).unwrap(), vec![0, 2, 4, 1, 3]);
        let g = build_cycle(&a).unwrap();
        assert!((g.r.get() - 0.587_785_3).abs() < 1e-7);
        let unit = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .filter(|&(i, j)| (chord_distance(&g.points[i], &g.points[j]).unwrap() - 1.0).abs() < 1e-12)
            .count();
        assert_eq!(unit, 5);
        g.validate().unwrap();

        let b = RationalAngle::new(2, 5).unwrap();
        assert_eq!(cycle_order(&b).unwrap(), vec![0, 1, 2, 3, 4]);
        assert!((build_cycle(&b).unwrap().r.get() - 0.951_056_5).abs() < 1e-7);
    }

    #[test]
    fn triangle() {
        let g = build_cycle(&RationalAngle::new(2, 3).unwrap()).unwrap();
        assert_eq!(g.edges.len(), 3);
        for &(i, j) in &g.edges {
            assert!((chord_distance(&g.points[i], &g.points[j]).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn odd_numerator_rejected() {
        let a = RationalAngle::new(1, 2).unwrap();
        assert!(matches!(build_cycle(&a), Err(Error::NotApplicable(_))));
    }
}
