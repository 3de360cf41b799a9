//! Odd cycles, the diamond and the exact chromatic-number solver, each
//! against an independent oracle.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sphere_chroma::geom::{chord_distance, theta, unit_circle_point_about, Radius, SpherePoint, Vec3};
use sphere_chroma::radius_class::{reduced_fractions, RationalAngle};
use sphere_chroma::udg::{
    beta_from_theta, beta_identity_gap, build_cycle, build_graph, chromatic_number, chromatic_number_of, d_closed_form,
    measure_diamond, UnitDistanceGraph, EDGE_TOL,
};
use sphere_chroma::Error;

fn rad(r: f64) -> Radius {
    Radius::new(r).unwrap()
}

/// Smallest k admitting a proper coloring, by trying every assignment.
fn brute_chi(n: usize, edges: &[(usize, usize)]) -> usize {
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(i, j)| colors[i] != colors[j]) {
                return k;
            }
            let mut pos = 0;
            while pos < n && colors[pos] == k - 1 {
                colors[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
            colors[pos] += 1;
        }
    }
    n
}

fn is_proper(edges: &[(usize, usize)], assignment: &[usize]) -> bool {
    edges.iter().all(|&(i, j)| assignment[i] != assignment[j])
}

#[test]
fn cycles_are_exact_odd_cycles() {
    let mut checked = 0;
    for a in reduced_fractions(25).filter(RationalAngle::has_even_numerator) {
        let g = build_cycle(&a).unwrap();
        let q = a.q() as usize;
        assert_eq!(g.points.len(), q);
        assert_eq!(g.edges.len(), q, "{a}");
        assert!(g.exact);

        // Every vertex has degree two and the edges form one closed walk.
        let mut adj = vec![Vec::new(); q];
        for &(i, j) in &g.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        assert!(adj.iter().all(|n| n.len() == 2), "{a}");
        let (mut prev, mut cur, mut seen) = (0, adj[0][0], 1);
        while cur != 0 {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
            seen += 1;
        }
        assert_eq!(seen, q, "{a}: not Hamiltonian");

        // Edges are unit and no other pair is.
        for i in 0..q {
            for j in i + 1..q {
                let d = chord_distance(&g.points[i], &g.points[j]).unwrap();
                let edge = g.edges.contains(&(i, j));
                if edge {
                    assert!((d - 1.0).abs() < 1e-9, "{a}: edge ({i},{j}) has length {d}");
                } else {
                    assert!((d - 1.0).abs() > 1e-6, "{a}: non-edge ({i},{j}) has length {d}");
                }
            }
        }
        assert!(g.validate().is_ok());
        assert_eq!(chromatic_number(&g).k, 3, "{a}");
        checked += 1;
    }
    // Independent count of reduced p/q in (1/3, 1), q <= 25, p even.
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let expected = (2..=25u64)
        .flat_map(|q| (1..q).map(move |p| (p, q)))
        .filter(|&(p, q)| 3 * p > q && p % 2 == 0 && gcd(p, q) == 1)
        .count();
    assert_eq!(checked, expected);
    assert!(matches!(build_cycle(&RationalAngle::new(3, 5).unwrap()), Err(Error::NotApplicable(_))));
}

#[test]
fn diamond_threshold_roots() {
    // D(r) - 1/2 changes sign exactly at these radii (found by bisection).
    let f = |r: f64| measure_diamond(rad(r)).unwrap().d_measured - 0.5;
    let brackets = [(0.58, 0.60), (0.61, 0.65), (0.80, 0.84)];
    let expected = [0.586_158, 0.627_745, 0.819_417];
    for ((mut lo, mut hi), want) in brackets.into_iter().zip(expected) {
        assert!(f(lo).signum() != f(hi).signum());
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if f(mid).signum() == f(lo).signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((lo - want).abs() < 1e-5, "root {lo}, expected {want}");
    }
}

#[test]
fn diamond_geometry() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..200 {
        let r = rad(rng.random_range(0.58..2.0));
        let cfg = measure_diamond(r).unwrap();
        let pts = [cfg.x1, cfg.x2, cfg.x3, cfg.x4];
        for (i, j) in [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)] {
            assert!((chord_distance(&pts[i], &pts[j]).unwrap() - 1.0).abs() < 1e-9);
        }

        // x4 is the mirror image of x1 in the plane through the center, x2 and x3.
        let n = cfg.x2.coords().cross(&cfg.x3.coords()).normalize();
        let x1 = cfg.x1.coords();
        let mirror = x1 - 2.0 * x1.dot(&n) * n;
        assert!((mirror - cfg.x4.coords()).norm() < 1e-9 * r.get().max(1.0));
        let axis_dist = (cfg.x4.coords().x.powi(2) + cfg.x4.coords().y.powi(2)).sqrt();
        assert!((axis_dist - cfg.d_measured).abs() < 1e-12);

        if let Some(gap) = beta_identity_gap(r).unwrap() {
            assert!(gap < 1e-9, "β identity off by {gap} at r = {}", r.get());
        }
    }

    let deg = measure_diamond(rad(std::f64::consts::FRAC_1_SQRT_2)).unwrap();
    assert!(deg.degenerate);
    assert!(deg.d_measured.abs() < 1e-9);

    // The published closed form does not reproduce the measured distance.
    let r = rad(0.9);
    assert!((measure_diamond(r).unwrap().d_measured - d_closed_form(r).unwrap()).abs() > 0.1);
    assert!(matches!(measure_diamond(rad(0.55)), Err(Error::Domain(_))));
    assert!((beta_from_theta(theta(r).unwrap()).unwrap() - 1.494_935_7).abs() < 1e-6);
}

#[test]
fn diamond_graph_is_three_chromatic() {
    let cfg = measure_diamond(rad(0.9)).unwrap();
    let g = build_graph(vec![cfg.x1, cfg.x2, cfg.x3, cfg.x4], EDGE_TOL).unwrap();
    assert_eq!(g.edges.len(), 5);
    let sol = chromatic_number(&g);
    assert_eq!((sol.k, sol.optimal), (3, true));
    assert!(is_proper(&g.edges, &sol.assignment.iter().map(|c| c - 1).collect::<Vec<_>>()));
}

#[test]
fn tetrahedron_is_k4() {
    let r = rad((3.0f64 / 8.0).sqrt());
    let pts: Vec<SpherePoint> = [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]]
        .iter()
        .map(|v| SpherePoint::new(Vec3::new(v[0], v[1], v[2]).normalize() * r.get(), r).unwrap())
        .collect();
    let g = build_graph(pts, EDGE_TOL).unwrap();
    assert_eq!(g.edges.len(), 6);
    assert_eq!(chromatic_number(&g).k, 4);
}

/// A random graph on the sphere grown from unit partners of existing points.
fn random_unit_graph(rng: &mut ChaCha8Rng) -> UnitDistanceGraph {
    let r = rad(rng.random_range(0.55..1.5));
    let n = rng.random_range(2..=8);
    let z: f64 = rng.random_range(-1.0..1.0);
    let a: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let s = (1.0 - z * z).sqrt();
    let mut pts = vec![SpherePoint::new(Vec3::new(s * a.cos(), s * a.sin(), z) * r.get(), r).unwrap()];
    while pts.len() < n {
        let base = pts[rng.random_range(0..pts.len())];
        pts.push(unit_circle_point_about(&base, rng.random_range(0.0..std::f64::consts::TAU)).unwrap());
    }
    build_graph(pts, EDGE_TOL).unwrap()
}

#[test]
fn solver_matches_brute_force_on_unit_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let g = random_unit_graph(&mut rng);
        let sol = chromatic_number(&g);
        assert!(sol.optimal);
        assert_eq!(sol.k, brute_chi(g.points.len(), &g.edges));
        assert!(is_proper(&g.edges, &sol.assignment.iter().map(|c| c - 1).collect::<Vec<_>>()));

        let back = UnitDistanceGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back.edges, g.edges);
        assert_eq!(back.points.len(), g.points.len());
    }
}

proptest! {
    #[test]
    fn solver_matches_brute_force(n in 1usize..=8, bits in any::<u32>(), extra in any::<u8>()) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mask = (bits as u64) | ((extra as u64) << 32);
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let sol = chromatic_number_of(n, &edges).unwrap();
        prop_assert!(sol.optimal);
        prop_assert_eq!(sol.k, brute_chi(n, &edges));
        prop_assert!(sol.lower_bound <= sol.k);
        prop_assert!(is_proper(&edges, &sol.assignment.iter().map(|c| c - 1).collect::<Vec<_>>()));
    }
}
