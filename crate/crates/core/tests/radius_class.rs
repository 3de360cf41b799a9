//! Rational classification against brute-force oracles.

#![allow(clippy::approx_constant)] // published decimals are quoted as printed

use proptest::prelude::*;
use sphere_chroma::geom::{theta, Radius};
use sphere_chroma::radius_class::{
    best_rational, classify_radius, enumerate_exceptional, radius_from_rational, reduced_fractions,
    theorem1_applicable, RationalAngle, Verdict,
};

/// Every reduced p/q in (1/3, 1) with q <= q_max, by exhaustive enumeration.
fn brute_fractions(q_max: u64) -> Vec<(u64, u64)> {
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut out = Vec::new();
    for q in 1..=q_max {
        for p in 1..=q {
            if gcd(p, q) == 1 && 3 * p > q && p < q {
                out.push((p, q));
            }
        }
    }
    out
}

#[test]
fn round_trip_up_to_fifty() {
    let fractions = brute_fractions(50);
    assert!(fractions.len() > 300);
    for &(p, q) in &fractions {
        let a = RationalAngle::new(p, q).unwrap();
        let r = radius_from_rational(&a);
        assert!(r.get() > sphere_chroma::geom::INV_SQRT_3);
        assert!((theta(r).unwrap() - a.radians()).abs() < 1e-12, "{p}/{q}");
        let c = classify_radius(r, 50, 1e-9).unwrap();
        assert_eq!(c.matched, Some(a), "{p}/{q}");
        if c.verdict == Verdict::Applicable {
            assert_eq!(q % 2, 1, "even numerator with even denominator: {p}/{q}");
        }
    }
}

#[test]
fn parity_partition() {
    for q_max in [1, 2, 5, 17, 40] {
        let all = brute_fractions(q_max);
        let listed: Vec<(u64, u64)> = reduced_fractions(q_max).map(|a| (a.p(), a.q())).collect();
        let mut sorted = listed.clone();
        sorted.sort();
        let mut expected = all.clone();
        expected.sort();
        assert_eq!(sorted, expected);

        let exceptional: Vec<(u64, u64)> = enumerate_exceptional(q_max).iter().map(|(a, _)| (a.p(), a.q())).collect();
        let applicable: Vec<(u64, u64)> = all
            .iter()
            .copied()
            .filter(|&(p, q)| theorem1_applicable(&RationalAngle::new(p, q).unwrap()).verdict == Verdict::Applicable)
            .collect();
        assert_eq!(exceptional.len() + applicable.len(), all.len());
        assert!(exceptional.iter().all(|f| !applicable.contains(f)));
        assert!(exceptional.iter().all(|&(p, _)| p % 2 == 1));
    }
}

#[test]
fn exceptional_up_to_five_matches_brute_force() {
    let got = enumerate_exceptional(5);
    let mut expected: Vec<(u64, u64, f64)> = brute_fractions(5)
        .into_iter()
        .filter(|&(p, _)| p % 2 == 1)
        .map(|(p, q)| {
            // Independent inversion: bisection on the decreasing θ(r).
            let target = p as f64 / q as f64 * std::f64::consts::PI;
            let (mut lo, mut hi) = (sphere_chroma::geom::INV_SQRT_3, 10.0);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if theta(Radius::new(mid).unwrap()).unwrap() > target {
                    lo = mid
                } else {
                    hi = mid
                }
            }
            (p, q, 0.5 * (lo + hi))
        })
        .collect();
    expected.sort_by(|a, b| a.2.total_cmp(&b.2));
    assert_eq!(got.len(), expected.len());
    for ((a, r), (p, q, r_bisect)) in got.iter().zip(&expected) {
        assert_eq!((a.p(), a.q()), (*p, *q));
        assert!((r.get() - r_bisect).abs() < 1e-12);
    }
    let radii: Vec<f64> = got.iter().map(|(_, r)| r.get()).collect();
    for (r, want) in radii.iter().zip([0.594_603_5, 0.636_009_8, 0.707_106_8]) {
        assert!((r - want).abs() < 1e-7);
    }
}

#[test]
fn no_small_fraction_near_theta_of_0_65() {
    // θ(0.65)/π to 30 digits: 0.572119947...; no q <= 50 is within 1e-12.
    let c = theta(Radius::new(0.65).unwrap()).unwrap() / std::f64::consts::PI;
    assert!((c - 0.572_119_9).abs() < 1e-7);
    let closest = (1..=50u64).map(|q| ((c * q as f64).round() / q as f64 - c).abs()).fold(f64::INFINITY, f64::min);
    assert!(closest > 1e-12);
    let class = classify_radius(Radius::new(0.65).unwrap(), 50, 1e-12).unwrap();
    assert_eq!((class.verdict, class.q_max), (Verdict::NoMatchUpTo, Some(50)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn best_rational_matches_exhaustive_search(x in 0.0f64..1.0, q_max in 1u64..60) {
        let (p, q) = best_rational(x, q_max);
        prop_assert!(q <= q_max);
        let err = (p as f64 / q as f64 - x).abs();
        for q2 in 1..=q_max {
            let p2 = (x * q2 as f64).round();
            prop_assert!(err <= (p2 / q2 as f64 - x).abs() + 1e-15);
        }
    }
}
