//! The diamond: four points forming K4 minus one edge at unit distances.
//!
//! `x1` is the north pole and `x2`, `x3` are mirror images across the
//! xz-plane on its unit circle, at unit distance from each other. The fourth
//! point `x4` is the other common unit-distance point of `x2` and `x3`; its
//! distance `D` from the polar axis decides whether rotating the diamond
//! about `x1` sweeps out unit-distance pairs of `x4` images.

use serde::Serialize;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

use crate::error::{Error, Result};
use crate::geom::{theta, Radius, SpherePoint, Vec3, GEOM_TOL, INV_SQRT_3};
use crate::radius_class::match_rational;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiamondConfig {
    pub x1: SpherePoint,
    pub x2: SpherePoint,
    pub x3: SpherePoint,
    pub x4: SpherePoint,
    /// Distance of `x4` from the polar axis through `x1`.
    pub d_measured: f64,
    /// `2·asin(1/(2D))`, present iff `D > 1/2`.
    pub beta_measured: Option<f64>,
    /// True at `r = 1/√2`, where `x4` is the antipode of `x1`.
    pub degenerate: bool,
}

fn require_above_inv_sqrt3(r: Radius) -> Result<f64> {
    let r0 = r.get();
    if r0 <= INV_SQRT_3 {
        return Err(Error::Domain(format!("the diamond needs r > 1/√3, got {r0}")));
    }
    Ok(r0)
}

/// Builds the diamond at radius `r` and measures `D`. `x4` is located by
/// bisection on its polar angle `ψ` in the xz-plane.
pub fn measure_diamond(r: Radius) -> Result<DiamondConfig> {
    let r0 = require_above_inv_sqrt3(r)?;
    let a = (3.0 * r0 * r0 - 1.0).sqrt() / (2.0 * r0);
    let c = r0 - 1.0 / (2.0 * r0);
    let x1 = SpherePoint::north_pole(r);
    let x2 = SpherePoint::new(Vec3::new(a, 0.5, c), r)?;
    let x3 = SpherePoint::new(Vec3::new(a, -0.5, c), r)?;

    // x4 = r(sin ψ, 0, cos ψ) is at unit distance from x2 (and x3) iff
    // h(ψ) = a sin ψ + c cos ψ - c = 0. The roots are ψ = 0 (that is x1)
    // and ψ = 2ψ0 with ψ0 = atan2(a, c); h decreases strictly on
    // [ψ0, ψ0 + π], which brackets the second root.
    let h = |psi: f64| a * psi.sin() + c * psi.cos() - c;
    let psi0 = a.atan2(c);
    let (mut lo, mut hi) = (psi0, psi0 + PI);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let psi = 0.5 * (lo + hi);
    let x4 = SpherePoint::new(Vec3::new(r0 * psi.sin(), 0.0, r0 * psi.cos()), r)?;
    let d_measured = x4.coords().x.abs();
    let beta_measured = (d_measured > 0.5).then(|| 2.0 * (1.0 / (2.0 * d_measured)).asin());
    Ok(DiamondConfig { x1, x2, x3, x4, d_measured, beta_measured, degenerate: (r0 - FRAC_1_SQRT_2).abs() <= GEOM_TOL })
}

fn radicand(r0: f64) -> Result<f64> {
    let v = 3.0 * r0 * r0 - 1.0;
    if v < -GEOM_TOL {
        return Err(Error::Domain(format!("D formula undefined for r = {r0} < 1/√3")));
    }
    Ok(v.max(0.0))
}

/// The closed form for `D` as it is usually printed,
/// `|2r(2r²−1)√(3r²−1)/(4r²−1)|`, evaluated verbatim. It disagrees with the
/// geometry; see [`d_reconciled`].
pub fn d_closed_form(r: Radius) -> Result<f64> {
    let r0 = r.get();
    let s = radicand(r0)?.sqrt();
    Ok((2.0 * r0 * (2.0 * r0 * r0 - 1.0) * s / (4.0 * r0 * r0 - 1.0)).abs())
}

/// The closed form with the factor `r` moved to the denominator,
/// `|2(2r²−1)√(3r²−1)/(r(4r²−1))|`. This placement agrees with the measured
/// `D`, with the decimal roots of `D = 1/2` and with the `β(θ)` identity.
pub fn d_reconciled(r: Radius) -> Result<f64> {
    let r0 = r.get();
    let s = radicand(r0)?.sqrt();
    Ok((2.0 * (2.0 * r0 * r0 - 1.0) * s / (r0 * (4.0 * r0 * r0 - 1.0))).abs())
}

/// `β = 2·asin(|tan(θ/2) / (4 cos θ)|)`. The magnitude is taken because
/// `cos θ < 0` on part of the range where `D > 1/2`; it then agrees with
/// `2·asin(1/(2D))`.
pub fn beta_from_theta(theta: f64) -> Result<f64> {
    let cos = theta.cos();
    if !theta.is_finite() || cos.abs() <= GEOM_TOL {
        return Err(Error::Domain(format!("β undefined at θ = {theta} (cos θ = 0)")));
    }
    let arg = ((theta / 2.0).tan() / (4.0 * cos)).abs();
    if arg > 1.0 + GEOM_TOL {
        return Err(Error::Domain(format!("β undefined at θ = {theta}: arcsine argument {arg} > 1")));
    }
    Ok(2.0 * arg.min(1.0).asin())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "verdict")]
pub enum Theorem4Verdict {
    /// `D <= 1/2`: rotating the diamond produces no unit pairs among `x4` images.
    NotApplicable,
    Applicable {
        p: u64,
        q: u64,
    },
    Exceptional {
        p: u64,
        q: u64,
    },
    NoMatchUpTo {
        q_max: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Theorem4Report {
    pub r: f64,
    pub d_measured: f64,
    pub beta: Option<f64>,
    #[serde(flatten)]
    pub verdict: Theorem4Verdict,
}

/// Classifies the diamond criterion at `r`: not applicable unless `D > 1/2`;
/// otherwise `β/π` is matched against fractions with denominator up to
/// `q_max` and an even numerator makes it applicable. A missing match is not
/// a proof that `β/π` is irrational.
pub fn theorem4_applicable(r: Radius, q_max: u64, tol: f64) -> Result<Theorem4Report> {
    let cfg = measure_diamond(r)?;
    let verdict = match cfg.beta_measured {
        None => Theorem4Verdict::NotApplicable,
        Some(beta) => match match_rational(beta / PI, q_max, tol)? {
            Some((p, q)) if p % 2 == 0 => Theorem4Verdict::Applicable { p, q },
            Some((p, q)) => Theorem4Verdict::Exceptional { p, q },
            None => Theorem4Verdict::NoMatchUpTo { q_max },
        },
    };
    Ok(Theorem4Report { r: r.get(), d_measured: cfg.d_measured, beta: cfg.beta_measured, verdict })
}

/// `|β(θ(r)) − 2·asin(1/(2D))|`, or `None` where `D <= 1/2`.
pub fn beta_identity_gap(r: Radius) -> Result<Option<f64>> {
    let cfg = measure_diamond(r)?;
    match cfg.beta_measured {
        None => Ok(None),
        Some(b) => Ok(Some((beta_from_theta(theta(r)?)? - b).abs())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::chord_distance;

    fn rad(r: f64) -> Radius {
        Radius::new(r).unwrap()
    }

    #[test]
    fn five_unit_edges() {
        for r in [0.6, 0.7, 0.9, 2.0] {
            let d = measure_diamond(rad(r)).unwrap();
            for (p, q) in [(d.x1, d.x2), (d.x1, d.x3), (d.x2, d.x3), (d.x2, d.x4), (d.x3, d.x4)] {
                assert!((chord_distance(&p, &q).unwrap() - 1.0).abs() < 1e-12, "r = {r}");
            }
        }
    }

    #[test]
    fn degenerate_radius() {
        let d = measure_diamond(rad(FRAC_1_SQRT_2)).unwrap();
        assert!(d.degenerate);
        assert!(d.d_measured < 1e-12);
        assert!(d.beta_measured.is_none());
        let chord = chord_distance(&d.x1, &d.x4).unwrap();
        assert!((chord - 2.0 * FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn measured_values() {
        assert!((measure_diamond(rad(0.6)).unwrap().d_measured - 0.599_97).abs() < 1e-6);
        assert!((measure_diamond(rad(0.9)).unwrap().d_measured - 0.735_527_9).abs() < 1e-7);
        assert!(matches!(measure_diamond(rad(0.57)), Err(Error::Domain(_))));
        assert!(matches!(measure_diamond(rad(INV_SQRT_3)), Err(Error::Domain(_))));
    }

    #[test]
    fn closed_forms() {
        assert!(d_closed_form(rad(FRAC_1_SQRT_2)).unwrap() < 1e-15);
        assert!((d_closed_form(rad(0.9)).unwrap() - 0.595_777_6).abs() < 1e-6);
        assert!((d_closed_form(rad(0.6)).unwrap() - 0.215_99).abs() < 1e-5);
        assert!(matches!(d_closed_form(rad(0.5)), Err(Error::Domain(_))));
        for r in [0.6, 0.75, 0.9, 1.5] {
            let m = measure_diamond(rad(r)).unwrap().d_measured;
            assert!((d_reconciled(rad(r)).unwrap() - m).abs() < 1e-12);
        }
    }

    #[test]
    fn beta_values() {
        let th = theta(rad(0.9)).unwrap();
        let b = beta_from_theta(th).unwrap();
        assert!((b - 1.494_935_7).abs() < 1e-6);
        let m = measure_diamond(rad(0.9)).unwrap().beta_measured.unwrap();
        assert!((b - m).abs() < 1e-9);
        assert!(matches!(beta_from_theta(PI / 2.0), Err(Error::Domain(_))));
    }

    #[test]
    fn beta_boundary_is_pi() {
        // tan(θ/2) = 4 cos θ, found by bisection on (0, π/2).
        let g = |t: f64| (t / 2.0).tan() - 4.0 * t.cos();
        let (mut lo, mut hi) = (0.1, PI / 2.0 - 1e-9);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(mid) < 0.0 {
                lo = mid
            } else {
                hi = mid
            }
        }
        assert!((beta_from_theta(lo).unwrap() - PI).abs() < 1e-6);
    }

    #[test]
    fn theorem4_verdicts() {
        let gap = theorem4_applicable(rad(0.70), 100, 1e-9).unwrap();
        assert_eq!(gap.verdict, Theorem4Verdict::NotApplicable);
        let pole = theorem4_applicable(rad(FRAC_1_SQRT_2), 100, 1e-9).unwrap();
        assert_eq!(pole.verdict, Theorem4Verdict::NotApplicable);
        let far = theorem4_applicable(rad(0.9), 100, 1e-9).unwrap();
        assert!(far.d_measured > 0.5);
        assert!(far.beta.is_some());
        assert!(!matches!(far.verdict, Theorem4Verdict::NotApplicable));
    }
}
