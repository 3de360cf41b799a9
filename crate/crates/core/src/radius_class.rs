//! Rational-angle classification of sphere radii.
//!
//! A radius `r > 1/sqrt(3)` is classified by the value `c = theta(r) / pi`.
//! When `c = p/q` in lowest terms with `p` even the measurable lower bound of
//! five colors applies; odd `p` gives the countable exceptional set. Numeric
//! radii can only ever be matched against rationals of bounded denominator,
//! so the third verdict says exactly that and nothing more.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_integer::Integer;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::geom::{theta, Radius, INV_SQRT_3};

pub const DEFAULT_Q_MAX: u64 = 100;
pub const DEFAULT_TOL: f64 = 1e-9;

/// Reduced fraction `p/q` with `1/3 < p/q < 1`, standing for the angle `(p/q)*pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct RationalAngle {
    p: u64,
    q: u64,
}

impl RationalAngle {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::InvalidInput(format!("p and q must be positive, got {p}/{q}")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::InvalidInput(format!("{p}/{q} is not in lowest terms")));
        }
        // 1/3 < p/q < 1, compared exactly
        if 3 * p <= q || p >= q {
            return Err(Error::Domain(format!("{p}/{q} lies outside the open interval (1/3, 1)")));
        }
        Ok(RationalAngle { p, q })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn value(&self) -> f64 {
        self.p as f64 / self.q as f64
    }

    pub fn radians(&self) -> f64 {
        self.value() * PI
    }

    pub fn has_even_numerator(&self) -> bool {
        self.p.is_multiple_of(2)
    }

    /// Exact comparison of `p/q` values.
    pub fn cmp_value(&self, other: &RationalAngle) -> Ordering {
        (self.p as u128 * other.q as u128).cmp(&(other.p as u128 * self.q as u128))
    }
}

impl std::fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Applicable,
    Exceptional,
    NoMatchUpTo,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub verdict: Verdict,
    pub matched: Option<RationalAngle>,
    pub q_max: Option<u64>,
}

impl Classification {
    fn from_match(a: RationalAngle) -> Self {
        let verdict = if a.has_even_numerator() { Verdict::Applicable } else { Verdict::Exceptional };
        Classification { verdict, matched: Some(a), q_max: None }
    }

    fn no_match(q_max: u64) -> Self {
        Classification { verdict: Verdict::NoMatchUpTo, matched: None, q_max: Some(q_max) }
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Flat {
            verdict: Verdict,
            #[serde(skip_serializing_if = "Option::is_none")]
            p: Option<u64>,
            #[serde(skip_serializing_if = "Option::is_none")]
            q: Option<u64>,
            #[serde(skip_serializing_if = "Option::is_none")]
            q_max: Option<u64>,
        }
        Flat { verdict: self.verdict, p: self.matched.map(|a| a.p), q: self.matched.map(|a| a.q), q_max: self.q_max }
            .serialize(serializer)
    }
}

/// The radius whose unit-pair angle `theta` equals `(p/q)*pi`.
pub fn radius_from_rational(a: &RationalAngle) -> Radius {
    let s = (a.radians() / 2.0).sin();
    // 1/3 < p/q < 1 gives 1/2 < s < 1, so the radicand is positive.
    Radius::new(s / (4.0 * s * s - 1.0).sqrt()).expect("positive by the RationalAngle invariant")
}

pub fn theorem1_applicable(a: &RationalAngle) -> Classification {
    Classification::from_match(*a)
}

/// Best rational approximation of `x >= 0` with denominator at most `q_max`,
/// from the continued-fraction convergents and semiconvergents of `x`.
pub fn best_rational(x: f64, q_max: u64) -> (u64, u64) {
    assert!(x >= 0.0 && x.is_finite(), "best_rational needs a finite non-negative value");
    assert!(q_max >= 1);
    // h/k are the convergents; (h_prev, k_prev) the one before.
    let (mut h_prev, mut k_prev) = (0u64, 1u64);
    let (mut h, mut k) = (1u64, 0u64);
    let mut rest = x;
    loop {
        let a = rest.floor();
        let frac = rest - a;
        let a = a as u64;
        let k_next = a.saturating_mul(k).saturating_add(k_prev);
        if k_next > q_max {
            // Largest admissible semiconvergent, then the closer of it and h/k.
            let t = (q_max - k_prev) / k.max(1);
            let (hs, ks) = (t * h + h_prev, t * k + k_prev);
            if k == 0 {
                return (hs, ks);
            }
            let err_conv = (x - h as f64 / k as f64).abs();
            let err_semi = (x - hs as f64 / ks as f64).abs();
            return if ks >= 1 && err_semi < err_conv { (hs, ks) } else { (h, k) };
        }
        let h_next = a.saturating_mul(h).saturating_add(h_prev);
        (h_prev, k_prev, h, k) = (h, k, h_next, k_next);
        // Stop once the expansion terminates at float resolution.
        if frac <= 1e-15 * rest.max(1.0) || (x - h as f64 / k as f64).abs() == 0.0 {
            return (h, k);
        }
        rest = 1.0 / frac;
    }
}

/// The unique reduced `p/q` with `q <= q_max` and `|x - p/q| <= tol`, if any.
///
/// Two distinct fractions with denominators at most `q_max` are at least
/// `1/q_max^2` apart, so requiring `tol < 1/(2 q_max^2)` makes the match unique,
/// and a match within `tol` is necessarily the best approximation.
pub fn match_rational(x: f64, q_max: u64, tol: f64) -> Result<Option<(u64, u64)>> {
    check_tolerance(q_max, tol)?;
    let (p, q) = best_rational(x, q_max);
    Ok(((x - p as f64 / q as f64).abs() <= tol).then_some((p, q)))
}

fn check_tolerance(q_max: u64, tol: f64) -> Result<()> {
    if q_max == 0 {
        return Err(Error::InvalidInput("q_max must be at least 1".into()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    let q = q_max as f64;
    if tol >= 1.0 / (2.0 * q * q) {
        return Err(Error::Ambiguous { tol, q_max });
    }
    Ok(())
}

pub fn classify_radius(r: Radius, q_max: u64, tol: f64) -> Result<Classification> {
    check_tolerance(q_max, tol)?;
    if r.get() <= INV_SQRT_3 {
        return Err(Error::Domain(format!("classification needs r > 1/sqrt(3), got {}", r.get())));
    }
    let c = theta(r)? / PI;
    match match_rational(c, q_max, tol)? {
        None => Ok(Classification::no_match(q_max)),
        Some((p, q)) => {
            let a = RationalAngle::new(p, q).map_err(|_| {
                Error::Domain(format!("theta/pi = {c} matches the excluded boundary {p}/{q} within {tol}"))
            })?;
            let class = Classification::from_match(a);
            debug_assert!(class.verdict != Verdict::Applicable || a.q % 2 == 1);
            Ok(class)
        }
    }
}

/// All reduced `p/q` in `(1/3, 1)` with `q <= q_max`, by denominator then numerator.
pub fn reduced_fractions(q_max: u64) -> impl Iterator<Item = RationalAngle> {
    (2..=q_max).flat_map(|q| (q / 3 + 1..q).filter_map(move |p| RationalAngle::new(p, q).ok()))
}

/// Candidates outside the reach of the parity criterion: odd `p`, sorted by
/// radius ascending (equivalently by `p/q` descending).
pub fn enumerate_exceptional(q_max: u64) -> Vec<(RationalAngle, Radius)> {
    let mut out: Vec<RationalAngle> = reduced_fractions(q_max).filter(|a| !a.has_even_numerator()).collect();
    out.sort_by(|a, b| b.cmp_value(a));
    out.into_iter().map(|a| (a, radius_from_rational(&a))).collect()
}
