//! Bisection on the adversarial verdict.

use serde::Serialize;

use super::adversarial::adversarial_search;
use crate::colorings::ColoringSpec;
use crate::error::{Error, Result};
use crate::geom::Radius;

/// Seed used by [`threshold_scan`]; pass another through [`threshold_scan_with`].
pub const DEFAULT_SCAN_SEED: u64 = 0x5eed_0001;
pub const DEFAULT_SCAN_RESTARTS: usize = 32;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanStep {
    pub r: f64,
    pub found: bool,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanResult {
    pub estimate: f64,
    pub lo: f64,
    pub hi: f64,
    pub seed: u64,
    pub restarts: usize,
    /// Every adversarial evaluation, in the order performed.
    pub trace: Vec<ScanStep>,
}

pub fn threshold_scan(name: &str, r_lo: Radius, r_hi: Radius, tol: f64) -> Result<ScanResult> {
    let c = ColoringSpec::by_name(name)?;
    threshold_scan_with(&c, r_lo, r_hi, tol, DEFAULT_SCAN_SEED, DEFAULT_SCAN_RESTARTS)
}

/// Bisects `[r_lo, r_hi]` down to width `tol`, keeping the adversarial
/// verdict at each end fixed; returns the midpoint of the final bracket.
pub fn threshold_scan_with(
    c: &ColoringSpec,
    r_lo: Radius,
    r_hi: Radius,
    tol: f64,
    seed: u64,
    restarts: usize,
) -> Result<ScanResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidInput(format!("scan tolerance must be positive, got {tol}")));
    }
    let (mut lo, mut hi) = (r_lo.get(), r_hi.get());
    if lo >= hi {
        return Err(Error::InvalidInput(format!("empty scan bracket [{lo}, {hi}]")));
    }
    let mut trace = Vec::new();
    let mut probe = |r: f64| -> Result<bool> {
        let res = adversarial_search(c, Radius::new(r)?, restarts, seed)?;
        trace.push(ScanStep { r, found: res.found, margin: res.margin });
        Ok(res.found)
    };
    let at_lo = probe(lo)?;
    if probe(hi)? == at_lo {
        return Err(Error::Bracketing(format!("adversarial verdict is found={at_lo} at both r = {lo} and r = {hi}")));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if probe(mid)? == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(ScanResult { estimate: 0.5 * (lo + hi), lo, hi, seed, restarts, trace })
}
