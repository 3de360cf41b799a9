//! Evidence that a coloring is proper at a radius: randomized sampling of
//! unit-distance pairs, adversarial search and threshold scans.
//!
//! Margins are pair depths negated (see [`adversarial`]): for a pair whose
//! endpoints share a color the margin is `<= 0`; otherwise it is the depth by
//! which the pair misses sharing a class, floored at the smallest positive
//! double. Hence `violations == 0` exactly when `worst_margin > 0`.

mod adversarial;
mod sampler;
mod scan;

pub use adversarial::{adversarial_search, AdversarialResult, VIOLATION_DEPTH};
pub use sampler::{sample_unit_pair, PairSample};
pub use scan::{threshold_scan, threshold_scan_with, ScanResult, ScanStep, DEFAULT_SCAN_RESTARTS, DEFAULT_SCAN_SEED};

use rayon::prelude::*;
use serde::Serialize;
use std::time::{Duration, Instant};

use crate::colorings::ColoringSpec;
use crate::error::{Error, Result};
use crate::geom::Radius;
use adversarial::pair_depth;
use sampler::{sample_dirs, unit_angle_sc};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub coloring: String,
    pub params_hash: String,
    pub r: f64,
    pub n: u64,
    pub violations: u64,
    pub worst_margin: f64,
    pub seed: u64,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Colors both endpoints of samples `0..n` of the stream `seed` and counts
/// same-color pairs. Runs on the current rayon pool; the report does not
/// depend on its size.
pub fn verify_coloring(c: &ColoringSpec, r: Radius, n: u64, seed: u64) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::Precondition("verification needs at least one sample".into()));
    }
    let start = Instant::now();
    let (sin_a, cos_a) = unit_angle_sc(r)?;
    let (violations, worst_margin) = (0..n)
        .into_par_iter()
        .map(|i| {
            let (x, y) = sample_dirs(sin_a, cos_a, seed, i);
            let same = c.color_dir(&x) == c.color_dir(&y);
            let f = pair_depth(c, &x, &y);
            if same {
                (1u64, 0.0 - f)
            } else {
                (0, (0.0 - f).max(f64::MIN_POSITIVE))
            }
        })
        .reduce(|| (0, f64::INFINITY), |a, b| (a.0 + b.0, a.1.min(b.1)));
    Ok(VerificationReport {
        coloring: c.name().to_string(),
        params_hash: c.params_hash(),
        r: r.get(),
        n,
        violations,
        worst_margin,
        seed,
        elapsed: start.elapsed(),
    })
}
