//! Hill-climbing search for same-color unit-distance pairs.
//!
//! The objective for a pair `(x, y)` is its *pair depth*
//! `max_c min(depth_c(x), depth_c(y))`: positive exactly when both points lie
//! strictly inside one color class. The search climbs over the pair manifold,
//! parameterized by a point `x` and a unit tangent at `x` pointing towards
//! `y`, so every candidate is at chordal distance exactly 1.

use rand::Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::FRAC_PI_4;

use super::sampler::{substream, uniform_dir, uniform_tangent, PairSample};
use crate::colorings::ColoringSpec;
use crate::error::{Error, Result};
use crate::geom::{tangent_basis, unit_angle, unit_partner_dir, Radius, SpherePoint, Vec3};

/// Pair depth above which a same-color pair counts as a genuine violation
/// rather than float noise on a class boundary.
pub const VIOLATION_DEPTH: f64 = 1e-9;

const MAX_ITERS: usize = 600;
const INITIAL_STEP: f64 = 0.2;
const MIN_STEP: f64 = 1e-12;
/// Depth at which a start stops climbing: the violation is unambiguous.
const EARLY_STOP: f64 = 1e-3;
const TANGENTS_PER_START: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdversarialResult {
    pub found: bool,
    /// Best same-color pair, present iff `found`.
    pub witness: Option<PairSample>,
    /// Negated best pair depth: negative iff a violation was found.
    pub margin: f64,
    pub starts: usize,
}

pub(crate) fn pair_depth(c: &ColoringSpec, x: &Vec3, y: &Vec3) -> f64 {
    let dx = c.depths(x);
    let dy = c.depths(y);
    dx.iter().zip(dy.iter()).map(|(a, b)| a.min(*b)).fold(f64::NEG_INFINITY, f64::max)
}

struct Climb {
    depth: f64,
    x: Vec3,
    y: Vec3,
}

fn climb<R: Rng>(c: &ColoringSpec, x0: Vec3, t0: Vec3, cos_a: f64, sin_a: f64, rng: &mut R) -> Climb {
    let partner = |x: &Vec3, t: &Vec3| unit_partner_dir(x, t, cos_a, sin_a).normalize();
    let (mut x, mut t) = (x0, t0);
    let mut y = partner(&x, &t);
    let mut best = pair_depth(c, &x, &y);
    let mut step = INITIAL_STEP;
    for _ in 0..MAX_ITERS {
        if step < MIN_STEP || best >= EARLY_STOP {
            break;
        }
        let g =
            |rng: &mut R| Vec3::new(rng.sample(StandardNormal), rng.sample(StandardNormal), rng.sample(StandardNormal));
        let nx = (x + g(rng) * step).normalize();
        let moved = t + g(rng) * step;
        let projected = moved - nx * moved.dot(&nx);
        let nt = if projected.norm() > 1e-300 { projected.normalize() } else { tangent_basis(&nx).0 };
        let ny = partner(&nx, &nt);
        let d = pair_depth(c, &nx, &ny);
        if d > best {
            (x, t, y, best) = (nx, nt, ny, d);
            step = (step * 2f64.powf(0.25)).min(1.0);
        } else {
            step *= 2f64.powf(-1.0 / 16.0);
        }
    }
    Climb { depth: best, x, y }
}

/// Searches for a same-color pair at chordal distance 1 on the sphere of
/// radius `r`, from the coloring's directed starts (each with eight tangent
/// directions) plus `restarts` seeded random starts. Deterministic in its
/// inputs regardless of the worker count. `r = 1/2` is accepted: there the
/// unit-distance partner of a point is its antipode.
pub fn adversarial_search(c: &ColoringSpec, r: Radius, restarts: usize, seed: u64) -> Result<AdversarialResult> {
    if r.get() < 0.5 {
        return Err(Error::NoUnitPairs { r: r.get() });
    }
    if restarts == 0 {
        return Err(Error::Precondition("adversarial search needs at least one restart".into()));
    }
    let (sin_a, cos_a) = unit_angle(r)?.sin_cos();

    let mut starts: Vec<Option<(Vec3, Vec3)>> = Vec::new();
    for d in c.directed_starts() {
        let (u, w) = tangent_basis(&d);
        for j in 0..TANGENTS_PER_START {
            let a = j as f64 * FRAC_PI_4;
            starts.push(Some((d, u * a.cos() + w * a.sin())));
        }
    }
    starts.extend(std::iter::repeat_n(None, restarts));

    let results: Vec<Climb> = starts
        .par_iter()
        .enumerate()
        .map(|(i, start)| {
            let mut rng = substream(seed, i as u64);
            let (x, t) = match start {
                Some(s) => *s,
                None => {
                    let x = uniform_dir(&mut rng);
                    let t = uniform_tangent(&mut rng, &x);
                    (x, t)
                }
            };
            climb(c, x, t, cos_a, sin_a, &mut rng)
        })
        .collect();

    let (index, best) =
        results
            .iter()
            .enumerate()
            .fold((0, &results[0]), |acc, (i, cl)| if cl.depth > acc.1.depth { (i, cl) } else { acc });
    let found = best.depth > VIOLATION_DEPTH;
    let witness = found.then(|| PairSample {
        x: SpherePoint::from_unit(best.x, r),
        y: SpherePoint::from_unit(best.y, r),
        index: index as u64,
        seed,
    });
    Ok(AdversarialResult { found, witness, margin: 0.0 - best.depth, starts: starts.len() })
}
