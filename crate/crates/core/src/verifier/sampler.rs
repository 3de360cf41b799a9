//! Deterministic sampling of unit-distance pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::geom::{tangent_basis, unit_angle, unit_partner_dir, Radius, SpherePoint, Vec3};

/// A pair of points at chordal distance 1, fully determined by
/// `(seed, index)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairSample {
    pub x: SpherePoint,
    pub y: SpherePoint,
    pub index: u64,
    pub seed: u64,
}

/// Generator for the substream `(seed, index)`: independent of the order in
/// which indices are visited.
pub(crate) fn substream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Area-uniform unit vector.
pub(crate) fn uniform_dir<R: Rng>(rng: &mut R) -> Vec3 {
    let z = 2.0 * rng.random::<f64>() - 1.0;
    let a = TAU * rng.random::<f64>();
    let s = (1.0 - z * z).max(0.0).sqrt();
    Vec3::new(s * a.cos(), s * a.sin(), z)
}

/// Unit tangent at `dir` with uniformly distributed direction.
pub(crate) fn uniform_tangent<R: Rng>(rng: &mut R, dir: &Vec3) -> Vec3 {
    let (u, w) = tangent_basis(dir);
    let phi = TAU * rng.random::<f64>();
    u * phi.cos() + w * phi.sin()
}

/// Unit-angle sine and cosine for radius `r`, rejecting `r <= 1/2`.
pub(crate) fn unit_angle_sc(r: Radius) -> Result<(f64, f64)> {
    if !r.has_unit_pairs() {
        return Err(Error::NoUnitPairs { r: r.get() });
    }
    let alpha = unit_angle(r)?;
    Ok(alpha.sin_cos())
}

pub(crate) fn sample_dirs(sin_a: f64, cos_a: f64, seed: u64, index: u64) -> (Vec3, Vec3) {
    let mut rng = substream(seed, index);
    let x = uniform_dir(&mut rng);
    let t = uniform_tangent(&mut rng, &x);
    (x, unit_partner_dir(&x, &t, cos_a, sin_a).normalize())
}

/// The `index`-th pair of the stream `seed`: `x` area-uniform on the sphere,
/// `y` uniform on the unit-distance circle of `x`.
pub fn sample_unit_pair(r: Radius, seed: u64, index: u64) -> Result<PairSample> {
    let (sin_a, cos_a) = unit_angle_sc(r)?;
    let (x, y) = sample_dirs(sin_a, cos_a, seed, index);
    Ok(PairSample { x: SpherePoint::from_unit(x, r), y: SpherePoint::from_unit(y, r), index, seed })
}
