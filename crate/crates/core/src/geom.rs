//! Spherical unit-distance geometry in ambient coordinates.
//!
//! Points of the sphere of radius `r` are stored as 3-vectors of length `r`;
//! the graph metric is the chordal (straight-line) distance. The canonical
//! frame puts the north pole on `+z`, and every construction that needs a
//! base point (unit circle, odd cycles, the diamond) is built there first.

use std::f64::consts::PI;

use nalgebra::{Rotation3, Unit};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vec3 = nalgebra::Vector3<f64>;

/// Self-consistency tolerance for the closed-form formulas.
pub const GEOM_TOL: f64 = 1e-12;

/// `1/sqrt(3)`: the smallest radius on which two points of a unit circle can
/// themselves be at unit distance.
pub const INV_SQRT_3: f64 = 0.577_350_269_189_625_8;

/// Sphere radius, in the same length unit as the unit distance.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Radius(f64);

impl Radius {
    pub fn new(r: f64) -> Result<Self> {
        if r.is_finite() && r > 0.0 {
            Ok(Radius(r))
        } else {
            Err(Error::InvalidInput(format!("radius must be finite and positive, got {r}")))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// Non-degenerate unit-distance pairs exist iff `r > 1/2`.
    pub fn has_unit_pairs(self) -> bool {
        self.0 > 0.5
    }

    pub(crate) fn same_as(self, other: Radius) -> bool {
        (self.0 - other.0).abs() <= GEOM_TOL * self.0.max(other.0)
    }
}

impl TryFrom<f64> for Radius {
    type Error = Error;

    fn try_from(r: f64) -> Result<Self> {
        Radius::new(r)
    }
}

impl From<Radius> for f64 {
    fn from(r: Radius) -> f64 {
        r.0
    }
}

/// A point of the sphere of radius `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint {
    v: Vec3,
    r: Radius,
}

impl SpherePoint {
    /// Projects `v` radially onto the sphere. Vectors already of length `r`
    /// within [`GEOM_TOL`] (relative) are kept bit for bit, so stored
    /// coordinates survive a round trip.
    pub fn new(v: Vec3, r: Radius) -> Result<Self> {
        let n = v.norm();
        if !n.is_finite() || n == 0.0 {
            return Err(Error::InvalidInput(format!("cannot place a zero or non-finite vector on the sphere: {v:?}")));
        }
        if (n - r.get()).abs() <= GEOM_TOL * r.get() {
            return Ok(SpherePoint { v, r });
        }
        Ok(SpherePoint { v: v * (r.get() / n), r })
    }

    pub fn from_coords(x: f64, y: f64, z: f64, r: Radius) -> Result<Self> {
        Self::new(Vec3::new(x, y, z), r)
    }

    /// Builds a point from a vector already of unit length.
    pub(crate) fn from_unit(dir: Vec3, r: Radius) -> Self {
        SpherePoint { v: dir * r.get(), r }
    }

    pub fn north_pole(r: Radius) -> Self {
        SpherePoint { v: Vec3::new(0.0, 0.0, r.get()), r }
    }

    pub fn south_pole(r: Radius) -> Self {
        SpherePoint { v: Vec3::new(0.0, 0.0, -r.get()), r }
    }

    #[inline]
    pub fn coords(&self) -> Vec3 {
        self.v
    }

    #[inline]
    pub fn radius(&self) -> Radius {
        self.r
    }

    /// Unit vector in the direction of the point.
    #[inline]
    pub fn direction(&self) -> Vec3 {
        self.v / self.r.get()
    }

    pub fn antipode(&self) -> Self {
        SpherePoint { v: -self.v, r: self.r }
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.v.x, self.v.y, self.v.z]
    }

    /// Colatitude measured from the north pole, in `[0, pi]`.
    pub fn colatitude(&self) -> f64 {
        (self.v.z / self.r.get()).clamp(-1.0, 1.0).acos()
    }
}

impl Serialize for SpherePoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_array().serialize(serializer)
    }
}

impl std::ops::Neg for SpherePoint {
    type Output = SpherePoint;

    fn neg(self) -> SpherePoint {
        self.antipode()
    }
}

/// Straight-line distance in the ambient space.
pub fn chord_distance(a: &SpherePoint, b: &SpherePoint) -> Result<f64> {
    if !a.r.same_as(b.r) {
        return Err(Error::InvalidInput(format!(
            "points lie on different spheres (r = {} and r = {})",
            a.r.get(),
            b.r.get()
        )));
    }
    Ok((a.v - b.v).norm())
}

/// Great-circle distance; provided for convenience only.
pub fn geodesic_distance(a: &SpherePoint, b: &SpherePoint) -> Result<f64> {
    let chord = chord_distance(a, b)?;
    let r = a.r.get();
    Ok(2.0 * r * (chord / (2.0 * r)).min(1.0).asin())
}

/// Central angle (seen from the sphere center) between two points at unit
/// chordal distance. Defined for `r >= 1/2`, where it equals `pi`.
pub fn unit_angle(r: Radius) -> Result<f64> {
    let s = 1.0 / (2.0 * r.get());
    if s > 1.0 {
        return Err(Error::NoUnitPairs { r: r.get() });
    }
    Ok(2.0 * s.asin())
}

/// Locus of points at chordal distance 1 from the north pole.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitCircle {
    pub r: Radius,
    /// Radius of the circle itself, `sqrt(4r^2 - 1) / (2r)`.
    pub radius: f64,
    /// Signed height of the circle plane above the sphere center, `r - 1/(2r)`.
    pub height: f64,
}

impl UnitCircle {
    pub fn point(&self, phi: f64) -> SpherePoint {
        SpherePoint { v: Vec3::new(self.radius * phi.cos(), self.radius * phi.sin(), self.height), r: self.r }
    }
}

pub fn unit_circle(r: Radius) -> Result<UnitCircle> {
    if !r.has_unit_pairs() {
        return Err(Error::NoUnitPairs { r: r.get() });
    }
    let r0 = r.get();
    Ok(UnitCircle { r, radius: (4.0 * r0 * r0 - 1.0).sqrt() / (2.0 * r0), height: r0 - 1.0 / (2.0 * r0) })
}

/// Angle subtended, at the center of a point's unit circle, by two points of
/// that circle which are themselves at unit distance.
///
/// Defined for `r >= 1/sqrt(3)`; `theta(1/sqrt(3)) = pi` and the angle
/// decreases monotonically towards `pi/3` as `r` grows.
pub fn theta(r: Radius) -> Result<f64> {
    let r0 = r.get();
    // sin(θ/2) = r/√(4r²−1) and cos(θ/2) = √((3r²−1)/(4r²−1)). Near the
    // boundary θ is infinitely sensitive to r, so a radicand within rounding
    // of zero is snapped to zero and θ(1/√3) = π exactly.
    let mut d = 3.0 * r0 * r0 - 1.0;
    if d.abs() <= 4.0 * f64::EPSILON {
        d = 0.0;
    }
    if d < 0.0 {
        return Err(Error::Domain(format!("theta undefined for r = {r0} < 1/sqrt(3)")));
    }
    Ok(2.0 * r0.atan2(d.sqrt()))
}

/// Point at azimuth `phi` on the north pole's unit circle.
pub fn circle_point(r: Radius, phi: f64) -> Result<SpherePoint> {
    Ok(unit_circle(r)?.point(phi))
}

/// Orthonormal tangent basis `(u, w)` at the unit vector `dir`, with
/// `u x w = dir`. At the north pole this is `(e_x, e_y)`.
pub fn tangent_basis(dir: &Vec3) -> (Vec3, Vec3) {
    let helper = if dir.x.abs() < 0.9 { Vec3::x() } else { Vec3::y() };
    let u = (helper - dir * helper.dot(dir)).normalize();
    let w = dir.cross(&u);
    (u, w)
}

/// The point at unit chordal distance from `x`, reached by leaving `x` along
/// the unit tangent `tangent`. For `r = 1/2` this is the antipode.
pub(crate) fn unit_partner_dir(x_dir: &Vec3, tangent: &Vec3, cos_a: f64, sin_a: f64) -> Vec3 {
    x_dir * cos_a + tangent * sin_a
}

/// Point at azimuth `phi` on the unit circle of an arbitrary point `x`.
pub fn unit_circle_point_about(x: &SpherePoint, phi: f64) -> Result<SpherePoint> {
    let alpha = unit_angle(x.r)?;
    if !x.r.has_unit_pairs() {
        return Err(Error::NoUnitPairs { r: x.r.get() });
    }
    let d = x.direction();
    let (u, w) = tangent_basis(&d);
    let t = u * phi.cos() + w * phi.sin();
    Ok(SpherePoint::from_unit(unit_partner_dir(&d, &t, alpha.cos(), alpha.sin()), x.r))
}

/// Rotation of the sphere about the diameter through a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rotation {
    pub axis: Unit<Vec3>,
    pub angle: f64,
}

impl Rotation {
    pub fn new(axis: Vec3, angle: f64) -> Result<Self> {
        let n = axis.norm();
        if !n.is_finite() || n == 0.0 {
            return Err(Error::InvalidInput("rotation axis must be a nonzero vector".into()));
        }
        Ok(Rotation { axis: Unit::new_unchecked(axis / n), angle })
    }

    /// Rotation about the diameter through `p` and its antipode.
    pub fn about(p: &SpherePoint, angle: f64) -> Self {
        Rotation { axis: Unit::new_unchecked(p.direction()), angle }
    }

    /// Rotation about the polar axis.
    pub fn polar(angle: f64) -> Self {
        Rotation { axis: Vec3::z_axis(), angle }
    }

    fn matrix(&self) -> Rotation3<f64> {
        Rotation3::from_axis_angle(&self.axis, self.angle)
    }
}

pub fn rotate(p: &SpherePoint, rot: &Rotation) -> SpherePoint {
    SpherePoint { v: rot.matrix() * p.v, r: p.r }
}

/// Azimuth in `[0, 2pi)`; 0 on the polar axis regardless of signed zeros.
pub(crate) fn azimuth(v: &Vec3) -> f64 {
    if v.x == 0.0 && v.y == 0.0 {
        return 0.0;
    }
    let a = v.y.atan2(v.x);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}
