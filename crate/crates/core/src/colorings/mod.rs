//! Explicit colorings of the sphere.
//!
//! Every coloring is a total, deterministic map from points to colors
//! `1..=k` and is defined at every radius; whether it is proper at a given
//! radius is the verifier's business. Besides the color, each coloring
//! exposes a signed *membership depth* per color class: positive strictly
//! inside the class, zero on its boundary, negative outside. A positive depth
//! for class `c` always implies the point is assigned color `c`, which is what
//! the adversarial search relies on.

mod cap_stripes;
mod dodeca;
mod octa;
mod tetra;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub use cap_stripes::{
    cap_stripes_color, default_cap_stripes, find_cap_stripes_params, search_cap_stripes_params, CapStripesDefault,
    CapStripesParams, CapStripesSearch, CAP_SEARCH_SEED,
};
pub use dodeca::{dodeca_color, dodeca_face_centers};
pub use octa::octa_color;
pub use tetra::{tetra_color, tetra_vertices};

use crate::error::{Error, Result};
use crate::geom::{SpherePoint, Vec3, INV_SQRT_3};

pub const MAX_COLORS: usize = 6;

/// Membership depth per color class, indexed by `color - 1`. Slots past the
/// coloring's color count hold `-inf`.
pub type Depths = [f64; MAX_COLORS];

pub const NAMES: [&str; 4] = ["tetra4", "octa4", "dodeca6", "cap5"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name")]
pub enum ColoringSpec {
    /// Spherical Voronoi cells of an inscribed regular tetrahedron.
    #[serde(rename = "tetra4")]
    Tetra,
    /// Curved octahedron with antipodal octants identified.
    #[serde(rename = "octa4")]
    Octa,
    /// Antipodal pairs of faces of a regular dodecahedron.
    #[serde(rename = "dodeca6")]
    Dodeca,
    /// Polar cap plus four stripes below it.
    #[serde(rename = "cap5")]
    CapStripes { params: CapStripesParams },
}

/// Radius range on which a coloring is claimed to be proper.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "r", rename_all = "snake_case")]
pub enum Threshold {
    UpTo(f64),
    Exactly(f64),
}

impl Threshold {
    pub fn value(self) -> f64 {
        match self {
            Threshold::UpTo(r) | Threshold::Exactly(r) => r,
        }
    }
}

/// Radius up to which (or, for `octa4`, at which) the named coloring is
/// claimed proper.
pub fn claimed_threshold(name: &str) -> Result<Threshold> {
    match name {
        "tetra4" => Ok(Threshold::UpTo((3.0 - 3f64.sqrt()).sqrt() / 2.0)),
        "cap5" => Ok(Threshold::UpTo(INV_SQRT_3)),
        "dodeca6" => Ok(Threshold::UpTo(3f64.sqrt() / 2.0)),
        "octa4" => Ok(Threshold::Exactly(std::f64::consts::FRAC_1_SQRT_2)),
        other => Err(unknown(other)),
    }
}

fn unknown(name: &str) -> Error {
    Error::InvalidInput(format!("unknown coloring '{name}' (expected one of {})", NAMES.join(", ")))
}

impl ColoringSpec {
    /// Looks a coloring up by name; `cap5` comes with the shipped parameters.
    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "tetra4" => Ok(ColoringSpec::Tetra),
            "octa4" => Ok(ColoringSpec::Octa),
            "dodeca6" => Ok(ColoringSpec::Dodeca),
            "cap5" => Ok(ColoringSpec::CapStripes { params: default_cap_stripes().params }),
            other => Err(unknown(other)),
        }
    }

    pub fn cap_stripes(params: CapStripesParams) -> Result<Self> {
        params.validate()?;
        Ok(ColoringSpec::CapStripes { params })
    }

    pub fn name(&self) -> &'static str {
        match self {
            ColoringSpec::Tetra => "tetra4",
            ColoringSpec::Octa => "octa4",
            ColoringSpec::Dodeca => "dodeca6",
            ColoringSpec::CapStripes { .. } => "cap5",
        }
    }

    pub fn colors(&self) -> usize {
        match self {
            ColoringSpec::Tetra | ColoringSpec::Octa => 4,
            ColoringSpec::Dodeca => 6,
            ColoringSpec::CapStripes { .. } => 5,
        }
    }

    pub fn is_antipodal(&self) -> bool {
        matches!(self, ColoringSpec::Octa | ColoringSpec::Dodeca)
    }

    pub fn claimed_threshold(&self) -> Threshold {
        claimed_threshold(self.name()).expect("every variant has a threshold")
    }

    pub fn color(&self, x: &SpherePoint) -> u8 {
        self.color_dir(&x.direction())
    }

    /// Color of the point in direction `dir` (a unit vector).
    pub fn color_dir(&self, dir: &Vec3) -> u8 {
        match self {
            ColoringSpec::Tetra => tetra::color(dir),
            ColoringSpec::Octa => octa::color(dir),
            ColoringSpec::Dodeca => dodeca::color(dir),
            ColoringSpec::CapStripes { params } => params.color(dir),
        }
    }

    pub fn depths(&self, dir: &Vec3) -> Depths {
        match self {
            ColoringSpec::Tetra => tetra::depths(dir),
            ColoringSpec::Octa => octa::depths(dir),
            ColoringSpec::Dodeca => dodeca::depths(dir),
            ColoringSpec::CapStripes { params } => params.depths(dir),
        }
    }

    /// Unit directions worth starting an adversarial search from: cell
    /// corners, edge midpoints, axis points and the like.
    pub fn directed_starts(&self) -> Vec<Vec3> {
        match self {
            ColoringSpec::Tetra => tetra::directed_starts(),
            ColoringSpec::Octa => octa::directed_starts(),
            ColoringSpec::Dodeca => dodeca::directed_starts(),
            ColoringSpec::CapStripes { params } => params.directed_starts(),
        }
    }

    /// Short digest of the canonical JSON form (name plus parameters).
    pub fn params_hash(&self) -> String {
        let json = serde_json::to_vec(self).expect("coloring specs always serialize");
        hex::encode(&Sha256::digest(&json)[..8])
    }
}

/// Index of the largest score, ties going to the smallest index.
pub(crate) fn argmax_first(scores: &[f64]) -> usize {
    let mut best = 0;
    for (i, &s) in scores.iter().enumerate().skip(1) {
        if s > scores[best] {
            best = i;
        }
    }
    best
}

/// `score_c - max_{j != c} score_j` for every class.
pub(crate) fn score_margins(scores: &[f64]) -> Depths {
    let mut out = [f64::NEG_INFINITY; MAX_COLORS];
    for (c, slot) in out.iter_mut().enumerate().take(scores.len()) {
        let rival =
            scores.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &s)| s).fold(f64::NEG_INFINITY, f64::max);
        *slot = scores[c] - rival;
    }
    out
}
