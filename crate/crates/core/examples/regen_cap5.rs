//! Regenerates `data/cap5_default.json` by rerunning the parameter search at
//! r = 1/√3:
//!
//! ```text
//! cargo run --release -p sphere-chroma --example regen_cap5 > crates/core/data/cap5_default.json
//! ```

use sphere_chroma::colorings::{search_cap_stripes_params, CapStripesDefault, CAP_SEARCH_SEED};
use sphere_chroma::geom::{Radius, INV_SQRT_3};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = Radius::new(INV_SQRT_3)?;
    let found = search_cap_stripes_params(r, CAP_SEARCH_SEED)?;
    let record = CapStripesDefault {
        version: 1,
        radius: r.get(),
        seed: found.seed,
        evaluations: found.evaluations,
        margin: found.margin,
        params: found.params,
    };
    println!("{}", serde_json::to_string_pretty(&record)?);
    Ok(())
}
