//! Thin-triangle estimates: 0 for a tree, growing with r for Z².

use cayley_delta::cayley::{thinness_delta, ThinnessOptions};
use cayley_delta::group::GroupSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for spec in ["free:2", "abelian:2", "product:C2|C3"] {
        let group = spec.parse::<GroupSpec>()?.build()?;
        for r in 1..=4 {
            let opts = ThinnessOptions { samples: 2000, seed: 1, ..Default::default() };
            let rep = thinness_delta(group.clone(), r, &opts)?;
            let how = if rep.exhaustive { "all" } else { "sampled" };
            println!("{spec:<14} r = {r}  delta ≈ {}  ({} triangles, {how})", rep.delta_estimate, rep.triangles);
        }
    }
    Ok(())
}
