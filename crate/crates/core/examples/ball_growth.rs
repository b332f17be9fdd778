//! Sphere and ball sizes for a few backends.
//!
//! cargo run --example ball_growth -- [radius]

use cayley_delta::cayley::{CayleyBall, DEFAULT_ELEMENT_BUDGET};
use cayley_delta::group::GroupSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let radius: u32 = std::env::args().nth(1).map(|r| r.parse()).transpose()?.unwrap_or(4);
    for spec in ["free:2", "abelian:2", "abelian:3", "product:C2|C3", "finite:S3", "finite:D4"] {
        let group = spec.parse::<GroupSpec>()?.build()?;
        let ball = CayleyBall::build(group, radius, DEFAULT_ELEMENT_BUDGET)?;
        println!("{spec:<14} spheres {:?}", ball.sphere_sizes());
    }

    // distances and geodesics inside one ball
    let z2 = "abelian:2".parse::<GroupSpec>()?.build()?;
    let ball = CayleyBall::build(z2, 6, DEFAULT_ELEMENT_BUDGET)?;
    let al = ball.alphabet();
    let g = ball.locate(&al.parse_word("a,a,b")?).unwrap();
    let h = ball.locate(&al.parse_word("b',a'")?).unwrap();
    println!("d(a²b, b⁻¹a⁻¹) = {} via {}", ball.distance(g, h)?, al.format_word(&ball.geodesic(g, h)?));
    Ok(())
}
