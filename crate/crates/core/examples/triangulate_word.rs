//! Optimal and three-fan triangulations of one identity word.
//!
//! cargo run --example triangulate_word -- abelian:2 "a,a,b,b,a',a',b',b'"

use cayley_delta::cayley::{CayleyBall, DEFAULT_ELEMENT_BUDGET};
use cayley_delta::group::GroupSpec;
use cayley_delta::triangulate::{fan_triangulation, min_max_triangulation, score, Cycle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "abelian:2".into());
    let word = args.next().unwrap_or_else(|| "a,a,b,b,a',a',b',b'".into());

    let group = spec.parse::<GroupSpec>()?.build()?;
    let w = group.alphabet().parse_word(&word)?;
    let ball = CayleyBall::build(group, (w.len() / 2) as u32, DEFAULT_ELEMENT_BUDGET)?;
    let cycle = Cycle::new(&ball, w)?;

    let best = min_max_triangulation(&cycle, &ball)?;
    let fan = score(&fan_triangulation(cycle.n())?, &cycle, &ball)?;
    println!("n = {}, ceil(n/3) = {}", cycle.n(), cycle.n().div_ceil(3));
    println!("optimal k = {}", best.k);
    for (c, len) in &best.chord_lengths {
        println!("  {c} length {len}");
    }
    println!("three-fan k = {}", fan.k);
    for (c, len) in &fan.chord_lengths {
        println!("  {c} length {len}");
    }
    Ok(())
}
