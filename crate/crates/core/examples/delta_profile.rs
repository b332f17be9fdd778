//! Δ(n) tables, computed on a worker pool.
//!
//! cargo run --release --example delta_profile -- free:2 12 4

use cayley_delta::profile::{delta_profile, DeltaOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "abelian:2".into());
    let max_n: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(10);
    let workers: usize = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);

    let opts = DeltaOptions { workers, ..Default::default() };
    let profile = delta_profile(&spec.parse()?, max_n, &opts)?;
    print!("{}", profile.to_csv()?);
    if profile.incomplete {
        eprintln!("stopped early at n = {} (budget)", profile.max_n);
    }
    Ok(())
}
