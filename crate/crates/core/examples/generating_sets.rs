//! Z² with S = {a, b} against S' = S ∪ {ab}: Δ_S(n) <= K·Δ_S'(Kn) + K.

use cayley_delta::profile::{compare_generating_sets, delta_profile, DeltaOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = DeltaOptions { workers: 4, ..Default::default() };
    let s = delta_profile(&"abelian:2".parse()?, 10, &opts)?;
    let s2 = delta_profile(&"abelian:2:1,1".parse()?, 10, &opts)?;
    println!("S : {:?}", s.values());
    println!("S': {:?}", s2.values());
    for k in 1..=2 {
        let rep = compare_generating_sets(&s, &s2, k)?;
        for r in &rep.rows {
            println!("K={k} n={:<2} {} <= {}·{} + {} {}", r.n, r.delta_a, k, r.delta_b, k, if r.pass { "ok" } else { "FAIL" });
        }
    }
    Ok(())
}
