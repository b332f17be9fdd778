//! Heuristic growth verdicts for computed and planted profiles, plus the
//! plot columns for one of them.

use cayley_delta::profile::{classify_growth, delta_profile, emit_plot_data, DeltaOptions, DeltaProfile, DeltaRow};

fn planted(f: impl Fn(usize) -> u32) -> DeltaProfile {
    let rows: Vec<_> = (1..=64)
        .map(|n| DeltaRow { n, delta: f(n), witness: String::new(), cycles_enumerated: 0 })
        .collect();
    DeltaProfile {
        spec: "planted".into(),
        group_key: "planted".into(),
        generators: vec![],
        rows,
        max_n: 64,
        requested_max_n: 64,
        incomplete: false,
        seed: 0,
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = DeltaOptions { workers: 4, ..Default::default() };
    let free = delta_profile(&"free:2".parse()?, 12, &opts)?;
    let z2 = delta_profile(&"abelian:2".parse()?, 10, &opts)?;
    let log = planted(|n| (n as f64).log2().ceil() as u32);

    for (name, p) in [("free:2", &free), ("abelian:2", &z2), ("ceil(log2 n)", &log)] {
        let c = classify_growth(p)?;
        println!(
            "{name:<13} {:<18} const rss {:.3}, log rss {:.3}, linear rss {:.3} (slope {:.3})",
            c.verdict.to_string(),
            c.fits.constant.residual,
            c.fits.logarithmic.residual,
            c.fits.linear.residual,
            c.fits.linear.coefficient,
        );
    }
    println!();
    print!("{}", emit_plot_data(&z2)?);
    Ok(())
}
