//! Combinatorial lemmas on random triangulations: balanced chords,
//! contraction and the tripod property.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cayley_delta::triangulate::{
    arc_partitions, contract_point, find_balanced_chord, random_triangulation, tripod_triangle, ContractionCase,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let (mut worst, mut cases, mut partitions) = (f64::INFINITY, [0usize; 3], 0usize);
    for _ in 0..500 {
        let n = rng.gen_range(4..=16);
        let t = random_triangulation(n, &mut rng)?;

        let b = find_balanced_chord(&t)?;
        worst = worst.min(b.d as f64 / n as f64);

        for i in 1..=n {
            let c = contract_point(&t, i)?;
            assert!(c.triangulation.is_valid());
            cases[match c.case {
                ContractionCase::MergeChords => 0,
                ContractionCase::ChordBecomesArc => 1,
                ContractionCase::RemoveChord => 2,
            }] += 1;
        }

        for p in arc_partitions(n) {
            tripod_triangle(&t, &p)?;
            partitions += 1;
        }
    }
    println!("smallest balanced d/n: {worst:.3} (>= 1/3)");
    println!("contractions: merge {}, chord->arc {}, removed {}", cases[0], cases[1], cases[2]);
    println!("tripod found for all {partitions} partitions");
    Ok(())
}
