//! A genus-2 surface group through Dehn's algorithm.

use std::sync::Arc;

use cayley_delta::cayley::{CayleyBall, DEFAULT_ELEMENT_BUDGET};
use cayley_delta::group::{DehnPresentation, GroupOracle};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let surface = DehnPresentation::surface(2)?;
    let al = surface.alphabet().clone();
    println!("relator {}", al.format_word(&surface.relators()[0]));
    println!("largest piece ratio {:.3}", surface.report().max_piece_ratio);

    for text in ["a1,b1,a1',b1',a2", "a1,b1,a1',b1',a2,b2,a2',b2'", "a1,a1'", "b1,a1,b1'"] {
        let w = al.parse_word(text)?;
        println!("{text:<18} -> {:<12} identity: {}", al.format_word(&surface.dehn_reduce(&w)), surface.is_identity_word(&w));
    }

    // The powered relator a⁴ fails the small-cancellation check.
    println!("a,a,a,a accepted: {}", DehnPresentation::from_relator_text("a,a,a,a").is_ok());

    let group: Arc<dyn GroupOracle> = Arc::new(surface);
    let ball = CayleyBall::build(group, 3, DEFAULT_ELEMENT_BUDGET)?;
    println!("spheres {:?}", ball.sphere_sizes());
    Ok(())
}
