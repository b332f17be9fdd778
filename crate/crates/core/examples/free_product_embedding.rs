//! Each factor of a free product of finite groups keeps its own metric.

use std::sync::Arc;

use cayley_delta::group::{FiniteGroup, FreeProduct};
use cayley_delta::profile::embedding_check;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let products = [
        vec![FiniteGroup::cyclic(2)?, FiniteGroup::cyclic(3)?],
        vec![FiniteGroup::cyclic(2)?, FiniteGroup::cyclic(2)?],
        vec![FiniteGroup::symmetric3(), FiniteGroup::cyclic(4)?],
    ];
    for factors in products {
        let product = Arc::new(FreeProduct::new(factors)?);
        for f in 0..product.factors().len() {
            let rep = embedding_check(product.clone(), f, 4)?;
            println!(
                "{:<4} in {:<20} {} pairs, {}",
                rep.factor_label,
                format!("{:?}", product.factors().iter().map(|g| g.label()).collect::<Vec<_>>()),
                rep.pairs,
                if rep.passed { "isometric" } else { "distorted" }
            );
        }
    }
    Ok(())
}
