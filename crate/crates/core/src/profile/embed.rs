//! Factors of a free product sit isometrically inside it.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cayley::{CayleyBall, ElementId, DEFAULT_ELEMENT_BUDGET};
use crate::error::{Error, Result};
use crate::group::{Element, FreeProduct, GroupOracle};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingMismatch {
    pub h1: usize,
    pub h2: usize,
    pub d_factor: u32,
    pub d_product: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub factor: usize,
    pub factor_label: String,
    pub radius: u32,
    pub pairs: usize,
    pub mismatches: Vec<EmbeddingMismatch>,
    pub passed: bool,
}

fn locate(ball: &CayleyBall, e: &Element) -> Result<ElementId> {
    ball.lookup(e).ok_or_else(|| Error::OutOfRange { radius: ball.radius(), what: format!("factor element {e:?}") })
}

/// Compares `d_H(h1, h2)`, measured in the factor's own Cayley graph, with
/// `d_G(h1, h2)` measured in a radius-`r` ball of the product, for every
/// pair of factor elements (indexed by the factor's table).
pub fn embedding_check(product: Arc<FreeProduct>, factor: usize, r: u32) -> Result<EmbeddingReport> {
    let Some(h) = product.factors().get(factor).cloned() else {
        return Err(Error::input(format!(
            "factor index {factor} out of range (product has {} factors)",
            product.factors().len()
        )));
    };
    let order = h.len();
    let label = h.label().to_string();
    let in_factor: Vec<Element> = (0..order).map(|i| h.element(i)).collect();
    let in_product: Vec<Element> = (0..order).map(|i| product.embed(factor, i)).collect();
    let factor_ball = CayleyBall::build(Arc::new(h), r, DEFAULT_ELEMENT_BUDGET)?;
    let product_ball = CayleyBall::build(product as Arc<dyn GroupOracle>, r, DEFAULT_ELEMENT_BUDGET)?;
    let fid = in_factor.iter().map(|e| locate(&factor_ball, e)).collect::<Result<Vec<_>>>()?;
    let pid = in_product.iter().map(|e| locate(&product_ball, e)).collect::<Result<Vec<_>>>()?;
    let mut mismatches = Vec::new();
    for a in 0..order {
        for b in 0..order {
            let d_factor = factor_ball.distance(fid[a], fid[b])?;
            let d_product = product_ball.distance(pid[a], pid[b])?;
            if d_factor != d_product {
                mismatches.push(EmbeddingMismatch { h1: a, h2: b, d_factor, d_product });
            }
        }
    }
    Ok(EmbeddingReport {
        factor,
        factor_label: label,
        radius: r,
        pairs: order * order,
        passed: mismatches.is_empty(),
        mismatches,
    })
}
