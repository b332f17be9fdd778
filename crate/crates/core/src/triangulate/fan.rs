use std::collections::BTreeSet;

use super::{Chord, Triangulation};
use crate::error::{Error, Result};

/// Three-fan triangulation with every chord spanning at most `⌈n/3⌉` arcs.
///
/// With `c = ⌈n/3⌉` the chords are the fans
/// `p_n → p_i` for `2 ≤ i ≤ c`, `p_c → p_i` for `c+2 ≤ i ≤ 2c` and
/// `p_{2c} → p_i` for `2c+2 ≤ i ≤ n`, keeping only pairs that are genuine
/// chords and dropping repeats.
pub fn fan_triangulation(n: usize) -> Result<Triangulation> {
    if n == 0 {
        return Err(Error::input("a cycle has at least one point"));
    }
    if n <= 3 {
        return Ok(Triangulation::empty(n));
    }
    let c = n.div_ceil(3);
    let candidates = (2..=c)
        .map(|i| (n, i))
        .chain((c + 2..=2 * c).map(|i| (c, i)))
        .chain((2 * c + 2..=n).map(|i| (2 * c, i)));
    let chords: BTreeSet<Chord> = candidates.filter_map(|(a, b)| Chord::new(n, a, b).ok()).collect();
    Ok(Triangulation::from_chords(n, chords))
}
