use std::collections::BTreeSet;

use super::{Chord, Triangulation};
use crate::error::{Error, Result};

/// Which of the three ways the triangle on arc `(p_i, p_{i+1})` collapses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionCase {
    /// Third vertex `j ∉ {i+2, i-1}`: chord `(i,j)` merges into `(i+1,j)`.
    MergeChords,
    /// `j = i+2`: chord `(i,i+2)` becomes the arc `(i+1,i+2)`.
    ChordBecomesArc,
    /// `j = i-1`: chord `(i-1,i+1)` is removed.
    RemoveChord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub triangulation: Triangulation,
    pub case: ContractionCase,
    /// Third vertex of the collapsed triangle, in the old numbering.
    pub third_vertex: usize,
}

/// Slides `p_i` counterclockwise onto `p_{i+1}` (indices mod `n`).
///
/// Chords at `p_i` are re-attached to `p_{i+1}`; chords that coincide or
/// turn into boundary arcs disappear. The merged point keeps the position of
/// `p_{i+1}` and the remaining points are renumbered `1..=n-1` in order.
pub fn contract_point(t: &Triangulation, i: usize) -> Result<Contraction> {
    let n = t.n();
    if n <= 3 {
        return Err(Error::input("contraction needs at least four points"));
    }
    if i == 0 || i > n {
        return Err(Error::input(format!("point {i} outside 1..={n}")));
    }
    let succ = |x: usize| x % n + 1;
    let pred = |x: usize| (x + n - 2) % n + 1;
    let ip = succ(i);
    let third = t
        .triangles()
        .into_iter()
        .find(|tri| tri.contains(&i) && tri.contains(&ip))
        .and_then(|tri| tri.into_iter().find(|&v| v != i && v != ip))
        .ok_or_else(|| Error::input("triangulation is not valid: arc lies on no triangle"))?;
    let case = if third == succ(ip) {
        ContractionCase::ChordBecomesArc
    } else if third == pred(i) {
        ContractionCase::RemoveChord
    } else {
        ContractionCase::MergeChords
    };
    let m = n - 1;
    let renumber = |x: usize| {
        let x = if x == i { ip } else { x };
        if x > i {
            x - 1
        } else {
            x
        }
    };
    let chords: BTreeSet<Chord> = t
        .chords()
        .filter_map(|c| Chord::new(m, renumber(c.i), renumber(c.j)).ok())
        .collect();
    Ok(Contraction { triangulation: Triangulation::from_chords(m, chords), case, third_vertex: third })
}
