use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

use super::free::base_names;
use super::{Element, GroupOracle};

/// Free abelian group `Z^rank`, optionally with extra generators given as
/// integer vectors (each added together with its inverse).
#[derive(Debug, Clone)]
pub struct FreeAbelianGroup {
    rank: usize,
    alphabet: Alphabet,
    /// Translation vector of every symbol.
    moves: Vec<Vec<i32>>,
}

impl FreeAbelianGroup {
    pub fn new(rank: usize) -> Result<Self> {
        Self::with_extra_generators(rank, &[])
    }

    /// `Z^rank` generated by the unit vectors plus `extra`. Zero vectors and
    /// repeated generators are rejected.
    pub fn with_extra_generators(rank: usize, extra: &[Vec<i32>]) -> Result<Self> {
        if rank == 0 {
            return Err(Error::config("free abelian rank must be at least 1"));
        }
        let total = rank + extra.len();
        let mut names = base_names(total);
        names.truncate(total);
        let mut moves: Vec<Vec<i32>> = Vec::with_capacity(2 * total);
        for k in 0..rank {
            let mut e = vec![0; rank];
            e[k] = 1;
            moves.push(e.clone());
            moves.push(e.iter().map(|x| -x).collect());
        }
        for v in extra {
            if v.len() != rank {
                return Err(Error::config(format!(
                    "extra generator {v:?} has {} coordinates, expected {rank}",
                    v.len()
                )));
            }
            if v.iter().all(|&x| x == 0) {
                return Err(Error::config("extra generator is the identity"));
            }
            moves.push(v.clone());
            moves.push(v.iter().map(|x| -x).collect());
        }
        for i in 0..moves.len() {
            if moves[..i].contains(&moves[i]) {
                return Err(Error::config(format!("generator {:?} listed twice", moves[i])));
            }
        }
        Ok(Self { rank, alphabet: Alphabet::paired(&names)?, moves })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn element(&self, coords: &[i32]) -> Element {
        Element::from_slice(coords)
    }
}

impl GroupOracle for FreeAbelianGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Element {
        Element::from_slice(&vec![0; self.rank])
    }

    fn step(&self, g: &Element, s: Symbol) -> Element {
        let mut out = g.clone();
        for (x, d) in out.0.iter_mut().zip(&self.moves[s.index()]) {
            *x += d;
        }
        out
    }

    fn describe(&self) -> String {
        if self.moves.len() == 2 * self.rank {
            format!("free abelian group of rank {}", self.rank)
        } else {
            format!(
                "free abelian group of rank {} with {} extra generators",
                self.rank,
                self.moves.len() / 2 - self.rank
            )
        }
    }
}
