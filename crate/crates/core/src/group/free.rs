use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

use super::{Element, GroupOracle};

/// Base generator names `a, b, c, ...` (or `x1, x2, ...` past 26).
pub(crate) fn base_names(rank: usize) -> Vec<String> {
    if rank <= 26 {
        (0..rank).map(|i| char::from(b'a' + i as u8).to_string()).collect()
    } else {
        (1..=rank).map(|i| format!("x{i}")).collect()
    }
}

/// Free group of finite rank; elements are freely reduced words.
#[derive(Debug, Clone)]
pub struct FreeGroup {
    rank: usize,
    alphabet: Alphabet,
}

impl FreeGroup {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::config("free group rank must be at least 1"));
        }
        Ok(Self { rank, alphabet: Alphabet::paired(&base_names(rank))? })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl GroupOracle for FreeGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Element {
        Element::default()
    }

    fn step(&self, g: &Element, s: Symbol) -> Element {
        let mut out = g.clone();
        match out.0.last() {
            Some(&t) if self.alphabet.inverse(Symbol(t as u16)) == s => {
                out.0.pop();
            }
            _ => out.0.push(s.0 as i32),
        }
        out
    }

    fn describe(&self) -> String {
        format!("free group of rank {}", self.rank)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_cancellation() {
        let f = FreeGroup::new(2).unwrap();
        let al = f.alphabet();
        let a = f.evaluate(&al.parse_word("a").unwrap());
        assert_eq!(f.step(&a, al.parse_symbol("a'").unwrap()), f.identity());
    }

    #[test]
    fn evaluate_reduces_freely() {
        let f = FreeGroup::new(2).unwrap();
        let al = f.alphabet();
        assert!(f.is_identity_word(&al.parse_word("a,b,b',a'").unwrap()));
        assert!(!f.is_identity_word(&al.parse_word("a,b,a',b'").unwrap()));
        let ab = f.evaluate(&al.parse_word("a,b").unwrap());
        let reduced: crate::alphabet::Word = ab.word_symbols().collect();
        assert_eq!(al.format_word(&reduced), "a,b");
    }

    #[test]
    fn rank_zero_rejected() {
        assert!(FreeGroup::new(0).is_err());
    }

    #[test]
    fn large_rank_names() {
        assert_eq!(base_names(27)[26], "x27");
        assert_eq!(base_names(3), vec!["a", "b", "c"]);
    }
}
