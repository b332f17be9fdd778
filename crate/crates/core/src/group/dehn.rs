//! Finitely presented groups satisfying the metric small-cancellation
//! condition C'(1/6), with the word problem solved by Dehn's algorithm.

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};

use super::{Element, GroupOracle};

/// A maximal common prefix of two distinct cyclic conjugates of relators or
/// their inverses.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    pub word: Word,
    /// Length of the shorter relator containing the piece.
    pub relator_len: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SmallCancellationReport {
    /// Largest `|piece| / |relator|` over all pieces.
    pub max_piece_ratio: f64,
    pub worst_piece: Option<Piece>,
    /// `max_piece_ratio < 1/6`.
    pub passes: bool,
}

/// One cyclic conjugate of a relator or of its inverse. Conjugates at
/// different shifts count as different even when they spell the same word,
/// so proper powers produce long pieces.
struct Conjugate {
    relator: usize,
    word: Word,
}

fn symmetrize(alphabet: &Alphabet, relators: &[Word]) -> Vec<Conjugate> {
    let mut out = Vec::new();
    for (i, r) in relators.iter().enumerate() {
        let inv = r.inverse(alphabet);
        for base in [r, &inv] {
            for k in 0..base.len() {
                out.push(Conjugate { relator: i, word: base.rotated(k) });
            }
        }
    }
    out
}

fn common_prefix(a: &[Symbol], b: &[Symbol]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Enumerates all pieces among the symmetrized relators and checks that each
/// is shorter than one sixth of every relator containing it.
pub fn check_small_cancellation(alphabet: &Alphabet, relators: &[Word]) -> Result<SmallCancellationReport> {
    if relators.is_empty() {
        return Err(Error::input("relator list is empty"));
    }
    for r in relators {
        alphabet.check_word(r)?;
        if r.is_empty() {
            return Err(Error::input("empty relator"));
        }
        if !r.is_cyclically_reduced(alphabet) {
            return Err(Error::input(format!(
                "relator {} is not cyclically reduced",
                alphabet.format_word(r)
            )));
        }
    }
    let conj = symmetrize(alphabet, relators);
    let mut best: Option<(f64, Piece)> = None;
    for (x, cx) in conj.iter().enumerate() {
        for cy in &conj[x + 1..] {
            let l = common_prefix(cx.word.as_slice(), cy.word.as_slice());
            if l == 0 {
                continue;
            }
            let rel_len = relators[cx.relator].len().min(relators[cy.relator].len());
            let ratio = l as f64 / rel_len as f64;
            if best.as_ref().is_none_or(|(b, _)| ratio > *b) {
                best = Some((ratio, Piece { word: cx.word.subword(0, l), relator_len: rel_len }));
            }
        }
    }
    let (ratio, piece) = match best {
        Some((r, p)) => (r, Some(p)),
        None => (0.0, None),
    };
    Ok(SmallCancellationReport { max_piece_ratio: ratio, worst_piece: piece, passes: 6.0 * ratio < 1.0 })
}

/// A C'(1/6) presentation. Construction fails unless the metric check
/// passes, since only then is Dehn's algorithm a complete word-problem
/// solver.
#[derive(Debug, Clone)]
pub struct DehnPresentation {
    alphabet: Alphabet,
    relators: Vec<Word>,
    /// Distinct symmetrized relators, bucketed by first symbol.
    by_first: Vec<Vec<Word>>,
    report: SmallCancellationReport,
    /// Generators whose exponent sum vanishes on every relator.
    invariant_pairs: Vec<(Symbol, Symbol)>,
    even_relators: bool,
}

impl DehnPresentation {
    pub fn new(alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        let report = check_small_cancellation(&alphabet, &relators)?;
        if !report.passes {
            return Err(Error::config(format!(
                "presentation fails C'(1/6): max piece ratio {:.4}",
                report.max_piece_ratio
            )));
        }
        let mut by_first = vec![Vec::new(); alphabet.len()];
        let mut seen = HashSet::new();
        for c in symmetrize(&alphabet, &relators) {
            if seen.insert(c.word.clone()) {
                by_first[c.word[0].index()].push(c.word);
            }
        }
        let mut invariant_pairs = Vec::new();
        let mut done = vec![false; alphabet.len()];
        for s in alphabet.symbols() {
            let t = alphabet.inverse(s);
            if done[s.index()] || s == t {
                continue;
            }
            done[s.index()] = true;
            done[t.index()] = true;
            let balanced = relators.iter().all(|r| {
                let sum: i64 = r.iter().map(|x| (x == s) as i64 - (x == t) as i64).sum();
                sum == 0
            });
            if balanced {
                invariant_pairs.push((s, t));
            }
        }
        let even_relators = relators.iter().all(|r| r.len() % 2 == 0);
        Ok(Self { alphabet, relators, by_first, report, invariant_pairs, even_relators })
    }

    /// Parses the relator file format: one relator per line, symbols comma
    /// separated, `'` marking inverses. Blank lines and `#` comments are
    /// skipped. Generators are ordered by first appearance.
    pub fn from_relator_text(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let mut bases: Vec<String> = Vec::new();
        for line in &lines {
            for tok in line.split(',') {
                let tok = tok.trim();
                let base = tok.trim_end_matches('\'');
                if base.is_empty() {
                    return Err(Error::input(format!("bad symbol {tok:?} in relator {line:?}")));
                }
                if !bases.iter().any(|b| b == base) {
                    bases.push(base.to_string());
                }
            }
        }
        if bases.is_empty() {
            return Err(Error::input("relator file contains no relators"));
        }
        let alphabet = Alphabet::paired(&bases)?;
        let relators = lines
            .iter()
            .map(|l| alphabet.parse_word(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, relators)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        Self::from_relator_text(&std::fs::read_to_string(path)?)
    }

    /// Orientable closed surface group of genus `g >= 2`:
    /// `<a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>`.
    pub fn surface(genus: usize) -> Result<Self> {
        if genus < 2 {
            return Err(Error::config("surface group presentation needs genus >= 2"));
        }
        let bases: Vec<String> = (1..=genus)
            .flat_map(|i| [format!("a{i}"), format!("b{i}")])
            .collect();
        let alphabet = Alphabet::paired(&bases)?;
        let mut r = Word::empty();
        for i in 0..genus {
            let (a, b) = (Symbol((4 * i) as u16), Symbol((4 * i + 2) as u16));
            for s in [a, b, alphabet.inverse(a), alphabet.inverse(b)] {
                r.push(s);
            }
        }
        Self::new(alphabet, vec![r])
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn report(&self) -> &SmallCancellationReport {
        &self.report
    }

    /// Dehn's algorithm: free reduction interleaved with replacing any
    /// subword that is more than half of a symmetrized relator `uv` (the
    /// subword being `u`) by the shorter `v⁻¹`.
    pub fn dehn_reduce(&self, w: &Word) -> Word {
        let al = &self.alphabet;
        let mut w = w.free_reduce(al);
        'scan: loop {
            let s = w.as_slice();
            for i in 0..s.len() {
                for r in &self.by_first[s[i].index()] {
                    let l = common_prefix(&s[i..], r.as_slice());
                    if 2 * l > r.len() {
                        let mut next: Word = s[..i].iter().copied().collect();
                        next.extend_from(&r.subword(l, r.len()).inverse(al));
                        next.extend_from(&s[i + l..].iter().copied().collect());
                        w = next.free_reduce(al);
                        continue 'scan;
                    }
                }
            }
            return w;
        }
    }

    fn word_of(g: &Element) -> Word {
        g.word_symbols().collect()
    }
}

impl GroupOracle for DehnPresentation {
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
        let rels: Vec<String> = self.relators.iter().map(|r| self.alphabet.format_word(r)).collect();
        format!("presentation <{} | {}>", self.alphabet.names().join(","), rels.join("; "))
    }

    fn is_identity_word(&self, w: &Word) -> bool {
        self.dehn_reduce(w).is_empty()
    }

    fn is_canonical(&self) -> bool {
        false
    }

    fn same_element(&self, a: &Element, b: &Element) -> bool {
        if a == b {
            return true;
        }
        let w = Self::word_of(a).concat(&Self::word_of(b).inverse(&self.alphabet));
        self.is_identity_word(&w)
    }

    fn invariant(&self, g: &Element) -> Vec<i64> {
        let w = Self::word_of(g);
        let mut key: Vec<i64> = self
            .invariant_pairs
            .iter()
            .map(|&(s, t)| w.iter().map(|x| (x == s) as i64 - (x == t) as i64).sum())
            .collect();
        if self.even_relators {
            key.push((w.len() % 2) as i64);
        }
        key
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const GENUS2: &str = "a,b,a',b',c,d,c',d'\n";

    #[test]
    fn genus_two_passes_with_ratio_one_eighth() {
        let g = DehnPresentation::from_relator_text(GENUS2).unwrap();
        assert_eq!(g.report().max_piece_ratio, 1.0 / 8.0);
        assert!(g.report().passes);
        assert_eq!(g.alphabet().len(), 8);
    }

    #[test]
    fn proper_power_fails() {
        let al = Alphabet::paired(&["a"]).unwrap();
        let r = al.parse_word("a,a,a,a").unwrap();
        let rep = check_small_cancellation(&al, &[r.clone()]).unwrap();
        assert!(!rep.passes);
        assert!(rep.max_piece_ratio >= 1.0 / 6.0);
        assert!(DehnPresentation::new(al, vec![r]).is_err());
    }

    #[test]
    fn malformed_relators() {
        let al = Alphabet::paired(&["a", "b"]).unwrap();
        assert!(check_small_cancellation(&al, &[]).is_err());
        let not_cyc = al.parse_word("a,b,a'").unwrap();
        assert!(matches!(check_small_cancellation(&al, &[not_cyc]), Err(Error::Input(_))));
        assert!(DehnPresentation::from_relator_text("# nothing\n\n").is_err());
    }

    #[test]
    fn relator_and_conjugates_are_trivial() {
        let g = DehnPresentation::from_relator_text(GENUS2).unwrap();
        let r = &g.relators()[0];
        for k in 0..r.len() {
            assert!(g.is_identity_word(&r.rotated(k)));
            assert!(g.is_identity_word(&r.rotated(k).inverse(g.alphabet())));
        }
    }

    #[test]
    fn dehn_reduction_transcript() {
        let g = DehnPresentation::from_relator_text(GENUS2).unwrap();
        let al = g.alphabet();
        // five letters of the relator become the inverse of the remaining three
        let w = al.parse_word("a,b,a',b',c").unwrap();
        assert_eq!(al.format_word(&g.dehn_reduce(&w)), "d,c,d'");
        assert!(!g.is_identity_word(&al.parse_word("a,b,a',b'").unwrap()));
        assert!(!g.is_identity_word(&al.parse_word("a").unwrap()));
        let conj = al.parse_word("c,a,b,a',b',c,d,c',d',c'").unwrap();
        assert!(g.is_identity_word(&conj));
    }

    #[test]
    fn invariant_respects_equality() {
        let g = DehnPresentation::from_relator_text(GENUS2).unwrap();
        let al = g.alphabet();
        let x = g.evaluate(&al.parse_word("a,b,a',b',c").unwrap());
        let y = g.evaluate(&al.parse_word("d,c,d'").unwrap());
        assert!(g.same_element(&x, &y));
        assert_eq!(g.invariant(&x), g.invariant(&y));
    }

    #[test]
    fn surface_builder_matches_text() {
        let g = DehnPresentation::surface(2).unwrap();
        assert_eq!(g.report().max_piece_ratio, 0.125);
        assert!(DehnPresentation::surface(1).is_err());
    }
}
