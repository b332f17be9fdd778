//! Identity words up to rotation and reversal-with-inversion.
//!
//! A word `w` of length `m` labels a closed walk from the identity exactly
//! when it represents the identity. Rotating `w` or replacing it by its
//! reversed inverse traces the same cycle (from another base point or in the
//! other direction), so one representative per class is enough: the
//! lexicographically least word among all rotations of `w` and of `w⁻¹`.
//! Symbols are ordered by alphabet index.

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::cayley::{CayleyBall, ElementId};
use crate::error::{Error, Result};
use crate::group::Element;

/// Compares rotation `k` of `a` with `b` (same length).
fn cmp_rotation(a: &[Symbol], k: usize, b: &[Symbol]) -> std::cmp::Ordering {
    let m = a.len();
    for t in 0..m {
        let o = a[(k + t) % m].cmp(&b[t]);
        if o.is_ne() {
            return o;
        }
    }
    std::cmp::Ordering::Equal
}

fn reversed_inverse(w: &[Symbol], al: &Alphabet) -> Vec<Symbol> {
    w.iter().rev().map(|&s| al.inverse(s)).collect()
}

/// Least word in the class of `w`.
pub fn canonical_form(w: &Word, al: &Alphabet) -> Word {
    let m = w.len();
    if m == 0 {
        return Word::empty();
    }
    let ri = reversed_inverse(w.as_slice(), al);
    let mut best = w.as_slice().to_vec();
    for src in [w.as_slice(), ri.as_slice()] {
        for k in 0..m {
            if cmp_rotation(src, k, &best).is_lt() {
                best = (0..m).map(|t| src[(k + t) % m]).collect();
            }
        }
    }
    Word::from(best)
}

/// Whether `w` is the least word of its class.
pub fn is_canonical(w: &[Symbol], al: &Alphabet) -> bool {
    let m = w.len();
    for k in 1..m {
        if cmp_rotation(w, k, w).is_lt() {
            return false;
        }
    }
    let ri = reversed_inverse(w, al);
    (0..m).all(|k| !cmp_rotation(&ri, k, w).is_lt())
}

#[derive(Clone, Copy, Debug)]
pub struct EnumerateOptions {
    /// Abandon a prefix of length `i` at `g` when `|g| > m - i`. Turning
    /// this off walks every word through the group oracle instead of the
    /// ball.
    pub prune: bool,
    /// Maximum number of classes to return.
    pub limit: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        Self { prune: true, limit: u64::MAX }
    }
}

struct Search<'a> {
    ball: &'a CayleyBall,
    m: usize,
    /// Symbols `s` with `s >= first` and `s⁻¹ >= first`, for each `first`.
    allowed: Vec<Vec<Symbol>>,
    word: Vec<Symbol>,
    out: Vec<Word>,
    limit: u64,
}

impl Search<'_> {
    fn emit(&mut self) -> Result<()> {
        if is_canonical(&self.word, self.ball.alphabet()) {
            if self.out.len() as u64 >= self.limit {
                return Err(Error::Budget { what: "identity cycle classes", limit: self.limit });
            }
            self.out.push(Word::from(self.word.clone()));
        }
        Ok(())
    }

    fn pruned(&mut self, g: ElementId) -> Result<()> {
        let i = self.word.len();
        if i == self.m {
            return if g == ElementId::IDENTITY { self.emit() } else { Ok(()) };
        }
        let first = self.word[0].index();
        for t in 0..self.allowed[first].len() {
            let s = self.allowed[first][t];
            // Leaving the ball also means |h| > m - i - 1 (see `identity_cycles`).
            let Some(h) = self.ball.walk(g, s) else { continue };
            if self.ball.norm(h) as usize > self.m - i - 1 {
                continue;
            }
            self.word.push(s);
            self.pruned(h)?;
            self.word.pop();
        }
        Ok(())
    }

    fn unpruned(&mut self, g: &Element) -> Result<()> {
        let group = self.ball.group();
        if self.word.len() == self.m {
            return if group.same_element(g, &group.identity()) { self.emit() } else { Ok(()) };
        }
        let first = self.word[0].index();
        for t in 0..self.allowed[first].len() {
            let s = self.allowed[first][t];
            let h = group.step(g, s);
            self.word.push(s);
            self.unpruned(&h)?;
            self.word.pop();
        }
        Ok(())
    }
}

/// Class representatives of identity words of length exactly `m`, in
/// lexicographic order.
///
/// Needs a ball of radius at least `⌊m/2⌋`: a surviving prefix of length `i`
/// ends at distance at most `min(i, m - i)`, and a step that leaves such a
/// ball lands beyond `m - i - 1` anyway.
pub fn identity_cycles(ball: &CayleyBall, m: usize, opts: &EnumerateOptions) -> Result<Vec<Word>> {
    if ball.radius() < (m / 2) as u32 {
        return Err(Error::OutOfRange {
            radius: ball.radius(),
            what: format!("enumerating cycles of length {m} needs radius {}", m / 2),
        });
    }
    if m == 0 {
        return Ok(Vec::new());
    }
    let al = ball.alphabet();
    let allowed = al
        .symbols()
        .map(|f| al.symbols().filter(|&s| s >= f && al.inverse(s) >= f).collect())
        .collect();
    let mut search = Search { ball, m, allowed, word: Vec::with_capacity(m), out: Vec::new(), limit: opts.limit };
    let group = ball.group().clone();
    for first in al.symbols() {
        if al.inverse(first) < first {
            continue;
        }
        search.word.push(first);
        if opts.prune {
            if let Some(g) = ball.walk(ElementId::IDENTITY, first) {
                if ball.norm(g) as usize <= m - 1 {
                    search.pruned(g)?;
                }
            }
        } else {
            search.unpruned(&group.step(&group.identity(), first))?;
        }
        search.word.pop();
    }
    Ok(search.out)
}

/// Class representatives of identity words of every length `1..=n`, shortest
/// first.
pub fn enumerate_identity_cycles(ball: &CayleyBall, n: usize, opts: &EnumerateOptions) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    let mut opts = *opts;
    for m in 1..=n {
        let found = identity_cycles(ball, m, &opts)?;
        opts.limit = opts.limit.saturating_sub(found.len() as u64);
        out.extend(found);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::DEFAULT_ELEMENT_BUDGET;
    use crate::group::{FiniteGroup, FreeAbelianGroup, FreeGroup, GroupOracle};
    use std::sync::Arc;

    fn ball(g: Arc<dyn GroupOracle>, r: u32) -> CayleyBall {
        CayleyBall::build(g, r, DEFAULT_ELEMENT_BUDGET).unwrap()
    }

    fn names(b: &CayleyBall, ws: &[Word]) -> Vec<String> {
        ws.iter().map(|w| b.alphabet().format_word(w)).collect()
    }

    #[test]
    fn integers_length_two() {
        let b = ball(Arc::new(FreeGroup::new(1).unwrap()), 1);
        let got = identity_cycles(&b, 2, &Default::default()).unwrap();
        assert_eq!(names(&b, &got), ["a,a'"]);
    }

    #[test]
    fn z2_length_two() {
        let b = ball(Arc::new(FreeAbelianGroup::new(2).unwrap()), 1);
        let got = identity_cycles(&b, 2, &Default::default()).unwrap();
        assert_eq!(names(&b, &got), ["a,a'", "b,b'"]);
    }

    #[test]
    fn no_length_one_cycles() {
        let b = ball(Arc::new(FreeAbelianGroup::new(2).unwrap()), 1);
        assert!(identity_cycles(&b, 1, &Default::default()).unwrap().is_empty());
    }

    #[test]
    fn z2_commutator_class() {
        let b = ball(Arc::new(FreeAbelianGroup::new(2).unwrap()), 2);
        let got = names(&b, &identity_cycles(&b, 4, &Default::default()).unwrap());
        assert!(got.contains(&"a,b,a',b'".to_string()));
        assert!(!got.contains(&"b,a',b',a".to_string()));
    }

    #[test]
    fn cyclic_group_triangles() {
        // C3 with generators x, x^2: x,x,x and x^2,x^2,x^2 are one class
        let g = Arc::new(FiniteGroup::cyclic(3).unwrap());
        let b = ball(g, 1);
        let got = identity_cycles(&b, 3, &Default::default()).unwrap();
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn prune_matches_unpruned() {
        for g in [
            Arc::new(FreeGroup::new(2).unwrap()) as Arc<dyn GroupOracle>,
            Arc::new(FreeAbelianGroup::new(2).unwrap()),
        ] {
            let b = ball(g, 3);
            for m in 1..=6 {
                let a = identity_cycles(&b, m, &EnumerateOptions { prune: true, ..Default::default() }).unwrap();
                let c = identity_cycles(&b, m, &EnumerateOptions { prune: false, ..Default::default() }).unwrap();
                assert_eq!(a, c, "m = {m}");
            }
        }
    }

    #[test]
    fn canonical_form_is_class_minimum() {
        let al = Alphabet::paired(&["a", "b"]).unwrap();
        let w = al.parse_word("b,a',b',a").unwrap();
        assert_eq!(al.format_word(&canonical_form(&w, &al)), "a,b,a',b'");
        assert!(is_canonical(canonical_form(&w, &al).as_slice(), &al));
        assert!(!is_canonical(w.as_slice(), &al));
    }

    #[test]
    fn needs_radius() {
        let b = ball(Arc::new(FreeGroup::new(2).unwrap()), 2);
        assert!(matches!(identity_cycles(&b, 6, &Default::default()), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn limit_is_enforced() {
        let b = ball(Arc::new(FreeGroup::new(2).unwrap()), 3);
        let r = enumerate_identity_cycles(&b, 6, &EnumerateOptions { prune: true, limit: 3 });
        assert!(matches!(r, Err(Error::Budget { .. })));
    }
}
