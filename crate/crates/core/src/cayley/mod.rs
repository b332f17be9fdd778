//! Finite balls in the Cayley graph and word-metric queries.
//!
//! A [`CayleyBall`] of radius `r` holds every element within distance `r` of
//! the identity, discovered breadth first with generators tried in alphabet
//! order. The first discovery of an element fixes its canonical geodesic, so
//! geodesics returned by the ball are deterministic. Elements are addressed
//! by [`ElementId`], their index in discovery order.

mod cache;
mod thin;

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::{Error, Result};
use crate::group::{Element, GroupOracle};

pub use cache::{cache_path, load_or_build, BallCacheEntry, BallCacheFile};
pub use thin::{thinness_delta, thinness_delta_all_geodesics, thinness_in_ball, ThinWitness, ThinnessOptions, ThinnessReport};

pub const DEFAULT_ELEMENT_BUDGET: usize = 2_000_000;

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug)]
enum Index {
    Exact(HashMap<Element, u32>),
    /// For oracles without canonical forms: invariant key to candidates.
    Buckets(HashMap<Vec<i64>, Vec<u32>>),
}

#[derive(Debug)]
pub struct CayleyBall {
    group: Arc<dyn GroupOracle>,
    radius: u32,
    elements: Vec<Element>,
    dist: Vec<u32>,
    /// Last letter of the canonical geodesic and the element it extends.
    parent: Vec<Option<(Symbol, u32)>>,
    /// `next[id * |S| + s]` is the id of `g·s`, or `NONE` outside the ball.
    next: Vec<u32>,
    index: Index,
}

impl CayleyBall {
    fn empty(group: Arc<dyn GroupOracle>, radius: u32) -> Self {
        let index = if group.is_canonical() {
            Index::Exact(HashMap::new())
        } else {
            Index::Buckets(HashMap::new())
        };
        Self {
            group,
            radius,
            elements: Vec::new(),
            dist: Vec::new(),
            parent: Vec::new(),
            next: Vec::new(),
            index,
        }
    }

    fn insert(&mut self, e: Element, dist: u32, parent: Option<(Symbol, u32)>) -> u32 {
        let id = self.elements.len() as u32;
        match &mut self.index {
            Index::Exact(map) => {
                map.insert(e.clone(), id);
            }
            Index::Buckets(map) => map.entry(self.group.invariant(&e)).or_default().push(id),
        }
        self.elements.push(e);
        self.dist.push(dist);
        self.parent.push(parent);
        self.next.extend(std::iter::repeat_n(NONE, self.group.alphabet().len()));
        id
    }

    /// Breadth-first ball of radius `radius` around the identity.
    ///
    /// Fails with a budget error once more than `budget` elements would be
    /// stored.
    pub fn build(group: Arc<dyn GroupOracle>, radius: u32, budget: usize) -> Result<Self> {
        let mut ball = Self::empty(group.clone(), radius);
        ball.insert(group.identity(), 0, None);
        let nsym = group.alphabet().len();
        let mut cursor = 0usize;
        while cursor < ball.elements.len() {
            let d = ball.dist[cursor];
            for s in group.alphabet().symbols() {
                if ball.next[cursor * nsym + s.index()] != NONE {
                    continue;
                }
                let h = group.step(&ball.elements[cursor], s);
                let target = match ball.lookup(&h) {
                    Some(j) => j.0,
                    None if d < radius => {
                        if ball.elements.len() >= budget {
                            return Err(Error::Budget { what: "ball elements", limit: budget as u64 });
                        }
                        ball.insert(h, d + 1, Some((s, cursor as u32)))
                    }
                    None => NONE,
                };
                ball.next[cursor * nsym + s.index()] = target;
                if target != NONE {
                    let back = group.alphabet().inverse(s);
                    ball.next[target as usize * nsym + back.index()] = cursor as u32;
                }
            }
            cursor += 1;
        }
        Ok(ball)
    }

    pub fn group(&self) -> &Arc<dyn GroupOracle> {
        &self.group
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.group.alphabet()
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ElementId> {
        (0..self.elements.len() as u32).map(ElementId)
    }

    pub fn element(&self, id: ElementId) -> &Element {
        &self.elements[id.index()]
    }

    /// Word length of an element.
    #[inline]
    pub fn norm(&self, id: ElementId) -> u32 {
        self.dist[id.index()]
    }

    pub fn parent(&self, id: ElementId) -> Option<(Symbol, ElementId)> {
        self.parent[id.index()].map(|(s, p)| (s, ElementId(p)))
    }

    /// Neighbour `g·s` if it lies in the ball.
    #[inline]
    pub fn walk(&self, id: ElementId, s: Symbol) -> Option<ElementId> {
        let j = self.next[id.index() * self.group.alphabet().len() + s.index()];
        (j != NONE).then_some(ElementId(j))
    }

    /// Follows a word from `start` through the ball's adjacency.
    pub fn walk_word(&self, start: ElementId, w: &Word) -> Option<ElementId> {
        w.iter().try_fold(start, |g, s| self.walk(g, s))
    }

    pub fn lookup(&self, e: &Element) -> Option<ElementId> {
        match &self.index {
            Index::Exact(map) => map.get(e).map(|&i| ElementId(i)),
            Index::Buckets(map) => map.get(&self.group.invariant(e)).and_then(|cands| {
                cands
                    .iter()
                    .find(|&&i| self.group.same_element(&self.elements[i as usize], e))
                    .map(|&i| ElementId(i))
            }),
        }
    }

    /// Ball element represented by a word, via the oracle (the path may leave
    /// the ball).
    pub fn locate(&self, w: &Word) -> Option<ElementId> {
        self.walk_word(ElementId::IDENTITY, w)
            .or_else(|| self.lookup(&self.group.evaluate(w)))
    }

    /// The canonical (first BFS) geodesic word from the identity.
    pub fn word_of(&self, id: ElementId) -> Word {
        let mut letters = Vec::with_capacity(self.norm(id) as usize);
        let mut cur = id;
        while let Some((s, p)) = self.parent(cur) {
            letters.push(s);
            cur = p;
        }
        letters.reverse();
        Word::from(letters)
    }

    /// Number of elements at each distance `0..=radius`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.radius as usize + 1];
        for &d in &self.dist {
            out[d as usize] += 1;
        }
        out
    }

    /// Cumulative ball sizes `|B(k)|` for `k = 0..=radius`.
    pub fn ball_sizes(&self) -> Vec<usize> {
        self.sphere_sizes()
            .iter()
            .scan(0, |acc, &x| {
                *acc += x;
                Some(*acc)
            })
            .collect()
    }

    fn offset(&self, g: ElementId, h: ElementId) -> Result<ElementId> {
        if g == h {
            return Ok(ElementId::IDENTITY);
        }
        let al = self.alphabet();
        let w = self.word_of(g).inverse(al).concat(&self.word_of(h)).free_reduce(al);
        self.locate(&w).ok_or_else(|| Error::OutOfRange {
            radius: self.radius,
            what: format!("g⁻¹h = {}", al.format_word(&w)),
        })
    }

    /// Word-metric distance `d(g, h) = |g⁻¹h|`.
    pub fn distance(&self, g: ElementId, h: ElementId) -> Result<u32> {
        Ok(self.norm(self.offset(g, h)?))
    }

    /// Canonical geodesic label from `g` to `h`: a shortest word for `g⁻¹h`.
    pub fn geodesic(&self, g: ElementId, h: ElementId) -> Result<Word> {
        Ok(self.word_of(self.offset(g, h)?))
    }

    /// Length of the element a word represents, if it lies in the ball.
    pub fn word_norm(&self, w: &Word) -> Option<u32> {
        let w = w.free_reduce(self.alphabet());
        self.locate(&w).map(|id| self.norm(id))
    }

    /// Ball neighbours one step closer to the identity, with the symbol that
    /// leads from the neighbour to `id`.
    pub fn predecessors(&self, id: ElementId) -> Vec<(ElementId, Symbol)> {
        let al = self.alphabet();
        let d = self.norm(id);
        al.symbols()
            .filter_map(|s| {
                let j = self.walk(id, s)?;
                (d > 0 && self.norm(j) == d - 1).then(|| (j, al.inverse(s)))
            })
            .collect()
    }

    /// Every geodesic word from the identity to `id`, in lexicographic order,
    /// or `None` when there are more than `limit`.
    pub fn all_geodesics(&self, id: ElementId, limit: usize) -> Option<Vec<Word>> {
        let mut out = Vec::new();
        let mut suffix = Vec::new();
        if !self.collect_geodesics(id, &mut suffix, &mut out, limit) {
            return None;
        }
        out.sort();
        Some(out)
    }

    fn collect_geodesics(&self, id: ElementId, suffix: &mut Vec<Symbol>, out: &mut Vec<Word>, limit: usize) -> bool {
        if self.norm(id) == 0 {
            if out.len() >= limit {
                return false;
            }
            out.push(suffix.iter().rev().copied().collect());
            return true;
        }
        for (p, s) in self.predecessors(id) {
            suffix.push(s);
            let ok = self.collect_geodesics(p, suffix, out, limit);
            suffix.pop();
            if !ok {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{DehnPresentation, FreeAbelianGroup, FreeGroup};

    fn free2(r: u32) -> CayleyBall {
        CayleyBall::build(Arc::new(FreeGroup::new(2).unwrap()), r, DEFAULT_ELEMENT_BUDGET).unwrap()
    }

    fn z2(r: u32) -> CayleyBall {
        CayleyBall::build(Arc::new(FreeAbelianGroup::new(2).unwrap()), r, DEFAULT_ELEMENT_BUDGET).unwrap()
    }

    #[test]
    fn free_ball_counts() {
        assert_eq!(free2(1).len(), 5);
        assert_eq!(free2(2).len(), 17);
    }

    #[test]
    fn abelian_ball_counts() {
        let b = z2(2);
        assert_eq!(b.len(), 13);
        assert_eq!(b.sphere_sizes(), vec![1, 4, 8]);
    }

    #[test]
    fn budget_is_enforced() {
        let err = CayleyBall::build(Arc::new(FreeGroup::new(2).unwrap()), 6, 100).unwrap_err();
        assert!(matches!(err, Error::Budget { limit: 100, .. }));
    }

    #[test]
    fn distances() {
        let b = z2(3);
        let al = b.alphabet().clone();
        let a = b.locate(&al.parse_word("a").unwrap()).unwrap();
        let bb = b.locate(&al.parse_word("b").unwrap()).unwrap();
        assert_eq!(b.distance(a, a).unwrap(), 0);
        assert_eq!(b.distance(a, bb).unwrap(), 2);

        let f = free2(3);
        let ab = f.locate(&f.alphabet().parse_word("a,b").unwrap()).unwrap();
        assert_eq!(f.distance(ab, ElementId::IDENTITY).unwrap(), 2);
    }

    #[test]
    fn geodesics() {
        let b = z2(3);
        let al = b.alphabet().clone();
        let x = b.locate(&al.parse_word("b,a").unwrap()).unwrap();
        let w = b.geodesic(ElementId::IDENTITY, x).unwrap();
        assert_eq!(al.format_word(&w), "a,b");
        assert!(b.geodesic(x, x).unwrap().is_empty());

        let f = free2(3);
        let al = f.alphabet().clone();
        let a = f.locate(&al.parse_word("a").unwrap()).unwrap();
        let ab = f.locate(&al.parse_word("a,b").unwrap()).unwrap();
        assert_eq!(al.format_word(&f.geodesic(a, ab).unwrap()), "b");
    }

    #[test]
    fn out_of_range() {
        let f = free2(2);
        let al = f.alphabet().clone();
        let x = f.locate(&al.parse_word("a,a").unwrap()).unwrap();
        let y = f.locate(&al.parse_word("b,b").unwrap()).unwrap();
        assert!(matches!(f.distance(x, y), Err(Error::OutOfRange { radius: 2, .. })));
    }

    #[test]
    fn all_geodesics_in_z2() {
        let b = z2(4);
        let x = b.locate(&b.alphabet().parse_word("a,a,b,b").unwrap()).unwrap();
        let all = b.all_geodesics(x, 100).unwrap();
        assert_eq!(all.len(), 6);
        assert!(b.all_geodesics(x, 5).is_none());
    }

    #[test]
    fn surface_group_ball() {
        let g = Arc::new(DehnPresentation::surface(2).unwrap());
        let b = CayleyBall::build(g, 3, DEFAULT_ELEMENT_BUDGET).unwrap();
        // sphere sizes of the genus-2 surface group with standard generators
        assert_eq!(b.sphere_sizes(), vec![1, 8, 56, 392]);
    }
}
