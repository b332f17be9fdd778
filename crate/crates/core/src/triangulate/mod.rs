//! Diagonal triangulations of a circle with `n` distinguished points.
//!
//! Points are numbered `1..=n` counterclockwise. Circularly adjacent points
//! (including `n` and `1`) are joined by boundary arcs; every other pair may
//! be joined by a [`Chord`]. A [`Triangulation`] is a set of pairwise
//! non-crossing chords cutting the disc into triangles; circles with at most
//! three points are triangulated by the empty chord set.

mod balanced;
mod contract;
mod fan;
mod minmax;
mod random;
mod tripod;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use balanced::{find_balanced_chord, BalancedChord};
pub use contract::{contract_point, Contraction, ContractionCase};
pub use fan::fan_triangulation;
pub use minmax::{
    chord_length_table, min_max_k, min_max_triangulation, score, score_with_table, ChordLengths, Cycle, ScoredTriangulation,
};
pub use random::{catalan, random_triangulation};
pub use tripod::{arc_partitions, tripod_triangle, ArcPartition};

/// A chord between distinguished points `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord {
    pub i: usize,
    pub j: usize,
}

impl Chord {
    /// Normalises the endpoint order and rejects boundary arcs.
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if i == 0 || j > n {
            return Err(Error::input(format!("chord ({a},{b}) outside points 1..={n}")));
        }
        if j - i < 2 || (i == 1 && j == n) {
            return Err(Error::input(format!("({a},{b}) joins neighbouring points on the {n}-circle")));
        }
        Ok(Chord { i, j })
    }

    /// Lengths `(d, e)` of the two boundary arcs cut off, `d <= e`.
    pub fn split(&self, n: usize) -> (usize, usize) {
        let span = self.j - self.i;
        (span.min(n - span), span.max(n - span))
    }

    /// Whether two chords cross in the interior of the disc.
    pub fn crosses(&self, other: &Chord) -> bool {
        let (a, b) = (self, other);
        (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangulation {
    n: usize,
    chords: BTreeSet<Chord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BadChord(Chord),
    Crossing(Chord, Chord),
    ChordCount { expected: usize, found: usize },
    NonTriangularFace(Vec<usize>),
    /// Boundary arc `(i, i+1)` is not a side of exactly one triangle.
    Arc(usize),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Triangulation {
    /// Builds a chord set without checking it; see [`Triangulation::validate`].
    pub fn from_chords(n: usize, chords: impl IntoIterator<Item = Chord>) -> Self {
        Self { n, chords: chords.into_iter().collect() }
    }

    /// Builds from endpoint pairs, normalising order. Errors on pairs that are
    /// not chords of the `n`-circle.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let chords = pairs.iter().map(|&(a, b)| Chord::new(n, a, b)).collect::<Result<BTreeSet<_>>>()?;
        Ok(Self { n, chords })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, chords: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn chords(&self) -> impl ExactSizeIterator<Item = &Chord> {
        self.chords.iter()
    }

    pub fn chord_count(&self) -> usize {
        self.chords.len()
    }

    pub fn contains(&self, c: &Chord) -> bool {
        self.chords.contains(c)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.chords.iter().map(|c| (c.i, c.j)).collect()
    }

    /// Neighbours of each point (boundary arcs and chords), sorted by
    /// counterclockwise offset from the point.
    fn rotation(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
        let mut link = |a: usize, b: usize| {
            if a != b && !adj[a].contains(&b) {
                adj[a].push(b);
                adj[b].push(a);
            }
        };
        for v in 1..=n {
            link(v, v % n + 1);
        }
        for c in &self.chords {
            if c.i >= 1 && c.j <= n {
                link(c.i, c.j);
            }
        }
        for (v, list) in adj.iter_mut().enumerate().skip(1) {
            list.sort_by_key(|&x| (x + n - v) % n);
        }
        adj
    }

    /// Interior faces, each as its vertex cycle, traced through the
    /// rotation system. The outer face (reversed boundary) is omitted.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        if n < 3 {
            return Vec::new();
        }
        let adj = self.rotation();
        let offset = |from: usize, to: usize| (to + n - from) % n;
        let next = |u: usize, v: usize| -> usize {
            let ou = offset(v, u);
            let list = &adj[v];
            list.iter()
                .rev()
                .copied()
                .find(|&w| offset(v, w) < ou)
                .unwrap_or(*list.last().unwrap())
        };
        let mut seen = std::collections::HashSet::new();
        let mut faces = Vec::new();
        for u in 1..=n {
            for &v in &adj[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, v);
                while seen.insert((a, b)) {
                    face.push(a);
                    let c = next(a, b);
                    a = b;
                    b = c;
                }
                // the outer face runs through the reversed boundary arc 2 -> 1
                let outer = face.windows(2).any(|p| p == [2, 1]) || (face.last() == Some(&2) && face[0] == 1);
                if !outer {
                    faces.push(face);
                }
            }
        }
        faces
    }

    /// Triangles of a valid triangulation, vertices sorted ascending, in
    /// lexicographic order.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        if self.n < 3 {
            return Vec::new();
        }
        let mut out: Vec<[usize; 3]> = self
            .faces()
            .into_iter()
            .filter(|f| f.len() == 3)
            .map(|f| {
                let mut t = [f[0], f[1], f[2]];
                t.sort_unstable();
                t
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Checks every defining condition: chords join non-neighbouring points
    /// in range, no two cross, there are `n - 3` of them, every interior face
    /// is a triangle and every boundary arc lies on exactly one triangle.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut violations = Vec::new();
        for c in &self.chords {
            if c.i == 0 || c.j > n || c.j < c.i + 2 || (c.i == 1 && c.j == n) {
                violations.push(Violation::BadChord(*c));
            }
        }
        let list: Vec<&Chord> = self.chords.iter().collect();
        for (x, a) in list.iter().enumerate() {
            for b in &list[x + 1..] {
                if a.crosses(b) {
                    violations.push(Violation::Crossing(**a, **b));
                }
            }
        }
        let expected = n.saturating_sub(3);
        if self.chords.len() != expected {
            violations.push(Violation::ChordCount { expected, found: self.chords.len() });
        }
        if !violations.is_empty() || n < 3 {
            return ValidationReport { violations };
        }
        let faces = self.faces();
        let mut arc_uses = vec![0usize; n + 1];
        for f in &faces {
            if f.len() != 3 {
                violations.push(Violation::NonTriangularFace(f.clone()));
            }
            for k in 0..f.len() {
                let (a, b) = (f[k], f[(k + 1) % f.len()]);
                if b == a % n + 1 {
                    arc_uses[a] += 1;
                }
            }
        }
        for (i, &uses) in arc_uses.iter().enumerate().skip(1) {
            if uses != 1 || faces.iter().any(|f| f.len() != 3 && f.contains(&i)) {
                violations.push(Violation::Arc(i));
            }
        }
        ValidationReport { violations }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}
