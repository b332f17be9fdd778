//! Labelled cycles, chord scoring and the min-max interval DP.

use serde::{Deserialize, Serialize};

use super::{Chord, Triangulation};
use crate::alphabet::Word;
use crate::cayley::{CayleyBall, ElementId};
use crate::error::{Error, Result};

/// A closed walk from the identity: the label `word` and the visited
/// vertices `g_0, ..., g_n` with `g_0 = g_n = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    word: Word,
    vertices: Vec<ElementId>,
}

impl Cycle {
    /// Traces `word` through `ball`, which must have radius at least
    /// `⌊n/2⌋` (every vertex of a closed walk of length `n` lies that close
    /// to the base point).
    pub fn new(ball: &CayleyBall, word: Word) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::input("a cycle has length at least 1"));
        }
        ball.alphabet().check_word(&word)?;
        let need = (n / 2) as u32;
        if ball.radius() < need {
            return Err(Error::OutOfRange { radius: ball.radius(), what: format!("cycle of length {n} needs radius {need}") });
        }
        let mut vertices = Vec::with_capacity(n + 1);
        let mut g = ElementId::IDENTITY;
        vertices.push(g);
        for s in word.iter() {
            g = ball.walk(g, s).ok_or_else(|| {
                Error::input(format!("{} does not represent the identity", ball.alphabet().format_word(&word)))
            })?;
            vertices.push(g);
        }
        if g != ElementId::IDENTITY {
            return Err(Error::input(format!(
                "{} does not represent the identity",
                ball.alphabet().format_word(&word)
            )));
        }
        Ok(Self { word, vertices })
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `g_0, ..., g_n`.
    pub fn vertices(&self) -> &[ElementId] {
        &self.vertices
    }

    /// Label `g_i` of distinguished point `p_i`, `1 ≤ i ≤ n`.
    pub fn label(&self, i: usize) -> ElementId {
        self.vertices[i]
    }
}

/// Pairwise distances `d(g_i, g_j)` between the labels of a cycle's points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChordLengths {
    n: usize,
    d: Vec<u32>,
}

impl ChordLengths {
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[i * (self.n + 1) + j]
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Builds a table from a distance function on points `1..=n`. Intended
    /// for callers that compute the metric some other way.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut d = vec![0; (n + 1) * (n + 1)];
        for i in 1..=n {
            for j in 1..=n {
                d[i * (n + 1) + j] = f(i, j);
            }
        }
        Self { n, d }
    }
}

/// Computes every `d(g_i, g_j)` by walking the shorter arc between `p_i`
/// and `p_j` through the ball: the group element reached after `L` steps
/// from `p_i` is `g_i⁻¹ g_{i+L}`, at distance at most `L ≤ ⌊n/2⌋`.
pub fn chord_length_table(cycle: &Cycle, ball: &CayleyBall) -> Result<ChordLengths> {
    let n = cycle.n();
    let half = n / 2;
    if ball.radius() < half as u32 {
        return Err(Error::OutOfRange { radius: ball.radius(), what: format!("chord lengths of a {n}-cycle") });
    }
    let w = cycle.word().as_slice();
    let mut d = vec![0u32; (n + 1) * (n + 1)];
    for s in 1..=n {
        let mut g = ElementId::IDENTITY;
        for step in 1..=half {
            // letter leading from p_{s+step-1} to p_{s+step}
            let letter = w[(s + step - 1) % n];
            g = ball.walk(g, letter).ok_or_else(|| Error::OutOfRange {
                radius: ball.radius(),
                what: "arc walk left the ball".into(),
            })?;
            let t = (s + step - 1) % n + 1;
            let len = ball.norm(g);
            d[s * (n + 1) + t] = len;
            d[t * (n + 1) + s] = len;
        }
    }
    Ok(ChordLengths { n, d })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoredTriangulation {
    pub triangulation: Triangulation,
    /// `(chord, d(g_i, g_j))` in chord order.
    pub chord_lengths: Vec<(Chord, u32)>,
    /// Largest chord length; 0 when there are no chords.
    pub k: u32,
}

/// Scores `t` against a precomputed chord-length table.
pub fn score_with_table(t: &Triangulation, table: &ChordLengths) -> ScoredTriangulation {
    let chord_lengths: Vec<(Chord, u32)> = t.chords().map(|&c| (c, table.get(c.i, c.j))).collect();
    let k = chord_lengths.iter().map(|&(_, l)| l).max().unwrap_or(0);
    ScoredTriangulation { triangulation: t.clone(), chord_lengths, k }
}

/// Scores each chord of `t` by the distance between its endpoint labels.
pub fn score(t: &Triangulation, cycle: &Cycle, ball: &CayleyBall) -> Result<ScoredTriangulation> {
    if t.n() != cycle.n() {
        return Err(Error::input(format!("triangulation has {} points, cycle has {}", t.n(), cycle.n())));
    }
    let report = t.validate();
    if !report.is_valid() {
        return Err(Error::input(format!("invalid triangulation: {:?}", report.violations)));
    }
    Ok(score_with_table(t, &chord_length_table(cycle, ball)?))
}

/// Optimal max-chord value and a witness triangulation.
///
/// `f(i,j)` is the best achievable max over the sub-polygon `p_i..p_j` whose
/// closing side `(i,j)` is not charged:
/// `f(i,i+1) = 0`,
/// `f(i,j) = min_{i<m<j} max(f(i,m), f(m,j), cost(i,m), cost(m,j))`,
/// where `cost` is the chord length for chords and 0 for boundary arcs. The
/// whole circle is `f(1,n)` with `(1,n)` a boundary arc. Ties go to the
/// smallest `m`.
pub fn min_max_k(table: &ChordLengths) -> (u32, Triangulation) {
    let n = table.n();
    if n <= 3 {
        return (0, Triangulation::empty(n));
    }
    let w = n + 1;
    let cost = |x: usize, y: usize| if y - x >= 2 && !(x == 1 && y == n) { table.get(x, y) } else { 0 };
    let mut f = vec![0u32; w * w];
    let mut arg = vec![0usize; w * w];
    for len in 2..n {
        for i in 1..=n - len {
            let j = i + len;
            let mut best = u32::MAX;
            let mut best_m = 0;
            for m in i + 1..j {
                let v = f[i * w + m].max(f[m * w + j]).max(cost(i, m)).max(cost(m, j));
                if v < best {
                    best = v;
                    best_m = m;
                }
            }
            f[i * w + j] = best;
            arg[i * w + j] = best_m;
        }
    }
    let mut chords = Vec::with_capacity(n - 3);
    let mut stack = vec![(1usize, n)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let m = arg[i * w + j];
        for (a, b) in [(i, m), (m, j)] {
            if b - a >= 2 {
                chords.push(Chord { i: a, j: b });
                stack.push((a, b));
            }
        }
    }
    (f[w + n], Triangulation::from_chords(n, chords))
}

/// Triangulation of `cycle` minimising the longest chord.
pub fn min_max_triangulation(cycle: &Cycle, ball: &CayleyBall) -> Result<ScoredTriangulation> {
    let table = chord_length_table(cycle, ball)?;
    let (k, t) = min_max_k(&table);
    let scored = score_with_table(&t, &table);
    debug_assert_eq!(scored.k, k);
    Ok(scored)
}
