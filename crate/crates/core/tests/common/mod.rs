//! Independent oracles for the integration suites. Nothing here goes through
//! the Cayley ball, the interval DP or the pruned enumeration.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cayley_delta::alphabet::{Alphabet, Word};
use cayley_delta::group::FiniteGroup;

/// Every triangulation of the polygon `1..=n`, as chord lists, built by
/// choosing the apex of the triangle on side `(lo, hi)` recursively.
pub fn all_triangulations(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn sub(lo: usize, hi: usize, n: usize) -> Vec<Vec<(usize, usize)>> {
        if hi - lo < 2 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for apex in lo + 1..hi {
            for left in sub(lo, apex, n) {
                for right in sub(apex, hi, n) {
                    let mut t = left.clone();
                    t.extend(right.iter().copied());
                    for (a, b) in [(lo, apex), (apex, hi)] {
                        if b - a >= 2 && !(a == 1 && b == n) {
                            t.push((a, b));
                        }
                    }
                    out.push(t);
                }
            }
        }
        out
    }
    if n <= 3 {
        return vec![vec![]];
    }
    sub(1, n, n)
}

/// Chord-set check from first principles: in-range non-adjacent pairs,
/// pairwise non-crossing, exactly `n - 3` of them (a maximal non-crossing
/// set, hence a triangulation).
pub fn is_triangulation(n: usize, chords: &[(usize, usize)]) -> bool {
    let set: BTreeSet<(usize, usize)> = chords.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    if set.len() != chords.len() || set.len() != n.saturating_sub(3) {
        return false;
    }
    let ok = |&(i, j): &(usize, usize)| i >= 1 && j <= n && j >= i + 2 && !(i == 1 && j == n);
    if !set.iter().all(ok) {
        return false;
    }
    let v: Vec<_> = set.iter().collect();
    for x in 0..v.len() {
        for y in x + 1..v.len() {
            let ((a, b), (c, d)) = (*v[x], *v[y]);
            if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                return false;
            }
        }
    }
    true
}

/// Whether `{a, b, c}` bounds a face of the triangulation: every pair is a
/// chord or a boundary arc and, for `n > 3`, no chord separates them.
pub fn is_triangle(n: usize, chords: &[(usize, usize)], tri: [usize; 3]) -> bool {
    let mut t = tri;
    t.sort_unstable();
    let adjacent = |a: usize, b: usize| b == a + 1 || (a == 1 && b == n);
    let joined = |a: usize, b: usize| adjacent(a, b) || chords.contains(&(a, b));
    joined(t[0], t[1]) && joined(t[1], t[2]) && joined(t[0], t[2])
}

/// Closed-form word metric for each backend, evaluated on the subword
/// between two cycle points.
pub trait SubwordMetric {
    fn length(&self, w: &[usize]) -> u32;
}

/// Free group on paired letters `x, x'`: length after free reduction.
pub struct FreeMetric;

impl SubwordMetric for FreeMetric {
    fn length(&self, w: &[usize]) -> u32 {
        let mut stack: Vec<usize> = Vec::new();
        for &s in w {
            if stack.last() == Some(&(s ^ 1)) {
                stack.pop();
            } else {
                stack.push(s);
            }
        }
        stack.len() as u32
    }
}

/// Standard generators of Z^r: L1 norm of the exponent sums.
pub struct L1Metric {
    pub rank: usize,
}

impl SubwordMetric for L1Metric {
    fn length(&self, w: &[usize]) -> u32 {
        let mut v = vec![0i64; self.rank];
        for &s in w {
            v[s / 2] += if s % 2 == 0 { 1 } else { -1 };
        }
        v.iter().map(|x| x.unsigned_abs() as u32).sum()
    }
}

/// A finite group with every nonidentity element a generator: distance 1
/// unless the subword multiplies out to the identity. Products are read off
/// the group's CSV table, symbol `k` being element `k + 1`.
pub struct AllElementsMetric {
    table: Vec<Vec<usize>>,
}

impl AllElementsMetric {
    pub fn new(g: &FiniteGroup) -> Self {
        let table = g
            .to_csv()
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(|x| x.trim().parse().unwrap()).collect())
            .collect();
        Self { table }
    }
}

impl SubwordMetric for AllElementsMetric {
    fn length(&self, w: &[usize]) -> u32 {
        let e = w.iter().fold(0, |acc, &s| self.table[acc][s + 1]);
        u32::from(e != 0)
    }
}

/// Free product of cyclic groups with every nonidentity factor element a
/// generator. `letters[s] = (factor, exponent)`. The distance is the number
/// of syllables left after stack reduction.
pub struct CyclicProductMetric {
    pub orders: Vec<u32>,
    pub letters: Vec<(usize, u32)>,
}

impl CyclicProductMetric {
    /// Letters named as by the library: factor `f` uses letter `a + f`, with
    /// `x`, `x'` for order 3 and `x` alone for order 2.
    pub fn from_alphabet(orders: &[u32], al: &Alphabet) -> Self {
        let letters = al
            .names()
            .iter()
            .map(|name| {
                let f = (name.as_bytes()[0] - b'a') as usize;
                let e = if name.ends_with('\'') { orders[f] - 1 } else { 1 };
                (f, e)
            })
            .collect();
        Self { orders: orders.to_vec(), letters }
    }

    pub fn reduce(&self, w: &[usize]) -> Vec<(usize, u32)> {
        let mut stack: Vec<(usize, u32)> = Vec::new();
        for &s in w {
            let (f, e) = self.letters[s];
            match stack.last_mut() {
                Some((g, x)) if *g == f => {
                    *x = (*x + e) % self.orders[f];
                    if *x == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((f, e)),
            }
        }
        stack
    }
}

impl SubwordMetric for CyclicProductMetric {
    fn length(&self, w: &[usize]) -> u32 {
        self.reduce(w).len() as u32
    }
}

/// Symbol indices of a word.
pub fn indices(w: &Word) -> Vec<usize> {
    w.iter().map(|s| s.index()).collect()
}

/// `d(g_i, g_j)` for points `1..=n` of the cycle labelled `w`, from the
/// subword between them.
pub fn chord_length(metric: &dyn SubwordMetric, w: &[usize], i: usize, j: usize) -> u32 {
    let (i, j) = (i.min(j), i.max(j));
    metric.length(&w[i..j])
}

/// Least max-chord over every triangulation.
pub fn brute_force_k(metric: &dyn SubwordMetric, w: &[usize]) -> u32 {
    let n = w.len();
    all_triangulations(n)
        .iter()
        .map(|t| t.iter().map(|&(i, j)| chord_length(metric, w, i, j)).max().unwrap_or(0))
        .min()
        .unwrap()
}

/// Every word of length `m` over `k` symbols, as index vectors.
pub fn all_words(k: usize, m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..k.pow(m as u32)).map(move |mut code| {
        let mut w = vec![0; m];
        for slot in w.iter_mut() {
            *slot = code % k;
            code /= k;
        }
        w
    })
}

/// `Δ(1..=n)` by brute force: every word of every length up to `n` that the
/// metric sends to 0, every triangulation, no symmetry reduction, no
/// pruning.
pub fn brute_force_delta(metric: &dyn SubwordMetric, symbols: usize, n: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n);
    let mut best = 0;
    for m in 1..=n {
        for w in all_words(symbols, m) {
            if metric.length(&w) == 0 {
                best = best.max(brute_force_k(metric, &w));
            }
        }
        out.push(best);
    }
    out
}

pub fn catalan(k: usize) -> u128 {
    let mut c = 1u128;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}
