use rand::Rng;

use super::{Chord, Triangulation};
use crate::error::{Error, Result};

/// Catalan number `C_k`, or `None` on `u128` overflow.
pub fn catalan(k: usize) -> Option<u128> {
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        // C_{i+1} = C_i * 2(2i+1) / (i+2)
        c = c.checked_mul(2 * (2 * i + 1))? / (i + 2);
    }
    Some(c)
}

/// Uniformly random triangulation of the `n`-circle.
///
/// The apex over the closing side `(i, j)` of a sub-polygon is drawn with
/// probability proportional to the number of triangulations it leaves on
/// either side, which makes every triangulation equally likely.
pub fn random_triangulation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Triangulation> {
    if n == 0 {
        return Err(Error::input("a cycle has at least one point"));
    }
    if n <= 3 {
        return Ok(Triangulation::empty(n));
    }
    let cat: Vec<u128> = (0..n)
        .map(catalan)
        .collect::<Option<_>>()
        .ok_or_else(|| Error::input(format!("n = {n} too large for uniform sampling")))?;
    let mut chords = Vec::with_capacity(n - 3);
    let mut stack = vec![(1usize, n)];
    while let Some((i, j)) = stack.pop() {
        if j - i < 2 {
            continue;
        }
        let mut pick = rng.gen_range(0..cat[j - i - 1]);
        let mut apex = i + 1;
        for m in i + 1..j {
            let w = cat[m - i - 1] * cat[j - m - 1];
            if pick < w {
                apex = m;
                break;
            }
            pick -= w;
        }
        for (a, b) in [(i, apex), (apex, j)] {
            if b - a >= 2 {
                chords.push(Chord { i: a, j: b });
                stack.push((a, b));
            }
        }
    }
    Ok(Triangulation::from_chords(n, chords))
}
