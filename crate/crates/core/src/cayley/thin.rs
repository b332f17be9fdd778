//! Finite-radius probe of the thin-triangles condition.
//!
//! Triangles are anchored at the identity (the metric is left invariant, so
//! every geodesic triangle is a translate of one of these) with the other two
//! vertices `y, z` in the ball of radius `r`. For each triangle we measure
//! the smallest `δ` such that every vertex on each side is within `δ` of the
//! union of the other two sides, and report the maximum over the triangles
//! probed. The default probe uses the ball's canonical geodesic for each
//! side; [`thinness_delta_all_geodesics`] maximises over every choice of
//! geodesic sides instead.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{CayleyBall, ElementId, DEFAULT_ELEMENT_BUDGET};
use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::group::GroupOracle;

/// Radius limit for the all-geodesics probe.
pub const ALL_GEODESICS_MAX_RADIUS: u32 = 3;
const GEODESICS_PER_SIDE: usize = 256;
const SIDE_COMBINATIONS: usize = 20_000;

#[derive(Clone, Debug)]
pub struct ThinnessOptions {
    /// Triangles to probe; all `|B(r)|²` are probed when that is not larger.
    pub samples: usize,
    pub seed: u64,
    pub budget: usize,
}

impl Default for ThinnessOptions {
    fn default() -> Self {
        Self { samples: 500, seed: 0, budget: DEFAULT_ELEMENT_BUDGET }
    }
}

/// The point realising a triangle's thinness value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThinWitness {
    /// Geodesic labels of the three sides: `1→y`, `1→z`, `y→z`.
    pub sides: [Word; 3],
    /// Side holding the far point.
    pub side: usize,
    /// The far point and its nearest point on the other sides, as words from
    /// the identity.
    pub point: Word,
    pub nearest: Word,
    pub distance: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ThinnessReport {
    pub radius: u32,
    pub delta_estimate: u32,
    pub triangles: usize,
    pub exhaustive: bool,
    pub all_geodesics: bool,
    pub witness: Option<ThinWitness>,
}

/// Vertices along a path from the identity, as words.
fn path_points(prefix: &Word, label: &Word) -> Vec<Word> {
    let mut out = Vec::with_capacity(label.len() + 1);
    let mut cur = prefix.clone();
    out.push(cur.clone());
    for s in label.iter() {
        cur.push(s);
        out.push(cur.clone());
    }
    out
}

struct SideDelta {
    delta: u32,
    side: usize,
    point: Word,
    nearest: Word,
}

/// Thinness of one triangle with sides given by their labels.
fn triangle_delta(ball: &CayleyBall, sides: &[Word; 3]) -> Result<SideDelta> {
    let al = ball.alphabet();
    let y = &sides[0];
    let points = [
        path_points(&Word::empty(), &sides[0]),
        path_points(&Word::empty(), &sides[1]),
        path_points(y, &sides[2]),
    ];
    let inverses: Vec<Vec<Word>> = points.iter().map(|ps| ps.iter().map(|p| p.inverse(al)).collect()).collect();
    let mut best = SideDelta { delta: 0, side: 0, point: Word::empty(), nearest: Word::empty() };
    for side in 0..3 {
        for (k, p_inv) in inverses[side].iter().enumerate() {
            let mut nearest: Option<(u32, &Word)> = None;
            for other in (0..3).filter(|&o| o != side) {
                for q in &points[other] {
                    if nearest.is_some_and(|(d, _)| d == 0) {
                        break;
                    }
                    if let Some(d) = ball.word_norm(&p_inv.concat(q)) {
                        if nearest.is_none_or(|(best, _)| d < best) {
                            nearest = Some((d, q));
                        }
                    }
                }
            }
            // The shared endpoint is always within the side length, so a
            // ball of radius 2r finds some point.
            let (d, q) = nearest.ok_or_else(|| Error::OutOfRange {
                radius: ball.radius(),
                what: "no point of the other sides within the ball".into(),
            })?;
            if d > best.delta {
                best = SideDelta { delta: d, side, point: points[side][k].clone(), nearest: q.clone() };
            }
        }
    }
    Ok(best)
}

fn probe_pairs(ball: &CayleyBall, r: u32, opts: &ThinnessOptions) -> (Vec<(ElementId, ElementId)>, bool) {
    let verts: Vec<ElementId> = ball.ids().filter(|&id| ball.norm(id) <= r).collect();
    let total = verts.len() * verts.len();
    if total <= opts.samples {
        let pairs = verts.iter().flat_map(|&y| verts.iter().map(move |&z| (y, z))).collect();
        (pairs, true)
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let pairs = (0..opts.samples)
            .map(|_| (verts[rng.gen_range(0..verts.len())], verts[rng.gen_range(0..verts.len())]))
            .collect();
        (pairs, false)
    }
}

/// Thinness estimate at radius `r` using canonical geodesic sides.
pub fn thinness_delta(group: Arc<dyn GroupOracle>, r: u32, opts: &ThinnessOptions) -> Result<ThinnessReport> {
    if r == 0 {
        return Err(Error::input("thinness probe needs r >= 1"));
    }
    let ball = CayleyBall::build(group, 2 * r, opts.budget)?;
    thinness_in_ball(&ball, r, opts)
}

/// Same as [`thinness_delta`] on a prebuilt ball of radius at least `2r`.
pub fn thinness_in_ball(ball: &CayleyBall, r: u32, opts: &ThinnessOptions) -> Result<ThinnessReport> {
    if ball.radius() < 2 * r {
        return Err(Error::OutOfRange { radius: ball.radius(), what: format!("thinness probe at r = {r} needs radius {}", 2 * r) });
    }
    let (pairs, exhaustive) = probe_pairs(ball, r, opts);
    let mut report = ThinnessReport {
        radius: r,
        delta_estimate: 0,
        triangles: pairs.len(),
        exhaustive,
        all_geodesics: false,
        witness: None,
    };
    for &(y, z) in &pairs {
        let sides = [ball.word_of(y), ball.word_of(z), ball.geodesic(y, z)?];
        let t = triangle_delta(ball, &sides)?;
        if t.delta > report.delta_estimate || report.witness.is_none() {
            report.delta_estimate = report.delta_estimate.max(t.delta);
            report.witness = Some(ThinWitness { sides, side: t.side, point: t.point, nearest: t.nearest, distance: t.delta });
        }
    }
    Ok(report)
}

/// Thinness estimate maximised over every geodesic choice for each side.
/// Limited to `r <= 3`.
pub fn thinness_delta_all_geodesics(group: Arc<dyn GroupOracle>, r: u32, opts: &ThinnessOptions) -> Result<ThinnessReport> {
    if r == 0 || r > ALL_GEODESICS_MAX_RADIUS {
        return Err(Error::input(format!(
            "all-geodesics probe supports 1 <= r <= {ALL_GEODESICS_MAX_RADIUS}"
        )));
    }
    let ball = CayleyBall::build(group, 2 * r, opts.budget)?;
    let (pairs, exhaustive) = probe_pairs(&ball, r, opts);
    let mut report = ThinnessReport {
        radius: r,
        delta_estimate: 0,
        triangles: pairs.len(),
        exhaustive,
        all_geodesics: true,
        witness: None,
    };
    let too_many = || Error::Budget { what: "geodesic side combinations", limit: SIDE_COMBINATIONS as u64 };
    for &(y, z) in &pairs {
        let yz = ball.lookup(&ball.group().evaluate(&ball.geodesic(y, z)?)).ok_or_else(too_many)?;
        let choices = [
            ball.all_geodesics(y, GEODESICS_PER_SIDE).ok_or_else(too_many)?,
            ball.all_geodesics(z, GEODESICS_PER_SIDE).ok_or_else(too_many)?,
            ball.all_geodesics(yz, GEODESICS_PER_SIDE).ok_or_else(too_many)?,
        ];
        if choices.iter().map(Vec::len).product::<usize>() > SIDE_COMBINATIONS {
            return Err(too_many());
        }
        for s0 in &choices[0] {
            for s1 in &choices[1] {
                for s2 in &choices[2] {
                    let sides = [s0.clone(), s1.clone(), s2.clone()];
                    let t = triangle_delta(&ball, &sides)?;
                    if t.delta > report.delta_estimate || report.witness.is_none() {
                        report.delta_estimate = report.delta_estimate.max(t.delta);
                        report.witness =
                            Some(ThinWitness { sides, side: t.side, point: t.point, nearest: t.nearest, distance: t.delta });
                    }
                }
            }
        }
    }
    Ok(report)
}

impl ThinnessReport {
    /// Recomputes the witness triangle's thinness in `ball` (radius at
    /// least `2r`) and checks it equals the reported estimate.
    pub fn recheck(&self, ball: &CayleyBall) -> Result<bool> {
        match &self.witness {
            None => Ok(self.delta_estimate == 0),
            Some(w) => {
                let t = triangle_delta(ball, &w.sides)?;
                let al = ball.alphabet();
                let d = ball.word_norm(&w.point.inverse(al).concat(&w.nearest));
                Ok(t.delta == self.delta_estimate && w.distance == self.delta_estimate && d == Some(w.distance))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FreeAbelianGroup, FreeGroup};

    #[test]
    fn tree_triangles_are_tripods() {
        let g = Arc::new(FreeGroup::new(2).unwrap());
        let rep = thinness_delta(g, 3, &ThinnessOptions { samples: 300, ..Default::default() }).unwrap();
        assert_eq!(rep.delta_estimate, 0);
        assert!(!rep.exhaustive);
    }

    #[test]
    fn degenerate_triangle() {
        let g: Arc<dyn GroupOracle> = Arc::new(FreeAbelianGroup::new(2).unwrap());
        let ball = CayleyBall::build(g, 2, DEFAULT_ELEMENT_BUDGET).unwrap();
        let sides = [Word::empty(), Word::empty(), Word::empty()];
        assert_eq!(triangle_delta(&ball, &sides).unwrap().delta, 0);
    }

    #[test]
    fn z2_witness_rechecks() {
        let g: Arc<dyn GroupOracle> = Arc::new(FreeAbelianGroup::new(2).unwrap());
        let opts = ThinnessOptions { samples: 10_000, ..Default::default() };
        let rep = thinness_delta(g.clone(), 2, &opts).unwrap();
        assert!(rep.exhaustive);
        assert!(rep.delta_estimate >= 2);
        let ball = CayleyBall::build(g, 4, DEFAULT_ELEMENT_BUDGET).unwrap();
        assert!(rep.recheck(&ball).unwrap());
    }

    #[test]
    fn all_geodesics_dominates_canonical() {
        let g: Arc<dyn GroupOracle> = Arc::new(FreeAbelianGroup::new(2).unwrap());
        let opts = ThinnessOptions { samples: 10_000, ..Default::default() };
        let one = thinness_delta(g.clone(), 2, &opts).unwrap();
        let all = thinness_delta_all_geodesics(g.clone(), 2, &opts).unwrap();
        assert!(all.delta_estimate >= one.delta_estimate);
        assert!(thinness_delta_all_geodesics(g, 4, &opts).is_err());
    }

    #[test]
    fn zero_radius_rejected() {
        let g = Arc::new(FreeGroup::new(2).unwrap());
        assert!(thinness_delta(g, 0, &ThinnessOptions::default()).is_err());
    }
}
