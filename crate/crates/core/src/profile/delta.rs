//! `Δ(n)`: the least `k` such that every cycle of length at most `n` has a
//! triangulation with all chords of length at most `k`.
//!
//! Cycles are enumerated from the identity only (the metric is left
//! invariant, so translates have the same chord lengths) and one per
//! rotation / reversal class. Scoring runs on a rayon pool; the per-length
//! maximum is reduced with a total order on `(k, length, word)` so the
//! result does not depend on the worker count.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate::{identity_cycles, EnumerateOptions};
use crate::alphabet::Word;
use crate::cayley::{load_or_build, CayleyBall, DEFAULT_ELEMENT_BUDGET};
use crate::error::{Error, Result};
use crate::group::{GroupOracle, GroupSpec};
use crate::triangulate::{chord_length_table, min_max_k, Cycle};

pub const DEFAULT_CYCLE_BUDGET: u64 = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaRow {
    pub n: usize,
    pub delta: u32,
    /// Identity word of length at most `n` whose best triangulation needs
    /// `delta`; empty when there are no cycles of length `<= n`.
    pub witness: String,
    /// Cycle classes of length exactly `n`.
    pub cycles_enumerated: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaProfile {
    pub spec: String,
    /// Names the group independently of the generating set; profiles are
    /// comparable when these agree.
    pub group_key: String,
    pub generators: Vec<String>,
    pub rows: Vec<DeltaRow>,
    /// Largest `n` for which the row is complete.
    pub max_n: usize,
    pub requested_max_n: usize,
    pub incomplete: bool,
    pub seed: u64,
}

impl DeltaProfile {
    pub fn delta(&self, n: usize) -> Option<u32> {
        self.rows.iter().find(|r| r.n == n).map(|r| r.delta)
    }

    pub fn values(&self) -> Vec<u32> {
        self.rows.iter().map(|r| r.delta).collect()
    }

    /// Fails with a budget error if the table was cut short.
    pub fn ensure_complete(&self) -> Result<()> {
        if self.incomplete {
            Err(Error::Budget { what: "delta profile rows", limit: self.requested_max_n as u64 })
        } else {
            Ok(())
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// CSV with header `n,delta,witness,cycles_enumerated`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "delta", "witness", "cycles_enumerated"])?;
        for r in &self.rows {
            w.write_record([r.n.to_string(), r.delta.to_string(), r.witness.clone(), r.cycles_enumerated.to_string()])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[derive(Clone, Debug)]
pub struct DeltaOptions {
    pub workers: usize,
    /// Total cycle classes scored across all lengths.
    pub cycle_budget: u64,
    pub element_budget: usize,
    pub time_budget: Option<Duration>,
    pub prune: bool,
    pub cache_dir: Option<PathBuf>,
    /// Recorded in the profile; the computation itself is deterministic.
    pub seed: u64,
}

impl Default for DeltaOptions {
    fn default() -> Self {
        Self {
            workers: 1,
            cycle_budget: DEFAULT_CYCLE_BUDGET,
            element_budget: DEFAULT_ELEMENT_BUDGET,
            time_budget: None,
            prune: true,
            cache_dir: None,
            seed: 0,
        }
    }
}

/// Best triangulation value of one cycle.
pub fn cycle_min_max(ball: &CayleyBall, word: &Word) -> Result<u32> {
    let cycle = Cycle::new(ball, word.clone())?;
    Ok(min_max_k(&chord_length_table(&cycle, ball)?).0)
}

/// Larger `k` wins; among equal `k` the shorter, then lexicographically
/// smaller word.
fn better(a: &(u32, Word), b: &(u32, Word)) -> bool {
    a.0 > b.0
        || (a.0 == b.0 && (a.1.len() < b.1.len() || (a.1.len() == b.1.len() && a.1.as_slice() < b.1.as_slice())))
}

fn pick(a: Option<(u32, Word)>, b: Option<(u32, Word)>) -> Option<(u32, Word)> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if better(&y, &x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Hardest cycle among `cycles`, scored on `workers` threads.
fn hardest(ball: &CayleyBall, cycles: Vec<Word>, pool: &rayon::ThreadPool) -> Result<Option<(u32, Word)>> {
    pool.install(|| {
        cycles
            .into_par_iter()
            .map(|w| cycle_min_max(ball, &w).map(|k| Some((k, w))))
            .try_reduce(|| None, |a, b| Ok(pick(a, b)))
    })
}

/// `Δ(1), ..., Δ(max_n)` on a prebuilt ball of radius at least `⌊max_n/2⌋`.
pub fn delta_profile_in_ball(ball: &CayleyBall, spec: &str, group_key: &str, max_n: usize, opts: &DeltaOptions) -> Result<DeltaProfile> {
    if ball.radius() < (max_n / 2) as u32 {
        return Err(Error::OutOfRange { radius: ball.radius(), what: format!("delta profile to n = {max_n}") });
    }
    if opts.workers == 0 || opts.cycle_budget == 0 {
        return Err(Error::input("worker count and cycle budget must be positive"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::config(format!("worker pool: {e}")))?;
    let started = Instant::now();
    let al = ball.alphabet();
    let mut profile = DeltaProfile {
        spec: spec.to_string(),
        group_key: group_key.to_string(),
        generators: al.names().to_vec(),
        rows: Vec::with_capacity(max_n),
        max_n: 0,
        requested_max_n: max_n,
        incomplete: false,
        seed: opts.seed,
    };
    let mut best: Option<(u32, Word)> = None;
    let mut used = 0u64;
    for n in 1..=max_n {
        if opts.time_budget.is_some_and(|t| started.elapsed() > t) {
            profile.incomplete = true;
            break;
        }
        let eopts = EnumerateOptions { prune: opts.prune, limit: opts.cycle_budget - used };
        let cycles = match identity_cycles(ball, n, &eopts) {
            Ok(c) => c,
            Err(Error::Budget { .. }) => {
                profile.incomplete = true;
                break;
            }
            Err(e) => return Err(e),
        };
        used += cycles.len() as u64;
        let count = cycles.len() as u64;
        best = pick(best, hardest(ball, cycles, &pool)?);
        let (delta, witness) = match &best {
            Some((k, w)) => (*k, al.format_word(w)),
            None => (0, String::new()),
        };
        profile.rows.push(DeltaRow { n, delta, witness, cycles_enumerated: count });
        profile.max_n = n;
    }
    Ok(profile)
}

/// Builds (or loads from `opts.cache_dir`) the ball and computes the
/// profile.
pub fn delta_profile(spec: &GroupSpec, max_n: usize, opts: &DeltaOptions) -> Result<DeltaProfile> {
    let group = spec.build()?;
    delta_profile_for(group, &spec.to_string(), &spec.group_key(), max_n, opts)
}

pub fn delta_profile_for(group: Arc<dyn GroupOracle>, spec: &str, group_key: &str, max_n: usize, opts: &DeltaOptions) -> Result<DeltaProfile> {
    let radius = (max_n / 2) as u32;
    let ball = load_or_build(group, spec, radius, opts.element_budget, opts.cache_dir.as_deref())?;
    delta_profile_in_ball(&ball, spec, group_key, max_n, opts)
}

/// Word of the witness in `profile` for row `n`, parsed over `ball`'s
/// alphabet.
pub fn witness_word(profile: &DeltaProfile, n: usize, ball: &CayleyBall) -> Result<Option<Word>> {
    let row = profile.rows.iter().find(|r| r.n == n).ok_or_else(|| Error::input(format!("no row for n = {n}")))?;
    if row.witness.is_empty() {
        return Ok(None);
    }
    Ok(Some(ball.alphabet().parse_word(&row.witness)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(spec: &str, n: usize) -> DeltaProfile {
        delta_profile(&spec.parse().unwrap(), n, &DeltaOptions::default()).unwrap()
    }

    #[test]
    fn z2_to_six() {
        let p = profile("abelian:2", 6);
        assert_eq!(&p.values()[..4], &[0, 0, 0, 2]);
        assert_eq!(p.rows[3].witness, "a,b,a',b'");
        assert!(!p.incomplete);
    }

    #[test]
    fn free_group_steps_to_one() {
        // a³a⁻³: the triangle on arc (6,1) needs a chord from p_6 = 1 or
        // between a and a², so no 0-triangulation exists.
        let p = profile("free:2", 8);
        assert_eq!(p.values(), [0, 0, 0, 0, 0, 1, 1, 1]);
        assert_eq!(p.rows[5].witness, "a,a,a,a',a',a'");
        assert_eq!(p.rows[1].witness, "a,a'");
        assert_eq!(p.rows[0].witness, "");
    }

    #[test]
    fn budget_marks_incomplete() {
        let spec: GroupSpec = "abelian:2".parse().unwrap();
        let p = delta_profile(&spec, 8, &DeltaOptions { cycle_budget: 10, ..Default::default() }).unwrap();
        assert!(p.incomplete);
        assert!(p.max_n < 8);
        assert!(p.ensure_complete().unwrap_err().is_resource());
    }

    #[test]
    fn json_and_csv() {
        let p = profile("abelian:2", 4);
        assert_eq!(DeltaProfile::from_json(&p.to_json().unwrap()).unwrap(), p);
        let csv = p.to_csv().unwrap();
        assert!(csv.starts_with("n,delta,witness,cycles_enumerated\n"));
        assert!(csv.contains("4,2,\"a,b,a',b'\","));
    }

    #[test]
    fn witness_scores_delta() {
        let spec: GroupSpec = "abelian:2".parse().unwrap();
        let p = profile("abelian:2", 6);
        let ball = CayleyBall::build(spec.build().unwrap(), 3, DEFAULT_ELEMENT_BUDGET).unwrap();
        for r in &p.rows {
            if let Some(w) = witness_word(&p, r.n, &ball).unwrap() {
                assert!(w.len() <= r.n);
                assert_eq!(cycle_min_max(&ball, &w).unwrap(), r.delta);
            }
        }
    }
}
