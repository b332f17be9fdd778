//! Checks `Δ_S(n) <= K·Δ_S'(Kn) + K` between two profiles of one group.

use serde::{Deserialize, Serialize};

use super::DeltaProfile;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonRow {
    pub n: usize,
    pub delta_a: u32,
    /// `Δ_S'(Kn)`.
    pub delta_b: u32,
    pub bound: u32,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub spec_a: String,
    pub spec_b: String,
    pub k: u32,
    pub rows: Vec<ComparisonRow>,
    pub passed: bool,
}

/// Compares `a` (generating set `S`) against `b` (`S'`) for every `n` in
/// `a` with `Kn <= b.max_n`.
pub fn compare_generating_sets(a: &DeltaProfile, b: &DeltaProfile, k: u32) -> Result<ComparisonReport> {
    if k == 0 {
        return Err(Error::input("K must be at least 1"));
    }
    if a.group_key != b.group_key {
        return Err(Error::input(format!(
            "profiles describe different groups ({} vs {})",
            a.group_key, b.group_key
        )));
    }
    let mut rows = Vec::new();
    for r in &a.rows {
        let kn = r.n * k as usize;
        if kn > b.max_n {
            continue;
        }
        let delta_b = b.delta(kn).ok_or_else(|| Error::input(format!("second profile lacks n = {kn}")))?;
        let bound = k * delta_b + k;
        rows.push(ComparisonRow { n: r.n, delta_a: r.delta, delta_b, bound, pass: r.delta <= bound });
    }
    let passed = rows.iter().all(|r| r.pass);
    Ok(ComparisonReport { spec_a: a.spec.clone(), spec_b: b.spec.clone(), k, rows, passed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::DeltaRow;

    fn planted(key: &str, values: &[u32]) -> DeltaProfile {
        DeltaProfile {
            spec: key.into(),
            group_key: key.into(),
            generators: vec![],
            rows: values
                .iter()
                .enumerate()
                .map(|(i, &d)| DeltaRow { n: i + 1, delta: d, witness: String::new(), cycles_enumerated: 0 })
                .collect(),
            max_n: values.len(),
            requested_max_n: values.len(),
            incomplete: false,
            seed: 0,
        }
    }

    #[test]
    fn identical_profiles_pass_with_k1() {
        let p = planted("g", &[0, 0, 0, 2, 2, 3]);
        let rep = compare_generating_sets(&p, &p, 1).unwrap();
        assert!(rep.passed);
        assert_eq!(rep.rows.len(), 6);
    }

    #[test]
    fn only_rows_within_range() {
        let a = planted("g", &[0, 0, 0, 5, 9]);
        let b = planted("g", &[0, 0, 0, 0, 0, 0, 0, 0]);
        let rep = compare_generating_sets(&a, &b, 2).unwrap();
        assert_eq!(rep.rows.iter().map(|r| r.n).collect::<Vec<_>>(), [1, 2, 3, 4]);
        assert!(!rep.passed);
        assert!(!rep.rows[3].pass);
    }

    #[test]
    fn errors() {
        let a = planted("g", &[0]);
        assert!(compare_generating_sets(&a, &a, 0).is_err());
        assert!(compare_generating_sets(&a, &planted("h", &[0]), 1).is_err());
    }
}
