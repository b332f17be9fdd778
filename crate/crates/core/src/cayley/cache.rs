//! JSON persistence for Cayley balls.
//!
//! Layout: `{spec, radius, alphabet, elements: [{word, dist, parent, next}]}`
//! where `word` is the canonical geodesic in comma syntax, `parent` is the
//! alphabet index of its last letter and `next[s]` is the index of the
//! neighbour across generator `s` (null outside the ball). Files are keyed by
//! a hash of the spec string and the radius.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{CayleyBall, ElementId, NONE};
use crate::alphabet::Symbol;
use crate::error::{Error, Result};
use crate::group::GroupOracle;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BallCacheEntry {
    pub word: String,
    pub dist: u32,
    pub parent: Option<u16>,
    pub next: Vec<Option<u32>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BallCacheFile {
    pub spec: String,
    pub radius: u32,
    pub alphabet: Vec<String>,
    pub elements: Vec<BallCacheEntry>,
}

pub fn cache_path(dir: &Path, spec: &str, radius: u32) -> PathBuf {
    let digest = Sha256::digest(spec.as_bytes());
    let hex: String = digest[..8].iter().map(|b| format!("{b:02x}")).collect();
    dir.join(format!("ball-{hex}-r{radius}.json"))
}

impl CayleyBall {
    pub fn to_cache(&self, spec: &str) -> BallCacheFile {
        let al = self.alphabet();
        let nsym = al.len();
        let elements = self
            .ids()
            .map(|id| BallCacheEntry {
                word: al.format_word(&self.word_of(id)),
                dist: self.norm(id),
                parent: self.parent(id).map(|(s, _)| s.0),
                next: self.next[id.index() * nsym..(id.index() + 1) * nsym]
                    .iter()
                    .map(|&j| (j != NONE).then_some(j))
                    .collect(),
            })
            .collect();
        BallCacheFile { spec: spec.to_string(), radius: self.radius, alphabet: al.names().to_vec(), elements }
    }

    /// Rebuilds a ball from its cached layout, re-evaluating every stored
    /// word through `group`.
    pub fn from_cache(group: Arc<dyn GroupOracle>, file: &BallCacheFile) -> Result<Self> {
        let al = group.alphabet().clone();
        if al.names() != file.alphabet.as_slice() {
            return Err(Error::input("cached ball was built over a different alphabet"));
        }
        let nsym = al.len();
        let mut ball = CayleyBall::empty(group.clone(), file.radius);
        for (i, entry) in file.elements.iter().enumerate() {
            let word = al.parse_word(&entry.word)?;
            if word.len() != entry.dist as usize || entry.next.len() != nsym {
                return Err(Error::input(format!("cache entry {i} is inconsistent")));
            }
            let parent = match (entry.parent, word.len()) {
                (None, 0) => None,
                (Some(s), n) if n > 0 && word[n - 1] == Symbol(s) => {
                    let p = word.subword(0, n - 1);
                    let pid = ball
                        .walk_word(ElementId::IDENTITY, &p)
                        .ok_or_else(|| Error::input(format!("cache entry {i} has no parent")))?;
                    Some((Symbol(s), pid.0))
                }
                _ => return Err(Error::input(format!("cache entry {i} has a bad parent"))),
            };
            let id = ball.insert(group.evaluate(&word), entry.dist, parent);
            for (s, j) in entry.next.iter().enumerate() {
                ball.next[id as usize * nsym + s] = j.unwrap_or(NONE);
            }
        }
        if ball.elements.is_empty() || ball.dist[0] != 0 {
            return Err(Error::input("cached ball does not start at the identity"));
        }
        if ball.next.iter().any(|&j| j != NONE && j as usize >= ball.elements.len()) {
            return Err(Error::input("cached adjacency points outside the ball"));
        }
        Ok(ball)
    }

    pub fn save(&self, spec: &str, path: &Path) -> Result<()> {
        let file = self.to_cache(spec);
        std::fs::write(path, serde_json::to_vec(&file)?)?;
        Ok(())
    }

    pub fn load(group: Arc<dyn GroupOracle>, path: &Path) -> Result<Self> {
        let file: BallCacheFile = serde_json::from_slice(&std::fs::read(path)?)?;
        Self::from_cache(group, &file)
    }
}

/// Loads the ball for `(spec, radius)` from `cache_dir` when present,
/// otherwise builds it and writes it there.
pub fn load_or_build(
    group: Arc<dyn GroupOracle>,
    spec: &str,
    radius: u32,
    budget: usize,
    cache_dir: Option<&Path>,
) -> Result<CayleyBall> {
    let Some(dir) = cache_dir else {
        return CayleyBall::build(group, radius, budget);
    };
    let path = cache_path(dir, spec, radius);
    if path.exists() {
        let file: BallCacheFile = serde_json::from_slice(&std::fs::read(&path)?)?;
        if file.spec == spec && file.radius == radius {
            return CayleyBall::from_cache(group, &file);
        }
    }
    let ball = CayleyBall::build(group, radius, budget)?;
    std::fs::create_dir_all(dir)?;
    ball.save(spec, &path)?;
    Ok(ball)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::DEFAULT_ELEMENT_BUDGET;
    use crate::group::{DehnPresentation, FreeAbelianGroup};

    #[test]
    fn cache_round_trip() {
        let g: Arc<dyn GroupOracle> = Arc::new(FreeAbelianGroup::new(2).unwrap());
        let ball = CayleyBall::build(g.clone(), 3, DEFAULT_ELEMENT_BUDGET).unwrap();
        let file = ball.to_cache("abelian:2");
        let json = serde_json::to_string(&file).unwrap();
        let back: BallCacheFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, file);
        let rebuilt = CayleyBall::from_cache(g, &back).unwrap();
        assert_eq!(rebuilt.to_cache("abelian:2"), file);
        for id in ball.ids() {
            assert_eq!(rebuilt.lookup(ball.element(id)), Some(id));
        }
    }

    #[test]
    fn load_or_build_writes_then_reads() {
        let dir = tempfile::tempdir().unwrap();
        let g: Arc<dyn GroupOracle> = Arc::new(DehnPresentation::surface(2).unwrap());
        let first = load_or_build(g.clone(), "surface2", 2, DEFAULT_ELEMENT_BUDGET, Some(dir.path())).unwrap();
        let path = cache_path(dir.path(), "surface2", 2);
        assert!(path.exists());
        let second = load_or_build(g, "surface2", 2, DEFAULT_ELEMENT_BUDGET, Some(dir.path())).unwrap();
        assert_eq!(first.to_cache("s"), second.to_cache("s"));
    }

    #[test]
    fn rejects_mismatched_alphabet() {
        let g: Arc<dyn GroupOracle> = Arc::new(FreeAbelianGroup::new(2).unwrap());
        let ball = CayleyBall::build(g, 1, DEFAULT_ELEMENT_BUDGET).unwrap();
        let file = ball.to_cache("abelian:2");
        let other: Arc<dyn GroupOracle> = Arc::new(FreeAbelianGroup::new(3).unwrap());
        assert!(CayleyBall::from_cache(other, &file).is_err());
    }
}
