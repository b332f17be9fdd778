use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::{DehnPresentation, FiniteGroup, FreeAbelianGroup, FreeGroup, FreeProduct, GroupOracle};

/// Where a finite group table comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteSource {
    /// `C<n>`, `D<n>` or `S3`.
    Builtin(String),
    Csv(PathBuf),
}

/// Textual group selector.
///
/// ```text
/// free:<rank>
/// abelian:<rank>[:<v>;<v>...]     extra generators as comma separated vectors
/// finite:<path.csv | C<n> | D<n> | S3>
/// product:<finite>|<finite>[|...] factors as finite specs or bare builtin names
/// dehn:<path.relators>
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Free { rank: usize },
    Abelian { rank: usize, extra: Vec<Vec<i32>> },
    Finite(FiniteSource),
    Product(Vec<FiniteSource>),
    Dehn(PathBuf),
}

fn parse_rank(text: &str, what: &str) -> Result<usize> {
    let rank: usize = text
        .trim()
        .parse()
        .map_err(|_| Error::input(format!("{what} rank {text:?} is not a nonnegative integer")))?;
    if rank == 0 {
        return Err(Error::input(format!("{what} rank must be at least 1")));
    }
    Ok(rank)
}

fn parse_finite(body: &str) -> Result<FiniteSource> {
    let body = body.trim();
    if body.is_empty() {
        return Err(Error::input("finite spec needs a table path or builtin name"));
    }
    let path = Path::new(body);
    if FiniteGroup::builtin(body).is_some() && !path.exists() {
        Ok(FiniteSource::Builtin(body.to_string()))
    } else {
        Ok(FiniteSource::Csv(path.to_path_buf()))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("group spec {s:?} must look like kind:params")))?;
        match kind.trim() {
            "free" => Ok(GroupSpec::Free { rank: parse_rank(body, "free")? }),
            "abelian" => {
                let (rank, extra) = match body.split_once(':') {
                    Some((r, e)) => (r, Some(e)),
                    None => (body, None),
                };
                let rank = parse_rank(rank, "abelian")?;
                let extra = match extra {
                    None => Vec::new(),
                    Some(e) => e
                        .split(';')
                        .map(|v| {
                            v.split(',')
                                .map(|x| {
                                    x.trim().parse::<i32>().map_err(|_| {
                                        Error::input(format!("bad generator coordinate {x:?}"))
                                    })
                                })
                                .collect::<Result<Vec<i32>>>()
                        })
                        .collect::<Result<_>>()?,
                };
                Ok(GroupSpec::Abelian { rank, extra })
            }
            "finite" => Ok(GroupSpec::Finite(parse_finite(body)?)),
            "product" => {
                let factors = body
                    .split('|')
                    .map(|f| {
                        let f = f.trim();
                        match f.strip_prefix("finite:") {
                            Some(rest) => parse_finite(rest),
                            None if f.contains(':') => {
                                Err(Error::input(format!("free product factor {f:?} must be finite")))
                            }
                            None => parse_finite(f),
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                if factors.len() < 2 {
                    return Err(Error::input("free product needs at least two factors"));
                }
                Ok(GroupSpec::Product(factors))
            }
            "dehn" => {
                let body = body.trim();
                if body.is_empty() {
                    return Err(Error::input("dehn spec needs a relator file path"));
                }
                Ok(GroupSpec::Dehn(PathBuf::from(body)))
            }
            other => Err(Error::input(format!(
                "unknown group kind {other:?} (expected free, abelian, finite, product, dehn)"
            ))),
        }
    }
}

impl fmt::Display for FiniteSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteSource::Builtin(name) => f.write_str(name),
            FiniteSource::Csv(p) => write!(f, "{}", p.display()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Free { rank } => write!(f, "free:{rank}"),
            GroupSpec::Abelian { rank, extra } => {
                write!(f, "abelian:{rank}")?;
                if !extra.is_empty() {
                    let vs: Vec<String> = extra
                        .iter()
                        .map(|v| v.iter().map(i32::to_string).collect::<Vec<_>>().join(","))
                        .collect();
                    write!(f, ":{}", vs.join(";"))?;
                }
                Ok(())
            }
            GroupSpec::Finite(src) => write!(f, "finite:{src}"),
            GroupSpec::Product(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                write!(f, "product:{}", parts.join("|"))
            }
            GroupSpec::Dehn(p) => write!(f, "dehn:{}", p.display()),
        }
    }
}

impl FiniteSource {
    pub fn load(&self) -> Result<FiniteGroup> {
        match self {
            FiniteSource::Builtin(name) => FiniteGroup::builtin(name)
                .unwrap_or_else(|| Err(Error::input(format!("unknown builtin group {name}")))),
            FiniteSource::Csv(path) => FiniteGroup::from_csv(path),
        }
    }
}

impl GroupSpec {
    pub fn build(&self) -> Result<Arc<dyn GroupOracle>> {
        Ok(match self {
            GroupSpec::Free { rank } => Arc::new(FreeGroup::new(*rank)?),
            GroupSpec::Abelian { rank, extra } => {
                Arc::new(FreeAbelianGroup::with_extra_generators(*rank, extra)?)
            }
            GroupSpec::Finite(src) => Arc::new(src.load()?),
            GroupSpec::Product(fs) => {
                Arc::new(FreeProduct::new(fs.iter().map(FiniteSource::load).collect::<Result<_>>()?)?)
            }
            GroupSpec::Dehn(path) => Arc::new(DehnPresentation::from_file(path)?),
        })
    }

    /// Identifies the abstract group independent of the generating set, so
    /// profiles of one group under different generators can be compared.
    pub fn group_key(&self) -> String {
        match self {
            GroupSpec::Abelian { rank, .. } => format!("abelian:{rank}"),
            other => other.to_string(),
        }
    }

    pub fn build_product(&self) -> Result<FreeProduct> {
        match self {
            GroupSpec::Product(fs) => FreeProduct::new(fs.iter().map(FiniteSource::load).collect::<Result<_>>()?),
            other => Err(Error::input(format!("{other} is not a free product spec"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints() {
        for s in ["free:2", "abelian:2", "abelian:2:1,1", "abelian:3:1,1,0;0,1,1", "finite:S3", "product:C2|C3", "dehn:rel.txt"] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        let spec: GroupSpec = "product:finite:C2|C3".parse().unwrap();
        assert_eq!(spec.to_string(), "product:C2|C3");
    }

    #[test]
    fn rejects_bad_specs() {
        for s in ["free", "free:0", "free:x", "abelian:0", "abelian:2:1,a", "wat:3", "product:C2", "product:C2|free:2", "dehn:", "finite:"] {
            assert!(s.parse::<GroupSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn builds_backends() {
        let g = "product:C2|C3".parse::<GroupSpec>().unwrap().build().unwrap();
        assert_eq!(g.alphabet().len(), 3);
        let g = "abelian:2:1,1".parse::<GroupSpec>().unwrap().build().unwrap();
        assert_eq!(g.alphabet().len(), 6);
        let missing = "finite:/nonexistent/table.csv".parse::<GroupSpec>().unwrap();
        assert!(missing.build().is_err());
    }

    #[test]
    fn group_key_ignores_extra_generators() {
        let a: GroupSpec = "abelian:2".parse().unwrap();
        let b: GroupSpec = "abelian:2:1,1".parse().unwrap();
        assert_eq!(a.group_key(), b.group_key());
    }
}
