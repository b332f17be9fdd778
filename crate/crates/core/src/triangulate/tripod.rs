use super::Triangulation;
use crate::error::{Error, Result};

/// Three consecutive arcs of distinguished points starting at `a < b < c`:
/// `[a, b)`, `[b, c)` and `[c, n] ∪ [1, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcPartition {
    n: usize,
    starts: [usize; 3],
}

impl ArcPartition {
    pub fn new(n: usize, a: usize, b: usize, c: usize) -> Result<Self> {
        if !(1 <= a && a < b && b < c && c <= n) {
            return Err(Error::input(format!(
                "arc starts ({a},{b},{c}) must satisfy 1 <= a < b < c <= {n}"
            )));
        }
        Ok(Self { n, starts: [a, b, c] })
    }

    pub fn starts(&self) -> [usize; 3] {
        self.starts
    }

    /// Index `0..3` of the arc holding point `v`.
    pub fn arc_of(&self, v: usize) -> usize {
        let [a, b, c] = self.starts;
        if (a..b).contains(&v) {
            0
        } else if (b..c).contains(&v) {
            1
        } else {
            2
        }
    }
}

/// Every partition of the `n`-circle into three nonempty arcs.
pub fn arc_partitions(n: usize) -> impl Iterator<Item = ArcPartition> {
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| ArcPartition { n, starts: [a, b, c] }))
    })
}

/// A triangle of `t` with one vertex on each arc of `p`. Such a triangle
/// exists in every triangulation (a Sperner-type parity argument on the
/// boundary colouring), so failure means `t` is not a triangulation.
pub fn tripod_triangle(t: &Triangulation, p: &ArcPartition) -> Result<[usize; 3]> {
    if p.n != t.n() {
        return Err(Error::input("partition and triangulation have different point counts"));
    }
    t.triangles()
        .into_iter()
        .find(|tri| {
            let mut seen = [false; 3];
            tri.iter().for_each(|&v| seen[p.arc_of(v)] = true);
            seen == [true; 3]
        })
        .ok_or_else(|| Error::input("no triangle meets all three arcs; triangulation is not valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulate::fan_triangulation;

    #[test]
    fn triangle_itself() {
        let p = ArcPartition::new(3, 1, 2, 3).unwrap();
        assert_eq!(tripod_triangle(&Triangulation::empty(3), &p).unwrap(), [1, 2, 3]);
    }

    #[test]
    fn hexagon_fan() {
        let t = Triangulation::from_pairs(6, &[(1, 3), (1, 4), (1, 5)]).unwrap();
        let p = ArcPartition::new(6, 1, 3, 5).unwrap();
        assert_eq!(tripod_triangle(&t, &p).unwrap(), [1, 4, 5]);
    }

    #[test]
    fn nine_fan_all_partitions() {
        let t = fan_triangulation(9).unwrap();
        let p = ArcPartition::new(9, 1, 4, 7).unwrap();
        assert!(tripod_triangle(&t, &p).is_ok());
        assert_eq!(arc_partitions(9).count(), 84);
        for p in arc_partitions(9) {
            tripod_triangle(&t, &p).unwrap();
        }
    }

    #[test]
    fn malformed_partitions() {
        assert!(ArcPartition::new(5, 2, 2, 4).is_err());
        assert!(ArcPartition::new(5, 0, 2, 4).is_err());
        assert!(ArcPartition::new(5, 1, 2, 6).is_err());
        let p = ArcPartition::new(5, 1, 2, 3).unwrap();
        assert!(tripod_triangle(&Triangulation::empty(4), &p).is_err());
    }
}
