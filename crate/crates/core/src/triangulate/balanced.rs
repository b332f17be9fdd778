use super::{Chord, Triangulation};
use crate::error::{Error, Result};

/// A chord with the lengths `d ≤ e` of the two arcs it cuts off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BalancedChord {
    pub chord: Chord,
    pub d: usize,
    pub e: usize,
}

/// The chord whose shorter side `d` is as long as possible (ties go to the
/// lexicographically smallest chord). In any triangulation `d ≥ n/3`: the
/// triangle on the far side of the chosen chord splits the longer arc into
/// two pieces that cannot exceed `d`.
pub fn find_balanced_chord(t: &Triangulation) -> Result<BalancedChord> {
    let n = t.n();
    let best = t
        .chords()
        .map(|&chord| {
            let (d, e) = chord.split(n);
            BalancedChord { chord, d, e }
        })
        // chords iterate in ascending order, so keep the first maximum
        .fold(None::<BalancedChord>, |acc, c| match acc {
            Some(b) if b.d >= c.d => Some(b),
            _ => Some(c),
        })
        .ok_or_else(|| Error::input("triangulation has no chords"))?;
    debug_assert!(3 * best.d >= n || !t.is_valid(), "balanced chord too short");
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangulate::fan_triangulation;

    #[test]
    fn only_chord() {
        let t = Triangulation::from_pairs(4, &[(2, 4)]).unwrap();
        let b = find_balanced_chord(&t).unwrap();
        assert_eq!((b.chord, b.d, b.e), (Chord { i: 2, j: 4 }, 2, 2));
    }

    #[test]
    fn fan_of_nine() {
        let b = find_balanced_chord(&fan_triangulation(9).unwrap()).unwrap();
        assert_eq!((b.chord, b.d), (Chord { i: 3, j: 6 }, 3));
    }

    #[test]
    fn hexagon_tie_break() {
        let t = Triangulation::from_pairs(6, &[(1, 3), (3, 5), (5, 1)]).unwrap();
        let b = find_balanced_chord(&t).unwrap();
        assert_eq!((b.chord, b.d), (Chord { i: 1, j: 3 }, 2));
    }

    #[test]
    fn no_chords() {
        assert!(find_balanced_chord(&Triangulation::empty(3)).is_err());
    }
}
