use std::cmp::Ordering;
use std::fmt;

/// A composition `Sq^{i_1} ... Sq^{i_k}` of Steenrod squares, leftmost factor
/// first. Zero exponents are dropped on construction, so the empty word is
/// the unit.
///
/// Words order by degree, then by descending lexicographic order on the
/// exponent sequence: `Sq3` sorts before `Sq2 Sq1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SquareWord(Vec<u32>);

impl SquareWord {
    pub fn new(exponents: impl IntoIterator<Item = u32>) -> Self {
        SquareWord(exponents.into_iter().filter(|&e| e != 0).collect())
    }

    pub fn unit() -> Self {
        SquareWord(Vec::new())
    }

    pub fn sq(i: u32) -> Self {
        SquareWord::new([i])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)] // zero/unit have their own names
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_admissible(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= 2 * w[1])
    }

    /// Index of the first factor of the leftmost inadmissible adjacent pair.
    pub fn leftmost_inadmissible(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0] < 2 * w[1])
    }

    /// Index of the first factor of the rightmost inadmissible adjacent pair.
    pub fn rightmost_inadmissible(&self) -> Option<usize> {
        self.0.windows(2).rposition(|w| w[0] < 2 * w[1])
    }

    pub fn last_exponent(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn concat(&self, other: &SquareWord) -> SquareWord {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        SquareWord(v)
    }

    /// Replace the pair at `pos, pos + 1` with the (zero-elided) pair `a, b`.
    pub(crate) fn splice_pair(&self, pos: usize, a: u32, b: u32) -> SquareWord {
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[..pos]);
        v.extend([a, b].into_iter().filter(|&e| e != 0));
        v.extend_from_slice(&self.0[pos + 2..]);
        SquareWord(v)
    }
}

impl Ord for SquareWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for SquareWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SquareWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (n, e) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "Sq{e}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_exponents_are_elided() {
        assert_eq!(SquareWord::new([0, 3, 0, 1]), SquareWord::new([3, 1]));
        assert!(SquareWord::new([0]).is_unit());
    }

    #[test]
    fn admissibility() {
        assert!(SquareWord::new([31, 15, 7, 3]).is_admissible());
        assert!(SquareWord::new([2, 1]).is_admissible());
        assert!(!SquareWord::new([2, 2]).is_admissible());
        assert!(SquareWord::unit().is_admissible());
        let w = SquareWord::new([1, 1, 4, 2, 2]);
        assert_eq!(w.leftmost_inadmissible(), Some(0));
        assert_eq!(w.rightmost_inadmissible(), Some(3));
    }

    #[test]
    fn ordering_is_degree_then_descending_lex() {
        let mut v = vec![SquareWord::new([2, 1]), SquareWord::new([3]), SquareWord::sq(1)];
        v.sort();
        assert_eq!(v, vec![SquareWord::sq(1), SquareWord::new([3]), SquareWord::new([2, 1])]);
    }
}
