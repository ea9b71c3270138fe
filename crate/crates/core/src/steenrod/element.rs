use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, AddAssign};

use super::SquareWord;

/// An element of the mod-2 Steenrod algebra: a finite sum of square words,
/// each with coefficient 1. Addition is symmetric difference.
///
/// The type does not force admissibility; see [`crate::steenrod::to_admissible`]
/// for the canonical form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AdemElement {
    words: BTreeSet<SquareWord>,
}

impl AdemElement {
    pub fn zero() -> Self {
        AdemElement::default()
    }

    pub fn unit() -> Self {
        SquareWord::unit().into()
    }

    pub fn sq(i: u32) -> Self {
        SquareWord::sq(i).into()
    }

    pub fn from_exponents(exponents: impl IntoIterator<Item = u32>) -> Self {
        SquareWord::new(exponents).into()
    }

    pub fn from_words(words: impl IntoIterator<Item = SquareWord>) -> Self {
        let mut e = AdemElement::zero();
        for w in words {
            e.toggle(w);
        }
        e
    }

    /// Add a single word, cancelling it if already present.
    pub fn toggle(&mut self, word: SquareWord) {
        if !self.words.remove(&word) {
            self.words.insert(word);
        }
    }

    pub fn words(&self) -> impl Iterator<Item = &SquareWord> + '_ {
        self.words.iter()
    }

    #[allow(clippy::len_without_is_empty)] // zero/unit have their own names
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &SquareWord) -> bool {
        self.words.contains(word)
    }

    pub fn is_canonical(&self) -> bool {
        self.words.iter().all(SquareWord::is_admissible)
    }

    /// The common degree of all words, or `None` for zero and for
    /// non-homogeneous elements.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.words.iter().map(SquareWord::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }
}

impl From<SquareWord> for AdemElement {
    fn from(word: SquareWord) -> Self {
        let mut words = BTreeSet::new();
        words.insert(word);
        AdemElement { words }
    }
}

impl FromIterator<SquareWord> for AdemElement {
    fn from_iter<I: IntoIterator<Item = SquareWord>>(iter: I) -> Self {
        AdemElement::from_words(iter)
    }
}

impl AddAssign<&AdemElement> for AdemElement {
    fn add_assign(&mut self, rhs: &AdemElement) {
        for w in &rhs.words {
            self.toggle(w.clone());
        }
    }
}

impl AddAssign for AdemElement {
    fn add_assign(&mut self, rhs: AdemElement) {
        for w in rhs.words {
            self.toggle(w);
        }
    }
}

impl Add for &AdemElement {
    type Output = AdemElement;

    fn add(self, rhs: &AdemElement) -> AdemElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl fmt::Display for AdemElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.words.is_empty() {
            return f.write_str("0");
        }
        for (n, w) in self.words.iter().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}
