use std::fmt;
use std::ops::{Add, Mul};

use super::monomial::{xor_into, Monomial, Terms};
use super::RingPresentation;

/// An F2-combination of normal-form monomials in a presented ring.
#[derive(Clone)]
pub struct RingElement {
    ring: RingPresentation,
    terms: Terms,
}

impl RingElement {
    pub(crate) fn from_terms(ring: RingPresentation, terms: Terms) -> Self {
        RingElement { ring, terms }
    }

    pub fn ring(&self) -> &RingPresentation {
        &self.ring
    }

    pub(crate) fn terms(&self) -> &Terms {
        &self.terms
    }

    /// Monomials, leading term first within each degree.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.iter()
    }

    #[allow(clippy::len_without_is_empty)] // zero/unit have their own names
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Common degree of all monomials; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.iter().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Homogeneous component of degree `n`.
    pub fn component(&self, n: u32) -> RingElement {
        let terms = self.terms.iter().filter(|m| m.degree() == n).cloned().collect();
        RingElement::from_terms(self.ring.clone(), terms)
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring.id() == other.ring.id() && self.terms == other.terms
    }
}

impl Eq for RingElement {}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_terms(&self.terms))
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self})")
    }
}

/// # Panics
/// If the operands belong to different rings; use [`RingPresentation::add`]
/// for a checked version.
impl Add for &RingElement {
    type Output = RingElement;

    fn add(self, rhs: &RingElement) -> RingElement {
        assert_eq!(self.ring.id(), rhs.ring.id(), "adding elements of different rings");
        let mut t = self.terms.clone();
        xor_into(&mut t, &rhs.terms);
        RingElement::from_terms(self.ring.clone(), t)
    }
}

/// # Panics
/// If the operands belong to different rings; use [`RingPresentation::mul`]
/// for a checked version.
impl Mul for &RingElement {
    type Output = RingElement;

    fn mul(self, rhs: &RingElement) -> RingElement {
        self.ring.mul(self, rhs).expect("multiplying elements of different rings")
    }
}
