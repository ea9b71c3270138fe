use std::cmp::Ordering;
use std::collections::BTreeSet;

/// A product of generator powers, stored sparsely as `(generator, exponent)`
/// pairs with positive exponents, sorted by generator index. The total
/// degree is carried alongside so that monomials order without a ring.
///
/// Ordering is by degree, then descending lexicographic on the dense
/// exponent vector (the leading term sorts first within a degree).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    factors: Vec<(u32, u32)>,
}

pub(crate) type Terms = BTreeSet<Monomial>;

pub(crate) fn toggle(terms: &mut Terms, m: Monomial) {
    if !terms.remove(&m) {
        terms.insert(m);
    }
}

pub(crate) fn xor_into(terms: &mut Terms, other: &Terms) {
    for m in other {
        toggle(terms, m.clone());
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds a monomial from sparse factors; `degree_of` supplies generator
    /// degrees. Repeated generators are merged and zero exponents dropped.
    pub(crate) fn from_factors(
        factors: impl IntoIterator<Item = (u32, u32)>,
        degree_of: impl Fn(u32) -> u32,
    ) -> Self {
        let mut v: Vec<(u32, u32)> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (g, e) in v {
            match merged.last_mut() {
                Some((h, f)) if *h == g => *f += e,
                _ => merged.push((g, e)),
            }
        }
        let degree = merged.iter().map(|&(g, e)| degree_of(g) * e).sum();
        Monomial { degree, factors: merged }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `(generator index, exponent)` pairs, exponents positive.
    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, generator: u32) -> u32 {
        self.factors
            .binary_search_by_key(&generator, |&(g, _)| g)
            .map(|n| self.factors[n].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (self.factors.iter().peekable(), other.factors.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&(g, e)), Some(&&(h, f))) => match g.cmp(&h) {
                    Ordering::Less => {
                        out.push((g, e));
                        a.next();
                    }
                    Ordering::Greater => {
                        out.push((h, f));
                        b.next();
                    }
                    Ordering::Equal => {
                        out.push((g, e + f));
                        a.next();
                        b.next();
                    }
                },
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial { degree: self.degree + other.degree, factors: out }
    }

    /// Removes `exponent` copies of `generator` (must be present), whose
    /// degree is `generator_degree`.
    pub(crate) fn without_power(&self, generator: u32, exponent: u32, generator_degree: u32) -> Monomial {
        let mut factors = self.factors.clone();
        let n = factors
            .iter()
            .position(|&(g, _)| g == generator)
            .expect("generator present");
        assert!(factors[n].1 >= exponent);
        factors[n].1 -= exponent;
        if factors[n].1 == 0 {
            factors.remove(n);
        }
        Monomial { degree: self.degree - exponent * generator_degree, factors }
    }

    pub(crate) fn shifted(&self, offset: u32) -> Monomial {
        Monomial {
            degree: self.degree,
            factors: self.factors.iter().map(|&(g, e)| (g + offset, e)).collect(),
        }
    }

    pub(crate) fn max_generator(&self) -> Option<u32> {
        self.factors.last().map(|&(g, _)| g)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (x, y) in self.factors.iter().zip(&other.factors) {
                if x.0 != y.0 {
                    // a smaller index present only on one side means a larger
                    // dense entry there
                    return x.0.cmp(&y.0);
                }
                if x.1 != y.1 {
                    return y.1.cmp(&x.1);
                }
            }
            other.factors.len().cmp(&self.factors.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
