//! Building presentations: incremental construction, cover adjunction and
//! tensor products.

use std::collections::BTreeMap;

use super::monomial::{Monomial, Terms};
use super::parse::parse_terms;
use super::presentation::{check_homogeneous, check_rule, GradedGenerator, PowerRule, Structure};
use super::{RingElement, RingError, RingPresentation};
use crate::syntax::ParseError;

/// Incremental presentation builder. Local invariants are checked as each
/// piece is added; [`RingBuilder::build`] runs the full validation.
#[derive(Clone, Debug)]
pub struct RingBuilder {
    name: String,
    structure: Structure,
}

impl RingBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        RingBuilder {
            name: name.into(),
            structure: Structure { generators: Vec::new(), rules: Vec::new(), top_degree: None },
        }
    }

    pub fn from_ring(ring: &RingPresentation) -> Self {
        RingBuilder { name: ring.name().to_string(), structure: ring.structure().clone() }
    }

    pub fn set_top_degree(&mut self, top: Option<u32>) -> &mut Self {
        self.structure.top_degree = top;
        self
    }

    fn index(&self, name: &str) -> Result<u32, RingError> {
        self.structure
            .generators
            .iter()
            .position(|g| g.name == name)
            .map(|n| n as u32)
            .ok_or_else(|| RingError::UnknownGenerator(name.to_string()))
    }

    fn degree_of(&self, g: u32) -> u32 {
        self.structure.generators[g as usize].degree
    }

    pub fn add_generator(&mut self, name: &str, degree: u32) -> Result<u32, RingError> {
        if degree == 0 {
            return Err(RingError::ZeroDegree(name.to_string()));
        }
        if self.index(name).is_ok() {
            return Err(RingError::DuplicateGenerator(name.to_string()));
        }
        self.structure.generators.push(GradedGenerator { name: name.to_string(), degree, sq_table: None });
        self.structure.rules.push(None);
        Ok(self.structure.generators.len() as u32 - 1)
    }

    /// Parses an element over the generators declared so far.
    pub fn parse_terms(&self, text: &str) -> Result<Terms, ParseError> {
        let lookup = |name: &str| self.index(name).ok().map(|g| (g, self.degree_of(g)));
        parse_terms(text, &lookup)
    }

    pub fn monomial(&self, factors: &[(&str, u32)]) -> Result<Monomial, RingError> {
        let idx = factors
            .iter()
            .map(|&(n, e)| self.index(n).map(|g| (g, e)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Monomial::from_factors(idx, |g| self.degree_of(g)))
    }

    pub fn add_sq_entry(&mut self, name: &str, i: u32, value: Terms) -> Result<&mut Self, RingError> {
        let g = self.index(name)?;
        let degree = self.degree_of(g);
        if i == 0 || i > degree {
            return Err(RingError::SqIndexOutOfRange { generator: name.to_string(), i, degree });
        }
        check_homogeneous(&value, degree + i, || format!("Sq{i} {name}"))?;
        let table = self.structure.generators[g as usize].sq_table.get_or_insert_with(BTreeMap::new);
        if table.insert(i, value).is_some() {
            return Err(RingError::DuplicateSqEntry { generator: name.to_string(), i });
        }
        Ok(self)
    }

    pub fn add_power_rule(&mut self, name: &str, exponent: u32, rhs: Terms) -> Result<&mut Self, RingError> {
        let g = self.index(name)?;
        if self.structure.rules[g as usize].is_some() {
            return Err(RingError::DuplicateRule(name.to_string()));
        }
        let rule = PowerRule { exponent, rhs };
        check_rule(&self.structure, g, &rule)?;
        self.structure.rules[g as usize] = Some(rule);
        Ok(self)
    }

    /// Adjoins a degree-1 generator `name` with `name^2 = epsilon * name`,
    /// raising the top degree by one when it is set.
    pub fn add_cover(&mut self, name: &str, epsilon: Terms) -> Result<&mut Self, RingError> {
        check_homogeneous(&epsilon, 1, || format!("cover class for {name}"))?;
        let g = self.add_generator(name, 1)?;
        let delta = Monomial::from_factors([(g, 1)], |_| 1);
        let rhs = epsilon.iter().map(|m| m.mul(&delta)).collect();
        self.add_power_rule(name, 2, rhs)?;
        if let Some(t) = self.structure.top_degree.as_mut() {
            *t += 1;
        }
        Ok(self)
    }

    pub fn build(self) -> Result<RingPresentation, RingError> {
        RingPresentation::from_structure(self.name, self.structure)
    }
}

impl RingPresentation {
    /// `A[delta] / (delta^2 - epsilon * delta)` for a degree-1 class `epsilon`.
    pub fn adjoin_cover(&self, name: &str, epsilon: &RingElement) -> Result<RingPresentation, RingError> {
        if epsilon.ring().id() != self.id() {
            return Err(RingError::MismatchedRing);
        }
        let mut b = RingBuilder::from_ring(self);
        b.add_cover(name, epsilon.terms().clone())?;
        b.build()
    }

    /// Tensor product over F2. Generators of `other` follow those of `self`;
    /// clashing names get `_2` appended until unique.
    pub fn tensor(&self, other: &RingPresentation) -> RingPresentation {
        let a = self.structure();
        let b = other.structure();
        let offset = a.generators.len() as u32;
        let mut generators = a.generators.clone();
        for g in &b.generators {
            let mut name = g.name.clone();
            while generators.iter().any(|h| h.name == name) {
                name.push_str("_2");
            }
            let sq_table = g.sq_table.as_ref().map(|t| {
                t.iter().map(|(&i, v)| (i, shift_terms(v, offset))).collect()
            });
            generators.push(GradedGenerator { name, degree: g.degree, sq_table });
        }
        let mut rules = a.rules.clone();
        rules.extend(b.rules.iter().map(|r| {
            r.as_ref().map(|r| PowerRule { exponent: r.exponent, rhs: shift_terms(&r.rhs, offset) })
        }));
        let top_degree = match (effective_top(a), effective_top(b)) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        let name = match (a.generators.is_empty(), b.generators.is_empty()) {
            (_, true) => self.name().to_string(),
            (true, false) => other.name().to_string(),
            _ => format!("{}_x_{}", self.name(), other.name()),
        };
        RingPresentation::from_structure(name, Structure { generators, rules, top_degree })
            .expect("tensor of valid presentations is valid")
    }

    /// Image in this tensor product of an element of its left factor.
    pub fn include_left(&self, e: &RingElement) -> Result<RingElement, RingError> {
        let left = e.ring().structure();
        let ours = self.structure();
        let is_prefix = left.generators.len() <= ours.generators.len()
            && left.generators.iter().zip(&ours.generators).all(|(a, b)| a.degree == b.degree);
        if !is_prefix {
            return Err(RingError::MismatchedRing);
        }
        Ok(self.normalize(e.terms().iter().cloned()))
    }

    /// Image in this tensor product (with left factor `left`) of an element
    /// of the right factor.
    pub fn include_right(&self, left: &RingPresentation, e: &RingElement) -> Result<RingElement, RingError> {
        let offset = left.generators().len() as u32;
        Ok(self.normalize(e.terms().iter().map(|m| m.shifted(offset))))
    }

    /// `F2[names]` with every generator in degree 1.
    pub fn polynomial(name: &str, generators: &[&str]) -> RingPresentation {
        let mut b = RingBuilder::new(name);
        for g in generators {
            b.add_generator(g, 1).expect("distinct generator names");
        }
        b.build().expect("polynomial ring is valid")
    }

    /// `F2[x_1, ..., x_s]`, generators named `x1`, ..., `xs`.
    pub fn polynomial_in(s: usize) -> RingPresentation {
        let names: Vec<String> = (1..=s).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        RingPresentation::polynomial(&format!("F2_x{s}"), &refs)
    }

    /// Exterior algebra on degree-1 generators, truncated above degree
    /// `generators.len()`.
    pub fn exterior(name: &str, generators: &[&str]) -> RingPresentation {
        let mut b = RingBuilder::new(name);
        b.set_top_degree(Some(generators.len() as u32));
        for g in generators {
            b.add_generator(g, 1).expect("distinct generator names");
            b.add_power_rule(g, 2, Terms::new()).expect("exterior rule");
        }
        b.build().expect("exterior algebra is valid")
    }

    /// The ground field, a presentation with no generators.
    pub fn ground() -> RingPresentation {
        RingBuilder::new("F2").build().expect("empty presentation is valid")
    }
}

// A presentation without generators is concentrated in degree 0.
fn effective_top(s: &Structure) -> Option<u32> {
    if s.generators.is_empty() {
        Some(s.top_degree.unwrap_or(0))
    } else {
        s.top_degree
    }
}

fn shift_terms(t: &Terms, offset: u32) -> Terms {
    t.iter().map(|m| m.shifted(offset)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_presentation;

    fn base() -> RingPresentation {
        parse_presentation("ring S\ntopdeg 4\ngen alpha 1\ngen beta 1\nrel alpha^4 = 0\nrel beta^2 = 0").unwrap()
    }

    #[test]
    fn cover_relation() {
        let s = base();
        let alpha = s.generator("alpha").unwrap();
        let n = s.adjoin_cover("delta", &alpha).unwrap();
        assert_eq!(n.top_degree(), Some(5));
        let d = n.generator("delta").unwrap();
        assert_eq!(&d * &d, n.parse_element("alpha*delta").unwrap());
        let split = s.adjoin_cover("delta", &s.zero()).unwrap();
        let d = split.generator("delta").unwrap();
        assert!((&d * &d).is_zero());
    }

    #[test]
    fn cover_dimension_formula() {
        let s = base();
        let mut ring = s.clone();
        for (name, eps) in [("d", "alpha"), ("d'", "alpha"), ("g", "beta"), ("g'", "beta + alpha")] {
            let e = ring.parse_element(eps).unwrap();
            let next = ring.adjoin_cover(name, &e).unwrap();
            for n in 0..=next.top_degree().unwrap() + 1 {
                let expect = ring.dim_in_degree(n) + if n > 0 { ring.dim_in_degree(n - 1) } else { 0 };
                assert_eq!(next.dim_in_degree(n), expect, "degree {n} after {name}");
            }
            ring = next;
        }
    }

    #[test]
    fn cover_rejects_wrong_degree() {
        let s = base();
        let a2 = s.parse_element("alpha^2").unwrap();
        assert!(matches!(s.adjoin_cover("d", &a2), Err(RingError::NotHomogeneous { .. })));
        let other = RingPresentation::polynomial_in(1);
        assert_eq!(s.adjoin_cover("d", &other.generator("x1").unwrap()).unwrap_err(), RingError::MismatchedRing);
    }

    #[test]
    fn tensor_of_polynomial_rings() {
        let x = RingPresentation::polynomial("A", &["x"]);
        let y = RingPresentation::polynomial("B", &["y"]);
        assert_eq!(x.tensor(&y), RingPresentation::polynomial("C", &["x", "y"]));
        let ground = RingPresentation::ground();
        assert_eq!(base().tensor(&ground), base());
        assert_eq!(ground.tensor(&base()), base());
        assert_eq!(ground.tensor(&base()).top_degree(), Some(4));
    }

    #[test]
    fn tensor_renames_and_adds_top_degrees() {
        let sq = base().tensor(&base());
        let names: Vec<&str> = sq.generators().iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, ["alpha", "beta", "alpha_2", "beta_2"]);
        assert_eq!(sq.top_degree(), Some(8));
        let top = sq.parse_element("alpha^3*beta*alpha_2^3*beta_2").unwrap();
        assert!(!top.is_zero());
        let e = RingPresentation::exterior("E", &["t1", "t2"]);
        assert_eq!(base().tensor(&e).top_degree(), Some(6));
        assert_eq!(RingPresentation::polynomial_in(2).tensor(&e).top_degree(), None);
    }

    #[test]
    fn inclusions_into_tensor() {
        let a = base();
        let e = RingPresentation::exterior("E", &["t1", "t2"]);
        let p = a.tensor(&e);
        let t1 = p.include_right(&a, &e.generator("t1").unwrap()).unwrap();
        assert_eq!(t1, p.generator("t1").unwrap());
        let al = p.include_left(&a.generator("alpha").unwrap()).unwrap();
        assert_eq!(al, p.generator("alpha").unwrap());
    }
}
