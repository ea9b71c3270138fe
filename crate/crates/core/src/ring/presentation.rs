use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, RwLock};

use super::monomial::{toggle, xor_into, Monomial, Terms};
use super::{RingElement, RingError};

/// A graded generator. `sq_table` maps `i` to `Sq^i` of the generator for
/// `1 <= i <= degree`; a missing top entry means `Sq^degree g = g^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedGenerator {
    pub name: String,
    pub degree: u32,
    pub(crate) sq_table: Option<BTreeMap<u32, Terms>>,
}

impl GradedGenerator {
    pub fn has_sq_table(&self) -> bool {
        self.sq_table.is_some()
    }
}

/// `g^exponent = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct PowerRule {
    pub exponent: u32,
    pub rhs: Terms,
}

/// Order in which power rules fire during normalization. The presentation
/// invariants make the result independent of the choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleOrder {
    LowestGeneratorFirst,
    HighestGeneratorFirst,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Structure {
    pub generators: Vec<GradedGenerator>,
    pub rules: Vec<Option<PowerRule>>,
    pub top_degree: Option<u32>,
}

pub(crate) struct Inner {
    pub name: String,
    pub structure: Structure,
    id: u64,
    normal_cache: RwLock<HashMap<Monomial, Terms>>,
    pub sq_cache: RwLock<HashMap<(Monomial, u32), Terms>>,
}

/// A finitely presented graded-commutative F2-algebra: generators with
/// per-generator power rules and an optional top degree above which every
/// monomial vanishes.
///
/// Cheap to clone; clones share normal-form and action caches. Elements
/// remember their ring and operations across different rings are rejected.
#[derive(Clone)]
pub struct RingPresentation(pub(crate) Arc<Inner>);

impl std::fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RingPresentation")
            .field("name", &self.0.name)
            .field("generators", &self.0.structure.generators.iter().map(|g| (&g.name, g.degree)).collect::<Vec<_>>())
            .field("top_degree", &self.0.structure.top_degree)
            .finish()
    }
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.0.structure == other.0.structure
    }
}

impl Eq for RingPresentation {}

impl RingPresentation {
    /// Validates `structure` and wraps it. All presentation invariants are
    /// checked here.
    pub(crate) fn from_structure(name: String, structure: Structure) -> Result<Self, RingError> {
        let mut hasher = DefaultHasher::new();
        structure.hash(&mut hasher);
        let ring = RingPresentation(Arc::new(Inner {
            name,
            id: hasher.finish(),
            structure,
            normal_cache: RwLock::new(HashMap::new()),
            sq_cache: RwLock::new(HashMap::new()),
        }));
        ring.validate()?;
        Ok(ring)
    }

    fn validate(&self) -> Result<(), RingError> {
        let s = &self.0.structure;
        let mut seen = std::collections::HashSet::new();
        for g in &s.generators {
            if g.degree == 0 {
                return Err(RingError::ZeroDegree(g.name.clone()));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(RingError::DuplicateGenerator(g.name.clone()));
            }
        }
        for (idx, rule) in s.rules.iter().enumerate() {
            if let Some(rule) = rule {
                check_rule(s, idx as u32, rule)?;
            }
        }
        for (idx, g) in s.generators.iter().enumerate() {
            let Some(table) = &g.sq_table else { continue };
            for (&i, value) in table {
                if i == 0 || i > g.degree {
                    return Err(RingError::SqIndexOutOfRange { generator: g.name.clone(), i, degree: g.degree });
                }
                check_homogeneous(value, g.degree + i, || format!("Sq{i} {}", g.name))?;
            }
            if let Some(top) = table.get(&g.degree) {
                let square = Monomial::from_factors([(idx as u32, 2)], |k| s.generators[k as usize].degree);
                if self.normalize_terms(top.iter().cloned()) != self.normal_form(&square) {
                    return Err(RingError::SqTopMismatch(g.name.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    /// Structural fingerprint; equal presentations share it.
    pub fn id(&self) -> u64 {
        self.0.id
    }

    pub(crate) fn structure(&self) -> &Structure {
        &self.0.structure
    }

    pub fn generators(&self) -> &[GradedGenerator] {
        &self.0.structure.generators
    }

    pub fn top_degree(&self) -> Option<u32> {
        self.0.structure.top_degree
    }

    pub fn generator_index(&self, name: &str) -> Option<u32> {
        self.generators().iter().position(|g| g.name == name).map(|n| n as u32)
    }

    pub(crate) fn generator_degree(&self, index: u32) -> u32 {
        self.generators()[index as usize].degree
    }

    /// `(k, r)` for the power rule `g^k = r`, if any.
    pub fn power_rule(&self, generator: u32) -> Option<(u32, RingElement)> {
        self.0.structure.rules.get(generator as usize)?.as_ref().map(|r| {
            (r.exponent, self.normalize(r.rhs.iter().cloned()))
        })
    }

    pub(crate) fn rule_exponent(&self, generator: u32) -> Option<u32> {
        self.0.structure.rules[generator as usize].as_ref().map(|r| r.exponent)
    }

    /// The declared `Sq^i` of a generator; the top entry defaults to the
    /// square. `None` when the table is absent or lacks the entry.
    pub fn sq_table_entry(&self, generator: u32, i: u32) -> Option<RingElement> {
        self.sq_table_terms(generator, i).map(|t| self.normalize(t))
    }

    pub(crate) fn sq_table_terms(&self, generator: u32, i: u32) -> Option<Terms> {
        let g = &self.generators()[generator as usize];
        if i == 0 {
            return Some(Terms::from([Monomial::from_factors([(generator, 1)], |_| g.degree)]));
        }
        if i > g.degree {
            return Some(Terms::new());
        }
        if let Some(v) = g.sq_table.as_ref().and_then(|t| t.get(&i)) {
            return Some(v.clone());
        }
        if i == g.degree {
            return Some(Terms::from([Monomial::from_factors([(generator, 2)], |_| g.degree)]));
        }
        None
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn monomial_from_exponents(&self, exponents: &[u32]) -> Result<Monomial, RingError> {
        if exponents.len() != self.generators().len() {
            return Err(RingError::ExponentLength { expected: self.generators().len(), got: exponents.len() });
        }
        Ok(self.raw_monomial(exponents.iter().enumerate().map(|(g, &e)| (g as u32, e))))
    }

    pub(crate) fn raw_monomial(&self, factors: impl IntoIterator<Item = (u32, u32)>) -> Monomial {
        Monomial::from_factors(factors, |g| self.generator_degree(g))
    }

    /// Dense exponent vector of a monomial in this ring.
    pub fn exponents_of(&self, m: &Monomial) -> Vec<u32> {
        let mut v = vec![0; self.generators().len()];
        for &(g, e) in m.factors() {
            v[g as usize] = e;
        }
        v
    }

    /// True when no power rule or truncation applies to `m`.
    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.violation(m, RuleOrder::HighestGeneratorFirst).is_none()
            && self.top_degree().is_none_or(|t| m.degree() <= t)
    }

    fn violation(&self, m: &Monomial, order: RuleOrder) -> Option<(u32, &PowerRule)> {
        let rules = &self.0.structure.rules;
        let hit = |&&(g, e): &&(u32, u32)| {
            rules[g as usize].as_ref().filter(|r| e >= r.exponent).map(|r| (g, r))
        };
        match order {
            RuleOrder::LowestGeneratorFirst => m.factors().iter().find_map(|f| hit(&f)),
            RuleOrder::HighestGeneratorFirst => m.factors().iter().rev().find_map(|f| hit(&f)),
        }
    }

    fn truncated(&self, m: &Monomial) -> bool {
        self.top_degree().is_some_and(|t| m.degree() > t)
    }

    /// Normal form of one monomial, memoized per ring.
    pub(crate) fn normal_form(&self, m: &Monomial) -> Terms {
        if self.truncated(m) {
            return Terms::new();
        }
        let Some((g, rule)) = self.violation(m, RuleOrder::HighestGeneratorFirst) else {
            return Terms::from([m.clone()]);
        };
        if let Some(hit) = self.0.normal_cache.read().unwrap().get(m) {
            return hit.clone();
        }
        let rest = m.without_power(g, rule.exponent, self.generator_degree(g));
        let mut out = Terms::new();
        for r in &rule.rhs {
            xor_into(&mut out, &self.normal_form(&rest.mul(r)));
        }
        self.0.normal_cache.write().unwrap().insert(m.clone(), out.clone());
        out
    }

    fn normal_form_uncached(&self, m: &Monomial, order: RuleOrder) -> Terms {
        if self.truncated(m) {
            return Terms::new();
        }
        let Some((g, rule)) = self.violation(m, order) else {
            return Terms::from([m.clone()]);
        };
        let rest = m.without_power(g, rule.exponent, self.generator_degree(g));
        let mut out = Terms::new();
        for r in &rule.rhs {
            xor_into(&mut out, &self.normal_form_uncached(&rest.mul(r), order));
        }
        out
    }

    pub(crate) fn normalize_terms(&self, raw: impl IntoIterator<Item = Monomial>) -> Terms {
        let mut out = Terms::new();
        for m in raw {
            if self.is_normal(&m) {
                toggle(&mut out, m);
            } else {
                xor_into(&mut out, &self.normal_form(&m));
            }
        }
        out
    }

    /// The normal form of a raw sum of monomials over this ring's generators.
    pub fn normalize(&self, raw: impl IntoIterator<Item = Monomial>) -> RingElement {
        RingElement::from_terms(self.clone(), self.normalize_terms(raw))
    }

    /// Normalization without the cache, firing rules in the given order.
    pub fn normalize_with(&self, raw: impl IntoIterator<Item = Monomial>, order: RuleOrder) -> RingElement {
        let mut out = Terms::new();
        for m in raw {
            xor_into(&mut out, &self.normal_form_uncached(&m, order));
        }
        RingElement::from_terms(self.clone(), out)
    }

    pub fn zero(&self) -> RingElement {
        RingElement::from_terms(self.clone(), Terms::new())
    }

    pub fn one(&self) -> RingElement {
        self.normalize([Monomial::one()])
    }

    pub fn generator(&self, name: &str) -> Result<RingElement, RingError> {
        let g = self
            .generator_index(name)
            .ok_or_else(|| RingError::UnknownGenerator(name.to_string()))?;
        Ok(self.generator_at(g))
    }

    pub(crate) fn generator_at(&self, g: u32) -> RingElement {
        self.normalize([self.raw_monomial([(g, 1)])])
    }

    fn check_same(&self, e: &RingElement) -> Result<(), RingError> {
        if e.ring().id() == self.id() {
            Ok(())
        } else {
            Err(RingError::MismatchedRing)
        }
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(a)?;
        self.check_same(b)?;
        let mut t = a.terms().clone();
        xor_into(&mut t, b.terms());
        Ok(RingElement::from_terms(self.clone(), t))
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement, RingError> {
        self.check_same(a)?;
        self.check_same(b)?;
        Ok(RingElement::from_terms(self.clone(), self.mul_terms(a.terms(), b.terms())))
    }

    pub(crate) fn mul_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut out = Terms::new();
        for x in a {
            for y in b {
                let p = x.mul(y);
                if self.is_normal(&p) {
                    toggle(&mut out, p);
                } else {
                    xor_into(&mut out, &self.normal_form(&p));
                }
            }
        }
        out
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        a.is_zero()
    }

    /// Coefficient (0 or 1) of a normal-form monomial in `a`.
    pub fn monomial_coefficient(&self, a: &RingElement, m: &Monomial) -> Result<u8, RingError> {
        self.check_same(a)?;
        if !self.is_normal(m) {
            return Err(RingError::NonNormalMonomial);
        }
        Ok(u8::from(a.terms().contains(m)))
    }

    /// All normal-form monomials of degree `n`, leading term first.
    pub fn monomials_in_degree(&self, n: u32) -> Vec<Monomial> {
        if self.top_degree().is_some_and(|t| n > t) {
            return Vec::new();
        }
        let gens = self.generators();
        let mut out = Vec::new();
        let mut exps = vec![0u32; gens.len()];
        self.fill_degree(0, n, &mut exps, &mut out);
        out
    }

    fn fill_degree(&self, idx: usize, remaining: u32, exps: &mut [u32], out: &mut Vec<Monomial>) {
        if idx == exps.len() {
            if remaining == 0 {
                out.push(self.raw_monomial(exps.iter().enumerate().map(|(g, &e)| (g as u32, e))));
            }
            return;
        }
        let d = self.generators()[idx].degree;
        let mut max = remaining / d;
        if let Some(k) = self.rule_exponent(idx as u32) {
            max = max.min(k - 1);
        }
        for e in (0..=max).rev() {
            exps[idx] = e;
            self.fill_degree(idx + 1, remaining - e * d, exps, out);
        }
        exps[idx] = 0;
    }

    /// Degree-`n` basis. Rejected unless the whole ring is finite: a top
    /// degree is set or every generator carries a power rule.
    pub fn basis_in_degree(&self, n: u32) -> Result<Vec<Monomial>, RingError> {
        let finite = self.top_degree().is_some()
            || self.0.structure.rules.iter().all(Option::is_some);
        if !finite {
            return Err(RingError::InfiniteBasis);
        }
        Ok(self.monomials_in_degree(n))
    }

    pub fn dim_in_degree(&self, n: u32) -> usize {
        self.monomials_in_degree(n).len()
    }

    /// The presentation in the text file format (covers expanded).
    pub fn to_text(&self) -> String {
        let s = self.structure();
        let mut out = format!("ring {}\n", self.name());
        if let Some(t) = s.top_degree {
            let _ = writeln!(out, "topdeg {t}");
        }
        for g in &s.generators {
            let _ = writeln!(out, "gen {} {}", g.name, g.degree);
        }
        for g in &s.generators {
            if let Some(table) = &g.sq_table {
                for (i, v) in table {
                    let _ = writeln!(out, "sq {} {} = {}", g.name, i, self.format_terms(v));
                }
            }
        }
        for (g, rule) in s.generators.iter().zip(&s.rules) {
            if let Some(rule) = rule {
                let _ = writeln!(out, "rel {}^{} = {}", g.name, rule.exponent, self.format_terms(&rule.rhs));
            }
        }
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        m.factors()
            .iter()
            .map(|&(g, e)| {
                let name = &self.generators()[g as usize].name;
                if e == 1 { name.clone() } else { format!("{name}^{e}") }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub(crate) fn format_terms(&self, t: &Terms) -> String {
        if t.is_empty() {
            return "0".to_string();
        }
        t.iter().map(|m| self.format_monomial(m)).collect::<Vec<_>>().join(" + ")
    }
}

pub(crate) fn check_homogeneous(t: &Terms, degree: u32, what: impl Fn() -> String) -> Result<(), RingError> {
    if t.iter().all(|m| m.degree() == degree) {
        Ok(())
    } else {
        Err(RingError::NotHomogeneous { what: what(), expected: degree })
    }
}

pub(crate) fn check_rule(s: &Structure, g: u32, rule: &PowerRule) -> Result<(), RingError> {
    let gen = &s.generators[g as usize];
    if rule.exponent < 2 {
        return Err(RingError::RuleExponent { generator: gen.name.clone(), exponent: rule.exponent });
    }
    check_homogeneous(&rule.rhs, rule.exponent * gen.degree, || format!("right-hand side of {}^{}", gen.name, rule.exponent))?;
    for m in &rule.rhs {
        if m.max_generator().is_some_and(|h| h > g) || m.exponent(g) >= rule.exponent {
            return Err(RingError::RuleOrder { generator: gen.name.clone() });
        }
    }
    Ok(())
}
