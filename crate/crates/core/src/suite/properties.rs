//! Seeded randomized checks of the algebraic laws.
//!
//! Each check runs `cases` trials from a fixed seed and reports the first
//! counterexample, or on success the last value it examined.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::{act, sq_i, total_sq};
use crate::report::{ReportEntry, Status};
use crate::ring::{Monomial, RingElement, RingPresentation, RuleOrder};
use crate::steenrod::{
    in_left_ideal_sq1, multiply, s_element, to_admissible, to_admissible_with, AdemElement,
    RewriteOrder, SquareWord,
};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random word of exactly `degree`, at most six factors long.
pub fn random_word(rng: &mut impl Rng, degree: u32) -> SquareWord {
    if degree == 0 {
        return SquareWord::unit();
    }
    let len = rng.gen_range(1..=degree.min(6));
    let mut cuts: Vec<u32> = (1..degree).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<u32> = cuts.into_iter().take(len as usize - 1).collect();
    cuts.sort_unstable();
    let mut prev = 0;
    let mut parts = Vec::with_capacity(len as usize);
    for c in cuts.into_iter().chain([degree]) {
        parts.push(c - prev);
        prev = c;
    }
    SquareWord::new(parts)
}

/// Sum of up to `max_words` random words of one degree (may cancel to 0).
pub fn random_adem(rng: &mut impl Rng, degree: u32, max_words: usize) -> AdemElement {
    let n = rng.gen_range(1..=max_words);
    (0..n).map(|_| random_word(rng, degree)).collect()
}

/// A sparse random homogeneous element: the sum of up to three normal
/// monomials of `degree` (repeats cancel).
pub fn random_homogeneous(rng: &mut impl Rng, ring: &RingPresentation, degree: u32) -> RingElement {
    let basis = ring.monomials_in_degree(degree);
    if basis.is_empty() {
        return ring.zero();
    }
    let n = rng.gen_range(1..=3);
    let picked: Vec<Monomial> = (0..n).map(|_| basis[rng.gen_range(0..basis.len())].clone()).collect();
    ring.normalize(picked)
}

/// A random element with components in degrees `0..=max_degree`.
pub fn random_element(rng: &mut impl Rng, ring: &RingPresentation, max_degree: u32) -> RingElement {
    let mut out = ring.zero();
    for d in 0..=max_degree {
        if rng.gen_bool(0.4) {
            out = &out + &random_homogeneous(rng, ring, d);
        }
    }
    out
}

/// Random unreduced monomials with exponents up to 5 and degree at most
/// `max_degree`.
pub fn random_raw_monomials(rng: &mut impl Rng, ring: &RingPresentation, max_degree: u32, count: usize) -> Vec<Monomial> {
    let n = ring.generators().len();
    (0..count)
        .map(|_| loop {
            let exps: Vec<u32> = (0..n).map(|_| if rng.gen_bool(0.5) { rng.gen_range(0..=5) } else { 0 }).collect();
            let m = ring.monomial_from_exponents(&exps).expect("length matches");
            if m.degree() <= max_degree {
                break m;
            }
        })
        .collect()
}

/// Degree a ring's random elements are drawn from.
pub fn ring_degree_cap(ring: &RingPresentation) -> u32 {
    ring.top_degree().unwrap_or(4).min(8)
}

struct Trial {
    check: &'static str,
    start: Instant,
    last: String,
    failure: Option<String>,
}

impl Trial {
    fn new(check: &'static str) -> Self {
        Trial { check, start: Instant::now(), last: "0".into(), failure: None }
    }

    fn record(&mut self, ok: bool, value: impl FnOnce() -> String, counterexample: impl FnOnce() -> String) -> bool {
        if ok {
            self.last = value();
        } else {
            self.failure = Some(counterexample());
        }
        ok
    }

    fn finish(self, seed: u64, cases: usize) -> ReportEntry {
        let (status, witness) = match self.failure {
            Some(w) => (Status::Fail, w),
            None => (Status::Pass, self.last),
        };
        ReportEntry::new(self.check, status, witness, self.start)
            .param("seed", seed)
            .param("cases", cases)
    }
}

pub fn adem_idempotence(seed: u64, cases: usize, max_degree: u32) -> ReportEntry {
    let mut r = rng(seed);
    let mut t = Trial::new("property/adem-idempotent");
    for _ in 0..cases {
        let d = r.gen_range(0..=max_degree);
        let e = random_adem(&mut r, d, 3);
        let once = to_admissible(&e);
        let twice = to_admissible(&once);
        let ok = once == twice && once.is_canonical() && once.is_homogeneous();
        if !t.record(ok, || once.to_string(), || e.to_string()) {
            break;
        }
    }
    t.finish(seed, cases).param("max_degree", max_degree)
}

pub fn adem_strategy_independence(seed: u64, cases: usize, max_degree: u32) -> ReportEntry {
    let mut r = rng(seed);
    let mut t = Trial::new("property/adem-order-independent");
    for _ in 0..cases {
        let d = r.gen_range(0..=max_degree);
        let e = random_adem(&mut r, d, 2);
        let left = to_admissible_with(&e, RewriteOrder::LeftmostFirst);
        let right = to_admissible_with(&e, RewriteOrder::RightmostFirst);
        let ok = left == right && left == to_admissible(&e);
        if !t.record(ok, || left.to_string(), || e.to_string()) {
            break;
        }
    }
    t.finish(seed, cases).param("max_degree", max_degree)
}

/// Splits `total` into three nonnegative degrees.
fn three_degrees(r: &mut impl Rng, total: u32) -> [u32; 3] {
    let a = r.gen_range(0..=total);
    let b = r.gen_range(0..=total - a);
    [a, b, total - a - b]
}

pub fn multiply_associativity(seed: u64, cases: usize, max_degree: u32) -> ReportEntry {
    let mut r = rng(seed);
    let mut t = Trial::new("property/multiply-associative");
    for _ in 0..cases {
        let total = r.gen_range(0..=max_degree);
        let [da, db, dc] = three_degrees(&mut r, total);
        let (a, b, c) = (random_adem(&mut r, da, 2), random_adem(&mut r, db, 2), random_adem(&mut r, dc, 2));
        let left = multiply(&multiply(&a, &b), &c);
        let right = multiply(&a, &multiply(&b, &c));
        let degree_ok = left.degree().is_none_or(|d| d == total);
        let ok = left == right && degree_ok;
        if !t.record(ok, || left.to_string(), || format!("a={a}; b={b}; c={c}")) {
            break;
        }
    }
    t.finish(seed, cases).param("max_degree", max_degree)
}

pub fn left_ideal_closure(seed: u64, cases: usize, max_degree: u32) -> ReportEntry {
    let mut r = rng(seed);
    let mut t = Trial::new("property/left-ideal-closed");
    for _ in 0..cases {
        let da = r.gen_range(0..=max_degree / 2);
        let db = r.gen_range(0..=max_degree / 2);
        let a = random_adem(&mut r, da, 2);
        // e = b Sq^1 is a member by construction
        let e = multiply(&random_adem(&mut r, db, 2), &AdemElement::sq(1));
        let p = multiply(&a, &e);
        let ok = in_left_ideal_sq1(&e) && in_left_ideal_sq1(&p);
        if !t.record(ok, || p.to_string(), || format!("a={a}; e={e}")) {
            break;
        }
    }
    t.finish(seed, cases).param("max_degree", max_degree)
}

/// `act(e, u) = act(to_admissible(e), u)` on random words and polynomials.
pub fn action_respects_adem(seed: u64, cases: usize, word_degree: u32, poly_degree: u32) -> ReportEntry {
    let ring = RingPresentation::polynomial_in(4);
    let mut r = rng(seed);
    let mut t = Trial::new("property/action-respects-adem");
    for _ in 0..cases {
        let dw = r.gen_range(0..=word_degree);
        let e = random_adem(&mut r, dw, 2);
        let du = r.gen_range(0..=poly_degree);
        let u = random_homogeneous(&mut r, &ring, du);
        let lhs = act(&e, &u).expect("polynomial ring");
        let rhs = act(&to_admissible(&e), &u).expect("polynomial ring");
        if !t.record(lhs == rhs, || lhs.to_string(), || format!("e={e}; u={u}")) {
            break;
        }
    }
    t.finish(seed, cases).param("word_degree", word_degree).param("poly_degree", poly_degree)
}

/// Every word of degree `<= word_degree` against every monomial of degree
/// `<= poly_degree` in `F2[x1..x4]`. Returns the entry and the number of
/// pairs compared.
pub fn action_respects_adem_exhaustive(word_degree: u32, poly_degree: u32) -> (ReportEntry, usize) {
    fn compositions(n: u32, cur: &mut Vec<u32>, out: &mut Vec<SquareWord>) {
        if n == 0 {
            out.push(SquareWord::new(cur.iter().copied()));
            return;
        }
        for a in 1..=n {
            cur.push(a);
            compositions(n - a, cur, out);
            cur.pop();
        }
    }
    let ring = RingPresentation::polynomial_in(4);
    let mut words = Vec::new();
    for n in 0..=word_degree {
        compositions(n, &mut Vec::new(), &mut words);
    }
    let monomials: Vec<RingElement> = (0..=poly_degree)
        .flat_map(|d| ring.monomials_in_degree(d))
        .map(|m| ring.normalize([m]))
        .collect();
    let start = Instant::now();
    let mut failure = None;
    let mut compared = 0usize;
    let mut last = ring.zero();
    'outer: for w in &words {
        let e: AdemElement = w.clone().into();
        let canon = to_admissible(&e);
        for u in &monomials {
            compared += 1;
            last = act(&e, u).expect("polynomial ring");
            if last != act(&canon, u).expect("polynomial ring") {
                failure = Some(format!("e={e}; u={u}"));
                break 'outer;
            }
        }
    }
    let (status, witness) = match failure {
        Some(w) => (Status::Fail, w),
        None => (Status::Pass, last.to_string()),
    };
    let entry = ReportEntry::new("property/action-respects-adem-exhaustive", status, witness, start)
        .param("word_degree", word_degree)
        .param("poly_degree", poly_degree)
        .param("pairs", compared);
    (entry, compared)
}

pub fn cartan_multiplicativity(ring: &RingPresentation, seed: u64, cases: usize) -> ReportEntry {
    let mut r = rng(seed);
    let cap = ring_degree_cap(ring);
    let mut t = Trial::new("property/cartan");
    for _ in 0..cases {
        let u = random_element(&mut r, ring, cap);
        let v = random_element(&mut r, ring, cap);
        let lhs = total_sq(&(&u * &v)).expect("bundled ring");
        let rhs = &total_sq(&u).expect("bundled ring") * &total_sq(&v).expect("bundled ring");
        if !t.record(lhs == rhs, || lhs.to_string(), || format!("u={u}; v={v}")) {
            break;
        }
    }
    t.finish(seed, cases).param("ring", ring.name())
}

pub fn sq1_derivation(ring: &RingPresentation, seed: u64, cases: usize) -> ReportEntry {
    let mut r = rng(seed);
    let cap = ring_degree_cap(ring);
    let mut t = Trial::new("property/sq1-derivation");
    for _ in 0..cases {
        let u = random_element(&mut r, ring, cap);
        let v = random_element(&mut r, ring, cap);
        let lhs = sq_i(1, &(&u * &v)).expect("bundled ring");
        let rhs = &(&sq_i(1, &u).expect("bundled ring") * &v) + &(&u * &sq_i(1, &v).expect("bundled ring"));
        if !t.record(lhs == rhs, || lhs.to_string(), || format!("u={u}; v={v}")) {
            break;
        }
    }
    t.finish(seed, cases).param("ring", ring.name())
}

pub fn sq1_squared_zero(ring: &RingPresentation, seed: u64, cases: usize) -> ReportEntry {
    let mut r = rng(seed);
    let cap = ring_degree_cap(ring);
    let mut t = Trial::new("property/sq1-sq1-zero");
    for _ in 0..cases {
        let u = random_element(&mut r, ring, cap);
        let once = sq_i(1, &u).expect("bundled ring");
        let twice = sq_i(1, &once).expect("bundled ring");
        if !t.record(twice.is_zero(), || once.to_string(), || u.to_string()) {
            break;
        }
    }
    t.finish(seed, cases).param("ring", ring.name())
}

pub fn instability(ring: &RingPresentation, seed: u64, cases: usize) -> ReportEntry {
    let mut r = rng(seed);
    let cap = ring_degree_cap(ring);
    let mut t = Trial::new("property/instability");
    for _ in 0..cases {
        let n = r.gen_range(0..=cap);
        let u = random_homogeneous(&mut r, ring, n);
        let top = sq_i(n, &u).expect("bundled ring");
        let above = (n + 1..=n + 3).all(|i| sq_i(i, &u).expect("bundled ring").is_zero());
        let ok = above && top == &u * &u;
        if !t.record(ok, || top.to_string(), || u.to_string()) {
            break;
        }
    }
    t.finish(seed, cases).param("ring", ring.name())
}

/// `S_j beta = 0` for homogeneous `beta` of degree `k <= j`, `j >= 2`.
pub fn s_j_vanishing(ring: &RingPresentation, seed: u64, cases: usize, j_max: u32) -> ReportEntry {
    let mut r = rng(seed);
    let mut t = Trial::new("property/s-j-vanishes-below-j");
    for _ in 0..cases {
        let j = r.gen_range(2..=j_max);
        let k = r.gen_range(0..=j.min(ring_degree_cap(ring)));
        let beta = random_homogeneous(&mut r, ring, k);
        let v = act(&s_element(j).expect("j in range"), &beta).expect("bundled ring");
        if !t.record(v.is_zero(), || v.to_string(), || format!("j={j}; beta={beta}")) {
            break;
        }
    }
    t.finish(seed, cases).param("ring", ring.name()).param("j_max", j_max)
}

pub fn ring_confluence(ring: &RingPresentation, seed: u64, cases: usize, max_degree: u32) -> ReportEntry {
    let mut r = rng(seed);
    let mut t = Trial::new("property/ring-confluence");
    for _ in 0..cases {
        let n = r.gen_range(1..=4);
        let raw = random_raw_monomials(&mut r, ring, max_degree, n);
        let lo = ring.normalize_with(raw.iter().cloned(), RuleOrder::LowestGeneratorFirst);
        let hi = ring.normalize_with(raw.iter().cloned(), RuleOrder::HighestGeneratorFirst);
        let cached = ring.normalize(raw.iter().cloned());
        let ok = lo == hi && hi == cached && cached.monomials().all(|m| ring.is_normal(m));
        if !t.record(ok, || cached.to_string(), || format!("{} raw monomials", raw.len())) {
            break;
        }
    }
    t.finish(seed, cases).param("ring", ring.name())
}

/// Associativity, commutativity and the unit law for ring multiplication.
pub fn ring_laws(ring: &RingPresentation, seed: u64, cases: usize) -> ReportEntry {
    let mut r = rng(seed);
    let cap = ring_degree_cap(ring);
    let one = ring.one();
    let mut t = Trial::new("property/ring-laws");
    for _ in 0..cases {
        let a = random_element(&mut r, ring, cap);
        let b = random_element(&mut r, ring, cap);
        let c = random_element(&mut r, ring, cap);
        let ab = &a * &b;
        let ok = &ab * &c == &a * &(&b * &c) && ab == &b * &a && &a * &one == a;
        if !t.record(ok, || ab.to_string(), || format!("a={a}; b={b}; c={c}")) {
            break;
        }
    }
    t.finish(seed, cases).param("ring", ring.name())
}

/// `(a + b)^2 = a^2 + b^2`.
pub fn frobenius_additive(ring: &RingPresentation, seed: u64, cases: usize) -> ReportEntry {
    let mut r = rng(seed);
    let cap = ring_degree_cap(ring);
    let mut t = Trial::new("property/frobenius");
    for _ in 0..cases {
        let a = random_element(&mut r, ring, cap);
        let b = random_element(&mut r, ring, cap);
        let s = &a + &b;
        let lhs = &s * &s;
        let ok = lhs == &(&a * &a) + &(&b * &b);
        if !t.record(ok, || lhs.to_string(), || format!("a={a}; b={b}")) {
            break;
        }
    }
    t.finish(seed, cases).param("ring", ring.name())
}
