//! Steenrod squares acting on presented rings through the Cartan formula.
//!
//! `Sq^i` of a monomial is the degree-`i` part of the product of the total
//! squares of its generator powers. A degree-1 generator uses the closed
//! form `Sq(x^a) = x^a (1 + x)^a`; higher generators read their `sq_table`.

use std::time::Instant;

use thiserror::Error;

use crate::binom::binom_mod2;
use crate::report::{ReportEntry, Status};
use crate::ring::{Monomial, RingElement, RingPresentation};
use crate::steenrod::AdemElement;

type Terms = std::collections::BTreeSet<Monomial>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("Sq{i} of generator '{generator}' is not declared (missing sq table entry)")]
    MissingSqTable { generator: String, i: u32 },
}

/// Graded pieces `Sq^0 .. Sq^cap` of `g^a` for one generator.
fn power_pieces(ring: &RingPresentation, g: u32, a: u32, cap: u32) -> Result<Vec<Terms>, ActionError> {
    let gen = &ring.generators()[g as usize];
    let mut pieces = vec![Terms::new(); cap as usize + 1];
    if gen.degree == 1 {
        for t in 0..=cap.min(a) {
            if binom_mod2(i64::from(a), i64::from(t)) == 1 {
                let m = ring.raw_monomial([(g, a + t)]);
                pieces[t as usize] = ring.normalize_terms([m]);
            }
        }
        return Ok(pieces);
    }
    let top = cap.min(gen.degree);
    let mut total_sq = Vec::with_capacity(top as usize + 1);
    for i in 0..=top {
        let t = ring.sq_table_terms(g, i).ok_or_else(|| ActionError::MissingSqTable {
            generator: gen.name.clone(),
            i,
        })?;
        total_sq.push(ring.normalize_terms(t));
    }
    pieces[0] = ring.normalize_terms([Monomial::one()]);
    for _ in 0..a {
        pieces = convolve(ring, &pieces, &total_sq, cap);
    }
    Ok(pieces)
}

fn convolve(ring: &RingPresentation, a: &[Terms], b: &[Terms], cap: u32) -> Vec<Terms> {
    let mut out = vec![Terms::new(); cap as usize + 1];
    for (s, x) in a.iter().enumerate() {
        if x.is_empty() {
            continue;
        }
        for (t, y) in b.iter().enumerate() {
            if s + t > cap as usize || y.is_empty() {
                continue;
            }
            let p = ring.mul_terms(x, y);
            xor_into(&mut out[s + t], &p);
        }
    }
    out
}

fn xor_into(acc: &mut Terms, other: &Terms) {
    for m in other {
        if !acc.remove(m) {
            acc.insert(m.clone());
        }
    }
}

fn sq_monomial(ring: &RingPresentation, i: u32, m: &Monomial) -> Result<Terms, ActionError> {
    if i == 0 {
        return Ok(Terms::from([m.clone()]));
    }
    if i > m.degree() {
        return Ok(Terms::new());
    }
    let key = (m.clone(), i);
    if let Some(hit) = ring.0.sq_cache.read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let mut acc = vec![Terms::new(); i as usize + 1];
    acc[0] = Terms::from([Monomial::one()]);
    for &(g, a) in m.factors() {
        let pieces = power_pieces(ring, g, a, i)?;
        acc = convolve(ring, &acc, &pieces, i);
    }
    let out = std::mem::take(&mut acc[i as usize]);
    ring.0.sq_cache.write().unwrap().insert(key, out.clone());
    Ok(out)
}

/// `Sq^i(u)`.
pub fn sq_i(i: u32, u: &RingElement) -> Result<RingElement, ActionError> {
    let ring = u.ring();
    let mut out = Terms::new();
    for m in u.monomials() {
        xor_into(&mut out, &sq_monomial(ring, i, m)?);
    }
    Ok(ring.normalize(out))
}

/// The total square `Sq(u) = Sq^0 u + Sq^1 u + ...`.
pub fn total_sq(u: &RingElement) -> Result<RingElement, ActionError> {
    let mut out = u.ring().zero();
    for i in 0..=u.max_degree() {
        out = &out + &sq_i(i, u)?;
    }
    Ok(out)
}

/// Action of a Steenrod algebra element; each word acts right to left.
pub fn act(e: &AdemElement, u: &RingElement) -> Result<RingElement, ActionError> {
    let mut out = u.ring().zero();
    for w in e.words() {
        let mut v = u.clone();
        for &i in w.exponents().iter().rev() {
            if v.is_zero() {
                break;
            }
            v = sq_i(i, &v)?;
        }
        out = &out + &v;
    }
    Ok(out)
}

/// Checks that the action is well defined on the quotient: each power rule
/// `g^k = r` must satisfy `Sq(g)^k = Sq(r)`, and every explicit table must
/// square at the top and vanish above it.
pub fn check_action_consistency(ring: &RingPresentation) -> Vec<ReportEntry> {
    let mut entries = Vec::new();
    for (idx, g) in ring.generators().iter().enumerate() {
        let idx = idx as u32;
        if let Some((k, rhs)) = ring.power_rule(idx) {
            let start = Instant::now();
            let gen = ring.generator_at(idx);
            let result = total_sq(&gen).and_then(|sg| {
                let mut lhs = ring.one();
                for _ in 0..k {
                    lhs = &lhs * &sg;
                }
                Ok((lhs, total_sq(&rhs)?))
            });
            let (status, witness) = match result {
                Ok((lhs, rhs)) if lhs == rhs => (Status::Pass, lhs.to_string()),
                Ok((lhs, rhs)) => (Status::Fail, (&lhs + &rhs).to_string()),
                Err(e) => (Status::Fail, e.to_string()),
            };
            entries.push(
                ReportEntry::new("action-consistency/power-rule", status, witness, start)
                    .param("ring", ring.name())
                    .param("rule", format!("{}^{}", g.name, k)),
            );
        }
        if g.has_sq_table() {
            let start = Instant::now();
            let gen = ring.generator_at(idx);
            let top = sq_i(g.degree, &gen);
            let above = sq_i(g.degree + 1, &gen);
            let (status, witness) = match (top, above) {
                (Ok(top), Ok(above)) => {
                    let square = &gen * &gen;
                    if top == square && above.is_zero() {
                        (Status::Pass, top.to_string())
                    } else {
                        (Status::Fail, (&top + &square).to_string())
                    }
                }
                (Err(e), _) | (_, Err(e)) => (Status::Fail, e.to_string()),
            };
            entries.push(
                ReportEntry::new("action-consistency/sq-table", status, witness, start)
                    .param("ring", ring.name())
                    .param("generator", g.name.clone()),
            );
        }
    }
    entries
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_presentation;
    use crate::steenrod::{multiply, parse_adem, to_admissible};

    fn cover_ring() -> RingPresentation {
        parse_presentation(
            "ring Z\ntopdeg 4\ngen alpha 1\ngen beta 1\nrel alpha^4 = 0\nrel beta^2 = 0\n\
             cover delta by alpha\ncover gamma by beta",
        )
        .unwrap()
    }

    #[test]
    fn degree_one_instability() {
        let r = RingPresentation::polynomial_in(1);
        let x = r.generator("x1").unwrap();
        assert_eq!(sq_i(1, &x).unwrap(), &x * &x);
        assert!(sq_i(2, &x).unwrap().is_zero());
        assert_eq!(total_sq(&x).unwrap(), &x + &(&x * &x));
        assert_eq!(total_sq(&r.one()).unwrap(), r.one());
    }

    #[test]
    fn closed_form_matches_repeated_cartan() {
        // Sq(x^a) computed by multiplying (x + x^2) a times
        let r = RingPresentation::polynomial_in(1);
        let x = r.generator("x1").unwrap();
        let sx = &x + &(&x * &x);
        let mut power = r.one();
        let mut xa = r.one();
        for _a in 1..=20 {
            power = &power * &sx;
            xa = &xa * &x;
            assert_eq!(total_sq(&xa).unwrap(), power);
        }
    }

    #[test]
    fn sq1_of_gamma_delta() {
        let z = cover_ring();
        let gd = z.parse_element("gamma*delta").unwrap();
        let s = sq_i(1, &gd).unwrap();
        // gamma^2 delta + gamma delta^2, normalized
        assert_eq!(s, z.parse_element("gamma^2*delta + gamma*delta^2").unwrap());
        assert_eq!(s, z.parse_element("beta*gamma*delta + alpha*gamma*delta").unwrap());
    }

    #[test]
    fn sq3_sq1_on_x1x2() {
        let r = RingPresentation::polynomial_in(2);
        let z = r.parse_element("x1*x2").unwrap();
        let expected = r.parse_element("x1^4*x2^2 + x1^2*x2^4").unwrap();
        let s1 = sq_i(1, &z).unwrap();
        assert_eq!(s1, r.parse_element("x1^2*x2 + x1*x2^2").unwrap());
        assert_eq!(sq_i(3, &s1).unwrap(), expected);
        assert_eq!(act(&AdemElement::from_exponents([3, 1]), &z).unwrap(), expected);
        assert!(act(&AdemElement::sq(3), &z).unwrap().is_zero());
        assert_eq!(act(&AdemElement::unit(), &z).unwrap(), z);
    }

    #[test]
    fn adem_relations_hold_in_the_action() {
        let r = RingPresentation::polynomial_in(3);
        let u = r.parse_element("x1*x2^2*x3 + x2^3").unwrap();
        for (i, j) in [(1, 1), (1, 2), (2, 2), (3, 3), (2, 3), (3, 4)] {
            let word = AdemElement::from_exponents([i, j]);
            assert_eq!(act(&word, &u).unwrap(), act(&to_admissible(&word), &u).unwrap(), "Sq{i} Sq{j}");
        }
        let e = parse_adem("Sq5 Sq3 Sq2").unwrap();
        let v = r.parse_element("x1*x2*x3").unwrap();
        assert_eq!(act(&e, &v).unwrap(), act(&multiply(&AdemElement::unit(), &e), &v).unwrap());
    }

    #[test]
    fn higher_degree_generators_use_tables() {
        let r = parse_presentation("ring T\ngen x 1\ngen b 2\nsq b 1 = x*b").unwrap();
        let b = r.generator("b").unwrap();
        assert_eq!(sq_i(1, &b).unwrap(), r.parse_element("x*b").unwrap());
        assert_eq!(sq_i(2, &b).unwrap(), &b * &b);
        // Cartan on b^2: Sq^2(b^2) = (Sq^1 b)^2 = x^2 b^2
        let b2 = &b * &b;
        assert_eq!(sq_i(2, &b2).unwrap(), r.parse_element("x^2*b^2").unwrap());

        let bare = parse_presentation("ring T\ngen x 1\ngen l 2").unwrap();
        let l = bare.generator("l").unwrap();
        assert_eq!(sq_i(0, &l).unwrap(), l);
        assert_eq!(
            sq_i(1, &l).unwrap_err(),
            ActionError::MissingSqTable { generator: "l".into(), i: 1 }
        );
    }

    #[test]
    fn consistency_of_cover_ring() {
        let entries = check_action_consistency(&cover_ring());
        assert_eq!(entries.len(), 4);
        assert!(entries.iter().all(|e| e.status == Status::Pass), "{entries:?}");
        assert!(check_action_consistency(&RingPresentation::polynomial_in(4)).is_empty());
    }

    #[test]
    fn inconsistent_rule_is_reported() {
        let r = parse_presentation("ring Bad\ngen x 1\ngen b 2\nsq b 1 = x*b\nrel b^2 = x^4").unwrap();
        let entries = check_action_consistency(&r);
        let rule = entries.iter().find(|e| e.check == "action-consistency/power-rule").unwrap();
        assert_eq!(rule.status, Status::Fail);
        assert_eq!(rule.witness, "x^6");
    }
}
