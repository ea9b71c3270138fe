//! Named verifications of the computational claims.

use std::time::Instant;

use super::models::{
    bielliptic_times_curve, bielliptic_tower, build_bielliptic_model, product_with_point_class,
};
use super::SuiteError;
use crate::action::{act, check_action_consistency, sq_i};
use crate::report::{ReportEntry, Status, VerificationReport};
use crate::ring::{Monomial, RingElement, RingPresentation};
use crate::steenrod::{in_left_ideal_sq1, multiply, s_element, AdemElement};

/// `Sq^{2i-1} S_j` lies in `A Sq^1` for `2 <= j <= j_max`, `1 <= i <= 2^j - 1`.
pub fn verify_lemma_3_1(j_max: u32) -> Result<VerificationReport, SuiteError> {
    if !(2..=31).contains(&j_max) {
        return Err(SuiteError::Parameter(format!("lemma-3-1 needs 2 <= j_max <= 31, got {j_max}")));
    }
    let mut report = VerificationReport::new();
    for j in 2..=j_max {
        let s = s_element(j).expect("j in range");
        for i in 1..(1u32 << j) {
            let start = Instant::now();
            let product = multiply(&AdemElement::sq(2 * i - 1), &s);
            report.push(
                ReportEntry::new("lemma-3-1", Status::from_bool(in_left_ideal_sq1(&product)), product.to_string(), start)
                    .param("j", j)
                    .param("i", i)
                    .param("exponent", 2 * i - 1),
            );
        }
        // Exponents 2^i - 1 of the form 2i' - 1 inside the swept range.
        let start = Instant::now();
        let typeset: Vec<u32> = (1..=j).map(|i| (1u32 << i) - 1).collect();
        let ok = typeset
            .iter()
            .all(|&e| in_left_ideal_sq1(&multiply(&AdemElement::sq(e), &s)));
        let widest = multiply(&AdemElement::sq(*typeset.last().unwrap()), &s);
        report.push(
            ReportEntry::new("lemma-3-1/exponents-2^i-1", Status::from_bool(ok), widest.to_string(), start)
                .param("j", j)
                .param("exponents", typeset.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
        );
    }
    Ok(report)
}

/// `x_1^{2^j} x_2^{2^{j-1}} ... x_j^2 x_{j+1} ... x_s` as dense exponents.
pub fn descending_power_monomial(s: u32, j: u32) -> Vec<u32> {
    (1..=s).map(|m| if m <= j { 1 << (j + 1 - m) } else { 1 }).collect()
}

/// `S_j Sq^1 (x_1 ... x_s)` in `F2[x_1, ..., x_s]`.
pub fn s_j_sq1_of_product(s: u32, j: u32) -> Result<RingElement, SuiteError> {
    check_product_params(s, j)?;
    let ring = RingPresentation::polynomial_in(s as usize);
    let zeta = product_of_generators(&ring, s);
    let op = multiply(&s_element(j).expect("j in range"), &AdemElement::sq(1));
    Ok(act(&op, &zeta)?)
}

fn check_product_params(s: u32, j: u32) -> Result<(), SuiteError> {
    if j == 0 || j > s || j > 31 {
        return Err(SuiteError::Parameter(format!("lemma-4-1 needs 1 <= j <= s, got s={s} j={j}")));
    }
    Ok(())
}

fn product_of_generators(ring: &RingPresentation, s: u32) -> RingElement {
    (1..=s).fold(ring.one(), |acc, m| &acc * &ring.generator(&format!("x{m}")).expect("x_m exists"))
}

pub fn verify_lemma_4_1(s: u32, j: u32) -> Result<VerificationReport, SuiteError> {
    witness_coefficient_check(s, j, &descending_power_monomial(s, j), "lemma-4-1")
}

pub(crate) fn witness_coefficient_check(
    s: u32,
    j: u32,
    witness: &[u32],
    check: &str,
) -> Result<VerificationReport, SuiteError> {
    let start = Instant::now();
    let class = s_j_sq1_of_product(s, j)?;
    let ring = class.ring().clone();
    let m = ring.monomial_from_exponents(witness)?;
    let coefficient = ring.monomial_coefficient(&class, &m)?;
    let mut report = VerificationReport::new();
    report.push(
        ReportEntry::new(format!("{check}/witness-coefficient"), Status::from_bool(coefficient == 1), ring.format_monomial(&m), start)
            .param("s", s)
            .param("j", j),
    );
    let leading = class.monomials().last().map(|m| ring.format_monomial(m)).unwrap_or_else(|| "0".into());
    report.push(
        ReportEntry::new(format!("{check}/nonzero"), Status::from_bool(!class.is_zero()), leading, start)
            .param("s", s)
            .param("j", j)
            .param("terms", class.len()),
    );
    Ok(report)
}

/// Runs each cover adjunction of the bielliptic model and checks
/// `dim_n(A[delta]) = dim_n(A) + dim_{n-1}(A)` up to the new top degree.
pub fn verify_lemma_5_2() -> VerificationReport {
    cover_dimensions(&bielliptic_tower(), "lemma-5-2")
}

pub(crate) fn cover_dimensions(tower: &[RingPresentation], check: &str) -> VerificationReport {
    let mut report = VerificationReport::new();
    for pair in tower.windows(2) {
        let start = Instant::now();
        let (prev, next) = (&pair[0], &pair[1]);
        let top = next.top_degree().unwrap_or(0);
        let mut bad = None;
        let mut dims = Vec::new();
        for n in 0..=top {
            let expect = prev.dim_in_degree(n) + n.checked_sub(1).map_or(0, |m| prev.dim_in_degree(m));
            let got = next.dim_in_degree(n);
            dims.push(got.to_string());
            if got != expect && bad.is_none() {
                bad = Some(n);
            }
        }
        let added = &next.generators().last().expect("cover generator").name;
        let fundamental = next
            .monomials_in_degree(top)
            .first()
            .map(|m| next.format_monomial(m))
            .unwrap_or_else(|| "0".into());
        report.push(
            ReportEntry::new(check, Status::from_bool(bad.is_none()), fundamental, start)
                .param("generator", added)
                .param("top_degree", top)
                .param("dims", dims.join(",")),
        );
    }
    report
}

/// `sigma = Sq^1(gamma delta)` in the bielliptic model.
pub fn sigma_bar(z: &RingPresentation) -> RingElement {
    let gd = z.parse_element("gamma*delta").expect("model generators");
    sq_i(1, &gd).expect("degree-1 generators need no tables")
}

pub fn verify_prop_5_3() -> VerificationReport {
    sigma_square_in(&build_bielliptic_model(), "prop-5-3")
}

pub(crate) fn sigma_square_in(z: &RingPresentation, check: &str) -> VerificationReport {
    let mut report = VerificationReport::new();

    let start = Instant::now();
    let sigma = sigma_bar(z);
    let unreduced = z.parse_element("gamma^2*delta + gamma*delta^2").expect("model generators");
    let reduced = z.parse_element("beta*gamma*delta + alpha*gamma*delta").expect("model generators");
    report.push(ReportEntry::new(
        format!("{check}/sigma"),
        Status::from_bool(sigma == unreduced && sigma == reduced),
        sigma.to_string(),
        start,
    ));

    let start = Instant::now();
    let square = &sigma * &sigma;
    let expected = z.parse_element("alpha^3*beta*gamma*delta").expect("model generators");
    report.push(ReportEntry::new(
        format!("{check}/sigma-squared"),
        Status::from_bool(square == expected && square.len() == 1),
        square.to_string(),
        start,
    ));
    report.push(ReportEntry::new(
        format!("{check}/nonzero"),
        Status::from_bool(!square.is_zero()),
        square.to_string(),
        start,
    ));
    for e in check_action_consistency(z) {
        report.push(e);
    }
    report
}

/// `S_j(Sq^1(x_1 ... x_s) lambda) = S_j Sq^1 (x_1 ... x_s) lambda`, nonzero,
/// with `j = s = l - 2c + 1`.
pub fn verify_theorem_4_3(c: u32, l: u32) -> Result<VerificationReport, SuiteError> {
    point_class_check(c, l, true, "thm-4-3")
}

pub(crate) fn point_class_check(c: u32, l: u32, bockstein: bool, check: &str) -> Result<VerificationReport, SuiteError> {
    if c == 0 || l < 2 * c + 1 {
        return Err(SuiteError::Parameter(format!("thm-4-3 needs c >= 1 and l >= 2c + 1, got c={c} l={l}")));
    }
    let j = l - 2 * c + 1;
    check_product_params(j, j)?;
    let start = Instant::now();
    let ring = product_with_point_class(j as usize, c);
    let zeta = product_of_generators(&ring, j);
    let lambda = if c >= 2 { ring.generator("lambda").expect("point class") } else { ring.one() };
    let xi = if bockstein { sq_i(1, &zeta)? } else { zeta.clone() };
    let alpha_bar = &xi * &lambda;
    let s_j = s_element(j).expect("j in range");
    let lhs = act(&s_j, &alpha_bar)?;
    let rhs = &act(&multiply(&s_j, &AdemElement::sq(1)), &zeta)? * &lambda;

    let mut report = VerificationReport::new();
    let with = |e: ReportEntry| e.param("c", c).param("l", l).param("j", j);
    let leading = lhs.monomials().last().map(|m| ring.format_monomial(m)).unwrap_or_else(|| "0".into());
    report.push(with(ReportEntry::new(format!("{check}/factorization"), Status::from_bool(lhs == rhs), leading.clone(), start)));
    report.push(with(ReportEntry::new(format!("{check}/nonzero"), Status::from_bool(!lhs.is_zero()), leading, start)));

    let mut exps = descending_power_monomial(j, j);
    if c >= 2 {
        exps.push(1);
    }
    let witness = ring.monomial_from_exponents(&exps)?;
    let coefficient = ring.monomial_coefficient(&lhs, &witness)?;
    report.push(with(ReportEntry::new(
        format!("{check}/witness-coefficient"),
        Status::from_bool(coefficient == 1),
        ring.format_monomial(&witness),
        start,
    )));
    Ok(report)
}

pub fn verify_theorem_5_4(l: u32) -> Result<VerificationReport, SuiteError> {
    match l {
        3 => Ok(sq3_of_sigma(&build_bielliptic_model(), "thm-5-4")),
        4 => Ok(sq3_of_sigma_times_curve(&build_bielliptic_model(), "thm-5-4")),
        _ => Err(SuiteError::Parameter(format!("thm-5-4 needs l in {{3, 4}}, got {l}"))),
    }
}

pub(crate) fn sq3_of_sigma(z: &RingPresentation, check: &str) -> VerificationReport {
    let start = Instant::now();
    let sigma = sigma_bar(z);
    let sq3 = sq_i(3, &sigma).expect("degree-1 generators");
    let square = &sigma * &sigma;
    let mut report = VerificationReport::new();
    report.push(
        ReportEntry::new(format!("{check}/sq3-is-square"), Status::from_bool(sq3 == square), sq3.to_string(), start)
            .param("l", 3),
    );
    report.push(
        ReportEntry::new(format!("{check}/nonzero"), Status::from_bool(!sq3.is_zero()), sq3.to_string(), start)
            .param("l", 3),
    );
    report
}

pub(crate) fn sq3_of_sigma_times_curve(z: &RingPresentation, check: &str) -> VerificationReport {
    let start = Instant::now();
    let x = if z == &build_bielliptic_model() {
        bielliptic_times_curve()
    } else {
        z.tensor(&super::models::elliptic_curve())
    };
    let sigma = x.include_left(&sigma_bar(z)).expect("left factor");
    let t1 = x.generator("t1").expect("curve class");
    let alpha_bar = &sigma * &t1;
    let sq3 = sq_i(3, &alpha_bar).expect("degree-1 generators");
    let expected = &(&sigma * &sigma) * &t1;
    let sq1_sigma = sq_i(1, &sigma).expect("degree-1 generators");
    let tau_ok = sq_i(1, &t1).expect("t1").is_zero() && sq_i(3, &t1).expect("t1").is_zero();

    let mut report = VerificationReport::new();
    let with = |e: ReportEntry| e.param("l", 4);
    report.push(with(ReportEntry::new(format!("{check}/sq3-factorization"), Status::from_bool(sq3 == expected), sq3.to_string(), start)));
    report.push(with(ReportEntry::new(format!("{check}/nonzero"), Status::from_bool(!sq3.is_zero()), sq3.to_string(), start)));
    report.push(with(ReportEntry::new(format!("{check}/sq1-sigma-vanishes"), Status::from_bool(sq1_sigma.is_zero()), sq1_sigma.to_string(), start)));
    report.push(with(ReportEntry::new(format!("{check}/tau-squares-vanish"), Status::from_bool(tau_ok), t1.to_string(), start)));
    report
}

/// The class `x_1 ... x_s` is a product of distinct degree-1 generators.
pub fn verify_remark_4_4(s: u32) -> Result<VerificationReport, SuiteError> {
    if s == 0 {
        return Err(SuiteError::Parameter("remark-4-4 needs s >= 1".into()));
    }
    let ring = RingPresentation::polynomial_in(s as usize);
    Ok(product_factorization_for(&product_of_generators(&ring, s), s, "remark-4-4"))
}

pub(crate) fn product_factorization_for(zeta: &RingElement, s: u32, check: &str) -> VerificationReport {
    let start = Instant::now();
    let ring = zeta.ring();
    let factors_ok = |m: &Monomial| {
        m.factors().len() == s as usize
            && m.factors().iter().all(|&(g, e)| e == 1 && ring.generators()[g as usize].degree == 1)
    };
    let ok = zeta.len() == 1 && zeta.monomials().all(factors_ok);
    let mut report = VerificationReport::new();
    report.push(ReportEntry::new(check, Status::from_bool(ok), zeta.to_string(), start).param("s", s));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_square_times_s_j_small() {
        let r = verify_lemma_3_1(2).unwrap();
        assert!(r.passed(), "{}", r.to_table());
        let main: Vec<_> = r.entries.iter().filter(|e| e.check == "lemma-3-1").collect();
        assert_eq!(main.len(), 3);
        assert_eq!(main[0].witness, "0");
        assert_eq!(main[1].witness, "Sq5 Sq1");
        assert!(verify_lemma_3_1(1).is_err());
    }

    #[test]
    fn witness_monomial_small() {
        let class = s_j_sq1_of_product(2, 2).unwrap();
        assert_eq!(class.to_string(), "x1^4*x2^2 + x1^2*x2^4");
        assert!(verify_lemma_4_1(2, 2).unwrap().passed());
        assert!(verify_lemma_4_1(1, 1).unwrap().passed());
        assert_eq!(s_j_sq1_of_product(1, 1).unwrap().to_string(), "x1^2");
        assert_eq!(descending_power_monomial(5, 5), [32, 16, 8, 4, 2]);
        assert_eq!(descending_power_monomial(4, 2), [4, 2, 1, 1]);
        assert!(verify_lemma_4_1(2, 3).is_err());
        assert!(verify_lemma_4_1(2, 0).is_err());
    }

    #[test]
    fn sigma_square_and_sq3() {
        let r = verify_prop_5_3();
        assert!(r.passed(), "{}", r.to_table());
        let sq = r.entries.iter().find(|e| e.check == "prop-5-3/sigma-squared").unwrap();
        assert_eq!(sq.witness, "alpha^3*beta*delta*gamma");
        assert!(verify_theorem_5_4(3).unwrap().passed());
        let r4 = verify_theorem_5_4(4).unwrap();
        assert!(r4.passed(), "{}", r4.to_table());
        assert!(verify_theorem_5_4(5).is_err());
    }

    #[test]
    fn point_class_small() {
        let r = verify_theorem_4_3(1, 3).unwrap();
        assert!(r.passed(), "{}", r.to_table());
        let r = verify_theorem_4_3(2, 5).unwrap();
        assert!(r.passed(), "{}", r.to_table());
        assert_eq!(r.entries[2].witness, "x1^4*x2^2*lambda");
        assert!(verify_theorem_4_3(2, 4).is_err());
        assert!(verify_theorem_4_3(0, 4).is_err());
    }

    #[test]
    fn factorization_and_cover_dimensions() {
        for s in 1..=3 {
            assert!(verify_remark_4_4(s).unwrap().passed());
        }
        let r = verify_lemma_5_2();
        assert_eq!(r.entries.len(), 4);
        assert!(r.passed(), "{}", r.to_table());
    }
}
