//! Deliberately falsified variants of each check. Every one of them must
//! fail; a pass here means the corresponding check is vacuous.

use std::time::Instant;

use super::checks::{
    cover_dimensions, witness_coefficient_check, sigma_square_in, product_factorization_for, point_class_check,
    sq3_of_sigma, sq3_of_sigma_times_curve,
};
use super::models::{bielliptic_base, split_bielliptic_tower};
use crate::action::check_action_consistency;
use crate::report::{ReportEntry, Status, VerificationReport};
use crate::ring::{parse_presentation, RingPresentation};
use crate::steenrod::{in_left_ideal_sq1, multiply, s_element, AdemElement};

/// A named falsified variant and the report it produced.
pub struct Control {
    pub name: &'static str,
    pub report: VerificationReport,
}

impl Control {
    /// The variant is caught iff at least one of its entries failed.
    pub fn caught(&self) -> bool {
        self.report.count(Status::Fail) > 0
    }

    pub fn to_entry(&self, start: Instant) -> ReportEntry {
        let first = self.report.failures().next().or(self.report.entries.first());
        let witness = first.map(|e| e.witness.clone()).unwrap_or_else(|| "0".into());
        let caught_by = first.map(|e| e.check.clone()).unwrap_or_default();
        ReportEntry::new(format!("negative-control/{}", self.name), Status::from_bool(self.caught()), witness, start)
            .param("caught_by", caught_by)
    }
}

/// `Sq^2 S_2 = Sq^5 + Sq^4 Sq^1` is not in the left ideal: an even exponent
/// breaks the membership.
pub fn even_exponent() -> Control {
    let start = Instant::now();
    let product = multiply(&AdemElement::sq(2), &s_element(2).expect("j = 2"));
    let mut report = VerificationReport::new();
    report.push(
        ReportEntry::new("lemma-3-1", Status::from_bool(in_left_ideal_sq1(&product)), product.to_string(), start)
            .param("j", 2)
            .param("exponent", 2),
    );
    Control { name: "even-exponent", report }
}

/// `x_1^{2^j} x_2^{2^j} ...` in place of the descending-power witness.
pub fn wrong_witness_monomial(s: u32, j: u32) -> Control {
    let wrong: Vec<u32> = (1..=s).map(|m| if m <= j { 1 << j } else { 1 }).collect();
    let report = witness_coefficient_check(s, j, &wrong, "lemma-4-1").expect("valid parameters");
    Control { name: "wrong-witness-monomial", report }
}

/// The sigma-square check in the tower where every cover splits: `sigma` vanishes.
pub fn split_covers_sigma_square() -> Control {
    let z = split_bielliptic_tower().pop().unwrap();
    let mut report = sigma_square_in(&z, "prop-5-3");
    report.entries.retain(|e| !e.check.starts_with("action-consistency"));
    Control { name: "split-covers-sigma-square", report }
}

pub fn split_covers_sq3() -> Control {
    let z = split_bielliptic_tower().pop().unwrap();
    let mut report = sq3_of_sigma(&z, "thm-5-4");
    report.extend(sq3_of_sigma_times_curve(&z, "thm-5-4"));
    Control { name: "split-covers-sq3", report }
}

/// `S_j` applied to `x_1 ... x_s` directly instead of to its Bockstein.
pub fn missing_bockstein(c: u32, l: u32) -> Control {
    let report = point_class_check(c, l, false, "thm-4-3").expect("valid parameters");
    Control { name: "missing-bockstein", report }
}

/// `x_1 + x_2` is not a product of degree-1 generators.
pub fn non_monomial_class() -> Control {
    let ring = RingPresentation::polynomial_in(2);
    let zeta = ring.parse_element("x1 + x2").expect("generators");
    Control { name: "non-monomial-class", report: product_factorization_for(&zeta, 2, "remark-4-4") }
}

/// Adjoining a free polynomial generator (no relation) instead of a cover
/// breaks the rank-two free-module count.
pub fn polynomial_adjunction() -> Control {
    let base = bielliptic_base();
    let mut b = crate::ring::RingBuilder::from_ring(&base);
    b.set_top_degree(Some(5));
    b.add_generator("delta", 1).unwrap();
    let free = b.build().expect("valid");
    Control { name: "polynomial-adjunction", report: cover_dimensions(&[base, free], "lemma-5-2") }
}

/// A presentation whose power rule is not preserved by the action.
pub const INCONSISTENT_RING: &str = "ring broken\ngen x 1\ngen b 2\nsq b 1 = x*b\nrel b^2 = x^4\n";

pub fn inconsistent_action() -> Control {
    let ring = parse_presentation(INCONSISTENT_RING).expect("parses");
    let mut report = VerificationReport::new();
    for e in check_action_consistency(&ring) {
        report.push(e);
    }
    Control { name: "inconsistent-action", report }
}

/// Every control, in a fixed order.
pub fn all_controls() -> Vec<Control> {
    vec![
        even_exponent(),
        wrong_witness_monomial(3, 3),
        split_covers_sigma_square(),
        split_covers_sq3(),
        missing_bockstein(1, 3),
        non_monomial_class(),
        polynomial_adjunction(),
        inconsistent_action(),
    ]
}
