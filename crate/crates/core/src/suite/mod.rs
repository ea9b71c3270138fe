//! Scripted verifications, randomized law checks and negative controls,
//! aggregated into one [`VerificationReport`].

pub mod checks;
pub mod controls;
pub mod models;
pub mod properties;

use std::thread;
use std::time::Instant;

use thiserror::Error;

use crate::action::{check_action_consistency, ActionError};
use crate::report::VerificationReport;
use crate::ring::RingError;
use crate::steenrod::{in_two_sided_ideal_sq1, AdemElement};

pub use checks::{
    s_j_sq1_of_product, descending_power_monomial, sigma_bar, verify_lemma_3_1, verify_lemma_4_1,
    verify_lemma_5_2, verify_prop_5_3, verify_remark_4_4, verify_theorem_4_3, verify_theorem_5_4,
};
pub use controls::{all_controls, Control};
pub use models::{
    bielliptic_base, bielliptic_tower, bielliptic_times_curve, build_bielliptic_model,
    bundled_rings, elliptic_curve, point_class_ring, product_with_point_class,
    split_bielliptic_tower, BIELLIPTIC_RING_FILE,
};

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Action(#[from] ActionError),
}

pub const DEFAULT_SEED: u64 = 1729;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub j_max: u32,
    /// Largest `s = j` for the witness-monomial check.
    pub product_rank_max: u32,
    pub point_class_params: Vec<(u32, u32)>,
    pub seed: u64,
    pub cases: usize,
    /// Degree bound for random Steenrod elements in the rewriting checks.
    pub degree_cap: u32,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            j_max: 5,
            product_rank_max: 5,
            point_class_params: vec![(1, 3), (1, 4), (2, 5), (2, 6)],
            seed: DEFAULT_SEED,
            cases: 1000,
            degree_cap: 40,
        }
    }
}

/// Rewriting, ideal and action laws from the configured seed.
pub fn run_properties(config: &SuiteConfig) -> VerificationReport {
    use properties::*;
    let (seed, cases, cap) = (config.seed, config.cases, config.degree_cap);
    let mut report = VerificationReport::new();
    report.push(adem_idempotence(seed, cases, cap));
    report.push(adem_strategy_independence(seed, cases, cap));
    report.push(multiply_associativity(seed, cases, cap));
    report.push(left_ideal_closure(seed, cases, cap));
    report.push(action_respects_adem_exhaustive(10, 4).0);
    report.push(action_respects_adem(seed, cases, 20, 6));
    for ring in bundled_rings() {
        report.push(cartan_multiplicativity(&ring, seed, cases));
        report.push(sq1_derivation(&ring, seed, cases));
        report.push(sq1_squared_zero(&ring, seed, cases));
        report.push(instability(&ring, seed, cases));
        report.push(s_j_vanishing(&ring, seed, cases.min(200), config.j_max.max(2)));
        report.push(ring_confluence(&ring, seed, cases, 12));
        report.push(ring_laws(&ring, seed, cases));
        report.push(frobenius_additive(&ring, seed, cases));
        for e in check_action_consistency(&ring) {
            report.push(e);
        }
    }
    report
}

/// Membership of `Sq^1, Sq^2, Sq^3` in the two-sided ideal, and rejection
/// beyond the degree ceiling.
pub fn verify_two_sided_ideal() -> VerificationReport {
    use crate::report::{ReportEntry, Status};
    let mut report = VerificationReport::new();
    for (i, expected) in [(1, true), (2, false), (3, true)] {
        let start = Instant::now();
        let got = in_two_sided_ideal_sq1(&AdemElement::sq(i)).expect("below ceiling");
        report.push(
            ReportEntry::new("two-sided-ideal", Status::from_bool(got == expected), format!("Sq{i}"), start)
                .param("member", if got { "yes" } else { "no" }),
        );
    }
    let start = Instant::now();
    let beyond = in_two_sided_ideal_sq1(&AdemElement::sq(31));
    report.push(
        ReportEntry::new("two-sided-ideal/degree-ceiling", Status::from_bool(beyond.is_err()), "Sq31", start)
            .param("rejected", beyond.is_err()),
    );
    report
}

type Section<'a> = Box<dyn FnOnce() -> Result<VerificationReport, SuiteError> + Send + 'a>;

/// Every check, property suite and negative control. Sections run
/// concurrently; the report order is fixed.
pub fn run_full_suite(config: &SuiteConfig) -> Result<VerificationReport, SuiteError> {
    let sections: Vec<Result<VerificationReport, SuiteError>> = thread::scope(|scope| {
        let jobs: Vec<Section<'_>> = vec![
            Box::new(|| verify_lemma_3_1(config.j_max)),
            Box::new(|| {
                let mut r = VerificationReport::new();
                for s in 1..=config.product_rank_max {
                    r.extend(verify_lemma_4_1(s, s)?);
                }
                Ok(r)
            }),
            Box::new(|| Ok(verify_lemma_5_2())),
            Box::new(|| Ok(verify_prop_5_3())),
            Box::new(|| {
                let mut r = VerificationReport::new();
                for &(c, l) in &config.point_class_params {
                    r.extend(verify_theorem_4_3(c, l)?);
                }
                Ok(r)
            }),
            Box::new(|| {
                let mut r = verify_theorem_5_4(3)?;
                r.extend(verify_theorem_5_4(4)?);
                Ok(r)
            }),
            Box::new(|| {
                let mut r = VerificationReport::new();
                for s in 1..=config.product_rank_max {
                    r.extend(verify_remark_4_4(s)?);
                }
                Ok(r)
            }),
            Box::new(|| Ok(verify_two_sided_ideal())),
            Box::new(|| Ok(run_properties(config))),
            Box::new(|| Ok(run_controls())),
        ];
        let handles: Vec<_> = jobs.into_iter().map(|job| scope.spawn(job)).collect();
        handles.into_iter().map(|h| h.join().expect("suite section panicked")).collect()
    });
    let mut report = VerificationReport::new();
    for section in sections {
        report.extend(section?);
    }
    Ok(report)
}

/// One entry per falsified variant, passing iff the variant failed.
pub fn run_controls() -> VerificationReport {
    let mut report = VerificationReport::new();
    for control in all_controls() {
        report.push(control.to_entry(Instant::now()));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use crate::steenrod::{parse_adem, to_admissible};

    /// Rings in which suite witnesses may live.
    fn witness_rings() -> Vec<crate::RingPresentation> {
        let mut rings = bundled_rings();
        rings.extend(bielliptic_tower());
        rings.extend(split_bielliptic_tower());
        for (c, l) in SuiteConfig::default().point_class_params {
            rings.push(product_with_point_class((l - 2 * c + 1) as usize, c));
        }
        rings.extend((1..=5).map(crate::RingPresentation::polynomial_in));
        rings.push(crate::parse_presentation(controls::INCONSISTENT_RING).unwrap());
        rings
    }

    fn reparses_to_itself(witness: &str, rings: &[crate::RingPresentation]) -> bool {
        if let Ok(e) = parse_adem(witness) {
            if to_admissible(&e) == e && e.to_string() == witness {
                return true;
            }
        }
        rings.iter().any(|r| r.parse_element(witness).is_ok_and(|u| u.to_string() == witness))
    }

    #[test]
    fn small_suite_passes_with_canonical_witnesses() {
        let config = SuiteConfig { j_max: 3, product_rank_max: 3, cases: 30, degree_cap: 16, ..Default::default() };
        let report = run_full_suite(&config).unwrap();
        assert!(report.passed(), "{}", report.to_table());
        let rings = witness_rings();
        for e in &report.entries {
            assert!(reparses_to_itself(&e.witness, &rings), "{}: {}", e.check, e.witness);
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let config = SuiteConfig { j_max: 3, product_rank_max: 2, cases: 20, degree_cap: 12, ..Default::default() };
        let a = run_full_suite(&config).unwrap().without_timings();
        let b = run_full_suite(&config).unwrap().without_timings();
        assert_eq!(a.to_json_lines(), b.to_json_lines());
    }

    #[test]
    fn controls_are_reported_as_passing_entries() {
        let r = run_controls();
        assert_eq!(r.count(Status::Fail), 0, "{}", r.to_table());
        assert!(r.entries.iter().all(|e| e.check.starts_with("negative-control/")));
    }

    #[test]
    fn ideal_entries() {
        let r = verify_two_sided_ideal();
        assert!(r.passed(), "{}", r.to_table());
        assert_eq!(r.entries.len(), 4);
    }
}
