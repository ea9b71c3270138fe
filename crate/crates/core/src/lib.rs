//! Mod-2 Steenrod algebra computations and their action on presented
//! cohomology rings.
//!
//! * [`steenrod`]: admissible normal forms via Adem relations, products,
//!   the operations `S_j`, and membership in the ideals generated by `Sq^1`.
//! * [`ring`]: graded-commutative F2-algebras given by power rules and a
//!   top-degree truncation, with cover adjunctions and tensor products.
//! * [`action`]: `Sq^i` on ring elements via the Cartan formula.
//! * [`suite`]: scripted checks of the coniveau-obstruction computations.

pub mod action;
pub mod binom;
pub mod report;
pub mod ring;
pub mod steenrod;
pub mod suite;
pub mod syntax;

pub use action::{act, check_action_consistency, sq_i, total_sq, ActionError};
pub use binom::binom_mod2;
pub use report::{ReportEntry, Status, VerificationReport};
pub use ring::{parse_presentation, Monomial, RingElement, RingError, RingPresentation};
pub use steenrod::{AdemElement, SquareWord, SteenrodError};
