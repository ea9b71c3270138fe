//! The mod-2 Steenrod algebra in the admissible (Serre–Cartan) basis.

mod adem;
mod element;
pub(crate) mod gf2;
mod ideal;
mod parse;
mod word;

use thiserror::Error;

pub use adem::{
    adem_pair, basis_in_degree, multiply, s_element, to_admissible, to_admissible_with,
    RewriteOrder,
};
pub use element::AdemElement;
pub use ideal::{
    in_left_ideal_sq1, in_two_sided_ideal_sq1, in_two_sided_ideal_sq1_capped,
    TWO_SIDED_DEGREE_CEILING,
};
pub use parse::parse_adem;
pub use word::SquareWord;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SteenrodError {
    #[error("Sq{i} Sq{j} is admissible; no Adem relation applies")]
    AlreadyAdmissible { i: u32, j: u32 },
    #[error("S_j is defined for 1 <= j <= 31, got j = {0}")]
    InvalidSIndex(u32),
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("degree {degree} exceeds the two-sided ideal ceiling {ceiling}")]
    DegreeCeiling { degree: u32, ceiling: u32 },
}
