//! Membership in the left ideal `A Sq^1` and the two-sided ideal `A Sq^1 A`.

use std::collections::HashMap;

use super::gf2::{BitRow, Echelon};
use super::{basis_in_degree, to_admissible, AdemElement, SquareWord, SteenrodError};

/// Default highest degree accepted by [`in_two_sided_ideal_sq1`].
pub const TWO_SIDED_DEGREE_CEILING: u32 = 30;

/// Whether `e` lies in the left ideal generated by `Sq^1`.
///
/// That ideal is spanned by the admissible words ending in `Sq^1`: an
/// admissible word times `Sq^1` either stays admissible or dies by
/// `Sq^1 Sq^1 = 0`.
pub fn in_left_ideal_sq1(e: &AdemElement) -> bool {
    to_admissible(e).words().all(|w| w.last_exponent() == Some(1))
}

/// Whether `e` lies in the two-sided ideal generated by `Sq^1`, decided by
/// spanning `{a Sq^1 b}` in the admissible basis of `deg e`.
pub fn in_two_sided_ideal_sq1(e: &AdemElement) -> Result<bool, SteenrodError> {
    in_two_sided_ideal_sq1_capped(e, TWO_SIDED_DEGREE_CEILING)
}

pub fn in_two_sided_ideal_sq1_capped(e: &AdemElement, ceiling: u32) -> Result<bool, SteenrodError> {
    let e = to_admissible(e);
    if e.is_zero() {
        return Ok(true);
    }
    let degree = e.degree().ok_or(SteenrodError::NotHomogeneous)?;
    if degree > ceiling {
        return Err(SteenrodError::DegreeCeiling { degree, ceiling });
    }
    if degree == 0 {
        return Ok(false);
    }
    let basis = basis_in_degree(degree);
    let index: HashMap<&SquareWord, usize> = basis.iter().enumerate().map(|(n, w)| (w, n)).collect();
    let to_row = |x: &AdemElement| {
        let mut row = BitRow::zeros(basis.len());
        for w in x.words() {
            row.flip(index[w]);
        }
        row
    };
    let sq1 = SquareWord::sq(1);
    let mut span = Echelon::new();
    'outer: for left_degree in 0..degree {
        for a in basis_in_degree(left_degree) {
            let a_sq1 = a.concat(&sq1);
            for b in basis_in_degree(degree - 1 - left_degree) {
                span.insert(to_row(&to_admissible(&a_sq1.concat(&b).into())));
                if span.rank() == basis.len() {
                    break 'outer;
                }
            }
        }
    }
    Ok(span.contains(to_row(&e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steenrod::{multiply, s_element};

    fn el(words: &[&[u32]]) -> AdemElement {
        words.iter().map(|w| SquareWord::new(w.iter().copied())).collect()
    }

    #[test]
    fn left_ideal_examples() {
        assert!(in_left_ideal_sq1(&el(&[&[3, 1]])));
        assert!(!in_left_ideal_sq1(&AdemElement::sq(2)));
        assert!(in_left_ideal_sq1(&multiply(&AdemElement::sq(3), &s_element(2).unwrap())));
        assert!(in_left_ideal_sq1(&AdemElement::zero()));
        assert!(!in_left_ideal_sq1(&AdemElement::unit()));
    }

    #[test]
    fn left_ideal_matches_span_of_products() {
        // brute force: span of to_admissible(a Sq1) over admissible a
        for n in 1..=20 {
            let basis = basis_in_degree(n);
            let index: HashMap<&SquareWord, usize> =
                basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
            let row_of = |x: &AdemElement| {
                let mut r = BitRow::zeros(basis.len());
                for w in x.words() {
                    r.flip(index[w]);
                }
                r
            };
            let mut span = Echelon::new();
            for a in basis_in_degree(n - 1) {
                span.insert(row_of(&to_admissible(&a.concat(&SquareWord::sq(1)).into())));
            }
            for w in &basis {
                let e: AdemElement = w.clone().into();
                assert_eq!(span.contains(row_of(&e)), in_left_ideal_sq1(&e), "{w}");
            }
        }
    }

    #[test]
    fn two_sided_examples() {
        assert_eq!(in_two_sided_ideal_sq1(&AdemElement::sq(1)), Ok(true));
        assert_eq!(in_two_sided_ideal_sq1(&AdemElement::sq(2)), Ok(false));
        assert_eq!(in_two_sided_ideal_sq1(&AdemElement::sq(3)), Ok(true));
        assert_eq!(in_two_sided_ideal_sq1(&AdemElement::zero()), Ok(true));
        assert_eq!(in_two_sided_ideal_sq1(&AdemElement::unit()), Ok(false));
    }

    #[test]
    fn two_sided_rejections() {
        let mixed = &AdemElement::sq(3) + &AdemElement::sq(2);
        assert_eq!(in_two_sided_ideal_sq1(&mixed), Err(SteenrodError::NotHomogeneous));
        assert_eq!(
            in_two_sided_ideal_sq1(&AdemElement::sq(31)),
            Err(SteenrodError::DegreeCeiling { degree: 31, ceiling: 30 })
        );
        assert!(in_two_sided_ideal_sq1(&AdemElement::sq(30)).is_ok());
    }

    #[test]
    fn sq_powers_of_two_are_indecomposable() {
        // ideal elements of degree > 1 are decomposable; Sq^{2^k} is not
        assert_eq!(in_two_sided_ideal_sq1(&AdemElement::sq(4)), Ok(false));
        assert_eq!(in_two_sided_ideal_sq1(&AdemElement::sq(5)), Ok(true));
        assert_eq!(in_two_sided_ideal_sq1(&AdemElement::sq(8)), Ok(false));
        assert_eq!(in_two_sided_ideal_sq1(&el(&[&[2, 1]])), Ok(true));
    }
}
