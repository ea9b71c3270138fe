//! Adem rewriting to the admissible basis.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use super::{AdemElement, SquareWord, SteenrodError};
use crate::binom::binom_mod2;

/// Which inadmissible pair a rewriting pass reduces first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteOrder {
    LeftmostFirst,
    RightmostFirst,
}

/// Terms `(i + j - k, k)` with odd coefficient `C(j - k - 1, i - 2k)` of the
/// Adem expansion of `Sq^i Sq^j`, for `i < 2j`.
fn adem_terms(i: u32, j: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..=i / 2).filter_map(move |k| {
        let c = binom_mod2(i64::from(j) - i64::from(k) - 1, i64::from(i) - 2 * i64::from(k));
        (c == 1).then_some((i + j - k, k))
    })
}

/// The Adem relation for the inadmissible pair `Sq^i Sq^j` (`i < 2j`).
pub fn adem_pair(i: u32, j: u32) -> Result<AdemElement, SteenrodError> {
    if i == 0 || j == 0 || i >= 2 * j {
        return Err(SteenrodError::AlreadyAdmissible { i, j });
    }
    Ok(adem_terms(i, j).map(|(a, b)| SquareWord::new([a, b])).collect())
}

fn rewrite_step(word: &SquareWord, pos: usize) -> impl Iterator<Item = SquareWord> + '_ {
    let ex = word.exponents();
    adem_terms(ex[pos], ex[pos + 1]).map(move |(a, b)| word.splice_pair(pos, a, b))
}

fn pick_pair(word: &SquareWord, order: RewriteOrder) -> Option<usize> {
    match order {
        RewriteOrder::LeftmostFirst => word.leftmost_inadmissible(),
        RewriteOrder::RightmostFirst => word.rightmost_inadmissible(),
    }
}

// Canonical forms of single words. Adem cascades revisit the same subwords
// constantly, so this is shared process-wide.
static WORD_CACHE: LazyLock<RwLock<HashMap<SquareWord, AdemElement>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

fn cached_word_form(word: &SquareWord) -> AdemElement {
    let Some(pos) = word.leftmost_inadmissible() else {
        return word.clone().into();
    };
    if let Some(hit) = WORD_CACHE.read().unwrap().get(word) {
        return hit.clone();
    }
    let mut out = AdemElement::zero();
    for next in rewrite_step(word, pos) {
        out += cached_word_form(&next);
    }
    WORD_CACHE.write().unwrap().insert(word.clone(), out.clone());
    out
}

fn local_word_form(
    word: &SquareWord,
    order: RewriteOrder,
    memo: &mut HashMap<SquareWord, AdemElement>,
) -> AdemElement {
    let Some(pos) = pick_pair(word, order) else {
        return word.clone().into();
    };
    if let Some(hit) = memo.get(word) {
        return hit.clone();
    }
    let mut out = AdemElement::zero();
    for next in rewrite_step(word, pos) {
        out += local_word_form(&next, order, memo);
    }
    memo.insert(word.clone(), out.clone());
    out
}

/// The admissible (Serre–Cartan) normal form of `e`.
pub fn to_admissible(e: &AdemElement) -> AdemElement {
    let mut out = AdemElement::zero();
    for w in e.words() {
        out += cached_word_form(w);
    }
    out
}

/// Normal form computed with a private memo table and an explicit choice of
/// rewriting order. Agrees with [`to_admissible`]; used to cross-check it.
pub fn to_admissible_with(e: &AdemElement, order: RewriteOrder) -> AdemElement {
    let mut memo = HashMap::new();
    let mut out = AdemElement::zero();
    for w in e.words() {
        out += local_word_form(w, order, &mut memo);
    }
    out
}

/// Composition product, returned in admissible form.
pub fn multiply(a: &AdemElement, b: &AdemElement) -> AdemElement {
    let mut out = AdemElement::zero();
    for u in a.words() {
        for v in b.words() {
            out += cached_word_form(&u.concat(v));
        }
    }
    out
}

/// `S_j = Sq^{2^j - 1} ... Sq^7 Sq^3`, with `S_1` the unit.
pub fn s_element(j: u32) -> Result<AdemElement, SteenrodError> {
    if j == 0 || j > 31 {
        return Err(SteenrodError::InvalidSIndex(j));
    }
    Ok(AdemElement::from_exponents((2..=j).rev().map(|m| (1u32 << m) - 1)))
}

/// All admissible words of degree `n`, in descending lexicographic order.
pub fn basis_in_degree(n: u32) -> Vec<SquareWord> {
    fn fill(remaining: u32, max_first: u32, prefix: &mut Vec<u32>, out: &mut Vec<SquareWord>) {
        if remaining == 0 {
            out.push(SquareWord::new(prefix.iter().copied()));
            return;
        }
        // An admissible word starting with `a` has degree at most 2a - 1.
        for a in (1..=remaining.min(max_first)).rev() {
            if 2 * a - 1 < remaining {
                break;
            }
            prefix.push(a);
            fill(remaining - a, a / 2, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(words: &[&[u32]]) -> AdemElement {
        words.iter().map(|w| SquareWord::new(w.iter().copied())).collect()
    }

    // Direct transcription of the Adem sum over k = 0..=floor(i/2), with an
    // additive Pascal table for the coefficients.
    fn adem_oracle(i: u32, j: u32) -> AdemElement {
        let n = (i + j + 2) as usize;
        let mut pascal = vec![vec![0u8; n + 1]; n + 1];
        for r in 0..=n {
            pascal[r][0] = 1;
            for c in 1..=r {
                pascal[r][c] = (pascal[r - 1][c - 1] + pascal[r - 1][c]) % 2;
            }
        }
        let mut out = AdemElement::zero();
        for k in 0..=i / 2 {
            let top = j as i64 - k as i64 - 1;
            let bottom = i as i64 - 2 * k as i64;
            if top >= 0 && bottom >= 0 && bottom <= top && pascal[top as usize][bottom as usize] == 1 {
                out.toggle(SquareWord::new([i + j - k, k]));
            }
        }
        out
    }

    #[test]
    fn adem_pair_examples() {
        assert!(adem_pair(1, 1).unwrap().is_zero());
        assert_eq!(adem_pair(1, 2).unwrap(), el(&[&[3]]));
        assert_eq!(adem_pair(2, 2).unwrap(), el(&[&[3, 1]]));
        assert_eq!(adem_pair(3, 3).unwrap(), el(&[&[5, 1]]));
        // The k range runs to floor(i/2), not floor(j/2).
        assert_eq!(adem_pair(6, 4).unwrap(), el(&[&[7, 3]]));
        assert_eq!(adem_pair(2, 1), Err(SteenrodError::AlreadyAdmissible { i: 2, j: 1 }));
        assert_eq!(adem_pair(5, 2), Err(SteenrodError::AlreadyAdmissible { i: 5, j: 2 }));
    }

    #[test]
    fn adem_pair_matches_oracle() {
        for j in 1..40 {
            for i in 1..2 * j {
                let got = adem_pair(i, j).unwrap();
                assert_eq!(got, adem_oracle(i, j), "Sq{i} Sq{j}");
                assert!(got.is_canonical());
                assert!(got.words().all(|w| w.len() <= 2 && w.degree() == i + j));
            }
        }
    }

    #[test]
    fn to_admissible_examples() {
        assert_eq!(to_admissible(&el(&[&[2, 2]])), el(&[&[3, 1]]));
        assert!(to_admissible(&el(&[&[1, 1]])).is_zero());
        let fixed = el(&[&[31, 15, 7, 3]]);
        assert_eq!(to_admissible(&fixed), fixed);
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(multiply(&AdemElement::unit(), &AdemElement::sq(5)), AdemElement::sq(5));
        assert_eq!(multiply(&AdemElement::sq(1), &AdemElement::sq(2)), AdemElement::sq(3));
        assert_eq!(multiply(&AdemElement::sq(3), &AdemElement::sq(3)), el(&[&[5, 1]]));
    }

    #[test]
    fn s_elements() {
        assert_eq!(s_element(1).unwrap(), AdemElement::unit());
        let s2 = s_element(2).unwrap();
        assert_eq!(s2, AdemElement::sq(3));
        assert_eq!(s2.degree(), Some(3));
        let s3 = s_element(3).unwrap();
        assert_eq!(s3, el(&[&[7, 3]]));
        assert_eq!(s3.degree(), Some(10));
        for j in 1..=12u32 {
            let s = s_element(j).unwrap();
            assert!(s.is_canonical());
            assert_eq!(s.degree(), Some((1u32 << (j + 1)) - j - 3));
        }
        assert_eq!(s_element(0), Err(SteenrodError::InvalidSIndex(0)));
    }

    #[test]
    fn small_bases() {
        assert_eq!(basis_in_degree(0), vec![SquareWord::unit()]);
        assert_eq!(basis_in_degree(1), vec![SquareWord::sq(1)]);
        assert_eq!(basis_in_degree(3), vec![SquareWord::sq(3), SquareWord::new([2, 1])]);
    }

    #[test]
    fn basis_matches_brute_force_enumeration() {
        fn compositions(n: u32) -> Vec<Vec<u32>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 1..=n {
                for mut rest in compositions(n - first) {
                    rest.insert(0, first);
                    out.push(rest);
                }
            }
            out
        }
        for n in 0..=16 {
            let mut brute: Vec<SquareWord> = compositions(n)
                .into_iter()
                .map(SquareWord::new)
                .filter(SquareWord::is_admissible)
                .collect();
            brute.sort();
            assert_eq!(basis_in_degree(n), brute, "degree {n}");
        }
    }

    #[test]
    fn basis_words_are_fixpoints() {
        for n in 0..=40 {
            let basis = basis_in_degree(n);
            let set: std::collections::BTreeSet<_> = basis.iter().cloned().collect();
            assert_eq!(set.len(), basis.len());
            for w in basis {
                assert_eq!(to_admissible(&w.clone().into()), w.into());
            }
        }
    }

    #[test]
    fn leftmost_and_rightmost_agree_exhaustively() {
        // every composition of degree <= 12
        fn all_words(n: u32) -> Vec<SquareWord> {
            fn rec(n: u32, cur: &mut Vec<u32>, out: &mut Vec<SquareWord>) {
                if n == 0 {
                    out.push(SquareWord::new(cur.iter().copied()));
                    return;
                }
                for a in 1..=n {
                    cur.push(a);
                    rec(n - a, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            rec(n, &mut Vec::new(), &mut out);
            out
        }
        for n in 0..=12 {
            for w in all_words(n) {
                let e: AdemElement = w.into();
                let l = to_admissible_with(&e, RewriteOrder::LeftmostFirst);
                let r = to_admissible_with(&e, RewriteOrder::RightmostFirst);
                assert_eq!(l, r);
                assert_eq!(to_admissible(&e), l);
            }
        }
    }
}
