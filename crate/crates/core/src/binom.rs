//! Binomial coefficients reduced mod 2.

/// `C(n, k) mod 2`, by Lucas: odd iff every binary digit of `k` is at most
/// the matching digit of `n`. Out-of-range `k` gives 0.
pub fn binom_mod2(n: i64, k: i64) -> u8 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    u8::from(n & k == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    // Pascal's triangle mod 2, built additively; independent of the bit trick.
    fn pascal(rows: usize) -> Vec<Vec<u8>> {
        let mut tri = vec![vec![1u8]];
        for n in 1..rows {
            let prev = &tri[n - 1];
            let mut row = vec![1u8; n + 1];
            for k in 1..n {
                row[k] = (prev[k - 1] + prev[k]) % 2;
            }
            tri.push(row);
        }
        tri
    }

    #[test]
    fn small_values() {
        assert_eq!(binom_mod2(0, 0), 1);
        assert_eq!(binom_mod2(2, 1), 0);
        assert_eq!(binom_mod2(3, 1), 1);
        assert_eq!(binom_mod2(5, -1), 0);
        assert_eq!(binom_mod2(5, 6), 0);
        assert_eq!(binom_mod2(-1, 0), 0);
    }

    #[test]
    fn matches_pascal_triangle() {
        let tri = pascal(200);
        for (n, row) in tri.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(binom_mod2(n as i64, k as i64), v, "C({n},{k})");
            }
        }
    }

    #[test]
    fn even_top_odd_bottom_vanishes() {
        for n in (0..512).step_by(2) {
            for k in (1..=n).step_by(2) {
                assert_eq!(binom_mod2(n, k), 0);
            }
        }
    }
}
