//! Incremental row echelon form over GF(2) on packed bit rows.

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct BitRow {
    blocks: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { blocks: vec![0; len.div_ceil(64)] }
    }

    pub fn flip(&mut self, i: usize) {
        self.blocks[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    fn xor(&mut self, other: &BitRow) {
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    fn lowest_set(&self) -> Option<usize> {
        self.blocks
            .iter()
            .enumerate()
            .find(|(_, &b)| b != 0)
            .map(|(n, b)| n * 64 + b.trailing_zeros() as usize)
    }
}

/// Rows kept reduced against every earlier pivot, so reduction in insertion
/// order is complete.
#[derive(Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, BitRow)>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: BitRow) -> BitRow {
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor(row);
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: BitRow) -> bool {
        let v = self.reduce(v);
        match v.lowest_set() {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: BitRow) -> bool {
        self.reduce(v).lowest_set().is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(len: usize, bits: &[usize]) -> BitRow {
        let mut r = BitRow::zeros(len);
        for &b in bits {
            r.flip(b);
        }
        r
    }

    #[test]
    fn span_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(row(130, &[0, 5, 129])));
        assert!(e.insert(row(130, &[5, 70])));
        assert!(!e.insert(row(130, &[0, 70, 129])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(130, &[0, 129, 70])));
        assert!(e.contains(row(130, &[])));
        assert!(!e.contains(row(130, &[70])));
    }

    #[test]
    fn rank_of_full_rank_triangle() {
        let mut e = Echelon::new();
        for i in 0..100 {
            let bits: Vec<usize> = (i..100).step_by(3).collect();
            e.insert(row(100, &bits));
        }
        assert_eq!(e.rank(), 100);
    }
}
