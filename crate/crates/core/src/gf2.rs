//! Dense GF(2) vectors packed into 64-bit words, and rank by XOR elimination.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitVector {
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }

    pub fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }
}

/// Incremental echelon basis keyed by pivot (lowest set bit).
pub struct EchelonBasis {
    by_pivot: Vec<Option<BitVector>>,
    rank: usize,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            by_pivot: vec![None; len],
            rank: 0,
        }
    }

    /// Reduces `v` against the basis; keeps it if independent.
    pub fn insert(&mut self, mut v: BitVector) -> bool {
        while let Some(p) = v.lowest_one() {
            match &self.by_pivot[p] {
                Some(b) => v.xor_assign(b),
                None => {
                    self.by_pivot[p] = Some(v);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Rank of the matrix whose columns are `vectors`, each of length `len`.
pub fn rank(len: usize, vectors: impl IntoIterator<Item = BitVector>) -> usize {
    let mut basis = EchelonBasis::new(len);
    for v in vectors {
        basis.insert(v);
        if basis.rank() == len {
            break;
        }
    }
    basis.rank()
}

/// Transposes a list of `cols` columns of length `rows`.
pub fn transpose(rows: usize, columns: &[BitVector]) -> Vec<BitVector> {
    let mut out = vec![BitVector::zeros(columns.len()); rows];
    for (j, c) in columns.iter().enumerate() {
        for (i, row) in out.iter_mut().enumerate() {
            if c.get(i) {
                row.set(j);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn from_bits(len: usize, bits: &[usize]) -> BitVector {
        let mut v = BitVector::zeros(len);
        for &b in bits {
            v.flip(b);
        }
        v
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(3, vec![]), 0);
        let cols = vec![
            from_bits(3, &[0, 1]),
            from_bits(3, &[1, 2]),
            from_bits(3, &[0, 2]),
        ];
        // boundary of a triangle: rank 2 over GF(2)
        assert_eq!(rank(3, cols), 2);
        let cols = vec![
            from_bits(130, &[0, 129]),
            from_bits(130, &[129]),
            from_bits(130, &[64]),
        ];
        assert_eq!(rank(130, cols), 3);
    }

    fn brute_rank(cols: &[u32]) -> usize {
        // size of the span, by closing under XOR
        let mut span = std::collections::HashSet::new();
        span.insert(0u32);
        for &c in cols {
            let cur: Vec<u32> = span.iter().copied().collect();
            for s in cur {
                span.insert(s ^ c);
            }
        }
        span.len().trailing_zeros() as usize
    }

    proptest! {
        #[test]
        fn rank_matches_span_size(cols in proptest::collection::vec(0u32..(1 << 7), 0..9)) {
            let vecs: Vec<BitVector> = cols
                .iter()
                .map(|c| {
                    let bits: Vec<usize> = (0..7).filter(|b| c & (1 << b) != 0).collect();
                    from_bits(7, &bits)
                })
                .collect();
            let r = rank(7, vecs.clone());
            prop_assert_eq!(r, brute_rank(&cols));
            prop_assert_eq!(r, rank(vecs.len(), transpose(7, &vecs)));
        }
    }
}
