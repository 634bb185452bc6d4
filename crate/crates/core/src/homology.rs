//! Reduced simplicial homology over Z₂, homological connectivity and the
//! Leray number.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::ext::{EtaValue, ExtNat};
use crate::gf2::{self, BitVector};
use crate::vertex_set::VertexSet;

pub const DEFAULT_VERTEX_CAP: usize = 24;
pub const DEFAULT_LERAY_VERTEX_CAP: usize = 20;
pub const DEFAULT_FACE_CAP: usize = 1 << 22;
/// Bits in one dense boundary matrix, about 1 GiB.
pub const DEFAULT_MATRIX_CAP: usize = 1 << 33;

/// Size caps for exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub vertex_cap: usize,
    pub face_cap: usize,
    pub matrix_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            vertex_cap: DEFAULT_VERTEX_CAP,
            face_cap: DEFAULT_FACE_CAP,
            matrix_cap: DEFAULT_MATRIX_CAP,
        }
    }
}

impl Limits {
    pub fn leray() -> Self {
        Limits {
            vertex_cap: DEFAULT_LERAY_VERTEX_CAP,
            ..Limits::default()
        }
    }

    pub fn unlimited() -> Self {
        Limits {
            vertex_cap: usize::MAX,
            face_cap: usize::MAX,
            matrix_cap: usize::MAX,
        }
    }

    pub(crate) fn check_vertices(&self, n: usize) -> Result<()> {
        if n > self.vertex_cap {
            return Err(Error::TooLarge {
                what: "vertex count",
                size: n,
                cap: self.vertex_cap,
            });
        }
        Ok(())
    }
}

/// Reduced Betti numbers, indexed from dimension −1.
///
/// The void complex is flagged separately; all its numbers are zero.
/// Equality ignores trailing zeros, so two vectors are equal when they agree
/// in every dimension and on the void flag.
#[derive(Clone, Debug, Default, Eq)]
pub struct BettiVector {
    void: bool,
    values: Vec<usize>,
}

impl PartialEq for BettiVector {
    fn eq(&self, other: &Self) -> bool {
        self.void == other.void && self.same_homology(other)
    }
}

impl BettiVector {
    pub fn void() -> Self {
        BettiVector {
            void: true,
            values: Vec::new(),
        }
    }

    /// All numbers zero on a non-void complex.
    pub fn acyclic() -> Self {
        BettiVector::default()
    }

    /// `values[0]` is `β_{−1}`.
    pub fn from_values(values: Vec<usize>) -> Self {
        BettiVector {
            void: false,
            values,
        }
    }

    pub fn from_entries(entries: &[(isize, usize)]) -> Self {
        let mut values = Vec::new();
        for &(d, b) in entries {
            assert!(d >= -1, "reduced homology starts at dimension -1");
            let i = (d + 1) as usize;
            if values.len() <= i {
                values.resize(i + 1, 0);
            }
            values[i] += b;
        }
        BettiVector::from_values(values)
    }

    pub fn is_void(&self) -> bool {
        self.void
    }

    pub fn get(&self, dim: isize) -> usize {
        if dim < -1 {
            return 0;
        }
        self.values.get((dim + 1) as usize).copied().unwrap_or(0)
    }

    /// `(dimension, β)` for every stored dimension, starting at −1.
    pub fn entries(&self) -> impl Iterator<Item = (isize, usize)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, b)| (i as isize - 1, *b))
    }

    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.entries().filter(|(_, b)| *b != 0).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|b| *b == 0)
    }

    pub fn lowest_nonzero(&self) -> Option<isize> {
        self.entries().find(|(_, b)| *b != 0).map(|(d, _)| d)
    }

    pub fn top_nonzero(&self) -> Option<isize> {
        self.entries()
            .filter(|(_, b)| *b != 0)
            .map(|(d, _)| d)
            .last()
    }

    /// Highest stored dimension (the complex dimension when computed).
    pub fn max_dim(&self) -> isize {
        self.values.len() as isize - 2
    }

    /// `Σ (−1)^i β_i`.
    pub fn reduced_euler(&self) -> i64 {
        self.entries()
            .map(|(d, b)| {
                if d.rem_euclid(2) == 0 {
                    b as i64
                } else {
                    -(b as i64)
                }
            })
            .sum()
    }

    /// The vector predicted for the Alexander dual of a complex on `n`
    /// vertices: `β'_i = β_{n−i−3}`.
    pub fn dual_shift(&self, n: usize) -> Self {
        let entries: Vec<(isize, usize)> = self
            .nonzero()
            .into_iter()
            .map(|(d, b)| (n as isize - d - 3, b))
            .collect();
        BettiVector::from_entries(&entries)
    }

    /// Equality of all Betti numbers, ignoring the void flag.
    pub fn same_homology(&self, other: &Self) -> bool {
        let len = self.values.len().max(other.values.len());
        (0..len).all(|i| {
            self.values.get(i).copied().unwrap_or(0) == other.values.get(i).copied().unwrap_or(0)
        })
    }
}

impl Serialize for BettiVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let nz = self.nonzero();
        let mut map = s.serialize_map(Some(nz.len()))?;
        for (d, b) in nz {
            map.serialize_entry(&d.to_string(), &b)?;
        }
        map.end()
    }
}

/// Faces of a complex grouped by size, with index lookup per size.
struct FaceTable {
    by_size: Vec<Vec<VertexSet>>,
    index: Vec<HashMap<VertexSet, usize>>,
}

impl FaceTable {
    fn build(k: &SimplicialComplex, limits: &Limits) -> Result<Self> {
        let faces = k.faces(limits.face_cap)?;
        let top = faces.last().map(|f| f.len()).unwrap_or(0);
        let mut by_size: Vec<Vec<VertexSet>> = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[f.len()].push(f);
        }
        for pair in by_size.windows(2) {
            let bits = pair[0].len().saturating_mul(pair[1].len());
            if bits > limits.matrix_cap {
                return Err(Error::TooLarge {
                    what: "boundary matrix size in bits",
                    size: bits,
                    cap: limits.matrix_cap,
                });
            }
        }
        let index = by_size
            .iter()
            .map(|fs| fs.iter().enumerate().map(|(i, f)| (*f, i)).collect())
            .collect();
        Ok(FaceTable { by_size, index })
    }

    /// Columns of the boundary map from faces of size `s` to size `s − 1`.
    fn boundary_columns(&self, s: usize) -> Vec<BitVector> {
        let rows = self.by_size[s - 1].len();
        let lookup = &self.index[s - 1];
        self.by_size[s]
            .iter()
            .map(|f| {
                let mut col = BitVector::zeros(rows);
                for v in f.iter() {
                    col.set(lookup[&f.without(v)]);
                }
                col
            })
            .collect()
    }

    /// `ranks[s]` is the rank of the boundary from size `s` to `s − 1`
    /// (`ranks[0] = 0`), with one extra zero entry at the end.
    fn boundary_ranks(&self) -> Vec<usize> {
        let top = self.by_size.len() - 1;
        let mut ranks = vec![0; top + 2];
        for (s, r) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
            *r = gf2::rank(self.by_size[s - 1].len(), self.boundary_columns(s));
        }
        ranks
    }
}

pub fn betti_vector(k: &SimplicialComplex) -> Result<BettiVector> {
    betti_vector_with(k, &Limits::default())
}

/// `β_i = dim C_i − rank ∂_i − rank ∂_{i+1}` in the augmented chain complex,
/// where `C_{−1}` is spanned by the empty face.
pub fn betti_vector_with(k: &SimplicialComplex, limits: &Limits) -> Result<BettiVector> {
    limits.check_vertices(k.ground_size())?;
    if k.is_void() {
        return Ok(BettiVector::void());
    }
    // A single facet is a simplex: acyclic unless it is {∅}.
    if let [f] = k.facets() {
        return Ok(if f.is_empty() {
            BettiVector::from_values(vec![1])
        } else {
            BettiVector::from_values(vec![0; f.len() + 1])
        });
    }
    let table = FaceTable::build(k, limits)?;
    let ranks = table.boundary_ranks();
    let values = table
        .by_size
        .iter()
        .enumerate()
        .map(|(s, fs)| fs.len() - ranks[s] - ranks[s + 1])
        .collect();
    Ok(BettiVector::from_values(values))
}

/// Per-dimension boundary data for self-checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryRank {
    /// Dimension of the source faces.
    pub dim: isize,
    pub faces: usize,
    /// Rank from column elimination.
    pub rank: usize,
    /// Rank of the transposed matrix, eliminated independently.
    pub rank_transposed: usize,
    /// Kernel dimension, `faces − rank`.
    pub kernel: usize,
}

pub fn boundary_rank_profile(k: &SimplicialComplex, limits: &Limits) -> Result<Vec<BoundaryRank>> {
    if k.is_void() {
        return Ok(Vec::new());
    }
    let table = FaceTable::build(k, limits)?;
    let mut out = vec![BoundaryRank {
        dim: -1,
        faces: table.by_size[0].len(),
        rank: 0,
        rank_transposed: 0,
        kernel: table.by_size[0].len(),
    }];
    for s in 1..table.by_size.len() {
        let cols = table.boundary_columns(s);
        let rows = table.by_size[s - 1].len();
        let rank = gf2::rank(rows, cols.iter().cloned());
        let rank_transposed = gf2::rank(cols.len(), gf2::transpose(rows, &cols));
        out.push(BoundaryRank {
            dim: s as isize - 1,
            faces: cols.len(),
            rank,
            rank_transposed,
            kernel: cols.len() - rank,
        });
    }
    Ok(out)
}

/// Homological `η`: the largest `k` with `H̃_i(K) = 0` for `−1 <= i <= k − 2`,
/// i.e. one plus the lowest dimension with nonzero reduced homology, or
/// infinity when all reduced homology vanishes. `η({∅}) = 0`.
///
/// This reports acyclicity rather than contractibility; the two agree for
/// every complex whose `η` is determined by its homology.
pub fn eta(k: &SimplicialComplex) -> Result<EtaValue> {
    eta_with(k, &Limits::default())
}

pub fn eta_with(k: &SimplicialComplex, limits: &Limits) -> Result<EtaValue> {
    Ok(eta_of(&betti_vector_with(k, limits)?))
}

pub fn eta_of(b: &BettiVector) -> EtaValue {
    match b.lowest_nonzero() {
        Some(d) => ExtNat::Finite((d + 1) as usize),
        None => ExtNat::Infinite,
    }
}

pub fn leray_number(k: &SimplicialComplex) -> Result<usize> {
    leray_number_with(k, &Limits::leray())
}

/// Least `d` such that every induced subcomplex has vanishing reduced
/// homology in dimensions `>= d`. All `2^|V|` vertex subsets are checked;
/// the work is spread over the current rayon pool and the result does not
/// depend on evaluation order.
pub fn leray_number_with(k: &SimplicialComplex, limits: &Limits) -> Result<usize> {
    limits.check_vertices(k.ground_size())?;
    if k.is_void() {
        return Ok(0);
    }
    let n = k.ground_size();
    let best = (0..1u64 << n)
        .into_par_iter()
        .map(|bits| induced_top(k, VertexSet::from_bits(bits), limits))
        .try_reduce(|| None, |a, b| Ok(a.max(b)))?;
    Ok(best.map(|t| (t + 1) as usize).unwrap_or(0))
}

/// Top nonvanishing dimension of `K[W]`.
fn induced_top(k: &SimplicialComplex, w: VertexSet, limits: &Limits) -> Result<Option<isize>> {
    let sub = k.restrict(w);
    Ok(betti_vector_with(&sub, limits)?.top_nonzero())
}
