//! Brute-force oracles written straight from the definitions, with no
//! pruning and no shared code beyond the data types.

#![allow(dead_code)]

use noncover::{BettiVector, ExtNat, Hypergraph, VertexSet};

/// `None` is infinity.
pub type Ext = Option<usize>;

pub fn ext(x: ExtNat) -> Ext {
    x.finite()
}

fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |bits| (0..n).filter(|v| bits >> v & 1 == 1).collect())
}

/// Some `W' ⊆ W \ {v}` with `W' ∪ {v}` an edge.
pub fn dominates_vertex(h: &Hypergraph, w: VertexSet, v: usize) -> bool {
    all_subsets(h.num_vertices())
        .filter(|x| x.is_subset(w) && !x.contains(v))
        .any(|x| h.contains_edge(x.with(v)))
}

pub fn dominates_set(h: &Hypergraph, w: VertexSet, a: VertexSet) -> bool {
    a.iter().all(|v| dominates_vertex(h, w, v))
}

/// `v ∈ W`, or `v` is a loop, or `v` shares an edge with some `w ≠ v` in `W`.
pub fn weakly_dominates_vertex(h: &Hypergraph, w: VertexSet, v: usize) -> bool {
    w.contains(v)
        || h.contains_edge(VertexSet::singleton(v))
        || h.edges()
            .iter()
            .any(|e| e.contains(v) && w.iter().any(|u| u != v && e.contains(u)))
}

pub fn is_independent(h: &Hypergraph, a: VertexSet) -> bool {
    h.edges().iter().all(|e| !e.is_subset(a))
}

pub fn is_strongly_independent(h: &Hypergraph, a: VertexSet) -> bool {
    is_independent(h, a) && h.edges().iter().all(|e| e.intersection(a).len() <= 1)
}

fn min_size(sets: impl Iterator<Item = VertexSet>) -> Ext {
    sets.map(|w| w.len()).min()
}

/// Infinity wins a maximum.
fn max_ext(values: impl Iterator<Item = Ext>) -> Ext {
    let mut best = Some(0);
    for v in values {
        best = match (best, v) {
            (None, _) | (_, None) => None,
            (Some(a), Some(b)) => Some(a.max(b)),
        };
    }
    best
}

pub fn gamma(h: &Hypergraph, a: VertexSet) -> Ext {
    min_size(all_subsets(h.num_vertices()).filter(|w| dominates_set(h, *w, a)))
}

pub fn gamma_tilde(h: &Hypergraph) -> Ext {
    gamma(h, h.vertex_set())
}

pub fn gamma_si(h: &Hypergraph) -> Ext {
    max_ext(
        all_subsets(h.num_vertices())
            .filter(|a| is_strongly_independent(h, *a))
            .map(|a| gamma(h, a)),
    )
}

pub fn gamma_prime(h: &Hypergraph, a: VertexSet) -> Ext {
    min_size(
        all_subsets(h.num_vertices())
            .filter(|w| !w.intersects(a) && a.iter().all(|v| weakly_dominates_vertex(h, *w, v))),
    )
}

pub fn t_param(h: &Hypergraph) -> Ext {
    max_ext(
        all_subsets(h.num_vertices())
            .filter(|a| is_independent(h, *a))
            .map(|a| gamma_prime(h, a)),
    )
}

pub fn gamma_e(h: &Hypergraph) -> Ext {
    let m = h.num_edges();
    (0u64..1 << m)
        .filter(|bits| {
            let union = (0..m)
                .filter(|i| bits >> i & 1 == 1)
                .fold(VertexSet::EMPTY, |acc, i| acc.union(h.edges()[i]));
            dominates_set(h, union, h.vertex_set())
        })
        .map(|bits| bits.count_ones() as usize)
        .min()
}

pub fn ceil_half(x: Ext) -> Ext {
    x.map(|v| v.div_ceil(2))
}

/// `max{⌈γ̃/2⌉, γ_si, γ_E}`.
pub fn g_value(h: &Hypergraph) -> Ext {
    max_ext([ceil_half(gamma_tilde(h)), gamma_si(h), gamma_e(h)].into_iter())
}

/// Reduced Betti numbers over Z₂ of the complex whose faces are the subsets
/// of `0..n` accepted by `is_face`, by dense elimination.
pub fn naive_betti(n: usize, is_face: impl Fn(VertexSet) -> bool) -> BettiVector {
    let faces: Vec<VertexSet> = all_subsets(n).filter(|s| is_face(*s)).collect();
    if faces.is_empty() {
        return BettiVector::void();
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap();
    let by_size: Vec<Vec<VertexSet>> = (0..=top)
        .map(|s| faces.iter().copied().filter(|f| f.len() == s).collect())
        .collect();
    // rank[s]: rank of the boundary from size-s faces to size-(s-1) faces
    let mut rank = vec![0usize; top + 2];
    for s in 1..=top {
        let rows: Vec<Vec<bool>> = by_size[s]
            .iter()
            .map(|f| by_size[s - 1].iter().map(|g| g.is_subset(*f)).collect())
            .collect();
        rank[s] = gf2_rank(rows);
    }
    let values: Vec<usize> = (0..=top)
        .map(|s| by_size[s].len() - rank[s] - rank[s + 1])
        .collect();
    BettiVector::from_values(values)
}

fn gf2_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= *y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `σ ∈ NC(H)` iff some edge misses `σ`.
pub fn naive_noncover_betti(h: &Hypergraph) -> BettiVector {
    naive_betti(h.num_vertices(), |s| {
        h.edges().iter().any(|e| !e.intersects(s))
    })
}

pub fn naive_independence_betti(h: &Hypergraph) -> BettiVector {
    naive_betti(h.num_vertices(), |s| is_independent(h, s))
}

/// `max{d + 1 : β_d(NC(H)[W]) ≠ 0}` over all `W`, or 0.
pub fn naive_noncover_leray(h: &Hypergraph) -> usize {
    let n = h.num_vertices();
    all_subsets(n)
        .map(|w| {
            let b = naive_betti(n, |s| {
                s.is_subset(w) && h.edges().iter().any(|e| !e.intersects(s))
            });
            b.top_nonzero().map_or(0, |d| (d + 1).max(0) as usize)
        })
        .max()
        .unwrap_or(0)
}

/// `β̃(I(P_{n,2}))` by the classic closed form: 1 at `i` when `n = 3i+2` or
/// `n = 3i+3`.
pub fn classic_path_betti(n: usize) -> BettiVector {
    let entries: Vec<(isize, usize)> = (0..=n)
        .filter(|i| n == 3 * i + 2 || n == 3 * i + 3)
        .map(|i| (i as isize, 1))
        .collect();
    BettiVector::from_entries(&entries)
}

/// `β̃(I(C_{n,2}))`: 2 at `i` when `n = 3i+3`, 1 when `n = 3i+2` or `3i+4`.
pub fn classic_cycle_betti(n: usize) -> BettiVector {
    let entries: Vec<(isize, usize)> = (0..=n)
        .filter_map(|i| {
            if n == 3 * i + 3 {
                Some((i as isize, 2))
            } else if n == 3 * i + 2 || n == 3 * i + 4 {
                Some((i as isize, 1))
            } else {
                None
            }
        })
        .collect();
    BettiVector::from_entries(&entries)
}
