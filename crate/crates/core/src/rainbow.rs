//! Covers and rainbow covers.

use itertools::Itertools;
use rand::Rng;
use serde::Serialize;

use crate::complex::maximal_independent_sets;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// `W` meets every edge. With no edges every set is a cover.
pub fn is_cover(h: &Hypergraph, w: VertexSet) -> bool {
    h.edges().iter().all(|e| e.intersects(w))
}

/// Inclusion-minimal covers: complements of maximal independent sets.
pub fn minimal_covers(h: &Hypergraph) -> Vec<VertexSet> {
    let v = h.vertex_set();
    let mut out: Vec<VertexSet> = maximal_independent_sets(h)
        .into_iter()
        .map(|a| v.difference(a))
        .collect();
    out.sort();
    out
}

/// Covers `X_1, .., X_m` of one hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSystem {
    hypergraph: Hypergraph,
    covers: Vec<VertexSet>,
}

impl CoverSystem {
    pub fn new(hypergraph: Hypergraph, covers: Vec<VertexSet>) -> Result<Self> {
        for (i, x) in covers.iter().enumerate() {
            if !x.is_subset(hypergraph.vertex_set()) {
                return Err(Error::BadVertexSet);
            }
            if !is_cover(&hypergraph, *x) {
                return Err(Error::NotACover(i + 1));
            }
        }
        Ok(CoverSystem { hypergraph, covers })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn covers(&self) -> &[VertexSet] {
        &self.covers
    }
}

/// A cover `{x_{i_1}, .., x_{i_l}}` with `x_{i_j} ∈ X_{i_j}`. Indices are
/// 1-based and increasing; `vertices[j]` is drawn from `X_{indices[j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RainbowCover {
    pub indices: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl RainbowCover {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

/// The smallest rainbow cover. Among the smallest, the vertex set is the
/// lexicographically first one admitting distinct representatives, and the
/// indices are assigned to its vertices in increasing vertex order, each
/// taking the lowest index still free.
pub fn find_rainbow_cover(sys: &CoverSystem) -> Option<RainbowCover> {
    let h = &sys.hypergraph;
    let covers = &sys.covers;
    let pool = covers
        .iter()
        .fold(VertexSet::EMPTY, |acc, x| acc.union(*x))
        .to_vec();
    for l in 1..=covers.len().min(pool.len()) {
        for combo in pool.iter().copied().combinations(l) {
            let x: VertexSet = combo.iter().copied().collect();
            if !is_cover(h, x) {
                continue;
            }
            let mut used = vec![false; covers.len()];
            let mut assigned = Vec::with_capacity(l);
            if assign(&combo, covers, &mut used, &mut assigned) {
                let mut pairs: Vec<(usize, usize)> = assigned.into_iter().zip(combo).collect();
                pairs.sort();
                return Some(RainbowCover {
                    indices: pairs.iter().map(|(i, _)| i + 1).collect(),
                    vertices: pairs.iter().map(|(_, v)| *v).collect(),
                });
            }
        }
    }
    None
}

/// Distinct cover indices for the vertices in `rest`, by backtracking.
fn assign(rest: &[usize], covers: &[VertexSet], used: &mut [bool], out: &mut Vec<usize>) -> bool {
    let Some((&v, tail)) = rest.split_first() else {
        return true;
    };
    for i in 0..covers.len() {
        if !used[i] && covers[i].contains(v) {
            used[i] = true;
            out.push(i);
            if assign(tail, covers, used, out) {
                return true;
            }
            out.pop();
            used[i] = false;
        }
    }
    false
}

/// `m` covers, each a uniformly drawn minimal cover with every other vertex
/// added independently with probability `pad_percent / 100`.
pub fn sample_cover_system<R: Rng>(
    rng: &mut R,
    h: &Hypergraph,
    m: usize,
    pad_percent: u32,
) -> CoverSystem {
    let minimal = minimal_covers(h);
    let covers = (0..m)
        .map(|_| {
            let mut x = minimal[rng.gen_range(0..minimal.len())];
            for v in h.vertex_set().difference(x).iter() {
                if rng.gen_range(0..100) < pad_percent {
                    x.insert(v);
                }
            }
            x
        })
        .collect();
    CoverSystem::new(h.clone(), covers).expect("supersets of minimal covers are covers")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::rng;
    use crate::hypergraph::tight_path;

    fn set(items: &[usize]) -> VertexSet {
        VertexSet::from(items)
    }

    #[test]
    fn covers() {
        let p = tight_path(4, 2).unwrap();
        assert!(is_cover(&p, p.vertex_set()));
        assert!(!is_cover(&p, set(&[0, 3])));
        let none = Hypergraph::new(3, []).unwrap();
        assert!(is_cover(&none, VertexSet::EMPTY));
        assert_eq!(
            minimal_covers(&p),
            vec![set(&[0, 2]), set(&[1, 2]), set(&[1, 3])]
        );
    }

    #[test]
    fn single_loop() {
        let h = Hypergraph::from_edge_lists(1, &[&[0]]).unwrap();
        let sys = CoverSystem::new(h, vec![set(&[0])]).unwrap();
        let r = find_rainbow_cover(&sys).unwrap();
        assert_eq!(r.indices, vec![1]);
        assert_eq!(r.vertices, vec![0]);
    }

    #[test]
    fn path_with_two_middle_covers() {
        // labels 1..4 are indices 0..3; X_1 = X_2 = {2,3}
        let p = tight_path(4, 2).unwrap();
        let sys = CoverSystem::new(p, vec![set(&[1, 2]), set(&[1, 2])]).unwrap();
        let r = find_rainbow_cover(&sys).unwrap();
        assert_eq!(r.indices, vec![1, 2]);
        assert_eq!(r.vertices, vec![1, 2]);
    }

    #[test]
    fn no_rainbow_when_too_few_covers() {
        let p = tight_path(4, 2).unwrap();
        let sys = CoverSystem::new(p, vec![set(&[1, 2])]).unwrap();
        assert_eq!(find_rainbow_cover(&sys), None);
    }

    #[test]
    fn rejects_non_cover() {
        let p = tight_path(4, 2).unwrap();
        let err = CoverSystem::new(p, vec![set(&[1, 2]), set(&[0, 3])]).unwrap_err();
        assert_eq!(err, Error::NotACover(2));
    }

    #[test]
    fn sampled_systems_are_covers() {
        let p = tight_path(6, 3).unwrap();
        let mut r = rng(3);
        let sys = sample_cover_system(&mut r, &p, 4, 25);
        assert_eq!(sys.covers().len(), 4);
        let found = find_rainbow_cover(&sys).unwrap();
        assert!(is_cover(&p, found.vertex_set()));
        for (i, v) in found.indices.iter().zip(&found.vertices) {
            assert!(sys.covers()[i - 1].contains(*v));
        }
    }
}
