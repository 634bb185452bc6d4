//! Fixed-seed random hypergraph corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Shape of the hypergraphs a corpus draws.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub max_edge_size: usize,
    pub min_edges: usize,
    pub max_edges: usize,
    /// Patch every isolated vertex with an extra edge through it.
    pub no_isolated: bool,
    /// Chance, out of 100, that a drawn edge is a loop.
    pub loop_percent: u32,
}

impl CorpusSpec {
    pub fn new(max_vertices: usize, max_edge_size: usize) -> Self {
        CorpusSpec {
            min_vertices: 1,
            max_vertices,
            max_edge_size,
            min_edges: 1,
            max_edges: 2 * max_vertices,
            no_isolated: false,
            loop_percent: 8,
        }
    }

    pub fn no_isolated(mut self) -> Self {
        self.no_isolated = true;
        self
    }

    pub fn vertices(mut self, min: usize, max: usize) -> Self {
        self.min_vertices = min;
        self.max_vertices = max;
        self
    }

    pub fn edges(mut self, min: usize, max: usize) -> Self {
        self.min_edges = min;
        self.max_edges = max;
        self
    }

    pub fn loops(mut self, percent: u32) -> Self {
        self.loop_percent = percent;
        self
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_edge<R: Rng>(
    rng: &mut R,
    n: usize,
    spec: &CorpusSpec,
    through: Option<usize>,
) -> VertexSet {
    let top = spec.max_edge_size.min(n).max(1);
    let size = if top == 1 || rng.gen_range(0..100) < spec.loop_percent {
        1
    } else {
        rng.gen_range(2..=top)
    };
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    let mut e: VertexSet = match through {
        Some(v) => {
            verts.retain(|u| *u != v);
            VertexSet::singleton(v)
        }
        None => VertexSet::EMPTY,
    };
    for u in verts {
        if e.len() >= size {
            break;
        }
        e.insert(u);
    }
    e
}

pub fn random_hypergraph<R: Rng>(rng: &mut R, spec: &CorpusSpec) -> Hypergraph {
    let n = rng.gen_range(spec.min_vertices..=spec.max_vertices);
    let target = rng.gen_range(spec.min_edges..=spec.max_edges.max(spec.min_edges));
    let mut edges: Vec<VertexSet> = Vec::new();
    let mut attempts = 0;
    while edges.len() < target && attempts < 20 * target {
        attempts += 1;
        let e = random_edge(rng, n, spec, None);
        if !edges.contains(&e) {
            edges.push(e);
        }
    }
    if spec.no_isolated {
        for v in 0..n {
            if edges.iter().any(|e| e.contains(v)) {
                continue;
            }
            loop {
                let e = random_edge(rng, n, spec, Some(v));
                if !edges.contains(&e) {
                    edges.push(e);
                    break;
                }
            }
        }
    }
    edges.sort();
    Hypergraph::new(n, edges).expect("drawn edges are distinct, nonempty and in range")
}

/// `count` hypergraphs drawn from one ChaCha8 stream seeded with `seed`.
pub fn corpus(seed: u64, count: usize, spec: &CorpusSpec) -> Vec<Hypergraph> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_hypergraph(&mut r, spec))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_in_shape() {
        let spec = CorpusSpec::new(8, 3).no_isolated();
        let a = corpus(7, 40, &spec);
        let b = corpus(7, 40, &spec);
        assert_eq!(a, b);
        for h in &a {
            assert!((1..=8).contains(&h.num_vertices()));
            assert!(h.max_edge_size() <= 3);
            assert!(!h.has_isolated_vertex());
        }
        assert_ne!(a, corpus(8, 40, &spec));
    }

    #[test]
    fn loops_only_when_size_one() {
        let spec = CorpusSpec::new(4, 1).no_isolated();
        for h in corpus(1, 10, &spec) {
            assert!(h.has_all_loops());
        }
    }
}
