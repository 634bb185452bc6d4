//! Finite hypergraphs on dense vertex indices, with the edge operations used
//! by the recursions on noncover complexes.

mod families;

pub use families::*;

use crate::error::{Error, Result};
use crate::vertex_set::{minimal_elements, VertexSet, MAX_VERTICES};

/// A set of distinct nonempty edges on the vertices `0..n`.
///
/// Every vertex carries a display label; labels are unique. Edges are kept
/// sorted in [`VertexSet`] order, so two hypergraphs with the same labels and
/// edge sets compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    labels: Vec<String>,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Builds a hypergraph with labels `"0", "1", ..`. Duplicate edges are
    /// rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        Self::with_labels((0..n).map(|v| v.to_string()).collect(), edges)
    }

    pub fn with_labels(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self> {
        check_labels(&labels)?;
        let full = VertexSet::full(labels.len());
        let mut list: Vec<VertexSet> = Vec::new();
        for e in edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if !e.is_subset(full) {
                return Err(Error::VertexOutOfRange(e.last().unwrap_or(0)));
            }
            list.push(e);
        }
        list.sort();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(format_set(&labels, w[0])));
        }
        Ok(Hypergraph {
            labels,
            edges: list,
        })
    }

    /// Convenience constructor from explicit index lists.
    pub fn from_edge_lists(n: usize, edges: &[&[usize]]) -> Result<Self> {
        for &v in edges.iter().flat_map(|e| e.iter()) {
            if v >= n.min(MAX_VERTICES) {
                return Err(Error::VertexOutOfRange(v));
            }
        }
        Self::new(n, edges.iter().map(|e| VertexSet::from(*e)))
    }

    /// Builds a hypergraph whose edge list may contain repeats, merging them.
    /// Empty sets are dropped.
    pub(crate) fn collapsed(
        labels: Vec<String>,
        edges: impl IntoIterator<Item = VertexSet>,
    ) -> Self {
        debug_assert!(check_labels(&labels).is_ok());
        let mut list: Vec<VertexSet> = edges.into_iter().filter(|e| !e.is_empty()).collect();
        list.sort();
        list.dedup();
        Hypergraph {
            labels,
            edges: list,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.labels.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn edges_containing(&self, v: usize) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().copied().filter(move |e| e.contains(v))
    }

    pub fn is_loop(&self, v: usize) -> bool {
        self.contains_edge(VertexSet::singleton(v))
    }

    /// Vertices `v` with `{v}` an edge.
    pub fn loop_vertices(&self) -> VertexSet {
        self.edges
            .iter()
            .filter(|e| e.len() == 1)
            .fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
    }

    /// True when every vertex carries a loop.
    pub fn has_all_loops(&self) -> bool {
        self.loop_vertices() == self.vertex_set()
    }

    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    /// Union of all edges.
    pub fn covered_vertices(&self) -> VertexSet {
        self.edges
            .iter()
            .fold(VertexSet::EMPTY, |acc, e| acc.union(*e))
    }

    /// Vertices contained in no edge.
    pub fn isolated_vertices(&self) -> VertexSet {
        self.vertex_set().difference(self.covered_vertices())
    }

    pub fn has_isolated_vertex(&self) -> bool {
        !self.isolated_vertices().is_empty()
    }

    /// `H - e`, on the same vertex set.
    pub fn delete_edge(&self, e: VertexSet) -> Result<Self> {
        let pos = self
            .edges
            .binary_search(&e)
            .map_err(|_| Error::EdgeNotFound(format_set(&self.labels, e)))?;
        let mut edges = self.edges.clone();
        edges.remove(pos);
        Ok(Hypergraph {
            labels: self.labels.clone(),
            edges,
        })
    }

    /// Edge annihilation: the hypergraph `{f \ e : f in H, f not inside e}`
    /// on `V \ e`. Coinciding differences merge into one edge. Surviving
    /// vertices keep their labels and relative order.
    pub fn annihilate_edge(&self, e: VertexSet) -> Result<Self> {
        if !self.contains_edge(e) {
            return Err(Error::EdgeNotFound(format_set(&self.labels, e)));
        }
        let keep = self.vertex_set().difference(e);
        let diffs = self
            .edges
            .iter()
            .filter(|f| !f.is_subset(e))
            .map(|f| f.difference(e));
        Ok(self.project(keep, diffs))
    }

    /// Vertex restriction `{e \ {v} : e in H}` on `V \ {v}`.
    ///
    /// A loop at `v` would leave the empty set, which is not an edge; it is
    /// dropped. The identity `NC(H ¬ v) = NC(H)[V \ {v}]` therefore holds only
    /// when `v` carries no loop.
    pub fn restrict_away_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.num_vertices() {
            return Err(Error::VertexOutOfRange(v));
        }
        let keep = self.vertex_set().without(v);
        let diffs = self.edges.iter().map(|e| e.without(v));
        Ok(self.project(keep, diffs))
    }

    /// Drops every vertex that lies in no edge.
    pub fn without_isolated_vertices(&self) -> Self {
        let keep = self.covered_vertices();
        self.project(keep, self.edges.iter().copied())
    }

    /// The inclusion-minimal edges.
    pub fn minimalize(&self) -> Self {
        Hypergraph {
            labels: self.labels.clone(),
            edges: minimal_elements(self.edges.clone()),
        }
    }

    /// The dual hypergraph: one vertex per edge of `H` (labelled by the edge)
    /// and one edge `{F in H : v in F}` per vertex `v`, repeats merged.
    pub fn dual_hypergraph(&self) -> Result<Self> {
        if let Some(v) = self.isolated_vertices().first() {
            return Err(Error::IsolatedVertex(self.labels[v].clone()));
        }
        if self.edges.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "edge count",
                size: self.edges.len(),
                cap: MAX_VERTICES,
            });
        }
        let labels = self
            .edges
            .iter()
            .map(|e| format_set(&self.labels, *e))
            .collect();
        let stars = (0..self.num_vertices()).map(|v| {
            self.edges
                .iter()
                .enumerate()
                .filter(|(_, e)| e.contains(v))
                .map(|(i, _)| i)
                .collect::<VertexSet>()
        });
        Ok(Hypergraph::collapsed(labels, stars))
    }

    /// Applies the vertex map `old -> map[old]` to every edge. Used to compare
    /// hypergraphs up to an explicit relabeling.
    pub fn mapped_edges(&self, map: &[usize]) -> Vec<VertexSet> {
        let mut out: Vec<VertexSet> = self
            .edges
            .iter()
            .map(|e| e.iter().map(|v| map[v]).collect())
            .collect();
        out.sort();
        out
    }

    /// Restricts to the vertices in `keep`, renumbering them densely in their
    /// original order, and merges the given sets (intersected with `keep`)
    /// into the new edge set.
    pub(crate) fn project(
        &self,
        keep: VertexSet,
        edges: impl IntoIterator<Item = VertexSet>,
    ) -> Self {
        let labels = keep.iter().map(|v| self.labels[v].clone()).collect();
        let edges = edges
            .into_iter()
            .map(|e| compress(e.intersection(keep), keep));
        Hypergraph::collapsed(labels, edges)
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        format_set(&self.labels, s)
    }
}

/// Renumbers the members of `s` (all inside `keep`) by their rank in `keep`.
pub(crate) fn compress(s: VertexSet, keep: VertexSet) -> VertexSet {
    keep.iter()
        .enumerate()
        .filter(|(_, v)| s.contains(*v))
        .map(|(i, _)| i)
        .collect()
}

/// Inverse of [`compress`].
pub(crate) fn expand(s: VertexSet, keep: VertexSet) -> VertexSet {
    keep.iter()
        .enumerate()
        .filter(|(i, _)| s.contains(*i))
        .map(|(_, v)| v)
        .collect()
}

pub fn format_set(labels: &[String], s: VertexSet) -> String {
    let parts: Vec<&str> = s.iter().map(|v| labels[v].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.len() > MAX_VERTICES {
        return Err(Error::TooLarge {
            what: "vertex count",
            size: labels.len(),
            cap: MAX_VERTICES,
        });
    }
    let mut sorted: Vec<&String> = labels.iter().collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateVertex(w[0].clone()));
    }
    Ok(())
}
