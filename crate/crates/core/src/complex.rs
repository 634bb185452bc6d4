//! Abstract simplicial complexes stored by their maximal faces.
//!
//! The void complex (no faces at all) and the empty complex `{∅}` are
//! different values: the first is [`ComplexKind::Void`], the second is
//! non-void with the single facet `∅`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{compress, expand, format_set, Hypergraph};
use crate::vertex_set::{maximal_elements, VertexSet, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplexKind {
    Void,
    NonVoid,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    kind: ComplexKind,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// The complex generated by `faces` (closed downward). No generators
    /// gives the void complex.
    pub fn from_generators(
        labels: Vec<String>,
        faces: impl IntoIterator<Item = VertexSet>,
    ) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count",
                size: labels.len(),
                cap: MAX_VERTICES,
            });
        }
        let ground = VertexSet::full(labels.len());
        let faces: Vec<VertexSet> = faces.into_iter().collect();
        if faces.iter().any(|f| !f.is_subset(ground)) {
            return Err(Error::BadVertexSet);
        }
        Ok(Self::from_parts(labels, faces))
    }

    pub(crate) fn from_parts(labels: Vec<String>, faces: Vec<VertexSet>) -> Self {
        if faces.is_empty() {
            return SimplicialComplex {
                labels,
                kind: ComplexKind::Void,
                facets: Vec::new(),
            };
        }
        SimplicialComplex {
            labels,
            kind: ComplexKind::NonVoid,
            facets: maximal_elements(faces),
        }
    }

    pub fn void(labels: Vec<String>) -> Self {
        Self::from_parts(labels, Vec::new())
    }

    /// `{∅}`.
    pub fn empty(labels: Vec<String>) -> Self {
        Self::from_parts(labels, vec![VertexSet::EMPTY])
    }

    /// The full simplex `2^V`.
    pub fn simplex(labels: Vec<String>) -> Self {
        let full = VertexSet::full(labels.len());
        Self::from_parts(labels, vec![full])
    }

    /// `Δ_X` on the ground set of `labels`; `Δ_∅` is the empty complex.
    pub fn simplex_on(labels: Vec<String>, x: VertexSet) -> Self {
        Self::from_parts(labels, vec![x])
    }

    /// All proper subsets of the ground set.
    pub fn boundary_of_simplex(labels: Vec<String>) -> Self {
        let full = VertexSet::full(labels.len());
        if full.is_empty() {
            return Self::void(labels);
        }
        let facets = full.iter().map(|v| full.without(v)).collect();
        Self::from_parts(labels, facets)
    }

    pub fn kind(&self) -> ComplexKind {
        self.kind
    }

    pub fn is_void(&self) -> bool {
        self.kind == ComplexKind::Void
    }

    /// True for `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.facets == [VertexSet::EMPTY]
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [self.ground()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ground_size(&self) -> usize {
        self.labels.len()
    }

    pub fn ground(&self) -> VertexSet {
        VertexSet::full(self.labels.len())
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Dimension of the largest face; `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn contains(&self, sigma: VertexSet) -> bool {
        self.facets.iter().any(|f| sigma.is_subset(*f))
    }

    /// Every face, sorted by size then lexicographically. Fails when the
    /// count would exceed `cap`.
    pub fn faces(&self, cap: usize) -> Result<Vec<VertexSet>> {
        let mut seen = std::collections::HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s) && seen.len() > cap {
                    return Err(Error::TooLarge {
                        what: "face count",
                        size: seen.len(),
                        cap,
                    });
                }
            }
        }
        let mut faces: Vec<VertexSet> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        Ok(faces)
    }

    /// Faces contained in `w`, keeping the original ground set.
    pub(crate) fn restrict(&self, w: VertexSet) -> Self {
        let faces = self.facets.iter().map(|f| f.intersection(w)).collect();
        Self::from_parts(self.labels.clone(), faces)
    }

    /// `K[W]`, with ground set `W` renumbered in its original order.
    pub fn induced_subcomplex(&self, w: VertexSet) -> Result<Self> {
        if !w.is_subset(self.ground()) {
            return Err(Error::BadVertexSet);
        }
        let labels = w.iter().map(|v| self.labels[v].clone()).collect();
        let faces = self
            .facets
            .iter()
            .map(|f| compress(f.intersection(w), w))
            .collect();
        Ok(Self::from_parts(labels, faces))
    }

    /// Inverse of [`Self::induced_subcomplex`]: the same faces placed on the
    /// positions `w` of a ground set labelled `labels`.
    pub fn embed(&self, labels: Vec<String>, w: VertexSet) -> Result<Self> {
        let ground = VertexSet::full(labels.len());
        if !w.is_subset(ground) || w.len() != self.ground_size() {
            return Err(Error::BadVertexSet);
        }
        let faces = self.facets.iter().map(|f| expand(*f, w)).collect();
        Ok(Self::from_parts(labels, faces))
    }

    /// Faces with at most `k + 1` vertices, for `k >= -1`.
    pub fn skeleton(&self, k: isize) -> Result<Self> {
        if k < -1 {
            return Err(Error::BadParameter(format!(
                "skeleton dimension must be at least -1, got {k}"
            )));
        }
        let size = (k + 1) as usize;
        let mut faces = Vec::new();
        for f in &self.facets {
            if f.len() <= size {
                faces.push(*f);
            } else {
                faces.extend(f.subsets().filter(|s| s.len() == size));
            }
        }
        Ok(Self::from_parts(self.labels.clone(), faces))
    }

    /// `st(K, A) = {σ ∈ K : A ∪ σ ∈ K}`.
    pub fn star(&self, a: VertexSet) -> Result<Self> {
        if !self.contains(a) {
            return Err(Error::NotAFace(format_set(&self.labels, a)));
        }
        let faces = self
            .facets
            .iter()
            .copied()
            .filter(|f| a.is_subset(*f))
            .collect();
        Ok(Self::from_parts(self.labels.clone(), faces))
    }

    /// Union of the stars of the single vertices of `A`.
    pub fn star_cluster(&self, a: VertexSet) -> Result<Self> {
        if let Some(v) = a.iter().find(|v| !self.contains(VertexSet::singleton(*v))) {
            return Err(Error::NotAFace(format_set(
                &self.labels,
                VertexSet::singleton(v),
            )));
        }
        let faces = self
            .facets
            .iter()
            .copied()
            .filter(|f| f.intersects(a))
            .collect();
        Ok(Self::from_parts(self.labels.clone(), faces))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        let faces = self.facets.iter().chain(&other.facets).copied().collect();
        Ok(Self::from_parts(self.labels.clone(), faces))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.same_ground(other)?;
        let mut faces = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                faces.push(f.intersection(*g));
            }
        }
        Ok(Self::from_parts(self.labels.clone(), faces))
    }

    fn same_ground(&self, other: &Self) -> Result<()> {
        if self.labels != other.labels {
            return Err(Error::GroundMismatch);
        }
        Ok(())
    }

    /// Inclusion-minimal sets that are not faces. For the void complex this
    /// is `{∅}`; the full simplex has none.
    pub fn minimal_nonfaces(&self) -> Vec<VertexSet> {
        if self.is_void() {
            return vec![VertexSet::EMPTY];
        }
        let ground = self.ground();
        let mut out: Vec<VertexSet> = ground
            .subsets()
            .filter(|s| !self.contains(*s) && s.iter().all(|v| self.contains(s.without(v))))
            .collect();
        out.sort();
        out
    }

    /// Alexander dual `D(K) = {σ : V \ σ ∉ K}` on the same ground set. Its
    /// facets are the complements of the minimal non-faces of `K`.
    pub fn alexander_dual(&self) -> Self {
        let ground = self.ground();
        let faces = self
            .minimal_nonfaces()
            .into_iter()
            .map(|s| ground.difference(s))
            .collect();
        Self::from_parts(self.labels.clone(), faces)
    }

    pub fn format_set(&self, s: VertexSet) -> String {
        format_set(&self.labels, s)
    }
}

/// Sets containing no edge of `H`.
pub fn independence_complex(h: &Hypergraph) -> SimplicialComplex {
    SimplicialComplex::from_parts(h.labels().to_vec(), maximal_independent_sets(h))
}

/// Sets that miss some edge of `H`: generated by the complements of the
/// inclusion-minimal edges.
pub fn noncover_complex(h: &Hypergraph) -> SimplicialComplex {
    let ground = h.vertex_set();
    let faces = h
        .minimalize()
        .edges()
        .iter()
        .map(|e| ground.difference(*e))
        .collect();
    SimplicialComplex::from_parts(h.labels().to_vec(), faces)
}

pub fn is_independent(h: &Hypergraph, a: VertexSet) -> bool {
    !h.edges().iter().any(|e| e.is_subset(a))
}

/// Maximal independent sets of `H`, sorted.
pub fn maximal_independent_sets(h: &Hypergraph) -> Vec<VertexSet> {
    let n = h.num_vertices();
    let edges = h.minimalize().edges().to_vec();
    // Edges whose largest vertex is v: the only ones that can close when v
    // joins a set built in increasing vertex order.
    let mut closing: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
    for e in &edges {
        if let Some(m) = e.last() {
            closing[m].push(*e);
        }
    }
    let mut out = Vec::new();
    let mut chosen = VertexSet::EMPTY;
    extend_independent(0, n, &closing, &edges, &mut chosen, &mut out);
    out.sort();
    out
}

fn extend_independent(
    v: usize,
    n: usize,
    closing: &[Vec<VertexSet>],
    edges: &[VertexSet],
    chosen: &mut VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if v == n {
        let maximal = (0..n).filter(|u| !chosen.contains(*u)).all(|u| {
            edges
                .iter()
                .any(|e| e.contains(u) && e.is_subset(chosen.with(u)))
        });
        if maximal {
            out.push(*chosen);
        }
        return;
    }
    let with_v = chosen.with(v);
    if !closing[v].iter().any(|e| e.is_subset(with_v)) {
        *chosen = with_v;
        extend_independent(v + 1, n, closing, edges, chosen, out);
        *chosen = chosen.without(v);
    }
    // Leaving v out is only consistent with maximality if some edge through v
    // can still be completed by the final set.
    let excluded = VertexSet::full(v).difference(*chosen);
    if edges
        .iter()
        .any(|e| e.contains(v) && !e.without(v).intersects(excluded))
    {
        extend_independent(v + 1, n, closing, edges, chosen, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{example_hr, tight_path};

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|v| v.to_string()).collect()
    }

    fn set(items: &[usize]) -> VertexSet {
        VertexSet::from(items)
    }

    #[test]
    fn bullet_examples() {
        let n = 4;
        let none = Hypergraph::new(n, []).unwrap();
        assert_eq!(
            independence_complex(&none),
            SimplicialComplex::simplex(labels(n))
        );
        assert!(noncover_complex(&none).is_void());

        let whole = Hypergraph::new(n, [VertexSet::full(n)]).unwrap();
        assert_eq!(
            independence_complex(&whole),
            SimplicialComplex::boundary_of_simplex(labels(n))
        );
        assert!(noncover_complex(&whole).is_empty_complex());

        let loops = Hypergraph::new(n, (0..n).map(VertexSet::singleton)).unwrap();
        assert!(independence_complex(&loops).is_empty_complex());
        assert_eq!(
            noncover_complex(&loops),
            SimplicialComplex::boundary_of_simplex(labels(n))
        );
    }

    #[test]
    fn void_and_empty_differ() {
        let v = SimplicialComplex::void(labels(2));
        let e = SimplicialComplex::empty(labels(2));
        assert_ne!(v, e);
        assert!(!v.contains(VertexSet::EMPTY));
        assert!(e.contains(VertexSet::EMPTY));
        assert_eq!(v.dim(), None);
        assert_eq!(e.dim(), Some(-1));
        assert_eq!(v.faces(10).unwrap().len(), 0);
        assert_eq!(e.faces(10).unwrap().len(), 1);
    }

    #[test]
    fn dual_of_boundary_of_triangle() {
        let k = SimplicialComplex::boundary_of_simplex(labels(3));
        assert!(k.alexander_dual().is_empty_complex());
        assert!(SimplicialComplex::simplex(labels(3))
            .alexander_dual()
            .is_void());
        assert_eq!(
            SimplicialComplex::void(labels(3)).alexander_dual(),
            SimplicialComplex::simplex(labels(3))
        );
    }

    #[test]
    fn noncover_is_dual_of_independence() {
        let h = example_hr(3).unwrap();
        assert_eq!(
            independence_complex(&h).alexander_dual(),
            noncover_complex(&h)
        );
        let p = tight_path(6, 3).unwrap();
        assert_eq!(
            independence_complex(&p).alexander_dual(),
            noncover_complex(&p)
        );
    }

    #[test]
    fn induced_subcomplex_cases() {
        let k = noncover_complex(&tight_path(5, 2).unwrap());
        assert_eq!(k.induced_subcomplex(k.ground()).unwrap(), k);
        assert_eq!(
            k.induced_subcomplex(VertexSet::from([7])),
            Err(Error::BadVertexSet)
        );
        let sub = k.induced_subcomplex(set(&[1, 3])).unwrap();
        assert_eq!(sub.labels(), &["2", "4"]);
        let back = sub.embed(k.labels().to_vec(), set(&[1, 3])).unwrap();
        assert_eq!(back, k.restrict(set(&[1, 3])));
        assert_eq!(
            sub.embed(k.labels().to_vec(), set(&[1])),
            Err(Error::BadVertexSet)
        );
    }

    #[test]
    fn hr4_induced_on_w_is_boundary() {
        let h = example_hr(4).unwrap();
        // W = {v2,v3,v4,v6,v7,v8}
        let w = set(&[1, 2, 3, 5, 6, 7]);
        let sub = noncover_complex(&h).induced_subcomplex(w).unwrap();
        assert_eq!(
            sub.facets(),
            SimplicialComplex::boundary_of_simplex(sub.labels().to_vec()).facets()
        );
    }

    #[test]
    fn skeleton_star_and_cluster() {
        let k = SimplicialComplex::simplex(labels(3));
        let sk = k.skeleton(0).unwrap();
        assert_eq!(sk.facets(), &[set(&[0]), set(&[1]), set(&[2])]);
        assert!(k.skeleton(-1).unwrap().is_empty_complex());
        assert!(k.skeleton(-2).is_err());

        let k = independence_complex(&tight_path(4, 2).unwrap());
        assert_eq!(k.star(VertexSet::EMPTY).unwrap(), k);
        assert!(matches!(k.star(set(&[0, 1])), Err(Error::NotAFace(_))));
        let st = k.star(set(&[0])).unwrap();
        assert!(st.facets().iter().all(|f| f.contains(0)));
        let loops = Hypergraph::from_edge_lists(2, &[&[0]]).unwrap();
        let i = independence_complex(&loops);
        assert!(i.star_cluster(set(&[0])).is_err());
        assert!(i.star_cluster(VertexSet::EMPTY).unwrap().is_void());
    }

    #[test]
    fn union_and_intersection() {
        let a = SimplicialComplex::simplex_on(labels(3), set(&[0, 1]));
        let b = SimplicialComplex::simplex_on(labels(3), set(&[1, 2]));
        assert_eq!(a.union(&b).unwrap().facets(), &[set(&[0, 1]), set(&[1, 2])]);
        assert_eq!(a.intersection(&b).unwrap().facets(), &[set(&[1])]);
        let c = SimplicialComplex::simplex(labels(2));
        assert_eq!(a.union(&c), Err(Error::GroundMismatch));
        let v = SimplicialComplex::void(labels(3));
        assert!(a.intersection(&v).unwrap().is_void());
        assert_eq!(a.union(&v).unwrap(), a);
    }

    #[test]
    fn maximal_independent_sets_of_path() {
        // P_{4,2}: 1-2-3-4
        let h = tight_path(4, 2).unwrap();
        assert_eq!(
            maximal_independent_sets(&h),
            vec![set(&[0, 2]), set(&[0, 3]), set(&[1, 3])]
        );
    }

    #[test]
    fn face_cap() {
        let k = SimplicialComplex::simplex(labels(10));
        assert!(matches!(k.faces(100), Err(Error::TooLarge { .. })));
        assert_eq!(k.faces(1024).unwrap().len(), 1024);
    }
}
