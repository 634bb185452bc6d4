//! Exact domination parameters of hypergraphs.
//!
//! `W` dominates `v` (strong total domination) when `e \ {v} ⊆ W` for some
//! edge `e ∋ v`; in particular a loop `{v}` is dominated by every set. All
//! minimum searches run over candidate sets in ascending cardinality and
//! lexicographic order within a cardinality, so the reported witness is the
//! lexicographically first minimum one.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::maximal_independent_sets;
use crate::error::Result;
use crate::ext::ExtNat;
use crate::homology::Limits;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{minimal_elements, VertexSet};

pub fn strongly_dominates(h: &Hypergraph, w: VertexSet, v: usize) -> bool {
    let rest = w.without(v);
    h.edges_containing(v).any(|e| e.without(v).is_subset(rest))
}

pub fn totally_dominates(h: &Hypergraph, w: VertexSet, v: usize) -> bool {
    if h.is_loop(v) {
        return true;
    }
    let others = w.without(v);
    h.edges_containing(v).any(|e| e.intersects(others))
}

pub fn weakly_dominates(h: &Hypergraph, w: VertexSet, v: usize) -> bool {
    w.contains(v) || totally_dominates(h, w, v)
}

/// `W` strongly dominates every vertex of `A`.
pub fn dominates(h: &Hypergraph, w: VertexSet, a: VertexSet) -> bool {
    a.iter().all(|v| strongly_dominates(h, w, v))
}

/// Independent, and every edge meets `A` at most once.
pub fn is_strongly_independent(h: &Hypergraph, a: VertexSet) -> bool {
    h.edges().iter().all(|e| {
        let m = e.intersection(a).len();
        m == 0 || (m == 1 && e.len() > 1)
    })
}

/// A minimum value with the lexicographically first witness achieving it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minimum {
    pub value: ExtNat,
    pub witness: Option<VertexSet>,
}

impl Minimum {
    fn from_search(found: Option<VertexSet>) -> Self {
        match found {
            Some(w) => Minimum {
                value: ExtNat::Finite(w.len()),
                witness: Some(w),
            },
            None => Minimum {
                value: ExtNat::Infinite,
                witness: None,
            },
        }
    }
}

/// A maximum over (strongly) independent sets `A`, with a maximising `A` and
/// the minimum witness `W` for it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Maximum {
    pub value: ExtNat,
    pub set: VertexSet,
    pub dominator: Option<VertexSet>,
}

/// `γ_E` with the lexicographically first minimum family of edge indices
/// (positions in `h.edges()`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeMinimum {
    pub value: ExtNat,
    pub edges: Option<Vec<usize>>,
}

/// For every target, the sets one of which `W` must contain. An empty option
/// means the target is satisfied outright; no options means it never is.
fn requirements(h: &Hypergraph, a: VertexSet) -> Vec<Vec<VertexSet>> {
    a.iter()
        .map(|v| minimal_elements(h.edges_containing(v).map(|e| e.without(v)).collect()))
        .collect()
}

/// Lexicographically first minimum `W ⊆ pool` containing an option of every
/// requirement.
fn min_hitting(reqs: &[Vec<VertexSet>]) -> Option<VertexSet> {
    if reqs.iter().any(|opts| opts.is_empty()) {
        return None;
    }
    let live: Vec<&Vec<VertexSet>> = reqs
        .iter()
        .filter(|opts| !opts.iter().any(|o| o.is_empty()))
        .collect();
    let pool = live
        .iter()
        .flat_map(|opts| opts.iter())
        .fold(VertexSet::EMPTY, |acc, o| acc.union(*o));
    let elems = pool.to_vec();
    for size in 0..=elems.len() {
        if let Some(w) = extend(&live, &elems, 0, VertexSet::EMPTY, size) {
            return Some(w);
        }
    }
    None
}

/// Depth-first search over `size`-subsets of `elems[start..]` added to `w`,
/// in lexicographic order. A branch is cut when some requirement has no
/// option still reachable with the remaining budget.
fn extend(
    reqs: &[&Vec<VertexSet>],
    elems: &[usize],
    start: usize,
    w: VertexSet,
    budget: usize,
) -> Option<VertexSet> {
    let reachable = elems[start..].iter().copied().collect::<VertexSet>();
    for opts in reqs {
        let ok = opts.iter().any(|o| {
            let missing = o.difference(w);
            missing.is_subset(reachable) && missing.len() <= budget
        });
        if !ok {
            return None;
        }
    }
    if budget == 0 {
        return Some(w);
    }
    for i in start..elems.len() {
        if elems.len() - i < budget {
            break;
        }
        if let Some(found) = extend(reqs, elems, i + 1, w.with(elems[i]), budget - 1) {
            return Some(found);
        }
    }
    None
}

/// `γ(H; A)`: the least `|W|` with `W` dominating every vertex of `A`.
pub fn gamma(h: &Hypergraph, a: VertexSet) -> Minimum {
    Minimum::from_search(min_hitting(&requirements(h, a)))
}

/// `γ̃(H) = γ(H; V)`.
pub fn gamma_tilde(h: &Hypergraph) -> Minimum {
    gamma(h, h.vertex_set())
}

/// `γ'(H; A)`: the least `|W|` with `W ⊆ V \ A` weakly dominating every
/// vertex of `A`.
pub fn gamma_prime(h: &Hypergraph, a: VertexSet) -> Minimum {
    let outside = h.vertex_set().difference(a);
    let reqs: Vec<Vec<VertexSet>> = a
        .iter()
        .map(|v| {
            if h.is_loop(v) {
                return vec![VertexSet::EMPTY];
            }
            let nbrs = h
                .edges_containing(v)
                .fold(VertexSet::EMPTY, |acc, e| acc.union(e))
                .intersection(outside)
                .without(v);
            nbrs.iter().map(VertexSet::singleton).collect()
        })
        .collect();
    Minimum::from_search(min_hitting(&reqs))
}

/// Vertices sharing an edge with each vertex, loops ignored.
fn co_edge_neighbours(h: &Hypergraph) -> Vec<VertexSet> {
    let mut nbrs = vec![VertexSet::EMPTY; h.num_vertices()];
    for e in h.edges() {
        for v in e.iter() {
            nbrs[v] = nbrs[v].union(e.without(v));
        }
    }
    nbrs
}

/// Maximal strongly independent sets in lexicographic order.
///
/// Strong independence means no loop vertex and no two vertices in a common
/// edge, so these are the maximal independent sets of the co-edge graph on
/// the non-loop vertices (Bron–Kerbosch with pivoting on its complement).
pub fn maximal_strongly_independent_sets(h: &Hypergraph) -> Vec<VertexSet> {
    let nbrs = co_edge_neighbours(h);
    let allowed = h.vertex_set().difference(h.loop_vertices());
    let non_adj: Vec<VertexSet> = (0..h.num_vertices())
        .map(|v| allowed.difference(nbrs[v]).without(v))
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(
        &non_adj,
        VertexSet::EMPTY,
        allowed,
        VertexSet::EMPTY,
        &mut out,
    );
    out.sort();
    out
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    let px = p.union(x);
    let Some(pivot) = px.iter().max_by_key(|u| p.intersection(adj[*u]).len()) else {
        out.push(r);
        return;
    };
    for v in p.difference(adj[pivot]).iter() {
        bron_kerbosch(
            adj,
            r.with(v),
            p.intersection(adj[v]),
            x.intersection(adj[v]),
            out,
        );
        p.remove(v);
        x.insert(v);
    }
}

/// Maximum of `f` over `sets`, first maximiser in the given order.
fn maximise(sets: &[VertexSet], f: impl Fn(VertexSet) -> Minimum + Sync) -> Maximum {
    let values: Vec<Minimum> = sets.par_iter().map(|a| f(*a)).collect();
    let mut best: Option<(usize, &Minimum)> = None;
    for (i, m) in values.iter().enumerate() {
        if best.is_none_or(|(_, b)| m.value > b.value) {
            best = Some((i, m));
        }
    }
    match best {
        Some((i, m)) => Maximum {
            value: m.value,
            set: sets[i],
            dominator: m.witness,
        },
        None => Maximum {
            value: ExtNat::Finite(0),
            set: VertexSet::EMPTY,
            dominator: Some(VertexSet::EMPTY),
        },
    }
}

/// `γ_si(H)`: the maximum of `γ(H; A)` over strongly independent `A`.
///
/// `γ(H; ·)` is monotone and strong independence is closed under subsets, so
/// only maximal strongly independent sets are examined. An isolated vertex
/// `v` makes `{v}` strongly independent with `γ(H; {v}) = ∞`.
pub fn gamma_si(h: &Hypergraph) -> Maximum {
    maximise(&maximal_strongly_independent_sets(h), |a| gamma(h, a))
}

/// `t(H)`: the maximum of `γ'(H; A)` over independent `A`, again attained on a
/// maximal independent set. Infinite exactly when `H` has an isolated vertex.
pub fn t_param(h: &Hypergraph) -> Maximum {
    maximise(&maximal_independent_sets(h), |a| gamma_prime(h, a))
}

/// `γ_E(H)`: the fewest edges whose union dominates `V`.
pub fn gamma_e(h: &Hypergraph) -> EdgeMinimum {
    let reqs = requirements(h, h.vertex_set());
    if reqs.iter().any(|opts| opts.is_empty()) {
        return EdgeMinimum {
            value: ExtNat::Infinite,
            edges: None,
        };
    }
    let live: Vec<&Vec<VertexSet>> = reqs
        .iter()
        .filter(|opts| !opts.iter().any(|o| o.is_empty()))
        .collect();
    let edges = h.edges();
    // suffix[i] = union of edges[i..]
    let mut suffix = vec![VertexSet::EMPTY; edges.len() + 1];
    for i in (0..edges.len()).rev() {
        suffix[i] = suffix[i + 1].union(edges[i]);
    }
    let mut chosen = Vec::new();
    for size in 0..=edges.len() {
        if extend_edges(
            &live,
            edges,
            &suffix,
            0,
            VertexSet::EMPTY,
            size,
            &mut chosen,
        ) {
            return EdgeMinimum {
                value: ExtNat::Finite(size),
                edges: Some(chosen),
            };
        }
    }
    EdgeMinimum {
        value: ExtNat::Infinite,
        edges: None,
    }
}

fn extend_edges(
    reqs: &[&Vec<VertexSet>],
    edges: &[VertexSet],
    suffix: &[VertexSet],
    start: usize,
    union: VertexSet,
    budget: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let reachable = if budget == 0 {
        union
    } else {
        union.union(suffix[start])
    };
    if !reqs
        .iter()
        .all(|opts| opts.iter().any(|o| o.is_subset(reachable)))
    {
        return false;
    }
    if budget == 0 {
        return true;
    }
    for i in start..edges.len() {
        if edges.len() - i < budget {
            break;
        }
        chosen.push(i);
        if extend_edges(
            reqs,
            edges,
            suffix,
            i + 1,
            union.union(edges[i]),
            budget - 1,
            chosen,
        ) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `g(H) = max{⌈γ̃/2⌉, γ_si, γ_E}`.
pub fn g_value(h: &Hypergraph) -> ExtNat {
    g_from(gamma_tilde(h).value, gamma_si(h).value, gamma_e(h).value)
}

pub fn g_from(gamma_tilde: ExtNat, gamma_si: ExtNat, gamma_e: ExtNat) -> ExtNat {
    gamma_tilde.ceil_half().max(gamma_si).max(gamma_e)
}

/// Which parameters a [`DominationReport`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamSelection {
    GammaTilde,
    GammaSi,
    GammaE,
    T,
    All,
}

impl ParamSelection {
    fn wants(self, p: ParamSelection) -> bool {
        self == ParamSelection::All || self == p
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetWitness {
    pub set: Vec<String>,
    pub dominator: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_tilde: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_si: Option<SetWitness>,
    #[serde(rename = "gamma_E", skip_serializing_if = "Option::is_none")]
    pub gamma_e: Option<Vec<Vec<String>>>,
    #[serde(rename = "t_param", skip_serializing_if = "Option::is_none")]
    pub t: Option<SetWitness>,
}

/// Selected domination parameters of one hypergraph, witnesses by label.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DominationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_tilde: Option<ExtNat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma_si: Option<ExtNat>,
    #[serde(rename = "gamma_E", skip_serializing_if = "Option::is_none")]
    pub gamma_e: Option<ExtNat>,
    #[serde(rename = "t_param", skip_serializing_if = "Option::is_none")]
    pub t: Option<ExtNat>,
    #[serde(rename = "g_value", skip_serializing_if = "Option::is_none")]
    pub g: Option<ExtNat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Witnesses>,
}

impl DominationReport {
    pub fn compute(
        h: &Hypergraph,
        selection: ParamSelection,
        with_witnesses: bool,
        limits: &Limits,
    ) -> Result<Self> {
        limits.check_vertices(h.num_vertices())?;
        let names = |s: VertexSet| s.iter().map(|v| h.label(v).to_string()).collect::<Vec<_>>();
        let set_witness = |m: &Maximum| SetWitness {
            set: names(m.set),
            dominator: m.dominator.map(names),
        };
        let mut report = DominationReport::default();
        let mut wit = Witnesses::default();
        if selection.wants(ParamSelection::GammaTilde) {
            let m = gamma_tilde(h);
            report.gamma_tilde = Some(m.value);
            wit.gamma_tilde = m.witness.map(names);
        }
        if selection.wants(ParamSelection::GammaSi) {
            let m = gamma_si(h);
            report.gamma_si = Some(m.value);
            wit.gamma_si = Some(set_witness(&m));
        }
        if selection.wants(ParamSelection::GammaE) {
            let m = gamma_e(h);
            report.gamma_e = Some(m.value);
            wit.gamma_e = m
                .edges
                .map(|idx| idx.iter().map(|i| names(h.edges()[*i])).collect());
        }
        if selection.wants(ParamSelection::T) {
            let m = t_param(h);
            report.t = Some(m.value);
            wit.t = Some(set_witness(&m));
        }
        if let (Some(a), Some(b), Some(c)) = (report.gamma_tilde, report.gamma_si, report.gamma_e) {
            report.g = Some(g_from(a, b, c));
        }
        if with_witnesses {
            report.witnesses = Some(wit);
        }
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::*;
    use proptest::prelude::*;

    fn set(items: &[usize]) -> VertexSet {
        VertexSet::from(items)
    }

    #[test]
    fn domination_predicates() {
        let h = Hypergraph::from_edge_lists(3, &[&[0, 1, 2]]).unwrap();
        assert!(strongly_dominates(&h, set(&[1, 2]), 0));
        assert!(!strongly_dominates(&h, set(&[1]), 0));
        assert!(totally_dominates(&h, set(&[2]), 0));
        assert!(!totally_dominates(&h, set(&[0]), 0));
        assert!(weakly_dominates(&h, set(&[0]), 0));

        let l = Hypergraph::from_edge_lists(2, &[&[0], &[0, 1]]).unwrap();
        assert!(strongly_dominates(&l, VertexSet::EMPTY, 0));
        assert!(totally_dominates(&l, VertexSet::EMPTY, 0));
        assert!(!strongly_dominates(&l, VertexSet::EMPTY, 1));
    }

    #[test]
    fn gamma_small() {
        let h = Hypergraph::from_edge_lists(2, &[&[0, 1]]).unwrap();
        assert_eq!(gamma(&h, set(&[0])).value, ExtNat::Finite(1));
        assert_eq!(gamma(&h, set(&[0])).witness, Some(set(&[1])));
        assert_eq!(gamma(&h, VertexSet::EMPTY).value, ExtNat::Finite(0));
        assert_eq!(gamma_tilde(&h).value, ExtNat::Finite(2));

        let iso = Hypergraph::from_edge_lists(3, &[&[0, 1]]).unwrap();
        assert_eq!(gamma(&iso, set(&[2])).value, ExtNat::Infinite);
    }

    #[test]
    fn witness_is_lexicographically_first() {
        // P_{4,2}: 0-1-2-3; the middle edge dominates everything.
        let p = tight_path(4, 2).unwrap();
        let m = gamma_tilde(&p);
        assert_eq!(m.value, ExtNat::Finite(2));
        assert_eq!(m.witness, Some(set(&[1, 2])));
        // vertex 0 needs 1, vertex 3 needs 2; {1,2} then dominates 0,3 only
        let m = gamma(&p, set(&[0, 3]));
        assert_eq!(m.witness, Some(set(&[1, 2])));
        let m = gamma(&p, set(&[1]));
        assert_eq!(m.witness, Some(set(&[0])));
    }

    #[test]
    fn example_hr_gamma_tilde() {
        for r in 3..=4 {
            let h = example_hr(r).unwrap();
            assert_eq!(gamma_tilde(&h).value, ExtNat::Finite(2 * r - 1));
        }
    }

    #[test]
    fn all_loops_give_zero() {
        let h = tight_cycle(4, 1).unwrap();
        assert!(h.has_all_loops());
        assert_eq!(gamma_tilde(&h).value, ExtNat::Finite(0));
        assert_eq!(gamma_si(&h).value, ExtNat::Finite(0));
        assert_eq!(gamma_e(&h).value, ExtNat::Finite(0));
        assert_eq!(t_param(&h).value, ExtNat::Finite(0));
    }

    #[test]
    fn single_full_edge() {
        let h = Hypergraph::new(3, [VertexSet::full(3)]).unwrap();
        let e = gamma_e(&h);
        assert_eq!(e.value, ExtNat::Finite(1));
        assert_eq!(e.edges, Some(vec![0]));
    }

    #[test]
    fn isolated_vertex_makes_everything_infinite() {
        let h = Hypergraph::from_edge_lists(4, &[&[0, 1], &[1, 2]]).unwrap();
        assert_eq!(gamma_tilde(&h).value, ExtNat::Infinite);
        assert_eq!(gamma_si(&h).value, ExtNat::Infinite);
        assert_eq!(gamma_e(&h).value, ExtNat::Infinite);
        assert_eq!(t_param(&h).value, ExtNat::Infinite);
        assert_eq!(g_value(&h), ExtNat::Infinite);
    }

    #[test]
    fn complete_uniform_values() {
        for (n, k) in [(4, 2), (5, 3), (6, 3)] {
            let h = complete_uniform(n, k).unwrap();
            assert_eq!(gamma_si(&h).value, ExtNat::Finite(k - 1), "n={n} k={k}");
            assert_eq!(t_param(&h).value, ExtNat::Finite(1), "n={n} k={k}");
        }
    }

    #[test]
    fn example_fr_gamma_si() {
        let f = example_fr(3).unwrap();
        let m = gamma_si(&f);
        assert!(m.value >= ExtNat::Finite(6));
        let column: VertexSet = (1..=3).map(|i| grid_index(3, i, 1)).collect();
        assert!(is_strongly_independent(&f, column));
        assert_eq!(gamma(&f, column).value, ExtNat::Finite(6));
    }

    #[test]
    fn example_ank_values() {
        let a = example_ank(2, 3).unwrap();
        assert!(gamma_si(&a).value <= ExtNat::Finite(3));
        let core = example_ank_core(2, 3);
        assert_eq!(gamma_prime(&a, core).value, ExtNat::Finite(2));
        assert!(t_param(&a).value >= ExtNat::Finite(2));
    }

    #[test]
    fn gamma_prime_of_empty_set() {
        let h = tight_path(3, 2).unwrap();
        assert_eq!(gamma_prime(&h, VertexSet::EMPTY).value, ExtNat::Finite(0));
    }

    #[test]
    fn strongly_independent_sets() {
        let h = Hypergraph::from_edge_lists(5, &[&[0, 1, 2], &[2, 3], &[4]]).unwrap();
        assert!(is_strongly_independent(&h, set(&[0, 3])));
        assert!(!is_strongly_independent(&h, set(&[0, 1])));
        assert!(!is_strongly_independent(&h, set(&[4])));
        assert_eq!(
            maximal_strongly_independent_sets(&h),
            vec![set(&[0, 3]), set(&[1, 3]), set(&[2])]
        );
    }

    #[test]
    fn report_selection() {
        let h = tight_path(4, 2).unwrap();
        let r = DominationReport::compute(&h, ParamSelection::GammaE, false, &Limits::default())
            .unwrap();
        assert_eq!(r.gamma_e, Some(ExtNat::Finite(1)));
        assert!(r.gamma_tilde.is_none() && r.g.is_none());
        let r =
            DominationReport::compute(&h, ParamSelection::All, true, &Limits::default()).unwrap();
        assert_eq!(r.g, Some(ExtNat::Finite(2)));
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["gamma_tilde"], 2);
        assert_eq!(json["gamma_si"], 2);
        assert_eq!(
            json["witnesses"]["gamma_tilde"],
            serde_json::json!(["2", "3"])
        );
        assert_eq!(
            json["witnesses"]["gamma_si"]["set"],
            serde_json::json!(["1", "4"])
        );
    }

    fn small_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..=6).prop_flat_map(|n| {
            prop::collection::vec(1u64..(1u64 << n), 0..8).prop_map(move |bits| {
                let mut edges: Vec<VertexSet> =
                    bits.into_iter().map(VertexSet::from_bits).collect();
                edges.sort();
                edges.dedup();
                Hypergraph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn strong_implies_weak_and_total(h in small_hypergraph(), w in any::<u64>()) {
            let w = VertexSet::from_bits(w).intersection(h.vertex_set());
            for v in 0..h.num_vertices() {
                if strongly_dominates(&h, w, v) {
                    prop_assert!(totally_dominates(&h, w, v));
                    prop_assert!(weakly_dominates(&h, w, v));
                }
            }
        }

        #[test]
        fn witnesses_dominate(h in small_hypergraph(), a in any::<u64>()) {
            let a = VertexSet::from_bits(a).intersection(h.vertex_set());
            let m = gamma(&h, a);
            match m.witness {
                Some(w) => {
                    prop_assert!(dominates(&h, w, a));
                    prop_assert_eq!(m.value, ExtNat::Finite(w.len()));
                }
                None => prop_assert!(a.iter().any(|v| h.edges_containing(v).next().is_none())),
            }
        }

        #[test]
        fn uniform_edge_bound(h in small_hypergraph()) {
            let k = h.max_edge_size();
            if k > 0 && h.is_uniform(k) {
                prop_assert!(gamma_e(&h).value >= gamma_tilde(&h).value.ceil_div(k));
            }
        }

        #[test]
        fn loops_everywhere_zero(n in 1usize..=6, extra in prop::collection::vec(1u64..64, 0..4)) {
            let mut edges: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
            edges.extend(extra.into_iter().map(|b| VertexSet::from_bits(b).intersection(VertexSet::full(n))).filter(|e| !e.is_empty()));
            edges.sort();
            edges.dedup();
            let h = Hypergraph::new(n, edges).unwrap();
            prop_assert_eq!(gamma_tilde(&h).value, ExtNat::Finite(0));
            prop_assert_eq!(gamma_si(&h).value, ExtNat::Finite(0));
            prop_assert_eq!(gamma_e(&h).value, ExtNat::Finite(0));
        }

        #[test]
        fn vertex_restriction_inequalities(h in small_hypergraph()) {
            if h.has_isolated_vertex() {
                return Ok(());
            }
            let ge = gamma_e(&h).value.finite().unwrap();
            let gsi = gamma_si(&h).value.finite().unwrap();
            for v in 0..h.num_vertices() {
                let r = h.restrict_away_vertex(v).unwrap();
                prop_assert!(gamma_e(&r).value.finite().unwrap() + 1 >= ge);
                if h.max_edge_size() <= 2 {
                    prop_assert!(gamma_si(&r).value.finite().unwrap() + 1 >= gsi);
                }
            }
        }
    }
}
