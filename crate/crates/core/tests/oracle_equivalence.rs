mod common;

use common::*;
use noncover::corpus::{corpus, CorpusSpec};
use noncover::domination::{gamma_e, gamma_si, gamma_tilde, t_param};
use noncover::homology::leray_number_with;
use noncover::hypergraph::*;
use noncover::*;

fn report(h: &Hypergraph) -> String {
    let edges: Vec<String> = h.edges().iter().map(|e| h.format_set(*e)).collect();
    format!("n={} {}", h.num_vertices(), edges.join(" "))
}

#[test]
fn domination_matches_brute_force() {
    let hs = corpus(11, 100, &CorpusSpec::new(7, 4).edges(0, 10));
    for h in &hs {
        assert_eq!(
            ext(gamma_tilde(h).value),
            gamma_tilde_naive(h),
            "gamma_tilde {}",
            report(h)
        );
        assert_eq!(
            ext(gamma_si(h).value),
            common::gamma_si(h),
            "gamma_si {}",
            report(h)
        );
        assert_eq!(
            ext(gamma_e(h).value),
            common::gamma_e(h),
            "gamma_E {}",
            report(h)
        );
        assert_eq!(ext(t_param(h).value), common::t_param(h), "t {}", report(h));
    }
}

fn gamma_tilde_naive(h: &Hypergraph) -> Ext {
    common::gamma_tilde(h)
}

#[test]
fn homology_matches_dense_elimination() {
    let hs = corpus(12, 100, &CorpusSpec::new(7, 4).edges(0, 10));
    for h in &hs {
        assert_eq!(
            betti_vector(&noncover_complex(h)).unwrap(),
            naive_noncover_betti(h),
            "NC {}",
            report(h)
        );
        assert_eq!(
            betti_vector(&independence_complex(h)).unwrap(),
            naive_independence_betti(h),
            "I {}",
            report(h)
        );
    }
}

#[test]
fn leray_matches_subset_enumeration() {
    let hs = corpus(13, 40, &CorpusSpec::new(6, 3));
    for h in &hs {
        let l = leray_number_with(&noncover_complex(h), &Limits::unlimited()).unwrap();
        assert_eq!(l, naive_noncover_leray(h), "{}", report(h));
    }
}

#[test]
fn small_paths_by_brute_force() {
    let p4 = tight_path(4, 2).unwrap();
    assert_eq!(common::gamma_tilde(&p4), Some(2));
    assert_eq!(common::gamma_si(&p4), Some(2));
    assert_eq!(common::gamma_e(&p4), Some(1));
    assert_eq!(ext(gamma_tilde(&p4).value), Some(2));

    let p6 = tight_path(6, 2).unwrap();
    assert_eq!(ext(gamma_tilde(&p6).value), common::gamma_tilde(&p6));
    assert_eq!(ext(gamma_si(&p6).value), common::gamma_si(&p6));
    assert_eq!(ext(gamma_e(&p6).value), common::gamma_e(&p6));
    assert_eq!(ext(g_value_lib(&p6)), common::g_value(&p6));
}

fn g_value_lib(h: &Hypergraph) -> ExtNat {
    noncover::domination::g_value(h)
}

#[test]
fn named_examples_by_brute_force() {
    let h4 = example_hr(4).unwrap();
    assert_eq!(common::gamma_tilde(&h4), Some(7));
    assert_eq!(ext(gamma_tilde(&h4).value), Some(7));

    let f3 = example_fr(3).unwrap();
    assert_eq!(ext(gamma_si(&f3).value), common::gamma_si(&f3));
    assert!(common::gamma_si(&f3) >= Some(6));

    for (n, k) in [(4, 2), (5, 3)] {
        let h = complete_uniform(n, k).unwrap();
        assert_eq!(common::gamma_si(&h), Some(k - 1));
        assert_eq!(common::t_param(&h), Some(1));
    }
}

#[test]
fn isolated_vertex_is_infinite_everywhere() {
    let h = Hypergraph::from_edge_lists(3, &[&[0, 1]]).unwrap();
    assert_eq!(common::gamma_tilde(&h), None);
    assert_eq!(common::gamma_si(&h), None);
    assert_eq!(common::gamma_e(&h), None);
    assert_eq!(common::t_param(&h), None);
    assert_eq!(ext(gamma_si(&h).value), None);
    assert_eq!(ext(t_param(&h).value), None);
}
