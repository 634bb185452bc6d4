//! Verification suites: computed invariants checked against the closed-form
//! predictions and inequalities, over fixed families and fixed-seed corpora.

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{independence_complex, noncover_complex, SimplicialComplex};
use crate::corpus::{corpus, rng, CorpusSpec};
use crate::domination::{
    dominates, g_value, gamma, gamma_e, gamma_si, gamma_tilde, is_strongly_independent, t_param,
};
use crate::error::Result;
use crate::ext::ExtNat;
use crate::homology::{betti_vector_with, eta_of, leray_number_with, BettiVector, Limits};
use crate::hypergraph::*;
use crate::oracles::{
    check_eta_dual, check_leray_bounds, predict_betti_independence_cycle,
    predict_betti_independence_path, predict_nc_cycle, predict_nc_path,
};
use crate::rainbow::{find_rainbow_cover, is_cover, sample_cover_system};
use crate::vertex_set::VertexSet;

/// Failure messages kept per suite; the count is always exact.
const MAX_REPORTED: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Duality,
    EtaDual,
    LerayBounds,
    TightPaths,
    TightCycles,
    Examples,
    EdgeRemoval,
    Genpos,
    Rainbow,
    DualHypergraph,
    StarCluster,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Duality,
        Suite::EtaDual,
        Suite::LerayBounds,
        Suite::TightPaths,
        Suite::TightCycles,
        Suite::Examples,
        Suite::EdgeRemoval,
        Suite::Genpos,
        Suite::Rainbow,
        Suite::DualHypergraph,
        Suite::StarCluster,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::EtaDual => "eta-dual",
            Suite::LerayBounds => "leray-bounds",
            Suite::TightPaths => "tight-paths",
            Suite::TightCycles => "tight-cycles",
            Suite::Examples => "examples",
            Suite::EdgeRemoval => "edge-removal",
            Suite::Genpos => "genpos",
            Suite::Rainbow => "rainbow",
            Suite::DualHypergraph => "dual-hypergraph",
            Suite::StarCluster => "star-cluster",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Seed offset, so suites sharing a seed still draw different corpora.
    fn salt(self) -> u64 {
        Suite::ALL.iter().position(|s| *s == self).unwrap() as u64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest `n` in the tight path and cycle sweeps.
    pub max_n: usize,
    /// Largest `k` in the tight path and cycle sweeps.
    pub max_k: usize,
    pub seed: u64,
    /// Overrides the instance count of the corpus suites.
    pub samples: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: 12,
            max_k: 4,
            seed: 2020,
            samples: None,
        }
    }
}

impl VerifyConfig {
    fn seed_for(&self, suite: Suite) -> u64 {
        self.seed.wrapping_add(suite.salt() << 32)
    }

    fn count(&self, default: usize) -> usize {
        self.samples.unwrap_or(default)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub cases: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

/// Failure messages of one case; empty means it passed.
type Outcome = Result<Vec<String>>;

fn run_cases<T: Sync>(
    suite: Suite,
    items: &[T],
    check: impl Fn(&T) -> Outcome + Sync + Send,
) -> Result<SuiteReport> {
    let outcomes: Vec<Vec<String>> = items.par_iter().map(check).collect::<Result<_>>()?;
    let failed = outcomes.iter().filter(|o| !o.is_empty()).count();
    let failures = outcomes.into_iter().flatten().take(MAX_REPORTED).collect();
    Ok(SuiteReport {
        suite: suite.name(),
        cases: items.len(),
        failed,
        failures,
        passed: failed == 0,
    })
}

fn describe(h: &Hypergraph) -> String {
    let edges: Vec<String> = h.edges().iter().map(|e| h.format_set(*e)).collect();
    format!("|V|={} H=[{}]", h.num_vertices(), edges.join(" "))
}

fn fail_if(cond: bool, out: &mut Vec<String>, msg: impl FnOnce() -> String) {
    if cond {
        out.push(msg());
    }
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let seed = cfg.seed_for(suite);
    match suite {
        Suite::Duality => duality(seed, cfg.count(200)),
        Suite::EtaDual => eta_dual(seed, cfg.count(200)),
        Suite::LerayBounds => leray_bounds(seed, cfg.count(100)),
        Suite::TightPaths => tight_paths(cfg.max_n, cfg.max_k),
        Suite::TightCycles => tight_cycles(cfg.max_n, cfg.max_k),
        Suite::Examples => examples(),
        Suite::EdgeRemoval => edge_removal(seed, cfg.count(200)),
        Suite::Genpos => genpos(),
        Suite::Rainbow => rainbow(seed, cfg.count(50)),
        Suite::DualHypergraph => dual_hypergraph(seed, cfg.count(100)),
        Suite::StarCluster => star_cluster(seed, cfg.count(50)),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    Suite::ALL.iter().map(|s| run_suite(*s, cfg)).collect()
}

fn betti(k: &SimplicialComplex) -> Result<BettiVector> {
    betti_vector_with(k, &Limits::unlimited())
}

/// `L(K) = max(0, max_W |W| − η(D(K[W])) − 1)`, with `W` ranging over the
/// sets whose dual is not void.
fn leray_via_duals(k: &SimplicialComplex) -> Result<usize> {
    let mut best = 0;
    for w in k.ground().subsets() {
        let dual = k.induced_subcomplex(w)?.alexander_dual();
        if let ExtNat::Finite(eta) = eta_of(&betti(&dual)?) {
            best = best.max((w.len() as i64 - eta as i64 - 1).max(0) as usize);
        }
    }
    Ok(best)
}

fn duality(seed: u64, count: usize) -> Result<SuiteReport> {
    let spec = CorpusSpec::new(8, 4).edges(0, 12);
    let hs = corpus(seed, count, &spec);
    run_cases(Suite::Duality, &hs, |h| {
        let mut out = Vec::new();
        let n = h.num_vertices();
        let nc = noncover_complex(h);
        let ind = independence_complex(h);
        let (bn, bi) = (betti(&nc)?, betti(&ind)?);
        fail_if(!bn.same_homology(&bi.dual_shift(n)), &mut out, || {
            format!(
                "{}: NC {:?} vs shifted I {:?}",
                describe(h),
                bn.nonzero(),
                bi.nonzero()
            )
        });
        fail_if(ind.alexander_dual() != nc, &mut out, || {
            format!("{}: D(I) != NC", describe(h))
        });
        fail_if(nc.is_void() != (h.num_edges() == 0), &mut out, || {
            format!("{}: NC void flag wrong", describe(h))
        });
        if n <= 7 {
            let (direct, via) = (
                leray_number_with(&nc, &Limits::unlimited())?,
                leray_via_duals(&nc)?,
            );
            fail_if(direct != via, &mut out, || {
                format!("{}: L(NC)={direct} but duals give {via}", describe(h))
            });
        }
        Ok(out)
    })
}

fn eta_dual(seed: u64, count: usize) -> Result<SuiteReport> {
    let spec = CorpusSpec::new(9, 4).no_isolated();
    let hs = corpus(seed, count, &spec);
    run_cases(Suite::EtaDual, &hs, |h| {
        let r = check_eta_dual(h, &Limits::unlimited())?;
        let mut out = Vec::new();
        fail_if(!r.passed, &mut out, || {
            format!(
                "{}: g={} threshold={:?} NC {:?} eta(I)={} (vanishing {}, eta {}, duality {})",
                describe(h),
                r.g,
                r.threshold,
                r.noncover_betti.nonzero(),
                r.eta_independence,
                r.vanishing_holds,
                r.eta_bound_holds,
                r.duality_holds
            )
        });
        Ok(out)
    })
}

fn leray_bounds(seed: u64, count: usize) -> Result<SuiteReport> {
    let half = count / 2;
    let mut hs = corpus(seed, half, &CorpusSpec::new(9, 2).no_isolated());
    hs.extend(corpus(
        seed ^ 1,
        count - half,
        &CorpusSpec::new(9, 3).no_isolated(),
    ));
    run_cases(Suite::LerayBounds, &hs, |h| {
        let r = check_leray_bounds(h, &Limits::unlimited())?;
        let mut out = Vec::new();
        for b in r.bounds.iter().filter(|b| b.applicable && !b.holds) {
            out.push(format!(
                "{}: L(NC)={} exceeds {} bound {}",
                describe(h),
                r.leray,
                b.parameter,
                b.bound
            ));
        }
        Ok(out)
    })
}

#[derive(Clone, Copy, Debug)]
struct SweepPoint {
    n: usize,
    k: usize,
    j: usize,
}

fn tight_paths(max_n: usize, max_k: usize) -> Result<SuiteReport> {
    let points: Vec<SweepPoint> = (1..=max_k)
        .flat_map(|k| (1..=max_n).flat_map(move |n| (1..=k).map(move |j| SweepPoint { n, k, j })))
        .collect();
    run_cases(Suite::TightPaths, &points, |&SweepPoint { n, k, j }| {
        let mut out = Vec::new();
        let h = tight_path_modified(n, k, j)?;
        let got = betti(&noncover_complex(&h))?;
        let want = predict_nc_path(n, k, j)?;
        fail_if(got != want.to_betti(), &mut out, || {
            format!(
                "NC(P^({j})_{{{n},{k}}}): got {:?}, predicted {want}",
                got.nonzero()
            )
        });
        if j == k {
            let got = betti(&independence_complex(&h))?;
            let want = predict_betti_independence_path(n, k)?;
            fail_if(!got.same_homology(&want), &mut out, || {
                format!(
                    "I(P_{{{n},{k}}}): got {:?}, predicted {:?}",
                    got.nonzero(),
                    want.nonzero()
                )
            });
        }
        // Annihilating the last edge and dropping non-minimal edges leaves
        // the modified path with complementary window.
        if n > k + 1 {
            let e = h.vertex_set().difference(VertexSet::full(n - j));
            let reduced = h.annihilate_edge(e)?.minimalize();
            let expected = tight_path_modified(n - j, k, k - j + 1)?;
            fail_if(reduced != expected, &mut out, || {
                format!(
                    "P^({j})_{{{n},{k}}} annihilated is not P^({})_{{{},{k}}}",
                    k - j + 1,
                    n - j
                )
            });
        }
        Ok(out)
    })
}

fn tight_cycles(max_n: usize, max_k: usize) -> Result<SuiteReport> {
    let points: Vec<SweepPoint> = (1..=max_k)
        .flat_map(|k| {
            (k + 1..=max_n).flat_map(move |n| (0..=n).map(move |j| SweepPoint { n, k, j }))
        })
        .collect();
    run_cases(Suite::TightCycles, &points, |&SweepPoint { n, k, j }| {
        let mut out = Vec::new();
        let h = tight_cycle_modified(n, k, j)?;
        let got = betti(&noncover_complex(&h))?;
        let want = predict_nc_cycle(n, k, j)?;
        fail_if(got != want.to_betti(), &mut out, || {
            format!(
                "NC(C^({j})_{{{n},{k}}}): got {:?}, predicted {want}",
                got.nonzero()
            )
        });
        if j == 0 {
            let got = betti(&independence_complex(&h))?;
            let want = predict_betti_independence_cycle(n, k)?;
            fail_if(!got.same_homology(&want), &mut out, || {
                format!(
                    "I(C_{{{n},{k}}}): got {:?}, predicted {:?}",
                    got.nonzero(),
                    want.nonzero()
                )
            });
        }
        Ok(out)
    })
}

/// The named examples. Each closure is one case.
fn examples() -> Result<SuiteReport> {
    type Case = fn() -> Outcome;
    let cases: Vec<(&str, Case)> = vec![
        ("H_r", || {
            let mut out = Vec::new();
            for r in 3..=4 {
                let h = example_hr(r)?;
                let gt = gamma_tilde(&h).value;
                fail_if(gt != ExtNat::Finite(2 * r - 1), &mut out, || {
                    format!("gamma_tilde(H_{r}) = {gt}, expected {}", 2 * r - 1)
                });
                let nc = noncover_complex(&h);
                let sub = nc.induced_subcomplex(example_hr_core(r))?;
                let b = betti(&sub)?;
                fail_if(b.get(2 * r as isize - 4) == 0, &mut out, || {
                    format!("NC(H_{r})[W] has no homology in dimension {}", 2 * r - 4)
                });
                if r == 4 {
                    let bound = h.num_vertices() - gt.ceil_half().finite().unwrap() - 1;
                    let l = leray_number_with(&nc, &Limits::unlimited())?;
                    fail_if(l <= bound, &mut out, || {
                        format!("L(NC(H_4)) = {l} is within {bound}")
                    });
                }
            }
            Ok(out)
        }),
        ("F_3", || {
            let mut out = Vec::new();
            let f = example_fr(3)?;
            let si = gamma_si(&f).value;
            fail_if(si < ExtNat::Finite(6), &mut out, || {
                format!("gamma_si(F_3) = {si}")
            });
            let col = example_fr_column(3);
            fail_if(!is_strongly_independent(&f, col), &mut out, || {
                "first column of F_3 is not strongly independent".into()
            });
            let nc = noncover_complex(&f);
            let b = betti(&nc.induced_subcomplex(example_fr_core(3))?)?;
            fail_if(b.get(2) == 0, &mut out, || {
                "NC(F_3)[W] has no 2-homology".into()
            });
            let l = leray_number_with(&nc, &Limits::unlimited())?;
            let bound = f.num_vertices() as i64 - si.finite().unwrap() as i64 - 1;
            fail_if(l as i64 <= bound, &mut out, || {
                format!("L(NC(F_3)) = {l} is within {bound}")
            });
            Ok(out)
        }),
        ("complete uniform", || {
            let mut out = Vec::new();
            for (n, k) in [(4, 2), (5, 3), (6, 3), (6, 4)] {
                let h = complete_uniform(n, k)?;
                let (si, t) = (gamma_si(&h).value, t_param(&h).value);
                fail_if(
                    si != ExtNat::Finite(k - 1) || t != ExtNat::Finite(1),
                    &mut out,
                    || format!("complete({n},{k}): gamma_si={si} t={t}"),
                );
            }
            Ok(out)
        }),
        ("A_{2,3}", || {
            let mut out = Vec::new();
            let h = example_ank(2, 3)?;
            let (si, t) = (gamma_si(&h).value, t_param(&h).value);
            fail_if(
                t < ExtNat::Finite(2) || si > ExtNat::Finite(3),
                &mut out,
                || format!("A_{{2,3}}: gamma_si={si} t={t}"),
            );
            Ok(out)
        }),
        ("boundary cases", || {
            let mut out = Vec::new();
            for n in 1..=4 {
                let none = Hypergraph::new(n, [])?;
                fail_if(!noncover_complex(&none).is_void(), &mut out, || {
                    format!("NC(∅) on {n} not void")
                });
                fail_if(
                    !independence_complex(&none).is_full_simplex(),
                    &mut out,
                    || format!("I(∅) on {n} not a simplex"),
                );
                let whole = Hypergraph::new(n, [VertexSet::full(n)])?;
                fail_if(
                    !noncover_complex(&whole).is_empty_complex(),
                    &mut out,
                    || format!("NC({{V}}) on {n} not {{∅}}"),
                );
                fail_if(
                    independence_complex(&whole)
                        != SimplicialComplex::boundary_of_simplex(whole.labels().to_vec()),
                    &mut out,
                    || format!("I({{V}}) on {n} not a sphere"),
                );
                let loops = tight_path(n, 1)?;
                fail_if(
                    noncover_complex(&loops)
                        != SimplicialComplex::boundary_of_simplex(loops.labels().to_vec()),
                    &mut out,
                    || format!("NC(all loops) on {n} not a sphere"),
                );
                fail_if(
                    !independence_complex(&loops).is_empty_complex(),
                    &mut out,
                    || format!("I(all loops) on {n} not {{∅}}"),
                );
            }
            Ok(out)
        }),
        ("classic paths and cycles", || {
            let mut out = Vec::new();
            let checks = [
                (independence_complex(&tight_path(5, 2)?), 1, 1),
                (independence_complex(&tight_cycle(6, 2)?), 1, 2),
                (independence_complex(&tight_path(7, 3)?), 3, 1),
                (independence_complex(&tight_cycle(4, 3)?), 1, 3),
            ];
            for (i, (k, dim, value)) in checks.iter().enumerate() {
                let b = betti(k)?;
                fail_if(
                    b != BettiVector::from_entries(&[(*dim, *value)]),
                    &mut out,
                    || format!("classic case {i}: {:?}", b.nonzero()),
                );
            }
            Ok(out)
        }),
    ];
    run_cases(Suite::Examples, &cases, |(name, case)| {
        Ok(case()?
            .into_iter()
            .map(|m| format!("{name}: {m}"))
            .collect())
    })
}

fn edge_removal(seed: u64, count: usize) -> Result<SuiteReport> {
    let spec = CorpusSpec::new(8, 4).no_isolated().edges(1, 10);
    let hs = corpus(seed, count, &spec);
    run_cases(Suite::EdgeRemoval, &hs, |h| {
        let mut out = Vec::new();
        let n = h.num_vertices();
        let (gt, gs, ge) = (gamma_tilde(h).value, gamma_si(h).value, gamma_e(h).value);
        let g = g_value(h);
        let ground = h.vertex_set();
        let nc = noncover_complex(h);
        let minus = |x: ExtNat, d: usize| x.finite().map(|v| v as i64 - d as i64);
        let at_least = |x: ExtNat, rhs: Option<i64>| match (x.finite(), rhs) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a as i64 >= b,
        };
        let mut si_witness = false;
        let mut g_witness = false;
        for &e in h.edges() {
            let s = e.len();
            let ann = h.annihilate_edge(e)?;
            fail_if(ann.has_isolated_vertex(), &mut out, || {
                format!(
                    "{}: H¬{} has an isolated vertex",
                    describe(h),
                    h.format_set(e)
                )
            });
            let del = h.delete_edge(e)?;
            fail_if(g_value(&del) < g, &mut out, || {
                format!("{}: g(H-{}) < g(H)", describe(h), h.format_set(e))
            });
            let ga = g_value(&ann);
            if at_least(ga, minus(g, s - 1)) {
                g_witness = true;
            }
            if s >= 2 {
                let at = gamma_tilde(&ann).value;
                fail_if(!at_least(at, minus(gt, 2 * s - 2)), &mut out, || {
                    format!(
                        "{}: gamma_tilde drops too far annihilating {}",
                        describe(h),
                        h.format_set(e)
                    )
                });
                let ae = gamma_e(&ann).value;
                fail_if(!at_least(ae, minus(ge, s - 1)), &mut out, || {
                    format!(
                        "{}: gamma_E drops too far annihilating {}",
                        describe(h),
                        h.format_set(e)
                    )
                });
                if at_least(gamma_si(&ann).value, minus(gs, s - 1)) {
                    si_witness = true;
                }
            }
            // NC(H) = NC(H − e) ∪ Δ_{V∖e}
            let rest = ground.difference(e);
            let simplex = SimplicialComplex::simplex_on(h.labels().to_vec(), rest);
            fail_if(
                noncover_complex(&del).union(&simplex)? != nc,
                &mut out,
                || {
                    format!(
                        "{}: union identity fails at {}",
                        describe(h),
                        h.format_set(e)
                    )
                },
            );
            let minimal = h.edges().iter().all(|f| *f == e || !f.is_subset(e));
            if minimal {
                let lhs = noncover_complex(&del).intersection(&simplex)?;
                let rhs = noncover_complex(&ann).embed(h.labels().to_vec(), rest)?;
                fail_if(lhs != rhs, &mut out, || {
                    format!(
                        "{}: intersection identity fails at {}",
                        describe(h),
                        h.format_set(e)
                    )
                });
            }
        }
        if !h.has_all_loops() && n > 0 {
            fail_if(!si_witness, &mut out, || {
                format!("{}: no annihilation keeps gamma_si", describe(h))
            });
            fail_if(!g_witness, &mut out, || {
                format!("{}: no edge keeps g", describe(h))
            });
        }
        fail_if(noncover_complex(&h.minimalize()) != nc, &mut out, || {
            format!("{}: minimalizing changed NC", describe(h))
        });
        Ok(out)
    })
}

fn genpos() -> Result<SuiteReport> {
    let cases = [(3, 1), (4, 1), (4, 2), (5, 2), (4, 3), (5, 4)];
    run_cases(Suite::Genpos, &cases, |&(n, d)| {
        let mut out = Vec::new();
        let f = genpos_example(n, d)?;
        let big_n = f.num_vertices() - n;
        let dims = |b: &BettiVector| b.nonzero().into_iter().map(|(d, _)| d).collect::<Vec<_>>();
        let bi = betti(&independence_complex(&f))?;
        fail_if(dims(&bi) != [n as isize - 1], &mut out, || {
            format!("genpos({n},{d}): I nonzero at {:?}", dims(&bi))
        });
        let bn = betti(&noncover_complex(&f))?;
        fail_if(dims(&bn) != [big_n as isize - 2], &mut out, || {
            format!("genpos({n},{d}): NC nonzero at {:?}", dims(&bn))
        });
        let b = f.vertex_set().difference(VertexSet::full(n));
        let need = gamma(&f, b).value;
        fail_if(need != ExtNat::Finite(n), &mut out, || {
            format!("genpos({n},{d}): gamma(B) = {need}")
        });
        fail_if(gamma_si(&f).value < ExtNat::Finite(n), &mut out, || {
            format!("genpos({n},{d}): gamma_si below {n}")
        });
        Ok(out)
    })
}

fn rainbow(seed: u64, count: usize) -> Result<SuiteReport> {
    let hs: Vec<(usize, Hypergraph)> = (0..count)
        .map(|i| {
            let size = 2 + i % 3;
            let spec = CorpusSpec::new(8, size).vertices(2, 8).no_isolated();
            let mut r = rng(seed.wrapping_add(i as u64));
            (i, crate::corpus::random_hypergraph(&mut r, &spec))
        })
        .collect();
    run_cases(Suite::Rainbow, &hs, |(i, h)| {
        let mut out = Vec::new();
        let n = h.num_vertices();
        let size = h.max_edge_size();
        let variants = [
            ("gamma_tilde", size <= 3, gamma_tilde(h).value.ceil_half()),
            ("gamma_si", size <= 2, gamma_si(h).value),
            ("gamma_E", true, gamma_e(h).value),
            ("t", true, t_param(h).value),
        ];
        let mut r = rng(seed ^ 0x5eed ^ ((*i as u64) << 8));
        for (name, applies, term) in variants {
            let term = term.finite().expect("no isolated vertex");
            if !applies || term >= n {
                continue;
            }
            let m = n - term;
            let pad = r.gen_range(0..50);
            let sys = sample_cover_system(&mut r, h, m, pad);
            match find_rainbow_cover(&sys) {
                None => out.push(format!(
                    "{}: no rainbow cover among {m} covers ({name})",
                    describe(h)
                )),
                Some(rc) => {
                    let ok = is_cover(h, rc.vertex_set())
                        && rc.vertex_set().len() == rc.vertices.len()
                        && rc.indices.windows(2).all(|w| w[0] < w[1])
                        && rc
                            .indices
                            .iter()
                            .zip(&rc.vertices)
                            .all(|(i, v)| sys.covers()[i - 1].contains(*v));
                    fail_if(!ok, &mut out, || {
                        format!("{}: invalid rainbow cover ({name})", describe(h))
                    });
                }
            }
        }
        Ok(out)
    })
}

fn dual_hypergraph(seed: u64, count: usize) -> Result<SuiteReport> {
    let spec = CorpusSpec::new(7, 4).no_isolated().edges(1, 10);
    let hs = corpus(seed, count, &spec);
    run_cases(Suite::DualHypergraph, &hs, |h| {
        let mut out = Vec::new();
        let d = h.dual_hypergraph()?;
        let (a, b) = (betti(&noncover_complex(h))?, betti(&noncover_complex(&d))?);
        fail_if(a != b, &mut out, || {
            format!(
                "{}: NC {:?} but NC(dual) {:?}",
                describe(h),
                a.nonzero(),
                b.nonzero()
            )
        });
        fail_if(
            d.num_vertices() != h.num_edges() || d.num_edges() > h.num_vertices(),
            &mut out,
            || format!("{}: dual has the wrong shape", describe(h)),
        );
        Ok(out)
    })
}

fn star_cluster(seed: u64, count: usize) -> Result<SuiteReport> {
    let spec = CorpusSpec::new(8, 4).vertices(2, 8).no_isolated();
    let mut r = rng(seed);
    let mut hs = Vec::with_capacity(count);
    while hs.len() < count {
        let h = crate::corpus::random_hypergraph(&mut r, &spec);
        if gamma_si(&h).value >= ExtNat::Finite(1) {
            hs.push(h);
        }
    }
    run_cases(Suite::StarCluster, &hs, |h| {
        let mut out = Vec::new();
        let best = gamma_si(h);
        let s = best.value.finite().expect("no isolated vertex");
        let a = best.set;
        let ind = independence_complex(h);
        let sc = ind.star_cluster(a)?;
        for sub in a.subsets().filter(|x| !x.is_empty()) {
            let mut meet: Option<SimplicialComplex> = None;
            for v in sub.iter() {
                let st = ind.star(VertexSet::singleton(v))?;
                meet = Some(match meet {
                    None => st,
                    Some(m) => m.intersection(&st)?,
                });
            }
            fail_if(meet.unwrap() != ind.star(sub)?, &mut out, || {
                format!(
                    "{}: stars of {} do not meet in its star",
                    describe(h),
                    h.format_set(sub)
                )
            });
        }
        let k = s as isize - 2;
        fail_if(ind.skeleton(k)? != sc.skeleton(k)?, &mut out, || {
            format!("{}: skeletons of dimension {k} differ", describe(h))
        });
        for sigma in ind.faces(usize::MAX)? {
            fail_if(
                dominates(h, sigma, a) == sc.contains(sigma),
                &mut out,
                || {
                    format!(
                        "{}: {} breaks the domination test",
                        describe(h),
                        h.format_set(sigma)
                    )
                },
            );
        }
        fail_if(!betti(&sc)?.is_acyclic(), &mut out, || {
            format!("{}: star cluster is not acyclic", describe(h))
        });
        Ok(out)
    })
}
