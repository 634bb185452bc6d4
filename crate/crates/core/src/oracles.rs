//! Closed-form homotopy and Betti predictions for tight paths and cycles, and
//! checkers for the domination bounds on noncover complexes.

use std::fmt;

use serde::Serialize;

use crate::complex::{independence_complex, noncover_complex};
use crate::domination::{g_from, gamma_e, gamma_si, gamma_tilde, t_param};
use crate::error::{Error, Result};
use crate::ext::ExtNat;
use crate::homology::{betti_vector_with, eta_of, leray_number_with, BettiVector, Limits};
use crate::hypergraph::Hypergraph;

/// A predicted homotopy type, kept symbolic for readable test failures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum HomotopyDescriptor {
    Void,
    EmptyComplex,
    Contractible,
    /// A wedge of `count >= 1` spheres of dimension `dim`.
    WedgeOfSpheres {
        dim: isize,
        count: usize,
    },
}

impl HomotopyDescriptor {
    fn sphere(dim: isize) -> Self {
        if dim == -1 {
            HomotopyDescriptor::EmptyComplex
        } else {
            HomotopyDescriptor::WedgeOfSpheres { dim, count: 1 }
        }
    }

    pub fn to_betti(self) -> BettiVector {
        match self {
            HomotopyDescriptor::Void => BettiVector::void(),
            HomotopyDescriptor::EmptyComplex => BettiVector::from_entries(&[(-1, 1)]),
            HomotopyDescriptor::Contractible => BettiVector::acyclic(),
            HomotopyDescriptor::WedgeOfSpheres { dim, count } => {
                BettiVector::from_entries(&[(dim, count)])
            }
        }
    }
}

impl fmt::Display for HomotopyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomotopyDescriptor::Void => write!(f, "void"),
            HomotopyDescriptor::EmptyComplex => write!(f, "{{∅}}"),
            HomotopyDescriptor::Contractible => write!(f, "contractible"),
            HomotopyDescriptor::WedgeOfSpheres { dim, count: 1 } => write!(f, "S^{dim}"),
            HomotopyDescriptor::WedgeOfSpheres { dim, count } => {
                write!(f, "wedge of {count} S^{dim}")
            }
        }
    }
}

/// Picks the single firing case. Two firing cases would mean the case
/// conditions overlap, which the residues mod `k + 1` rule out; this is
/// checked rather than assumed.
fn single_case<T: Copy + fmt::Debug>(cases: &[Option<T>], what: &str) -> Option<T> {
    let fired: Vec<T> = cases.iter().flatten().copied().collect();
    assert!(fired.len() <= 1, "{what}: overlapping cases {fired:?}");
    fired.first().copied()
}

/// `q >= 0` with `n = q·m + r`, if any.
fn quotient(n: usize, m: usize, r: usize) -> Option<usize> {
    (n >= r && (n - r).is_multiple_of(m)).then(|| (n - r) / m)
}

/// Homotopy type of `NC(P^{(j)}_{n,k})`.
pub fn predict_nc_path(n: usize, k: usize, j: usize) -> Result<HomotopyDescriptor> {
    if n < 1 || j < 1 || j > k {
        return Err(Error::BadParameter(format!(
            "need n >= 1 and 1 <= j <= k, got n={n} k={k} j={j}"
        )));
    }
    if n < j {
        return Ok(HomotopyDescriptor::Void);
    }
    let m = k + 1;
    // n = (q+1)(k+1) gives S^{2q}; n = q(k+1) + j gives S^{2q-1}.
    let even = quotient(n, m, m).map(|q| HomotopyDescriptor::sphere(2 * q as isize));
    let odd = quotient(n, m, j).map(|q| HomotopyDescriptor::sphere(2 * q as isize - 1));
    Ok(single_case(&[even, odd], "tight path").unwrap_or(HomotopyDescriptor::Contractible))
}

/// Homotopy type of `NC(C^{(j)}_{n,k})`.
pub fn predict_nc_cycle(n: usize, k: usize, j: usize) -> Result<HomotopyDescriptor> {
    if k < 1 || n <= k || j > n {
        return Err(Error::BadParameter(format!(
            "need n > k >= 1 and 0 <= j <= n, got n={n} k={k} j={j}"
        )));
    }
    if j == n {
        return Ok(HomotopyDescriptor::Void);
    }
    if j >= k {
        return Ok(HomotopyDescriptor::Contractible);
    }
    let m = k + 1;
    let mut cases = vec![
        quotient(n, m, m).map(|q| HomotopyDescriptor::WedgeOfSpheres {
            dim: 2 * q as isize,
            count: k - j,
        }),
    ];
    for t in j + 1..=k {
        cases.push(quotient(n, m, m + t).map(|q| HomotopyDescriptor::sphere(2 * q as isize + 1)));
    }
    Ok(single_case(&cases, "tight cycle").unwrap_or(HomotopyDescriptor::Contractible))
}

/// Reduced Betti numbers of `I(P_{n,k})`.
pub fn predict_betti_independence_path(n: usize, k: usize) -> Result<BettiVector> {
    if n < 1 || k < 1 {
        return Err(Error::BadParameter(format!(
            "need n, k >= 1, got n={n} k={k}"
        )));
    }
    let m = k + 1;
    let dim = |q: usize| (q * (k - 1) + k) as isize - 2;
    let a = quotient(n, m, k).map(|q| (dim(q), 1));
    let b = quotient(n, m, m).map(|q| (dim(q), 1));
    let entries: Vec<(isize, usize)> = single_case(&[a, b], "path independence")
        .into_iter()
        .collect();
    Ok(BettiVector::from_entries(&entries))
}

/// Reduced Betti numbers of `I(C_{n,k})`, `n > k`.
pub fn predict_betti_independence_cycle(n: usize, k: usize) -> Result<BettiVector> {
    if k < 1 || n <= k {
        return Err(Error::BadParameter(format!(
            "need n > k >= 1, got n={n} k={k}"
        )));
    }
    let m = k + 1;
    let mut cases = vec![quotient(n, m, m).map(|q| ((q * (k - 1) + k) as isize - 2, k))];
    for t in 1..=k {
        cases.push(quotient(n, m, m + t).map(|q| ((q * (k - 1) + k + t) as isize - 3, 1)));
    }
    let entries: Vec<(isize, usize)> = single_case(&cases, "cycle independence")
        .into_iter()
        .collect();
    Ok(BettiVector::from_entries(&entries))
}

/// Vanishing of `H̃_i(NC(H))` above `|V| − g(H) − 1`, and the dual statement
/// `η(I(H)) >= g(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EtaDualReport {
    pub vertices: usize,
    pub gamma_tilde: ExtNat,
    pub gamma_si: ExtNat,
    #[serde(rename = "gamma_E")]
    pub gamma_e: ExtNat,
    pub g: ExtNat,
    /// `None` when `g` is infinite: every dimension must vanish.
    pub threshold: Option<i64>,
    pub noncover_betti: BettiVector,
    pub independence_betti: BettiVector,
    pub eta_independence: ExtNat,
    pub vanishing_holds: bool,
    pub eta_bound_holds: bool,
    pub duality_holds: bool,
    pub passed: bool,
}

pub fn check_eta_dual(h: &Hypergraph, limits: &Limits) -> Result<EtaDualReport> {
    limits.check_vertices(h.num_vertices())?;
    let n = h.num_vertices();
    let gt = gamma_tilde(h).value;
    let gs = gamma_si(h).value;
    let ge = gamma_e(h).value;
    let g = g_from(gt, gs, ge);
    let threshold = g.threshold_below(n);
    let nc = betti_vector_with(&noncover_complex(h), limits)?;
    let ind = betti_vector_with(&independence_complex(h), limits)?;
    let eta = eta_of(&ind);
    let vanishing_holds = nc
        .nonzero()
        .iter()
        .all(|(d, _)| threshold.is_some_and(|t| (*d as i64) < t));
    let eta_bound_holds = eta >= g;
    let duality_holds = nc.same_homology(&ind.dual_shift(n));
    Ok(EtaDualReport {
        vertices: n,
        gamma_tilde: gt,
        gamma_si: gs,
        gamma_e: ge,
        g,
        threshold,
        noncover_betti: nc,
        independence_betti: ind,
        eta_independence: eta,
        vanishing_holds,
        eta_bound_holds,
        duality_holds,
        passed: vanishing_holds && eta_bound_holds && duality_holds,
    })
}

/// One upper bound `L(NC(H)) <= |V| − term − 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub parameter: &'static str,
    pub value: ExtNat,
    /// Largest edge size the bound is proved for; `None` means unrestricted.
    pub max_edge_size: Option<usize>,
    pub applicable: bool,
    pub bound: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LerayReport {
    pub vertices: usize,
    pub max_edge_size: usize,
    pub leray: usize,
    pub bounds: Vec<BoundCheck>,
    /// Every applicable bound holds.
    pub passed: bool,
}

impl LerayReport {
    pub fn bound(&self, parameter: &str) -> Option<&BoundCheck> {
        self.bounds.iter().find(|b| b.parameter == parameter)
    }
}

/// Leray number of `NC(H)` against the `⌈γ̃/2⌉` (edges of size at most 3),
/// `γ_si` (at most 2), `γ_E` and `t` bounds. Inapplicable bounds are still
/// evaluated and reported.
pub fn check_leray_bounds(h: &Hypergraph, limits: &Limits) -> Result<LerayReport> {
    if let Some(v) = h.isolated_vertices().first() {
        return Err(Error::IsolatedVertex(h.label(v).to_string()));
    }
    limits.check_vertices(h.num_vertices())?;
    let n = h.num_vertices();
    let leray = leray_number_with(&noncover_complex(h), limits)?;
    let size = h.max_edge_size();
    let (gt, gs, ge, t) = (
        gamma_tilde(h).value,
        gamma_si(h).value,
        gamma_e(h).value,
        t_param(h).value,
    );
    let terms = [
        ("gamma_tilde", gt, gt.ceil_half(), Some(3)),
        ("gamma_si", gs, gs, Some(2)),
        ("gamma_E", ge, ge, None),
        ("t", t, t, None),
    ];
    let bounds: Vec<BoundCheck> = terms
        .into_iter()
        .map(|(parameter, value, term, cap)| {
            let term = term
                .finite()
                .expect("no isolated vertex, so every parameter is finite");
            let bound = n as i64 - term as i64 - 1;
            BoundCheck {
                parameter,
                value,
                max_edge_size: cap,
                applicable: cap.is_none_or(|c| size <= c),
                bound,
                holds: leray as i64 <= bound,
            }
        })
        .collect();
    let passed = bounds.iter().all(|b| !b.applicable || b.holds);
    Ok(LerayReport {
        vertices: n,
        max_edge_size: size,
        leray,
        bounds,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::*;
    use HomotopyDescriptor::*;

    #[test]
    fn path_examples() {
        assert_eq!(predict_nc_path(3, 3, 3).unwrap(), EmptyComplex);
        assert_eq!(
            predict_nc_path(4, 3, 3).unwrap(),
            WedgeOfSpheres { dim: 0, count: 1 }
        );
        assert_eq!(
            predict_nc_path(8, 3, 3).unwrap(),
            WedgeOfSpheres { dim: 2, count: 1 }
        );
        assert_eq!(predict_nc_path(1, 3, 2).unwrap(), Void);
        assert_eq!(predict_nc_path(3, 3, 2).unwrap(), Contractible);
        assert!(predict_nc_path(3, 2, 3).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(
            predict_nc_cycle(4, 3, 0).unwrap(),
            WedgeOfSpheres { dim: 0, count: 3 }
        );
        assert_eq!(
            predict_nc_cycle(6, 3, 1).unwrap(),
            WedgeOfSpheres { dim: 1, count: 1 }
        );
        assert_eq!(predict_nc_cycle(5, 3, 3).unwrap(), Contractible);
        assert_eq!(predict_nc_cycle(5, 3, 5).unwrap(), Void);
        assert!(predict_nc_cycle(3, 3, 0).is_err());
    }

    #[test]
    fn independence_examples() {
        assert_eq!(
            predict_betti_independence_path(5, 2).unwrap(),
            BettiVector::from_entries(&[(1, 1)])
        );
        assert_eq!(
            predict_betti_independence_path(7, 3).unwrap(),
            BettiVector::from_entries(&[(3, 1)])
        );
        assert_eq!(
            predict_betti_independence_cycle(4, 3).unwrap(),
            BettiVector::from_entries(&[(1, 3)])
        );
        assert_eq!(
            predict_betti_independence_cycle(6, 2).unwrap(),
            BettiVector::from_entries(&[(1, 2)])
        );
    }

    #[test]
    fn descriptor_betti() {
        assert!(Void.to_betti().is_void());
        assert_eq!(EmptyComplex.to_betti().get(-1), 1);
        assert!(Contractible.to_betti().is_acyclic());
        assert_eq!(WedgeOfSpheres { dim: 2, count: 3 }.to_betti().get(2), 3);
        assert_eq!(
            WedgeOfSpheres { dim: 2, count: 3 }.to_string(),
            "wedge of 3 S^2"
        );
    }

    #[test]
    fn predictions_match_computation_small() {
        let limits = Limits::default();
        for k in 1..=3 {
            for n in 1..=8 {
                for j in 1..=k {
                    let h = tight_path_modified(n, k, j).unwrap();
                    let got = betti_vector_with(&noncover_complex(&h), &limits).unwrap();
                    assert_eq!(
                        got,
                        predict_nc_path(n, k, j).unwrap().to_betti(),
                        "P n={n} k={k} j={j}"
                    );
                }
                if n > k {
                    for j in 0..=n {
                        let h = tight_cycle_modified(n, k, j).unwrap();
                        let got = betti_vector_with(&noncover_complex(&h), &limits).unwrap();
                        assert_eq!(
                            got,
                            predict_nc_cycle(n, k, j).unwrap().to_betti(),
                            "C n={n} k={k} j={j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn predictions_are_dual() {
        for k in 1..=4 {
            for n in k + 1..=14 {
                let nc = predict_nc_path(n, k, k).unwrap().to_betti();
                let ind = predict_betti_independence_path(n, k).unwrap();
                assert!(nc.same_homology(&ind.dual_shift(n)), "P n={n} k={k}");
                let nc = predict_nc_cycle(n, k, 0).unwrap().to_betti();
                let ind = predict_betti_independence_cycle(n, k).unwrap();
                assert!(nc.same_homology(&ind.dual_shift(n)), "C n={n} k={k}");
            }
        }
    }

    #[test]
    fn eta_dual_examples() {
        let limits = Limits::default();
        let h4 = example_hr(4).unwrap();
        let r = check_eta_dual(&h4, &limits).unwrap();
        assert!(r.passed);
        assert_eq!(r.gamma_tilde, ExtNat::Finite(7));
        assert!(r.g >= ExtNat::Finite(4));

        let loops = tight_cycle(4, 1).unwrap();
        let r = check_eta_dual(&loops, &limits).unwrap();
        assert!(r.passed);
        assert_eq!(r.threshold, Some(3));
        assert_eq!(r.noncover_betti.nonzero(), vec![(2, 1)]);

        let iso = Hypergraph::from_edge_lists(3, &[&[0, 1]]).unwrap();
        let r = check_eta_dual(&iso, &limits).unwrap();
        assert!(r.passed);
        assert_eq!(r.threshold, None);
    }

    #[test]
    fn leray_examples() {
        let limits = Limits::leray();
        let h4 = example_hr(4).unwrap();
        let r = check_leray_bounds(&h4, &limits).unwrap();
        let gt = r.bound("gamma_tilde").unwrap();
        assert!(!gt.applicable);
        assert_eq!(gt.bound, 4);
        assert!(r.leray > 4 && !gt.holds);
        assert!(r.passed);

        let f3 = example_fr(3).unwrap();
        let r = check_leray_bounds(&f3, &limits).unwrap();
        let si = r.bound("gamma_si").unwrap();
        assert!(!si.applicable && !si.holds);
        assert!(r.passed);

        let c5 = tight_cycle(5, 2).unwrap();
        let r = check_leray_bounds(&c5, &limits).unwrap();
        assert!(r.bounds.iter().all(|b| b.applicable && b.holds));

        let iso = Hypergraph::from_edge_lists(3, &[&[0, 1]]).unwrap();
        assert!(matches!(
            check_leray_bounds(&iso, &limits),
            Err(Error::IsolatedVertex(_))
        ));
    }
}
