//! Named hypergraph families.
//!
//! Labeling conventions: tight paths use `"1".."n"` in path order, tight
//! cycles use the residues `"0".."n-1"`. Vertex indices always follow label
//! order, so index `i` of a path is label `i+1`.

use itertools::Itertools;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameter(msg.into())
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(bad(format!(
            "family needs {n} vertices, more than the supported {MAX_VERTICES}"
        )));
    }
    Ok(())
}

fn window(start: usize, len: usize) -> VertexSet {
    (start..start + len).collect()
}

fn path_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

fn cycle_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

/// `P_{n,k}`: all `k` consecutive vertices of a path on `n` vertices.
/// No edges when `n < k`.
pub fn tight_path(n: usize, k: usize) -> Result<Hypergraph> {
    if k == 0 {
        return Err(bad("tight_path needs k >= 1"));
    }
    check_size(n)?;
    let edges = (0..(n + 1).saturating_sub(k)).map(|i| window(i, k));
    Ok(Hypergraph::collapsed(path_labels(n), edges))
}

/// `P^{(j)}_{n,k}`: the tight path with its last `k`-window replaced by the
/// last `j` vertices.
pub fn tight_path_modified(n: usize, k: usize, j: usize) -> Result<Hypergraph> {
    if k == 0 || j == 0 || j > k {
        return Err(bad(format!(
            "tight_path_modified needs 1 <= j <= k, got j={j}, k={k}"
        )));
    }
    check_size(n)?;
    let mut edges: Vec<VertexSet> = (0..(n + 1).saturating_sub(k))
        .map(|i| window(i, k))
        .collect();
    if n >= k {
        edges.pop();
    }
    if n >= j {
        edges.push(window(n - j, j));
    }
    Ok(Hypergraph::collapsed(path_labels(n), edges))
}

fn cycle_window(start: usize, k: usize, n: usize) -> VertexSet {
    (0..k).map(|o| (start + o) % n).collect()
}

/// `C_{n,k}` on `Z_n`, for `n > k >= 1`.
pub fn tight_cycle(n: usize, k: usize) -> Result<Hypergraph> {
    tight_cycle_modified(n, k, 0)
}

/// `C^{(j)}_{n,k}`: the tight cycle without the windows starting at
/// `0, .., j-1`.
pub fn tight_cycle_modified(n: usize, k: usize, j: usize) -> Result<Hypergraph> {
    if k == 0 || n <= k {
        return Err(bad(format!(
            "tight cycles need n > k >= 1, got n={n}, k={k}"
        )));
    }
    if j > n {
        return Err(bad(format!("tight_cycle_modified needs j <= n, got j={j}")));
    }
    check_size(n)?;
    let edges = (j..n).map(|s| cycle_window(s, k, n));
    Ok(Hypergraph::collapsed(cycle_labels(n), edges))
}

/// All `k`-subsets of `n` vertices, labels `"1".."n"`.
pub fn complete_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    if k == 0 || k > n {
        return Err(bad(format!(
            "complete_uniform needs 1 <= k <= n, got n={n}, k={k}"
        )));
    }
    check_size(n)?;
    let edges = (0..n).combinations(k).map(|c| c.into_iter().collect());
    Ok(Hypergraph::collapsed(path_labels(n), edges))
}

/// The hypergraph `H_r` on `v1..v_{2r+1}`: one `r`-edge `{v1..vr}`, the
/// graph edges `{v_i, v_{r+1}}` for `2 <= i <= r` and `r+2 <= i <= 2r`, and
/// one `r`-edge `{v_{r+2}..v_{2r+1}}`.
pub fn example_hr(r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(bad(format!("example_hr needs r >= 2, got {r}")));
    }
    let n = 2 * r + 1;
    check_size(n)?;
    // index i-1 holds v_i
    let hub = r;
    let mut edges = vec![window(0, r)];
    edges.extend((1..r).map(|i| VertexSet::from([i, hub])));
    edges.extend((r + 1..2 * r).map(|i| VertexSet::from([hub, i])));
    edges.push(window(r + 1, r));
    let labels = (1..=n).map(|i| format!("v{i}")).collect();
    Ok(Hypergraph::collapsed(labels, edges))
}

/// `{v2..vr, v_{r+2}..v_{2r}}`: every total dominating set of `H_r`
/// contains it, and `NC(H_r)` restricted to it is the boundary of a simplex.
pub fn example_hr_core(r: usize) -> VertexSet {
    (1..r).chain(r + 1..2 * r).collect()
}

/// Index of grid vertex `(i, j)` (both 1-based) in [`example_fr`].
pub fn grid_index(r: usize, i: usize, j: usize) -> usize {
    (i - 1) * r + (j - 1)
}

/// The `r`-uniform hypergraph `F_r` on `[r] x [r]`: every row, and every
/// column except the first.
pub fn example_fr(r: usize) -> Result<Hypergraph> {
    if r < 2 {
        return Err(bad(format!("example_fr needs r >= 2, got {r}")));
    }
    check_size(r * r)?;
    let rows = (1..=r).map(|i| (1..=r).map(|j| grid_index(r, i, j)).collect::<VertexSet>());
    let cols = (2..=r).map(|j| (1..=r).map(|i| grid_index(r, i, j)).collect::<VertexSet>());
    let labels = (1..=r)
        .flat_map(|i| (1..=r).map(move |j| format!("({i},{j})")))
        .collect();
    Ok(Hypergraph::collapsed(labels, rows.chain(cols)))
}

/// First column without `(r,1)`, plus the last row without `(r,1)`. Its
/// induced noncover subcomplex in `F_r` is the boundary of a simplex.
pub fn example_fr_core(r: usize) -> VertexSet {
    (1..r)
        .map(|i| grid_index(r, i, 1))
        .chain((2..=r).map(|j| grid_index(r, r, j)))
        .collect()
}

/// The first column of `F_r`, a strongly independent set.
pub fn example_fr_column(r: usize) -> VertexSet {
    (1..=r).map(|i| grid_index(r, i, 1)).collect()
}

/// `A_{n,k}`: a set `W` of `(k-1)n` vertices (indices `0..(k-1)n`, labels
/// `w1..`), one further vertex `phi(X)` for each `(k-1)`-subset `X` of `W`
/// (in lexicographic order of `X`), the edges `{phi(X)} ∪ X`, and every
/// `k`-subset of `V \ W`.
pub fn example_ank(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 3 || n < 2 {
        return Err(bad(format!(
            "example_ank needs k >= 3 and n >= 2, got n={n}, k={k}"
        )));
    }
    let w = (k - 1) * n;
    let subsets: Vec<Vec<usize>> = (0..w).combinations(k - 1).collect();
    check_size(w + subsets.len())?;
    let mut labels: Vec<String> = (1..=w).map(|i| format!("w{i}")).collect();
    let mut edges = Vec::new();
    for (idx, x) in subsets.iter().enumerate() {
        let phi = w + idx;
        let names: Vec<String> = x.iter().map(|v| (v + 1).to_string()).collect();
        labels.push(format!("phi({})", names.join(",")));
        edges.push(x.iter().copied().collect::<VertexSet>().with(phi));
    }
    edges.extend(
        (w..w + subsets.len())
            .combinations(k)
            .map(|c| c.into_iter().collect::<VertexSet>()),
    );
    Ok(Hypergraph::collapsed(labels, edges))
}

/// The vertex set `W_{n,k}` of [`example_ank`].
pub fn example_ank_core(n: usize, k: usize) -> VertexSet {
    VertexSet::full((k - 1) * n)
}

/// Combinatorial skeleton of the general-position point configuration: `n`
/// points `a1..an` (indices `0..n`), and for every `d`-subset `S` of them a
/// new vertex `x_S` with the edge `S ∪ {x_S}`.
pub fn genpos_example(n: usize, d: usize) -> Result<Hypergraph> {
    if d == 0 || n <= d {
        return Err(bad(format!(
            "genpos_example needs n > d >= 1, got n={n}, d={d}"
        )));
    }
    let subsets: Vec<Vec<usize>> = (0..n).combinations(d).collect();
    check_size(n + subsets.len())?;
    let mut labels: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let mut edges = Vec::new();
    for (idx, s) in subsets.iter().enumerate() {
        let x = n + idx;
        let names: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
        labels.push(format!("x({})", names.join(",")));
        edges.push(s.iter().copied().collect::<VertexSet>().with(x));
    }
    Ok(Hypergraph::collapsed(labels, edges))
}
