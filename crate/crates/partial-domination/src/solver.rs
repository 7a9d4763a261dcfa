//! Exact minimum-size coverage search.
//!
//! `pd_by_target(g, m)` finds the smallest set of vertices whose closed
//! neighborhoods cover at least `m` vertices, by iterative deepening on the
//! set size. For each candidate size the decision search branches over
//! vertices in order of descending degree, pruning with the counting bound
//! `covered + slots * (max_degree + 1) < m`, which can never discard a
//! feasible completion. Once the optimal size is known, a second,
//! index-ascending search returns the lexicographically smallest witness,
//! so results are identical no matter how the decision phase was scheduled.

use crate::alpha::Alpha;
use crate::graph::Graph;
use crate::set::VertexSet;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("coverage target {target} out of range 1..={n}")]
pub struct TargetError {
    pub target: usize,
    pub n: usize,
}

/// Outcome of an exact solve: `witness` has exactly `value` vertices, its
/// closed neighborhoods cover `covered >= target` vertices, and no smaller
/// set reaches the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PdResult {
    pub value: usize,
    pub witness: VertexSet,
    pub covered: usize,
    pub target: usize,
}

/// Greedy coverage result; same shape as [`PdResult`] but `value` is only an
/// upper bound on the optimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyResult {
    pub value: usize,
    pub witness: VertexSet,
    pub covered: usize,
    pub target: usize,
}

/// Past this order the exact search may become slow; we warn and keep going.
pub const EXACT_SIZE_GUARDRAIL: usize = 64;

/// `pd_alpha(g, alpha)`: minimum vertices covering at least `ceil(n * alpha)`.
pub fn pd_alpha(g: &Graph, alpha: Alpha) -> PdResult {
    let m = alpha.coverage_target(g.vertex_count());
    pd_by_target(g, m).expect("ceil(n*alpha) is always in 1..=n")
}

/// The domination number `gamma(g)`, i.e. full coverage.
pub fn domination_number(g: &Graph) -> PdResult {
    pd_by_target(g, g.vertex_count()).expect("n is a valid target")
}

/// Minimum vertices whose closed neighborhoods cover at least `m` vertices.
pub fn pd_by_target(g: &Graph, m: usize) -> Result<PdResult, TargetError> {
    let n = g.vertex_count();
    if m == 0 || m > n {
        return Err(TargetError { target: m, n });
    }
    if n > EXACT_SIZE_GUARDRAIL {
        log::warn!("exact search on {n} vertices may be slow (guardrail is {EXACT_SIZE_GUARDRAIL})");
    }
    let cap = g.max_degree() + 1;
    let order = degree_order(g);
    // Counting lower bound: k vertices cover at most k * (max_degree + 1).
    let mut k = m.div_ceil(cap);
    while !exists_cover(g, &order, m, k) {
        k += 1;
        debug_assert!(k <= n);
    }
    let witness = lex_first_cover(g, m, k).expect("a cover of the optimal size exists");
    let covered = cover_size(g, &witness);
    debug_assert!(covered >= m);
    Ok(PdResult { value: k, witness, covered, target: m })
}

/// Greedy baseline: repeatedly take the vertex adding the most uncovered
/// vertices (ties broken toward the smallest index) until the target is met.
pub fn greedy_pd(g: &Graph, m: usize) -> Result<GreedyResult, TargetError> {
    let n = g.vertex_count();
    if m == 0 || m > n {
        return Err(TargetError { target: m, n });
    }
    let mut covered = VertexSet::empty(n);
    let mut covered_len = 0;
    let mut witness = VertexSet::empty(n);
    while covered_len < m {
        let (v, gain) = best_gain(g, &covered).expect("coverage below n leaves a positive gain");
        witness.insert(v);
        covered.union_with(g.closed_row(v));
        covered_len += gain;
    }
    Ok(GreedyResult { value: witness.len(), witness, covered: covered_len, target: m })
}

/// Highest-gain vertex against `covered`, smallest index on ties.
fn best_gain(g: &Graph, covered: &VertexSet) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.vertex_count() {
        let gain = covered.missing_from(g.closed_row(v));
        if gain > 0 && best.map_or(true, |(_, b)| gain > b) {
            best = Some((v, gain));
        }
    }
    best
}

pub(crate) fn cover_size(g: &Graph, s: &VertexSet) -> usize {
    let mut covered = VertexSet::empty(g.vertex_count());
    for v in s.iter() {
        covered.union_with(g.closed_row(v));
    }
    covered.len()
}

/// Vertices sorted by degree descending, index ascending on ties. A static
/// order keeps the search deterministic regardless of scheduling.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.vertex_count()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v).unwrap()), v));
    order
}

/// Decision: is there a set of at most `k` vertices covering `m`?
///
/// Since `k` grows one at a time from a valid lower bound, the first `k` that
/// succeeds is the optimum. Larger graphs fan the top-level branch out across
/// threads; only the boolean travels back, so parallelism cannot change the
/// answer.
fn exists_cover(g: &Graph, order: &[usize], m: usize, k: usize) -> bool {
    if k == 0 {
        return false; // m >= 1
    }
    let cap = g.max_degree() + 1;
    if g.vertex_count() > 16 && k >= 2 {
        (0..order.len()).into_par_iter().any(|i| {
            let v = order[i];
            let covered = g.closed_row(v).clone();
            let covered_len = covered.len();
            dfs_exists(g, order, m, k - 1, i + 1, &covered, covered_len, cap)
        })
    } else {
        let covered = VertexSet::empty(g.vertex_count());
        dfs_exists(g, order, m, k, 0, &covered, 0, cap)
    }
}

fn dfs_exists(
    g: &Graph,
    order: &[usize],
    m: usize,
    slots: usize,
    from: usize,
    covered: &VertexSet,
    covered_len: usize,
    cap: usize,
) -> bool {
    if covered_len >= m {
        return true;
    }
    if slots == 0 || covered_len + slots * cap < m {
        return false;
    }
    for i in from..order.len() {
        if order.len() - i < slots {
            break;
        }
        let v = order[i];
        let gain = covered.missing_from(g.closed_row(v));
        // A minimum cover never contains a vertex whose closed neighborhood
        // is already covered by earlier picks: dropping it keeps coverage.
        if gain == 0 {
            continue;
        }
        if covered_len + gain + (slots - 1) * cap < m {
            continue;
        }
        let mut next = covered.clone();
        next.union_with(g.closed_row(v));
        if dfs_exists(g, order, m, slots - 1, i + 1, &next, covered_len + gain, cap) {
            return true;
        }
    }
    false
}

/// The lexicographically smallest set of exactly `k` vertices (compared as a
/// sorted index sequence) covering at least `m`, or `None` if there is none.
/// Candidates are scanned in ascending index order and only the counting
/// bound prunes, so the first complete leaf is the canonical answer.
pub(crate) fn lex_first_cover(g: &Graph, m: usize, k: usize) -> Option<VertexSet> {
    let n = g.vertex_count();
    if k > n {
        return None;
    }
    let cap = g.max_degree() + 1;
    let mut chosen = Vec::with_capacity(k);
    let covered = VertexSet::empty(n);
    if dfs_lex(g, m, k, 0, &covered, 0, cap, &mut chosen) {
        Some(VertexSet::from_indices(n, chosen).expect("chosen vertices are in range"))
    } else {
        None
    }
}

fn dfs_lex(
    g: &Graph,
    m: usize,
    k: usize,
    from: usize,
    covered: &VertexSet,
    covered_len: usize,
    cap: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == k {
        return covered_len >= m;
    }
    let slots = k - chosen.len();
    if covered_len + slots * cap < m {
        return false;
    }
    let n = g.vertex_count();
    for v in from..n {
        if n - v < slots {
            break;
        }
        let gain = covered.missing_from(g.closed_row(v));
        if covered_len + gain + (slots - 1) * cap < m {
            continue;
        }
        let mut next = covered.clone();
        next.union_with(g.closed_row(v));
        chosen.push(v);
        if dfs_lex(g, m, k, v + 1, &next, covered_len + gain, cap, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// `max_{|S| = k} |N[S]|`, exactly. Shares the counting bound with the
/// decision search; a greedy run seeds the incumbent.
pub(crate) fn max_coverage_value(g: &Graph, k: usize) -> usize {
    let n = g.vertex_count();
    if k == 0 {
        return 0;
    }
    let cap = g.max_degree() + 1;
    let order = degree_order(g);
    let mut best = greedy_coverage(g, k);
    if best < n.min(k * cap) {
        let covered = VertexSet::empty(n);
        dfs_max(g, &order, k, 0, &covered, 0, cap, &mut best);
    }
    best
}

fn greedy_coverage(g: &Graph, k: usize) -> usize {
    let mut covered = VertexSet::empty(g.vertex_count());
    let mut covered_len = 0;
    for _ in 0..k {
        match best_gain(g, &covered) {
            Some((v, gain)) => {
                covered.union_with(g.closed_row(v));
                covered_len += gain;
            }
            None => break,
        }
    }
    covered_len
}

fn dfs_max(
    g: &Graph,
    order: &[usize],
    slots: usize,
    from: usize,
    covered: &VertexSet,
    covered_len: usize,
    cap: usize,
    best: &mut usize,
) {
    if covered_len > *best {
        *best = covered_len;
    }
    if slots == 0 || covered_len + slots * cap <= *best {
        return;
    }
    for i in from..order.len() {
        let v = order[i];
        let gain = covered.missing_from(g.closed_row(v));
        if gain == 0 {
            continue; // padding never raises coverage
        }
        if covered_len + gain + (slots - 1) * cap <= *best {
            continue;
        }
        let mut next = covered.clone();
        next.union_with(g.closed_row(v));
        dfs_max(g, order, slots - 1, i + 1, &next, covered_len + gain, cap, best);
    }
}
