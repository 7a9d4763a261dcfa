//! Brute-force reference for the exact solver.
//!
//! Enumerates subsets by size ascending and, within a size, in lexicographic
//! order of the sorted index sequence; the first subset meeting the coverage
//! target is returned. Kept deliberately free of the solver's bitset unions,
//! ordering heuristics, and pruning so the two paths can check each other.

use crate::graph::Graph;
use crate::set::VertexSet;
use crate::solver::PdResult;
use itertools::Itertools;
use thiserror::Error;

/// Orders above this take too long to enumerate; callers can raise the cap
/// explicitly when they know what they are doing.
pub const DEFAULT_ORACLE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("brute force refused: {n} vertices exceeds the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("coverage target {target} out of range 1..={n}")]
    TargetOutOfRange { target: usize, n: usize },
}

pub fn brute_force_pd(g: &Graph, m: usize) -> Result<PdResult, OracleError> {
    brute_force_pd_capped(g, m, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_pd_capped(g: &Graph, m: usize, cap: usize) -> Result<PdResult, OracleError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(OracleError::TooLarge { n, cap });
    }
    if m == 0 || m > n {
        return Err(OracleError::TargetOutOfRange { target: m, n });
    }
    for size in 1..=n {
        for combo in (0..n).combinations(size) {
            let covered = covered_count(g, &combo);
            if covered >= m {
                let witness = VertexSet::from_indices(n, combo).expect("combo is in range");
                return Ok(PdResult { value: size, witness, covered, target: m });
            }
        }
    }
    unreachable!("the full vertex set covers all n >= m vertices")
}

fn covered_count(g: &Graph, subset: &[usize]) -> usize {
    let mut covered = vec![false; g.vertex_count()];
    for &v in subset {
        covered[v] = true;
        for w in g.neighbors(v).iter() {
            covered[w] = true;
        }
    }
    covered.iter().filter(|&&c| c).count()
}
