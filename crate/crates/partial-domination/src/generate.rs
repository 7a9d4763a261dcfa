//! Named graph families and the `family:params` generator grammar.

use crate::alpha::parse_unit_ratio;
use crate::graph::Graph;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParams { family: &'static str, reason: String },
    #[error("malformed generator spec {spec:?}: {reason}")]
    MalformedSpec { spec: String, reason: String },
}

fn invalid(family: &'static str, reason: impl Into<String>) -> GenerateError {
    GenerateError::InvalidParams { family, reason: reason.into() }
}

/// A graph family with its parameters.
///
/// Canonical labelings:
/// - `Path`: vertices `0..n`, edges `i-(i+1)`.
/// - `Cycle` (`n >= 3`): edges `i-((i+1) mod n)`.
/// - `Complete`: all pairs.
/// - `CompleteBipartite` (`m >= n >= 1`): part A is `0..m`, part B is `m..m+n`.
/// - `Star`: center `0`, leaves `1..=leaves`.
/// - `CliquePlusIsolates`: clique on `0..clique`, isolates after it.
/// - `Edgeless`: no edges.
/// - `Gnp`: each pair `u < v` (scanned in lexicographic order) becomes an edge
///   with exact probability `p.0/p.1`, drawn from a ChaCha8 stream seeded with
///   `seed`; fixed parameters always reproduce the same graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { m: usize, n: usize },
    Star { leaves: usize },
    CliquePlusIsolates { clique: usize, isolates: usize },
    Edgeless { n: usize },
    Gnp { n: usize, p: (u64, u64), seed: u64 },
}

pub fn generate(family: &Family) -> Result<Graph, GenerateError> {
    match *family {
        Family::Path { n } => {
            if n == 0 {
                return Err(invalid("path", "n must be >= 1"));
            }
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(invalid("cycle", "n must be >= 3 for a simple cycle"));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
        Family::Complete { n } => {
            if n == 0 {
                return Err(invalid("complete", "n must be >= 1"));
            }
            Ok(Graph::from_edges(n, &all_pairs(0, n)).unwrap())
        }
        Family::CompleteBipartite { m, n } => {
            if n == 0 || m < n {
                return Err(invalid("complete_bipartite", "requires m >= n >= 1"));
            }
            let mut edges = Vec::with_capacity(m * n);
            for a in 0..m {
                for b in m..m + n {
                    edges.push((a, b));
                }
            }
            Ok(Graph::from_edges(m + n, &edges).unwrap())
        }
        Family::Star { leaves } => {
            let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
            Ok(Graph::from_edges(leaves + 1, &edges).unwrap())
        }
        Family::CliquePlusIsolates { clique, isolates } => {
            if clique == 0 {
                return Err(invalid("clique_plus_isolates", "clique size must be >= 1"));
            }
            Ok(Graph::from_edges(clique + isolates, &all_pairs(0, clique)).unwrap())
        }
        Family::Edgeless { n } => {
            if n == 0 {
                return Err(invalid("edgeless", "n must be >= 1"));
            }
            Ok(Graph::from_edges(n, &[]).unwrap())
        }
        Family::Gnp { n, p: (p, q), seed } => {
            if n == 0 {
                return Err(invalid("gnp", "n must be >= 1"));
            }
            if q == 0 || p > q {
                return Err(invalid("gnp", format!("probability {p}/{q} is not in [0, 1]")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    // Exact Bernoulli(p/q): a uniform draw from 0..q lands
                    // below p with probability exactly p/q.
                    if rng.gen_range(0..q) < p {
                        edges.push((u, v));
                    }
                }
            }
            Ok(Graph::from_edges(n, &edges).unwrap())
        }
    }
}

fn all_pairs(start: usize, end: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in start..end {
        for v in u + 1..end {
            edges.push((u, v));
        }
    }
    edges
}

impl FromStr for Family {
    type Err = GenerateError;

    /// Parses one `family:param,param` atom, e.g. `cycle:9` or `gnp:12,1/2,7`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = |reason: &str| GenerateError::MalformedSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (name, params) = match s.split_once(':') {
            Some((name, params)) => (name.trim(), params.trim()),
            None => (s, ""),
        };
        let parts: Vec<&str> = if params.is_empty() {
            Vec::new()
        } else {
            params.split(',').map(str::trim).collect()
        };
        let int = |idx: usize| -> Result<usize, GenerateError> {
            parts
                .get(idx)
                .ok_or_else(|| bad("missing parameter"))?
                .parse()
                .map_err(|_| bad("parameter is not a non-negative integer"))
        };
        match name {
            "path" => Ok(Family::Path { n: int(0)? }),
            "cycle" => Ok(Family::Cycle { n: int(0)? }),
            "complete" | "clique" => Ok(Family::Complete { n: int(0)? }),
            "complete_bipartite" | "biclique" => Ok(Family::CompleteBipartite {
                m: int(0)?,
                n: int(1)?,
            }),
            "star" => Ok(Family::Star { leaves: int(0)? }),
            "clique_plus_isolates" => Ok(Family::CliquePlusIsolates {
                clique: int(0)?,
                isolates: int(1)?,
            }),
            "edgeless" => Ok(Family::Edgeless { n: int(0)? }),
            "gnp" => {
                let n = int(0)?;
                let p_str = parts.get(1).ok_or_else(|| bad("missing edge probability"))?;
                let p = parse_unit_ratio(p_str)
                    .map_err(|e| bad(&format!("bad probability: {e}")))?;
                let seed = match parts.get(2) {
                    Some(t) => t.parse().map_err(|_| bad("seed is not an integer"))?,
                    None => 0,
                };
                Ok(Family::Gnp { n, p, seed })
            }
            other => Err(GenerateError::UnknownFamily(other.to_string())),
        }
    }
}

/// Parses a full generator spec: one or more atoms joined by `+`, producing
/// the disjoint union in the order written (`complete:3+edgeless:2` is a
/// triangle with two extra isolated vertices).
pub fn parse_graph_spec(spec: &str) -> Result<Graph, GenerateError> {
    let mut graph: Option<Graph> = None;
    for atom in spec.split('+') {
        if atom.trim().is_empty() {
            return Err(GenerateError::MalformedSpec {
                spec: spec.to_string(),
                reason: "empty atom in union".to_string(),
            });
        }
        let part = generate(&atom.parse::<Family>()?)?;
        graph = Some(match graph {
            None => part,
            Some(g) => g.disjoint_union(&part),
        });
    }
    graph.ok_or_else(|| GenerateError::MalformedSpec {
        spec: spec.to_string(),
        reason: "empty spec".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_edges_are_consecutive() {
        let c6 = generate(&Family::Cycle { n: 6 }).unwrap();
        assert_eq!(c6.edges(), vec![(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!(generate(&Family::Cycle { n: 2 }).is_err());
    }

    #[test]
    fn clique_plus_isolates_shape() {
        let g = generate(&Family::CliquePlusIsolates { clique: 3, isolates: 2 }).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.max_degree(), 2);
        assert_eq!(g.degree(3).unwrap(), 0);
        assert_eq!(g.degree(4).unwrap(), 0);
    }

    #[test]
    fn bipartite_orientation() {
        let g = generate(&Family::CompleteBipartite { m: 3, n: 2 }).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.degree(0).unwrap(), 2); // part A vertices see part B
        assert_eq!(g.degree(3).unwrap(), 3);
        assert!(generate(&Family::CompleteBipartite { m: 2, n: 3 }).is_err());
    }

    #[test]
    fn gnp_is_seed_deterministic() {
        let f = Family::Gnp { n: 10, p: (1, 2), seed: 42 };
        let a = generate(&f).unwrap();
        let b = generate(&f).unwrap();
        assert_eq!(a, b);
        let c = generate(&Family::Gnp { n: 10, p: (1, 2), seed: 43 }).unwrap();
        assert_ne!(a, c);
        // Degenerate probabilities give the extreme graphs.
        let empty = generate(&Family::Gnp { n: 6, p: (0, 1), seed: 1 }).unwrap();
        assert_eq!(empty.edge_count(), 0);
        let full = generate(&Family::Gnp { n: 6, p: (1, 1), seed: 1 }).unwrap();
        assert_eq!(full.edge_count(), 15);
    }

    #[test]
    fn spec_grammar() {
        let g = parse_graph_spec("complete:3+edgeless:2").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(
            parse_graph_spec("cycle:6").unwrap(),
            generate(&Family::Cycle { n: 6 }).unwrap()
        );
        assert!(parse_graph_spec("").is_err());
        assert!(parse_graph_spec("frob:3").is_err());
        assert!(parse_graph_spec("cycle:x").is_err());
        assert!(parse_graph_spec("gnp:10,2/1").is_err());
        assert!(parse_graph_spec("cycle:6+").is_err());
    }
}
