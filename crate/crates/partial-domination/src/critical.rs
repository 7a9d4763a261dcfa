//! Vertex criticality: a graph is critical at a given alpha when deleting
//! any vertex strictly lowers `pd`. For critical graphs each drop is exactly
//! one, and every vertex sits in some minimum set for which it is its own
//! sole private neighbor; this module detects criticality and hunts those
//! certificates by exhaustive enumeration of minimum sets.

use crate::alpha::Alpha;
use crate::graph::{closed_neighborhood, Graph};
use crate::set::VertexSet;
use crate::solver::{cover_size, pd_alpha};
use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CriticalityError {
    #[error("criticality needs at least two vertices")]
    TooSmall,
}

/// A minimum set containing the vertex, together with the vertex's private
/// neighborhood under it (which must be exactly the vertex itself).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub set: VertexSet,
    pub private: VertexSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexCriticality {
    pub vertex: usize,
    pub degree: usize,
    /// `pd` of the graph with this vertex deleted.
    pub pd_without: usize,
    pub drops: bool,
    pub certificate: Option<Certificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalityReport {
    pub alpha: Alpha,
    pub pd: usize,
    pub target: usize,
    pub is_critical: bool,
    /// When critical: every deletion dropped `pd` by exactly one and every
    /// vertex produced a private-neighbor certificate.
    pub certified: bool,
    pub vertices: Vec<VertexCriticality>,
}

/// `pn[v, S] = N[v] \ N[S \ {v}]`, straight from the definition.
pub fn private_neighborhood(g: &Graph, v: usize, s: &VertexSet) -> VertexSet {
    let mut rest = s.clone();
    rest.remove(v);
    let shadow = closed_neighborhood(g, &rest).expect("set belongs to this graph");
    let mut private = VertexSet::empty(g.vertex_count());
    for w in g.closed_row(v).iter() {
        if !shadow.contains(w) {
            private.insert(w);
        }
    }
    private
}

pub fn check_vertex_critical(g: &Graph, alpha: Alpha) -> Result<CriticalityReport, CriticalityError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(CriticalityError::TooSmall);
    }
    let base = pd_alpha(g, alpha);
    let pd = base.value;

    let mut vertices: Vec<VertexCriticality> = (0..n)
        .map(|v| {
            let (without, _) = g.delete_vertex(v).expect("n >= 2");
            let pd_without = pd_alpha(&without, alpha).value;
            VertexCriticality {
                vertex: v,
                degree: g.degree(v).unwrap(),
                pd_without,
                drops: pd_without < pd,
                certificate: None,
            }
        })
        .collect();

    let is_critical = vertices.iter().all(|v| v.drops);
    let mut certified = is_critical;
    if is_critical {
        for entry in &mut vertices {
            if entry.pd_without != pd - 1 {
                certified = false;
            }
            entry.certificate = find_certificate(g, entry.vertex, pd, base.target);
            if entry.certificate.is_none() {
                certified = false;
            }
        }
    }

    Ok(CriticalityReport {
        alpha,
        pd,
        target: base.target,
        is_critical,
        certified,
        vertices,
    })
}

/// Enumerates every set of size `pd` containing `v` (others in lexicographic
/// order) and returns the first one that meets the coverage target with
/// `pn[v, S] = {v}`.
fn find_certificate(g: &Graph, v: usize, pd: usize, target: usize) -> Option<Certificate> {
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&u| u != v).collect();
    for combo in others.into_iter().combinations(pd - 1) {
        let mut set = VertexSet::empty(n);
        set.insert(v);
        for u in combo {
            set.insert(u);
        }
        if cover_size(g, &set) < target {
            continue;
        }
        let private = private_neighborhood(g, v, &set);
        if private.len() == 1 && private.contains(v) {
            return Some(Certificate { set, private });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::parse_graph_spec;

    fn graph(spec: &str) -> Graph {
        parse_graph_spec(spec).unwrap()
    }

    #[test]
    fn cycle_four_is_critical_at_one() {
        let report = check_vertex_critical(&graph("cycle:4"), Alpha::one()).unwrap();
        assert_eq!(report.pd, 2);
        assert!(report.is_critical);
        assert!(report.certified);
        for entry in &report.vertices {
            assert_eq!(entry.pd_without, 1);
            let cert = entry.certificate.as_ref().expect("certificate");
            assert_eq!(cert.private.to_vec(), vec![entry.vertex]);
            assert!(cert.set.contains(entry.vertex));
            assert_eq!(cert.set.len(), 2);
        }
        // Vertex 0's first certificate is the antipodal pair.
        assert_eq!(report.vertices[0].certificate.as_ref().unwrap().set.to_vec(), vec![0, 2]);
    }

    #[test]
    fn complete_graphs_are_not_critical() {
        for n in 2..=6 {
            let report =
                check_vertex_critical(&graph(&format!("complete:{n}")), Alpha::one()).unwrap();
            assert!(!report.is_critical, "K_{n}");
            assert!(report.vertices.iter().all(|v| v.pd_without == 1));
        }
    }

    #[test]
    fn path_four_is_not_critical() {
        let report = check_vertex_critical(&graph("path:4"), Alpha::one()).unwrap();
        assert!(!report.is_critical);
        // Deleting an end helps, deleting an inner vertex does not.
        assert!(report.vertices[0].drops);
        assert!(!report.vertices[1].drops);
    }

    #[test]
    fn single_vertex_rejected() {
        assert_eq!(
            check_vertex_critical(&graph("edgeless:1"), Alpha::one()),
            Err(CriticalityError::TooSmall)
        );
    }

    #[test]
    fn private_neighborhood_from_definition() {
        let c4 = graph("cycle:4");
        let s = VertexSet::from_indices(4, [0, 2]).unwrap();
        assert_eq!(private_neighborhood(&c4, 0, &s).to_vec(), vec![0]);
        let s = VertexSet::from_indices(4, [0, 1]).unwrap();
        // N[0] = {3,0,1}; N[1] = {0,1,2} shadows all but 3.
        assert_eq!(private_neighborhood(&c4, 0, &s).to_vec(), vec![3]);
    }
}
