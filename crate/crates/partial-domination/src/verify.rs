//! Whole-graph verification sweep: every bound, at every threshold step
//! `m/n` and every midpoint `(2m-1)/(2n)`, plus the spectrum structure and
//! the monotonicity properties of the solver itself.
//!
//! The sweep precomputes one coverage profile per relevant graph (the graph,
//! its complement, each single-edge and single-vertex deletion, each
//! component) and reads all `pd` values out of those, which keeps the
//! all-alpha sweep linear in the number of probes. The per-alpha public
//! checks in [`crate::bounds`] recompute `pd` with the solver directly; both
//! paths feed the same report builders, so their outputs are identical.

use crate::alpha::{half_steps, unit_steps, Alpha};
use crate::bounds::{
    component_additivity_report, degree_sandwich_report, edge_removal_report, gamma_quotient_report,
    half_order_report, inverse_gamma_report, nordhaus_gaddum_reports, single_vertex_report,
    split_sum_report, vertex_removal_report, BoundReport, Exact, Relation, TheoremId,
};
use crate::graph::{Component, Graph};
use crate::solver::pd_alpha;
use crate::spectrum::{coverage_profile, verify_spectrum_structure, ClauseStatus, CoverageProfile, SpectrumClause};
use rayon::prelude::*;

/// Result of one graph's sweep.
#[derive(Debug, Clone)]
pub struct VerifySummary {
    pub label: String,
    pub reports: Vec<BoundReport>,
}

impl VerifySummary {
    pub fn violations(&self) -> Vec<&BoundReport> {
        self.reports.iter().filter(|r| r.is_violation()).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.reports.iter().all(|r| !r.is_violation())
    }
}

/// Runs every check against one graph. Deterministic report order.
pub fn verify_graph(g: &Graph, label: &str) -> VerifySummary {
    let n = g.vertex_count();
    let main = coverage_profile(g);
    let gamma = main.gamma();
    let complement_graph = g.complement();
    let complement = coverage_profile(&complement_graph);
    let comps: Vec<(Component, CoverageProfile)> = g
        .components()
        .into_iter()
        .map(|c| {
            let p = coverage_profile(&c.graph);
            (c, p)
        })
        .collect();
    let edges = g.edges();
    let edge_profiles: Vec<CoverageProfile> = edges
        .par_iter()
        .map(|&(u, v)| coverage_profile(&g.delete_edge(u, v).expect("edge exists")))
        .collect();
    let vertex_profiles: Vec<CoverageProfile> = if n >= 2 {
        (0..n)
            .into_par_iter()
            .map(|v| coverage_profile(&g.delete_vertex(v).expect("n >= 2").0))
            .collect()
    } else {
        Vec::new()
    };

    // Probes in ascending order: each midpoint just below its step.
    let probes: Vec<Alpha> = half_steps(n).zip(unit_steps(n)).flat_map(|(h, u)| [h, u]).collect();

    let mut reports = Vec::new();
    for &alpha in &probes {
        let pd = main.pd_for_alpha(alpha);
        reports.push(single_vertex_report(g, alpha, pd));
        reports.push(degree_sandwich_report(g, alpha, pd));
        reports.push(gamma_quotient_report(g, alpha, gamma, pd));
        reports.push(half_order_report(g, alpha, pd));
        reports.push(inverse_gamma_report(g, alpha, gamma, pd));
        let mut pd_of = |a: Alpha| main.pd_for_alpha(a);
        reports.extend(split_sum_report(g, &[alpha], gamma, &mut pd_of));
        for k in 2..=4u64 {
            let parts = vec![alpha.divided_by(k); k as usize];
            reports.extend(split_sum_report(g, &parts, gamma, &mut pd_of));
        }
        let per_edge: Vec<((usize, usize), usize)> = edges
            .iter()
            .zip(&edge_profiles)
            .map(|(&e, p)| (e, p.pd_for_alpha(alpha)))
            .collect();
        reports.push(edge_removal_report(g, alpha, pd, &per_edge));
        let per_vertex: Vec<(usize, usize, usize)> = vertex_profiles
            .iter()
            .enumerate()
            .map(|(v, p)| (v, g.degree(v).unwrap(), p.pd_for_alpha(alpha)))
            .collect();
        reports.push(vertex_removal_report(g, alpha, pd, &per_vertex));
    }

    reports.push(component_additivity_report(g, &main, &comps));
    reports.extend(nordhaus_gaddum_reports(g, &main, &complement, &complement_graph));
    reports.push(monotonicity_report(g));
    reports.push(threshold_quotient_report(g));
    reports.extend(spectrum_reports(g));

    for r in &mut reports {
        r.graph = label.to_string();
    }
    VerifySummary { label: label.to_string(), reports }
}

/// `pd` sampled with the solver along `alpha = 1/n, …, n/n` must be
/// non-decreasing.
pub fn monotonicity_report(g: &Graph) -> BoundReport {
    let n = g.vertex_count();
    let values: Vec<usize> = unit_steps(n).map(|a| pd_alpha(g, a).value).collect();
    let holds = values.windows(2).all(|w| w[0] <= w[1]);
    BoundReport {
        theorem: TheoremId::Monotonicity,
        graph: crate::bounds::default_label(g),
        alphas: vec![],
        hypothesis_met: true,
        holds: Some(holds),
        lhs: Exact::int(*values.first().expect("n >= 1")),
        relation: Relation::LessEq,
        rhs: Exact::int(*values.last().expect("n >= 1")),
        note: Some(format!("{n} steps from 1/{n} to {n}/{n}")),
    }
}

/// Every midpoint `(2m-1)/(2n)` shares its ceiling with `m/n`, so the solver
/// must return the same value at both; counts disagreements.
pub fn threshold_quotient_report(g: &Graph) -> BoundReport {
    let n = g.vertex_count();
    let mismatches = unit_steps(n)
        .zip(half_steps(n))
        .filter(|&(step, mid)| pd_alpha(g, step).value != pd_alpha(g, mid).value)
        .count();
    BoundReport {
        theorem: TheoremId::ThresholdQuotient,
        graph: crate::bounds::default_label(g),
        alphas: vec![],
        hypothesis_met: true,
        holds: Some(mismatches == 0),
        lhs: Exact::int(mismatches),
        relation: Relation::Equal,
        rhs: Exact::int(0),
        note: Some(format!("{n} midpoints probed")),
    }
}

/// Flattens the spectrum structure clauses into report records.
pub fn spectrum_reports(g: &Graph) -> Vec<BoundReport> {
    let structure = verify_spectrum_structure(g);
    structure
        .clauses
        .into_iter()
        .map(|clause| {
            let theorem = match clause.clause {
                SpectrumClause::CriticalRange => TheoremId::SpectrumCriticalRange,
                SpectrumClause::SizeBound => TheoremId::SpectrumSizeBound,
                SpectrumClause::RightClosedBoundaries => TheoremId::SpectrumBoundaries,
                SpectrumClause::Endpoints => TheoremId::SpectrumEndpoints,
            };
            let (hypothesis_met, holds) = match clause.status {
                ClauseStatus::Pass => (true, Some(true)),
                ClauseStatus::Fail => (true, Some(false)),
                ClauseStatus::Skipped => (false, None),
            };
            BoundReport {
                theorem,
                graph: crate::bounds::default_label(g),
                alphas: vec![],
                hypothesis_met,
                holds,
                lhs: Exact::int(usize::from(holds == Some(true))),
                relation: Relation::Equal,
                rhs: Exact::int(1),
                note: Some(clause.detail),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{check_degree_bounds, check_gamma_bounds, check_removal, check_sum_bounds};
    use crate::generate::parse_graph_spec;

    fn graph(spec: &str) -> Graph {
        parse_graph_spec(spec).unwrap()
    }

    #[test]
    fn sweep_is_clean_on_named_families() {
        for spec in [
            "path:7",
            "cycle:8",
            "complete:5",
            "complete_bipartite:3,2",
            "star:5",
            "clique_plus_isolates:3,2",
            "edgeless:4",
            "gnp:9,2/5,11",
        ] {
            let g = graph(spec);
            let summary = verify_graph(&g, spec);
            assert!(
                summary.is_clean(),
                "{spec}: {:?}",
                summary.violations()
            );
        }
    }

    #[test]
    fn sweep_matches_the_reference_checks() {
        let g = graph("gnp:8,1/2,5");
        let summary = verify_graph(&g, "g");
        for alpha in unit_steps(8).chain(half_steps(8)) {
            let mut reference = Vec::new();
            reference.extend(check_degree_bounds(&g, alpha));
            reference.extend(check_gamma_bounds(&g, alpha));
            reference.extend(check_sum_bounds(&g, &[alpha]));
            reference.extend(check_removal(&g, alpha));
            for want in reference {
                let got = summary
                    .reports
                    .iter()
                    .find(|r| r.theorem == want.theorem && r.alphas == want.alphas)
                    .unwrap_or_else(|| panic!("missing {:?} at {alpha}", want.theorem));
                assert_eq!(got.hypothesis_met, want.hypothesis_met);
                assert_eq!(got.holds, want.holds);
                assert_eq!(got.lhs, want.lhs);
                assert_eq!(got.rhs, want.rhs);
            }
        }
    }

    #[test]
    fn report_order_is_deterministic() {
        let g = graph("gnp:7,1/2,9");
        let a = verify_graph(&g, "g");
        let b = verify_graph(&g, "g");
        assert_eq!(a.reports, b.reports);
    }
}
