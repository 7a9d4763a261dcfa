//! Coverage profiles and the partial-domination spectrum.
//!
//! The profile `g(k) = max_{|S|=k} |N[S]|` for `k = 0..=gamma` determines
//! `pd_alpha` for every `alpha` at once: the coverage requirement only enters
//! through the integer threshold `ceil(n * alpha)`, so `pd` as a function of
//! `alpha` is a right-continuous step function whose jumps sit exactly at the
//! fractions `g(k)/n`. Computing the profile therefore replaces a sweep over
//! an uncountable parameter with at most `gamma` exact max-coverage solves.

use crate::alpha::Alpha;
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::solver::{domination_number, lex_first_cover, max_coverage_value, pd_alpha};
use rayon::prelude::*;
use serde::Serialize;

/// `g(k)` with a witness set per `k`; `g(0) = 0` and `g(gamma) = n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageProfile {
    n: usize,
    values: Vec<usize>,
    witnesses: Vec<VertexSet>,
}

impl CoverageProfile {
    /// `g(k)` for `k = 0..=gamma`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn gamma(&self) -> usize {
        self.values.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// A lexicographically-first set of exactly `k` vertices covering `g(k)`.
    pub fn witness(&self, k: usize) -> &VertexSet {
        &self.witnesses[k]
    }

    /// `pd` for an integer coverage target, by lookup: the least `k` with
    /// `g(k) >= m`. Agrees with the solver for every `m` in `1..=n`.
    pub fn pd_for_target(&self, m: usize) -> usize {
        debug_assert!(m >= 1 && m <= self.n);
        self.values
            .iter()
            .position(|&c| c >= m)
            .expect("g(gamma) = n bounds every target")
    }

    pub fn pd_for_alpha(&self, alpha: Alpha) -> usize {
        self.pd_for_target(alpha.coverage_target(self.n))
    }
}

/// Computes the full coverage profile; the per-`k` solves are independent and
/// run in parallel, with deterministic results.
pub fn coverage_profile(g: &Graph) -> CoverageProfile {
    let n = g.vertex_count();
    let gamma = domination_number(g).value;
    let entries: Vec<(usize, VertexSet)> = (0..=gamma)
        .into_par_iter()
        .map(|k| {
            if k == 0 {
                return (0, VertexSet::empty(n));
            }
            let value = max_coverage_value(g, k);
            let witness = lex_first_cover(g, value, k)
                .expect("the maximum is attained by some set of size k");
            (value, witness)
        })
        .collect();
    let (values, witnesses): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
    debug_assert_eq!(values[0], 0);
    debug_assert_eq!(*values.last().unwrap(), n);
    debug_assert!(gamma == 0 || values[1] == g.max_degree() + 1);
    CoverageProfile { n, values, witnesses }
}

/// The distinct values of `pd_alpha` over `(0, 1]` together with the exact
/// rational thresholds where the value changes.
///
/// `pd = values[0]` on `(0, criticals[0]]`, `values[i+1]` on
/// `(criticals[i], criticals[i+1]]`, and `values[t-1] = gamma` past the last
/// critical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumResult {
    pub gamma: usize,
    /// Strictly increasing; starts at 1, ends at `gamma`.
    pub values: Vec<usize>,
    /// `values.len() - 1` fractions, each `g(a_i)/n` in lowest terms.
    pub criticals: Vec<Alpha>,
    /// Per value `a_i`, a set of size `a_i` attaining coverage `coverages[i]`.
    pub witnesses: Vec<VertexSet>,
    /// `|N[witnesses[i]]| = g(values[i])`; `criticals[i] = coverages[i] / n`.
    pub coverages: Vec<usize>,
    n: usize,
}

impl SpectrumResult {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Evaluates the step function at `alpha`.
    pub fn pd_at(&self, alpha: Alpha) -> usize {
        let m = alpha.coverage_target(self.n);
        for (i, &cov) in self.coverages.iter().enumerate() {
            if cov >= m {
                return self.values[i];
            }
        }
        unreachable!("the last coverage is n >= m")
    }
}

pub fn spectrum(g: &Graph) -> SpectrumResult {
    let profile = coverage_profile(g);
    let n = profile.vertex_count();
    let gamma = profile.gamma();
    let gk = profile.values();
    let values: Vec<usize> = (1..=gamma).filter(|&k| gk[k] > gk[k - 1]).collect();
    let criticals: Vec<Alpha> = values[..values.len() - 1]
        .iter()
        .map(|&k| Alpha::new(gk[k] as u64, n as u64).expect("0 < g(k) <= n"))
        .collect();
    let witnesses: Vec<VertexSet> = values.iter().map(|&k| profile.witness(k).clone()).collect();
    let coverages: Vec<usize> = values.iter().map(|&k| gk[k]).collect();
    SpectrumResult { gamma, values, criticals, witnesses, coverages, n }
}

/// One clause of the structural check on a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumClause {
    /// Every critical is `k/n` with `max_degree + 1 <= k <= n - 1`.
    CriticalRange,
    /// On isolate-free graphs the spectrum has at most `n - max_degree` values.
    SizeBound,
    /// `pd` at each critical keeps the lower value; just above it jumps.
    RightClosedBoundaries,
    /// The spectrum starts at 1, ends at `gamma`, and matches the endpoint
    /// thresholds `(max_degree + 1)/n` and `(n - 1)/n`.
    Endpoints,
}

impl SpectrumClause {
    pub fn as_str(self) -> &'static str {
        match self {
            SpectrumClause::CriticalRange => "critical-range",
            SpectrumClause::SizeBound => "size-bound",
            SpectrumClause::RightClosedBoundaries => "right-closed-boundaries",
            SpectrumClause::Endpoints => "endpoints",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClauseStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClauseReport {
    pub clause: SpectrumClause,
    pub status: ClauseStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumStructureReport {
    pub clauses: Vec<ClauseReport>,
}

impl SpectrumStructureReport {
    pub fn all_pass(&self) -> bool {
        self.clauses.iter().all(|c| c.status != ClauseStatus::Fail)
    }
}

/// Checks the structural claims about a graph's spectrum, probing the solver
/// directly at each boundary with exact rational values.
pub fn verify_spectrum_structure(g: &Graph) -> SpectrumStructureReport {
    let n = g.vertex_count();
    let delta = g.max_degree();
    let sp = spectrum(g);
    let mut clauses = Vec::with_capacity(4);

    // (i) criticals are k/n with delta + 1 <= k <= n - 1.
    {
        let mut bad = Vec::new();
        for (crit, &cov) in sp.criticals.iter().zip(&sp.coverages) {
            let in_range = delta + 1 <= cov && cov <= n - 1;
            let exact = crit.numer() as u128 * n as u128 == crit.denom() as u128 * cov as u128;
            if !in_range || !exact {
                bad.push(format!("{crit} (coverage {cov})"));
            }
        }
        clauses.push(ClauseReport {
            clause: SpectrumClause::CriticalRange,
            status: if bad.is_empty() { ClauseStatus::Pass } else { ClauseStatus::Fail },
            detail: if bad.is_empty() {
                format!("{} criticals within [{}/{n}, {}/{n}]", sp.criticals.len(), delta + 1, n.saturating_sub(1))
            } else {
                format!("out of range: {}", bad.join(", "))
            },
        });
    }

    // (ii) |spectrum| <= n - delta, stated for isolate-free graphs only.
    {
        let (status, detail) = if g.has_isolated_vertex() {
            (ClauseStatus::Skipped, "isolated vertices present".to_string())
        } else if sp.values.len() <= n - delta {
            (ClauseStatus::Pass, format!("{} values <= {}", sp.values.len(), n - delta))
        } else {
            (ClauseStatus::Fail, format!("{} values > {}", sp.values.len(), n - delta))
        };
        clauses.push(ClauseReport { clause: SpectrumClause::SizeBound, status, detail });
    }

    // (iii) right-closed interval boundaries, probed with exact rationals.
    {
        let mut bad = Vec::new();
        for (i, crit) in sp.criticals.iter().enumerate() {
            let at = pd_alpha(g, *crit).value;
            let above = pd_alpha(g, crit.nudged_up(n)).value;
            if at != sp.values[i] || above != sp.values[i + 1] {
                bad.push(format!(
                    "at {crit}: pd={at} (want {}), just above: pd={above} (want {})",
                    sp.values[i],
                    sp.values[i + 1]
                ));
            }
        }
        clauses.push(ClauseReport {
            clause: SpectrumClause::RightClosedBoundaries,
            status: if bad.is_empty() { ClauseStatus::Pass } else { ClauseStatus::Fail },
            detail: if bad.is_empty() {
                format!("{} boundaries probed", sp.criticals.len())
            } else {
                bad.join("; ")
            },
        });
    }

    // (iv) endpoints: first value 1 below (delta+1)/n, last value gamma above
    // (n-1)/n.
    {
        let mut bad = Vec::new();
        if sp.values.first() != Some(&1) {
            bad.push(format!("first value {:?} != 1", sp.values.first()));
        }
        if sp.values.last() != Some(&sp.gamma) {
            bad.push(format!("last value {:?} != gamma {}", sp.values.last(), sp.gamma));
        }
        let low = Alpha::new((delta + 1) as u64, n as u64).expect("delta + 1 <= n");
        if pd_alpha(g, low).value != 1 {
            bad.push(format!("pd at {low} != 1"));
        }
        if pd_alpha(g, Alpha::one()).value != sp.gamma {
            bad.push(format!("pd at 1/1 != gamma {}", sp.gamma));
        }
        if n >= 2 {
            let probe = Alpha::new((n - 1) as u64, n as u64).unwrap().nudged_up(n);
            if pd_alpha(g, probe).value != sp.gamma {
                bad.push(format!("pd just above {}/{} != gamma", n - 1, n));
            }
        }
        clauses.push(ClauseReport {
            clause: SpectrumClause::Endpoints,
            status: if bad.is_empty() { ClauseStatus::Pass } else { ClauseStatus::Fail },
            detail: if bad.is_empty() {
                format!("endpoints consistent with gamma = {}", sp.gamma)
            } else {
                bad.join("; ")
            },
        });
    }

    SpectrumStructureReport { clauses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::parse_graph_spec;

    fn graph(spec: &str) -> Graph {
        parse_graph_spec(spec).unwrap()
    }

    #[test]
    fn profile_examples() {
        assert_eq!(coverage_profile(&graph("cycle:6")).values(), &[0, 3, 6]);
        assert_eq!(coverage_profile(&graph("complete:3+edgeless:2")).values(), &[0, 3, 4, 5]);
        assert_eq!(coverage_profile(&graph("star:4")).values(), &[0, 5]);
    }

    #[test]
    fn profile_witnesses_attain_their_coverage() {
        let g = graph("complete:3+edgeless:2");
        let p = coverage_profile(&g);
        for k in 0..=p.gamma() {
            let w = p.witness(k);
            assert_eq!(w.len(), k);
            assert_eq!(crate::solver::cover_size(&g, w), p.values()[k]);
        }
        assert_eq!(p.witness(2).to_vec(), vec![0, 3]);
    }

    #[test]
    fn spectrum_of_complete_graph_is_flat() {
        let sp = spectrum(&graph("complete:7"));
        assert_eq!(sp.values, vec![1]);
        assert!(sp.criticals.is_empty());
        assert_eq!(sp.gamma, 1);
    }

    #[test]
    fn spectrum_of_cycle_six() {
        let sp = spectrum(&graph("cycle:6"));
        assert_eq!(sp.values, vec![1, 2]);
        assert_eq!(sp.criticals, vec!["1/2".parse().unwrap()]);
    }

    #[test]
    fn spectrum_of_clique_plus_isolates() {
        let sp = spectrum(&graph("clique_plus_isolates:3,2"));
        assert_eq!(sp.values, vec![1, 2, 3]);
        assert_eq!(
            sp.criticals,
            vec!["3/5".parse().unwrap(), "4/5".parse().unwrap()]
        );
        // |spectrum| meets the n - max_degree ceiling exactly.
        assert_eq!(sp.values.len(), 5 - 2);
    }

    #[test]
    fn structure_report_cycle_six() {
        let report = verify_spectrum_structure(&graph("cycle:6"));
        assert!(report.all_pass());
        assert!(report.clauses.iter().all(|c| c.status == ClauseStatus::Pass));
    }

    #[test]
    fn structure_report_path_four() {
        let g = graph("path:4");
        let p = coverage_profile(&g);
        assert_eq!(p.values(), &[0, 3, 4]);
        let sp = spectrum(&g);
        assert_eq!(sp.values, vec![1, 2]);
        assert_eq!(sp.criticals, vec!["3/4".parse().unwrap()]);
        assert!(verify_spectrum_structure(&g).all_pass());
    }

    #[test]
    fn structure_report_skips_size_bound_with_isolates() {
        let report = verify_spectrum_structure(&graph("complete:3+edgeless:2"));
        assert!(report.all_pass());
        let size = report
            .clauses
            .iter()
            .find(|c| c.clause == SpectrumClause::SizeBound)
            .unwrap();
        assert_eq!(size.status, ClauseStatus::Skipped);
        for c in &report.clauses {
            if c.clause != SpectrumClause::SizeBound {
                assert_eq!(c.status, ClauseStatus::Pass, "{:?}", c);
            }
        }
    }

    #[test]
    fn single_vertex_graph() {
        let sp = spectrum(&graph("edgeless:1"));
        assert_eq!(sp.values, vec![1]);
        assert!(sp.criticals.is_empty());
        assert!(verify_spectrum_structure(&graph("edgeless:1")).all_pass());
    }
}
