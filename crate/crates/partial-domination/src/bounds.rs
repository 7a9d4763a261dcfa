//! Executable inequality checks, one per structural statement about
//! `pd_alpha`, each producing a [`BoundReport`] with an explicit hypothesis
//! flag. A report whose hypothesis held but whose inequality failed is a
//! violation; harnesses treat any violation as fatal.

use crate::alpha::{unit_steps, Alpha};
use crate::graph::{Component, Graph};
use crate::solver::{domination_number, pd_alpha};
use crate::spectrum::{coverage_profile, CoverageProfile};
use num_integer::Integer;
use serde::Serialize;
use std::fmt;

/// Which statement a report instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// `pd = 1` iff some vertex has degree at least `ceil(n*alpha) - 1`.
    SingleVertexCoverage,
    /// `ceil(n*alpha/(max_degree+1)) <= pd <= ceil(n*alpha) - max_degree`
    /// when `max_degree < ceil(n*alpha) - 1`.
    DegreeSandwich,
    /// `pd <= ceil(gamma / floor(1/alpha))`.
    GammaQuotient,
    /// `pd <= ceil(n / (2 * floor(1/alpha)))` on isolate-free graphs.
    HalfOrderQuotient,
    /// `alpha <= 1/gamma` forces `pd = 1`.
    InverseGammaThreshold,
    /// `pd_alpha + pd_(1-alpha) <= gamma + 1` for `alpha` strictly inside `(0,1)`.
    ComplementarySplit,
    /// `sum_i pd_(alpha_i) <= k(gamma+1)/2` when the `alpha_i` sum to at most 1.
    MultiSplitSum,
    /// `pd(G) <= sum of component pd values`, swept over `alpha = m/n`.
    ComponentAdditivity,
    /// `pd(G) <= pd(G - e) <= pd(G) + 1` for every edge.
    EdgeRemoval,
    /// `pd(G) - 1 <= pd(G - v) <= pd(G) + margin(deg v)` for every vertex.
    VertexRemoval,
    /// `pd(G) + pd(complement) <= ceil(n / floor(1/alpha)) + 1`.
    NordhausGaddum,
    /// Sharper complement bound with `n - 1` when both sides are connected.
    NordhausGaddumConnected,
    /// Complement bound with `floor(n/2) + 2` when both sides are isolate-free.
    NordhausGaddumIsolateFree,
    /// `pd` is non-decreasing along `alpha = 1/n, …, n/n`.
    Monotonicity,
    /// Equal ceilings give equal `pd`: midpoints match their step value.
    ThresholdQuotient,
    SpectrumCriticalRange,
    SpectrumSizeBound,
    SpectrumBoundaries,
    SpectrumEndpoints,
}

impl TheoremId {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::SingleVertexCoverage => "single-vertex-coverage",
            TheoremId::DegreeSandwich => "degree-sandwich",
            TheoremId::GammaQuotient => "gamma-quotient",
            TheoremId::HalfOrderQuotient => "half-order-quotient",
            TheoremId::InverseGammaThreshold => "inverse-gamma-threshold",
            TheoremId::ComplementarySplit => "complementary-split",
            TheoremId::MultiSplitSum => "multi-split-sum",
            TheoremId::ComponentAdditivity => "component-additivity",
            TheoremId::EdgeRemoval => "edge-removal",
            TheoremId::VertexRemoval => "vertex-removal",
            TheoremId::NordhausGaddum => "nordhaus-gaddum",
            TheoremId::NordhausGaddumConnected => "nordhaus-gaddum-connected",
            TheoremId::NordhausGaddumIsolateFree => "nordhaus-gaddum-isolate-free",
            TheoremId::Monotonicity => "monotonicity",
            TheoremId::ThresholdQuotient => "threshold-quotient",
            TheoremId::SpectrumCriticalRange => "spectrum-critical-range",
            TheoremId::SpectrumSizeBound => "spectrum-size-bound",
            TheoremId::SpectrumBoundaries => "spectrum-boundaries",
            TheoremId::SpectrumEndpoints => "spectrum-endpoints",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An exactly-evaluated quantity: an integer or a reduced fraction.
/// Serialized as a JSON number or a `"p/q"` string; never a float.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exact {
    Int(i64),
    Ratio { p: i64, q: i64 },
}

impl Exact {
    pub fn int(v: usize) -> Self {
        Exact::Int(v as i64)
    }

    pub fn ratio(p: u64, q: u64) -> Self {
        let g = p.gcd(&q).max(1);
        let (p, q) = (p / g, q / g);
        if q == 1 {
            Exact::Int(p as i64)
        } else {
            Exact::Ratio { p: p as i64, q: q as i64 }
        }
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Int(v) => write!(f, "{v}"),
            Exact::Ratio { p, q } => write!(f, "{p}/{q}"),
        }
    }
}

impl Serialize for Exact {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Exact::Int(v) => serializer.serialize_i64(*v),
            Exact::Ratio { .. } => serializer.collect_str(self),
        }
    }
}

/// How `lhs` and `rhs` relate when the report holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `lhs <= rhs`.
    LessEq,
    /// `lhs == rhs`.
    Equal,
    /// `lhs = 1` exactly when the degree condition `max_degree >= rhs` holds.
    Iff,
    /// The observed quantity stays within `[lhs, rhs]`.
    Within,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::LessEq => "<=",
            Relation::Equal => "==",
            Relation::Iff => "<=>",
            Relation::Within => "within",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One evaluated instance of a statement on a concrete graph.
///
/// `holds` is `None` exactly when the hypothesis was not met; a report with
/// `hypothesis_met` and `holds == Some(false)` is a violation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem: TheoremId,
    pub graph: String,
    pub alphas: Vec<Alpha>,
    pub hypothesis_met: bool,
    pub holds: Option<bool>,
    pub lhs: Exact,
    pub relation: Relation,
    pub rhs: Exact,
    pub note: Option<String>,
}

impl BoundReport {
    pub fn is_violation(&self) -> bool {
        self.hypothesis_met && self.holds == Some(false)
    }
}

pub(crate) fn default_label(g: &Graph) -> String {
    format!("graph(n={},edges={})", g.vertex_count(), g.edge_count())
}

fn ceil_div(a: u128, b: u128) -> u128 {
    debug_assert!(b > 0);
    (a + b - 1) / b
}

// ---------------------------------------------------------------------------
// Report builders. These take already-computed pd values so that the public
// per-alpha operations (solver-backed) and the batched sweep (profile-backed)
// produce literally identical reports.
// ---------------------------------------------------------------------------

pub(crate) fn single_vertex_report(g: &Graph, alpha: Alpha, pd: usize) -> BoundReport {
    let n = g.vertex_count();
    let m = alpha.coverage_target(n);
    let needed = m as i64 - 1;
    let degree_ok = g.max_degree() as i64 >= needed;
    BoundReport {
        theorem: TheoremId::SingleVertexCoverage,
        graph: default_label(g),
        alphas: vec![alpha],
        hypothesis_met: true,
        holds: Some((pd == 1) == degree_ok),
        lhs: Exact::int(pd),
        relation: Relation::Iff,
        rhs: Exact::Int(needed),
        note: Some(format!("max degree {}", g.max_degree())),
    }
}

pub(crate) fn degree_sandwich_report(g: &Graph, alpha: Alpha, pd: usize) -> BoundReport {
    let n = g.vertex_count();
    let delta = g.max_degree();
    let m = alpha.coverage_target(n);
    let hypothesis_met = (delta as i64) < m as i64 - 1;
    let raw_num = n as u128 * alpha.numer() as u128;
    let raw_den = alpha.denom() as u128 * (delta + 1) as u128;
    let lower = ceil_div(raw_num, raw_den) as i64;
    let upper = m as i64 - delta as i64;
    let holds = hypothesis_met.then(|| lower <= pd as i64 && pd as i64 <= upper);
    BoundReport {
        theorem: TheoremId::DegreeSandwich,
        graph: default_label(g),
        alphas: vec![alpha],
        hypothesis_met,
        holds,
        lhs: Exact::Int(lower),
        relation: Relation::Within,
        rhs: Exact::Int(upper),
        note: Some(format!(
            "pd={pd}; raw lower bound {}",
            Exact::ratio(raw_num as u64, raw_den as u64)
        )),
    }
}

pub(crate) fn gamma_quotient_report(g: &Graph, alpha: Alpha, gamma: usize, pd: usize) -> BoundReport {
    let t = alpha.floor_inverse();
    let bound = ceil_div(gamma as u128, t as u128) as usize;
    BoundReport {
        theorem: TheoremId::GammaQuotient,
        graph: default_label(g),
        alphas: vec![alpha],
        hypothesis_met: true,
        holds: Some(pd <= bound),
        lhs: Exact::int(pd),
        relation: Relation::LessEq,
        rhs: Exact::int(bound),
        note: Some(format!("gamma={gamma}, floor(1/alpha)={t}")),
    }
}

pub(crate) fn half_order_report(g: &Graph, alpha: Alpha, pd: usize) -> BoundReport {
    let n = g.vertex_count();
    let t = alpha.floor_inverse();
    let hypothesis_met = !g.has_isolated_vertex();
    let bound = ceil_div(n as u128, 2 * t as u128) as usize;
    BoundReport {
        theorem: TheoremId::HalfOrderQuotient,
        graph: default_label(g),
        alphas: vec![alpha],
        hypothesis_met,
        holds: hypothesis_met.then(|| pd <= bound),
        lhs: Exact::int(pd),
        relation: Relation::LessEq,
        rhs: Exact::int(bound),
        note: None,
    }
}

pub(crate) fn inverse_gamma_report(g: &Graph, alpha: Alpha, gamma: usize, pd: usize) -> BoundReport {
    // alpha <= 1/gamma, exactly: p * gamma <= q.
    let hypothesis_met = alpha.numer() as u128 * gamma as u128 <= alpha.denom() as u128;
    BoundReport {
        theorem: TheoremId::InverseGammaThreshold,
        graph: default_label(g),
        alphas: vec![alpha],
        hypothesis_met,
        holds: hypothesis_met.then(|| pd == 1),
        lhs: Exact::int(pd),
        relation: Relation::Equal,
        rhs: Exact::int(1),
        note: Some(format!("gamma={gamma}")),
    }
}

pub(crate) fn split_sum_report(
    g: &Graph,
    alphas: &[Alpha],
    gamma: usize,
    pd_of: &mut dyn FnMut(Alpha) -> usize,
) -> Option<BoundReport> {
    match alphas {
        [] => None,
        [alpha] => {
            let hypothesis_met = !alpha.is_one();
            let (report_alphas, lhs, holds) = match alpha.complement() {
                Some(beta) => {
                    let sum = pd_of(*alpha) + pd_of(beta);
                    (vec![*alpha, beta], sum, hypothesis_met.then(|| sum <= gamma + 1))
                }
                None => (vec![*alpha], pd_of(*alpha), None),
            };
            Some(BoundReport {
                theorem: TheoremId::ComplementarySplit,
                graph: default_label(g),
                alphas: report_alphas,
                hypothesis_met,
                holds,
                lhs: Exact::int(lhs),
                relation: Relation::LessEq,
                rhs: Exact::int(gamma + 1),
                note: Some(format!("gamma={gamma}")),
            })
        }
        parts => {
            let k = parts.len();
            let total = parts
                .iter()
                .map(Alpha::ratio)
                .fold(num_rational::Ratio::from_integer(0u64), |acc, r| acc + r);
            let hypothesis_met =
                total <= num_rational::Ratio::from_integer(1) && parts.iter().all(|a| !a.is_one());
            let sum: usize = parts.iter().map(|a| pd_of(*a)).sum();
            // Compared as 2 * sum <= k * (gamma + 1) to stay in integers.
            let lhs = 2 * sum;
            let rhs = k * (gamma + 1);
            Some(BoundReport {
                theorem: TheoremId::MultiSplitSum,
                graph: default_label(g),
                alphas: parts.to_vec(),
                hypothesis_met,
                holds: hypothesis_met.then(|| lhs <= rhs),
                lhs: Exact::int(lhs),
                relation: Relation::LessEq,
                rhs: Exact::int(rhs),
                note: Some(format!("doubled: 2*sum(pd) vs {k}*(gamma+1), gamma={gamma}")),
            })
        }
    }
}

pub(crate) fn component_additivity_report(
    g: &Graph,
    main: &CoverageProfile,
    comps: &[(Component, CoverageProfile)],
) -> BoundReport {
    let n = g.vertex_count();
    let mut holds = true;
    // Track the alpha with the least slack for the record.
    let mut worst: Option<(Alpha, usize, usize)> = None;
    for alpha in unit_steps(n) {
        let whole = main.pd_for_alpha(alpha);
        let sum: usize = comps.iter().map(|(_, p)| p.pd_for_alpha(alpha)).sum();
        if whole > sum {
            holds = false;
        }
        // Ties resolve to the largest alpha, so exact-equality witnesses
        // surface at the full-coverage end.
        let tighter = match worst {
            None => true,
            Some((_, w, s)) => (sum as i64 - whole as i64) <= (s as i64 - w as i64),
        };
        if tighter {
            worst = Some((alpha, whole, sum));
        }
    }
    let (alpha, whole, sum) = worst.expect("n >= 1 yields at least one probe");
    BoundReport {
        theorem: TheoremId::ComponentAdditivity,
        graph: default_label(g),
        alphas: vec![],
        hypothesis_met: true,
        holds: Some(holds),
        lhs: Exact::int(whole),
        relation: Relation::LessEq,
        rhs: Exact::int(sum),
        note: Some(format!(
            "{} components, swept alpha=m/{n}; tightest at {alpha}",
            comps.len()
        )),
    }
}

pub(crate) fn edge_removal_report(
    g: &Graph,
    alpha: Alpha,
    pd: usize,
    per_edge: &[((usize, usize), usize)],
) -> BoundReport {
    let hypothesis_met = !per_edge.is_empty();
    let mut violations = Vec::new();
    for &((u, v), pd_e) in per_edge {
        if !(pd <= pd_e && pd_e <= pd + 1) {
            violations.push(format!("edge {u}-{v}: pd={pd_e}"));
        }
    }
    BoundReport {
        theorem: TheoremId::EdgeRemoval,
        graph: default_label(g),
        alphas: vec![alpha],
        hypothesis_met,
        holds: hypothesis_met.then(|| violations.is_empty()),
        lhs: Exact::int(pd),
        relation: Relation::Within,
        rhs: Exact::int(pd + 1),
        note: if violations.is_empty() {
            Some(format!("checked {} edges", per_edge.len()))
        } else {
            Some(violations.join("; "))
        },
    }
}

/// Allowed increase of `pd` when deleting a vertex of the given degree.
/// Deleting an isolated vertex can never raise `pd`; deleting a vertex that
/// only feeds coverage to a set it does not belong to can raise it by one, so
/// low degrees get margin 1 and higher degrees `deg - 1`.
pub(crate) fn removal_margin(degree: usize) -> usize {
    match degree {
        0 => 0,
        d => d.saturating_sub(1).max(1),
    }
}

pub(crate) fn vertex_removal_report(
    g: &Graph,
    alpha: Alpha,
    pd: usize,
    per_vertex: &[(usize, usize, usize)],
) -> BoundReport {
    let hypothesis_met = g.vertex_count() >= 2;
    let mut violations = Vec::new();
    let mut max_margin = 0;
    for &(v, degree, pd_v) in per_vertex {
        let margin = removal_margin(degree);
        max_margin = max_margin.max(margin);
        if !(pd_v as i64 >= pd as i64 - 1 && pd_v <= pd + margin) {
            violations.push(format!("vertex {v} (deg {degree}): pd={pd_v}"));
        }
    }
    BoundReport {
        theorem: TheoremId::VertexRemoval,
        graph: default_label(g),
        alphas: vec![alpha],
        hypothesis_met,
        holds: hypothesis_met.then(|| violations.is_empty()),
        lhs: Exact::Int(pd as i64 - 1),
        relation: Relation::Within,
        rhs: Exact::int(pd + max_margin),
        note: if violations.is_empty() {
            Some(format!(
                "checked {} vertices; per-vertex margin is 0 for isolated, max(1, deg-1) otherwise",
                per_vertex.len()
            ))
        } else {
            Some(violations.join("; "))
        },
    }
}

pub(crate) fn nordhaus_gaddum_reports(
    g: &Graph,
    main: &CoverageProfile,
    complement: &CoverageProfile,
    complement_graph: &Graph,
) -> Vec<BoundReport> {
    let n = g.vertex_count();
    let both_connected = n >= 2 && g.is_connected() && complement_graph.is_connected();
    let both_isolate_free = !g.has_isolated_vertex() && !complement_graph.has_isolated_vertex();
    let cases: [(TheoremId, bool, Box<dyn Fn(u64) -> usize>); 3] = [
        (
            TheoremId::NordhausGaddum,
            true,
            Box::new(move |t| ceil_div(n as u128, t as u128) as usize + 1),
        ),
        (
            TheoremId::NordhausGaddumConnected,
            both_connected,
            Box::new(move |t| ceil_div((n - 1) as u128, t as u128) as usize + 1),
        ),
        (
            TheoremId::NordhausGaddumIsolateFree,
            both_isolate_free,
            Box::new(move |t| ceil_div((n / 2 + 2) as u128, t as u128) as usize + 1),
        ),
    ];
    cases
        .into_iter()
        .map(|(theorem, hypothesis_met, bound)| {
            let mut holds = true;
            let mut worst: Option<(Alpha, usize, usize)> = None;
            for alpha in unit_steps(n) {
                let sum = main.pd_for_alpha(alpha) + complement.pd_for_alpha(alpha);
                let rhs = bound(alpha.floor_inverse());
                if sum > rhs {
                    holds = false;
                }
                let tighter = match worst {
                    None => true,
                    Some((_, s, r)) => (rhs as i64 - sum as i64) <= (r as i64 - s as i64),
                };
                if tighter {
                    worst = Some((alpha, sum, rhs));
                }
            }
            let (alpha, sum, rhs) = worst.expect("n >= 1 yields at least one probe");
            BoundReport {
                theorem,
                graph: default_label(g),
                alphas: vec![],
                hypothesis_met,
                holds: hypothesis_met.then_some(holds),
                lhs: Exact::int(sum),
                relation: Relation::LessEq,
                rhs: Exact::int(rhs),
                note: Some(format!("swept alpha=m/{n}; tightest at {alpha}")),
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Public operations: solver-backed reference paths.
// ---------------------------------------------------------------------------

/// The single-vertex characterization and the degree sandwich at one alpha.
pub fn check_degree_bounds(g: &Graph, alpha: Alpha) -> Vec<BoundReport> {
    let pd = pd_alpha(g, alpha).value;
    vec![
        single_vertex_report(g, alpha, pd),
        degree_sandwich_report(g, alpha, pd),
    ]
}

/// The three domination-number quotient bounds at one alpha.
pub fn check_gamma_bounds(g: &Graph, alpha: Alpha) -> Vec<BoundReport> {
    let gamma = domination_number(g).value;
    let pd = pd_alpha(g, alpha).value;
    vec![
        gamma_quotient_report(g, alpha, gamma, pd),
        half_order_report(g, alpha, pd),
        inverse_gamma_report(g, alpha, gamma, pd),
    ]
}

/// Split-sum bounds. A single alpha is paired with its complement
/// (`pd_alpha + pd_(1-alpha) <= gamma + 1`); two or more alphas are checked
/// against `k(gamma+1)/2` provided they sum to at most 1.
pub fn check_sum_bounds(g: &Graph, alphas: &[Alpha]) -> Vec<BoundReport> {
    let gamma = domination_number(g).value;
    split_sum_report(g, alphas, gamma, &mut |a| pd_alpha(g, a).value)
        .into_iter()
        .collect()
}

/// `pd(G) <= sum over components`, swept over every `alpha = m/n`.
pub fn check_component_additivity(g: &Graph) -> BoundReport {
    let main = coverage_profile(g);
    let comps: Vec<(Component, CoverageProfile)> = g
        .components()
        .into_iter()
        .map(|c| {
            let p = coverage_profile(&c.graph);
            (c, p)
        })
        .collect();
    component_additivity_report(g, &main, &comps)
}

/// Edge- and vertex-removal sandwiches at one alpha, exhaustively over the
/// graph's edges and vertices.
pub fn check_removal(g: &Graph, alpha: Alpha) -> Vec<BoundReport> {
    let pd = pd_alpha(g, alpha).value;
    let per_edge: Vec<((usize, usize), usize)> = g
        .edges()
        .into_iter()
        .map(|(u, v)| {
            let h = g.delete_edge(u, v).expect("edge comes from the edge list");
            ((u, v), pd_alpha(&h, alpha).value)
        })
        .collect();
    let per_vertex: Vec<(usize, usize, usize)> = if g.vertex_count() >= 2 {
        (0..g.vertex_count())
            .map(|v| {
                let (h, _) = g.delete_vertex(v).expect("n >= 2 so deletion is valid");
                (v, g.degree(v).unwrap(), pd_alpha(&h, alpha).value)
            })
            .collect()
    } else {
        Vec::new()
    };
    vec![
        edge_removal_report(g, alpha, pd, &per_edge),
        vertex_removal_report(g, alpha, pd, &per_vertex),
    ]
}

/// All three complement bounds, swept over every `alpha = m/n`.
pub fn check_nordhaus_gaddum(g: &Graph) -> Vec<BoundReport> {
    let complement_graph = g.complement();
    let main = coverage_profile(g);
    let complement = coverage_profile(&complement_graph);
    nordhaus_gaddum_reports(g, &main, &complement, &complement_graph)
}
