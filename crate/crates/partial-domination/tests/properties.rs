//! Property-based invariants across the whole crate, on random small graphs.

use partial_domination::{
    brute_force_pd, closed_neighborhood, coverage_profile, domination_number, greedy_pd,
    half_steps, parse_dimacs, parse_edge_list, pd_alpha, pd_by_target, serialize_dimacs,
    serialize_edge_list, spectrum, unit_steps, verify_graph, Alpha, Graph, VertexSet,
};
use proptest::prelude::*;

/// A random simple graph with 1..=max_n vertices, one bool per vertex pair.
fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).expect("pairs are simple by construction")
        })
    })
}

fn arbitrary_subset(g: &Graph) -> impl Strategy<Value = VertexSet> {
    let n = g.vertex_count();
    prop::collection::vec(any::<bool>(), n).prop_map(move |mask| {
        VertexSet::from_indices(n, mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v))
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn neighborhood_contains_set_and_respects_degree_sum(
        (g, s) in arbitrary_graph(9).prop_flat_map(|g| {
            let s = arbitrary_subset(&g);
            (Just(g), s)
        })
    ) {
        let covered = closed_neighborhood(&g, &s).unwrap();
        prop_assert!(s.is_subset_of(&covered));
        let degree_sum: usize = s.iter().map(|v| g.degree(v).unwrap() + 1).sum();
        prop_assert!(covered.len() <= degree_sum);
    }

    #[test]
    fn neighborhood_distributes_over_union(
        (g, a, b) in arbitrary_graph(9).prop_flat_map(|g| {
            let a = arbitrary_subset(&g);
            let b = arbitrary_subset(&g);
            (Just(g), a, b)
        })
    ) {
        let mut ab = a.clone();
        ab.union_with(&b);
        let mut lhs = closed_neighborhood(&g, &a).unwrap();
        lhs.union_with(&closed_neighborhood(&g, &b).unwrap());
        prop_assert_eq!(closed_neighborhood(&g, &ab).unwrap(), lhs);
    }

    #[test]
    fn complement_is_an_involution(g in arbitrary_graph(9)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn text_formats_round_trip(g in arbitrary_graph(9)) {
        prop_assert_eq!(parse_edge_list(&serialize_edge_list(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_dimacs(&serialize_dimacs(&g)).unwrap(), g);
    }

    #[test]
    fn pd_is_monotone_and_bounded(g in arbitrary_graph(9)) {
        let n = g.vertex_count();
        let gamma = domination_number(&g).value;
        let mut prev = 0;
        for alpha in unit_steps(n) {
            let pd = pd_alpha(&g, alpha).value;
            prop_assert!(pd >= 1 && pd <= gamma);
            prop_assert!(pd >= prev);
            prev = pd;
        }
        prop_assert_eq!(prev, gamma);
    }

    #[test]
    fn equal_ceilings_give_equal_pd(g in arbitrary_graph(9)) {
        let n = g.vertex_count();
        for (step, mid) in unit_steps(n).zip(half_steps(n)) {
            prop_assert_eq!(pd_alpha(&g, step).value, pd_alpha(&g, mid).value);
        }
    }

    #[test]
    fn solver_matches_oracle_with_witness(g in arbitrary_graph(8)) {
        for m in 1..=g.vertex_count() {
            let fast = pd_by_target(&g, m).unwrap();
            let slow = brute_force_pd(&g, m).unwrap();
            prop_assert_eq!(fast.value, slow.value);
            prop_assert_eq!(&fast.witness, &slow.witness);
            prop_assert!(fast.covered >= m);
        }
    }

    #[test]
    fn pd_one_iff_high_degree(g in arbitrary_graph(9)) {
        let n = g.vertex_count();
        for alpha in unit_steps(n) {
            let m = alpha.coverage_target(n);
            let pd = pd_alpha(&g, alpha).value;
            prop_assert_eq!(pd == 1, g.max_degree() + 1 >= m);
        }
    }

    #[test]
    fn witnesses_are_minimal(g in arbitrary_graph(9)) {
        let n = g.vertex_count();
        for m in 1..=n {
            let res = pd_by_target(&g, m).unwrap();
            if res.value == 1 {
                continue;
            }
            for drop in res.witness.iter() {
                let mut reduced = res.witness.clone();
                reduced.remove(drop);
                let covered = closed_neighborhood(&g, &reduced).unwrap().len();
                prop_assert!(covered < m, "dropping {drop} kept coverage {covered} >= {m}");
            }
        }
    }

    #[test]
    fn greedy_is_an_upper_bound(g in arbitrary_graph(9)) {
        for m in 1..=g.vertex_count() {
            let exact = pd_by_target(&g, m).unwrap();
            let greedy = greedy_pd(&g, m).unwrap();
            prop_assert!(greedy.value >= exact.value);
            prop_assert!(greedy.covered >= m);
        }
    }

    #[test]
    fn profile_agrees_with_solver(g in arbitrary_graph(9)) {
        let profile = coverage_profile(&g);
        let gk = profile.values();
        // Shape: g(0) = 0, strictly increasing up to g(gamma) = n, with
        // steps of at most max_degree + 1.
        prop_assert_eq!(gk[0], 0);
        prop_assert_eq!(*gk.last().unwrap(), g.vertex_count());
        for k in 1..gk.len() {
            prop_assert!(gk[k] > gk[k - 1]);
            prop_assert!(gk[k] - gk[k - 1] <= g.max_degree() + 1);
        }
        for m in 1..=g.vertex_count() {
            prop_assert_eq!(profile.pd_for_target(m), pd_by_target(&g, m).unwrap().value);
        }
    }

    #[test]
    fn spectrum_reconstructs_the_step_function(g in arbitrary_graph(9)) {
        let n = g.vertex_count();
        let sp = spectrum(&g);
        // Criticals are reduced, sorted, distinct, with denominators dividing n.
        for w in sp.criticals.windows(2) {
            prop_assert!(w[0] < w[1]);
        }
        for c in &sp.criticals {
            prop_assert_eq!(num_integer::gcd(c.numer(), c.denom()), 1);
            prop_assert_eq!(n as u64 % c.denom(), 0);
        }
        for alpha in unit_steps(n).chain(half_steps(n)) {
            prop_assert_eq!(sp.pd_at(alpha), pd_alpha(&g, alpha).value);
        }
    }

    #[test]
    fn full_sweep_has_no_violations(g in arbitrary_graph(7)) {
        let summary = verify_graph(&g, "random");
        prop_assert!(summary.is_clean(), "{:?}", summary.violations());
    }
}
