use proptest::prelude::*;

use chainsearch::chain::{verify_first_arrivals, verify_first_sweep_chain_sums};
use chainsearch::io::{
    parse_edge_list, parse_matrix_market, write_edge_list, write_matrix_market, TraceDocument,
};
use chainsearch::{
    bfs_order_renumbering, combinatorial_bfs, combinatorial_ccs, components_union_find,
    find_all_components, find_connected_component, unsigned_step, ArithmeticMode, Graph, MaskSet,
    SeedRule, StateVector, TraversalConfig, Variant, VertexId,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pair = (1..=n as u32, 1..=n as u32);
        prop::collection::vec(pair, 0..=3 * n).prop_map(move |pairs| {
            let edges: Vec<(u32, u32)> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges(n, &edges, 2).unwrap()
        })
    })
}

fn graph_and_start(max_n: usize) -> impl Strategy<Value = (Graph, VertexId)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count() as u32;
        (Just(g), (1..=n).prop_map(VertexId::new))
    })
}

fn raw(variant: Variant, mode: ArithmeticMode) -> TraversalConfig {
    TraversalConfig::new(variant, mode).with_cross_check(false)
}

proptest! {
    #[test]
    fn jacobi_matches_bfs((g, s) in graph_and_start(40), masking: bool) {
        let bfs = combinatorial_bfs(&g, s);
        for mode in [ArithmeticMode::Exact, ArithmeticMode::Float] {
            let cfg = raw(Variant::Jacobi, mode).with_masking(masking);
            let (_, t) = find_connected_component(&g, s, &cfg).unwrap();
            prop_assert_eq!(t.frontiers(), bfs.frontiers());
        }
    }

    #[test]
    fn unsigned_matches_ccs((g, s) in graph_and_start(40), masking: bool) {
        let ccs = combinatorial_ccs(&g, s);
        for mode in [
            ArithmeticMode::Exact,
            ArithmeticMode::Saturate { cap: 1 << 20 },
            ArithmeticMode::Float,
        ] {
            let cfg = raw(Variant::UnsignedCcs, mode).with_masking(masking);
            let (_, t) = find_connected_component(&g, s, &cfg).unwrap();
            prop_assert_eq!(t.frontiers(), ccs.frontiers());
        }
    }

    #[test]
    fn signed_sweep_never_runs_ahead((g, s) in graph_and_start(30)) {
        let ccs = combinatorial_ccs(&g, s);
        let (_, t) = find_connected_component(&g, s, &TraversalConfig::gauss_seidel().with_cross_check(false)).unwrap();
        for k in 0..=t.iteration_count() {
            let ours = t.visited_through(k);
            let reference = ccs.visited_through(k.min(ccs.iteration_count()));
            prop_assert!(ours.iter().all(|v| reference.contains(v)), "iteration {}", k);
        }
    }

    #[test]
    fn ccs_never_needs_more_iterations_than_bfs((g, s) in graph_and_start(60)) {
        let ccs = combinatorial_ccs(&g, s);
        let bfs = combinatorial_bfs(&g, s);
        prop_assert!(ccs.iteration_count() <= bfs.iteration_count());
        prop_assert_eq!(ccs.visited(), bfs.visited());
    }

    #[test]
    fn unsigned_support_is_monotone((g, s) in graph_and_start(25)) {
        let cfg = raw(Variant::UnsignedCcs, ArithmeticMode::Exact);
        let mask = MaskSet::empty(g.vertex_count());
        let mut init = vec![0i64; g.vertex_count()];
        init[s.label() as usize - 1] = 2;
        let mut x = StateVector::from_i64(&init, 0, s);
        for _ in 0..g.vertex_count() {
            let y = unsigned_step(&g, &x, &cfg, &mask).unwrap();
            let before = x.support();
            let after = y.support();
            prop_assert!(before.iter().all(|v| after.contains(v)));
            x = y;
        }
    }

    #[test]
    fn all_components_match_union_find(g in graph(60), seed: u64) {
        let oracle = components_union_find(&g);
        for rule in [SeedRule::LowestLabel, SeedRule::Shuffled(seed)] {
            let found = find_all_components(&g, &TraversalConfig::detection(), rule).unwrap();
            prop_assert!(found.same_partition(&oracle));
            prop_assert!(found.respects_edges(&g));
        }
    }

    #[test]
    fn renumbering_is_a_relabeling((g, root) in graph_and_start(40)) {
        let p = bfs_order_renumbering(&g, root);
        prop_assert_eq!(p.apply(root), VertexId::new(1));
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        let h = g.permute(&p).unwrap();
        prop_assert_eq!(h.permute(&p.inverse()).unwrap(), g.clone());
        prop_assert!(components_union_find(&h)
            .same_partition(&components_union_find(&g).relabel(&p)));
        let t = combinatorial_ccs(&h, VertexId::new(1));
        prop_assert!(t.iteration_count() <= 1);
        let (_, u) = find_connected_component(&h, VertexId::new(1), &TraversalConfig::detection()).unwrap();
        prop_assert!(u.iteration_count() <= 1);
    }

    #[test]
    fn text_formats_agree(g in graph(30)) {
        let from_edges = parse_edge_list(&write_edge_list(&g)).unwrap().into_graph(2).unwrap();
        let from_mm = parse_matrix_market(&write_matrix_market(&g)).unwrap().into_graph(2).unwrap();
        prop_assert_eq!(&from_edges, &g);
        prop_assert_eq!(&from_mm, &g);
    }

    #[test]
    fn trace_document_round_trips((g, s) in graph_and_start(20), variant_idx in 0usize..3, snapshot: bool) {
        let variant = [Variant::Jacobi, Variant::GaussSeidel, Variant::UnsignedCcs][variant_idx];
        let cfg = raw(variant, ArithmeticMode::Exact).with_snapshots(snapshot);
        let (_, t) = find_connected_component(&g, s, &cfg).unwrap();
        let doc = TraceDocument::from_trace(&g, &cfg, &t);
        prop_assert_eq!(TraceDocument::from_json_lines(&doc.to_json_lines()).unwrap(), doc);
    }

    #[test]
    fn first_arrivals_follow_path_counts((g, s) in graph_and_start(12), d in 2u64..6) {
        let report = verify_first_arrivals(&g, s, d);
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn first_sweep_is_a_sum_over_correct_chains(g in graph(9), d in 2u64..5) {
        // vertex 1 is always a local label minimum
        let report = verify_first_sweep_chain_sums(&g, VertexId::new(1), d).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }
}
