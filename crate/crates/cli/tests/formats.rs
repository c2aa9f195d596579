use blossom_cli::format::{emit_dimacs, emit_edge_list, parse_dimacs, parse_edge_list};
use blossom_core::Graph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, all.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn dimacs_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_dimacs(&emit_dimacs(&g)).unwrap(), g);
    }

    /// The edge list infers `n`, so trailing isolated vertices are dropped.
    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        let back = parse_edge_list(&emit_edge_list(&g)).unwrap();
        let n = g.edges().iter().map(|e| e.hi() + 1).max().unwrap_or(0);
        prop_assert_eq!(back.n(), n);
        prop_assert_eq!(back.edges(), g.edges());
    }
}
