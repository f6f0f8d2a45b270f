use climb_core::analysis::{
    is_path_decomposition, local_optima_census, path_decomposition, pathwidth_upper_bound, state_at, state_count,
    treewidth_exact,
};
use climb_core::landscapes::{encode, make_counting_boolean_instance, make_counting_symbol_instance, Symbol, SymbolState, WindingLandscape};
use climb_core::search::{first_improvement_ascent, is_local_maximum, steepest_ascent};
use climb_core::{ConstraintGraph, Execution, Fitness, Landscape, SoftConstraint, Terminal, TieBreakPolicy, VcspInstance};
use proptest::prelude::*;

fn instance() -> impl Strategy<Value = VcspInstance> {
    (1usize..6).prop_flat_map(|n| {
        let domains = prop::collection::vec(2u8..4, n);
        let constraints = prop::collection::vec((0..n, 0..n, 1i64..4, prop::collection::vec(-5i64..6, 16)), 0..6);
        (domains, constraints).prop_map(|(domains, raw)| {
            let cs = raw
                .into_iter()
                .map(|(a, b, w, table)| {
                    let scope = if a == b { vec![a] } else { vec![a, b] };
                    let size: usize = scope.iter().map(|&v| domains[v] as usize).product();
                    SoftConstraint::new(scope, Fitness::from(w), table[..size].to_vec())
                })
                .collect();
            VcspInstance::new(domains, cs).unwrap()
        })
    })
}

fn graph() -> impl Strategy<Value = (ConstraintGraph, Vec<usize>)> {
    (2usize..10).prop_flat_map(|n| {
        let edges = prop::collection::vec((0..n, 0..n), 0..20);
        let order = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
        (edges, order).prop_map(move |(e, order)| {
            let g = ConstraintGraph::from_edges(n, e.into_iter().filter(|(a, b)| a != b)).unwrap();
            (g, order)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn steepest_ascent_ends_at_a_local_maximum(inst in instance(), seed in any::<u64>()) {
        let total = state_count(&inst).unwrap();
        let mut start = vec![0; inst.num_variables()];
        state_at(&inst, seed % total, &mut start);
        let t = steepest_ascent(&inst, &start, TieBreakPolicy::LowestIndex, 10_000).unwrap();
        prop_assert_eq!(t.terminal, Terminal::LocalOptimum);
        prop_assert!(t.check(&inst, true).is_ok());
        prop_assert!(is_local_maximum(&inst, t.final_state()).unwrap());
        prop_assert_eq!(t.final_fitness(), &inst.evaluate(t.final_state()).unwrap());
    }

    #[test]
    fn first_improvement_is_a_valid_ascent(inst in instance(), seed in any::<u64>()) {
        let start = vec![0; inst.num_variables()];
        let t = first_improvement_ascent(&inst, &start, seed, 10_000).unwrap();
        prop_assert!(t.check(&inst, false).is_ok());
        prop_assert!(is_local_maximum(&inst, t.final_state()).unwrap());
        prop_assert_eq!(first_improvement_ascent(&inst, &start, seed, 10_000).unwrap().steps, t.steps);
    }

    #[test]
    fn census_is_mode_independent(inst in instance()) {
        let seq = local_optima_census(&inst, 1 << 12, Execution::Sequential).unwrap();
        let par = local_optima_census(&inst, 1 << 12, Execution::Parallel).unwrap();
        prop_assert!(seq.local_maxima >= 1);
        prop_assert!(seq.worst_local_max <= seq.global_max);
        prop_assert_eq!(seq, par);
    }

    #[test]
    fn path_decompositions_are_valid((g, order) in graph()) {
        let bags = path_decomposition(&g, &order).unwrap();
        prop_assert!(is_path_decomposition(&g, &bags));
        let width = pathwidth_upper_bound(&g, &order).unwrap();
        prop_assert!(treewidth_exact(&g).unwrap() <= width);
    }

    #[test]
    fn boolean_encoding_preserves_objective(values in prop::collection::vec(0u8..10, 2..6)) {
        let n = values.len();
        let sym = make_counting_symbol_instance(n).unwrap();
        let boolean = make_counting_boolean_instance(n).unwrap();
        let s = SymbolState::from_values(&values).unwrap();
        prop_assert_eq!(sym.evaluate(&values).unwrap(), boolean.evaluate(&encode(&s)).unwrap());
    }

    #[test]
    fn winding_delta_matches_evaluation(n in 1usize..7, bits in any::<u64>(), var in any::<usize>()) {
        let w = WindingLandscape::semismooth(n);
        let x: Vec<u8> = (0..2 * n).map(|i| (bits >> i & 1) as u8).collect();
        let v = var % (2 * n);
        let mut y = x.clone();
        y[v] ^= 1;
        prop_assert_eq!(w.delta(&x, v, y[v]), &w.evaluate(&y).unwrap() - &w.evaluate(&x).unwrap());
    }
}

#[test]
fn non_symbol_blocks_score_zero() {
    let boolean = make_counting_boolean_instance(2).unwrap();
    let mut bits = encode(&SymbolState::uniform(2, Symbol::One));
    bits[..4].fill(0);
    assert_eq!(boolean.evaluate(&bits).unwrap(), Fitness::zero());
}
