//! Pinned behaviour of steepest ascent on the counting instance and of the
//! rule oracles around it.

use climb_core::landscapes::{make_counting_symbol_instance, Symbol, SymbolState};
use climb_core::reference_rules::{
    classify, corrupted_tables, default_budget, rule_chain, verify_cpp_closure, verify_cpp_closure_with,
    verify_steepest_equals_rules, Family, RuleId, RuleStop,
};
use climb_core::search::steepest_ascent;
use climb_core::{Execution, Terminal, TieBreakPolicy};

fn zeros(n: usize) -> SymbolState {
    SymbolState::uniform(n, Symbol::Zero)
}

fn top_x_pending(n: usize) -> SymbolState {
    let mut s = zeros(n);
    s.set_x(n, Symbol::IX1);
    s
}

#[test]
fn steepest_path_lengths_from_zero() {
    let expected = [9, 27, 69, 157, 339, 707, 1449, 2937, 5919];
    for (n, &steps) in (2..=10).zip(&expected) {
        let inst = make_counting_symbol_instance(n).unwrap();
        let t = steepest_ascent(&inst, &zeros(n).to_values(), TieBreakPolicy::FailOnTie, default_budget(n)).unwrap();
        assert_eq!(t.num_steps(), steps, "N={n}");
        assert_eq!(t.terminal, Terminal::LocalOptimum);
        t.check(&inst, true).unwrap();
    }
}

#[test]
fn lockstep_parts_exactly_at_the_pending_top_carry() {
    for n in 2..=10 {
        let r = verify_steepest_equals_rules(&zeros(n), default_budget(n)).unwrap();
        assert!(r.tie.is_none(), "N={n}");
        let d = r.divergence.as_ref().expect("diverges");
        assert_eq!(d.after, top_x_pending(n), "N={n}");
        assert_eq!(d.step, 7 * (1 << (n - 1)) - 4, "N={n}");
        let mut one = zeros(n);
        one.set_x(n, Symbol::One);
        assert_eq!(d.rules.as_ref(), Some(&one));
    }
}

#[test]
fn every_state_before_the_divergence_is_admissible() {
    for n in 2..=8 {
        let r = verify_steepest_equals_rules(&zeros(n), default_budget(n)).unwrap();
        let (chain, _, _) = rule_chain(&zeros(n), r.agreement);
        for s in &chain[..r.agreement] {
            assert!(classify(s).is_admissible(), "{s}");
        }
        assert_eq!(classify(&top_x_pending(n)).family(), Some(Family::UseX));
    }
}

#[test]
fn rule_seven_b_is_not_improving_at_the_top() {
    let inst = make_counting_symbol_instance(4).unwrap();
    let s = top_x_pending(4);
    let v = s.to_values();
    let mut next = v.clone();
    next[3] = Symbol::One.index();
    assert!(inst.evaluate(&next).unwrap() <= inst.evaluate(&v).unwrap());
    // one position lower the same rewrite gains
    let lower: SymbolState = "0 iX1 0 0".parse().unwrap();
    let lv = lower.to_values();
    let mut lnext = lv.clone();
    lnext[2] = Symbol::One.index();
    assert!(inst.evaluate(&lnext).unwrap() > inst.evaluate(&lv).unwrap());
}

#[test]
fn rule_chain_never_hits_an_ambiguous_priority() {
    for n in 2..=10 {
        let (_, apps, stop) = rule_chain(&zeros(n), default_budget(n));
        assert!(!matches!(stop, RuleStop::Ambiguous(_)), "N={n}");
        assert!(apps.iter().any(|a| a.rule == RuleId::R7b));
    }
}

#[test]
fn closure_counterexamples_are_pinned() {
    let three = verify_cpp_closure(3, Execution::Parallel).unwrap();
    let four = verify_cpp_closure(4, Execution::Parallel).unwrap();
    assert_eq!((three.admissible_states, three.improving_escapes.len()), (48, 17));
    assert_eq!((four.admissible_states, four.improving_escapes.len()), (108, 55));
    assert_eq!(three.steepest_escapes.len(), 10);
    assert_eq!(four.steepest_escapes.len(), 25);
    let first = &three.improving_escapes[0];
    assert_eq!(first.from.to_string(), "X 0 0");
    assert_eq!(first.to.to_string(), "X 0 i01");
}

#[test]
fn corrupted_table_adds_counterexamples() {
    for n in [3, 4] {
        let clean = verify_cpp_closure(n, Execution::Sequential).unwrap();
        let broken = verify_cpp_closure_with(n, &corrupted_tables(), Execution::Sequential).unwrap();
        let fresh = broken
            .improving_escapes
            .iter()
            .filter(|e| !clean.improving_escapes.contains(e))
            .count();
        let fresh_mismatches = broken
            .reachable_mismatches
            .iter()
            .filter(|m| !clean.reachable_mismatches.contains(m))
            .count();
        assert!(fresh + fresh_mismatches > 0, "N={n}");
    }
}
