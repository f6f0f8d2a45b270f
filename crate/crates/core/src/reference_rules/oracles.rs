//! Exhaustive and lockstep oracles comparing steepest ascent on the counting
//! instance with the rule semantics.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::fitness::Fitness;
use crate::landscapes::{
    decode_state, encode, make_counting_boolean_instance_with, make_counting_symbol_instance_with, CountingTables,
    Symbol, SymbolState,
};
use crate::reference_rules::admissible::is_admissible;
use crate::reference_rules::rules::{matching_rules, rule_successor, RuleApplication};
use crate::search::{best_moves, improving_moves, steepest_ascent, AscentTrace, Landscape, TieBreakPolicy};
use crate::vcsp::VcspInstance;

/// Largest `N` for which the 10^N sweep is attempted.
pub const CLOSURE_LIMIT: usize = 6;

/// An improving flip leaving the admissible set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Escape {
    #[serde(serialize_with = "as_text")]
    pub from: SymbolState,
    #[serde(serialize_with = "as_text")]
    pub to: SymbolState,
    pub gain: Fitness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleFailureKind {
    /// The rewrite does not strictly increase the objective.
    NotImproving,
    /// The rewrite leaves the admissible set.
    LeavesAdmissible,
}

/// A rule whose guard matches an admissible state but whose effect breaks
/// one of the rule invariants.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RuleFailure {
    #[serde(serialize_with = "as_text")]
    pub state: SymbolState,
    #[serde(serialize_with = "as_display")]
    pub application: RuleApplication,
    pub kind: RuleFailureKind,
}

/// A state where the improving flips and the rule-triggered rewrites differ.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct SetMismatch {
    #[serde(serialize_with = "as_text")]
    pub state: SymbolState,
    /// Improving successors no rule produces.
    #[serde(serialize_with = "as_text_list")]
    pub improving_only: Vec<SymbolState>,
    /// Rule successors that are not improving flips.
    #[serde(serialize_with = "as_text_list")]
    pub rules_only: Vec<SymbolState>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail", rename_all = "kebab-case")]
pub enum RuleStop {
    Halted,
    Ambiguous(String),
    Inadmissible(String),
    Budget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CppReport {
    pub n: usize,
    pub states: u64,
    pub admissible_states: u64,
    /// Improving flips from admissible states to inadmissible ones.
    pub improving_escapes: Vec<Escape>,
    /// The subset of escapes that are also steepest moves.
    pub steepest_escapes: Vec<Escape>,
    pub rule_failures: Vec<RuleFailure>,
    /// States visited by the rule chain from 0^N.
    pub reachable_states: usize,
    pub rule_chain_stop: RuleStop,
    pub reachable_mismatches: Vec<SetMismatch>,
}

impl CppReport {
    pub fn closed_under_improving_flips(&self) -> bool {
        self.improving_escapes.is_empty()
    }

    pub fn rules_match_flips_on_reachable(&self) -> bool {
        self.reachable_mismatches.is_empty() && !matches!(self.rule_chain_stop, RuleStop::Ambiguous(_))
    }

    pub fn holds(&self) -> bool {
        self.closed_under_improving_flips() && self.rules_match_flips_on_reachable()
    }
}

fn successor_set(landscape: &VcspInstance, state: &SymbolState) -> BTreeSet<SymbolState> {
    let values = state.to_values();
    improving_moves(landscape, &values)
        .into_iter()
        .map(|(var, to, _)| {
            let mut next = values.clone();
            next[var] = to;
            SymbolState::from_values(&next).expect("symbol domain")
        })
        .collect()
}

fn mismatch(landscape: &VcspInstance, state: &SymbolState) -> Option<SetMismatch> {
    let flips = successor_set(landscape, state);
    let rules: BTreeSet<SymbolState> = matching_rules(state).iter().map(|a| a.apply(state)).collect();
    (flips != rules).then(|| SetMismatch {
        state: state.clone(),
        improving_only: flips.difference(&rules).cloned().collect(),
        rules_only: rules.difference(&flips).cloned().collect(),
    })
}

#[derive(Default)]
struct Sweep {
    states: u64,
    admissible: u64,
    escapes: Vec<Escape>,
    steepest: Vec<Escape>,
    failures: Vec<RuleFailure>,
}

/// The rule chain from `start`, at most `budget` rewrites.
pub fn rule_chain(start: &SymbolState, budget: usize) -> (Vec<SymbolState>, Vec<RuleApplication>, RuleStop) {
    let mut states = vec![start.clone()];
    let mut apps = Vec::new();
    loop {
        let current = states.last().expect("non-empty chain");
        match rule_successor(current) {
            Ok(None) => return (states, apps, RuleStop::Halted),
            Ok(Some(_)) if apps.len() >= budget => return (states, apps, RuleStop::Budget),
            Ok(Some((next, app))) => {
                states.push(next);
                apps.push(app);
            }
            Err(Error::AmbiguousPriority { state, rules }) => {
                return (states, apps, RuleStop::Ambiguous(format!("{state}: {}", rules.join(", "))))
            }
            Err(e) => return (states, apps, RuleStop::Inadmissible(e.to_string())),
        }
    }
}

/// Sweeps all 10^N symbol states: every improving flip from an admissible
/// state must stay admissible, every matching rule must improve and stay
/// admissible, and along the rule chain from 0^N the improving flips must be
/// exactly the rule rewrites.
pub fn verify_cpp_closure_with(n: usize, tables: &CountingTables, exec: Execution) -> Result<CppReport> {
    if !(1..=CLOSURE_LIMIT).contains(&n) {
        return Err(Error::Capacity {
            states: 10u128.saturating_pow(n as u32),
            limit: 10u128.pow(CLOSURE_LIMIT as u32),
        });
    }
    let inst = make_counting_symbol_instance_with(n, tables)?;
    let total = 10u64.pow(n as u32);
    let parts = exec.fold_chunks(total, 1000, Sweep::default, |acc, idx| {
        let values: Vec<u8> = (0..n).map(|k| (idx / 10u64.pow(k as u32) % 10) as u8).collect();
        acc.states += 1;
        let state = SymbolState::from_values(&values).expect("symbol domain");
        if !is_admissible(&state) {
            return;
        }
        acc.admissible += 1;
        let best = best_moves(&inst, &values).map(|(gain, _)| gain);
        for (var, to, gain) in improving_moves(&inst, &values) {
            let mut next = values.clone();
            next[var] = to;
            let next = SymbolState::from_values(&next).expect("symbol domain");
            if !is_admissible(&next) {
                let escape = Escape {
                    from: state.clone(),
                    to: next,
                    gain: gain.clone(),
                };
                if best.as_ref() == Some(&gain) {
                    acc.steepest.push(escape.clone());
                }
                acc.escapes.push(escape);
            }
        }
        for app in matching_rules(&state) {
            let next = app.apply(&state);
            let gain = inst.delta(&values, app.position - 1, app.to.index());
            let kind = if !gain.is_positive() {
                Some(RuleFailureKind::NotImproving)
            } else if !is_admissible(&next) {
                Some(RuleFailureKind::LeavesAdmissible)
            } else {
                None
            };
            if let Some(kind) = kind {
                acc.failures.push(RuleFailure {
                    state: state.clone(),
                    application: app,
                    kind,
                });
            }
        }
    });
    let mut sweep = Sweep::default();
    for p in parts {
        sweep.states += p.states;
        sweep.admissible += p.admissible;
        sweep.escapes.extend(p.escapes);
        sweep.steepest.extend(p.steepest);
        sweep.failures.extend(p.failures);
    }
    sweep.escapes.sort();
    sweep.steepest.sort();
    sweep.failures.sort();

    let (chain, _, stop) = rule_chain(&SymbolState::uniform(n, Symbol::Zero), 1 << (2 * n + 4));
    let mut reachable_mismatches: Vec<SetMismatch> = chain.iter().filter_map(|s| mismatch(&inst, s)).collect();
    reachable_mismatches.sort();
    Ok(CppReport {
        n,
        states: sweep.states,
        admissible_states: sweep.admissible,
        improving_escapes: sweep.escapes,
        steepest_escapes: sweep.steepest,
        rule_failures: sweep.failures,
        reachable_states: chain.len(),
        rule_chain_stop: stop,
        reachable_mismatches,
    })
}

pub fn verify_cpp_closure(n: usize, exec: Execution) -> Result<CppReport> {
    verify_cpp_closure_with(n, &CountingTables::standard(), exec)
}

/// Tables with `f(i1C, C)` zeroed, used to check that the sweep notices a
/// broken table.
pub fn corrupted_tables() -> CountingTables {
    let mut t = CountingTables::standard();
    t.set_pair(Symbol::I1C, Symbol::Carry, 0);
    t
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Divergence {
    /// Index in the state sequence (0 is the start).
    pub step: usize,
    #[serde(serialize_with = "as_text_opt")]
    pub steepest: Option<SymbolState>,
    #[serde(serialize_with = "as_text_opt")]
    pub rules: Option<SymbolState>,
    /// The last common state.
    #[serde(serialize_with = "as_text")]
    pub after: SymbolState,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LockstepReport {
    pub n: usize,
    #[serde(serialize_with = "as_text")]
    pub start: SymbolState,
    pub budget: usize,
    pub steepest_steps: usize,
    pub steepest_terminal: String,
    pub rule_steps: usize,
    pub rule_stop: RuleStop,
    /// First state where fail-on-tie steepest ascent hit a tie.
    pub tie: Option<String>,
    /// Number of leading states the two sequences share.
    pub agreement: usize,
    pub divergence: Option<Divergence>,
    /// Admissible states on the steepest path where the improving flips are
    /// not exactly the rule rewrites.
    pub neighborhood_mismatches: Vec<SetMismatch>,
    /// Steepest-path states outside the admissible set.
    pub inadmissible_visited: usize,
}

impl LockstepReport {
    pub fn sequences_agree(&self) -> bool {
        self.divergence.is_none() && self.tie.is_none() && !matches!(self.rule_stop, RuleStop::Ambiguous(_))
    }

    pub fn holds(&self) -> bool {
        self.sequences_agree() && self.neighborhood_mismatches.is_empty()
    }
}

fn symbol_trace(inst: &VcspInstance, start: &[u8], budget: usize) -> Result<(AscentTrace, Option<String>)> {
    match steepest_ascent(inst, start, TieBreakPolicy::FailOnTie, budget) {
        Ok(t) => Ok((t, None)),
        Err(Error::Tie { state, .. }) => {
            let t = steepest_ascent(inst, start, TieBreakPolicy::LowestIndex, budget)?;
            let tie_state = SymbolState::from_values(&digits(&state)).map_or(state, |s| s.to_string());
            Ok((t, Some(tie_state)))
        }
        Err(e) => Err(e),
    }
}

fn digits(text: &str) -> Vec<u8> {
    text.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect()
}

/// Runs fail-on-tie steepest ascent and the rule chain side by side from
/// `start`, each for at most `budget` moves.
pub fn verify_steepest_equals_rules_with(
    tables: &CountingTables,
    start: &SymbolState,
    budget: usize,
) -> Result<LockstepReport> {
    if !is_admissible(start) {
        return Err(Error::Domain(format!("start state {start} is not admissible")));
    }
    let n = start.len();
    let inst = make_counting_symbol_instance_with(n, tables)?;
    let (trace, tie) = symbol_trace(&inst, &start.to_values(), budget)?;
    let steepest: Vec<SymbolState> = trace
        .states()
        .map(|v| SymbolState::from_values(v).expect("symbol domain"))
        .collect();
    let (rules, _, rule_stop) = rule_chain(start, budget);

    let agreement = steepest.iter().zip(&rules).take_while(|(a, b)| a == b).count();
    let divergence = (agreement < steepest.len().max(rules.len())).then(|| Divergence {
        step: agreement,
        steepest: steepest.get(agreement).cloned(),
        rules: rules.get(agreement).cloned(),
        after: steepest[agreement - 1].clone(),
    });

    let mut neighborhood_mismatches = Vec::new();
    let mut inadmissible_visited = 0;
    for s in &steepest {
        if is_admissible(s) {
            neighborhood_mismatches.extend(mismatch(&inst, s));
        } else {
            inadmissible_visited += 1;
        }
    }
    Ok(LockstepReport {
        n,
        start: start.clone(),
        budget,
        steepest_steps: trace.num_steps(),
        steepest_terminal: trace.terminal.as_str().to_string(),
        rule_steps: rules.len() - 1,
        rule_stop,
        tie,
        agreement,
        divergence,
        neighborhood_mismatches,
        inadmissible_visited,
    })
}

pub fn verify_steepest_equals_rules(start: &SymbolState, budget: usize) -> Result<LockstepReport> {
    verify_steepest_equals_rules_with(&CountingTables::standard(), start, budget)
}

/// Step budget `2^(N+4)` used for the runs from 0^N.
pub fn default_budget(n: usize) -> usize {
    1usize << (n + 4)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BooleanLiftReport {
    pub n: usize,
    pub symbol_steps: usize,
    pub boolean_steps: usize,
    /// First Boolean step whose decoded state differs from the symbol trace
    /// (or does not decode at all).
    pub first_mismatch: Option<usize>,
    /// Every Boolean step flips exactly one bit.
    pub single_bit_steps: bool,
    pub same_terminal: bool,
}

impl BooleanLiftReport {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
            && self.single_bit_steps
            && self.same_terminal
            && self.symbol_steps == self.boolean_steps
    }
}

/// Steepest ascent on the Boolean encoding from `encode(0^N)`, decoded step
/// by step, against the symbol-level trace.
pub fn verify_boolean_lift(n: usize, budget: usize) -> Result<BooleanLiftReport> {
    let tables = CountingTables::standard();
    let sym = make_counting_symbol_instance_with(n, &tables)?;
    let boolean = make_counting_boolean_instance_with(n, &tables)?;
    let start = SymbolState::uniform(n, Symbol::Zero);
    let (sym_trace, _) = symbol_trace(&sym, &start.to_values(), budget)?;
    let bool_trace = match steepest_ascent(&boolean, &encode(&start), TieBreakPolicy::FailOnTie, budget) {
        Ok(t) => t,
        Err(Error::Tie { .. }) => steepest_ascent(&boolean, &encode(&start), TieBreakPolicy::LowestIndex, budget)?,
        Err(e) => return Err(e),
    };
    let sym_states: Vec<SymbolState> = sym_trace
        .states()
        .map(|v| SymbolState::from_values(v).expect("symbol domain"))
        .collect();
    let first_mismatch = bool_trace
        .states()
        .enumerate()
        .find(|(k, bits)| decode_state(bits).as_ref() != sym_states.get(*k))
        .map(|(k, _)| k)
        .or_else(|| (bool_trace.steps.len() < sym_states.len()).then_some(bool_trace.steps.len()));
    let single_bit_steps = bool_trace
        .states()
        .zip(bool_trace.states().skip(1))
        .all(|(a, b)| a.iter().zip(b).filter(|(x, y)| x != y).count() == 1);
    Ok(BooleanLiftReport {
        n,
        symbol_steps: sym_trace.num_steps(),
        boolean_steps: bool_trace.num_steps(),
        first_mismatch,
        single_bit_steps,
        same_terminal: sym_trace.terminal == bool_trace.terminal,
    })
}

fn as_text<S: serde::Serializer>(s: &SymbolState, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(s)
}

fn as_display<S: serde::Serializer>(a: &RuleApplication, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(a)
}

fn as_text_opt<S: serde::Serializer>(s: &Option<SymbolState>, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match s {
        Some(s) => ser.collect_str(s),
        None => ser.serialize_none(),
    }
}

fn as_text_list<S: serde::Serializer>(v: &[SymbolState], ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(v.iter().map(ToString::to_string))
}
