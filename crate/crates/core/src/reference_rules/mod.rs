//! Reference semantics for the counting landscape: admissible
//! configurations, the prioritised rewrite rules, and the oracles that
//! compare them with steepest ascent.

mod admissible;
mod arithmetic;
mod oracles;
mod rules;

pub use admissible::{classify, classify_written, is_admissible, AdmissibleClass, Family};
pub use arithmetic::{
    verify_rule_arithmetic, verify_rule_arithmetic_with, ArithmeticReport, ChainCheck, ConflictCheck, Relation,
};
pub use oracles::{
    corrupted_tables, default_budget, rule_chain, verify_boolean_lift, verify_cpp_closure, verify_cpp_closure_with,
    verify_steepest_equals_rules, verify_steepest_equals_rules_with, BooleanLiftReport, CppReport, Divergence,
    Escape, LockstepReport, RuleFailure, RuleFailureKind, RuleStop, SetMismatch, CLOSURE_LIMIT,
};
pub use rules::{applicable_rules, matching_rules, rule_successor, top_priority, RuleApplication, RuleId};
