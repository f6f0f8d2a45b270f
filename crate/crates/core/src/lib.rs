//! Hard fitness landscapes for steepest-ascent local search.
//!
//! The crate builds the landscapes (a recursive "winding" landscape, a
//! pairs landscape with many local maxima, and a bounded-treewidth counting
//! VCSP over a ten-letter symbol alphabet together with its Boolean
//! arity-8 encoding), runs deterministic steepest ascent on them, and ships
//! exhaustive oracles that check the structural claims made about them.
//!
//! Module map:
//!
//! * [`vcsp`]: table-based valued constraint satisfaction instances, exact
//!   evaluation, delta evaluation and the instance document format.
//! * [`landscapes`]: generators for every landscape.
//! * [`search`]: steepest ascent, first-improvement ascent, traces.
//! * [`analysis`]: gradients, flow-change degree bounds, path decompositions,
//!   local-optima censuses.
//! * [`reference_rules`]: admissible configurations, the prioritised
//!   transition rules and the verification sweeps built on them.

pub mod analysis;
pub mod error;
pub mod exec;
pub mod fitness;
pub mod graph;
pub mod landscapes;
pub mod reference_rules;
pub mod search;
pub mod vcsp;

pub use error::{Error, Result};
pub use exec::Execution;
pub use fitness::Fitness;
pub use graph::ConstraintGraph;
pub use search::{AscentTrace, Landscape, Terminal, TieBreakPolicy};
pub use vcsp::{Assignment, MoveRule, SoftConstraint, VcspInstance};
