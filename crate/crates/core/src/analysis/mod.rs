//! Gradient and flow-change degree bounds, path decompositions of
//! constraint graphs, and exhaustive local-optima censuses.

mod census;
mod gradient;
mod width;

pub use census::{local_optima_census, state_at, state_count, Census};
pub use gradient::{
    degree_bound_report, flow_change_norm, gradient, gradient_by_evaluation, odd_entries_changed_below,
    origin_gradient_formula, peak_gradient_formula, winding_peak_pairs, DegreeBoundReport, PairBound,
};
pub use width::{
    bag_sets, is_path_decomposition, lexicographic_order, path_decomposition, pathwidth_upper_bound,
    treewidth_exact, EXACT_TREEWIDTH_LIMIT,
};
