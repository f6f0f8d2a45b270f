//! Landscape generators: the multimodal pairs example, recursive winding
//! landscapes, and the counting VCSP with its Boolean encoding.

mod counting;
mod pairs;
pub mod symbols;
mod winding;

pub use counting::{
    make_counting_boolean_instance, make_counting_boolean_instance_with, make_counting_symbol_instance,
    make_counting_symbol_instance_with, CountingTables,
};
pub use pairs::make_pairs_instance;
pub use symbols::{decode, decode_block, decode_state, encode, Symbol, SymbolState};
pub use winding::{StepSchedule, WindingLandscape};
