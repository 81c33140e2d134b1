//! Random instances and the hardness reductions with their forward witnesses.

mod random;
mod reductions;
mod sources;
mod vizing;

pub use random::gen_random;
pub use reductions::*;
pub use sources::{
    emit_dimacs, emit_static_graph, parse_dimacs, parse_static_graph, CnfFormula, SourceError, SourceInstance,
};
pub use vizing::vizing_edge_coloring;
