//! Exact and parameterized algorithms for timeline cover and timeline
//! domination problems on temporal graphs.

pub mod error;
pub mod generators;
pub mod graph;
pub mod kernel;
pub mod oracle;
pub mod branching;
pub mod color_coding;
pub mod config_ilp;
pub mod dp_vimw;
pub mod params;
pub mod timeline;

pub use error::SolveError;
pub use graph::{Edge, GraphError, StaticGraph, Step, TemporalGraph, Vertex};
pub use timeline::{
    verify, ActivityInterval, ProblemInstance, ProblemKind, Timeline, VerificationReport,
};
