//! Exact monophonic and general position numbers of small graphs, the
//! extremal graph families that realise them, and exhaustive searches over
//! all connected graphs of a given order.
//!
//! ```
//! use graphpos::{families, position};
//!
//! let g = families::pagoda(4).unwrap();
//! assert_eq!(g.order(), 13);
//! assert_eq!(position::mp(&g).unwrap(), 2);
//! assert_eq!(position::gp(&g).unwrap(), 8);
//! ```

pub mod canon;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod metric;
pub mod position;
pub mod report;
pub mod search;
mod triple;

pub use canon::{canonical_code, CanonicalCode};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, serialize_graph6};
pub use metric::{diameter, distance_matrix, Diameter, DistanceMatrix};
pub use position::{
    brute_force_position_number, in_position, position_number, Certificate, PositionKind,
    Violation, Witness,
};

/// Version string stored in persisted search records.
pub const ENGINE_VERSION: &str = concat!("graphpos ", env!("CARGO_PKG_VERSION"));
