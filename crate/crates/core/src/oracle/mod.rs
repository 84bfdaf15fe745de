//! Independent verification of the edge bound by exhaustive enumeration.
//!
//! Connected planar graphs with Δ < d are generated up to a vertex budget,
//! the best component per matching number is tabulated, and components are
//! recombined by an unbounded knapsack over the matching budget `nu - 1`.
//! The bound's closed form is used only to judge the result.

mod checkpoint;
pub mod enumerate;
pub mod realize;
pub mod table;
pub mod verify;

use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub use enumerate::{enumerate_connected, EnumerationSpec, Node, MAX_ENUMERATION_ORDER};
pub use realize::{is_graphical, realize_degree_sequence_planar, Realization};
pub use table::{combine, component_cap, is_exhaustive, ComponentRecord, ComponentTable};
pub use verify::{
    component_table, component_table_with, verdict_from_table, verify_theorem, verify_theorem_with,
    RunOptions, Verdict, VerdictStatus,
};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("n_max = {n_max} exceeds the enumeration budget of {limit} vertices")]
    BudgetExceeded { n_max: usize, limit: usize },
    #[error("checkpoint {}: {source}", path.display())]
    CheckpointIo { path: PathBuf, source: io::Error },
    #[error("checkpoint {}: {reason}", path.display())]
    CheckpointInvalid { path: PathBuf, reason: String },
}
