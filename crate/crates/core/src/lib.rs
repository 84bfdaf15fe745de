//! Maximum edge counts of planar graphs with bounded degree and bounded
//! matching number, with the graph machinery needed to certify and
//! independently verify them.

pub mod bounds;
pub mod canon;
pub mod coloring;
pub mod constructions;
pub mod graph;
pub mod io;
pub mod matching;
pub mod oracle;
pub mod planarity;
