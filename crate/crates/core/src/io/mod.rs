//! Serialization: graph6, DOT and the JSON reports.

pub mod dot;
pub mod graph6;
pub mod report;

pub use dot::dot_export;
pub use graph6::{graph6_decode, graph6_encode, Graph6Error};
pub use report::{
    certify, coloring_report, realize_report, table_report, CertificateReport, ColoringReport,
    GraphReport, RealizeOutcome, RealizeReport, RecordReport, TableReport,
};
