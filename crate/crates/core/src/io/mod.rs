//! Interchange formats: graph6, edge lists, and report documents.

pub mod edgelist;
pub mod graph6;
pub mod report;

pub use report::{records_from_csv, Record, Summary, Verdict, VerificationReport};

pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};
