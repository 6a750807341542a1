//! Enumeration, counting and verification of minimal Roman dominating functions.

pub mod branch;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod generate;
pub mod graph;
pub mod interval;
pub mod mc;
pub mod oracle;
pub mod paths;
pub mod rdf;
pub mod recognize;

pub use error::{Error, ParseError, Result};
pub use graph::{parse_edge_list, Graph, Vertex};
pub use interval::{graph_from_intervals, parse_intervals, Interval, IntervalRepresentation};
pub use rdf::{from_v2, is_minimal_rdf, is_rdf, RomanFunction};
