use std::fmt;

use crate::graph::Vertex;

/// A text-format error pinned to the 1-based line where it was detected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),

    #[error("input is not a {class} graph: {reason}")]
    WrongClass { class: &'static str, reason: String },

    #[error("oracle refuses graphs with {n} vertices (cap is {cap})")]
    OracleCap { n: usize, cap: usize },

    /// No branching rule matched a non-empty reduced state.
    #[error("{ruleset}: no rule applies to the reduced state {state}")]
    Stuck { ruleset: &'static str, state: String },

    #[error("vertex {0} is not in the given set")]
    NotInSet(Vertex),

    #[error("invalid branching vector: {0}")]
    Vector(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
