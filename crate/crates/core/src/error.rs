// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the core toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("operation requires an unweighted graph")]
    WeightedInput,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph on {0} vertices is too large for brute-force isomorphism (max 8)")]
    TooLarge(usize),
    #[error("{what} = {value} out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: &'static str,
    },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("nullifier basis is not Lagrangian (isotropy or rank fails)")]
    NotLagrangian,
    #[error("mode count mismatch: {0} vs {1}")]
    ModeMismatch(usize, usize),
    #[error("macro expansion failed: {0}")]
    MacroContext(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
