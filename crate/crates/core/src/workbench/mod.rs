//! File formats and the commands behind the `linhyp` binary.
//!
//! Each command reads its inputs from files, returns what it would print and
//! the process exit code. Exit codes: 0 success, 1 I/O or check failure,
//! 2 parse error, 3 type or well-formedness error, 4 step budget exhausted.

mod commands;
mod dot;
mod json;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::circuits::CircuitError;
use crate::extract::ExtractError;
use crate::hypergraph::GraphError;
use crate::rewrite::{RewriteError, Strategy, DEFAULT_MAX_STEPS};
use crate::term::TermError;

pub use commands::{
    cmd_axioms_check, cmd_evaluate, cmd_extract, cmd_interpret, cmd_iso, cmd_rewrite, parse_strategy, Output,
};
pub use dot::to_dot;
pub use json::{load, save, to_json};

#[derive(Debug, Error)]
pub enum WorkbenchError {
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("invalid graph file: {0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Extract(#[from] ExtractError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Circuit(#[from] CircuitError),
}

fn term_code(e: &TermError) -> i32 {
    match e {
        TermError::Syntax { .. } => 2,
        _ => 3,
    }
}

impl WorkbenchError {
    pub fn exit_code(&self) -> i32 {
        match self {
            WorkbenchError::Io { .. } => 1,
            WorkbenchError::Json(_) | WorkbenchError::Usage(_) => 2,
            WorkbenchError::Term(e) => term_code(e),
            WorkbenchError::Rewrite(RewriteError::Term(e)) => term_code(e),
            WorkbenchError::Circuit(CircuitError::Syntax { .. } | CircuitError::UnknownValue { .. }) => 2,
            WorkbenchError::Circuit(CircuitError::Term(e)) => term_code(e),
            WorkbenchError::Graph(_)
            | WorkbenchError::Extract(_)
            | WorkbenchError::Rewrite(_)
            | WorkbenchError::Circuit(_) => 3,
        }
    }
}

/// Settings shared by the commands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub max_steps: usize,
    pub strategy: Strategy,
    /// Renumber output graphs canonically so equal inputs give equal output.
    pub canonical: bool,
    pub seed: u64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_steps: DEFAULT_MAX_STEPS,
            strategy: Strategy::Deterministic,
            canonical: true,
            seed: 0,
        }
    }
}

pub(crate) fn read(path: &Path) -> Result<String, WorkbenchError> {
    std::fs::read_to_string(path).map_err(|e| WorkbenchError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

pub(crate) fn write(path: &Path, text: &str) -> Result<(), WorkbenchError> {
    std::fs::write(path, text).map_err(|e| WorkbenchError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}
