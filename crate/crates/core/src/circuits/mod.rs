//! Digital circuits as a rewriting system: values from a finite lattice,
//! monotone gates, forks, joins, stubs and delays, with the Cartesian
//! structure supplied by forks and stubs.

mod eval;
mod lattice;
mod rules;

use thiserror::Error;

use crate::hypergraph::GraphError;
use crate::rewrite::RewriteError;
use crate::term::TermError;

pub use eval::{
    collect_garbage, evaluate, feedback_wires, project_delays, read_outputs, unfold_feedback, Evaluator, Outcome,
};
pub use lattice::{CircuitSignature, Gate, Value, ValueLattice, DELAY, FORK, JOIN, STUB};
pub use rules::{cartesian_rules, circuit_rules, copy, evaluation_rules, is_divergent, merge, permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CircuitError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown value `{value}`")]
    UnknownValue { line: usize, value: String },
    #[error("not a lattice: {0}")]
    NotALattice(String),
    #[error("gate `{gate}` is not monotone: {below} is below {above} but its output is not")]
    NotMonotone { gate: String, below: String, above: String },
    #[error("gate `{0}` does not list every input word")]
    IncompleteTable(String),
    #[error("`{0}` names more than one thing")]
    NameClash(String),
    #[error("circuit expects inputs {expected}, got {found} values")]
    TypeMismatch { expected: String, found: usize },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Term(#[from] TermError),
}
