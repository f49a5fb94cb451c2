//! Linear hypergraphs as a graphical language for symmetric traced monoidal
//! categories.
//!
//! Terms over a signature are interpreted as graphs ([`interp`]), graphs are
//! read back as terms ([`extract`]), two terms are equal modulo the
//! categorical axioms exactly when their graphs are isomorphic
//! ([`hypergraph::find_isomorphism`]), and graphs are rewritten by double
//! pushout ([`rewrite`]). [`circuits`] instantiates the rewriting engine with
//! the rules of digital circuits over a value lattice.

pub mod circuits;
pub mod extract;
pub mod hypergraph;
pub mod interp;
pub mod ops;
pub mod random;
pub mod rewrite;
pub mod term;
pub mod workbench;
