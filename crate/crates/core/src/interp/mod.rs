//! The interpretation of terms as linear hypergraphs.

pub mod axioms;

use crate::hypergraph::{is_isomorphic, Hypergraph};
use crate::ops;
use crate::term::{Signature, Term, TermError};

/// Maps a term to its graph by structural recursion.
pub fn interpret(t: &Term, sig: &Signature) -> Result<Hypergraph, TermError> {
    t.type_of(sig)?;
    Ok(build(t, sig))
}

fn build(t: &Term, sig: &Signature) -> Hypergraph {
    match t {
        Term::Gen(n) => ops::generator(n, sig).expect("checked by type_of"),
        Term::Id(w) => ops::identity(w),
        Term::Swap(m, n) => ops::swap(m, n),
        Term::Seq(a, b) => ops::compose(&build(a, sig), &build(b, sig)).expect("checked by type_of"),
        Term::Tensor(a, b) => ops::tensor(&build(a, sig), &build(b, sig)),
        Term::Trace(x, b) => ops::trace(x, &build(b, sig)).expect("checked by type_of"),
    }
}

/// Decides equality modulo the axioms of symmetric traced monoidal
/// categories by comparing interpretations up to isomorphism.
pub fn equal_mod_stmc(s: &Term, t: &Term, sig: &Signature) -> Result<bool, TermError> {
    let ts = s.type_of(sig)?;
    let tt = t.type_of(sig)?;
    if ts != tt {
        return Err(TermError::TypeMismatch {
            term: format!("{s} = {t}"),
            message: format!(
                "sides have types {} -> {} and {} -> {}",
                ts.0, ts.1, tt.0, tt.1
            ),
        });
    }
    Ok(is_isomorphic(&build(s, sig), &build(t, sig)))
}
