//! Normal-form helpers: staging trace-free terms into single-generator
//! slices and hoisting every trace to a single outermost one.

use super::{type_of, Signature, Term, TermError, Word};

/// `Id(left) ⊗ k ⊗ Id(right)`, omitting empty identities.
pub(crate) fn pad(left: &Word, k: Term, right: &Word) -> Term {
    let mut t = k;
    if !left.is_empty() {
        t = Term::Id(left.clone()).tensor(t);
    }
    if !right.is_empty() {
        t = t.tensor(Term::Id(right.clone()));
    }
    t
}

struct Slice {
    left: Word,
    body: Term,
    right: Word,
}

fn slices(t: &Term, sig: &Signature) -> Result<(Word, Word, Vec<Slice>), TermError> {
    match t {
        Term::Gen(_) => {
            let (d, c) = type_of(t, sig)?;
            let s = Slice {
                left: Word::empty(),
                body: t.clone(),
                right: Word::empty(),
            };
            Ok((d, c, vec![s]))
        }
        Term::Id(w) => Ok((w.clone(), w.clone(), Vec::new())),
        Term::Swap(m, n) => {
            let (d, c) = (m.concat(n), n.concat(m));
            if m.is_empty() || n.is_empty() {
                return Ok((d, c, Vec::new()));
            }
            let s = Slice {
                left: Word::empty(),
                body: t.clone(),
                right: Word::empty(),
            };
            Ok((d, c, vec![s]))
        }
        Term::Seq(a, b) => {
            let (da, ca, mut sa) = slices(a, sig)?;
            let (db, cb, sb) = slices(b, sig)?;
            if ca != db {
                return Err(TermError::TypeMismatch {
                    term: t.to_string(),
                    message: format!("codomain {ca} does not match domain {db}"),
                });
            }
            sa.extend(sb);
            Ok((da, cb, sa))
        }
        Term::Tensor(a, b) => {
            let (da, ca, sa) = slices(a, sig)?;
            let (db, cb, sb) = slices(b, sig)?;
            let mut out = Vec::with_capacity(sa.len() + sb.len());
            for s in sa {
                out.push(Slice {
                    right: s.right.concat(&db),
                    ..s
                });
            }
            for s in sb {
                out.push(Slice {
                    left: ca.concat(&s.left),
                    ..s
                });
            }
            Ok((da.concat(&db), ca.concat(&cb), out))
        }
        Term::Trace(..) => Err(TermError::ContainsTrace(t.to_string())),
    }
}

/// Rewrites a trace-free term as a composite of slices `Id ⊗ k ⊗ Id`, each
/// holding exactly one generator or non-trivial symmetry.
///
/// A term with no such component stages to the identity on its domain.
pub fn stage(t: &Term, sig: &Signature) -> Result<Term, TermError> {
    let (dom, _, ss) = slices(t, sig)?;
    Ok(Term::seq_all(
        dom,
        ss.into_iter().map(|s| pad(&s.left, s.body, &s.right)),
    ))
}

struct Hoisted {
    x: Word,
    body: Term,
    dom: Word,
    cod: Word,
}

fn hoist(t: &Term, sig: &Signature) -> Result<Hoisted, TermError> {
    match t {
        Term::Gen(_) | Term::Id(_) | Term::Swap(..) => {
            let (dom, cod) = type_of(t, sig)?;
            Ok(Hoisted {
                x: Word::empty(),
                body: t.clone(),
                dom,
                cod,
            })
        }
        Term::Seq(a, b) => {
            let ha = hoist(a, sig)?;
            let hb = hoist(b, sig)?;
            if ha.cod != hb.dom {
                return Err(TermError::TypeMismatch {
                    term: t.to_string(),
                    message: format!("codomain {} does not match domain {}", ha.cod, hb.dom),
                });
            }
            let (xa, xb, mid) = (&ha.x, &hb.x, &ha.cod);
            let body = match (xa.is_empty(), xb.is_empty()) {
                (true, true) => ha.body.seq(hb.body),
                (true, false) => pad(xb, ha.body, &Word::empty()).seq(hb.body),
                (false, true) => ha.body.seq(pad(xa, hb.body, &Word::empty())),
                (false, false) => {
                    let e = Word::empty();
                    pad(xa, Term::Swap(xb.clone(), ha.dom.clone()), &e)
                        .seq(pad(&e, ha.body, xb))
                        .seq(pad(xa, Term::Swap(mid.clone(), xb.clone()), &e))
                        .seq(pad(xa, hb.body, &e))
                }
            };
            Ok(Hoisted {
                x: xa.concat(xb),
                body,
                dom: ha.dom,
                cod: hb.cod,
            })
        }
        Term::Tensor(a, b) => {
            let ha = hoist(a, sig)?;
            let hb = hoist(b, sig)?;
            let (xa, xb) = (&ha.x, &hb.x);
            let body = if xb.is_empty() {
                ha.body.tensor(hb.body)
            } else {
                pad(xa, Term::Swap(xb.clone(), ha.dom.clone()), &hb.dom)
                    .seq(ha.body.tensor(hb.body))
                    .seq(pad(xa, Term::Swap(ha.cod.clone(), xb.clone()), &hb.cod))
            };
            Ok(Hoisted {
                x: xa.concat(xb),
                body,
                dom: ha.dom.concat(&hb.dom),
                cod: ha.cod.concat(&hb.cod),
            })
        }
        Term::Trace(x, f) => {
            let hf = hoist(f, sig)?;
            match (hf.dom.strip_prefix(x), hf.cod.strip_prefix(x)) {
                (Some(dom), Some(cod)) => Ok(Hoisted {
                    x: hf.x.concat(x),
                    body: hf.body,
                    dom,
                    cod,
                }),
                _ => Err(TermError::TypeMismatch {
                    term: t.to_string(),
                    message: format!("cannot trace {x} out of {} -> {}", hf.dom, hf.cod),
                }),
            }
        }
    }
}

/// Returns `(x, body)` with `body` trace-free and `Trace(x, body)` equal to
/// `t` modulo the traced monoidal equations.
pub fn global_trace_form(t: &Term, sig: &Signature) -> Result<(Word, Term), TermError> {
    let h = hoist(t, sig)?;
    Ok((h.x, h.body))
}
