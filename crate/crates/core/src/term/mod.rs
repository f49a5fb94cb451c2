//! Signatures and terms of freely generated symmetric traced monoidal
//! categories.
//!
//! Terms are plain immutable values. Two terms are *syntactically* equal when
//! they compare equal with `==`; whether they denote the same morphism is a
//! question for [`crate::interp::equal_mod_stmc`], which compares their
//! hypergraph interpretations up to isomorphism.

mod normal;
mod parse;
mod word;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use normal::{global_trace_form, stage};
pub use parse::{parse_signature, parse_term, parse_term_unchecked};
pub(crate) use normal::pad;
pub(crate) use parse::relocate;
pub use word::{Object, Word};

/// Words that cannot be used as generator names.
pub const RESERVED: &[&str] = &["id", "swap", "tr"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("type mismatch in `{term}`: {message}")]
    TypeMismatch { term: String, message: String },
    #[error("term contains a trace: `{0}`")]
    ContainsTrace(String),
    #[error("generator `{0}` is declared twice")]
    DuplicateGenerator(String),
    #[error("`{0}` is a reserved word and cannot name a generator")]
    ReservedName(String),
    #[error("object `{object}` used by `{generator}` is not declared")]
    UndeclaredObject { generator: String, object: String },
}

/// Domain and codomain of a generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenType {
    pub dom: Word,
    pub cod: Word,
}

/// Generator names with their types, plus the declared object labels when
/// the signature is generalised beyond plain PROPs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    generators: BTreeMap<String, GenType>,
    objects: Option<BTreeSet<String>>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// A generalised signature over the given object labels.
    pub fn with_objects<I, S>(objects: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Signature {
            generators: BTreeMap::new(),
            objects: Some(objects.into_iter().map(Into::into).collect()),
        }
    }

    pub fn add(&mut self, name: &str, dom: Word, cod: Word) -> Result<(), TermError> {
        if RESERVED.contains(&name) {
            return Err(TermError::ReservedName(name.to_string()));
        }
        if self.generators.contains_key(name) {
            return Err(TermError::DuplicateGenerator(name.to_string()));
        }
        for obj in dom.objects().iter().chain(cod.objects()) {
            if let Object::Named(label) = obj {
                let declared = self
                    .objects
                    .as_ref()
                    .is_some_and(|objs| objs.contains(label.as_ref()));
                if !declared {
                    return Err(TermError::UndeclaredObject {
                        generator: name.to_string(),
                        object: label.to_string(),
                    });
                }
            }
        }
        self.generators.insert(name.to_string(), GenType { dom, cod });
        Ok(())
    }

    /// Builder-style [`Signature::add`] for plain arities. Panics on error.
    pub fn with(mut self, name: &str, dom: usize, cod: usize) -> Self {
        self.add(name, Word::n(dom), Word::n(cod))
            .expect("invalid generator");
        self
    }

    pub fn get(&self, name: &str) -> Option<&GenType> {
        self.generators.get(name)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.generators.contains_key(name)
    }

    pub fn generators(&self) -> impl Iterator<Item = (&str, &GenType)> {
        self.generators.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn objects(&self) -> Option<&BTreeSet<String>> {
        self.objects.as_ref()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Merges `other` into `self`, rejecting clashing generator names.
    pub fn extend(&mut self, other: &Signature) -> Result<(), TermError> {
        if let Some(objs) = &other.objects {
            self.objects
                .get_or_insert_with(BTreeSet::new)
                .extend(objs.iter().cloned());
        }
        for (name, ty) in &other.generators {
            self.add(name, ty.dom.clone(), ty.cod.clone())?;
        }
        Ok(())
    }
}

/// A term of the free symmetric traced monoidal category over a signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(Arc<str>),
    Id(Word),
    Swap(Word, Word),
    Seq(Box<Term>, Box<Term>),
    Tensor(Box<Term>, Box<Term>),
    Trace(Word, Box<Term>),
}

impl Term {
    pub fn gen(name: &str) -> Term {
        Term::Gen(Arc::from(name))
    }

    pub fn id(w: impl Into<Word>) -> Term {
        Term::Id(w.into())
    }

    pub fn swap(m: impl Into<Word>, n: impl Into<Word>) -> Term {
        Term::Swap(m.into(), n.into())
    }

    pub fn seq(self, next: Term) -> Term {
        Term::Seq(Box::new(self), Box::new(next))
    }

    pub fn tensor(self, below: Term) -> Term {
        Term::Tensor(Box::new(self), Box::new(below))
    }

    pub fn trace(x: impl Into<Word>, body: Term) -> Term {
        Term::Trace(x.into(), Box::new(body))
    }

    /// Left-nested composite of `terms`; `Id(dom)` when empty.
    pub fn seq_all<I: IntoIterator<Item = Term>>(dom: Word, terms: I) -> Term {
        terms
            .into_iter()
            .reduce(Term::seq)
            .unwrap_or(Term::Id(dom))
    }

    /// Left-nested tensor of `terms`; `Id(0)` when empty.
    pub fn tensor_all<I: IntoIterator<Item = Term>>(terms: I) -> Term {
        terms
            .into_iter()
            .reduce(Term::tensor)
            .unwrap_or(Term::Id(Word::empty()))
    }

    pub fn has_trace(&self) -> bool {
        match self {
            Term::Gen(_) | Term::Id(_) | Term::Swap(..) => false,
            Term::Seq(a, b) | Term::Tensor(a, b) => a.has_trace() || b.has_trace(),
            Term::Trace(..) => true,
        }
    }

    /// True when the term is built from identities and symmetries only.
    pub fn is_structural(&self) -> bool {
        match self {
            Term::Gen(_) | Term::Trace(..) => false,
            Term::Id(_) | Term::Swap(..) => true,
            Term::Seq(a, b) | Term::Tensor(a, b) => a.is_structural() && b.is_structural(),
        }
    }

    /// Number of constructor nodes.
    pub fn size(&self) -> usize {
        match self {
            Term::Gen(_) | Term::Id(_) | Term::Swap(..) => 1,
            Term::Seq(a, b) | Term::Tensor(a, b) => 1 + a.size() + b.size(),
            Term::Trace(_, b) => 1 + b.size(),
        }
    }

    /// Generator occurrences, left to right.
    pub fn generators(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_generators(&mut out);
        out
    }

    fn collect_generators<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Term::Gen(n) => out.push(n),
            Term::Id(_) | Term::Swap(..) => {}
            Term::Seq(a, b) | Term::Tensor(a, b) => {
                a.collect_generators(out);
                b.collect_generators(out);
            }
            Term::Trace(_, b) => b.collect_generators(out),
        }
    }

    pub fn type_of(&self, sig: &Signature) -> Result<(Word, Word), TermError> {
        type_of(self, sig)
    }

    /// Drops identities, empty traces and symmetries with an empty side.
    /// The result denotes the same morphism.
    pub fn simplify(&self) -> Term {
        match self {
            Term::Gen(_) | Term::Id(_) => self.clone(),
            Term::Swap(m, n) if m.is_empty() || n.is_empty() => Term::Id(m.concat(n)),
            Term::Swap(..) => self.clone(),
            Term::Seq(a, b) => match (a.simplify(), b.simplify()) {
                (Term::Id(_), b) => b,
                (a, Term::Id(_)) => a,
                (a, b) => a.seq(b),
            },
            Term::Tensor(a, b) => match (a.simplify(), b.simplify()) {
                (Term::Id(x), Term::Id(y)) => Term::Id(x.concat(&y)),
                (Term::Id(x), b) if x.is_empty() => b,
                (a, Term::Id(y)) if y.is_empty() => a,
                (a, b) => a.tensor(b),
            },
            Term::Trace(x, b) if x.is_empty() => b.simplify(),
            Term::Trace(x, b) => Term::Trace(x.clone(), Box::new(b.simplify())),
        }
    }
}

/// Computes `(dom, cod)` compositionally.
pub fn type_of(t: &Term, sig: &Signature) -> Result<(Word, Word), TermError> {
    match t {
        Term::Gen(name) => sig
            .get(name)
            .map(|ty| (ty.dom.clone(), ty.cod.clone()))
            .ok_or_else(|| TermError::UnknownGenerator(name.to_string())),
        Term::Id(w) => Ok((w.clone(), w.clone())),
        Term::Swap(m, n) => Ok((m.concat(n), n.concat(m))),
        Term::Seq(a, b) => {
            let (da, ca) = type_of(a, sig)?;
            let (db, cb) = type_of(b, sig)?;
            if ca != db {
                return Err(TermError::TypeMismatch {
                    term: t.to_string(),
                    message: format!("codomain {ca} does not match domain {db}"),
                });
            }
            Ok((da, cb))
        }
        Term::Tensor(a, b) => {
            let (da, ca) = type_of(a, sig)?;
            let (db, cb) = type_of(b, sig)?;
            Ok((da.concat(&db), ca.concat(&cb)))
        }
        Term::Trace(x, body) => {
            let (d, c) = type_of(body, sig)?;
            match (d.strip_prefix(x), c.strip_prefix(x)) {
                (Some(d), Some(c)) => Ok((d, c)),
                _ => Err(TermError::TypeMismatch {
                    term: t.to_string(),
                    message: format!("cannot trace {x} out of {d} -> {c}"),
                }),
            }
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Seq,
    Tensor,
    Atom,
}

impl Term {
    fn prec(&self) -> Prec {
        match self {
            Term::Seq(..) => Prec::Seq,
            Term::Tensor(..) => Prec::Tensor,
            _ => Prec::Atom,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, at: Prec) -> fmt::Result {
        if self.prec() < at {
            f.write_str("(")?;
            self.fmt_at(f, Prec::Seq)?;
            return f.write_str(")");
        }
        match self {
            Term::Gen(n) => f.write_str(n),
            Term::Id(w) => write!(f, "id {w}"),
            Term::Swap(m, n) => write!(f, "swap {m} {n}"),
            Term::Seq(a, b) => {
                a.fmt_at(f, Prec::Seq)?;
                f.write_str(" ; ")?;
                b.fmt_at(f, Prec::Tensor)
            }
            Term::Tensor(a, b) => {
                a.fmt_at(f, Prec::Tensor)?;
                f.write_str(" * ")?;
                b.fmt_at(f, Prec::Atom)
            }
            Term::Trace(x, b) => {
                write!(f, "tr {x} (")?;
                b.fmt_at(f, Prec::Seq)?;
                f.write_str(")")
            }
        }
    }
}

/// Renders in the concrete syntax accepted by [`parse_term`].
impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, Prec::Seq)
    }
}
