//! The equations of symmetric traced monoidal categories as executable
//! schemes, instantiated with random operands.

use std::fmt;

use rand::Rng;

use crate::random::{pad_cod, term_from};
use crate::term::{Signature, Term};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axiom {
    LeftIdentity,
    RightIdentity,
    Associativity,
    TensorUnit,
    TensorAssociativity,
    Bifunctoriality,
    SwapNaturality,
    SelfInverse,
    Hexagon,
    Tightening,
    Superposing,
    Yanking,
    Exchange,
}

impl Axiom {
    pub const ALL: [Axiom; 13] = [
        Axiom::LeftIdentity,
        Axiom::RightIdentity,
        Axiom::Associativity,
        Axiom::TensorUnit,
        Axiom::TensorAssociativity,
        Axiom::Bifunctoriality,
        Axiom::SwapNaturality,
        Axiom::SelfInverse,
        Axiom::Hexagon,
        Axiom::Tightening,
        Axiom::Superposing,
        Axiom::Yanking,
        Axiom::Exchange,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::LeftIdentity => "left identity",
            Axiom::RightIdentity => "right identity",
            Axiom::Associativity => "associativity",
            Axiom::TensorUnit => "tensor unit",
            Axiom::TensorAssociativity => "tensor associativity",
            Axiom::Bifunctoriality => "bifunctoriality",
            Axiom::SwapNaturality => "swap naturality",
            Axiom::SelfInverse => "self-inverse swap",
            Axiom::Hexagon => "hexagon",
            Axiom::Tightening => "tightening",
            Axiom::Superposing => "superposing",
            Axiom::Yanking => "yanking",
            Axiom::Exchange => "exchange",
        }
    }

    /// A random instance `(lhs, rhs)` over `sig`, which must contain a
    /// `0 → 1` generator for padding traced bodies.
    pub fn instance<R: Rng>(self, rng: &mut R, sig: &Signature, depth: usize) -> (Term, Term) {
        let width = |rng: &mut R| rng.gen_range(0..=2usize);
        let cod = |t: &Term| t.type_of(sig).expect("well typed").1.len();
        match self {
            Axiom::LeftIdentity => {
                let m = width(rng);
                let f = term_from(rng, sig, m, depth);
                (Term::id(m).seq(f.clone()), f)
            }
            Axiom::RightIdentity => {
                let m = width(rng);
                let f = term_from(rng, sig, m, depth);
                let n = cod(&f);
                (f.clone().seq(Term::id(n)), f)
            }
            Axiom::Associativity => {
                let m = width(rng);
                let f = term_from(rng, sig, m, depth);
                let g = term_from(rng, sig, cod(&f), depth);
                let h = term_from(rng, sig, cod(&g), depth);
                (
                    f.clone().seq(g.clone()).seq(h.clone()),
                    f.seq(g.seq(h)),
                )
            }
            Axiom::TensorUnit => {
                let m = width(rng);
                let f = term_from(rng, sig, m, depth);
                if rng.gen_bool(0.5) {
                    (f.clone().tensor(Term::id(0)), f)
                } else {
                    (Term::id(0).tensor(f.clone()), f)
                }
            }
            Axiom::TensorAssociativity => {
                let f = operand(rng, sig, depth);
                let g = operand(rng, sig, depth);
                let h = operand(rng, sig, depth);
                (
                    f.clone().tensor(g.clone()).tensor(h.clone()),
                    f.tensor(g.tensor(h)),
                )
            }
            Axiom::Bifunctoriality => {
                let f = operand(rng, sig, depth);
                let g = operand(rng, sig, depth);
                let h = term_from(rng, sig, cod(&f), depth);
                let k = term_from(rng, sig, cod(&g), depth);
                (
                    f.clone().tensor(g.clone()).seq(h.clone().tensor(k.clone())),
                    f.seq(h).tensor(g.seq(k)),
                )
            }
            Axiom::SwapNaturality => {
                let (m, p) = (width(rng), width(rng));
                let f = term_from(rng, sig, m, depth);
                let g = term_from(rng, sig, p, depth);
                let (n, q) = (cod(&f), cod(&g));
                (
                    f.clone().tensor(g.clone()).seq(Term::swap(n, q)),
                    Term::swap(m, p).seq(g.tensor(f)),
                )
            }
            Axiom::SelfInverse => {
                let (m, n) = (width(rng), width(rng));
                (Term::swap(m, n).seq(Term::swap(n, m)), Term::id(m + n))
            }
            Axiom::Hexagon => {
                let (m, n, p) = (width(rng), width(rng), width(rng));
                (
                    Term::swap(m, n)
                        .tensor(Term::id(p))
                        .seq(Term::id(n).tensor(Term::swap(m, p))),
                    Term::swap(m, n + p),
                )
            }
            Axiom::Tightening => {
                let x = rng.gen_range(1..=2usize);
                let g = operand(rng, sig, depth);
                let m = cod(&g);
                let f = pad_cod(term_from(rng, sig, x + m, depth), sig, x);
                let n = cod(&f) - x;
                let h = term_from(rng, sig, n, depth);
                let lhs = Term::trace(
                    x,
                    Term::id(x)
                        .tensor(g.clone())
                        .seq(f.clone())
                        .seq(Term::id(x).tensor(h.clone())),
                );
                (lhs, g.seq(Term::trace(x, f)).seq(h))
            }
            Axiom::Superposing => {
                let x = rng.gen_range(1..=2usize);
                let m = width(rng);
                let f = pad_cod(term_from(rng, sig, x + m, depth), sig, x);
                let g = operand(rng, sig, depth);
                (
                    Term::trace(x, f.clone().tensor(g.clone())),
                    Term::trace(x, f).tensor(g),
                )
            }
            Axiom::Yanking => {
                let x = rng.gen_range(0..=3usize);
                (Term::trace(x, Term::swap(x, x)), Term::id(x))
            }
            Axiom::Exchange => {
                let (x, y) = (rng.gen_range(1..=2usize), rng.gen_range(1..=2usize));
                let m = width(rng);
                let f = pad_cod(term_from(rng, sig, x + y + m, depth), sig, x + y);
                let n = cod(&f) - x - y;
                let lhs = Term::trace(y, Term::trace(x, f.clone()));
                let conj = Term::swap(y, x)
                    .tensor(Term::id(m))
                    .seq(f)
                    .seq(Term::swap(x, y).tensor(Term::id(n)));
                let rhs = Term::trace(x, Term::trace(y, conj));
                (lhs, rhs)
            }
        }
    }
}

/// A random operand with a domain of zero to two wires.
fn operand<R: Rng>(rng: &mut R, sig: &Signature, depth: usize) -> Term {
    let w = rng.gen_range(0..=2usize);
    term_from(rng, sig, w, depth)
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
