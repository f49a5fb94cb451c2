//! Seeded generators of random terms and graphs over a small fixed
//! signature, used by the property suites and the `axioms-check` command.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::hypergraph::{EdgeLabel, Hypergraph, Port};
use crate::term::{Object, Signature, Term, Word};

/// `f:1→1, g:1→2, h:2→2, j:2→1, u:0→1, k:1→0`.
pub fn signature() -> Signature {
    Signature::new()
        .with("f", 1, 1)
        .with("g", 1, 2)
        .with("h", 2, 2)
        .with("j", 2, 1)
        .with("u", 0, 1)
        .with("k", 1, 0)
}

const WIDE: usize = 6;

/// A random generator whose domain is `n` wires, if the signature has one.
fn generator_with_dom<R: Rng>(rng: &mut R, sig: &Signature, n: usize) -> Option<Term> {
    let fits: Vec<&str> = sig
        .generators()
        .filter(|(_, ty)| ty.dom.len() == n && ty.dom.is_plain())
        .map(|(name, _)| name)
        .collect();
    fits.choose(rng).map(|n| Term::gen(n))
}

/// A random plain term with domain `dom` (a number of wires) and nesting
/// depth at most `depth`.
pub fn term_from<R: Rng>(rng: &mut R, sig: &Signature, dom: usize, depth: usize) -> Term {
    let leaf = depth == 0 || rng.gen_bool(0.25);
    if leaf {
        return leaf_from(rng, sig, dom);
    }
    match rng.gen_range(0..10) {
        0..=3 => {
            let a = term_from(rng, sig, dom, depth - 1);
            let mid = a.type_of(sig).expect("well typed").1.len();
            let b = term_from(rng, sig, mid, depth - 1);
            a.seq(b)
        }
        4..=7 => {
            let k = rng.gen_range(0..=dom);
            let a = term_from(rng, sig, k, depth - 1);
            let b = term_from(rng, sig, dom - k, depth - 1);
            a.tensor(b)
        }
        _ => {
            let x = rng.gen_range(1..=2);
            let body = term_from(rng, sig, x + dom, depth - 1);
            Term::trace(x, pad_cod(body, sig, x))
        }
    }
}

fn leaf_from<R: Rng>(rng: &mut R, sig: &Signature, dom: usize) -> Term {
    let choice = rng.gen_range(0..10);
    if choice < 2 {
        return Term::id(dom);
    }
    if choice < 4 && dom >= 2 {
        let k = rng.gen_range(1..dom);
        return Term::swap(k, dom - k);
    }
    // Apply one generator somewhere inside the identity on `dom`, preferring
    // generators that shrink wide terms.
    let mut arities: Vec<usize> = (0..=dom.min(2)).collect();
    if dom >= WIDE {
        arities.retain(|&a| a >= 1);
    }
    let a = *arities.choose(rng).expect("non-empty");
    let g = generator_with_dom(rng, sig, a).unwrap_or_else(|| Term::id(a));
    let pre = rng.gen_range(0..=dom - a);
    let post = dom - a - pre;
    let mut t = g;
    if pre > 0 {
        t = Term::id(pre).tensor(t);
    }
    if post > 0 {
        t = t.tensor(Term::id(post));
    }
    t
}

/// Extends the codomain with unit generators until it has at least `need`
/// wires. Requires a generator of type `0 → 1`, as in [`signature`].
pub fn pad_cod(t: Term, sig: &Signature, need: usize) -> Term {
    let have = t.type_of(sig).expect("well typed").1.len();
    if have >= need {
        return t;
    }
    let unit = sig
        .generators()
        .find(|(_, ty)| ty.dom.is_empty() && ty.cod.len() == 1)
        .map(|(n, _)| n.to_string())
        .expect("signature has a 0 -> 1 generator");
    (have..need).fold(t, |t, _| t.tensor(Term::gen(&unit)))
}

/// A random well-typed plain term of nesting depth at most `depth`.
pub fn term<R: Rng>(rng: &mut R, sig: &Signature, depth: usize) -> Term {
    let dom = rng.gen_range(0..=3);
    term_from(rng, sig, dom, depth)
}

/// A random valid plain graph with at most `max_edges` edges and at most
/// `max_vertices` vertices, built directly rather than from a term.
///
/// Interface sizes, port orders and the wiring are all drawn at random, so
/// the graphs include closed loops, bare wires and arbitrary crossings.
pub fn graph<R: Rng>(rng: &mut R, sig: &Signature, max_edges: usize, max_vertices: usize) -> Hypergraph {
    let gens: Vec<(String, Word, Word)> = sig
        .generators()
        .filter(|(_, ty)| ty.dom.is_plain() && ty.cod.is_plain())
        .map(|(n, ty)| (n.to_string(), ty.dom.clone(), ty.cod.clone()))
        .collect();
    let half = max_vertices / 2;
    loop {
        let ne = rng.gen_range(0..=max_edges);
        let chosen: Vec<&(String, Word, Word)> = (0..ne).map(|_| gens.choose(rng).expect("signature")).collect();
        let doms: usize = chosen.iter().map(|g| g.1.len()).sum();
        let cods: usize = chosen.iter().map(|g| g.2.len()).sum();
        let extra = rng.gen_range(0..=2);
        let inputs = doms.saturating_sub(cods) + extra;
        let wires = inputs + cods;
        if wires > half {
            continue;
        }
        let outputs = wires - doms;

        let mut h = Hypergraph::new();
        let mut tports = vec![Port::Interface; inputs];
        let mut sports = Vec::new();
        for (name, dom, cod) in &chosen {
            let e = h.push_edge(EdgeLabel::generator(name, dom.clone(), cod.clone()));
            tports.extend(std::iter::repeat_n(Port::Edge(e), cod.len()));
            sports.extend(std::iter::repeat_n(Port::Edge(e), dom.len()));
        }
        sports.extend(std::iter::repeat_n(Port::Interface, outputs));
        tports.shuffle(rng);
        sports.shuffle(rng);
        let ts: Vec<_> = tports.into_iter().map(|p| h.push_target(p, Object::Wire)).collect();
        let mut ss: Vec<_> = sports.into_iter().map(|p| h.push_source(p, Object::Wire)).collect();
        ss.shuffle(rng);
        for (t, s) in ts.into_iter().zip(ss) {
            h.conn.insert(t, s);
        }
        return h;
    }
}
