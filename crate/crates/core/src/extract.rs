//! Reading a term back from a graph: untangle, stack the edges, shuffle the
//! wires into place and trace around everything but the interface.

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::hypergraph::{is_isomorphic, EdgeId, EdgeLabel, Hypergraph, VertexId};
use crate::interp::interpret;
use crate::term::{Object, Signature, Term, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("edge order is not a permutation of the graph's edges: {0}")]
    BadOrder(String),
}

/// A total order on the edges of a graph.
pub type EdgeOrder = Vec<EdgeId>;

fn check_order(h: &Hypergraph, ord: &[EdgeId]) -> Result<(), ExtractError> {
    let have: BTreeSet<_> = h.edges.iter().collect();
    let given: BTreeSet<_> = ord.iter().collect();
    if given.len() != ord.len() {
        return Err(ExtractError::BadOrder("an edge is listed twice".into()));
    }
    if have != given {
        let missing: Vec<_> = have.difference(&given).map(|e| e.to_string()).collect();
        let extra: Vec<_> = given.difference(&have).map(|e| e.to_string()).collect();
        return Err(ExtractError::BadOrder(format!(
            "missing [{}], unknown [{}]",
            missing.join(", "),
            extra.join(", ")
        )));
    }
    Ok(())
}

/// The default edge order: discovery order of the canonical renumbering.
pub fn canonical_order(h: &Hypergraph) -> EdgeOrder {
    let r = h.canonical_renaming();
    let mut es = h.edges.clone();
    es.sort_by_key(|e| r.edges[e]);
    es
}

/// Reorders vertices so that inputs come first among targets, outputs last
/// among sources, and each edge's ports form a block following `ord`.
pub fn untangle(h: &Hypergraph, ord: &[EdgeId]) -> Result<Hypergraph, ExtractError> {
    check_order(h, ord)?;
    let inc = h.incidence();
    let mut u = h.clone();
    u.targets = inc.inputs.clone();
    u.sources = Vec::with_capacity(h.sources.len());
    for e in ord {
        u.targets.extend(&inc.edge_targets[e]);
        u.sources.extend(&inc.edge_sources[e]);
    }
    u.sources.extend(&inc.outputs);
    u.edges = ord.to_vec();
    Ok(u)
}

fn label_term(l: &EdgeLabel) -> Term {
    match l {
        EdgeLabel::Gen(g) => Term::Gen(g.name.clone()),
        EdgeLabel::Identity(o) => Term::Id(Word::single(o.clone())),
    }
}

/// The tensor of the edge labels in order.
pub fn stack(h: &Hypergraph, ord: &[EdgeId]) -> Result<Term, ExtractError> {
    check_order(h, ord)?;
    Ok(Term::tensor_all(ord.iter().map(|e| label_term(&h.labels[e]))))
}

/// The symmetry taking the targets of an untangled graph to the sources they
/// are connected to, built by repeatedly pulling the wire that feeds the
/// first remaining source to the top.
pub fn shuffle(u: &Hypergraph) -> Term {
    let mut targets = u.targets.clone();
    let mut sources = u.sources.clone();
    let inv: std::collections::HashMap<_, _> = u.conn.iter().map(|(t, s)| (*s, *t)).collect();
    let mut steps = Vec::new();
    while let Some(&vs) = sources.first() {
        let vt = inv[&vs];
        let i = targets.iter().position(|&t| t == vt).expect("connected target");
        let labels: Word = targets.iter().map(|t| u.tlabels[t].clone()).collect();
        let step = if i == 0 {
            Term::Id(labels.clone())
        } else {
            let (before, rest) = labels.split_at(i);
            let (moved, after) = rest.split_at(1);
            let mut t = Term::Swap(before, moved);
            if !after.is_empty() {
                t = t.tensor(Term::Id(after));
            }
            t
        };
        steps.push((labels.slice(i..i + 1), step));
        targets.remove(i);
        sources.remove(0);
    }
    let mut acc = Term::Id(Word::empty());
    for (top, step) in steps.into_iter().rev() {
        acc = step.seq(Term::Id(top).tensor(acc));
    }
    acc
}

/// The term of a graph for a given edge order.
pub fn extract_term(h: &Hypergraph, ord: &[EdgeId]) -> Result<Term, ExtractError> {
    let u = untangle(h, ord)?;
    let inc = u.incidence();
    let m = inc.inputs.len();
    let word = |vs: &[VertexId], side: &BTreeMap<VertexId, Object>| -> Word {
        vs.iter().map(|v| side[v].clone()).collect()
    };
    let ins = word(&u.targets[..m], &u.tlabels);
    let traced = word(&u.targets[m..], &u.tlabels);
    let outs = word(&inc.outputs, &u.slabels);
    let body = Term::Swap(traced.clone(), ins)
        .seq(shuffle(&u))
        .seq(stack(&u, ord)?.tensor(Term::Id(outs)));
    Ok(Term::Trace(traced, Box::new(body)))
}

/// [`extract_term`] with the canonical edge order.
pub fn extract(h: &Hypergraph) -> Term {
    extract_term(h, &canonical_order(h)).expect("canonical order covers the edges")
}

/// The generators labelling the edges of `h`, with their types.
pub fn graph_signature(h: &Hypergraph) -> Signature {
    let mut sig = Signature::new();
    let mut objects = BTreeSet::new();
    for l in h.labels.values() {
        if let EdgeLabel::Gen(g) = l {
            for o in g.dom.objects().iter().chain(g.cod.objects()) {
                if let Some(n) = o.name() {
                    objects.insert(n.to_string());
                }
            }
        }
    }
    for o in h.tlabels.values().chain(h.slabels.values()) {
        if let Some(n) = o.name() {
            objects.insert(n.to_string());
        }
    }
    if !objects.is_empty() {
        sig = Signature::with_objects(objects);
    }
    for l in h.labels.values() {
        if let EdgeLabel::Gen(g) = l {
            if sig.get(&g.name).is_none() {
                sig.add(&g.name, g.dom.clone(), g.cod.clone())
                    .expect("labels of one graph are consistent");
            }
        }
    }
    sig
}

fn permutations(items: &[EdgeId]) -> Vec<Vec<EdgeId>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let first = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, first);
            out.push(p);
        }
    }
    out
}

/// Edge orders to compare: all of them when there are at most `max_orders`,
/// otherwise a fixed-seed sample of that many.
pub fn sample_orders(h: &Hypergraph, max_orders: usize) -> Vec<EdgeOrder> {
    let n = h.edges.len();
    let total = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k));
    match total {
        Some(t) if t <= max_orders => permutations(&h.edges),
        _ => {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            (0..max_orders.max(1))
                .map(|_| {
                    let mut o = h.edges.clone();
                    o.shuffle(&mut rng);
                    o
                })
                .collect()
        }
    }
}

/// True when the terms extracted along every pair of sampled edge orders
/// have isomorphic interpretations.
pub fn check_coherence(h: &Hypergraph, max_orders: usize) -> bool {
    let sig = graph_signature(h);
    let graphs: Vec<Hypergraph> = sample_orders(h, max_orders)
        .iter()
        .map(|o| {
            let t = extract_term(h, o).expect("orders are permutations");
            interpret(&t, &sig).expect("extracted terms are well typed")
        })
        .collect();
    graphs
        .iter()
        .enumerate()
        .all(|(i, a)| graphs[i + 1..].iter().all(|b| is_isomorphic(a, b)))
}
