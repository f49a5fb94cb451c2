//! Structure-preserving maps found by propagation.
//!
//! Each vertex touches exactly one edge side and one wire, so once a vertex
//! is mapped its wire partner and its edge are forced. Search is only needed
//! to place an edge that nothing mapped so far reaches: closed loops when
//! deciding isomorphism, and every connected component when enumerating
//! embeddings.

use std::collections::{HashMap, HashSet};

use super::{EdgeId, EdgeLabel, Homomorphism, Hypergraph, Incidence, Port, VertexId};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Bijective and interface preserving.
    Iso,
    /// Injective; interface vertices of the pattern may land anywhere.
    Embed,
}

#[derive(Clone, Copy)]
enum Item {
    T(VertexId, VertexId),
    S(VertexId, VertexId),
    E(EdgeId, EdgeId),
}

#[derive(Clone, Default)]
struct State {
    t: HashMap<VertexId, VertexId>,
    s: HashMap<VertexId, VertexId>,
    e: HashMap<EdgeId, EdgeId>,
    t_used: HashSet<VertexId>,
    s_used: HashSet<VertexId>,
    e_used: HashSet<EdgeId>,
}

impl State {
    fn into_hom(self) -> Homomorphism {
        Homomorphism {
            targets: self.t.into_iter().collect(),
            sources: self.s.into_iter().collect(),
            edges: self.e.into_iter().collect(),
        }
    }
}

struct Matcher<'a> {
    f: &'a Hypergraph,
    g: &'a Hypergraph,
    fi: Incidence,
    gi: Incidence,
    by_label: HashMap<&'a EdgeLabel, Vec<EdgeId>>,
    mode: Mode,
}

impl<'a> Matcher<'a> {
    fn new(f: &'a Hypergraph, g: &'a Hypergraph, mode: Mode) -> Self {
        let mut by_label: HashMap<&EdgeLabel, Vec<EdgeId>> = HashMap::new();
        for e in &g.edges {
            by_label.entry(&g.labels[e]).or_default().push(*e);
        }
        Matcher {
            f,
            g,
            fi: f.incidence(),
            gi: g.incidence(),
            by_label,
            mode,
        }
    }

    fn assign(&self, st: &mut State, work: &mut Vec<Item>, item: Item) -> bool {
        match item {
            Item::T(v, w) => {
                if let Some(&x) = st.t.get(&v) {
                    return x == w;
                }
                if st.t_used.contains(&w) || self.f.tlabels.get(&v) != self.g.tlabels.get(&w) {
                    return false;
                }
                st.t.insert(v, w);
                st.t_used.insert(w);
            }
            Item::S(v, w) => {
                if let Some(&x) = st.s.get(&v) {
                    return x == w;
                }
                if st.s_used.contains(&w) || self.f.slabels.get(&v) != self.g.slabels.get(&w) {
                    return false;
                }
                st.s.insert(v, w);
                st.s_used.insert(w);
            }
            Item::E(e, x) => {
                if let Some(&y) = st.e.get(&e) {
                    return y == x;
                }
                if st.e_used.contains(&x) || self.f.labels[&e] != self.g.labels[&x] {
                    return false;
                }
                st.e.insert(e, x);
                st.e_used.insert(x);
            }
        }
        work.push(item);
        true
    }

    fn ports_agree(&self, pf: Port, pg: Port, slot_f: usize, slot_g: usize) -> Result<Option<Item>, ()> {
        match (pf, pg) {
            (Port::Edge(e), Port::Edge(x)) if slot_f == slot_g => Ok(Some(Item::E(e, x))),
            (Port::Edge(_), _) => Err(()),
            (Port::Interface, Port::Edge(_)) if self.mode == Mode::Iso => Err(()),
            (Port::Interface, _) => Ok(None),
        }
    }

    fn propagate(&self, st: &mut State, work: &mut Vec<Item>) -> bool {
        while let Some(item) = work.pop() {
            let mut next: Vec<Item> = Vec::new();
            match item {
                Item::T(v, w) => {
                    next.push(Item::S(self.f.conn[&v], self.g.conn[&w]));
                    match self.ports_agree(
                        self.f.left[&v],
                        self.g.left[&w],
                        self.fi.tslot[&v],
                        self.gi.tslot[&w],
                    ) {
                        Err(()) => return false,
                        Ok(e) => next.extend(e),
                    }
                }
                Item::S(v, w) => {
                    next.push(Item::T(self.fi.conn_inv[&v], self.gi.conn_inv[&w]));
                    match self.ports_agree(
                        self.f.right[&v],
                        self.g.right[&w],
                        self.fi.sslot[&v],
                        self.gi.sslot[&w],
                    ) {
                        Err(()) => return false,
                        Ok(e) => next.extend(e),
                    }
                }
                Item::E(e, x) => {
                    let (fs, gs) = (&self.fi.edge_sources[&e], &self.gi.edge_sources[&x]);
                    let (ft, gt) = (&self.fi.edge_targets[&e], &self.gi.edge_targets[&x]);
                    if fs.len() != gs.len() || ft.len() != gt.len() {
                        return false;
                    }
                    next.extend(fs.iter().zip(gs).map(|(a, b)| Item::S(*a, *b)));
                    next.extend(ft.iter().zip(gt).map(|(a, b)| Item::T(*a, *b)));
                }
            }
            for it in next {
                if !self.assign(st, work, it) {
                    return false;
                }
            }
        }
        true
    }

    fn try_assign(&self, st: &State, item: Item) -> Option<State> {
        let mut st = st.clone();
        let mut work = Vec::new();
        (self.assign(&mut st, &mut work, item) && self.propagate(&mut st, &mut work)).then_some(st)
    }

    fn search(&self, st: State, out: &mut Vec<Homomorphism>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if let Some(&e) = self.f.edges.iter().find(|e| !st.e.contains_key(e)) {
            let Some(cands) = self.by_label.get(&self.f.labels[&e]) else {
                return;
            };
            for &x in cands {
                if st.e_used.contains(&x) {
                    continue;
                }
                if let Some(next) = self.try_assign(&st, Item::E(e, x)) {
                    self.search(next, out, limit);
                    if out.len() >= limit {
                        return;
                    }
                }
            }
        } else if let Some(&v) = self.f.targets.iter().find(|v| !st.t.contains_key(v)) {
            for &w in &self.g.targets {
                if st.t_used.contains(&w) {
                    continue;
                }
                if let Some(next) = self.try_assign(&st, Item::T(v, w)) {
                    self.search(next, out, limit);
                    if out.len() >= limit {
                        return;
                    }
                }
            }
        } else {
            out.push(st.into_hom());
        }
    }
}

/// Finds an isomorphism `f → g` preserving the ordered interfaces.
pub fn find_isomorphism(f: &Hypergraph, g: &Hypergraph) -> Option<Homomorphism> {
    if f.targets.len() != g.targets.len()
        || f.sources.len() != g.sources.len()
        || f.edges.len() != g.edges.len()
    {
        return None;
    }
    let m = Matcher::new(f, g, Mode::Iso);
    if m.fi.inputs.len() != m.gi.inputs.len() || m.fi.outputs.len() != m.gi.outputs.len() {
        return None;
    }
    let mut st = State::default();
    let mut work = Vec::new();
    for (a, b) in m.fi.inputs.iter().zip(&m.gi.inputs) {
        if !m.assign(&mut st, &mut work, Item::T(*a, *b)) {
            return None;
        }
    }
    for (a, b) in m.fi.outputs.iter().zip(&m.gi.outputs) {
        if !m.assign(&mut st, &mut work, Item::S(*a, *b)) {
            return None;
        }
    }
    if !m.propagate(&mut st, &mut work) {
        return None;
    }
    let mut out = Vec::new();
    m.search(st, &mut out, 1);
    out.pop()
}

pub fn is_isomorphic(f: &Hypergraph, g: &Hypergraph) -> bool {
    find_isomorphism(f, g).is_some()
}

/// Every embedding of `pattern` into `host`, in a deterministic order driven
/// by the host's edge order.
pub fn find_embeddings(pattern: &Hypergraph, host: &Hypergraph) -> Vec<Homomorphism> {
    find_embeddings_limited(pattern, host, usize::MAX)
}

pub(crate) fn find_embeddings_limited(
    pattern: &Hypergraph,
    host: &Hypergraph,
    limit: usize,
) -> Vec<Homomorphism> {
    if pattern.edges.len() > host.edges.len() || pattern.targets.len() > host.targets.len() {
        return Vec::new();
    }
    let m = Matcher::new(pattern, host, Mode::Embed);
    let mut out = Vec::new();
    m.search(State::default(), &mut out, limit);
    out
}
