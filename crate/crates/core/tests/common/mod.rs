//! Reference implementations used to check the library: brute-force
//! isomorphism and embedding search, an exhaustive pushout-complement
//! search, hand-built graphs and a direct circuit evaluator.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use linhyp::hypergraph::{
    to_simple, EdgeId, EdgeLabel, Homomorphism, Hypergraph, Port, SimpleHomomorphism, SimpleHypergraph, VertexId,
};
use linhyp::term::{Object, Word};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Every injective map from `0..k` into `0..n`.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in injections(k - 1, n) {
        for x in 0..n {
            if !p.contains(&x) {
                let mut q = p.clone();
                q.push(x);
                out.push(q);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Hand-built graphs

/// One end of a wire in a hand-built graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    /// The `i`-th input (as the start of a wire) or output (as its end).
    Boundary(usize),
    /// Slot `k` of the `e`-th edge: an output slot at the start of a wire,
    /// an input slot at its end.
    Edge(usize, usize),
}

/// Builds a plain graph from a list of edges `(label, dom, cod)` and wires
/// `(from, to)`. Targets are the inputs followed by each edge's outputs,
/// sources each edge's inputs followed by the outputs.
pub fn build(edges: &[(&str, usize, usize)], inputs: usize, outputs: usize, wires: &[(End, End)]) -> Hypergraph {
    let mut h = Hypergraph::new();
    let ids: Vec<EdgeId> = edges.iter().map(|_| EdgeId::fresh()).collect();
    for (e, (name, d, c)) in ids.iter().zip(edges) {
        h.edges.push(*e);
        h.labels.insert(*e, EdgeLabel::generator(name, Word::n(*d), Word::n(*c)));
    }
    let mut tmap = BTreeMap::new();
    let mut smap = BTreeMap::new();
    let mut push_t = |h: &mut Hypergraph, key: End, port: Port| {
        let v = VertexId::fresh();
        h.targets.push(v);
        h.left.insert(v, port);
        h.tlabels.insert(v, Object::Wire);
        tmap.insert(key, v);
    };
    for i in 0..inputs {
        push_t(&mut h, End::Boundary(i), Port::Interface);
    }
    for (k, (e, (_, _, c))) in ids.iter().zip(edges).enumerate() {
        for slot in 0..*c {
            push_t(&mut h, End::Edge(k, slot), Port::Edge(*e));
        }
    }
    let mut push_s = |h: &mut Hypergraph, key: End, port: Port| {
        let v = VertexId::fresh();
        h.sources.push(v);
        h.right.insert(v, port);
        h.slabels.insert(v, Object::Wire);
        smap.insert(key, v);
    };
    for (k, (e, (_, d, _))) in ids.iter().zip(edges).enumerate() {
        for slot in 0..*d {
            push_s(&mut h, End::Edge(k, slot), Port::Edge(*e));
        }
    }
    for j in 0..outputs {
        push_s(&mut h, End::Boundary(j), Port::Interface);
    }
    for (from, to) in wires {
        h.conn.insert(tmap[from], smap[to]);
    }
    assert!(h.is_valid(), "hand-built graph is malformed: {}", h.validate());
    h
}

impl PartialOrd for End {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for End {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |e: &End| match e {
            End::Boundary(i) => (0, *i, 0),
            End::Edge(e, k) => (1, *e, *k),
        };
        key(self).cmp(&key(other))
    }
}

/// Every plain graph over `gens` with at most `max_edges` edges, at most
/// `max_inputs` inputs and at most `max_wires` wires, one per edge multiset
/// and wiring.
pub fn enumerate_graphs(
    gens: &[(&str, usize, usize)],
    max_edges: usize,
    max_inputs: usize,
    max_wires: usize,
) -> Vec<Hypergraph> {
    let mut multisets: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max_edges {
        let mut next = Vec::new();
        for m in &frontier {
            let start = m.last().copied().unwrap_or(0);
            for g in start..gens.len() {
                let mut n: Vec<usize> = m.clone();
                n.push(g);
                next.push(n);
            }
        }
        multisets.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    for ms in multisets {
        let edges: Vec<(&str, usize, usize)> = ms.iter().map(|&g| gens[g]).collect();
        let doms: usize = edges.iter().map(|e| e.1).sum();
        let cods: usize = edges.iter().map(|e| e.2).sum();
        for inputs in 0..=max_inputs {
            let wires = inputs + cods;
            if wires > max_wires || wires < doms {
                continue;
            }
            let outputs = wires - doms;
            let froms: Vec<End> = (0..inputs)
                .map(End::Boundary)
                .chain(edges.iter().enumerate().flat_map(|(k, e)| (0..e.2).map(move |s| End::Edge(k, s))))
                .collect();
            let tos: Vec<End> = edges
                .iter()
                .enumerate()
                .flat_map(|(k, e)| (0..e.1).map(move |s| End::Edge(k, s)))
                .chain((0..outputs).map(End::Boundary))
                .collect();
            for p in permutations(wires) {
                let ws: Vec<(End, End)> = froms.iter().zip(&p).map(|(f, &i)| (*f, tos[i])).collect();
                out.push(build(&edges, inputs, outputs, &ws));
            }
        }
    }
    out
}

/// An isomorphic copy with fresh ids, shuffled edge order and a random
/// interleaving of the port groups that keeps each group in order.
pub fn scramble<R: Rng>(h: &Hypergraph, rng: &mut R) -> Hypergraph {
    let g = h.freshen();
    let interleave = |vs: &[VertexId], port: &dyn Fn(&VertexId) -> Port, rng: &mut R| {
        let mut groups: BTreeMap<Port, std::collections::VecDeque<VertexId>> = BTreeMap::new();
        for v in vs {
            groups.entry(port(v)).or_default().push_back(*v);
        }
        let mut keys: Vec<Port> = vs.iter().map(port).collect();
        keys.shuffle(rng);
        keys.into_iter()
            .map(|k| groups.get_mut(&k).unwrap().pop_front().unwrap())
            .collect::<Vec<_>>()
    };
    let mut out = g.clone();
    out.targets = interleave(&g.targets, &|v| g.left[v], rng);
    out.sources = interleave(&g.sources, &|v| g.right[v], rng);
    out.edges.shuffle(rng);
    out
}

// ---------------------------------------------------------------------------
// Isomorphism

fn groups(vs: &[VertexId], port: &BTreeMap<VertexId, Port>) -> BTreeMap<Port, Vec<VertexId>> {
    let mut g: BTreeMap<Port, Vec<VertexId>> = BTreeMap::new();
    for v in vs {
        g.entry(port[v]).or_default().push(*v);
    }
    g
}

fn map_port(p: Port, e: &BTreeMap<EdgeId, EdgeId>) -> Port {
    match p {
        Port::Interface => Port::Interface,
        Port::Edge(x) => Port::Edge(e[&x]),
    }
}

/// Checks a candidate bijection directly against the definition: labels,
/// attachments, connections and the order of every port group.
pub fn is_iso_map(
    a: &Hypergraph,
    b: &Hypergraph,
    t: &BTreeMap<VertexId, VertexId>,
    s: &BTreeMap<VertexId, VertexId>,
    e: &BTreeMap<EdgeId, EdgeId>,
) -> bool {
    for (x, y) in e {
        if a.labels[x] != b.labels[y] {
            return false;
        }
    }
    for (x, y) in t {
        if a.tlabels[x] != b.tlabels[y] || b.left[y] != map_port(a.left[x], e) || b.conn[y] != s[&a.conn[x]] {
            return false;
        }
    }
    for (x, y) in s {
        if a.slabels[x] != b.slabels[y] || b.right[y] != map_port(a.right[x], e) {
            return false;
        }
    }
    let ordered = |va: &[VertexId], vb: &[VertexId], pa: &BTreeMap<VertexId, Port>, pb: &BTreeMap<VertexId, Port>, m: &BTreeMap<VertexId, VertexId>| {
        let ga = groups(va, pa);
        let gb = groups(vb, pb);
        ga.iter().all(|(p, vs)| {
            let img: Vec<VertexId> = vs.iter().map(|v| m[v]).collect();
            gb.get(&map_port(*p, e)) == Some(&img)
        })
    };
    ordered(&a.targets, &b.targets, &a.left, &b.left, t) && ordered(&a.sources, &b.sources, &a.right, &b.right, s)
}

fn zip_map<K: Ord + Copy, V: Copy>(ks: &[K], vs: &[V], p: &[usize]) -> BTreeMap<K, V> {
    ks.iter().zip(p).map(|(k, &i)| (*k, vs[i])).collect()
}

/// Tries every bijection of edges, targets and sources.
pub fn iso_brute_full(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.targets.len() != b.targets.len() || a.sources.len() != b.sources.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let pe = permutations(a.edges.len());
    let pv = permutations(a.targets.len());
    let ps = permutations(a.sources.len());
    for p in &pe {
        let e = zip_map(&a.edges, &b.edges, p);
        if e.iter().any(|(x, y)| a.labels[x] != b.labels[y]) {
            continue;
        }
        for q in &pv {
            let t = zip_map(&a.targets, &b.targets, q);
            for r in &ps {
                let s = zip_map(&a.sources, &b.sources, r);
                if is_iso_map(a, b, &t, &s, &e) {
                    return true;
                }
            }
        }
    }
    false
}

/// Tries every label-preserving bijection of edges; the vertex maps are then
/// forced by the port orders.
pub fn iso_by_edges(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.targets.len() != b.targets.len() || a.sources.len() != b.sources.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let (gta, gtb) = (groups(&a.targets, &a.left), groups(&b.targets, &b.left));
    let (gsa, gsb) = (groups(&a.sources, &a.right), groups(&b.sources, &b.right));
    'perm: for p in permutations(a.edges.len()) {
        let e = zip_map(&a.edges, &b.edges, &p);
        if e.iter().any(|(x, y)| a.labels[x] != b.labels[y]) {
            continue;
        }
        let mut t = BTreeMap::new();
        for (port, vs) in &gta {
            let Some(ws) = gtb.get(&map_port(*port, &e)) else { continue 'perm };
            if ws.len() != vs.len() {
                continue 'perm;
            }
            t.extend(vs.iter().copied().zip(ws.iter().copied()));
        }
        let mut s = BTreeMap::new();
        for (port, vs) in &gsa {
            let Some(ws) = gsb.get(&map_port(*port, &e)) else { continue 'perm };
            if ws.len() != vs.len() {
                continue 'perm;
            }
            s.extend(vs.iter().copied().zip(ws.iter().copied()));
        }
        if t.len() == a.targets.len() && s.len() == a.sources.len() && is_iso_map(a, b, &t, &s, &e) {
            return true;
        }
    }
    false
}

/// Isomorphism of simple hypergraphs by trying every edge bijection.
pub fn simple_iso(a: &SimpleHypergraph, b: &SimpleHypergraph) -> bool {
    if a.vertices.len() != b.vertices.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let ea: Vec<EdgeId> = a.edges.iter().copied().collect();
    let eb: Vec<EdgeId> = b.edges.iter().copied().collect();
    let incident = |g: &SimpleHypergraph| -> BTreeSet<VertexId> {
        g.src.values().chain(g.tgt.values()).flatten().copied().collect()
    };
    let (ia, ib) = (incident(a), incident(b));
    if ia.len() != ib.len() {
        return false;
    }
    'perm: for p in permutations(ea.len()) {
        let mut v: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        let mut used: BTreeMap<VertexId, VertexId> = BTreeMap::new();
        for (x, &i) in ea.iter().zip(&p) {
            let y = eb[i];
            if a.labels[x] != b.labels[&y] || a.src[x].len() != b.src[&y].len() || a.tgt[x].len() != b.tgt[&y].len() {
                continue 'perm;
            }
            for (u, w) in a.src[x].iter().zip(&b.src[&y]).chain(a.tgt[x].iter().zip(&b.tgt[&y])) {
                if *v.entry(*u).or_insert(*w) != *w || *used.entry(*w).or_insert(*u) != *u {
                    continue 'perm;
                }
            }
        }
        return true;
    }
    false
}

// ---------------------------------------------------------------------------
// Embeddings

/// Every embedding of `l` into `g`, found by trying every injective
/// label-preserving edge map and every placement of wires that run from an
/// input straight to an output.
pub fn embeddings_brute(l: &Hypergraph, g: &Hypergraph) -> Vec<Homomorphism> {
    let gt = groups(&g.targets, &g.left);
    let gs = groups(&g.sources, &g.right);
    let lt = groups(&l.targets, &l.left);
    let ls = groups(&l.sources, &l.right);
    let g_conn_inv: BTreeMap<VertexId, VertexId> = g.conn.iter().map(|(t, s)| (*s, *t)).collect();
    let bare: Vec<VertexId> = l
        .targets
        .iter()
        .copied()
        .filter(|t| l.left[t] == Port::Interface && l.right[&l.conn[t]] == Port::Interface)
        .collect();
    let mut out = Vec::new();
    for p in injections(l.edges.len(), g.edges.len()) {
        let e: BTreeMap<EdgeId, EdgeId> = l.edges.iter().zip(&p).map(|(x, &i)| (*x, g.edges[i])).collect();
        if e.iter().any(|(x, y)| l.labels[x] != g.labels[y]) {
            continue;
        }
        let mut t = BTreeMap::new();
        let mut s = BTreeMap::new();
        for (port, vs) in &lt {
            if let Port::Edge(x) = port {
                let ws = &gt[&Port::Edge(e[x])];
                t.extend(vs.iter().copied().zip(ws.iter().copied()));
            }
        }
        for (port, vs) in &ls {
            if let Port::Edge(x) = port {
                let ws = &gs[&Port::Edge(e[x])];
                s.extend(vs.iter().copied().zip(ws.iter().copied()));
            }
        }
        // Interface ends of wires whose other end sits on an edge.
        for v in &l.targets {
            if l.left[v] == Port::Interface && !bare.contains(v) {
                let img = s[&l.conn[v]];
                t.insert(*v, g_conn_inv[&img]);
            }
        }
        let l_conn_inv: BTreeMap<VertexId, VertexId> = l.conn.iter().map(|(t, s)| (*s, *t)).collect();
        for v in &l.sources {
            if l.right[v] == Port::Interface && !bare.iter().any(|b| l.conn[b] == *v) {
                let img = t[&l_conn_inv[v]];
                s.insert(*v, g.conn[&img]);
            }
        }
        // Bare wires go on any wires of `g`.
        for wires in injections(bare.len(), g.targets.len()) {
            let mut t2 = t.clone();
            let mut s2 = s.clone();
            for (b, &i) in bare.iter().zip(&wires) {
                let gt = g.targets[i];
                t2.insert(*b, gt);
                s2.insert(l.conn[b], g.conn[&gt]);
            }
            let hom = Homomorphism {
                targets: t2,
                sources: s2,
                edges: e.clone(),
            };
            if embedding_check(l, g, &hom) {
                out.push(hom);
            }
        }
    }
    out
}

/// Injective, label-preserving, and preserving edge attachments, slot order
/// and connections.
pub fn embedding_check(l: &Hypergraph, g: &Hypergraph, m: &Homomorphism) -> bool {
    let inj = |xs: Vec<u64>| xs.iter().collect::<BTreeSet<_>>().len() == xs.len();
    if !inj(m.targets.values().map(|v| v.0).collect())
        || !inj(m.sources.values().map(|v| v.0).collect())
        || !inj(m.edges.values().map(|v| v.0).collect())
    {
        return false;
    }
    if l.targets.iter().any(|v| !m.targets.contains_key(v)) || l.sources.iter().any(|v| !m.sources.contains_key(v)) {
        return false;
    }
    for (x, y) in &m.edges {
        if l.labels[x] != g.labels[y] {
            return false;
        }
    }
    for (t, s) in &l.conn {
        if g.conn[&m.targets[t]] != m.sources[s] {
            return false;
        }
    }
    let gt = groups(&g.targets, &g.left);
    let gs = groups(&g.sources, &g.right);
    for (port, vs) in groups(&l.targets, &l.left) {
        if let Port::Edge(x) = port {
            let img: Vec<VertexId> = vs.iter().map(|v| m.targets[v]).collect();
            if gt.get(&Port::Edge(m.edges[&x])) != Some(&img) {
                return false;
            }
        }
    }
    for (port, vs) in groups(&l.sources, &l.right) {
        if let Port::Edge(x) = port {
            let img: Vec<VertexId> = vs.iter().map(|v| m.sources[v]).collect();
            if gs.get(&Port::Edge(m.edges[&x])) != Some(&img) {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Pushout complements

/// The restriction of `g` to the given vertices and edges, with vertices
/// whose edge is dropped moved to the interface. `None` unless the result is
/// a valid linear hypergraph.
pub fn restrict(g: &Hypergraph, vs: &BTreeSet<VertexId>, es: &BTreeSet<EdgeId>) -> Option<Hypergraph> {
    let mut c = Hypergraph::new();
    c.edges = g.edges.iter().copied().filter(|e| es.contains(e)).collect();
    for e in &c.edges {
        c.labels.insert(*e, g.labels[e].clone());
    }
    let port = |p: Port| match p {
        Port::Edge(e) if es.contains(&e) => Port::Edge(e),
        _ => Port::Interface,
    };
    for t in g.targets.iter().filter(|t| vs.contains(t)) {
        c.targets.push(*t);
        c.left.insert(*t, port(g.left[t]));
        c.tlabels.insert(*t, g.tlabels[t].clone());
        c.conn.insert(*t, g.conn[t]);
    }
    for s in g.sources.iter().filter(|s| vs.contains(s)) {
        c.sources.push(*s);
        c.right.insert(*s, port(g.right[s]));
        c.slabels.insert(*s, g.slabels[s].clone());
    }
    c.is_valid().then_some(c)
}

/// Every subgraph `c` of `g` (with the inclusion `c → g`) such that `g` is
/// the pushout of `l ← k → c`, with `k → c` the composite through `m`. The
/// pushout is computed with simple hypergraphs and compared through the
/// induced map into `g`.
pub fn complements_brute(k: &Hypergraph, leg: &Homomorphism, l: &Hypergraph, m: &Homomorphism, g: &Hypergraph) -> Vec<Hypergraph> {
    let verts: Vec<VertexId> = g.vertices().collect();
    let mut out = Vec::new();
    let sg = to_simple(g);
    for vmask in 0u32..(1 << verts.len()) {
        let vs: BTreeSet<VertexId> = verts.iter().enumerate().filter(|(i, _)| vmask >> i & 1 == 1).map(|(_, v)| *v).collect();
        // Every image of the interface must survive.
        let kt = k.targets.iter().map(|v| m.targets[&leg.targets[v]]);
        let ks = k.sources.iter().map(|v| m.sources[&leg.sources[v]]);
        if !kt.chain(ks).all(|v| vs.contains(&v)) {
            continue;
        }
        for emask in 0u32..(1 << g.edges.len()) {
            let es: BTreeSet<EdgeId> = g.edges.iter().enumerate().filter(|(i, _)| emask >> i & 1 == 1).map(|(_, e)| *e).collect();
            let Some(c) = restrict(g, &vs, &es) else { continue };
            let into_c = Homomorphism {
                targets: k.targets.iter().map(|v| (*v, m.targets[&leg.targets[v]])).collect(),
                sources: k.sources.iter().map(|v| (*v, m.sources[&leg.sources[v]])).collect(),
                edges: BTreeMap::new(),
            };
            if !into_c.is_homomorphism(k, &c) {
                continue;
            }
            if is_pushout(k, leg, l, &into_c, &c, m, &sg) {
                out.push(c);
            }
        }
    }
    out
}

/// Whether `g` (given as a simple graph) is the pushout of `l ← k → c` with
/// `m: l → g` and the inclusion `c → g` as coprojections.
fn is_pushout(
    k: &Hypergraph,
    leg: &Homomorphism,
    l: &Hypergraph,
    into_c: &Homomorphism,
    c: &Hypergraph,
    m: &Homomorphism,
    sg: &SimpleHypergraph,
) -> bool {
    let (sk, sl, sc) = (to_simple(k), to_simple(l), to_simple(c));
    let (p, from_l, from_c) = SimpleHypergraph::pushout(&sk, &sl, &leg.to_simple(), &sc, &into_c.to_simple());
    // The induced map p → g, which must be well defined and bijective.
    let mut u = SimpleHomomorphism::default();
    let sm = m.to_simple();
    for (x, y) in &from_l.vertices {
        if *u.vertices.entry(*y).or_insert(sm.vertices[x]) != sm.vertices[x] {
            return false;
        }
    }
    for (x, y) in &from_c.vertices {
        if *u.vertices.entry(*y).or_insert(*x) != *x {
            return false;
        }
    }
    for (x, y) in &from_l.edges {
        if *u.edges.entry(*y).or_insert(sm.edges[x]) != sm.edges[x] {
            return false;
        }
    }
    for (x, y) in &from_c.edges {
        if *u.edges.entry(*y).or_insert(*x) != *x {
            return false;
        }
    }
    let bij = |xs: Vec<u64>, n: usize| xs.iter().collect::<BTreeSet<_>>().len() == xs.len() && xs.len() == n;
    u.is_homomorphism(&p, sg)
        && bij(u.vertices.values().map(|v| v.0).collect(), sg.vertices.len())
        && bij(u.edges.values().map(|e| e.0).collect(), sg.edges.len())
        && u.vertices.len() == p.vertices.len()
}

// ---------------------------------------------------------------------------
// Circuits

/// A gate-level description of a circuit over a lattice whose values are
/// `0..n`. Signals `0..inputs` are the inputs; gate `i` drives signal
/// `inputs + i`. A gate input may read any signal, possibly through a delay.
#[derive(Debug, Clone)]
pub struct Netlist {
    pub inputs: usize,
    pub gates: Vec<NetGate>,
    pub outputs: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct NetGate {
    pub name: String,
    /// `(signal, delayed)` per input.
    pub reads: Vec<(usize, bool)>,
}

impl Netlist {
    pub fn signals(&self) -> usize {
        self.inputs + self.gates.len()
    }

    pub fn has_feedback(&self) -> bool {
        self.gates
            .iter()
            .enumerate()
            .any(|(i, g)| g.reads.iter().any(|(s, d)| !d && *s >= self.inputs + i))
    }

    /// The least fixed point of the signal equations, reached by iterating
    /// from bottom; delayed reads see bottom.
    pub fn evaluate(
        &self,
        input: &[usize],
        bottom: usize,
        table: &dyn Fn(&str, &[usize]) -> usize,
    ) -> Vec<usize> {
        let mut val: Vec<usize> = input.to_vec();
        val.extend(std::iter::repeat_n(bottom, self.gates.len()));
        loop {
            let mut changed = false;
            for (i, g) in self.gates.iter().enumerate() {
                let args: Vec<usize> = g.reads.iter().map(|&(s, d)| if d { bottom } else { val[s] }).collect();
                let v = table(&g.name, &args);
                if v != val[self.inputs + i] {
                    val[self.inputs + i] = v;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        self.outputs.iter().map(|&s| val[s]).collect()
    }

    /// The circuit as a graph: a fork tree for every signal read more than
    /// once, a stub for every signal never read, and a delay edge per delayed
    /// read.
    pub fn to_graph(&self, arity: &dyn Fn(&str) -> usize) -> Hypergraph {
        let mut edges: Vec<(String, usize, usize)> = Vec::new();
        let mut wires: Vec<(End, End)> = Vec::new();
        let gate_edge: Vec<usize> = self
            .gates
            .iter()
            .map(|g| {
                edges.push((g.name.clone(), arity(&g.name), 1));
                edges.len() - 1
            })
            .collect();
        // Every consumer of each signal.
        let mut readers: Vec<Vec<End>> = vec![Vec::new(); self.signals()];
        for (i, g) in self.gates.iter().enumerate() {
            for (k, &(s, d)) in g.reads.iter().enumerate() {
                let slot = End::Edge(gate_edge[i], k);
                if d {
                    edges.push(("delay".into(), 1, 1));
                    let e = edges.len() - 1;
                    wires.push((End::Edge(e, 0), slot));
                    readers[s].push(End::Edge(e, 0));
                } else {
                    readers[s].push(slot);
                }
            }
        }
        for (j, &s) in self.outputs.iter().enumerate() {
            readers[s].push(End::Boundary(j));
        }
        for (s, rs) in readers.iter().enumerate() {
            let mut from = if s < self.inputs {
                End::Boundary(s)
            } else {
                End::Edge(gate_edge[s - self.inputs], 0)
            };
            if rs.is_empty() {
                edges.push(("stub".into(), 1, 0));
                wires.push((from, End::Edge(edges.len() - 1, 0)));
                continue;
            }
            for r in &rs[..rs.len() - 1] {
                edges.push(("fork".into(), 1, 2));
                let f = edges.len() - 1;
                wires.push((from, End::Edge(f, 0)));
                wires.push((End::Edge(f, 0), *r));
                from = End::Edge(f, 1);
            }
            wires.push((from, *rs.last().unwrap()));
        }
        let es: Vec<(&str, usize, usize)> = edges.iter().map(|(n, d, c)| (n.as_str(), *d, *c)).collect();
        build(&es, self.inputs, self.outputs.len(), &wires)
    }
}
