//! Linear hypergraphs: the graphical syntax for symmetric traced monoidal
//! categories.
//!
//! Every vertex is either a *target* (the end of a wire that leaves an edge
//! or the input interface) or a *source* (the start of a wire that enters an
//! edge or the output interface). `conn` pairs each target with the source at
//! the other end of its wire. The order of `targets` and `sources` is
//! significant: it fixes the order of the interfaces and of each edge's
//! ports.

mod hom;
mod homeo;
mod ids;
mod iso;
mod simple;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::term::{Object, Word};

pub use hom::Homomorphism;
pub use homeo::{expand, expand_all, smooth};
pub(crate) use homeo::expand_in_place;
pub use ids::{bump_past, EdgeId, VertexId};
pub use iso::{find_embeddings, find_isomorphism, is_isomorphic};
pub use simple::{to_simple, SimpleHomomorphism, SimpleHypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("type mismatch: expected {expected}, found {found}")]
    TypeMismatch { expected: Word, found: Word },
    #[error("cannot trace {x} out of {dom} -> {cod}")]
    BadTrace { x: Word, dom: Word, cod: Word },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("renaming is not injective on the graph: {0}")]
    NotInjective(String),
    #[error("{0} is not a target vertex of the graph")]
    NotATarget(VertexId),
    #[error("malformed graph:\n{0}")]
    Malformed(ValidationReport),
    #[error("homomorphism does not fit the graphs: {0}")]
    BadHomomorphism(String),
}

/// What a vertex is attached to on its edge side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Port {
    Interface,
    Edge(EdgeId),
}

/// A labelled generator together with its type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub name: Arc<str>,
    pub dom: Word,
    pub cod: Word,
}

/// Edge labels carry their own types so a graph can be checked without the
/// signature that produced it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeLabel {
    Gen(Generator),
    /// Identity edges only exist to keep track of wire homeomorphisms.
    Identity(Object),
}

impl EdgeLabel {
    pub fn generator(name: &str, dom: Word, cod: Word) -> Self {
        EdgeLabel::Gen(Generator {
            name: Arc::from(name),
            dom,
            cod,
        })
    }

    pub fn name(&self) -> &str {
        match self {
            EdgeLabel::Gen(g) => &g.name,
            EdgeLabel::Identity(_) => "id",
        }
    }

    pub fn dom(&self) -> Word {
        match self {
            EdgeLabel::Gen(g) => g.dom.clone(),
            EdgeLabel::Identity(o) => Word::single(o.clone()),
        }
    }

    pub fn cod(&self) -> Word {
        match self {
            EdgeLabel::Gen(g) => g.cod.clone(),
            EdgeLabel::Identity(o) => Word::single(o.clone()),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, EdgeLabel::Identity(_))
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A linear hypergraph.
///
/// The fields are public so that tests and file loaders can build arbitrary,
/// possibly malformed, structures; [`Hypergraph::validate`] checks them.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Hypergraph {
    pub targets: Vec<VertexId>,
    pub sources: Vec<VertexId>,
    /// Edges in creation order.
    pub edges: Vec<EdgeId>,
    /// The edge each target leaves, or the input interface.
    pub left: BTreeMap<VertexId, Port>,
    /// The edge each source enters, or the output interface.
    pub right: BTreeMap<VertexId, Port>,
    pub conn: BTreeMap<VertexId, VertexId>,
    pub labels: BTreeMap<EdgeId, EdgeLabel>,
    pub tlabels: BTreeMap<VertexId, Object>,
    pub slabels: BTreeMap<VertexId, Object>,
}

/// Lookup tables derived from a graph.
#[derive(Debug, Clone, Default)]
pub struct Incidence {
    pub inputs: Vec<VertexId>,
    pub outputs: Vec<VertexId>,
    pub edge_sources: HashMap<EdgeId, Vec<VertexId>>,
    pub edge_targets: HashMap<EdgeId, Vec<VertexId>>,
    pub conn_inv: HashMap<VertexId, VertexId>,
    /// Position of each target among the targets of its edge or the inputs.
    pub tslot: HashMap<VertexId, usize>,
    /// Position of each source among the sources of its edge or the outputs.
    pub sslot: HashMap<VertexId, usize>,
}

impl Hypergraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty() && self.sources.is_empty() && self.edges.is_empty()
    }

    pub fn inputs(&self) -> Vec<VertexId> {
        self.targets
            .iter()
            .copied()
            .filter(|v| self.left.get(v) == Some(&Port::Interface))
            .collect()
    }

    pub fn outputs(&self) -> Vec<VertexId> {
        self.sources
            .iter()
            .copied()
            .filter(|v| self.right.get(v) == Some(&Port::Interface))
            .collect()
    }

    /// Targets of `e` in target order.
    pub fn edge_targets(&self, e: EdgeId) -> Vec<VertexId> {
        self.targets
            .iter()
            .copied()
            .filter(|v| self.left.get(v) == Some(&Port::Edge(e)))
            .collect()
    }

    /// Sources of `e` in source order.
    pub fn edge_sources(&self, e: EdgeId) -> Vec<VertexId> {
        self.sources
            .iter()
            .copied()
            .filter(|v| self.right.get(v) == Some(&Port::Edge(e)))
            .collect()
    }

    pub fn label(&self, e: EdgeId) -> &EdgeLabel {
        &self.labels[&e]
    }

    pub fn dom(&self) -> Word {
        self.inputs().iter().map(|v| self.tlabels[v].clone()).collect()
    }

    pub fn cod(&self) -> Word {
        self.outputs().iter().map(|v| self.slabels[v].clone()).collect()
    }

    pub fn num_identity_edges(&self) -> usize {
        self.labels.values().filter(|l| l.is_identity()).count()
    }

    pub fn incidence(&self) -> Incidence {
        let mut inc = Incidence::default();
        for &v in &self.targets {
            let port = self.left[&v];
            let list = match port {
                Port::Interface => &mut inc.inputs,
                Port::Edge(e) => inc.edge_targets.entry(e).or_default(),
            };
            inc.tslot.insert(v, list.len());
            list.push(v);
        }
        for &v in &self.sources {
            let port = self.right[&v];
            let list = match port {
                Port::Interface => &mut inc.outputs,
                Port::Edge(e) => inc.edge_sources.entry(e).or_default(),
            };
            inc.sslot.insert(v, list.len());
            list.push(v);
        }
        for &e in &self.edges {
            inc.edge_sources.entry(e).or_default();
            inc.edge_targets.entry(e).or_default();
        }
        for (&t, &s) in &self.conn {
            inc.conn_inv.insert(s, t);
        }
        inc
    }

    /// Every vertex id, targets first.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.targets.iter().chain(&self.sources).copied()
    }

    pub(crate) fn push_target(&mut self, port: Port, obj: Object) -> VertexId {
        let v = VertexId::fresh();
        self.targets.push(v);
        self.left.insert(v, port);
        self.tlabels.insert(v, obj);
        v
    }

    pub(crate) fn push_source(&mut self, port: Port, obj: Object) -> VertexId {
        let v = VertexId::fresh();
        self.sources.push(v);
        self.right.insert(v, port);
        self.slabels.insert(v, obj);
        v
    }

    pub(crate) fn push_edge(&mut self, label: EdgeLabel) -> EdgeId {
        let e = EdgeId::fresh();
        self.edges.push(e);
        self.labels.insert(e, label);
        e
    }

    /// Removes a target and its bookkeeping, leaving `conn` of other vertices
    /// untouched.
    pub(crate) fn remove_target(&mut self, v: VertexId) {
        self.targets.retain(|&t| t != v);
        self.left.remove(&v);
        self.tlabels.remove(&v);
        self.conn.remove(&v);
    }

    pub(crate) fn remove_source(&mut self, v: VertexId) {
        self.sources.retain(|&s| s != v);
        self.right.remove(&v);
        self.slabels.remove(&v);
    }

    pub(crate) fn remove_edge(&mut self, e: EdgeId) {
        self.edges.retain(|&x| x != e);
        self.labels.remove(&e);
    }

    /// Checks every well-formedness condition and lists the violations.
    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Renames vertices and edges; ids missing from the maps are kept.
    pub fn rename(&self, r: &Renaming) -> Result<Hypergraph, GraphError> {
        let v = |x: &VertexId| r.vertices.get(x).copied().unwrap_or(*x);
        let e = |x: &EdgeId| r.edges.get(x).copied().unwrap_or(*x);
        let mut seen = BTreeSet::new();
        for x in self.vertices() {
            if !seen.insert(v(&x)) {
                return Err(GraphError::NotInjective(format!("vertex {} is hit twice", v(&x))));
            }
        }
        let mut seen = BTreeSet::new();
        for x in &self.edges {
            if !seen.insert(e(x)) {
                return Err(GraphError::NotInjective(format!("edge {} is hit twice", e(x))));
            }
        }
        let port = |p: &Port| match p {
            Port::Interface => Port::Interface,
            Port::Edge(x) => Port::Edge(e(x)),
        };
        Ok(Hypergraph {
            targets: self.targets.iter().map(v).collect(),
            sources: self.sources.iter().map(v).collect(),
            edges: self.edges.iter().map(e).collect(),
            left: self.left.iter().map(|(k, p)| (v(k), port(p))).collect(),
            right: self.right.iter().map(|(k, p)| (v(k), port(p))).collect(),
            conn: self.conn.iter().map(|(a, b)| (v(a), v(b))).collect(),
            labels: self.labels.iter().map(|(k, l)| (e(k), l.clone())).collect(),
            tlabels: self.tlabels.iter().map(|(k, o)| (v(k), o.clone())).collect(),
            slabels: self.slabels.iter().map(|(k, o)| (v(k), o.clone())).collect(),
        })
    }

    /// The renaming that replaces every id of the graph by a fresh one.
    pub fn fresh_renaming(&self) -> Renaming {
        Renaming {
            vertices: self.vertices().map(|v| (v, VertexId::fresh())).collect(),
            edges: self.edges.iter().map(|&e| (e, EdgeId::fresh())).collect(),
        }
    }

    /// A copy with every id replaced by a fresh one.
    pub fn freshen(&self) -> Hypergraph {
        self.rename(&self.fresh_renaming())
            .expect("fresh renaming is injective")
    }

    /// True when the two graphs share a vertex or edge id.
    pub fn overlaps(&self, other: &Hypergraph) -> bool {
        let vs: BTreeSet<VertexId> = self.vertices().collect();
        let es: BTreeSet<EdgeId> = self.edges.iter().copied().collect();
        other.vertices().any(|v| vs.contains(&v)) || other.edges.iter().any(|e| es.contains(e))
    }

    /// The renaming onto `0, 1, 2, …` in interface-first breadth-first order.
    ///
    /// Parts not reachable from the interface are visited one component at a
    /// time, smallest encoding first, so isomorphic graphs get the same
    /// renaming up to automorphism.
    pub fn canonical_renaming(&self) -> Renaming {
        let inc = self.incidence();
        let mut walk = Walk::default();
        let roots: Vec<VertexId> = inc.inputs.iter().chain(&inc.outputs).copied().collect();
        walk.run(self, &inc, &roots, None);
        while walk.eseen.len() < self.edges.len() {
            let best = self
                .edges
                .iter()
                .filter(|e| !walk.eseen.contains(*e))
                .map(|&e| {
                    let mut w = walk.clone();
                    let (from_v, from_e) = (w.vorder.len(), w.eorder.len());
                    w.run(self, &inc, &[], Some(e));
                    (w.encode(self, &inc, from_v, from_e), w)
                })
                .min_by(|a, b| a.0.cmp(&b.0))
                .expect("an unvisited edge remains");
            walk = best.1;
        }
        let nv = walk.vorder.len();
        Renaming {
            vertices: walk
                .vorder
                .into_iter()
                .enumerate()
                .map(|(i, v)| (v, VertexId(i as u64)))
                .collect(),
            edges: walk
                .eorder
                .into_iter()
                .enumerate()
                .map(|(i, e)| (e, EdgeId((nv + i) as u64)))
                .collect(),
        }
    }

    /// Renumbers ids deterministically, lists edges in discovery order and
    /// lists targets and sources port group by port group, interface first.
    ///
    /// The result reuses small ids, so it should not be combined with live
    /// graphs without freshening; ops do that automatically.
    pub fn canonical(&self) -> Hypergraph {
        let r = self.canonical_renaming();
        let mut g = self.rename(&r).expect("canonical renaming is injective");
        g.edges.sort();
        let inc = g.incidence();
        let grouped = |iface: &[VertexId], per_edge: &HashMap<EdgeId, Vec<VertexId>>| {
            let mut out = iface.to_vec();
            for e in &g.edges {
                out.extend(&per_edge[e]);
            }
            out
        };
        g.targets = grouped(&inc.inputs, &inc.edge_targets);
        g.sources = grouped(&inc.outputs, &inc.edge_sources);
        if let Some(max) = r.vertices.values().map(|v| v.0).chain(r.edges.values().map(|e| e.0)).max() {
            bump_past(max);
        }
        g
    }
}

/// Breadth-first discovery state for [`Hypergraph::canonical_renaming`].
#[derive(Clone, Default)]
struct Walk {
    vorder: Vec<VertexId>,
    eorder: Vec<EdgeId>,
    vseen: BTreeSet<VertexId>,
    eseen: BTreeSet<EdgeId>,
}

impl Walk {
    fn visit(&mut self, v: VertexId, queue: &mut std::collections::VecDeque<VertexId>) {
        if self.vseen.insert(v) {
            self.vorder.push(v);
            queue.push_back(v);
        }
    }

    fn take_edge(&mut self, e: EdgeId, inc: &Incidence, queue: &mut std::collections::VecDeque<VertexId>) {
        if self.eseen.insert(e) {
            self.eorder.push(e);
            for &w in inc.edge_sources[&e].iter().chain(&inc.edge_targets[&e]) {
                self.visit(w, queue);
            }
        }
    }

    /// Visits everything reachable from `roots` and from the edge `seed`.
    fn run(&mut self, h: &Hypergraph, inc: &Incidence, roots: &[VertexId], seed: Option<EdgeId>) {
        let mut queue = std::collections::VecDeque::new();
        for &v in roots {
            self.visit(v, &mut queue);
        }
        if let Some(e) = seed {
            self.take_edge(e, inc, &mut queue);
        }
        while let Some(v) = queue.pop_front() {
            if let Some(&s) = h.conn.get(&v) {
                self.visit(s, &mut queue);
            }
            if let Some(&t) = inc.conn_inv.get(&v) {
                self.visit(t, &mut queue);
            }
            if let Some(&Port::Edge(e)) = h.left.get(&v).or_else(|| h.right.get(&v)) {
                self.take_edge(e, inc, &mut queue);
            }
        }
    }

    /// A description of the component discovered after the first `from_v`
    /// vertices and `from_e` edges, in terms of discovery positions.
    fn encode(&self, h: &Hypergraph, inc: &Incidence, from_v: usize, from_e: usize) -> Vec<String> {
        let pos: HashMap<VertexId, usize> = self.vorder[from_v..].iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut out = Vec::new();
        for e in &self.eorder[from_e..] {
            let ts: Vec<usize> = inc.edge_targets[e].iter().map(|v| pos[v]).collect();
            let ss: Vec<usize> = inc.edge_sources[e].iter().map(|v| pos[v]).collect();
            out.push(format!("{:?} {ts:?} {ss:?}", h.labels[e]));
        }
        for v in &self.vorder[from_v..] {
            match h.conn.get(v) {
                Some(s) => out.push(format!("{} {:?}", pos[s], h.tlabels[v])),
                None => out.push(format!("{:?}", h.slabels[v])),
            }
        }
        out
    }
}

/// A finite renaming of vertex and edge ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Renaming {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeId>,
}

impl Renaming {
    pub fn inverse(&self) -> Renaming {
        Renaming {
            vertices: self.vertices.iter().map(|(a, b)| (*b, *a)).collect(),
            edges: self.edges.iter().map(|(a, b)| (*b, *a)).collect(),
        }
    }
}

/// One violated well-formedness condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Issue {
    DuplicateVertex(VertexId),
    DuplicateEdge(EdgeId),
    MissingLeft(VertexId),
    MissingRight(VertexId),
    MissingConn(VertexId),
    MissingLabel(EdgeId),
    MissingObject(VertexId),
    StrayEntry(String),
    UnknownPortEdge { vertex: VertexId, edge: EdgeId },
    ConnOutsideSources { target: VertexId, source: VertexId },
    ConnNotInjective { source: VertexId, targets: (VertexId, VertexId) },
    ConnNotSurjective(VertexId),
    SourceArity { edge: EdgeId, expected: usize, found: usize },
    TargetArity { edge: EdgeId, expected: usize, found: usize },
    SourceObject { edge: EdgeId, vertex: VertexId, expected: Object, found: Object },
    TargetObject { edge: EdgeId, vertex: VertexId, expected: Object, found: Object },
    WireObject { target: VertexId, source: VertexId },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::DuplicateVertex(v) => write!(f, "vertex {v} occurs more than once"),
            Issue::DuplicateEdge(e) => write!(f, "edge {e} occurs more than once"),
            Issue::MissingLeft(v) => write!(f, "target {v} has no left attachment"),
            Issue::MissingRight(v) => write!(f, "source {v} has no right attachment"),
            Issue::MissingConn(v) => write!(f, "target {v} is not connected"),
            Issue::MissingLabel(e) => write!(f, "edge {e} has no label"),
            Issue::MissingObject(v) => write!(f, "vertex {v} has no object label"),
            Issue::StrayEntry(s) => write!(f, "entry for unknown element: {s}"),
            Issue::UnknownPortEdge { vertex, edge } => {
                write!(f, "vertex {vertex} is attached to unknown edge {edge}")
            }
            Issue::ConnOutsideSources { target, source } => {
                write!(f, "target {target} is connected to {source}, which is not a source")
            }
            Issue::ConnNotInjective { source, targets } => write!(
                f,
                "source {source} is connected to both {} and {}",
                targets.0, targets.1
            ),
            Issue::ConnNotSurjective(v) => write!(f, "source {v} is not connected to any target"),
            Issue::SourceArity {
                edge,
                expected,
                found,
            } => write!(f, "edge {edge} has {found} sources, its label needs {expected}"),
            Issue::TargetArity {
                edge,
                expected,
                found,
            } => write!(f, "edge {edge} has {found} targets, its label needs {expected}"),
            Issue::SourceObject {
                edge,
                vertex,
                expected,
                found,
            } => write!(f, "source {vertex} of edge {edge} is labelled {found}, expected {expected}"),
            Issue::TargetObject {
                edge,
                vertex,
                expected,
                found,
            } => write!(f, "target {vertex} of edge {edge} is labelled {found}, expected {expected}"),
            Issue::WireObject { target, source } => {
                write!(f, "wire {target} -> {source} changes object label")
            }
        }
    }
}

/// The result of [`Hypergraph::validate`]; empty means well formed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn into_result(self) -> Result<(), GraphError> {
        if self.is_ok() {
            Ok(())
        } else {
            Err(GraphError::Malformed(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.issues.is_empty() {
            return f.write_str("well formed");
        }
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "- {issue}")?;
        }
        Ok(())
    }
}

fn validate(h: &Hypergraph) -> ValidationReport {
    let mut issues = Vec::new();
    let mut targets = BTreeSet::new();
    let mut sources = BTreeSet::new();
    for &v in &h.targets {
        if !targets.insert(v) {
            issues.push(Issue::DuplicateVertex(v));
        }
    }
    for &v in &h.sources {
        if !sources.insert(v) || targets.contains(&v) {
            issues.push(Issue::DuplicateVertex(v));
        }
    }
    let mut edges = BTreeSet::new();
    for &e in &h.edges {
        if !edges.insert(e) {
            issues.push(Issue::DuplicateEdge(e));
        }
    }

    for k in h.left.keys().filter(|k| !targets.contains(k)) {
        issues.push(Issue::StrayEntry(format!("left of {k}")));
    }
    for k in h.right.keys().filter(|k| !sources.contains(k)) {
        issues.push(Issue::StrayEntry(format!("right of {k}")));
    }
    for k in h.conn.keys().filter(|k| !targets.contains(k)) {
        issues.push(Issue::StrayEntry(format!("conn of {k}")));
    }
    for k in h.labels.keys().filter(|k| !edges.contains(k)) {
        issues.push(Issue::StrayEntry(format!("label of {k}")));
    }
    for k in h.tlabels.keys().filter(|k| !targets.contains(k)) {
        issues.push(Issue::StrayEntry(format!("object label of target {k}")));
    }
    for k in h.slabels.keys().filter(|k| !sources.contains(k)) {
        issues.push(Issue::StrayEntry(format!("object label of source {k}")));
    }

    let mut edge_targets: BTreeMap<EdgeId, Vec<VertexId>> = BTreeMap::new();
    let mut edge_sources: BTreeMap<EdgeId, Vec<VertexId>> = BTreeMap::new();
    for &v in &h.targets {
        match h.left.get(&v) {
            None => issues.push(Issue::MissingLeft(v)),
            Some(Port::Edge(e)) if !edges.contains(e) => {
                issues.push(Issue::UnknownPortEdge { vertex: v, edge: *e })
            }
            Some(Port::Edge(e)) => edge_targets.entry(*e).or_default().push(v),
            Some(Port::Interface) => {}
        }
        if !h.tlabels.contains_key(&v) {
            issues.push(Issue::MissingObject(v));
        }
    }
    for &v in &h.sources {
        match h.right.get(&v) {
            None => issues.push(Issue::MissingRight(v)),
            Some(Port::Edge(e)) if !edges.contains(e) => {
                issues.push(Issue::UnknownPortEdge { vertex: v, edge: *e })
            }
            Some(Port::Edge(e)) => edge_sources.entry(*e).or_default().push(v),
            Some(Port::Interface) => {}
        }
        if !h.slabels.contains_key(&v) {
            issues.push(Issue::MissingObject(v));
        }
    }

    let mut hit: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for &v in &h.targets {
        match h.conn.get(&v) {
            None => issues.push(Issue::MissingConn(v)),
            Some(s) if !sources.contains(s) => issues.push(Issue::ConnOutsideSources {
                target: v,
                source: *s,
            }),
            Some(s) => {
                if let Some(prev) = hit.insert(*s, v) {
                    issues.push(Issue::ConnNotInjective {
                        source: *s,
                        targets: (prev, v),
                    });
                }
                if let (Some(a), Some(b)) = (h.tlabels.get(&v), h.slabels.get(s)) {
                    if a != b {
                        issues.push(Issue::WireObject {
                            target: v,
                            source: *s,
                        });
                    }
                }
            }
        }
    }
    for &s in &h.sources {
        if !hit.contains_key(&s) {
            issues.push(Issue::ConnNotSurjective(s));
        }
    }

    let empty = Vec::new();
    for &e in &h.edges {
        let Some(label) = h.labels.get(&e) else {
            issues.push(Issue::MissingLabel(e));
            continue;
        };
        let (dom, cod) = (label.dom(), label.cod());
        let srcs = edge_sources.get(&e).unwrap_or(&empty);
        let tgts = edge_targets.get(&e).unwrap_or(&empty);
        if srcs.len() != dom.len() {
            issues.push(Issue::SourceArity {
                edge: e,
                expected: dom.len(),
                found: srcs.len(),
            });
        } else {
            for (v, obj) in srcs.iter().zip(dom.objects()) {
                if let Some(found) = h.slabels.get(v).filter(|f| *f != obj) {
                    issues.push(Issue::SourceObject {
                        edge: e,
                        vertex: *v,
                        expected: obj.clone(),
                        found: found.clone(),
                    });
                }
            }
        }
        if tgts.len() != cod.len() {
            issues.push(Issue::TargetArity {
                edge: e,
                expected: cod.len(),
                found: tgts.len(),
            });
        } else {
            for (v, obj) in tgts.iter().zip(cod.objects()) {
                if let Some(found) = h.tlabels.get(v).filter(|f| *f != obj) {
                    issues.push(Issue::TargetObject {
                        edge: e,
                        vertex: *v,
                        expected: obj.clone(),
                        found: found.clone(),
                    });
                }
            }
        }
    }
    ValidationReport { issues }
}
