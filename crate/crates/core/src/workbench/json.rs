//! Graphs as JSON.
//!
//! ```json
//! {
//!   "targets": [0, 3],
//!   "sources": [1, 4],
//!   "edges": [{"id": 2, "label": "f"}],
//!   "left": {"0": "interface", "3": 2},
//!   "right": {"1": 2, "4": "interface"},
//!   "conn": {"0": 1, "3": 4}
//! }
//! ```
//!
//! Arrays carry the orders of the interfaces and of each edge's ports.
//! `vtlabels` and `vslabels` give the objects of targets and sources and are
//! omitted when every vertex is a plain wire. An edge's type is read off its
//! ports, so no signature is needed. Identity edges are labelled `id`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::WorkbenchError;
use crate::hypergraph::{bump_past, EdgeId, EdgeLabel, Hypergraph, Port, VertexId};
use crate::term::{Object, Word};

const INTERFACE: &str = "interface";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct EdgeJson {
    id: u64,
    label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum PortJson {
    Edge(u64),
    Interface(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct GraphJson {
    targets: Vec<u64>,
    sources: Vec<u64>,
    edges: Vec<EdgeJson>,
    left: BTreeMap<u64, PortJson>,
    right: BTreeMap<u64, PortJson>,
    conn: BTreeMap<u64, u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    vtlabels: BTreeMap<u64, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    vslabels: BTreeMap<u64, String>,
}

fn port_json(p: Port) -> PortJson {
    match p {
        Port::Interface => PortJson::Interface(INTERFACE.into()),
        Port::Edge(e) => PortJson::Edge(e.0),
    }
}

fn port_of(v: u64, p: Option<&PortJson>) -> Result<Port, WorkbenchError> {
    match p {
        Some(PortJson::Edge(e)) => Ok(Port::Edge(EdgeId(*e))),
        Some(PortJson::Interface(s)) if s == INTERFACE => Ok(Port::Interface),
        Some(PortJson::Interface(s)) => Err(WorkbenchError::Json(format!("vertex {v}: bad port `{s}`"))),
        None => Err(WorkbenchError::Json(format!("vertex {v} has no port"))),
    }
}

fn object_of(s: Option<&String>) -> Object {
    match s {
        None => Object::Wire,
        Some(s) if s == "_" => Object::Wire,
        Some(s) => Object::named(s),
    }
}

/// The objects of the vertices that are not plain wires.
fn named(vs: &[VertexId], labels: &BTreeMap<VertexId, Object>) -> BTreeMap<u64, String> {
    vs.iter()
        .filter(|v| labels[v] != Object::Wire)
        .map(|v| (v.0, labels[v].to_string()))
        .collect()
}

/// Serialises `h` as it is, without renumbering.
pub fn to_json(h: &Hypergraph) -> String {
    let g = GraphJson {
        targets: h.targets.iter().map(|v| v.0).collect(),
        sources: h.sources.iter().map(|v| v.0).collect(),
        edges: h
            .edges
            .iter()
            .map(|e| EdgeJson {
                id: e.0,
                label: h.labels[e].name().to_string(),
            })
            .collect(),
        left: h.left.iter().map(|(v, p)| (v.0, port_json(*p))).collect(),
        right: h.right.iter().map(|(v, p)| (v.0, port_json(*p))).collect(),
        conn: h.conn.iter().map(|(t, s)| (t.0, s.0)).collect(),
        vtlabels: named(&h.targets, &h.tlabels),
        vslabels: named(&h.sources, &h.slabels),
    };
    serde_json::to_string_pretty(&g).expect("graphs serialise")
}

/// Serialises the canonical renumbering of `h`, so equal graphs give equal
/// text.
pub fn save(h: &Hypergraph) -> String {
    to_json(&h.canonical())
}

/// Reads a graph and checks that it is well formed.
pub fn load(text: &str) -> Result<Hypergraph, WorkbenchError> {
    let g: GraphJson = serde_json::from_str(text).map_err(|e| WorkbenchError::Json(e.to_string()))?;
    let mut h = Hypergraph::new();
    for &t in &g.targets {
        let v = VertexId(t);
        h.targets.push(v);
        h.left.insert(v, port_of(t, g.left.get(&t))?);
        h.tlabels.insert(v, object_of(g.vtlabels.get(&t)));
        let s = g
            .conn
            .get(&t)
            .ok_or_else(|| WorkbenchError::Json(format!("target {t} has no conn")))?;
        h.conn.insert(v, VertexId(*s));
    }
    for &s in &g.sources {
        let v = VertexId(s);
        h.sources.push(v);
        h.right.insert(v, port_of(s, g.right.get(&s))?);
        h.slabels.insert(v, object_of(g.vslabels.get(&s)));
    }
    // An edge consumes the sources in its group and produces the targets.
    let ports = |vs: &[VertexId], side: &BTreeMap<VertexId, Port>, labels: &BTreeMap<VertexId, Object>, e: EdgeId| {
        vs.iter()
            .filter(|v| side[v] == Port::Edge(e))
            .map(|v| labels[v].clone())
            .collect::<Word>()
    };
    for e in &g.edges {
        let id = EdgeId(e.id);
        let dom = ports(&h.sources, &h.right, &h.slabels, id);
        let cod = ports(&h.targets, &h.left, &h.tlabels, id);
        let label = if e.label == "id" {
            if dom.len() != 1 || dom != cod {
                return Err(WorkbenchError::Json(format!("identity edge {} must have type A -> A", e.id)));
            }
            EdgeLabel::Identity(dom.objects()[0].clone())
        } else {
            EdgeLabel::generator(&e.label, dom, cod)
        };
        h.edges.push(id);
        h.labels.insert(id, label);
    }
    let max = g.targets.iter().chain(&g.sources).chain(g.edges.iter().map(|e| &e.id)).max();
    if let Some(&m) = max {
        bump_past(m);
    }
    h.validate().into_result()?;
    Ok(h)
}
