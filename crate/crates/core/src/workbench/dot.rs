//! Graphviz output. Each wire, a target fused with its connected source, is
//! drawn as a single dot `w{target}`. Edges are boxes `e{id}` (identity edges
//! are small circles) and the interfaces are grey `in{i}` and `out{j}` nodes.
//! Arrows into and out of an edge carry the port slot.

use std::fmt::Write;

use crate::hypergraph::{Hypergraph, Port};
use crate::term::Object;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT text for the canonical renumbering of `h`, so isomorphic graphs give
/// identical text.
pub fn to_dot(h: &Hypergraph) -> String {
    let g = h.canonical();
    let inc = g.incidence();
    let mut out = String::new();
    out.push_str("digraph G {\n  rankdir=LR;\n  node [fontname=\"monospace\"];\n");
    for i in 0..inc.inputs.len() {
        let _ = writeln!(out, "  in{i} [shape=circle, style=filled, fillcolor=grey, label=\"in {i}\"];");
    }
    for j in 0..inc.outputs.len() {
        let _ = writeln!(out, "  out{j} [shape=circle, style=filled, fillcolor=grey, label=\"out {j}\"];");
    }
    for e in &g.edges {
        let l = &g.labels[e];
        let _ = if l.is_identity() {
            writeln!(out, "  e{} [shape=circle, width=0.2, label=\"\"];", e.0)
        } else {
            writeln!(out, "  e{} [shape=box, label=\"{}\"];", e.0, escape(l.name()))
        };
    }
    for t in &g.targets {
        let s = g.conn[t];
        let w = format!("w{}", t.0);
        let _ = match &g.tlabels[t] {
            Object::Named(n) => writeln!(out, "  {w} [shape=point, xlabel=\"{}\"];", escape(n)),
            Object::Wire => writeln!(out, "  {w} [shape=point];"),
        };
        let _ = match g.left[t] {
            Port::Interface => {
                let i = inc.tslot[t];
                writeln!(out, "  in{i} -> {w} [arrowhead=none];")
            }
            Port::Edge(e) => writeln!(out, "  e{} -> {w} [arrowhead=none, taillabel=\"{}\"];", e.0, inc.tslot[t]),
        };
        let _ = match g.right[&s] {
            Port::Interface => writeln!(out, "  {w} -> out{};", inc.sslot[&s]),
            Port::Edge(e) => writeln!(out, "  {w} -> e{} [headlabel=\"{}\"];", e.0, inc.sslot[&s]),
        };
    }
    out.push_str("}\n");
    out
}
