//! Wire homeomorphisms: graphs that differ only by identity edges.

use std::collections::HashMap;

use super::{EdgeId, EdgeLabel, GraphError, Hypergraph, Port, VertexId};

/// Removes every identity edge, joining the wires on either side of it.
pub fn smooth(h: &Hypergraph) -> Hypergraph {
    let mut g = h.clone();
    let ids: Vec<EdgeId> = g
        .edges
        .iter()
        .copied()
        .filter(|e| g.labels[e].is_identity())
        .collect();
    if ids.is_empty() {
        return g;
    }
    let inc = g.incidence();
    let mut conn_inv: HashMap<VertexId, VertexId> = inc.conn_inv.clone();
    for e in ids {
        let s_in = inc.edge_sources[&e][0];
        let t_out = inc.edge_targets[&e][0];
        let a = conn_inv[&s_in];
        let b = g.conn[&t_out];
        g.remove_edge(e);
        g.remove_target(t_out);
        g.remove_source(s_in);
        conn_inv.remove(&s_in);
        if a != t_out {
            g.conn.insert(a, b);
            conn_inv.insert(b, a);
        }
    }
    g
}

/// Inserts an identity edge on the wire leaving target `w`.
///
/// Returns the new graph and the id of the inserted edge.
pub fn expand(h: &Hypergraph, w: VertexId) -> Result<(Hypergraph, EdgeId), GraphError> {
    let mut g = h.clone();
    let e = expand_in_place(&mut g, w)?;
    Ok((g, e))
}

/// Expands every listed wire, in order.
pub fn expand_all(h: &Hypergraph, wires: &[VertexId]) -> Result<(Hypergraph, Vec<EdgeId>), GraphError> {
    let mut g = h.clone();
    let mut es = Vec::with_capacity(wires.len());
    for &w in wires {
        es.push(expand_in_place(&mut g, w)?);
    }
    Ok((g, es))
}

pub(crate) fn expand_in_place(g: &mut Hypergraph, w: VertexId) -> Result<EdgeId, GraphError> {
    let Some(&old) = g.conn.get(&w) else {
        return Err(GraphError::NotATarget(w));
    };
    let obj = g.tlabels[&w].clone();
    let e = g.push_edge(EdgeLabel::Identity(obj.clone()));
    let s = g.push_source(Port::Edge(e), obj.clone());
    let t = g.push_target(Port::Edge(e), obj);
    g.conn.insert(w, s);
    g.conn.insert(t, old);
    Ok(e)
}
