//! The two halves of a double-pushout step: removing a matched left-hand
//! side and gluing in a right-hand side.

use std::collections::{BTreeMap, BTreeSet};

use super::RewriteError;
use crate::hypergraph::{EdgeId, Homomorphism, Hypergraph, Port, VertexId};

/// True when every input of `k` lands on an input under `m` or under `n`,
/// and every output of `k` lands on an output under `m` or under `n`.
///
/// This is exactly what keeps the pushout of `m` and `n` linear.
pub fn boundary_coherent(
    k: &Hypergraph,
    m: &Homomorphism,
    mg: &Hypergraph,
    n: &Homomorphism,
    ng: &Hypergraph,
) -> bool {
    incoherent_vertex(k, m, mg, n, ng).is_none()
}

fn incoherent_vertex(
    k: &Hypergraph,
    m: &Homomorphism,
    mg: &Hypergraph,
    n: &Homomorphism,
    ng: &Hypergraph,
) -> Option<VertexId> {
    let is_in = |g: &Hypergraph, v: Option<&VertexId>| {
        v.is_some_and(|v| g.left.get(v) == Some(&Port::Interface))
    };
    let is_out = |g: &Hypergraph, v: Option<&VertexId>| {
        v.is_some_and(|v| g.right.get(v) == Some(&Port::Interface))
    };
    let bad_in = k
        .inputs()
        .into_iter()
        .find(|v| !is_in(mg, m.targets.get(v)) && !is_in(ng, n.targets.get(v)));
    bad_in.or_else(|| {
        k.outputs()
            .into_iter()
            .find(|v| !is_out(mg, m.sources.get(v)) && !is_out(ng, n.sources.get(v)))
    })
}

/// Removes the image of `l` from `g`, keeping the image of the interface
/// `k`. Interface vertices whose edge was removed become interface
/// vertices of the complement. The order of `g` is kept.
///
/// Returns the complement `c` with the maps `k → c` and `c → g`.
pub fn pushout_complement(
    k: &Hypergraph,
    leg: &Homomorphism,
    l: &Hypergraph,
    m: &Homomorphism,
    g: &Hypergraph,
) -> Result<(Hypergraph, Homomorphism, Homomorphism), RewriteError> {
    if !leg.is_embedding(k, l) {
        return Err(RewriteError::NotEmbedding("interface leg".into()));
    }
    if !m.is_embedding(l, g) {
        return Err(RewriteError::NotEmbedding("matching".into()));
    }
    let kept_t: BTreeSet<VertexId> = k.targets.iter().map(|v| m.targets[&leg.targets[v]]).collect();
    let kept_s: BTreeSet<VertexId> = k.sources.iter().map(|v| m.sources[&leg.sources[v]]).collect();
    let gone_t: BTreeSet<VertexId> = l
        .targets
        .iter()
        .map(|v| m.targets[v])
        .filter(|v| !kept_t.contains(v))
        .collect();
    let gone_s: BTreeSet<VertexId> = l
        .sources
        .iter()
        .map(|v| m.sources[v])
        .filter(|v| !kept_s.contains(v))
        .collect();
    let gone_e: BTreeSet<EdgeId> = m.edges.values().copied().collect();

    let mut c = g.clone();
    for &e in &gone_e {
        c.remove_edge(e);
    }
    for &v in &gone_t {
        c.remove_target(v);
    }
    for &v in &gone_s {
        c.remove_source(v);
    }
    for p in c.left.values_mut().chain(c.right.values_mut()) {
        if let Port::Edge(e) = p {
            if gone_e.contains(e) {
                *p = Port::Interface;
            }
        }
    }
    let into_c = leg.then(m);
    let into_g = Homomorphism::identity(&c);
    Ok((c, into_c, into_g))
}

/// Glues `r` onto `c` along the interface `k`.
///
/// Both legs must be embeddings and boundary coherent. Elements only in `r`
/// get fresh ids. The interface order of `c` is kept; vertices that end up
/// attached to edges of `r` follow the order of `r` so edge ports stay in
/// place.
pub fn pushout(
    k: &Hypergraph,
    into_c: &Homomorphism,
    c: &Hypergraph,
    into_r: &Homomorphism,
    r: &Hypergraph,
) -> Result<(Hypergraph, Homomorphism, Homomorphism), RewriteError> {
    if !into_c.is_embedding(k, c) || !into_r.is_embedding(k, r) {
        return Err(RewriteError::NotEmbedding("pushout leg".into()));
    }
    if let Some(v) = incoherent_vertex(k, into_c, c, into_r, r) {
        return Err(RewriteError::NotBoundaryCoherent(v));
    }
    // Where each vertex of `r` goes in the result.
    let mut vmap: BTreeMap<VertexId, VertexId> = BTreeMap::new();
    for (x, y) in k.targets.iter().map(|x| (into_r.targets[x], into_c.targets[x])) {
        vmap.insert(x, y);
    }
    for (x, y) in k.sources.iter().map(|x| (into_r.sources[x], into_c.sources[x])) {
        vmap.insert(x, y);
    }
    for v in r.vertices() {
        vmap.entry(v).or_insert_with(VertexId::fresh);
    }
    let emap: BTreeMap<EdgeId, EdgeId> = r.edges.iter().map(|e| (*e, EdgeId::fresh())).collect();
    let rport = |p: Port| match p {
        Port::Interface => Port::Interface,
        Port::Edge(e) => Port::Edge(emap[&e]),
    };

    let glued_t: BTreeMap<VertexId, VertexId> = r
        .targets
        .iter()
        .filter(|v| c.left.contains_key(&vmap[v]))
        .map(|v| (vmap[v], *v))
        .collect();
    let glued_s: BTreeMap<VertexId, VertexId> = r
        .sources
        .iter()
        .filter(|v| c.right.contains_key(&vmap[v]))
        .map(|v| (vmap[v], *v))
        .collect();

    let mut h = Hypergraph::new();
    h.edges = c.edges.clone();
    h.edges.extend(r.edges.iter().map(|e| emap[e]));
    h.labels = c.labels.clone();
    for e in &r.edges {
        h.labels.insert(emap[e], r.labels[e].clone());
    }

    let mut late_t = BTreeSet::new();
    for &v in &c.targets {
        let port = match (c.left[&v], glued_t.get(&v)) {
            (Port::Interface, Some(rv)) => rport(r.left[rv]),
            (p, _) => p,
        };
        h.left.insert(v, port);
        h.tlabels.insert(v, c.tlabels[&v].clone());
        h.conn.insert(v, c.conn[&v]);
        if matches!(port, Port::Edge(e) if !c.labels.contains_key(&e)) {
            late_t.insert(v);
        } else {
            h.targets.push(v);
        }
    }
    let mut late_s = BTreeSet::new();
    for &v in &c.sources {
        let port = match (c.right[&v], glued_s.get(&v)) {
            (Port::Interface, Some(rv)) => rport(r.right[rv]),
            (p, _) => p,
        };
        h.right.insert(v, port);
        h.slabels.insert(v, c.slabels[&v].clone());
        if matches!(port, Port::Edge(e) if !c.labels.contains_key(&e)) {
            late_s.insert(v);
        } else {
            h.sources.push(v);
        }
    }
    for v in &r.targets {
        let w = vmap[v];
        if glued_t.contains_key(&w) {
            if late_t.contains(&w) {
                h.targets.push(w);
            }
            continue;
        }
        h.targets.push(w);
        h.left.insert(w, rport(r.left[v]));
        h.tlabels.insert(w, r.tlabels[v].clone());
        h.conn.insert(w, vmap[&r.conn[v]]);
    }
    for v in &r.sources {
        let w = vmap[v];
        if glued_s.contains_key(&w) {
            if late_s.contains(&w) {
                h.sources.push(w);
            }
            continue;
        }
        h.sources.push(w);
        h.right.insert(w, rport(r.right[v]));
        h.slabels.insert(w, r.slabels[v].clone());
    }

    let from_c = Homomorphism::identity(c);
    let from_r = Homomorphism {
        targets: r.targets.iter().map(|v| (*v, vmap[v])).collect(),
        sources: r.sources.iter().map(|v| (*v, vmap[v])).collect(),
        edges: emap,
    };
    Ok((h, from_c, from_r))
}
