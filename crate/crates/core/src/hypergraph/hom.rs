use std::collections::{BTreeMap, BTreeSet};

use super::{EdgeId, Hypergraph, Port, VertexId};

/// A homomorphism between linear hypergraphs, given by its three components.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Homomorphism {
    pub targets: BTreeMap<VertexId, VertexId>,
    pub sources: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeId>,
}

fn injective<K, V: Ord>(m: &BTreeMap<K, V>) -> bool {
    let mut seen = BTreeSet::new();
    m.values().all(|v| seen.insert(v))
}

impl Homomorphism {
    /// The identity on `g`.
    pub fn identity(g: &Hypergraph) -> Self {
        Homomorphism {
            targets: g.targets.iter().map(|&v| (v, v)).collect(),
            sources: g.sources.iter().map(|&v| (v, v)).collect(),
            edges: g.edges.iter().map(|&e| (e, e)).collect(),
        }
    }

    /// Image of a vertex, whichever side it lives on.
    pub fn vertex(&self, v: VertexId) -> Option<VertexId> {
        self.targets
            .get(&v)
            .or_else(|| self.sources.get(&v))
            .copied()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Homomorphism) -> Homomorphism {
        Homomorphism {
            targets: self
                .targets
                .iter()
                .filter_map(|(k, v)| next.targets.get(v).map(|w| (*k, *w)))
                .collect(),
            sources: self
                .sources
                .iter()
                .filter_map(|(k, v)| next.sources.get(v).map(|w| (*k, *w)))
                .collect(),
            edges: self
                .edges
                .iter()
                .filter_map(|(k, v)| next.edges.get(v).map(|w| (*k, *w)))
                .collect(),
        }
    }

    /// Componentwise inverse; meaningful for injective homomorphisms.
    pub fn inverse(&self) -> Homomorphism {
        Homomorphism {
            targets: self.targets.iter().map(|(a, b)| (*b, *a)).collect(),
            sources: self.sources.iter().map(|(a, b)| (*b, *a)).collect(),
            edges: self.edges.iter().map(|(a, b)| (*b, *a)).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        injective(&self.targets) && injective(&self.sources) && injective(&self.edges)
    }

    /// Checks that the maps are total on `from` and preserve edge ports,
    /// connections and labels.
    pub fn is_homomorphism(&self, from: &Hypergraph, to: &Hypergraph) -> bool {
        self.check(from, to).is_ok()
    }

    /// Like [`Homomorphism::is_homomorphism`] but explains the first failure.
    pub fn check(&self, from: &Hypergraph, to: &Hypergraph) -> Result<(), String> {
        let to_t: BTreeSet<_> = to.targets.iter().collect();
        let to_s: BTreeSet<_> = to.sources.iter().collect();
        let to_e: BTreeSet<_> = to.edges.iter().collect();
        for v in &from.targets {
            match self.targets.get(v) {
                Some(w) if to_t.contains(w) => {
                    if from.tlabels.get(v) != to.tlabels.get(w) {
                        return Err(format!("target {v} changes object label"));
                    }
                }
                Some(w) => return Err(format!("target {v} maps to {w}, not a target")),
                None => return Err(format!("target {v} is unmapped")),
            }
        }
        for v in &from.sources {
            match self.sources.get(v) {
                Some(w) if to_s.contains(w) => {
                    if from.slabels.get(v) != to.slabels.get(w) {
                        return Err(format!("source {v} changes object label"));
                    }
                }
                Some(w) => return Err(format!("source {v} maps to {w}, not a source")),
                None => return Err(format!("source {v} is unmapped")),
            }
        }
        let fi = from.incidence();
        let ti = to.incidence();
        for e in &from.edges {
            let Some(img) = self.edges.get(e).filter(|x| to_e.contains(x)) else {
                return Err(format!("edge {e} is unmapped or maps outside"));
            };
            if from.labels[e] != to.labels[img] {
                return Err(format!("edge {e} changes label"));
            }
            let srcs: Vec<_> = fi.edge_sources[e].iter().map(|v| self.sources[v]).collect();
            if srcs != ti.edge_sources[img] {
                return Err(format!("sources of edge {e} are not preserved"));
            }
            let tgts: Vec<_> = fi.edge_targets[e].iter().map(|v| self.targets[v]).collect();
            if tgts != ti.edge_targets[img] {
                return Err(format!("targets of edge {e} are not preserved"));
            }
        }
        for (t, s) in &from.conn {
            if to.conn.get(&self.targets[t]) != Some(&self.sources[s]) {
                return Err(format!("connection {t} -> {s} is not preserved"));
            }
        }
        Ok(())
    }

    /// A homomorphism whose components are all injective.
    pub fn is_embedding(&self, from: &Hypergraph, to: &Hypergraph) -> bool {
        self.is_injective() && self.is_homomorphism(from, to)
    }

    /// A bijective homomorphism preserving the ordered interfaces.
    pub fn is_isomorphism(&self, from: &Hypergraph, to: &Hypergraph) -> bool {
        if from.targets.len() != to.targets.len()
            || from.sources.len() != to.sources.len()
            || from.edges.len() != to.edges.len()
        {
            return false;
        }
        if !self.is_embedding(from, to) {
            return false;
        }
        let ins: Vec<_> = from.inputs().iter().map(|v| self.targets[v]).collect();
        let outs: Vec<_> = from.outputs().iter().map(|v| self.sources[v]).collect();
        ins == to.inputs() && outs == to.outputs()
    }

    /// Images of the vertices of `from` attached to the interface, used to
    /// reason about which parts of the codomain a match touches.
    pub fn maps_interface_to_interface(&self, from: &Hypergraph, to: &Hypergraph) -> bool {
        from.targets.iter().all(|v| {
            from.left[v] != Port::Interface || to.left[&self.targets[v]] == Port::Interface
        }) && from.sources.iter().all(|v| {
            from.right[v] != Port::Interface || to.right[&self.sources[v]] == Port::Interface
        })
    }
}
