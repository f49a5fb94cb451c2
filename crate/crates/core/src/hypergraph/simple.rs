//! Simple hypergraphs and the inclusion of linear hypergraphs into them.
//!
//! A linear hypergraph becomes a simple one by fusing every target with the
//! source it is connected to. Pushouts always exist for simple hypergraphs,
//! which makes them a convenient ground truth for gluing linear ones.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{EdgeId, EdgeLabel, Homomorphism, Hypergraph, VertexId};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimpleHypergraph {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
    pub src: BTreeMap<EdgeId, Vec<VertexId>>,
    pub tgt: BTreeMap<EdgeId, Vec<VertexId>>,
    pub labels: BTreeMap<EdgeId, EdgeLabel>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SimpleHomomorphism {
    pub vertices: BTreeMap<VertexId, VertexId>,
    pub edges: BTreeMap<EdgeId, EdgeId>,
}

/// Fuses each wire into a single vertex named after its source end.
pub fn to_simple(h: &Hypergraph) -> SimpleHypergraph {
    let inc = h.incidence();
    SimpleHypergraph {
        vertices: h.sources.iter().copied().collect(),
        edges: h.edges.iter().copied().collect(),
        src: h
            .edges
            .iter()
            .map(|e| (*e, inc.edge_sources[e].clone()))
            .collect(),
        tgt: h
            .edges
            .iter()
            .map(|e| (*e, inc.edge_targets[e].iter().map(|t| h.conn[t]).collect()))
            .collect(),
        labels: h.labels.clone(),
    }
}

impl Homomorphism {
    /// The image of a linear homomorphism under the inclusion.
    pub fn to_simple(&self) -> SimpleHomomorphism {
        SimpleHomomorphism {
            vertices: self.sources.clone(),
            edges: self.edges.clone(),
        }
    }
}

impl SimpleHomomorphism {
    pub fn is_homomorphism(&self, from: &SimpleHypergraph, to: &SimpleHypergraph) -> bool {
        from.vertices
            .iter()
            .all(|v| self.vertices.get(v).is_some_and(|w| to.vertices.contains(w)))
            && from.edges.iter().all(|e| {
                let Some(x) = self.edges.get(e).filter(|x| to.edges.contains(x)) else {
                    return false;
                };
                let map = |vs: &Vec<VertexId>| -> Vec<VertexId> {
                    vs.iter().map(|v| self.vertices[v]).collect()
                };
                from.labels[e] == to.labels[x]
                    && map(&from.src[e]) == to.src[x]
                    && map(&from.tgt[e]) == to.tgt[x]
            })
    }
}

impl SimpleHypergraph {
    /// True when no vertex is a source of two edge ports or a target of two
    /// edge ports, i.e. the graph is the image of a linear hypergraph.
    pub fn is_linear(&self) -> bool {
        let mut srcs = BTreeSet::new();
        let mut tgts = BTreeSet::new();
        self.src.values().flatten().all(|v| srcs.insert(*v))
            && self.tgt.values().flatten().all(|v| tgts.insert(*v))
    }

    /// Pushout of `left: k → a` and `right: k → b`, with the two coprojections.
    pub fn pushout(
        k: &SimpleHypergraph,
        a: &SimpleHypergraph,
        left: &SimpleHomomorphism,
        b: &SimpleHypergraph,
        right: &SimpleHomomorphism,
    ) -> (SimpleHypergraph, SimpleHomomorphism, SimpleHomomorphism) {
        // Elements are tagged 0 for `a` and 1 for `b` before quotienting.
        let mut vuf = UnionFind::default();
        let mut euf = UnionFind::default();
        for v in &a.vertices {
            vuf.add((0, v.0));
        }
        for v in &b.vertices {
            vuf.add((1, v.0));
        }
        for e in &a.edges {
            euf.add((0, e.0));
        }
        for e in &b.edges {
            euf.add((1, e.0));
        }
        for v in &k.vertices {
            vuf.union((0, left.vertices[v].0), (1, right.vertices[v].0));
        }
        for e in &k.edges {
            euf.union((0, left.edges[e].0), (1, right.edges[e].0));
        }
        let mut vname: HashMap<(u8, u64), VertexId> = HashMap::new();
        let mut ename: HashMap<(u8, u64), EdgeId> = HashMap::new();
        let mut out = SimpleHypergraph::default();
        let mut into_a = SimpleHomomorphism::default();
        let mut into_b = SimpleHomomorphism::default();
        for (tag, g, hom) in [(0u8, a, &mut into_a), (1u8, b, &mut into_b)] {
            for v in &g.vertices {
                let root = vuf.find((tag, v.0));
                let w = *vname.entry(root).or_insert_with(VertexId::fresh);
                out.vertices.insert(w);
                hom.vertices.insert(*v, w);
            }
            for e in &g.edges {
                let root = euf.find((tag, e.0));
                let x = *ename.entry(root).or_insert_with(EdgeId::fresh);
                hom.edges.insert(*e, x);
                if out.edges.insert(x) {
                    out.labels.insert(x, g.labels[e].clone());
                    out.src
                        .insert(x, g.src[e].iter().map(|v| hom.vertices[v]).collect());
                    out.tgt
                        .insert(x, g.tgt[e].iter().map(|v| hom.vertices[v]).collect());
                }
            }
        }
        (out, into_a, into_b)
    }
}

#[derive(Default)]
struct UnionFind {
    parent: HashMap<(u8, u64), (u8, u64)>,
}

impl UnionFind {
    fn add(&mut self, x: (u8, u64)) {
        self.parent.entry(x).or_insert(x);
    }

    fn find(&mut self, x: (u8, u64)) -> (u8, u64) {
        let p = self.parent[&x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.parent.insert(x, r);
        r
    }

    fn union(&mut self, x: (u8, u64), y: (u8, u64)) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
            self.parent.insert(hi, lo);
        }
    }
}
