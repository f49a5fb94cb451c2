//! Finding occurrences of a left-hand side, up to wire homeomorphism.
//!
//! Edges of the left-hand side go to distinct edges of the host with the
//! same label, and wires between two of them go to host wires between the
//! corresponding ports. Interface wires only pin down one end, so an output
//! wire and an input wire of the pattern may land on the same host wire; the
//! host is then expanded with identity edges until the occurrence is an
//! embedding. Bare wires of a saturated rule go to distinct host wires that
//! no internal wire uses.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use super::RewriteError;
use crate::hypergraph::{expand_in_place, EdgeId, EdgeLabel, Homomorphism, Hypergraph, Port, VertexId};

/// An occurrence of a left-hand side in a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Each generator edge of the left-hand side to its host edge.
    pub edges: BTreeMap<EdgeId, EdgeId>,
    /// Each input starting a bare wire to the host wire, named by its
    /// target, that carries it.
    pub bare: BTreeMap<VertexId, VertexId>,
}

impl Matching {
    /// The host edges covered, in ascending id order.
    pub fn host_edges(&self) -> Vec<EdgeId> {
        let mut es: Vec<EdgeId> = self.edges.values().copied().collect();
        es.sort();
        es
    }

    /// Expands `g` where needed and returns it with an embedding of `l`.
    pub fn realize(&self, l: &Hypergraph, g: &Hypergraph) -> Result<(Hypergraph, Homomorphism), RewriteError> {
        let linc = l.incidence();
        let ginc = g.incidence();
        let mut host = g.clone();
        let mut hom = Homomorphism::default();
        for (&e, &ge) in &self.edges {
            if !g.labels.contains_key(&ge) {
                return Err(RewriteError::NotEmbedding(format!("matching: unknown host edge {ge}")));
            }
            hom.edges.insert(e, ge);
            for (a, b) in linc.edge_targets[&e].iter().zip(&ginc.edge_targets[&ge]) {
                hom.targets.insert(*a, *b);
            }
            for (a, b) in linc.edge_sources[&e].iter().zip(&ginc.edge_sources[&ge]) {
                hom.sources.insert(*a, *b);
            }
        }

        #[derive(Default)]
        struct Uses {
            out: Option<VertexId>,
            bare: Option<(VertexId, EdgeId, VertexId, VertexId, VertexId)>,
            inp: Option<VertexId>,
        }
        let mut uses: BTreeMap<VertexId, Uses> = BTreeMap::new();
        let generator = |p: Port| matches!(p, Port::Edge(e) if !l.labels[&e].is_identity());
        for (&t, &s) in &l.conn {
            match (l.left[&t], l.right[&s]) {
                (p, Port::Interface) if generator(p) => {
                    uses.entry(hom.targets[&t]).or_default().out = Some(s);
                }
                (Port::Interface, p) if generator(p) => {
                    let gt = ginc.conn_inv[&hom.sources[&s]];
                    uses.entry(gt).or_default().inp = Some(t);
                }
                (Port::Interface, Port::Edge(x)) => {
                    let t_out = linc.edge_targets[&x][0];
                    let o = l.conn[&t_out];
                    let gt = *self
                        .bare
                        .get(&t)
                        .ok_or_else(|| RewriteError::NotEmbedding(format!("matching: bare wire at {t} unplaced")))?;
                    uses.entry(gt).or_default().bare = Some((t, x, s, t_out, o));
                }
                _ => {}
            }
        }

        let split = |host: &mut Hypergraph, cur: VertexId| -> Result<(VertexId, VertexId, EdgeId), RewriteError> {
            let x = expand_in_place(host, cur)?;
            let s = host.conn[&cur];
            let t = *host.targets.last().expect("expansion adds a target");
            Ok((s, t, x))
        };
        for (gt, u) in uses {
            let mut cur = gt;
            if let Some(o) = u.out {
                if u.bare.is_some() || u.inp.is_some() {
                    let (s, t, _) = split(&mut host, cur)?;
                    hom.sources.insert(o, s);
                    cur = t;
                } else {
                    hom.sources.insert(o, host.conn[&cur]);
                }
            }
            if let Some((i, x, s_in, t_out, o)) = u.bare {
                hom.targets.insert(i, cur);
                let (s, t, gx) = split(&mut host, cur)?;
                hom.edges.insert(x, gx);
                hom.sources.insert(s_in, s);
                hom.targets.insert(t_out, t);
                cur = t;
                if u.inp.is_some() {
                    let (s, t, _) = split(&mut host, cur)?;
                    hom.sources.insert(o, s);
                    cur = t;
                } else {
                    hom.sources.insert(o, host.conn[&cur]);
                }
            }
            if let Some(i) = u.inp {
                hom.targets.insert(i, cur);
            }
        }
        Ok((host, hom))
    }
}

/// A wire between two generator edges of the pattern: target slot `j` of
/// edge `a` feeds source slot `k` of edge `b`.
#[derive(Debug, Clone, Copy)]
struct Link {
    a: EdgeId,
    j: usize,
    b: EdgeId,
    k: usize,
}

struct Search<'a> {
    l: &'a Hypergraph,
    g: &'a Hypergraph,
    order: Vec<EdgeId>,
    links: Vec<Link>,
    gtargets: BTreeMap<EdgeId, Vec<VertexId>>,
    gsources: BTreeMap<EdgeId, Vec<VertexId>>,
    gport_t: BTreeMap<VertexId, (EdgeId, usize)>,
    gport_s: BTreeMap<VertexId, (EdgeId, usize)>,
    gconn_inv: HashMap<VertexId, VertexId>,
    bare: Vec<VertexId>,
    limit: usize,
}

impl Search<'_> {
    fn candidates(&self, e: EdgeId, map: &BTreeMap<EdgeId, EdgeId>) -> Vec<EdgeId> {
        for link in &self.links {
            if link.a == e {
                if let Some(gb) = map.get(&link.b) {
                    let gs = self.gsources[gb][link.k];
                    let gt = self.gconn_inv[&gs];
                    return self.gport_t.get(&gt).filter(|p| p.1 == link.j).map(|p| p.0).into_iter().collect();
                }
            }
            if link.b == e {
                if let Some(ga) = map.get(&link.a) {
                    let gt = self.gtargets[ga][link.j];
                    let gs = self.g.conn[&gt];
                    return self.gport_s.get(&gs).filter(|p| p.1 == link.k).map(|p| p.0).into_iter().collect();
                }
            }
        }
        self.g.edges.clone()
    }

    fn consistent(&self, e: EdgeId, map: &BTreeMap<EdgeId, EdgeId>) -> bool {
        self.links.iter().filter(|k| k.a == e || k.b == e).all(|link| {
            match (map.get(&link.a), map.get(&link.b)) {
                (Some(ga), Some(gb)) => self.g.conn[&self.gtargets[ga][link.j]] == self.gsources[gb][link.k],
                _ => true,
            }
        })
    }

    fn edges(&self, depth: usize, map: &mut BTreeMap<EdgeId, EdgeId>, used: &mut BTreeSet<EdgeId>, out: &mut Vec<Matching>) {
        if out.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            let internal: BTreeSet<VertexId> = self
                .links
                .iter()
                .map(|link| self.gtargets[&map[&link.a]][link.j])
                .collect();
            let free: Vec<VertexId> = self.g.targets.iter().copied().filter(|t| !internal.contains(t)).collect();
            self.place_bare(0, &free, map, &mut BTreeMap::new(), out);
            return;
        }
        let e = self.order[depth];
        for ge in self.candidates(e, map) {
            if used.contains(&ge) || self.g.labels[&ge] != self.l.labels[&e] {
                continue;
            }
            map.insert(e, ge);
            if self.consistent(e, map) {
                used.insert(ge);
                self.edges(depth + 1, map, used, out);
                used.remove(&ge);
            }
            map.remove(&e);
            if out.len() >= self.limit {
                return;
            }
        }
    }

    fn place_bare(
        &self,
        idx: usize,
        free: &[VertexId],
        map: &BTreeMap<EdgeId, EdgeId>,
        bare: &mut BTreeMap<VertexId, VertexId>,
        out: &mut Vec<Matching>,
    ) {
        if out.len() >= self.limit {
            return;
        }
        if idx == self.bare.len() {
            out.push(Matching {
                edges: map.clone(),
                bare: bare.clone(),
            });
            return;
        }
        let i = self.bare[idx];
        for &gt in free {
            if bare.values().any(|&v| v == gt) || self.g.tlabels[&gt] != self.l.tlabels[&i] {
                continue;
            }
            bare.insert(i, gt);
            self.place_bare(idx + 1, free, map, bare, out);
            bare.remove(&i);
        }
    }
}

/// Every occurrence of the left-hand side `l` in `g`, in a deterministic
/// order that follows the edge order of `g`.
pub fn find_matchings(l: &Hypergraph, g: &Hypergraph) -> Vec<Matching> {
    find_matchings_limited(l, g, usize::MAX)
}

/// Whether `g` has at least as many edges of each label as `gens` needs.
fn labels_available(l: &Hypergraph, gens: &[EdgeId], g: &Hypergraph) -> bool {
    let mut need: HashMap<&EdgeLabel, usize> = HashMap::new();
    for e in gens {
        *need.entry(&l.labels[e]).or_default() += 1;
    }
    for lab in g.labels.values() {
        if let Some(n) = need.get_mut(lab) {
            *n = n.saturating_sub(1);
        }
    }
    need.values().all(|&n| n == 0)
}

pub(crate) fn find_matchings_limited(l: &Hypergraph, g: &Hypergraph, limit: usize) -> Vec<Matching> {
    let gens: Vec<EdgeId> = l.edges.iter().copied().filter(|e| !l.labels[e].is_identity()).collect();
    if gens.len() > g.edges.len() || !labels_available(l, &gens, g) {
        return Vec::new();
    }
    let linc = l.incidence();
    let ginc = g.incidence();
    let mut links = Vec::new();
    for (&t, &s) in &l.conn {
        if let (Port::Edge(a), Port::Edge(b)) = (l.left[&t], l.right[&s]) {
            if l.labels[&a].is_identity() || l.labels[&b].is_identity() {
                continue;
            }
            links.push(Link {
                a,
                j: linc.tslot[&t],
                b,
                k: linc.sslot[&s],
            });
        }
    }
    // Visit connected edges consecutively so most edges are pinned down by
    // an already matched neighbour.
    let mut order = Vec::with_capacity(gens.len());
    let mut seen = BTreeSet::new();
    for &start in &gens {
        if !seen.insert(start) {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        while let Some(e) = queue.pop_front() {
            order.push(e);
            for link in &links {
                for (x, y) in [(link.a, link.b), (link.b, link.a)] {
                    if x == e && seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    let bare: Vec<VertexId> = linc
        .inputs
        .iter()
        .copied()
        .filter(|i| matches!(l.right[&l.conn[i]], Port::Edge(x) if l.labels[&x].is_identity()))
        .collect();
    let mut gport_t = BTreeMap::new();
    let mut gport_s = BTreeMap::new();
    let mut gtargets = BTreeMap::new();
    let mut gsources = BTreeMap::new();
    for &e in &g.edges {
        let ts = ginc.edge_targets[&e].clone();
        let ss = ginc.edge_sources[&e].clone();
        for (j, t) in ts.iter().enumerate() {
            gport_t.insert(*t, (e, j));
        }
        for (k, s) in ss.iter().enumerate() {
            gport_s.insert(*s, (e, k));
        }
        gtargets.insert(e, ts);
        gsources.insert(e, ss);
    }
    let search = Search {
        l,
        g,
        order,
        links,
        gtargets,
        gsources,
        gport_t,
        gport_s,
        gconn_inv: ginc.conn_inv.clone(),
        bare,
        limit,
    };
    let mut out = Vec::new();
    search.edges(0, &mut BTreeMap::new(), &mut BTreeSet::new(), &mut out);
    out
}
