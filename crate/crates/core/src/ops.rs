//! Graph constructors and the operations that make linear hypergraphs a
//! symmetric traced monoidal category.
//!
//! Operands whose ids overlap are freshened first, so callers never need to
//! keep carriers apart themselves.

use crate::hypergraph::{EdgeLabel, GraphError, Homomorphism, Hypergraph, Port};
use crate::term::{Object, Signature, Word};

/// `n` wires from the input interface straight to the output interface.
pub fn identity(n: &Word) -> Hypergraph {
    let mut h = Hypergraph::new();
    let ins: Vec<_> = n
        .objects()
        .iter()
        .map(|o| h.push_target(Port::Interface, o.clone()))
        .collect();
    for (i, o) in ins.into_iter().zip(n.objects()) {
        let out = h.push_source(Port::Interface, o.clone());
        h.conn.insert(i, out);
    }
    h
}

pub fn empty() -> Hypergraph {
    Hypergraph::new()
}

/// The symmetry `m + n → n + m`, crossing the two blocks of wires directly.
pub fn swap(m: &Word, n: &Word) -> Hypergraph {
    let mut h = Hypergraph::new();
    let a: Vec<_> = m
        .objects()
        .iter()
        .map(|o| h.push_target(Port::Interface, o.clone()))
        .collect();
    let b: Vec<_> = n
        .objects()
        .iter()
        .map(|o| h.push_target(Port::Interface, o.clone()))
        .collect();
    let c: Vec<_> = n
        .objects()
        .iter()
        .map(|o| h.push_source(Port::Interface, o.clone()))
        .collect();
    let d: Vec<_> = m
        .objects()
        .iter()
        .map(|o| h.push_source(Port::Interface, o.clone()))
        .collect();
    for (x, y) in a.into_iter().zip(d) {
        h.conn.insert(x, y);
    }
    for (x, y) in b.into_iter().zip(c) {
        h.conn.insert(x, y);
    }
    h
}

/// The symmetry built inductively from single-wire crossings.
pub fn swap_recursive(m: &Word, n: &Word) -> Hypergraph {
    let crossing = |a: &Object, b: &Object| swap(&Word::single(a.clone()), &Word::single(b.clone()));
    let tensor3 = |x: Hypergraph, y: Hypergraph, z: Hypergraph| tensor(&tensor(&x, &y), &z);
    match (m.len(), n.len()) {
        (0, _) => identity(n),
        (_, 0) => identity(m),
        (1, 1) => swap(m, n),
        (_, 1) => {
            let (rest, last) = m.split_at(m.len() - 1);
            let a = &last.objects()[0];
            let first = tensor(&identity(&rest), &crossing(a, &n.objects()[0]));
            let second = tensor(&swap_recursive(&rest, n), &identity(&last));
            compose(&first, &second).expect("well typed")
        }
        (1, _) => {
            let (rest, last) = n.split_at(n.len() - 1);
            let first = tensor(&swap_recursive(m, &rest), &identity(&last));
            let second = tensor(&identity(&rest), &crossing(&m.objects()[0], &last.objects()[0]));
            compose(&first, &second).expect("well typed")
        }
        _ => {
            let (mr, ml) = m.split_at(m.len() - 1);
            let (nr, nl) = n.split_at(n.len() - 1);
            let first = tensor3(identity(&mr), swap_recursive(&ml, &nr), identity(&nl));
            let second = tensor(&swap_recursive(&mr, &nr), &swap_recursive(&ml, &nl));
            let third = tensor3(identity(&nr), swap_recursive(&mr, &nl), identity(&ml));
            let h = compose(&first, &second).expect("well typed");
            compose(&h, &third).expect("well typed")
        }
    }
}

/// A single edge labelled `label`, its ports wired to the interfaces.
pub fn edge(label: EdgeLabel) -> Hypergraph {
    let (dom, cod) = (label.dom(), label.cod());
    let mut h = Hypergraph::new();
    let e = h.push_edge(label);
    let ins: Vec<_> = dom
        .objects()
        .iter()
        .map(|o| h.push_target(Port::Interface, o.clone()))
        .collect();
    let outs_of_e: Vec<_> = cod
        .objects()
        .iter()
        .map(|o| h.push_target(Port::Edge(e), o.clone()))
        .collect();
    let ins_of_e: Vec<_> = dom
        .objects()
        .iter()
        .map(|o| h.push_source(Port::Edge(e), o.clone()))
        .collect();
    let outs: Vec<_> = cod
        .objects()
        .iter()
        .map(|o| h.push_source(Port::Interface, o.clone()))
        .collect();
    for (i, s) in ins.into_iter().zip(ins_of_e) {
        h.conn.insert(i, s);
    }
    for (t, o) in outs_of_e.into_iter().zip(outs) {
        h.conn.insert(t, o);
    }
    h
}

/// The graph of a generator from `sig`.
pub fn generator(name: &str, sig: &Signature) -> Result<Hypergraph, GraphError> {
    let ty = sig
        .get(name)
        .ok_or_else(|| GraphError::UnknownGenerator(name.to_string()))?;
    Ok(edge(EdgeLabel::generator(name, ty.dom.clone(), ty.cod.clone())))
}

fn disjoint_from(g: &Hypergraph, f: &Hypergraph) -> (Hypergraph, Homomorphism) {
    if f.overlaps(g) {
        let r = g.fresh_renaming();
        let h = g.rename(&r).expect("fresh renaming is injective");
        let hom = Homomorphism {
            targets: g.targets.iter().map(|v| (*v, r.vertices[v])).collect(),
            sources: g.sources.iter().map(|v| (*v, r.vertices[v])).collect(),
            edges: r.edges,
        };
        (h, hom)
    } else {
        (g.clone(), Homomorphism::identity(g))
    }
}

/// Sequential composition `f ; g`.
pub fn compose(f: &Hypergraph, g: &Hypergraph) -> Result<Hypergraph, GraphError> {
    compose_with_embeddings(f, g).map(|(h, _, _)| h)
}

/// Sequential composition together with the embeddings of both operands.
///
/// The deleted interface vertices are sent to the vertices they were glued
/// to, which keeps both maps structure preserving.
pub fn compose_with_embeddings(
    f: &Hypergraph,
    g: &Hypergraph,
) -> Result<(Hypergraph, Homomorphism, Homomorphism), GraphError> {
    let (fcod, gdom) = (f.cod(), g.dom());
    if fcod != gdom {
        return Err(GraphError::TypeMismatch {
            expected: fcod,
            found: gdom,
        });
    }
    let (g, into_g) = disjoint_from(g, f);
    let fi = f.incidence();
    let gi = g.incidence();
    let out_index: std::collections::HashMap<_, _> =
        fi.outputs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let in_set: std::collections::HashSet<_> = gi.inputs.iter().copied().collect();

    let mut h = Hypergraph::new();
    h.edges = f.edges.iter().chain(&g.edges).copied().collect();
    h.labels = f.labels.clone();
    h.labels.extend(g.labels.iter().map(|(k, v)| (*k, v.clone())));
    for &v in &f.targets {
        h.targets.push(v);
        h.left.insert(v, f.left[&v]);
        h.tlabels.insert(v, f.tlabels[&v].clone());
        let s = f.conn[&v];
        let s = match out_index.get(&s) {
            Some(&i) => g.conn[&gi.inputs[i]],
            None => s,
        };
        h.conn.insert(v, s);
    }
    for &v in g.targets.iter().filter(|v| !in_set.contains(v)) {
        h.targets.push(v);
        h.left.insert(v, g.left[&v]);
        h.tlabels.insert(v, g.tlabels[&v].clone());
        h.conn.insert(v, g.conn[&v]);
    }
    for &v in f.sources.iter().filter(|v| !out_index.contains_key(v)) {
        h.sources.push(v);
        h.right.insert(v, f.right[&v]);
        h.slabels.insert(v, f.slabels[&v].clone());
    }
    for &v in &g.sources {
        h.sources.push(v);
        h.right.insert(v, g.right[&v]);
        h.slabels.insert(v, g.slabels[&v].clone());
    }

    let mut ef = Homomorphism::identity(f);
    for (i, o) in fi.outputs.iter().enumerate() {
        ef.sources.insert(*o, g.conn[&gi.inputs[i]]);
    }
    let mut eg = Homomorphism::identity(&g);
    for (i, v) in gi.inputs.iter().enumerate() {
        eg.targets.insert(*v, fi.conn_inv[&fi.outputs[i]]);
    }
    Ok((h, ef, into_g.then(&eg)))
}

/// Parallel composition `f ⊗ g`: `f` sits above `g`.
pub fn tensor(f: &Hypergraph, g: &Hypergraph) -> Hypergraph {
    tensor_with_embeddings(f, g).0
}

pub fn tensor_with_embeddings(f: &Hypergraph, g: &Hypergraph) -> (Hypergraph, Homomorphism, Homomorphism) {
    let (g, into_g) = disjoint_from(g, f);
    let mut h = f.clone();
    h.targets.extend(&g.targets);
    h.sources.extend(&g.sources);
    h.edges.extend(&g.edges);
    h.left.extend(&g.left);
    h.right.extend(&g.right);
    h.conn.extend(&g.conn);
    h.labels.extend(g.labels.iter().map(|(k, v)| (*k, v.clone())));
    h.tlabels.extend(g.tlabels.iter().map(|(k, v)| (*k, v.clone())));
    h.slabels.extend(g.slabels.iter().map(|(k, v)| (*k, v.clone())));
    let ef = Homomorphism::identity(f);
    (h, ef, into_g)
}

fn check_trace(x: &Word, f: &Hypergraph) -> Result<(), GraphError> {
    let (dom, cod) = (f.dom(), f.cod());
    if dom.strip_prefix(x).is_none() || cod.strip_prefix(x).is_none() {
        return Err(GraphError::BadTrace {
            x: x.clone(),
            dom,
            cod,
        });
    }
    Ok(())
}

/// Feeds the first `x` outputs back into the first `x` inputs, one wire at
/// a time.
pub fn trace(x: &Word, f: &Hypergraph) -> Result<Hypergraph, GraphError> {
    check_trace(x, f)?;
    let mut h = f.clone();
    for _ in 0..x.len() {
        trace_one(&mut h);
    }
    Ok(h)
}

fn trace_one(h: &mut Hypergraph) {
    let t0 = h.inputs()[0];
    let s0 = h.outputs()[0];
    let c = h.conn[&t0];
    h.remove_target(t0);
    h.remove_source(s0);
    if c != s0 {
        let v = h
            .conn
            .iter()
            .find(|(_, s)| **s == s0)
            .map(|(t, _)| *t)
            .expect("the first output is connected");
        h.conn.insert(v, c);
    }
}

/// The trace with an identity edge on every traced wire, together with the
/// embedding of `f` into it.
///
/// Smoothing the result gives [`trace`].
pub fn trace_mono(x: &Word, f: &Hypergraph) -> Result<(Hypergraph, Homomorphism), GraphError> {
    check_trace(x, f)?;
    let mut h = f.clone();
    let ins = f.inputs();
    let outs = f.outputs();
    for (k, obj) in x.objects().iter().enumerate() {
        let e = h.push_edge(EdgeLabel::Identity(obj.clone()));
        h.left.insert(ins[k], Port::Edge(e));
        h.right.insert(outs[k], Port::Edge(e));
    }
    Ok((h, Homomorphism::identity(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{find_isomorphism, is_isomorphic, smooth};

    fn sig() -> Signature {
        Signature::new().with("f", 1, 1).with("g", 1, 2).with("h", 2, 2)
    }

    fn gen(n: &str) -> Hypergraph {
        generator(n, &sig()).unwrap()
    }

    #[test]
    fn identity_shapes() {
        assert!(identity(&Word::n(0)).is_empty());
        let id2 = identity(&Word::n(2));
        assert!(id2.is_valid());
        for i in 0..2 {
            assert_eq!(id2.conn[&id2.targets[i]], id2.sources[i]);
        }
    }

    #[test]
    fn generator_shapes() {
        let v = edge(EdgeLabel::generator("v", Word::n(0), Word::n(1)));
        assert!(v.is_valid());
        assert_eq!((v.dom().len(), v.cod().len()), (0, 1));
        let stub = edge(EdgeLabel::generator("stub", Word::n(1), Word::n(0)));
        assert!(stub.is_valid());
        assert_eq!(stub.edge_sources(stub.edges[0]).len(), 1);
        assert!(matches!(generator("zz", &sig()), Err(GraphError::UnknownGenerator(_))));
    }

    #[test]
    fn single_crossing() {
        let s = swap(&Word::n(1), &Word::n(1));
        let (a, b) = (s.targets[0], s.targets[1]);
        let (c, d) = (s.sources[0], s.sources[1]);
        assert_eq!(s.conn[&a], d);
        assert_eq!(s.conn[&b], c);
        assert!(is_isomorphic(&swap(&Word::n(0), &Word::n(3)), &identity(&Word::n(3))));
    }

    #[test]
    fn recursive_swap_agrees() {
        for m in 0..4 {
            for n in 0..4 {
                let a = swap(&Word::n(m), &Word::n(n));
                let b = swap_recursive(&Word::n(m), &Word::n(n));
                assert!(b.is_valid());
                assert!(is_isomorphic(&a, &b), "swap {m} {n}");
            }
        }
    }

    #[test]
    fn compose_wires_f_into_g() {
        let h = compose(&gen("f"), &gen("g")).unwrap();
        assert!(h.is_valid());
        assert_eq!((h.dom(), h.cod()), (Word::n(1), Word::n(2)));
        assert_eq!(h.edges.len(), 2);
        let (f, g) = (h.edges[0], h.edges[1]);
        let t = h.edge_targets(f)[0];
        assert_eq!(h.conn[&t], h.edge_sources(g)[0]);
    }

    #[test]
    fn compose_checks_types() {
        assert!(matches!(
            compose(&gen("g"), &gen("f")),
            Err(GraphError::TypeMismatch { .. })
        ));
    }

    #[test]
    fn compose_embeddings_are_embeddings() {
        let (f, g) = (gen("g"), gen("h"));
        let (h, ef, eg) = compose_with_embeddings(&f, &g).unwrap();
        assert!(ef.is_embedding(&f, &h));
        assert!(eg.is_embedding(&g, &h));
    }

    #[test]
    fn self_composition_freshens() {
        let f = gen("f");
        let h = compose(&f, &f).unwrap();
        assert!(h.is_valid());
        assert_eq!(h.edges.len(), 2);
    }

    #[test]
    fn swap_is_self_inverse() {
        let s = swap(&Word::n(1), &Word::n(1));
        let h = compose(&s, &s).unwrap();
        assert!(is_isomorphic(&h, &identity(&Word::n(2))));
    }

    #[test]
    fn tensor_types_and_unit() {
        let h = tensor(&gen("f"), &gen("g"));
        assert!(h.is_valid());
        assert_eq!((h.dom(), h.cod()), (Word::n(2), Word::n(3)));
        let f = gen("f");
        assert!(is_isomorphic(&tensor(&f, &empty()), &f));
    }

    #[test]
    fn yanking() {
        let s = swap(&Word::n(1), &Word::n(1));
        let h = trace(&Word::n(1), &s).unwrap();
        assert!(h.is_valid());
        assert!(is_isomorphic(&h, &identity(&Word::n(1))));
    }

    #[test]
    fn trace_zero_is_identity_operation() {
        let f = gen("h");
        assert_eq!(trace(&Word::n(0), &f).unwrap(), f);
    }

    #[test]
    fn trace_closes_a_loop_through_h() {
        let f = gen("h");
        let h = trace(&Word::n(1), &f).unwrap();
        assert!(h.is_valid());
        assert_eq!((h.dom(), h.cod()), (Word::n(1), Word::n(1)));
        let e = h.edges[0];
        let t0 = h.edge_targets(e)[0];
        assert_eq!(h.conn[&t0], h.edge_sources(e)[0]);
    }

    #[test]
    fn trace_rejects_bad_prefix() {
        assert!(matches!(trace(&Word::n(2), &gen("g")), Err(GraphError::BadTrace { .. })));
    }

    #[test]
    fn trace_mono_smooths_to_trace() {
        let f = gen("h");
        let (h, emb) = trace_mono(&Word::n(1), &f).unwrap();
        assert!(h.is_valid());
        assert!(emb.is_embedding(&f, &h));
        assert_eq!(h.num_identity_edges(), 1);
        let plain = trace(&Word::n(1), &f).unwrap();
        assert!(find_isomorphism(&smooth(&h), &plain).is_some());
        let (h0, emb0) = trace_mono(&Word::n(0), &f).unwrap();
        assert_eq!(h0, f);
        assert_eq!(emb0, Homomorphism::identity(&f));
    }
}
