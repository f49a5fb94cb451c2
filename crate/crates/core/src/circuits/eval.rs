//! Evaluating circuits by rewriting.
//!
//! Input values are plugged into the circuit, which is then normalised with
//! the evaluation rules. Outputs are observed at time zero, where a delay
//! still holds the bottom value. Feedback is resolved with the iterator
//! axiom: the circuit is unfolded as often as the longest ascending chain of
//! feedback values requires and the innermost copy is fed bottom.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use super::lattice::{CircuitSignature, Value, DELAY, STUB};
use super::rules::evaluation_rules;
use super::CircuitError;
use crate::hypergraph::{EdgeId, EdgeLabel, Hypergraph, Port, VertexId};
use crate::interp::interpret;
use crate::ops;
use crate::rewrite::{normalize, Policy, RewriteRule, DEFAULT_MAX_STEPS};
use crate::term::{Object, Signature, Term, Word};

/// The result of evaluating a circuit on one input word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Values(Vec<Value>),
    /// The step budget ran out before every output became a value.
    Unproductive,
}

impl Outcome {
    pub fn display<'a>(&'a self, sig: &'a CircuitSignature) -> impl fmt::Display + 'a {
        struct Show<'a>(&'a Outcome, &'a CircuitSignature);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                match self.0 {
                    Outcome::Unproductive => f.write_str("UNPRODUCTIVE"),
                    Outcome::Values(vs) => {
                        let names: Vec<&str> = vs.iter().map(|v| self.1.lattice.name(*v)).collect();
                        write!(f, "({})", names.join(", "))
                    }
                }
            }
        }
        Show(self, sig)
    }
}

/// A circuit signature with its evaluation rules.
#[derive(Debug, Clone)]
pub struct Evaluator {
    pub sig: CircuitSignature,
    pub rules: Vec<RewriteRule>,
    pub budget: usize,
    term_sig: Signature,
}

impl Evaluator {
    pub fn new(sig: CircuitSignature) -> Result<Self, CircuitError> {
        Ok(Evaluator {
            rules: evaluation_rules(&sig)?,
            term_sig: sig.signature(),
            sig,
            budget: DEFAULT_MAX_STEPS,
        })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn signature(&self) -> &Signature {
        &self.term_sig
    }

    pub fn evaluate_term(&self, circuit: &Term, inputs: &[Vec<Value>]) -> Result<Vec<Outcome>, CircuitError> {
        let g = interpret(circuit, &self.term_sig)?;
        self.evaluate(&g, inputs)
    }

    /// Evaluates `circuit` on each input word.
    pub fn evaluate(&self, circuit: &Hypergraph, inputs: &[Vec<Value>]) -> Result<Vec<Outcome>, CircuitError> {
        inputs.iter().map(|w| self.evaluate_one(circuit, w)).collect()
    }

    pub fn evaluate_one(&self, circuit: &Hypergraph, input: &[Value]) -> Result<Outcome, CircuitError> {
        let dom = circuit.dom();
        if dom.len() != input.len() || !dom.is_plain() || !circuit.cod().is_plain() {
            return Err(CircuitError::TypeMismatch {
                expected: dom.to_string(),
                found: input.len(),
            });
        }
        let g = self.prepare(circuit, input)?;
        let out = normalize(&g, &self.rules, &Policy::steps(self.budget))?;
        if out.exhausted {
            return Ok(Outcome::Unproductive);
        }
        Ok(read_outputs(&out.graph, &self.sig).map_or(Outcome::Unproductive, Outcome::Values))
    }

    /// The closed, acyclic graph that normalisation works on.
    pub fn prepare(&self, circuit: &Hypergraph, input: &[Value]) -> Result<Hypergraph, CircuitError> {
        let l = &self.sig.lattice;
        let mut feed = ops::empty();
        for v in input {
            feed = ops::tensor(&feed, &ops::generator(l.name(*v), &self.term_sig)?);
        }
        let g = ops::compose(&feed, circuit)?;
        let g = collect_garbage(&project_delays(&g, &self.sig, &self.term_sig), &self.term_sig);
        unfold_feedback(&g, &self.sig, &self.term_sig)
    }
}

/// [`Evaluator::evaluate`] with a given step budget.
pub fn evaluate(
    sig: &CircuitSignature,
    circuit: &Hypergraph,
    inputs: &[Vec<Value>],
    budget: usize,
) -> Result<Vec<Outcome>, CircuitError> {
    Evaluator::new(sig.clone())?.with_budget(budget).evaluate(circuit, inputs)
}

fn label(sig: &Signature, name: &str) -> EdgeLabel {
    let ty = sig.get(name).expect("fixed generator");
    EdgeLabel::generator(name, ty.dom.clone(), ty.cod.clone())
}

/// Replaces every delay by a stub on its input and bottom on its output:
/// what the delay shows at time zero.
pub fn project_delays(g: &Hypergraph, sig: &CircuitSignature, tsig: &Signature) -> Hypergraph {
    let mut h = g.clone();
    let inc = g.incidence();
    let bot = sig.lattice.name(sig.lattice.bottom()).to_string();
    for &e in &g.edges {
        if g.labels[&e].name() != DELAY {
            continue;
        }
        let s = inc.edge_sources[&e][0];
        let t = inc.edge_targets[&e][0];
        h.remove_edge(e);
        let stub = h.push_edge(label(tsig, STUB));
        let val = h.push_edge(label(tsig, &bot));
        h.right.insert(s, Port::Edge(stub));
        h.left.insert(t, Port::Edge(val));
    }
    h
}

/// Removes every edge from which no output can be reached, stubbing the
/// wires that fed them. Circuits without outputs are all equal, so such
/// parts never affect the result.
pub fn collect_garbage(g: &Hypergraph, tsig: &Signature) -> Hypergraph {
    let inc = g.incidence();
    let mut live: BTreeSet<EdgeId> = BTreeSet::new();
    let mut stack: Vec<VertexId> = inc.outputs.iter().map(|o| inc.conn_inv[o]).collect();
    while let Some(t) = stack.pop() {
        if let Port::Edge(e) = g.left[&t] {
            if live.insert(e) {
                stack.extend(inc.edge_sources[&e].iter().map(|s| inc.conn_inv[s]));
            }
        }
    }
    if live.len() == g.edges.len() {
        return g.clone();
    }
    let mut h = g.clone();
    let mut dead_sources = BTreeSet::new();
    for &e in g.edges.iter().filter(|e| !live.contains(e)) {
        for &t in &inc.edge_targets[&e] {
            h.remove_target(t);
        }
        for &s in &inc.edge_sources[&e] {
            h.remove_source(s);
            dead_sources.insert(s);
        }
        h.remove_edge(e);
    }
    let dangling: Vec<VertexId> = h
        .targets
        .iter()
        .copied()
        .filter(|t| dead_sources.contains(&h.conn[t]))
        .collect();
    for t in dangling {
        let stub = h.push_edge(label(tsig, STUB));
        let s = h.push_source(Port::Edge(stub), h.tlabels[&t].clone());
        h.conn.insert(t, s);
    }
    h
}

/// Targets of wires that close a cycle, found by depth-first search over
/// the edges in graph order.
pub fn feedback_wires(g: &Hypergraph) -> Vec<VertexId> {
    let inc = g.incidence();
    let succ = |e: EdgeId| -> Vec<(VertexId, EdgeId)> {
        inc.edge_targets[&e]
            .iter()
            .filter_map(|&t| match g.right[&g.conn[&t]] {
                Port::Edge(b) => Some((t, b)),
                Port::Interface => None,
            })
            .collect()
    };
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark: HashMap<EdgeId, Mark> = g.edges.iter().map(|&e| (e, Mark::New)).collect();
    let mut back = Vec::new();
    for &root in &g.edges {
        if mark[&root] != Mark::New {
            continue;
        }
        mark.insert(root, Mark::Open);
        let mut stack = vec![(root, succ(root), 0usize)];
        while let Some((e, next, i)) = stack.last_mut() {
            if *i == next.len() {
                mark.insert(*e, Mark::Done);
                stack.pop();
                continue;
            }
            let (t, b) = next[*i];
            *i += 1;
            match mark[&b] {
                Mark::Open => back.push(t),
                Mark::New => {
                    mark.insert(b, Mark::Open);
                    stack.push((b, succ(b), 0));
                }
                Mark::Done => {}
            }
        }
    }
    back
}

/// Cuts the feedback wires of a closed graph `g : 0 → n`, feeds bottom into
/// the cut and chains enough copies that the feedback values reach their
/// least fixed point.
pub fn unfold_feedback(g: &Hypergraph, sig: &CircuitSignature, tsig: &Signature) -> Result<Hypergraph, CircuitError> {
    let cut = feedback_wires(g);
    if cut.is_empty() {
        return Ok(g.clone());
    }
    let w = cut.len();
    let n = g.cod().len();
    let mut f = g.clone();
    for &t in &cut {
        let s = f.conn[&t];
        let obj = f.tlabels[&t].clone();
        let out = f.push_source(Port::Interface, obj.clone());
        let inp = f.push_target(Port::Interface, obj);
        f.conn.insert(t, out);
        f.conn.insert(inp, s);
    }
    let bot = sig.lattice.name(sig.lattice.bottom());
    let stubs = |k: usize| -> Result<Hypergraph, CircuitError> {
        let mut h = ops::empty();
        for _ in 0..k {
            h = ops::tensor(&h, &ops::generator(STUB, tsig)?);
        }
        Ok(h)
    };
    let mut acc = ops::empty();
    for _ in 0..w {
        acc = ops::tensor(&acc, &ops::generator(bot, tsig)?);
    }
    let copies = w * sig.lattice.height() + 1;
    let keep = |k: usize| ops::identity(&Word(vec![Object::Wire; k]));
    for i in 0..copies {
        let step = ops::compose(&acc, &f)?;
        if i + 1 < copies {
            acc = ops::compose(&step, &ops::tensor(&stubs(n)?, &keep(w)))?;
        } else {
            acc = ops::compose(&step, &ops::tensor(&keep(n), &stubs(w)?))?;
        }
    }
    Ok(acc)
}

/// The output values of a graph whose every output is fed directly by a
/// value edge.
pub fn read_outputs(g: &Hypergraph, sig: &CircuitSignature) -> Option<Vec<Value>> {
    let inc = g.incidence();
    let by_edge: BTreeMap<EdgeId, &EdgeLabel> = g.labels.iter().map(|(e, l)| (*e, l)).collect();
    inc.outputs
        .iter()
        .map(|o| match g.left[&inc.conn_inv[o]] {
            Port::Edge(e) => sig.lattice.value(by_edge[&e].name()),
            Port::Interface => None,
        })
        .collect()
}
