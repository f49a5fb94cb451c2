//! Double-pushout rewriting of linear hypergraphs.
//!
//! A rule is a span `L ← K → R` whose interface `K` is edge-free: one wire
//! per input and output of the rule. Rules are saturated on construction so
//! both legs are embeddings, which makes every matching an admissible
//! occurrence and every pushout along the interface linear.

mod dpo;
mod driver;
mod matching;

use std::fmt;

use thiserror::Error;

use crate::hypergraph::{expand_in_place, is_isomorphic, smooth, GraphError, Homomorphism, Hypergraph, Port, VertexId};
use crate::interp::interpret;
use crate::ops;
use crate::term::{parse_term, relocate, Signature, Term, TermError, Word};

pub use dpo::{boundary_coherent, pushout, pushout_complement};
pub use driver::{normalize, Normalized, Policy, StepRecord, Strategy, DEFAULT_MAX_STEPS};
pub use matching::{find_matchings, Matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("rule `{rule}` has sides of different types: {lhs} and {rhs}")]
    TypeMismatch { rule: String, lhs: String, rhs: String },
    #[error("{0} is not an embedding")]
    NotEmbedding(String),
    #[error("span is not boundary coherent at {0}")]
    NotBoundaryCoherent(VertexId),
}

/// A rewrite rule `L ← K → R`.
#[derive(Debug, Clone)]
pub struct RewriteRule {
    pub name: String,
    pub lhs: Hypergraph,
    pub rhs: Hypergraph,
    /// One input and one output wire per input and output of the sides.
    pub interface: Hypergraph,
    pub left_leg: Homomorphism,
    pub right_leg: Homomorphism,
}

impl RewriteRule {
    /// Builds the span for two graphs of the same type. Identity edges in the
    /// sides are discarded and the rule is saturated.
    pub fn new(name: &str, lhs: &Hypergraph, rhs: &Hypergraph) -> Result<Self, RewriteError> {
        let (ld, lc, rd, rc) = (lhs.dom(), lhs.cod(), rhs.dom(), rhs.cod());
        if ld != rd || lc != rc {
            return Err(RewriteError::TypeMismatch {
                rule: name.to_string(),
                lhs: format!("{ld} -> {lc}"),
                rhs: format!("{rd} -> {rc}"),
            });
        }
        let lhs = smooth(lhs);
        let rhs = smooth(rhs);
        let interface = ops::identity(&ld.concat(&lc));
        let rule = RewriteRule {
            name: name.to_string(),
            left_leg: leg(&interface, &lhs),
            right_leg: leg(&interface, &rhs),
            interface,
            lhs,
            rhs,
        };
        Ok(saturate_rule(&rule))
    }

    /// True when both sides are isomorphic, so applying the rule changes
    /// nothing.
    pub fn is_trivial(&self) -> bool {
        let proper = |h: &Hypergraph| h.edges.len() - h.num_identity_edges();
        if proper(&self.lhs) != proper(&self.rhs) || self.lhs.targets.len() != self.rhs.targets.len() {
            return false;
        }
        is_isomorphic(&smooth(&self.lhs), &smooth(&self.rhs))
    }

    pub fn dom(&self) -> Word {
        self.lhs.dom()
    }

    pub fn cod(&self) -> Word {
        self.lhs.cod()
    }
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} -> {}", self.name, self.dom(), self.cod())
    }
}

/// Sends the interface wires of `k` to the interface wires of `side`: the
/// `i`-th input wire to the wire leaving the `i`-th input, the output wires
/// to the wires entering the outputs.
fn leg(k: &Hypergraph, side: &Hypergraph) -> Homomorphism {
    let inc = side.incidence();
    let ends = inc
        .inputs
        .iter()
        .map(|&i| (i, side.conn[&i]))
        .chain(inc.outputs.iter().map(|&o| (inc.conn_inv[&o], o)));
    let mut h = Homomorphism::default();
    for ((kt, ks), (t, s)) in k.targets.iter().zip(&k.sources).zip(ends) {
        h.targets.insert(*kt, t);
        h.sources.insert(*ks, s);
    }
    h
}

/// The rule of an equation between terms.
pub fn rule_from_terms(name: &str, l: &Term, r: &Term, sig: &Signature) -> Result<RewriteRule, RewriteError> {
    let (ld, lc) = l.type_of(sig)?;
    let (rd, rc) = r.type_of(sig)?;
    if ld != rd || lc != rc {
        return Err(RewriteError::TypeMismatch {
            rule: name.to_string(),
            lhs: format!("{ld} -> {lc}"),
            rhs: format!("{rd} -> {rc}"),
        });
    }
    RewriteRule::new(name, &interpret(l, sig)?, &interpret(r, sig)?)
}

fn bare_inputs(h: &Hypergraph) -> Vec<VertexId> {
    h.inputs()
        .into_iter()
        .filter(|i| h.right[&h.conn[i]] == Port::Interface)
        .collect()
}

/// Puts an identity edge on every wire running straight from an input to an
/// output of either side, so both legs become embeddings.
pub fn saturate_rule(rule: &RewriteRule) -> RewriteRule {
    let mut out = rule.clone();
    for side in [&mut out.lhs, &mut out.rhs] {
        for i in bare_inputs(side) {
            expand_in_place(side, i).expect("inputs are targets");
        }
    }
    out.left_leg = leg(&out.interface, &out.lhs);
    out.right_leg = leg(&out.interface, &out.rhs);
    out
}

/// Applies `rule` at `m` and smooths the result.
pub fn apply_rewrite(g: &Hypergraph, rule: &RewriteRule, m: &Matching) -> Result<Hypergraph, RewriteError> {
    Ok(smooth(&apply_rewrite_raw(g, rule, m)?))
}

/// Applies `rule` at `m`, keeping the identity edges introduced by
/// saturation and by the matching.
pub fn apply_rewrite_raw(g: &Hypergraph, rule: &RewriteRule, m: &Matching) -> Result<Hypergraph, RewriteError> {
    let (host, emb) = m.realize(&rule.lhs, g)?;
    let (c, into_c, _) = pushout_complement(&rule.interface, &rule.left_leg, &rule.lhs, &emb, &host)?;
    let (h, _, _) = pushout(&rule.interface, &into_c, &c, &rule.right_leg, &rule.rhs)?;
    Ok(h)
}

/// Parses a rule file: one `name : lhs => rhs` per line, `#` comments.
pub fn parse_rules(text: &str, sig: &Signature) -> Result<Vec<RewriteRule>, RewriteError> {
    let mut rules = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let syntax = |column: usize, message: &str| {
            RewriteError::Term(TermError::Syntax {
                line,
                column,
                message: message.to_string(),
            })
        };
        let colon = body.find(':').ok_or_else(|| syntax(1, "expected `name : lhs => rhs`"))?;
        let name = body[..colon].trim();
        if name.is_empty() || name.contains(char::is_whitespace) {
            return Err(syntax(1, "expected a rule name"));
        }
        let rest = &body[colon + 1..];
        let arrow = rest
            .find("=>")
            .ok_or_else(|| syntax(colon + 2, "expected `=>`"))?;
        let lcol = colon + 2;
        let rcol = colon + 1 + arrow + 3;
        let l = parse_term(&rest[..arrow], sig).map_err(|e| relocate(e, line, lcol))?;
        let r = parse_term(&rest[arrow + 2..], sig).map_err(|e| relocate(e, line, rcol))?;
        rules.push(rule_from_terms(name, &l, &r, sig)?);
    }
    Ok(rules)
}
