//! Repeated rewriting until no rule applies or the step budget runs out.

use std::collections::VecDeque;
use std::fmt;

use super::matching::find_matchings_limited;
use super::{apply_rewrite, apply_rewrite_raw, find_matchings, RewriteError, RewriteRule};
use crate::hypergraph::{is_isomorphic, smooth, EdgeId, Hypergraph};

pub const DEFAULT_MAX_STEPS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Apply the first matching of the first applicable rule, rules in the
    /// given order and matchings in canonical edge order.
    Deterministic,
    /// Explore every rewrite sequence breadth first, visiting at most
    /// `max_states` graphs up to isomorphism.
    Exhaustive { max_states: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Policy {
    pub max_steps: usize,
    pub strategy: Strategy,
    /// Keep identity edges between steps instead of smoothing them away.
    pub keep_identities: bool,
}

impl Default for Policy {
    fn default() -> Self {
        Policy {
            max_steps: DEFAULT_MAX_STEPS,
            strategy: Strategy::Deterministic,
            keep_identities: false,
        }
    }
}

impl Policy {
    pub fn steps(max_steps: usize) -> Self {
        Policy {
            max_steps,
            ..Policy::default()
        }
    }
}

/// One rewrite step: the rule and the edges of the (canonically numbered)
/// graph it matched.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepRecord {
    pub step: usize,
    pub rule: String,
    pub edges: Vec<EdgeId>,
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.edges.iter().map(|e| e.0.to_string()).collect();
        write!(f, "step {}: rule {} at edges [{}]", self.step, self.rule, ids.join(", "))
    }
}

#[derive(Debug, Clone)]
pub struct Normalized {
    /// The normal form reached, or the last graph when the budget ran out.
    pub graph: Hypergraph,
    pub log: Vec<StepRecord>,
    /// True when the budget ran out before a normal form was reached.
    pub exhausted: bool,
    /// Every normal form found, pairwise non-isomorphic. The deterministic
    /// strategy finds at most one.
    pub normal_forms: Vec<Hypergraph>,
}

impl Normalized {
    pub fn steps(&self) -> usize {
        self.log.len()
    }
}

fn step(g: &Hypergraph, rule: &RewriteRule, m: &super::Matching, keep: bool) -> Result<Hypergraph, RewriteError> {
    if keep {
        apply_rewrite_raw(g, rule, m)
    } else {
        apply_rewrite(g, rule, m)
    }
}

/// Rewrites `g` with `rules` under `policy`. Rules whose sides are
/// isomorphic are skipped since they can fire forever without effect.
pub fn normalize(g: &Hypergraph, rules: &[RewriteRule], policy: &Policy) -> Result<Normalized, RewriteError> {
    let rules: Vec<&RewriteRule> = rules.iter().filter(|r| !r.is_trivial()).collect();
    let start = if policy.keep_identities { g.canonical() } else { smooth(g).canonical() };
    match policy.strategy {
        Strategy::Deterministic => deterministic(start, &rules, policy),
        Strategy::Exhaustive { max_states } => exhaustive(start, &rules, policy, max_states),
    }
}

fn deterministic(mut g: Hypergraph, rules: &[&RewriteRule], policy: &Policy) -> Result<Normalized, RewriteError> {
    let mut log = Vec::new();
    loop {
        let found = rules
            .iter()
            .find_map(|r| find_matchings_limited(&r.lhs, &g, 1).pop().map(|m| (*r, m)));
        let Some((rule, m)) = found else {
            return Ok(Normalized {
                normal_forms: vec![g.clone()],
                graph: g,
                log,
                exhausted: false,
            });
        };
        if log.len() >= policy.max_steps {
            return Ok(Normalized {
                graph: g,
                log,
                exhausted: true,
                normal_forms: Vec::new(),
            });
        }
        log.push(StepRecord {
            step: log.len() + 1,
            rule: rule.name.clone(),
            edges: m.host_edges(),
        });
        g = step(&g, rule, &m, policy.keep_identities)?.canonical();
    }
}

struct Seen {
    graphs: Vec<Hypergraph>,
}

impl Seen {
    fn insert(&mut self, g: &Hypergraph) -> bool {
        let key = |h: &Hypergraph| {
            let mut ls: Vec<String> = h.labels.values().map(|l| l.name().to_string()).collect();
            ls.sort();
            (h.targets.len(), ls)
        };
        let k = key(g);
        if self.graphs.iter().any(|h| key(h) == k && is_isomorphic(h, g)) {
            return false;
        }
        self.graphs.push(g.clone());
        true
    }
}

fn exhaustive(
    start: Hypergraph,
    rules: &[&RewriteRule],
    policy: &Policy,
    max_states: usize,
) -> Result<Normalized, RewriteError> {
    let mut seen = Seen { graphs: Vec::new() };
    seen.insert(&start);
    let mut queue = VecDeque::from([(start.clone(), Vec::<StepRecord>::new())]);
    let mut normal: Vec<(Hypergraph, Vec<StepRecord>)> = Vec::new();
    let mut last = (start, Vec::new());
    let mut exhausted = false;
    while let Some((g, log)) = queue.pop_front() {
        let mut moves = Vec::new();
        for rule in rules {
            for m in find_matchings(&rule.lhs, &g) {
                moves.push((*rule, m));
            }
        }
        if moves.is_empty() {
            if !normal.iter().any(|(h, _)| is_isomorphic(h, &g)) {
                normal.push((g.clone(), log.clone()));
            }
            continue;
        }
        if log.len() >= policy.max_steps {
            exhausted = true;
            last = (g, log);
            continue;
        }
        for (rule, m) in moves {
            let next = step(&g, rule, &m, policy.keep_identities)?.canonical();
            if !seen.insert(&next) {
                continue;
            }
            if seen.graphs.len() > max_states {
                exhausted = true;
                break;
            }
            let mut l = log.clone();
            l.push(StepRecord {
                step: log.len() + 1,
                rule: rule.name.clone(),
                edges: m.host_edges(),
            });
            queue.push_back((next, l));
        }
        if exhausted && seen.graphs.len() > max_states {
            break;
        }
    }
    let normal_forms: Vec<Hypergraph> = normal.iter().map(|(h, _)| h.clone()).collect();
    let (graph, log) = normal.into_iter().next().unwrap_or(last);
    Ok(Normalized {
        graph,
        log,
        exhausted,
        normal_forms,
    })
}
