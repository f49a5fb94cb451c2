use std::fmt::Write;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{dot, json, read, write, Config, WorkbenchError};
use crate::circuits::{CircuitSignature, Evaluator, Outcome, Value};
use crate::extract::{canonical_order, extract_term, graph_signature};
use crate::hypergraph::{find_isomorphism, EdgeId, Hypergraph};
use crate::interp::axioms::Axiom;
use crate::interp::{equal_mod_stmc, interpret};
use crate::random;
use crate::rewrite::{normalize, parse_rules, Policy, Strategy};
use crate::term::{parse_signature, parse_term, Signature};

/// What a command prints and how the process should exit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            ..Output::default()
        }
    }
}

/// Reads `deterministic` or `exhaustive[:N]`.
pub fn parse_strategy(s: &str) -> Result<Strategy, WorkbenchError> {
    match s.split_once(':') {
        None if s == "deterministic" => Ok(Strategy::Deterministic),
        None if s == "exhaustive" => Ok(Strategy::Exhaustive { max_states: 1000 }),
        Some(("exhaustive", n)) => n
            .parse()
            .map(|max_states| Strategy::Exhaustive { max_states })
            .map_err(|_| WorkbenchError::Usage(format!("bad state limit `{n}`"))),
        _ => Err(WorkbenchError::Usage(format!(
            "unknown strategy `{s}`: expected deterministic or exhaustive[:N]"
        ))),
    }
}

fn emit(h: &Hypergraph, cfg: &Config) -> String {
    let mut s = if cfg.canonical { json::save(h) } else { json::to_json(h) };
    s.push('\n');
    s
}

fn load_graph(path: &Path) -> Result<Hypergraph, WorkbenchError> {
    json::load(&read(path)?)
}

/// Interprets the term in `term` over the signature in `sig`, printing the
/// graph as JSON and optionally writing DOT to `dot_path`.
pub fn cmd_interpret(term: &Path, sig: &Path, dot_path: Option<&Path>, cfg: &Config) -> Result<Output, WorkbenchError> {
    let sig = parse_signature(&read(sig)?)?;
    let t = parse_term(read(term)?.trim(), &sig)?;
    let h = interpret(&t, &sig)?;
    h.validate().into_result()?;
    if let Some(p) = dot_path {
        write(p, &dot::to_dot(&h))?;
    }
    Ok(Output::ok(emit(&h, cfg)))
}

/// Reads a term back from a graph, stacking edges in `order` (ids as in the
/// file) or in canonical order.
pub fn cmd_extract(graph: &Path, order: Option<&[u64]>) -> Result<Output, WorkbenchError> {
    let h = load_graph(graph)?;
    let ord: Vec<EdgeId> = match order {
        Some(ids) => ids.iter().map(|&i| EdgeId(i)).collect(),
        None => canonical_order(&h),
    };
    let t = extract_term(&h, &ord)?.simplify();
    Ok(Output::ok(format!("{t}\n")))
}

/// Prints an isomorphism between two graphs, or `not isomorphic` with exit
/// code 1.
pub fn cmd_iso(a: &Path, b: &Path) -> Result<Output, WorkbenchError> {
    let (g, h) = (load_graph(a)?, load_graph(b)?);
    let Some(iso) = find_isomorphism(&g, &h) else {
        return Ok(Output {
            stdout: "not isomorphic\n".into(),
            code: 1,
            ..Output::default()
        });
    };
    let mut out = String::from("isomorphic\n");
    for (x, y) in &iso.edges {
        let _ = writeln!(out, "edge {x} -> {y}");
    }
    for (x, y) in &iso.targets {
        let _ = writeln!(out, "target {x} -> {y}");
    }
    for (x, y) in &iso.sources {
        let _ = writeln!(out, "source {x} -> {y}");
    }
    Ok(Output::ok(out))
}

/// Normalises a graph (JSON) or a term with the rules in `rules`. The step
/// log goes to stderr; exit code 4 when the budget runs out.
pub fn cmd_rewrite(input: &Path, rules: &Path, sig: Option<&Path>, cfg: &Config) -> Result<Output, WorkbenchError> {
    let text = read(input)?;
    let declared = sig.map(|p| read(p).and_then(|s| Ok(parse_signature(&s)?))).transpose()?;
    let (g, sig): (Hypergraph, Signature) = if text.trim_start().starts_with('{') {
        let g = json::load(&text)?;
        let sig = declared.unwrap_or_else(|| graph_signature(&g));
        (g, sig)
    } else {
        let sig = declared.ok_or_else(|| WorkbenchError::Usage("a term input needs --sig".into()))?;
        let t = parse_term(text.trim(), &sig)?;
        (interpret(&t, &sig)?, sig)
    };
    let rules = parse_rules(&read(rules)?, &sig)?;
    let policy = Policy {
        max_steps: cfg.max_steps,
        strategy: cfg.strategy,
        keep_identities: false,
    };
    let out = normalize(&g, &rules, &policy)?;
    let mut stderr = String::new();
    for r in &out.log {
        let _ = writeln!(stderr, "{r}");
    }
    if matches!(cfg.strategy, Strategy::Exhaustive { .. }) {
        let _ = writeln!(stderr, "{} normal form(s)", out.normal_forms.len());
    }
    let code = if out.exhausted {
        let _ = writeln!(stderr, "step budget of {} exhausted", cfg.max_steps);
        4
    } else {
        0
    };
    Ok(Output {
        stdout: emit(&out.graph, cfg),
        stderr,
        code,
    })
}

fn parse_word(sig: &CircuitSignature, s: &str) -> Result<Vec<Value>, WorkbenchError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|v| !v.is_empty())
        .map(|v| {
            sig.lattice
                .value(v)
                .ok_or_else(|| WorkbenchError::Usage(format!("unknown value `{v}`")))
        })
        .collect()
}

/// Evaluates the circuit term in `circuit` on each input word, over the
/// lattice file `lattice` or the two-point lattice.
pub fn cmd_evaluate(
    circuit: &Path,
    lattice: Option<&Path>,
    inputs: &[String],
    cfg: &Config,
) -> Result<Output, WorkbenchError> {
    let sig = match lattice {
        Some(p) => CircuitSignature::parse(&read(p)?)?,
        None => CircuitSignature::two_point(),
    };
    let ev = Evaluator::new(sig)?.with_budget(cfg.max_steps);
    let t = parse_term(read(circuit)?.trim(), ev.signature())?;
    let g = interpret(&t, ev.signature())?;
    let words: Vec<Vec<Value>> = if inputs.is_empty() {
        vec![Vec::new()]
    } else {
        inputs.iter().map(|s| parse_word(&ev.sig, s)).collect::<Result<_, _>>()?
    };
    let mut out = String::new();
    for w in &words {
        let res = ev.evaluate_one(&g, w)?;
        let shown = Outcome::Values(w.clone());
        let _ = writeln!(out, "{} -> {}", shown.display(&ev.sig), res.display(&ev.sig));
    }
    Ok(Output::ok(out))
}

/// Checks random instances of every axiom scheme and prints one row per
/// scheme. Exit code 1 if any instance fails.
pub fn cmd_axioms_check(instances: usize, cfg: &Config) -> Result<Output, WorkbenchError> {
    let sig = random::signature();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = format!("{:<22} {:>9} {:>7} {:>11}\n", "axiom", "instances", "equal", "well-formed");
    let mut code = 0;
    for ax in Axiom::ALL {
        let (mut equal, mut valid) = (0, 0);
        for _ in 0..instances {
            let (l, r) = ax.instance(&mut rng, &sig, 3);
            if equal_mod_stmc(&l, &r, &sig)? {
                equal += 1;
            }
            if interpret(&l, &sig)?.is_valid() && interpret(&r, &sig)?.is_valid() {
                valid += 1;
            }
        }
        if equal < instances || valid < instances {
            code = 1;
        }
        let _ = writeln!(out, "{:<22} {:>9} {:>7} {:>11}", ax.name(), instances, equal, valid);
    }
    Ok(Output {
        stdout: out,
        code,
        ..Output::default()
    })
}
