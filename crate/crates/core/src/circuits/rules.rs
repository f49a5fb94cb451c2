//! The rule families of Cartesian structure and of circuits over a value
//! lattice.

use super::lattice::{CircuitSignature, Value, DELAY, FORK, JOIN, STUB};
use super::CircuitError;
use crate::rewrite::{rule_from_terms, RewriteRule};
use crate::term::{pad, Signature, Term, Word};

/// Wires `0..n` rearranged so output `j` carries input `order[j]`, built
/// from adjacent swaps.
pub fn permutation(order: &[usize]) -> Term {
    let n = order.len();
    let mut cur: Vec<usize> = (0..n).collect();
    let mut steps = Vec::new();
    for (j, want) in order.iter().enumerate() {
        let mut p = cur.iter().position(|x| x == want).expect("order is a permutation");
        while p > j {
            steps.push(pad(&Word::n(p - 1), Term::swap(1, 1), &Word::n(n - p - 1)));
            cur.swap(p - 1, p);
            p -= 1;
        }
    }
    Term::seq_all(Word::n(n), steps)
}

fn tensor_n(t: Term, n: usize) -> Term {
    Term::tensor_all(std::iter::repeat_n(t, n))
}

/// `n` wires copied into two blocks of `n`.
pub fn copy(n: usize) -> Term {
    let interleave: Vec<usize> = (0..n).map(|j| 2 * j).chain((0..n).map(|j| 2 * j + 1)).collect();
    tensor_n(Term::gen(FORK), n).seq(permutation(&interleave))
}

/// Two blocks of `n` wires joined pointwise.
pub fn merge(n: usize) -> Term {
    let interleave: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
    permutation(&interleave).seq(tensor_n(Term::gen(JOIN), n))
}

fn values(sig: &CircuitSignature, w: &[Value]) -> Term {
    Term::tensor_all(w.iter().map(|v| Term::gen(sig.lattice.name(*v))))
}

struct Builder<'a> {
    sig: &'a Signature,
    rules: Vec<RewriteRule>,
}

impl Builder<'_> {
    fn add(&mut self, name: String, l: Term, r: Term) -> Result<(), CircuitError> {
        self.rules.push(rule_from_terms(&name, &l, &r, self.sig)?);
        Ok(())
    }
}

/// The rows of the Cartesian axiom table with copy as `fork` and delete as
/// `stub`, oriented left to right. Naturality is instantiated for every
/// generator that is not itself part of the comonoid.
pub fn cartesian_rules(sig: &CircuitSignature) -> Result<Vec<RewriteRule>, CircuitError> {
    let tsig = sig.signature();
    let mut b = Builder {
        sig: &tsig,
        rules: Vec::new(),
    };
    let stub = || Term::gen(STUB);
    let fork = || Term::gen(FORK);
    for (name, ty) in tsig.generators() {
        let (m, n) = (ty.dom.len(), ty.cod.len());
        if name != FORK && name != STUB && n == 1 {
            b.add(
                format!("copy-nat-{name}"),
                Term::gen(name).seq(fork()),
                copy(m).seq(Term::gen(name).tensor(Term::gen(name))),
            )?;
        }
        if name != STUB {
            b.add(
                format!("del-nat-{name}"),
                Term::gen(name).seq(tensor_n(stub(), n)),
                tensor_n(stub(), m),
            )?;
        }
    }
    b.add(
        "coassoc".into(),
        fork().seq(fork().tensor(Term::id(1))),
        fork().seq(Term::id(1).tensor(fork())),
    )?;
    b.add("counit-left".into(), fork().seq(stub().tensor(Term::id(1))), Term::id(1))?;
    b.add("counit-right".into(), fork().seq(Term::id(1).tensor(stub())), Term::id(1))?;
    b.add("cocomm".into(), fork().seq(Term::swap(1, 1)), fork())?;
    b.add("copy-unit".into(), copy(0), Term::id(0))?;
    b.add(
        "copy-tensor".into(),
        copy(2).seq(Term::id(1).tensor(Term::swap(1, 1)).tensor(Term::id(1))),
        fork().tensor(fork()),
    )?;
    b.add("del-unit".into(), tensor_n(stub(), 0), Term::id(0))?;
    b.add("del-tensor".into(), tensor_n(stub(), 2), stub().tensor(stub()))?;
    Ok(b.rules)
}

/// Value, gate, delay, streaming and iterator rules, one instance per value
/// or value word.
pub fn circuit_rules(sig: &CircuitSignature) -> Result<Vec<RewriteRule>, CircuitError> {
    let tsig = sig.signature();
    let mut b = Builder {
        sig: &tsig,
        rules: Vec::new(),
    };
    let l = &sig.lattice;
    for v in l.values() {
        let vt = Term::gen(l.name(v));
        b.add(format!("fork-{}", l.name(v)), vt.clone().seq(Term::gen(FORK)), vt.clone().tensor(vt.clone()))?;
    }
    for v in l.values() {
        for w in l.values() {
            b.add(
                format!("join-{}-{}", l.name(v), l.name(w)),
                values(sig, &[v, w]).seq(Term::gen(JOIN)),
                Term::gen(l.name(l.join(v, w))),
            )?;
        }
    }
    for v in l.values() {
        b.add(format!("stub-{}", l.name(v)), Term::gen(l.name(v)).seq(Term::gen(STUB)), Term::id(0))?;
    }
    for g in &sig.gates {
        for (w, out) in &g.table {
            let names: Vec<&str> = w.iter().map(|v| l.name(*v)).collect();
            b.add(
                format!("gate-{}-{}", g.name, names.join("-")),
                values(sig, w).seq(Term::gen(&g.name)),
                Term::gen(l.name(*out)),
            )?;
        }
    }
    let delay = || Term::gen(DELAY);
    for g in sig.gates.iter().filter(|g| g.arity > 0) {
        b.add(
            format!("delay-{}", g.name),
            tensor_n(delay(), g.arity).seq(Term::gen(&g.name)),
            Term::gen(&g.name).seq(delay()),
        )?;
    }
    b.add("delay-bot".into(), Term::gen(l.name(l.bottom())).seq(delay()), Term::gen(l.name(l.bottom())))?;
    b.add("delay-stub".into(), delay().seq(Term::gen(STUB)), Term::gen(STUB))?;
    for g in sig.gates.iter().filter(|g| g.arity > 0) {
        let m = g.arity;
        let k = || Term::gen(&g.name);
        for w in l.words(m) {
            let names: Vec<&str> = w.iter().map(|v| l.name(*v)).collect();
            let lhs = tensor_n(delay(), m).tensor(values(sig, &w)).seq(merge(m)).seq(k());
            let rhs = tensor_n(delay(), m)
                .seq(k())
                .tensor(values(sig, &w).seq(k()))
                .seq(Term::gen(JOIN));
            b.add(format!("stream-{}-{}", g.name, names.join("-")), lhs, rhs)?;
        }
    }
    for g in sig.gates.iter().filter(|g| g.arity > 0) {
        let m = g.arity;
        let k = || Term::gen(&g.name);
        let loop_ = Term::trace(1, Term::swap(1, m - 1).seq(k()).seq(Term::gen(FORK)));
        let unfolded = copy(m - 1).seq(Term::id(m - 1).tensor(loop_.clone())).seq(k());
        b.add(format!("iter-{}", g.name), loop_, unfolded)?;
    }
    Ok(b.rules)
}

/// Rules that never stop firing on their own: cocommutativity rewrites a
/// fork to an isomorphic copy of itself with crossed outputs, and iterator
/// unfolding reproduces its own left-hand side.
pub fn is_divergent(rule: &RewriteRule) -> bool {
    rule.name == "cocomm" || rule.name.starts_with("iter-")
}

/// The rules used by the evaluator: circuit rules first so values
/// propagate before any structural rewriting, then the Cartesian rows, with
/// the divergent rules left out.
pub fn evaluation_rules(sig: &CircuitSignature) -> Result<Vec<RewriteRule>, CircuitError> {
    let mut rules = circuit_rules(sig)?;
    rules.extend(cartesian_rules(sig)?);
    rules.retain(|r| !is_divergent(r) && !r.is_trivial());
    Ok(rules)
}
