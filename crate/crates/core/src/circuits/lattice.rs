//! Finite value lattices, monotone gates and circuit signatures.

use std::collections::BTreeMap;
use std::fmt;

use super::CircuitError;
use crate::term::{Signature, RESERVED};

/// A value of a [`ValueLattice`], as an index into its value list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Value(pub usize);

/// A finite join-semilattice with a bottom element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueLattice {
    names: Vec<String>,
    join: Vec<Vec<usize>>,
    bottom: usize,
}

impl ValueLattice {
    /// Builds a lattice from named values and a join table, checking the
    /// semilattice laws.
    pub fn new(names: Vec<String>, join: Vec<Vec<usize>>, bottom: usize) -> Result<Self, CircuitError> {
        let n = names.len();
        if n == 0 || bottom >= n {
            return Err(CircuitError::NotALattice("no bottom value".into()));
        }
        if join.len() != n || join.iter().any(|row| row.len() != n || row.iter().any(|&v| v >= n)) {
            return Err(CircuitError::NotALattice("join table is not total".into()));
        }
        let l = ValueLattice { names, join, bottom };
        let name = |v: usize| l.names[v].clone();
        for a in 0..n {
            if l.join[a][a] != a {
                return Err(CircuitError::NotALattice(format!("join is not idempotent at {}", name(a))));
            }
            if l.join[a][bottom] != a {
                return Err(CircuitError::NotALattice(format!("bottom is not a unit for {}", name(a))));
            }
            for b in 0..n {
                if l.join[a][b] != l.join[b][a] {
                    return Err(CircuitError::NotALattice(format!(
                        "join is not commutative at {}, {}",
                        name(a),
                        name(b)
                    )));
                }
                for c in 0..n {
                    if l.join[l.join[a][b]][c] != l.join[a][l.join[b][c]] {
                        return Err(CircuitError::NotALattice(format!(
                            "join is not associative at {}, {}, {}",
                            name(a),
                            name(b),
                            name(c)
                        )));
                    }
                }
            }
        }
        Ok(l)
    }

    /// `bot ⊑ top`.
    pub fn two_point() -> Self {
        ValueLattice::new(vec!["bot".into(), "top".into()], vec![vec![0, 1], vec![1, 1]], 0)
            .expect("two-point lattice")
    }

    /// Belnap's four values under the information order: `bot ⊑ tt, ff ⊑ top`.
    pub fn belnap() -> Self {
        let names = ["bot", "tt", "ff", "top"].map(String::from).to_vec();
        let join = vec![vec![0, 1, 2, 3], vec![1, 1, 3, 3], vec![2, 3, 2, 3], vec![3, 3, 3, 3]];
        ValueLattice::new(names, join, 0).expect("four-point lattice")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn values(&self) -> impl Iterator<Item = Value> {
        (0..self.names.len()).map(Value)
    }

    pub fn bottom(&self) -> Value {
        Value(self.bottom)
    }

    pub fn join(&self, a: Value, b: Value) -> Value {
        Value(self.join[a.0][b.0])
    }

    pub fn leq(&self, a: Value, b: Value) -> bool {
        self.join(a, b) == b
    }

    pub fn name(&self, v: Value) -> &str {
        &self.names[v.0]
    }

    pub fn value(&self, name: &str) -> Option<Value> {
        self.names.iter().position(|n| n == name).map(Value)
    }

    /// The number of strict steps in the longest chain.
    pub fn height(&self) -> usize {
        let n = self.len();
        let mut memo = vec![None; n];
        fn up(l: &ValueLattice, v: usize, memo: &mut Vec<Option<usize>>) -> usize {
            if let Some(h) = memo[v] {
                return h;
            }
            let h = (0..l.len())
                .filter(|&w| w != v && l.leq(Value(v), Value(w)))
                .map(|w| 1 + up(l, w, memo))
                .max()
                .unwrap_or(0);
            memo[v] = Some(h);
            h
        }
        up(self, self.bottom, &mut memo)
    }

    /// Every word of `n` values, in lexicographic order.
    pub fn words(&self, n: usize) -> Vec<Vec<Value>> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    self.values().map(move |v| {
                        let mut w = w.clone();
                        w.push(v);
                        w
                    })
                })
                .collect();
        }
        out
    }
}

/// A gate `m → 1` given by its truth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub name: String,
    pub arity: usize,
    pub table: BTreeMap<Vec<Value>, Value>,
}

impl Gate {
    /// Tabulates `f` on every input word.
    pub fn from_fn(lattice: &ValueLattice, name: &str, arity: usize, f: impl Fn(&[Value]) -> Value) -> Self {
        let table = lattice.words(arity).into_iter().map(|w| {
            let v = f(&w);
            (w, v)
        });
        Gate {
            name: name.to_string(),
            arity,
            table: table.collect(),
        }
    }

    pub fn apply(&self, inputs: &[Value]) -> Value {
        self.table[inputs]
    }

    /// A pair of input words witnessing non-monotonicity, if any.
    pub fn monotonicity_violation(&self, lattice: &ValueLattice) -> Option<(Vec<Value>, Vec<Value>)> {
        for (a, va) in &self.table {
            for (b, vb) in &self.table {
                let below = a.iter().zip(b).all(|(x, y)| lattice.leq(*x, *y));
                if below && !lattice.leq(*va, *vb) {
                    return Some((a.clone(), b.clone()));
                }
            }
        }
        None
    }
}

/// The generators with fixed meaning in every circuit signature.
pub const FORK: &str = "fork";
pub const JOIN: &str = "join";
pub const STUB: &str = "stub";
pub const DELAY: &str = "delay";

/// A gate read from a file: line, name, arity and `inputs -> output` rows.
type GateRows = (usize, String, usize, Vec<(Vec<String>, String)>);

/// A value lattice with monotone gates over it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitSignature {
    pub lattice: ValueLattice,
    pub gates: Vec<Gate>,
}

impl CircuitSignature {
    /// Checks gate tables for totality, monotonicity and name clashes.
    pub fn new(lattice: ValueLattice, gates: Vec<Gate>) -> Result<Self, CircuitError> {
        let mut names: Vec<&str> = vec![FORK, JOIN, STUB, DELAY];
        names.extend(lattice.names.iter().map(String::as_str));
        for g in &gates {
            if names.contains(&g.name.as_str()) || RESERVED.contains(&g.name.as_str()) {
                return Err(CircuitError::NameClash(g.name.clone()));
            }
            names.push(&g.name);
            if g.table.len() != lattice.len().pow(g.arity as u32)
                || lattice.words(g.arity).iter().any(|w| !g.table.contains_key(w))
            {
                return Err(CircuitError::IncompleteTable(g.name.clone()));
            }
            if let Some((a, b)) = g.monotonicity_violation(&lattice) {
                let show = |w: &[Value]| w.iter().map(|v| lattice.name(*v)).collect::<Vec<_>>().join(" ");
                return Err(CircuitError::NotMonotone {
                    gate: g.name.clone(),
                    below: show(&a),
                    above: show(&b),
                });
            }
        }
        for (i, n) in lattice.names.iter().enumerate() {
            if [FORK, JOIN, STUB, DELAY].contains(&n.as_str())
                || RESERVED.contains(&n.as_str())
                || lattice.names[..i].contains(n)
            {
                return Err(CircuitError::NameClash(n.clone()));
            }
        }
        Ok(CircuitSignature { lattice, gates })
    }

    /// The two-point lattice with `and` and `or`.
    pub fn two_point() -> Self {
        let l = ValueLattice::two_point();
        let and = Gate::from_fn(&l, "and", 2, |w| Value(w[0].0.min(w[1].0)));
        let or = Gate::from_fn(&l, "or", 2, |w| Value(w[0].0.max(w[1].0)));
        CircuitSignature::new(l, vec![and, or]).expect("monotone gates")
    }

    /// Belnap's lattice with `and`, `or` and `not`.
    pub fn belnap() -> Self {
        let l = ValueLattice::belnap();
        // Each value as (has evidence for true, has evidence for false).
        let bits = |v: Value| match v.0 {
            0 => (false, false),
            1 => (true, false),
            2 => (false, true),
            _ => (true, true),
        };
        let from = |(t, f): (bool, bool)| Value(match (t, f) {
            (false, false) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (true, true) => 3,
        });
        let and = Gate::from_fn(&l, "and", 2, |w| {
            let (a, b) = (bits(w[0]), bits(w[1]));
            from((a.0 && b.0, a.1 || b.1))
        });
        let or = Gate::from_fn(&l, "or", 2, |w| {
            let (a, b) = (bits(w[0]), bits(w[1]));
            from((a.0 || b.0, a.1 && b.1))
        });
        let not = Gate::from_fn(&l, "not", 1, |w| {
            let (t, f) = bits(w[0]);
            from((f, t))
        });
        CircuitSignature::new(l, vec![and, or, not]).expect("monotone gates")
    }

    pub fn gate(&self, name: &str) -> Option<&Gate> {
        self.gates.iter().find(|g| g.name == name)
    }

    /// The term signature: values `0 → 1`, gates `m → 1`, `fork : 1 → 2`,
    /// `join : 2 → 1`, `stub : 1 → 0` and `delay : 1 → 1`.
    pub fn signature(&self) -> Signature {
        let mut sig = Signature::new()
            .with(FORK, 1, 2)
            .with(JOIN, 2, 1)
            .with(STUB, 1, 0)
            .with(DELAY, 1, 1);
        for v in self.lattice.values() {
            sig = sig.with(self.lattice.name(v), 0, 1);
        }
        for g in &self.gates {
            sig = sig.with(&g.name, g.arity, 1);
        }
        sig
    }

    /// Parses a lattice and gate description:
    ///
    /// ```text
    /// values: bot, top
    /// bottom: bot
    /// join: bot top -> top
    /// gate and arity 2: bot bot -> bot, bot top -> bot, top bot -> bot, top top -> top
    /// ```
    ///
    /// Join rows for `v v`, for the bottom and for the mirrored pair are
    /// implied.
    pub fn parse(text: &str) -> Result<Self, CircuitError> {
        let mut names: Vec<String> = Vec::new();
        let mut bottom: Option<String> = None;
        // Rows are kept with their line numbers until every value is known.
        let mut joins: Vec<(usize, String, String, String)> = Vec::new();
        let mut gates: Vec<GateRows> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let syntax = |message: &str| CircuitError::Syntax {
                line,
                message: message.to_string(),
            };
            let (head, rest) = body.split_once(':').ok_or_else(|| syntax("expected `key: ...`"))?;
            let head: Vec<&str> = head.split_whitespace().collect();
            match head.as_slice() {
                ["values"] => names = rest.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect(),
                ["bottom"] => bottom = Some(rest.trim().to_string()),
                ["join"] => {
                    let (l, r) = rest.split_once("->").ok_or_else(|| syntax("expected `a b -> c`"))?;
                    let args: Vec<&str> = l.split_whitespace().collect();
                    let [a, b] = args.as_slice() else {
                        return Err(syntax("join rows take two values"));
                    };
                    joins.push((line, a.to_string(), b.to_string(), r.trim().to_string()));
                }
                ["gate", name, "arity", n] => {
                    let arity: usize = n.parse().map_err(|_| syntax("arity must be a number"))?;
                    let mut rows = Vec::new();
                    for row in rest.split(',').filter(|r| !r.trim().is_empty()) {
                        let (l, r) = row.split_once("->").ok_or_else(|| syntax("expected `a b -> c`"))?;
                        let args: Vec<String> = l.split_whitespace().map(String::from).collect();
                        if args.len() != arity {
                            return Err(syntax(&format!("row `{}` does not have {arity} inputs", row.trim())));
                        }
                        rows.push((args, r.trim().to_string()));
                    }
                    gates.push((line, name.to_string(), arity, rows));
                }
                _ => return Err(syntax(&format!("unknown declaration `{}`", head.join(" ")))),
            }
        }
        let index = |line: usize, n: &str| {
            names
                .iter()
                .position(|m| m == n)
                .ok_or_else(|| CircuitError::UnknownValue { line, value: n.to_string() })
        };
        let bottom = bottom.ok_or_else(|| CircuitError::NotALattice("missing `bottom:`".into()))?;
        let b = index(0, &bottom)?;
        let n = names.len();
        let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
        for (v, row) in table.iter_mut().enumerate() {
            row[v] = Some(v);
            row[b] = Some(v);
        }
        for (v, cell) in table[b].iter_mut().enumerate() {
            *cell = Some(v);
        }
        for (line, x, y, z) in &joins {
            let (x, y, z) = (index(*line, x)?, index(*line, y)?, index(*line, z)?);
            table[x][y] = Some(z);
            table[y][x] = Some(z);
        }
        let mut join = vec![vec![0; n]; n];
        for x in 0..n {
            for y in 0..n {
                join[x][y] = table[x][y].ok_or_else(|| {
                    CircuitError::NotALattice(format!("no join row for {} {}", names[x], names[y]))
                })?;
            }
        }
        let lattice = ValueLattice::new(names.clone(), join, b)?;
        let mut gs = Vec::new();
        for (line, name, arity, rows) in gates {
            let mut table = BTreeMap::new();
            for (args, out) in rows {
                let w = args.iter().map(|a| index(line, a).map(Value)).collect::<Result<Vec<_>, _>>()?;
                table.insert(w, Value(index(line, &out)?));
            }
            gs.push(Gate { name, arity, table });
        }
        CircuitSignature::new(lattice, gs)
    }
}

impl fmt::Display for CircuitSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.lattice;
        let vs: Vec<&str> = l.values().map(|v| l.name(v)).collect();
        writeln!(f, "values: {}", vs.join(", "))?;
        writeln!(f, "bottom: {}", l.name(l.bottom()))?;
        for a in l.values() {
            for b in l.values() {
                if a < b && a != l.bottom() {
                    writeln!(f, "join: {} {} -> {}", l.name(a), l.name(b), l.name(l.join(a, b)))?;
                }
            }
        }
        for g in &self.gates {
            let rows: Vec<String> = g
                .table
                .iter()
                .map(|(w, v)| {
                    let ins: Vec<&str> = w.iter().map(|x| l.name(*x)).collect();
                    format!("{} -> {}", ins.join(" "), l.name(*v))
                })
                .collect();
            writeln!(f, "gate {} arity {}: {}", g.name, g.arity, rows.join(", "))?;
        }
        Ok(())
    }
}
