//! Double pushout rewriting of graphs, one step at a time and to a normal
//! form.
//!
//! Run with `cargo run --example dpo_rewrite`.

use linhyp::extract::extract;
use linhyp::hypergraph::is_isomorphic;
use linhyp::interp::interpret;
use linhyp::rewrite::{apply_rewrite, find_matchings, normalize, parse_rules, Policy, Strategy};
use linhyp::term::{parse_signature, parse_term};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = parse_signature("f : 1 -> 1\ng : 1 -> 2\nh : 2 -> 1\n")?;
    let rules = parse_rules(
        "# a copy followed by a merge collapses\n\
         gh : g ; h => id 1\n\
         ff : f ; f => f\n",
        &sig,
    )?;
    let g = interpret(&parse_term("g ; h ; f ; f ; f", &sig)?, &sig)?;
    println!("host: {}", extract(&g).simplify());

    let ff = &rules[1];
    for m in find_matchings(&ff.lhs, &g) {
        let out = apply_rewrite(&g, ff, &m)?;
        println!("  ff at {:?}: {}", m.host_edges(), extract(&out).simplify());
    }

    let out = normalize(&g, &rules, &Policy::default())?;
    println!("\ndeterministic normal form: {}", extract(&out.graph).simplify());
    let want = interpret(&parse_term("f", &sig)?, &sig)?;
    println!("isomorphic to `f`: {}", is_isomorphic(&out.graph, &want));
    for r in &out.log {
        println!("  {r}");
    }

    // `ff` overlaps with itself on f ; f ; f but every order ends the same way.
    let policy = Policy {
        strategy: Strategy::Exhaustive { max_states: 100 },
        ..Policy::default()
    };
    let all = normalize(&interpret(&parse_term("f ; f ; f ; f", &sig)?, &sig)?, &rules, &policy)?;
    println!("\nexhaustive search on f ; f ; f ; f: {} normal form(s)", all.normal_forms.len());
    for nf in &all.normal_forms {
        println!("  {}", extract(nf).simplify());
    }
    Ok(())
}
