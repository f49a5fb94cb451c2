//! Identity edges: expanding a wire, smoothing it back, and rules whose
//! sides are bare wires.
//!
//! Run with `cargo run --example homeomorphism`.

use linhyp::extract::extract;
use linhyp::hypergraph::{expand, is_isomorphic, smooth};
use linhyp::interp::interpret;
use linhyp::rewrite::{apply_rewrite, apply_rewrite_raw, find_matchings, rule_from_terms};
use linhyp::term::{parse_signature, parse_term};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = parse_signature("f : 1 -> 1\na : 1 -> 1\nb : 2 -> 1\n")?;
    let p = |s: &str| parse_term(s, &sig);

    let g = interpret(&p("b ; a")?, &sig)?;
    let (e, id) = expand(&g, g.targets[0])?;
    println!("expanded: {} edges, edge {id} is an identity", e.edges.len());
    println!("smoothed back: {}", is_isomorphic(&smooth(&e), &g));

    // The left side is a bare wire, so it matches every wire of the host.
    let grow = rule_from_terms("grow", &p("id 1")?, &p("f")?, &sig)?;
    for m in find_matchings(&grow.lhs, &g) {
        println!("  grow: {}", extract(&apply_rewrite(&g, &grow, &m)?).simplify());
    }

    // The right side is a bare wire: the raw result keeps an identity edge.
    let drop = rule_from_terms("drop", &p("f")?, &p("id 1")?, &sig)?;
    let h = interpret(&p("a ; f ; a")?, &sig)?;
    let m = &find_matchings(&drop.lhs, &h)[0];
    let raw = apply_rewrite_raw(&h, &drop, m)?;
    println!(
        "drop: raw result has {} identity edge(s); smoothed: {}",
        raw.num_identity_edges(),
        extract(&smooth(&raw)).simplify()
    );
    Ok(())
}
