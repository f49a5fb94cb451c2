//! Reading terms back from graphs, under different edge orders.
//!
//! Run with `cargo run --example extract`.

use linhyp::extract::{extract, extract_term, sample_orders};
use linhyp::hypergraph::is_isomorphic;
use linhyp::interp::{equal_mod_stmc, interpret};
use linhyp::term::{parse_signature, parse_term};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = parse_signature("f : 1 -> 1\ng : 1 -> 2\nh : 2 -> 1\nu : 0 -> 1\n")?;
    let t = parse_term("u * id 1 ; tr 1 (swap 1 1 ; h ; g) * f ; h", &sig)?;
    let h = interpret(&t, &sig)?;
    let canonical = extract(&h).simplify();
    println!("original:  {t}");
    println!("extracted: {canonical}");
    println!("same graph: {}", is_isomorphic(&interpret(&canonical, &sig)?, &h));

    println!("\nOther stacking orders give other terms for the same graph:");
    for ord in sample_orders(&h, 5) {
        let s = extract_term(&h, &ord)?.simplify();
        let ids: Vec<String> = ord.iter().map(|e| e.to_string()).collect();
        println!("  [{}]  {s}", ids.join(" "));
        assert!(equal_mod_stmc(&s, &t, &sig)?);
    }
    Ok(())
}
