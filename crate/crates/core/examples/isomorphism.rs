//! Deciding equality of terms by graph isomorphism.
//!
//! Run with `cargo run --example isomorphism`.

use linhyp::hypergraph::find_isomorphism;
use linhyp::interp::{equal_mod_stmc, interpret};
use linhyp::term::{parse_signature, parse_term};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = parse_signature("f : 1 -> 1\ng : 1 -> 2\nh : 2 -> 1\n")?;
    let pairs = [
        // Naturality of the symmetry.
        ("f * g ; swap 1 2", "swap 1 1 ; g * f"),
        // Yanking.
        ("tr 1 (swap 1 1)", "id 1"),
        // Sliding a generator around a loop.
        ("tr 1 (f * id 1 ; h ; g)", "tr 1 (h ; g ; f * id 1)"),
        // Crossing the wires into `h` changes the graph.
        ("g ; h", "g ; swap 1 1 ; h"),
    ];
    for (a, b) in pairs {
        let (s, t) = (parse_term(a, &sig)?, parse_term(b, &sig)?);
        let equal = equal_mod_stmc(&s, &t, &sig)?;
        println!("{a}  =  {b}  ?  {equal}");
        if let Some(iso) = find_isomorphism(&interpret(&s, &sig)?, &interpret(&t, &sig)?) {
            let pairs: Vec<String> = iso.edges.iter().map(|(x, y)| format!("{x}->{y}")).collect();
            println!("    edges matched: {}", pairs.join(", "));
        }
    }
    Ok(())
}
