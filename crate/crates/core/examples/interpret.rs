//! Interpreting terms as linear hypergraphs.
//!
//! Run with `cargo run --example interpret`.

use linhyp::interp::interpret;
use linhyp::term::{parse_signature, parse_term};
use linhyp::workbench::{save, to_dot};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = parse_signature("f : 1 -> 1\ng : 1 -> 2\nh : 2 -> 1\n")?;
    for src in ["g ; f * f ; h", "g ; swap 1 1 ; h", "tr 1 (swap 1 1 ; h ; g)", "id 2"] {
        let t = parse_term(src, &sig)?;
        let (dom, cod) = t.type_of(&sig)?;
        let h = interpret(&t, &sig)?;
        println!("{src} : {dom} -> {cod}");
        println!(
            "  {} edges, {} targets, {} sources, valid: {}",
            h.edges.len(),
            h.targets.len(),
            h.sources.len(),
            h.is_valid()
        );
    }
    let h = interpret(&parse_term("tr 1 (swap 1 1 ; h ; g)", &sig)?, &sig)?;
    println!("\nJSON of the feedback loop:\n{}", save(&h));
    println!("\nGraphviz:\n{}", to_dot(&h));
    Ok(())
}
