//! Graphs over several object labels: wires carry objects and edges must
//! agree with them.
//!
//! Run with `cargo run --example generalised`.

use linhyp::extract::extract;
use linhyp::hypergraph::is_isomorphic;
use linhyp::interp::{equal_mod_stmc, interpret};
use linhyp::term::{parse_signature, parse_term};
use linhyp::workbench::save;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = parse_signature("objects: A, B, C, D\nf : [A] -> [B]\ng : [B] -> [A]\nh : [B, A] -> [C, D]\n")?;
    let t = parse_term("f * g ; h", &sig)?;
    let (dom, cod) = t.type_of(&sig)?;
    let h = interpret(&t, &sig)?;
    println!("{t} : {dom} -> {cod}");
    println!("{}", save(&h));

    let back = extract(&h).simplify();
    println!("\nextracted: {back}");
    println!("same graph: {}", is_isomorphic(&interpret(&back, &sig)?, &h));

    // Swapping named wires moves the objects with them.
    let a = parse_term("swap [A] [B] ; g * f ; swap [A] [B]", &sig)?;
    let b = parse_term("f * g", &sig)?;
    println!("\n{a}  =  {b}  ?  {}", equal_mod_stmc(&a, &b, &sig)?);

    // A term that mixes up the objects is rejected.
    match parse_term("g * f ; h", &sig) {
        Ok(_) => println!("unexpectedly well typed"),
        Err(e) => println!("g * f ; h: {e}"),
    }
    Ok(())
}
