//! Evaluating digital circuits by rewriting, including feedback loops.
//!
//! Run with `cargo run --example circuits`.

use linhyp::circuits::{CircuitSignature, Evaluator};
use linhyp::term::parse_term;

fn run(ev: &Evaluator, src: &str, words: &[&[&str]]) -> Result<(), Box<dyn std::error::Error>> {
    let t = parse_term(src, ev.signature())?;
    println!("{src}");
    for w in words {
        let input: Vec<_> = w.iter().map(|n| ev.sig.lattice.value(n).expect("known value")).collect();
        let out = ev.evaluate_term(&t, &[input])?.remove(0);
        println!("  ({}) -> {}", w.join(", "), out.display(&ev.sig));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let two = Evaluator::new(CircuitSignature::two_point())?;
    let (t, b) = ("top", "bot");
    run(&two, "and ; fork", &[&[t, t], &[t, b]])?;
    run(&two, "id 1 * fork ; or * id 1 ; and", &[&[t, b], &[b, t]])?;
    // An or-latch: the output is fed back into the gate.
    run(&two, "tr 1 (swap 1 1 ; or ; fork)", &[&[t], &[b]])?;

    let belnap = Evaluator::new(CircuitSignature::belnap())?;
    // A loop through negation settles at no information.
    run(&belnap, "tr 1 (not ; fork)", &[&[]])?;
    run(&belnap, "not * id 1 ; and", &[&["tt", "ff"], &["top", "tt"], &["bot", "ff"]])?;
    // A delay on the feedback wire: the previous output is unknown.
    run(&belnap, "tr 1 (delay * id 1 ; or ; fork)", &[&["tt"], &["ff"]])?;
    Ok(())
}
