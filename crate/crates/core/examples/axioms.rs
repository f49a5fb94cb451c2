//! Random instances of every axiom scheme of symmetric traced monoidal
//! categories, checked by isomorphism of their graphs.
//!
//! Run with `cargo run --example axioms`.

use linhyp::interp::axioms::Axiom;
use linhyp::interp::equal_mod_stmc;
use linhyp::random;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = random::signature();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for ax in Axiom::ALL {
        let (l, r) = ax.instance(&mut rng, &sig, 2);
        let ok = equal_mod_stmc(&l, &r, &sig)?;
        println!("{:<22} {}\n    {l}\n  = {r}", ax.name(), if ok { "holds" } else { "FAILS" });
    }
    Ok(())
}
