//! The circle method 1-factorization of K_8, checked and shown as rounds.
//!
//! `cargo run --example one_factorization`

use dccd::factorization::{circle_method, verify_factorization};

fn main() -> dccd::Result<()> {
    let f = circle_method(8)?;
    verify_factorization(&f).expect("circle method is a 1-factorization");
    for (round, factor) in f.factors().iter().enumerate() {
        println!("round {}: {factor:?}", round + 1);
    }
    Ok(())
}
