//! Find an expansion set and grow a design with a 1-factorization.
//!
//! `cargo run --example expansion_recursion`

use dccd::construct::catalog;
use dccd::expansion::corollary_chain;
use dccd::{circle_method, classify, expand, find_expansion_set};

fn main() -> dccd::Result<()> {
    let d = catalog("dccd-7-3-7")?.design;
    let e = find_expansion_set(&d)?.expect("the linear seven-point design has one");
    for (loc, part) in e.parts() {
        println!("U_{loc} = {part:?}");
    }
    let f = circle_method(e.len() + 1)?;
    let x = expand(&d, &e, &f)?;
    println!("DCCD({},{},{}) tight={}", x.v(), x.k(), x.b(), classify(&x).tight);
    println!("expanded design has an expansion set: {}", find_expansion_set(&x)?.is_some());

    println!("\nexpanded difference families:");
    for entry in corollary_chain()? {
        let flag = if entry.matches_printed() { "" } else { "  (differs from printed)" };
        println!("c={} k={}: {:?}{flag}", entry.c, entry.k, entry.parameters());
    }
    Ok(())
}
