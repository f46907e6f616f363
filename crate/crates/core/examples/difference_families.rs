//! Develop base block families over Z_v into circular designs.
//!
//! `cargo run --example difference_families`

use dccd::construct::{base_family, base_family_61, develop, verify_base_family};
use dccd::classify;

fn main() -> dccd::Result<()> {
    let f = base_family(3, 2)?;
    println!("base blocks over Z_{}: {:?}", f.v(), f.base_blocks());
    println!("{}", verify_base_family(&f));

    for k in 3..=6 {
        for c in 1..=3 {
            let d = develop(&base_family(k, c)?)?;
            let tight = classify(&d).tight;
            println!("k={k} c={c}: CDCCD({},{},{}) tight={tight}", d.v(), d.k(), d.b());
        }
    }

    let d = develop(&base_family_61())?;
    println!("Z_61 family: CDCCD({},{},{}) tight={}", d.v(), d.k(), d.b(), classify(&d).tight);
    Ok(())
}
