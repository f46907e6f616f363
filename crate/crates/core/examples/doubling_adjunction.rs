//! Double every point of a single change design, then adjoin one point.
//!
//! `cargo run --example doubling_adjunction`

use dccd::construct::{adjoin_point, csccd_consecutive, double_points};
use dccd::{classify, render_table};

fn main() -> dccd::Result<()> {
    let s = csccd_consecutive(2)?;
    println!("{}", render_table(&s));
    let d = double_points(&s)?;
    println!("{}", render_table(&d));
    let a = adjoin_point(&d)?;
    println!("{}", render_table(&a));

    for kp in 2..=6 {
        let d = double_points(&csccd_consecutive(kp)?)?;
        let a = adjoin_point(&d)?;
        println!(
            "k'={kp}: CDCCD({},{},{}) tight={}, CDCCD({},{},{}) tight={}",
            d.v(),
            d.k(),
            d.b(),
            classify(&d).tight,
            a.v(),
            a.k(),
            a.b(),
            classify(&a).tight
        );
    }
    Ok(())
}
