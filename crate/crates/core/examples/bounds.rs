//! Lower bounds on block counts for a few design parameters.
//!
//! `cargo run --example bounds`

use dccd::{change_bound, lower_bound_circular, lower_bound_linear, BoundQuery};

fn main() -> dccd::Result<()> {
    println!("{:>4} {:>3} {:>7} {:>9}  exact", "v", "k", "linear", "circular");
    for (v, k) in [(7, 3), (6, 4), (10, 4), (13, 3), (21, 4), (61, 4), (253, 13)] {
        let q = BoundQuery::new(v, k, 2)?;
        let exact = change_bound(q, 2, true)?.exact;
        println!(
            "{v:>4} {k:>3} {:>7} {:>9}  {exact}",
            lower_bound_linear(q),
            lower_bound_circular(q)
        );
    }
    Ok(())
}
