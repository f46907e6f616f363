//! Smallest double change designs found by exhaustive search.
//!
//! `cargo run --release --example exhaustive_search`

use dccd::{exhaustive_min_blocks, render_table, SearchLimits};

fn main() -> dccd::Result<()> {
    let limits = SearchLimits::default();
    for (v, k, circular) in [(7, 3, true), (7, 3, false), (6, 4, true), (8, 5, true), (9, 3, false)] {
        match exhaustive_min_blocks(v, k, circular, 12, limits)? {
            Some(d) => {
                println!("v={v} k={k} circular={circular}: {} blocks", d.b());
                print!("{}", render_table(&d));
            }
            None => println!("v={v} k={k} circular={circular}: none with at most 12 blocks"),
        }
    }
    Ok(())
}
