//! Classify the seven-point design, then break one block and classify again.
//!
//! `cargo run --example verify_table`

use dccd::construct::catalog;
use dccd::{classify, coverage, render_table, verify_m_change, Design};

fn main() -> dccd::Result<()> {
    let d = catalog("cdccd-7-3-7")?.design;
    print!("{}", render_table(&d));
    let c = classify(&d);
    println!("double change: {}, tight: {}", c.is_double_change(), c.tight);

    let mut blocks = d.blocks().to_vec();
    blocks[3] = vec![0, 3, 5];
    let broken = Design::new(7, 3, true, blocks)?;
    let check = verify_m_change(&broken, 2)?;
    if let Some(f) = check.first_failure {
        println!("broken: gap {} shares {} points, expected {}", f.gap, f.intersection, f.expected);
    }
    let ledger = coverage(&broken, 2)?;
    println!("broken: {} pairs uncovered: {:?}", ledger.uncovered_count(), ledger.uncovered());
    Ok(())
}
