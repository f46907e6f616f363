//! Compare running tests in order against swapping every component.
//!
//! `cargo run --example cost_model`

use dccd::construct::catalog;
use dccd::cost::UNREPRODUCED_FIGURES;
use dccd::{full_swap_cost, sequential_cost, CostParams};

fn main() -> dccd::Result<()> {
    let d = catalog("dccd-7-3-7")?.design;
    for (test, change) in [(10, 1), (1, 5)] {
        let p = CostParams::new(test, change);
        let seq = sequential_cost(&d, p);
        let full = full_swap_cost(d.b() as u64, d.k() as u64, p)?;
        println!("test ${test}, change ${change}: in order ${}, full swap ${}", seq.total, full.total);
    }
    for f in UNREPRODUCED_FIGURES {
        println!("{}: reported ${}, model gives ${}", f.scheme, f.reported, f.modelled);
    }
    Ok(())
}
