//! List the catalog with each entry's provenance and canonical document.
//!
//! `cargo run --example catalog`

use dccd::construct::{catalog, catalog_names};
use dccd::DesignDocument;

fn main() -> dccd::Result<()> {
    for name in catalog_names() {
        let e = catalog(name)?;
        println!("{name:<20} b={:<5} {}", e.design.b(), e.provenance);
    }
    let e = catalog("cdccd-6-4-3")?;
    print!("\n{}", DesignDocument::named(e.design, e.name, e.provenance).to_json());
    Ok(())
}
