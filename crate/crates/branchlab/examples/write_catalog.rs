//! Regenerates the bundled `catalog.json` from the case builders.

use branchlab::catalog::{CatalogDocument, BUNDLED_MAX_N};

fn main() -> std::io::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/catalog.json");
    std::fs::write(path, CatalogDocument::generate(BUNDLED_MAX_N).to_json())?;
    println!("wrote {path}");
    Ok(())
}
