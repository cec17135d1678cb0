//! Every named scheme with its size, level and source check.
//!
//! ```text
//! cargo run --release --example catalog_tour
//! ```

use design_switching::catalog::{self, catalog_ids};
use design_switching::exact::is_decomposable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("{:<10} {:>3} {:>6} {:>13} {:>8}", "id", "v", "level", "decomposable", "source");
    for id in catalog_ids() {
        let e = catalog::make(&id)?;
        let source = match &e.source {
            Some(_) if catalog::consistency_check(&e)?.is_some() => "ok",
            Some(_) => "MISMATCH",
            None => "-",
        };
        println!(
            "{:<10} {:>3} {:>6} {:>13} {:>8}",
            id.to_string(),
            e.scheme.v(),
            e.scheme.level(),
            is_decomposable(e.scheme.matrix()),
            source
        );
    }
    let new8 = catalog::get("New8")?;
    println!("\nNew8 as a scheme file:\n{}", serde_json::to_string(&new8.scheme.to_json())?);
    Ok(())
}
