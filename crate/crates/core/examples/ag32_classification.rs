//! The fourteen switching methods of AG(3,2). Takes a few seconds in
//! release mode; `--parallelism-only` style classification is shown too.
//!
//! ```text
//! cargo run --release --example ag32_classification
//! ```

use std::time::Instant;

use design_switching::catalog::{self, data};
use design_switching::classify::{schemes_from_design, BlockRelation, ClassifyOptions};
use design_switching::designs::IncidenceStructure;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = IncidenceStructure::from_incidence_rows(&data::AG32)?;
    for relation in [BlockRelation::Intersections, BlockRelation::Disjointness] {
        let start = Instant::now();
        let c = schemes_from_design(&d, ClassifyOptions { relation, ..Default::default() })?;
        println!(
            "{relation:?}: |G| = {}, |H| = {}, {} cosets kept, {} dropped ({:.1?})",
            c.g_order,
            c.h_order,
            c.coset_count(),
            c.dropped,
            start.elapsed()
        );
    }

    let c = schemes_from_design(&d, ClassifyOptions::default())?;
    for (rep, s) in c.representatives.iter().skip(1).zip(&c.schemes) {
        // Which printed method is it, up to relabelling before and after?
        let name = (1..=14)
            .map(|i| catalog::get(&format!("AG32({i})")).expect("catalog entry"))
            .find(|e| catalog::method_equivalent(&e.scheme, s))
            .map(|e| e.id.to_string())
            .unwrap_or_else(|| "?".into());
        println!("{:>32}  level {}  {name}", rep.to_cycle_string(), s.level());
    }
    Ok(())
}
