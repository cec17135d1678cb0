//! Classifies the switches of the Fano plane up to its collineations and
//! prints the matrix of every double coset.
//!
//! ```text
//! cargo run --example fano_classification
//! ```

use design_switching::catalog::data;
use design_switching::classify::{design_automorphism_group, schemes_from_design, ClassifyOptions};
use design_switching::designs::IncidenceStructure;
use design_switching::perm::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fano = IncidenceStructure::from_incidence_rows(&data::FANO)?;
    let p = fano.validate()?;
    println!("Fano plane: v = {}, b = {}, r = {}, lambda = {}", fano.v(), fano.block_count(), p.r, p.lambda);

    let c = schemes_from_design(&fano, ClassifyOptions::default())?;
    println!("|G| = {}, |H| = {}, {} double cosets", c.g_order, c.h_order, c.coset_count());

    let h = design_automorphism_group(&fano);
    for text in data::FANO_PERMS {
        let pi = Permutation::parse_cycles(text, fano.block_count())?;
        println!("  {text:>14} lies in coset {}", c.locate(&h, &pi).expect("in G"));
    }
    for (rep, s) in c.representatives.iter().skip(1).zip(&c.schemes) {
        println!("\nrepresentative {} (level {}):\n{}", rep.to_cycle_string(), s.level(), s.matrix().to_scaled_string());
    }
    Ok(())
}
