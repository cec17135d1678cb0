//! Which switching matrices come from an (r, lambda)-design? The compatible
//! vectors of R are the candidate blocks; an exact LP looks for
//! multiplicities or returns a Farkas certificate.
//!
//! ```text
//! cargo run --example realizability
//! ```

use design_switching::catalog;
use design_switching::switching::{design_realizable, Realizability};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for id in ["GM(4)", "WQH(3)", "AH(6)", "Fano", "Cube", "Prop51"] {
        let s = catalog::get(id)?.scheme;
        match design_realizable(&s)? {
            Realizability::Feasible { params, design } => {
                let mults: Vec<u64> = design.multiplicities();
                println!("{id:>7}: design with r = {}, lambda = {}, multiplicities {mults:?}", params.r, params.lambda);
            }
            Realizability::Infeasible { certificate } => {
                println!("{id:>7}: no multiplicities work; certificate verified: {}", certificate.verify(&s)?);
                for (p, q, w) in &certificate.pair_weights {
                    println!("         pair {{{p}, {q}}} weight {w}");
                }
            }
        }
    }
    Ok(())
}
