//! Counts the graphs on the switching set that a scheme maps to graphs,
//! labelled and up to relabelling and complementation.
//!
//! ```text
//! cargo run --release --example compatible_ac_counts
//! ```

use design_switching::catalog;
use design_switching::graph::emit_graph6;
use design_switching::switching::compatible_ac;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for id in ["GM(4)", "GM(6)", "WQH(3)", "AH(6)", "Fano", "Cube", "New7", "Prop51", "New8", "Level5"] {
        let s = catalog::get(id)?.scheme;
        let all = compatible_ac(&s, false)?;
        let reps = compatible_ac(&s, true)?;
        println!("{id:>7}: {:>6} labelled, {:>4} up to symmetry", all.len(), reps.len());
    }

    let prop = catalog::get("Prop51")?.scheme;
    for g in compatible_ac(&prop, true)?.graphs() {
        println!("Prop51 representative {} with edges {:?}", emit_graph6(&g), g.edges());
    }
    Ok(())
}
