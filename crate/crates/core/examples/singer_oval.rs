//! Cyclic projective planes from difference sets: the Singer identity and
//! the switch pairing a line orbit with the orbit of an oval.
//!
//! ```text
//! cargo run --example singer_oval
//! ```

use design_switching::designs::{cycle_adjacency, cyclic_plane, gram_profile, line_orbit, oval_companion, singer_identity, DifferenceSet};
use design_switching::switching::derive_r;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (m, residues) in [(7, vec![1, 2, 4]), (13, vec![0, 1, 3, 9]), (21, vec![3, 6, 7, 12, 14])] {
        let plane = cyclic_plane(&DifferenceSet::new(m, &residues)?)?;
        println!("PG(2,{}) from {:?} mod {m}", residues.len() - 1, residues);
        println!("  N^T A N = qA + 2J: {}", singer_identity(&plane));

        let lines = line_orbit(&plane, 0)?;
        let oval = oval_companion(&plane, 0)?;
        println!("  oval {:?}, same intersection profile: {}", oval.blocks()[0].point_list(), gram_profile(&lines, &oval)?);

        let s = derive_r(&lines, &oval)?;
        let a = cycle_adjacency(m);
        let fixed = &(&s.matrix().transpose() * &a) * s.matrix() == a;
        println!("  level {}, R^T A R = A for the {m}-cycle: {fixed}", s.level());
    }
    Ok(())
}
