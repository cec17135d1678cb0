//! Searches for a factorization of a switch into smaller known switches.
//! A prime in the level that no basis scheme has rules it out at once.
//!
//! ```text
//! cargo run --release --example reduce_scheme
//! ```

use design_switching::catalog::{self, data};
use design_switching::classify::{reduce_scheme, ReduceOptions, ReduceOutcome};
use design_switching::exact::RatMatrix;
use design_switching::graph::Graph;
use design_switching::switching::{canonical_form, compatible_ac, graph_to_mask, relabelling_group, Provenance, SwitchingScheme};

fn listed_graph(rows: &str) -> Graph {
    let rows: Vec<&[u8]> = rows.split_whitespace().map(str::as_bytes).collect();
    let edges: Vec<(usize, usize)> =
        (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j))).filter(|&(i, j)| rows[i][j] == b'1').collect();
    Graph::from_edges(8, &edges).expect("edges")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let basis = catalog::basis(&["GM(4)", "WQH(2)", "AH(6)", "Fano", "Cube"])?;
    let opts = ReduceOptions::default();

    let gm4 = catalog::get("GM(4)")?.scheme;
    let sum = SwitchingScheme::new(RatMatrix::direct_sum(&[gm4.matrix().clone(), gm4.matrix().clone()]), Provenance::Raw)?;
    println!("GM(4) + GM(4): {:?}", reduce_scheme(&sum, &Graph::empty(8), &basis, &opts)?);
    for id in ["Prop51", "Level5"] {
        let s = catalog::get(id)?.scheme;
        println!("{id}: {:?}", reduce_scheme(&s, &Graph::empty(s.v()), &basis, &opts)?);
    }

    // New8 against the six-point WQH switch, one A_C class at a time.
    let wqh6 = catalog::basis(&["WQH(3)"])?;
    let new8 = catalog::get("New8")?.scheme;
    let group = relabelling_group(new8.scaled());
    let listed: Vec<u64> =
        data::NEW8_IRREDUCIBLE_AC.iter().map(|rows| canonical_form(8, graph_to_mask(&listed_graph(rows)), &group)).collect();
    let reps = compatible_ac(&new8, true)?;
    let mut tally = [[0usize; 2]; 2];
    for (g, &mask) in reps.graphs().iter().zip(&reps.masks) {
        let is_listed = listed.contains(&mask);
        let reduced = match reduce_scheme(&new8, g, &wqh6, &opts)? {
            ReduceOutcome::Reduced { factors } => {
                let places: Vec<_> = factors.iter().map(|f| &f.points).collect();
                println!("  {:<60} {} factors on {places:?}", format!("{:?}", g.edges()), factors.len());
                true
            }
            ReduceOutcome::NotReduced { explored, .. } => {
                println!("  {:<60} no factorization ({explored} nodes)", format!("{:?}", g.edges()));
                false
            }
        };
        tally[usize::from(is_listed)][usize::from(reduced)] += 1;
    }
    println!("New8, {} classes of A_C:", reps.len());
    println!("  listed as irreducible: {} not reduced, {} reduced", tally[1][0], tally[1][1]);
    println!("  the others:            {} not reduced, {} reduced", tally[0][0], tally[0][1]);
    Ok(())
}
