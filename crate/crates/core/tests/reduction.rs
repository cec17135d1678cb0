use design_switching::catalog::{self, data};
use design_switching::classify::{reduce_scheme, ReduceOptions, ReduceOutcome};
use design_switching::graph::Graph;
use design_switching::switching::{canonical_form, compatible_ac, graph_to_mask, relabelling_group};

fn listed_graph(rows: &str) -> Graph {
    let rows: Vec<&[u8]> = rows.split_whitespace().map(str::as_bytes).collect();
    let edges: Vec<(usize, usize)> =
        (0..8).flat_map(|i| (i + 1..8).map(move |j| (i, j))).filter(|&(i, j)| rows[i][j] == b'1').collect();
    Graph::from_edges(8, &edges).unwrap()
}

// Within the default search bounds, exactly the ten listed classes resist
// factoring into six-point WQH switches.
#[test]
fn new8_splits_into_listed_and_wqh6_reducible() {
    let wqh6 = catalog::basis(&["WQH(3)"]).unwrap();
    let new8 = catalog::get("New8").unwrap().scheme;
    let group = relabelling_group(new8.scaled());
    let listed: Vec<u64> =
        data::NEW8_IRREDUCIBLE_AC.iter().map(|rows| canonical_form(8, graph_to_mask(&listed_graph(rows)), &group)).collect();
    let reps = compatible_ac(&new8, true).unwrap();
    assert_eq!(reps.len(), 72);
    let opts = ReduceOptions::default();
    for (g, mask) in reps.graphs().iter().zip(&reps.masks) {
        let reduced = matches!(reduce_scheme(&new8, g, &wqh6, &opts).unwrap(), ReduceOutcome::Reduced { .. });
        assert_eq!(reduced, !listed.contains(mask), "A_C {:?}", g.edges());
    }
}
