use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::Graph;

/// Summary of all maximal cliques of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueReport {
    /// Number of maximal cliques of each size.
    pub size_counts: BTreeMap<usize, usize>,
    pub max_size: usize,
    /// Every maximal clique of size at most the requested cap, sorted.
    pub small_cliques: Vec<Vec<usize>>,
    /// One maximum clique.
    pub maximum_witness: Vec<usize>,
}

impl CliqueReport {
    pub fn count_of_size(&self, k: usize) -> usize {
        self.size_counts.get(&k).copied().unwrap_or(0)
    }
}

/// Enumerates maximal cliques with pivoting Bron–Kerbosch. The top level is
/// split by the lowest vertex of each clique and run in parallel; results are
/// sorted so the report does not depend on scheduling.
pub fn maximal_cliques(g: &Graph, size_cap: usize) -> CliqueReport {
    let n = g.order();
    let words = n.div_ceil(64).max(1);
    let mut all: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|v| {
            let mut p = vec![0u64; words];
            let mut x = vec![0u64; words];
            for u in g.neighbours(v) {
                if u > v {
                    p[u / 64] |= 1 << (u % 64);
                } else {
                    x[u / 64] |= 1 << (u % 64);
                }
            }
            let mut out = Vec::new();
            let mut r = vec![v];
            expand(g, &mut r, p, x, &mut out);
            out
        })
        .collect();
    for c in &mut all {
        c.sort_unstable();
    }
    all.sort();
    let mut size_counts = BTreeMap::new();
    for c in &all {
        *size_counts.entry(c.len()).or_insert(0) += 1;
    }
    let maximum_witness = all.iter().max_by_key(|c| c.len()).cloned().unwrap_or_default();
    CliqueReport {
        size_counts,
        max_size: maximum_witness.len(),
        small_cliques: all.into_iter().filter(|c| c.len() <= size_cap).collect(),
        maximum_witness,
    }
}

fn expand(g: &Graph, r: &mut Vec<usize>, mut p: Vec<u64>, mut x: Vec<u64>, out: &mut Vec<Vec<usize>>) {
    if is_empty(&p) {
        if is_empty(&x) {
            out.push(r.clone());
        }
        return;
    }
    // Pivot maximizing |P ∩ N(u)| over u in P ∪ X.
    let pivot = ones(&p)
        .chain(ones(&x))
        .max_by_key(|&u| intersection_count(&p, g.row(u)))
        .expect("P is non-empty");
    let candidates: Vec<usize> = ones(&p).filter(|&u| !g.has_edge(pivot, u)).collect();
    for u in candidates {
        let row = g.row(u);
        let np: Vec<u64> = p.iter().zip(row).map(|(a, b)| a & b).collect();
        let nx: Vec<u64> = x.iter().zip(row).map(|(a, b)| a & b).collect();
        r.push(u);
        expand(g, r, np, nx, out);
        r.pop();
        p[u / 64] &= !(1 << (u % 64));
        x[u / 64] |= 1 << (u % 64);
    }
}

fn is_empty(s: &[u64]) -> bool {
    s.iter().all(|&w| w == 0)
}

fn intersection_count(a: &[u64], b: &[u64]) -> u32 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones()).sum()
}

fn ones(s: &[u64]) -> impl Iterator<Item = usize> + '_ {
    s.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(w * 64 + b)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_has_one_clique() {
        let r = maximal_cliques(&Graph::complete(7), 7);
        assert_eq!(r.size_counts, BTreeMap::from([(7, 1)]));
        assert_eq!(r.small_cliques, vec![(0..7).collect::<Vec<_>>()]);
    }

    #[test]
    fn five_cycle_and_isolated_vertex() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        edges.push((5, 6));
        let g = Graph::from_edges(8, &edges).unwrap();
        let r = maximal_cliques(&g, 2);
        assert_eq!(r.count_of_size(2), 6);
        assert_eq!(r.count_of_size(1), 1);
        assert_eq!(r.max_size, 2);
    }

    #[test]
    fn every_reported_clique_is_maximal() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let g = Graph::random(70, 0.4, &mut rng);
        let r = maximal_cliques(&g, usize::MAX);
        for c in &r.small_cliques {
            assert!(g.is_clique(c));
            let extendable = (0..70).any(|v| !c.contains(&v) && c.iter().all(|&u| g.has_edge(u, v)));
            assert!(!extendable);
        }
        assert_eq!(r.small_cliques.len(), r.size_counts.values().sum::<usize>());
    }
}
