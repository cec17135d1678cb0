use super::{Graph, GraphError};

const LIMIT: usize = 64;

/// Exact isomorphism test by colour refinement with individualization and
/// backtracking. Both graphs are refined jointly so colour names agree.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    let n = g1.order();
    if n != g2.order() {
        return Ok(false);
    }
    if n > LIMIT {
        return Err(GraphError::SizeTooLarge { n, limit: LIMIT });
    }
    if g1.edge_count() != g2.edge_count() {
        return Ok(false);
    }
    let c1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let c2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    Ok(search(g1, g2, c1, c2))
}

fn search(g1: &Graph, g2: &Graph, c1: Vec<usize>, c2: Vec<usize>) -> bool {
    let Some((c1, c2)) = refine(g1, g2, c1, c2) else { return false };
    let n = g1.order();
    let colours = c1.iter().max().map_or(0, |m| m + 1);
    let mut size = vec![0usize; colours];
    for &c in &c1 {
        size[c] += 1;
    }
    // Smallest non-singleton cell; discrete colourings give the bijection directly.
    let target = (0..colours).filter(|&c| size[c] > 1).min_by_key(|&c| size[c]);
    let Some(cell) = target else {
        let mut map = vec![0usize; n];
        let mut pos2 = vec![0usize; colours];
        for v in 0..n {
            pos2[c2[v]] = v;
        }
        for v in 0..n {
            map[v] = pos2[c1[v]];
        }
        return (0..n).all(|u| (u + 1..n).all(|v| g1.has_edge(u, v) == g2.has_edge(map[u], map[v])));
    };
    let v = (0..n).find(|&v| c1[v] == cell).expect("cell is non-empty");
    let fresh = colours;
    for w in (0..n).filter(|&w| c2[w] == cell) {
        let mut d1 = c1.clone();
        let mut d2 = c2.clone();
        d1[v] = fresh;
        d2[w] = fresh;
        if search(g1, g2, d1, d2) {
            return true;
        }
    }
    false
}

/// Refines both colourings to the coarsest common equitable partition.
/// Returns `None` as soon as the colour histograms disagree.
fn refine(g1: &Graph, g2: &Graph, mut c1: Vec<usize>, mut c2: Vec<usize>) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g1.order();
    let mut classes = usize::MAX;
    loop {
        let k = c1.iter().chain(&c2).max().map_or(0, |m| m + 1);
        let signature = |g: &Graph, c: &[usize], v: usize| {
            let mut counts = vec![0u32; k];
            for u in g.neighbours(v) {
                counts[c[u]] += 1;
            }
            (c[v], counts)
        };
        let s1: Vec<_> = (0..n).map(|v| signature(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..n).map(|v| signature(g2, &c2, v)).collect();
        let mut sorted1 = s1.clone();
        let mut sorted2 = s2.clone();
        sorted1.sort();
        sorted2.sort();
        if sorted1 != sorted2 {
            return None;
        }
        sorted1.dedup();
        let name = |s: &(usize, Vec<u32>)| sorted1.binary_search(s).expect("present");
        c1 = s1.iter().map(name).collect();
        c2 = s2.iter().map(name).collect();
        if sorted1.len() == classes {
            return Some((c1, c2));
        }
        classes = sorted1.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn relabelled_graphs_are_isomorphic() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = Graph::random(30, 0.5, &mut rng);
            let mut perm: Vec<usize> = (0..30).collect();
            perm.shuffle(&mut rng);
            assert!(isomorphic(&g, &g.relabel(&perm)).unwrap());
        }
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // 6-cycle vs two triangles: same degrees, not isomorphic.
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!isomorphic(&c6, &tt).unwrap());
        assert!(isomorphic(&c6, &c6.relabel(&[3, 5, 1, 0, 2, 4])).unwrap());
    }

    #[test]
    fn star_and_four_cycle() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c4 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!isomorphic(&star, &c4).unwrap());
        assert!(isomorphic(&Graph::empty(65), &Graph::empty(65)).is_err());
    }
}
