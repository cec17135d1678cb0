use std::collections::HashSet;

use rayon::prelude::*;

use super::{SchemeError, SwitchingScheme, MAX_AC_POINTS, MAX_TABLE_POINTS};
use crate::exact::ScaledMatrix;
use crate::graph::Graph;
use crate::perm::Permutation;

/// Cap on the number of raw `A_C` matrices a search may return.
const MAX_AC_RESULTS: usize = 1 << 24;
/// Cap on edges enumerated in the stored half of the meet-in-the-middle search.
const MAX_FIRST_HALF: usize = 20;

/// `Rᵀχ` if it is a 0/1 vector.
pub(crate) fn image_direct(m: &ScaledMatrix, chi: u64) -> Option<u64> {
    let v = m.rows;
    let mut image = 0u64;
    for j in 0..v {
        let s: i64 = (0..v).filter(|&i| chi >> i & 1 == 1).map(|i| m.at(i, j)).sum();
        if s == m.scale {
            image |= 1 << j;
        } else if s != 0 {
            return None;
        }
    }
    Some(image)
}

/// All `(χ, Rᵀχ)` with both 0/1, sorted by `χ`. Vectors avoiding the last
/// point are enumerated in Gray-code order; the rest are their complements.
pub(crate) fn compatible_vectors(m: &ScaledMatrix) -> Vec<(u64, u64)> {
    let v = m.rows;
    assert!((1..=MAX_TABLE_POINTS).contains(&v));
    let full = (1u64 << v) - 1;
    let mut y = vec![0i64; v];
    let mut chi = 0u64;
    let mut out = Vec::new();
    let record = |chi: u64, y: &[i64], out: &mut Vec<(u64, u64)>| {
        let mut image = 0u64;
        for (j, &s) in y.iter().enumerate() {
            if s == m.scale {
                image |= 1 << j;
            } else if s != 0 {
                return;
            }
        }
        out.push((chi, image));
        out.push((full ^ chi, full ^ image));
    };
    record(chi, &y, &mut out);
    for k in 1u64..1 << (v - 1) {
        let i = k.trailing_zeros() as usize;
        chi ^= 1 << i;
        let sign = if chi >> i & 1 == 1 { 1 } else { -1 };
        for (j, yj) in y.iter_mut().enumerate() {
            *yj += sign * m.at(i, j);
        }
        record(chi, &y, &mut out);
    }
    out.sort_unstable();
    out
}

/// Position of edge `{i, j}` in row-major upper-triangle order.
pub fn edge_index(v: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * (2 * v - i - 1) / 2 + (j - i - 1)
}

fn edge_list(v: usize) -> Vec<(usize, usize)> {
    (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect()
}

/// Edge masks put edge `{0, 1}` in the most significant of the `v(v-1)/2`
/// bits, so numeric order on masks is lexicographic order on the upper
/// triangle read row by row.
fn edge_bit(e: usize, edges: usize) -> u64 {
    1 << (edges - 1 - e)
}

pub fn mask_to_graph(v: usize, mask: u64) -> Graph {
    let edges = edge_list(v);
    let ne = edges.len();
    let mut g = Graph::empty(v);
    for (e, &(i, j)) in edges.iter().enumerate() {
        if mask & edge_bit(e, ne) != 0 {
            g.add_edge(i, j);
        }
    }
    g
}

pub fn graph_to_mask(g: &Graph) -> u64 {
    let v = g.order();
    let edges = edge_list(v);
    let ne = edges.len();
    edges.iter().enumerate().filter(|(_, &(i, j))| g.has_edge(i, j)).fold(0, |m, (e, _)| m | edge_bit(e, ne))
}

/// A set of `A_C` matrices on `v` points as sorted edge masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcSet {
    pub v: usize,
    pub masks: Vec<u64>,
}

impl AcSet {
    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.masks.iter().map(|&m| mask_to_graph(self.v, m)).collect()
    }

    pub fn contains(&self, g: &Graph) -> bool {
        g.order() == self.v && self.masks.binary_search(&graph_to_mask(g)).is_ok()
    }
}

/// Permutations `σ` of the points with `R[σ(i)][σ(j)] = R[i][j]`, found by
/// backtracking on the images of `0, 1, ...`.
pub fn symmetry_group(m: &ScaledMatrix) -> Vec<Permutation> {
    let v = m.rows;
    let mut out = Vec::new();
    let mut img = vec![usize::MAX; v];
    let mut used = vec![false; v];
    fn go(m: &ScaledMatrix, k: usize, img: &mut [usize], used: &mut [bool], out: &mut Vec<Permutation>) {
        let v = m.rows;
        if k == v {
            out.push(Permutation::from_images(img.to_vec()).expect("bijection"));
            return;
        }
        for c in 0..v {
            if used[c] || m.at(c, c) != m.at(k, k) {
                continue;
            }
            let ok = (0..k).all(|i| m.at(img[i], c) == m.at(i, k) && m.at(c, img[i]) == m.at(k, i));
            if ok {
                img[k] = c;
                used[c] = true;
                go(m, k + 1, img, used, out);
                used[c] = false;
            }
        }
    }
    go(m, 0, &mut img, &mut used, &mut out);
    out.sort();
    out
}

/// Permutations `σ` of the points for which some `τ` gives
/// `R[σ(i)][τ(j)] = R[i][j]`. Relabelling `A_C` by such a `σ` keeps it
/// compatible, and the switched graph changes only by the relabelling `τ`.
/// Contains [`symmetry_group`].
pub fn relabelling_group(m: &ScaledMatrix) -> Vec<Permutation> {
    let v = m.rows;
    let sorted_row = |i: usize| {
        let mut r: Vec<i64> = (0..v).map(|j| m.at(i, j)).collect();
        r.sort_unstable();
        r
    };
    let rows: Vec<Vec<i64>> = (0..v).map(sorted_row).collect();
    let prefixes = |chosen: &[usize]| {
        let mut cols: Vec<Vec<i64>> = (0..v).map(|j| chosen.iter().map(|&i| m.at(i, j)).collect()).collect();
        cols.sort_unstable();
        cols
    };
    let targets: Vec<Vec<Vec<i64>>> = (0..=v).map(|k| prefixes(&(0..k).collect::<Vec<_>>())).collect();
    let mut out = Vec::new();
    let mut img: Vec<usize> = Vec::with_capacity(v);
    let mut used = vec![false; v];
    #[allow(clippy::too_many_arguments)]
    fn go(
        v: usize,
        rows: &[Vec<i64>],
        targets: &[Vec<Vec<i64>>],
        prefixes: &dyn Fn(&[usize]) -> Vec<Vec<i64>>,
        img: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        let k = img.len();
        if k == v {
            out.push(Permutation::from_images(img.clone()).expect("bijection"));
            return;
        }
        for c in 0..v {
            if used[c] || rows[c] != rows[k] {
                continue;
            }
            img.push(c);
            if prefixes(img) == targets[k + 1] {
                used[c] = true;
                go(v, rows, targets, prefixes, img, used, out);
                used[c] = false;
            }
            img.pop();
        }
    }
    go(v, &rows, &targets, &prefixes, &mut img, &mut used, &mut out);
    out.sort();
    out
}

fn map_mask(mask: u64, table: &[usize], ne: usize) -> u64 {
    let mut out = 0u64;
    let mut rest = mask;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let e = ne - 1 - b;
        out |= edge_bit(table[e], ne);
    }
    out
}

fn edge_tables(v: usize, group: &[Permutation]) -> Vec<Vec<usize>> {
    let edges = edge_list(v);
    group
        .iter()
        .map(|s| edges.iter().map(|&(i, j)| edge_index(v, s.apply(i), s.apply(j))).collect())
        .collect()
}

/// Least mask in the orbit of `mask` under the point permutations in
/// `group` (relabelling `A ↦ PᵀAP`) and complementation.
pub fn canonical_form(v: usize, mask: u64, group: &[Permutation]) -> u64 {
    let ne = v * (v - 1) / 2;
    let full = if ne == 64 { u64::MAX } else { (1u64 << ne) - 1 };
    edge_tables(v, group)
        .iter()
        .flat_map(|t| {
            let m = map_mask(mask, t, ne);
            [m, full ^ m]
        })
        .min()
        .unwrap_or(mask)
}

/// Every symmetric 0/1 zero-diagonal `A_C` with `RᵀA_C R` again such a
/// matrix. With `up_to_symmetry`, one least representative per orbit under
/// [`relabelling_group`] and complementation.
pub fn compatible_ac(scheme: &SwitchingScheme, up_to_symmetry: bool) -> Result<AcSet, SchemeError> {
    let raw = scheme.raw_compatible_ac()?;
    if !up_to_symmetry {
        return Ok(raw.clone());
    }
    let v = scheme.v();
    let ne = v * (v - 1) / 2;
    let full = if ne == 0 { 0 } else { (1u64 << ne) - 1 };
    let tables = edge_tables(v, &relabelling_group(scheme.scaled()));
    let mut seen: HashSet<u64> = HashSet::new();
    let mut reps = Vec::new();
    for &m in &raw.masks {
        if seen.contains(&m) {
            continue;
        }
        let mut least = m;
        for t in &tables {
            let a = map_mask(m, t, ne);
            for x in [a, full ^ a] {
                seen.insert(x);
                least = least.min(x);
            }
        }
        reps.push(least);
    }
    reps.sort_unstable();
    Ok(AcSet { v, masks: reps })
}

/// Meet-in-the-middle search. With `M = ℓR`, edge `{i, j}` adds
/// `M_ik M_jl + M_jk M_il` to entry `(k, l)` of `ℓ² RᵀAR`; a candidate is
/// valid when every diagonal sum is zero and every off-diagonal sum is `0`
/// or `ℓ²`. The first half of the edges is tabulated by a hash of its sums
/// (diagonal exactly, off-diagonal modulo `ℓ²`); the second half is
/// enumerated and looked up, and every match is checked exactly.
pub(crate) fn search_ac(m: &ScaledMatrix) -> Result<AcSet, SchemeError> {
    let v = m.rows;
    if v > MAX_AC_POINTS {
        return Err(SchemeError::SizeTooLarge { v, limit: MAX_AC_POINTS });
    }
    let edges = edge_list(v);
    let ne = edges.len();
    if ne == 0 {
        return Ok(AcSet { v, masks: vec![0] });
    }
    let modulus = m.scale * m.scale;
    // Entries: v diagonal slots, then the upper triangle.
    let slots: Vec<(usize, usize)> = (0..v).map(|k| (k, k)).chain(edges.iter().copied()).collect();
    let weights: Vec<Vec<i64>> = edges
        .iter()
        .map(|&(i, j)| slots.iter().map(|&(k, l)| m.at(i, k) * m.at(j, l) + m.at(j, k) * m.at(i, l)).collect())
        .collect();
    let n1 = (ne / 2).min(MAX_FIRST_HALF);
    let n2 = ne - n1;

    let key = |sums: &[i64], negate: bool| -> u64 {
        let mut h: u64 = 0x9e37_79b9_7f4a_7c15;
        for (t, &s) in sums.iter().enumerate() {
            let s = if negate { -s } else { s };
            let x = if t < v { s } else { s.rem_euclid(modulus) };
            h = (h.rotate_left(5) ^ x as u64).wrapping_mul(0x517c_c1b7_2722_0a95);
        }
        h
    };

    let mut first: Vec<(u64, u32)> = Vec::with_capacity(1 << n1);
    let mut sums = vec![0i64; slots.len()];
    let mut mask1: u32 = 0;
    first.push((key(&sums, false), 0));
    for k in 1u64..1 << n1 {
        let e = k.trailing_zeros() as usize;
        mask1 ^= 1 << e;
        let sign = if mask1 >> e & 1 == 1 { 1 } else { -1 };
        for (s, w) in sums.iter_mut().zip(&weights[e]) {
            *s += sign * w;
        }
        first.push((key(&sums, false), mask1));
    }
    first.sort_unstable();

    // Second half: split by its top few edges so chunks can run in parallel.
    let split = n2.min(6);
    let inner = n2 - split;
    let chunks: Vec<Result<Vec<u64>, SchemeError>> = (0u64..1 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut sums = vec![0i64; slots.len()];
            let mut mask2: u64 = prefix << inner;
            for b in 0..split {
                if prefix >> b & 1 == 1 {
                    for (s, w) in sums.iter_mut().zip(&weights[n1 + inner + b]) {
                        *s += w;
                    }
                }
            }
            let mut found = Vec::new();
            let probe = |sums: &[i64], mask2: u64, found: &mut Vec<u64>| -> Result<(), SchemeError> {
                let k = key(sums, true);
                let start = first.partition_point(|e| e.0 < k);
                for &(_, m1) in first[start..].iter().take_while(|e| e.0 == k) {
                    let mut total = sums.to_vec();
                    for e in 0..n1 {
                        if m1 >> e & 1 == 1 {
                            for (s, w) in total.iter_mut().zip(&weights[e]) {
                                *s += w;
                            }
                        }
                    }
                    let ok = total.iter().enumerate().all(|(t, &s)| if t < v { s == 0 } else { s == 0 || s == modulus });
                    if ok {
                        found.push(u64::from(m1) | mask2 << n1);
                        if found.len() > MAX_AC_RESULTS {
                            return Err(SchemeError::TooManyResults(MAX_AC_RESULTS));
                        }
                    }
                }
                Ok(())
            };
            probe(&sums, mask2, &mut found)?;
            for k in 1u64..1 << inner {
                let e = k.trailing_zeros() as usize;
                mask2 ^= 1 << e;
                let sign = if mask2 >> e & 1 == 1 { 1 } else { -1 };
                for (s, w) in sums.iter_mut().zip(&weights[n1 + e]) {
                    *s += sign * w;
                }
                probe(&sums, mask2, &mut found)?;
            }
            Ok(found)
        })
        .collect();

    // Enumeration masks use bit e for edge e; convert to the canonical layout.
    let mut masks = Vec::new();
    for chunk in chunks {
        for raw in chunk? {
            masks.push((0..ne).filter(|&e| raw >> e & 1 == 1).fold(0u64, |acc, e| acc | edge_bit(e, ne)));
        }
        if masks.len() > MAX_AC_RESULTS {
            return Err(SchemeError::TooManyResults(MAX_AC_RESULTS));
        }
    }
    masks.sort_unstable();
    Ok(AcSet { v, masks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, RatMatrix};
    use crate::switching::Provenance;

    fn gm4() -> SwitchingScheme {
        let r = &RatMatrix::all_ones(4).scale(&ratio(1, 2)) - &RatMatrix::identity(4);
        SwitchingScheme::new(r, Provenance::Raw).unwrap()
    }

    /// Direct check of `RᵀAR` over the rationals.
    fn compatible_by_definition(s: &SwitchingScheme, g: &Graph) -> bool {
        let a = g.adjacency_matrix();
        let r = s.matrix();
        (&(&r.transpose() * &a) * r).is_adjacency_matrix()
    }

    #[test]
    fn edge_layout() {
        assert_eq!(edge_index(4, 0, 1), 0);
        assert_eq!(edge_index(4, 2, 3), 5);
        assert_eq!(edge_index(4, 3, 1), 4);
        let g = mask_to_graph(4, 0b100000);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(graph_to_mask(&g), 0b100000);
    }

    #[test]
    fn gm4_vectors() {
        let s = gm4();
        let table = s.block_table().unwrap();
        assert_eq!(table.len(), 8);
        let sizes: Vec<u32> = table.iter().map(|(c, _)| c.count_ones()).collect();
        assert_eq!(sizes.iter().filter(|&&k| k == 2).count(), 6);
        for &(c, img) in table {
            assert_eq!(image_direct(s.scaled(), c), Some(img));
            // A 2-subset maps to its complement.
            if c.count_ones() == 2 {
                assert_eq!(img, 0b1111 ^ c);
            }
        }
    }

    #[test]
    fn gm4_compatible_graphs_are_the_regular_ones() {
        let s = gm4();
        let found = compatible_ac(&s, false).unwrap();
        let mut brute = Vec::new();
        for mask in 0u64..64 {
            let g = mask_to_graph(4, mask);
            assert_eq!(compatible_by_definition(&s, &g), found.masks.binary_search(&mask).is_ok());
            let d = g.degree(0);
            if (0..4).all(|u| g.degree(u) == d) {
                brute.push(mask);
            }
        }
        assert_eq!(found.masks, brute);
        assert_eq!(found.len(), 8);
        // Orbits under Sym(4) and complementation: empty/complete, matching/4-cycle.
        assert_eq!(compatible_ac(&s, true).unwrap().len(), 2);
    }

    #[test]
    fn search_agrees_with_brute_force_on_six_points() {
        let wqh = RatMatrix::from_scaled_rows(
            3,
            &[
                vec![2, -1, -1, 1, 1, 1],
                vec![-1, 2, -1, 1, 1, 1],
                vec![-1, -1, 2, 1, 1, 1],
                vec![1, 1, 1, 2, -1, -1],
                vec![1, 1, 1, -1, 2, -1],
                vec![1, 1, 1, -1, -1, 2],
            ],
        )
        .unwrap();
        let s = SwitchingScheme::new(wqh, Provenance::Raw).unwrap();
        let found = compatible_ac(&s, false).unwrap();
        let brute: Vec<u64> = (0u64..1 << 15).filter(|&m| compatible_by_definition(&s, &mask_to_graph(6, m))).collect();
        assert_eq!(found.masks, brute);
    }

    #[test]
    fn symmetry_group_of_gm4_is_everything() {
        assert_eq!(symmetry_group(gm4().scaled()).len(), 24);
    }

    #[test]
    fn relabelling_group_contains_the_symmetries() {
        let shift = RatMatrix::from_int_rows(&[vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![1, 0, 0, 0]])
            .unwrap()
            .to_scaled()
            .unwrap();
        // A permutation matrix is undone by any row relabelling, but only its
        // centraliser fixes it under simultaneous relabelling.
        assert_eq!(relabelling_group(&shift).len(), 24);
        assert_eq!(symmetry_group(&shift).len(), 4);
        let g = gm4();
        let sym = symmetry_group(g.scaled());
        let rel = relabelling_group(g.scaled());
        assert!(sym.iter().all(|p| rel.contains(p)));
    }
}
