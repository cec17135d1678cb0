//! Classification of the switches obtainable from one design: the group of
//! block permutations preserving intersection sizes, the design's own
//! automorphisms acting on blocks, and one representative per double coset.

mod reduce;

pub use reduce::{reduce_scheme, Factor, ReduceOptions, ReduceOutcome};

use rayon::prelude::*;
use serde::Serialize;

use crate::designs::{map_mask, DesignError, IncidenceStructure};
use crate::perm::{PermSet, Permutation};
use crate::switching::{derive_r_perm, SchemeError, SwitchingScheme};

/// Largest group stored as an explicit element list.
pub const MAX_GROUP_ORDER: usize = 1_000_000;
/// Default cap on `|H|²` products spent expanding double cosets.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ClassifyError {
    #[error("group has more than {limit} elements (found at least {found})")]
    GroupTooLarge { found: usize, limit: usize },
    #[error("work budget of {0} products exceeded")]
    BudgetExceeded(u64),
    #[error("H is not contained in G")]
    NotSubgroup,
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// Which block relation a permutation in G has to preserve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockRelation {
    /// Every pairwise intersection size.
    #[default]
    Intersections,
    /// Only whether two blocks are disjoint (parallel).
    Disjointness,
}

/// All block permutations preserving sizes, multiplicities and the chosen
/// relation between pairs of blocks, in lexicographic order.
pub fn block_symmetry_group(d: &IncidenceStructure, relation: BlockRelation) -> Result<PermSet, ClassifyError> {
    let b = d.block_count();
    let rel = |i: usize, j: usize| {
        let x = d.intersection(i, j);
        match relation {
            BlockRelation::Intersections => x,
            BlockRelation::Disjointness => u32::from(x > 0),
        }
    };
    let table: Vec<Vec<u32>> = (0..b).map(|i| (0..b).map(|j| rel(i, j)).collect()).collect();
    let kind: Vec<(u32, u64)> = d.blocks().iter().map(|blk| (blk.size(), blk.mult)).collect();

    struct Search<'a> {
        table: &'a [Vec<u32>],
        kind: &'a [(u32, u64)],
        image: Vec<usize>,
        used: Vec<bool>,
        out: Vec<Permutation>,
    }
    impl Search<'_> {
        fn run(&mut self) -> Result<(), ClassifyError> {
            let i = self.image.len();
            let b = self.kind.len();
            if i == b {
                if self.out.len() >= MAX_GROUP_ORDER {
                    return Err(ClassifyError::GroupTooLarge { found: self.out.len() + 1, limit: MAX_GROUP_ORDER });
                }
                self.out.push(Permutation::from_images(self.image.clone()).expect("bijection"));
                return Ok(());
            }
            for x in 0..b {
                if self.used[x] || self.kind[x] != self.kind[i] || self.table[x][x] != self.table[i][i] {
                    continue;
                }
                if self.image.iter().enumerate().any(|(k, &y)| self.table[x][y] != self.table[i][k]) {
                    continue;
                }
                self.used[x] = true;
                self.image.push(x);
                self.run()?;
                self.image.pop();
                self.used[x] = false;
            }
            Ok(())
        }
    }

    let mut s = Search { table: &table, kind: &kind, image: Vec::with_capacity(b), used: vec![false; b], out: Vec::new() };
    s.run()?;
    Ok(PermSet::trusted(b, s.out))
}

/// Point permutations mapping the block multiset onto itself.
pub fn point_automorphisms(d: &IncidenceStructure) -> Vec<Permutation> {
    let v = d.v();
    let blocks: Vec<(u32, u64, u64)> = d.blocks().iter().map(|b| (b.size(), b.mult, b.points)).collect();

    // Blocks seen through a set of assigned points, as a sorted multiset.
    let profile = |mask: u64, imaged: &dyn Fn(u64) -> u64| {
        let mut p: Vec<(u32, u64, u64)> = blocks.iter().map(|&(s, m, pts)| (s, m, imaged(pts) & mask)).collect();
        p.sort_unstable();
        p
    };

    fn extend(
        v: usize,
        sigma: &mut Vec<usize>,
        used: &mut u64,
        out: &mut Vec<Permutation>,
        ok: &dyn Fn(&[usize]) -> bool,
    ) {
        if sigma.len() == v {
            out.push(Permutation::from_images(sigma.clone()).expect("bijection"));
            return;
        }
        for x in 0..v {
            if *used >> x & 1 == 1 {
                continue;
            }
            sigma.push(x);
            if ok(sigma) {
                *used |= 1 << x;
                extend(v, sigma, used, out, ok);
                *used &= !(1 << x);
            }
            sigma.pop();
        }
    }

    let ok = |sigma: &[usize]| {
        let k = sigma.len();
        let domain: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        let range: u64 = sigma.iter().fold(0, |acc, &y| acc | 1 << y);
        let image = |pts: u64| {
            let mut out = 0u64;
            for (p, &y) in sigma.iter().enumerate() {
                if pts >> p & 1 == 1 {
                    out |= 1 << y;
                }
            }
            out
        };
        profile(range, &|pts| image(pts & domain)) == profile(range, &|pts| pts)
    };

    let mut out = Vec::new();
    extend(v, &mut Vec::with_capacity(v), &mut 0, &mut out, &ok);
    out
}

/// Block permutation induced by a point automorphism `sigma`: block `i` goes
/// to the index of the block `sigma(B_i)`.
pub fn induced_block_permutation(d: &IncidenceStructure, sigma: &Permutation) -> Option<Permutation> {
    let b = d.block_count();
    let mut taken = vec![false; b];
    let mut images = Vec::with_capacity(b);
    for blk in d.blocks() {
        let target = map_mask(blk.points, sigma);
        let j = (0..b).find(|&j| !taken[j] && d.blocks()[j].points == target && d.blocks()[j].mult == blk.mult)?;
        taken[j] = true;
        images.push(j);
    }
    Permutation::from_images(images).ok()
}

/// The automorphism group of the design acting on its blocks.
pub fn design_automorphism_group(d: &IncidenceStructure) -> PermSet {
    let mut perms: Vec<Permutation> =
        point_automorphisms(d).iter().map(|s| induced_block_permutation(d, s).expect("automorphism")).collect();
    perms.sort_unstable();
    perms.dedup();
    PermSet::trusted(d.block_count(), perms)
}

/// Lexicographically least element of the double coset `H g H`.
pub fn double_coset_min(h: &PermSet, g: &Permutation) -> Permutation {
    h.elements()
        .par_iter()
        .map(|h1| {
            let left = h1.then(g);
            h.elements().iter().map(|h2| left.then(h2)).min().expect("H is non-empty")
        })
        .min()
        .expect("H is non-empty")
}

/// One representative per double coset `H g H` of `G`, each the least
/// element of its coset, in increasing order.
pub fn double_coset_reps(h: &PermSet, g: &PermSet, budget: u64) -> Result<Vec<Permutation>, ClassifyError> {
    if !h.is_subgroup_of(g) {
        return Err(ClassifyError::NotSubgroup);
    }
    let per_coset = (h.order() as u64).saturating_mul(h.order() as u64);
    let mut marked = vec![false; g.order()];
    let mut remaining = g.order();
    let mut reps = Vec::new();
    let mut spent = 0u64;
    for (idx, x) in g.elements().iter().enumerate() {
        if remaining == 0 {
            break;
        }
        if marked[idx] {
            continue;
        }
        spent = spent.saturating_add(per_coset);
        if spent > budget {
            return Err(ClassifyError::BudgetExceeded(budget));
        }
        reps.push(x.clone());
        let members: Vec<usize> = h
            .elements()
            .par_iter()
            .flat_map_iter(|h1| {
                let left = h1.then(x);
                h.elements().iter().map(move |h2| g.position(&left.then(h2)).expect("H g H lies in G"))
            })
            .collect();
        for m in members {
            if !marked[m] {
                marked[m] = true;
                remaining -= 1;
            }
        }
    }
    Ok(reps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub relation: BlockRelation,
    pub budget: u64,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { relation: BlockRelation::Intersections, budget: DEFAULT_BUDGET }
    }
}

/// Result of classifying the switches of one design.
#[derive(Debug, Clone)]
pub struct Classification {
    pub g_order: usize,
    pub h_order: usize,
    /// Double-coset representatives whose permutation preserves every
    /// intersection size, identity first.
    pub representatives: Vec<Permutation>,
    /// Representatives of cosets dropped because they only preserve disjointness.
    pub dropped: usize,
    /// The scheme of every non-identity representative, in the same order.
    pub schemes: Vec<SwitchingScheme>,
}

impl Classification {
    pub fn coset_count(&self) -> usize {
        self.representatives.len()
    }

    /// Index of the representative whose double coset contains `pi`.
    pub fn locate(&self, h: &PermSet, pi: &Permutation) -> Option<usize> {
        let m = double_coset_min(h, pi);
        self.representatives.iter().position(|r| *r == m)
    }
}

fn preserves_intersections(d: &IncidenceStructure, pi: &Permutation) -> bool {
    let b = d.block_count();
    (0..b).all(|i| (i..b).all(|j| d.intersection(i, j) == d.intersection(pi.apply(i), pi.apply(j))))
}

/// Classifies the switches of `d` and derives one scheme per non-trivial coset.
pub fn schemes_from_design(d: &IncidenceStructure, opts: ClassifyOptions) -> Result<Classification, ClassifyError> {
    d.validate()?;
    let g = block_symmetry_group(d, opts.relation)?;
    let h = design_automorphism_group(d);
    let reps = double_coset_reps(&h, &g, opts.budget)?;
    let total = reps.len();
    // H preserves intersections, so a coset lies in the smaller group
    // exactly when its representative does.
    let reps: Vec<Permutation> = reps.into_iter().filter(|p| preserves_intersections(d, p)).collect();
    let dropped = total - reps.len();
    let schemes = reps
        .par_iter()
        .filter(|p| !p.is_identity())
        .map(|p| derive_r_perm(d, p))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Classification { g_order: g.order(), h_order: h.order(), representatives: reps, dropped, schemes })
}

/// Serializable summary of a classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub g_order: usize,
    pub h_order: usize,
    pub coset_count: usize,
    pub dropped: usize,
    /// 1-based cycle notation.
    pub representatives: Vec<String>,
}

impl From<&Classification> for ClassificationReport {
    fn from(c: &Classification) -> Self {
        Self {
            g_order: c.g_order,
            h_order: c.h_order,
            coset_count: c.coset_count(),
            dropped: c.dropped,
            representatives: c.representatives.iter().map(Permutation::to_cycle_string).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::data;
    use std::collections::BTreeSet;

    fn design(rows: &[&str]) -> IncidenceStructure {
        IncidenceStructure::from_incidence_rows(rows).unwrap()
    }

    fn naive_double_cosets(h: &PermSet, g: &PermSet) -> Vec<BTreeSet<Permutation>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for x in g.elements() {
            if seen.contains(x) {
                continue;
            }
            let coset: BTreeSet<Permutation> = h
                .elements()
                .iter()
                .flat_map(|a| h.elements().iter().map(move |b| a.then(x).then(b)))
                .collect();
            seen.extend(coset.iter().cloned());
            out.push(coset);
        }
        out
    }

    #[test]
    fn affine_plane_of_order_two() {
        let d = design(&data::AG22);
        let g = block_symmetry_group(&d, BlockRelation::Intersections).unwrap();
        let h = design_automorphism_group(&d);
        assert_eq!((g.order(), h.order()), (48, 24));
        let reps = double_coset_reps(&h, &g, DEFAULT_BUDGET).unwrap();
        assert_eq!(reps.len(), 2);
        let naive = naive_double_cosets(&h, &g);
        assert_eq!(naive.len(), 2);
        assert_eq!(naive.iter().map(BTreeSet::len).sum::<usize>(), g.order());
        for (r, c) in reps.iter().zip(&naive) {
            assert_eq!(r, c.iter().next().unwrap());
        }
    }

    #[test]
    fn fano_groups_and_cosets() {
        let d = design(&data::FANO);
        let g = block_symmetry_group(&d, BlockRelation::Intersections).unwrap();
        let h = design_automorphism_group(&d);
        assert_eq!((g.order(), h.order()), (5040, 168));
        assert!(h.is_subgroup_of(&g));
        for gen in ["(1 3)(5 7)", "(1 4 2)(3 5 6)"] {
            assert!(h.contains(&Permutation::parse_cycles(gen, 7).unwrap()));
        }
        let reps = double_coset_reps(&h, &g, DEFAULT_BUDGET).unwrap();
        let naive = naive_double_cosets(&h, &g);
        assert_eq!(reps.len(), 4);
        assert_eq!(naive.len(), 4);
        assert_eq!(naive.iter().map(BTreeSet::len).sum::<usize>(), 5040);
        let mins: Vec<Permutation> =
            data::FANO_PERMS.iter().map(|s| double_coset_min(&h, &Permutation::parse_cycles(s, 7).unwrap())).collect();
        let distinct: BTreeSet<_> = mins.iter().collect();
        assert_eq!(distinct.len(), 4);
        assert!(mins.iter().all(|m| reps.contains(m)));
    }

    #[test]
    fn all_triples_of_six_points() {
        let mut blocks = Vec::new();
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    blocks.push(vec![a, b, c]);
                }
            }
        }
        let d = IncidenceStructure::from_point_lists(6, &blocks).unwrap();
        let h = design_automorphism_group(&d);
        assert_eq!(h.order(), 720);
        let c = schemes_from_design(&d, ClassifyOptions::default()).unwrap();
        assert_eq!(c.coset_count(), 2);
        let reversal = Permutation::from_images((0..20).rev().collect()).unwrap();
        assert_eq!(c.locate(&h, &reversal), Some(1));
    }

    #[test]
    fn disjointness_mode_keeps_only_intersection_preserving_cosets() {
        let d = design(&data::FANO);
        let c = schemes_from_design(&d, ClassifyOptions { relation: BlockRelation::Disjointness, ..Default::default() })
            .unwrap();
        // Lines of a projective plane always meet, so every permutation
        // preserves disjointness and intersections alike.
        assert_eq!((c.coset_count(), c.dropped), (4, 0));
        assert_eq!(c.schemes.len(), 3);
    }
}
