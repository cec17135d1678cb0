use serde::Serialize;

use crate::designs::{Block, IncidenceStructure};
use crate::exact::{int, ratio, RatMatrix};
use crate::perm::Permutation;

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(2/c)J − I` on `c` points.
pub fn gm_block(c: usize) -> RatMatrix {
    RatMatrix::from_fn(c, c, |i, j| if i == j { ratio(2, c as i64) - int(1) } else { ratio(2, c as i64) })
}

/// `(1/c)[[−J, J], [J, −J]] + I` on `2c` points.
pub fn wqh_block(c: usize) -> RatMatrix {
    RatMatrix::from_fn(2 * c, 2 * c, |i, j| {
        let sign = if (i < c) == (j < c) { -1 } else { 1 };
        ratio(sign, c as i64) + if i == j { int(1) } else { int(0) }
    })
}

/// `½ · blockcirculant(J₂, O, …, O, 2I − J₂)` on `2m` points.
pub fn ah_matrix(m: usize) -> RatMatrix {
    let j2 = RatMatrix::from_scaled_rows(2, &[vec![1, 1], vec![1, 1]]).expect("2x2");
    let y = RatMatrix::from_scaled_rows(2, &[vec![1, -1], vec![-1, 1]]).expect("2x2");
    let mut blocks = vec![RatMatrix::zeros(2, 2); m];
    blocks[0] = j2;
    blocks[m - 1] = y;
    RatMatrix::block_circulant(&blocks).expect("square blocks")
}

/// `½[[−I, I, I, I], [I, −Z, I, Z], [I, Z, −Z, I], [I, I, Z, −Z]]` with
/// `Z = J₂ − I₂`.
pub fn cube_matrix() -> RatMatrix {
    let i = RatMatrix::identity(2);
    let z = RatMatrix::from_int_rows(&[vec![0, 1], vec![1, 0]]).expect("2x2");
    let neg = |m: &RatMatrix| m.scale(&int(-1));
    let grid = vec![
        vec![neg(&i), i.clone(), i.clone(), i.clone()],
        vec![i.clone(), neg(&z), i.clone(), z.clone()],
        vec![i.clone(), z.clone(), neg(&z), i.clone()],
        vec![i.clone(), i.clone(), z.clone(), neg(&z)],
    ];
    RatMatrix::from_blocks(&grid).expect("aligned blocks").scale(&ratio(1, 2))
}

fn subsets_meeting(points: std::ops::Range<usize>, sizes: &[usize]) -> Vec<u64> {
    let n = points.len();
    (0u64..1 << n)
        .filter(|m| sizes.contains(&(m.count_ones() as usize)))
        .map(|m| m << points.start)
        .collect()
}

/// Blocks meeting each part `C_i` in 0, `c_i/2` or `c_i` points, all with
/// multiplicity one, in increasing mask order.
pub fn gm_design(parts: &[usize]) -> IncidenceStructure {
    let mut masks = vec![0u64];
    let mut start = 0;
    for &c in parts {
        let local = subsets_meeting(start..start + c, &[0, c / 2, c]);
        masks = masks.iter().flat_map(|&m| local.iter().map(move |&l| m | l)).collect();
        start += c;
    }
    masks.sort_unstable();
    IncidenceStructure::new(start, masks.into_iter().map(|m| Block::new(m, 1)).collect()).expect("valid blocks")
}

/// The permutation of blocks that complements every half-meeting part:
/// the operation performed by GM switching.
pub fn gm_swap(d: &IncidenceStructure, parts: &[usize]) -> Permutation {
    let mut start = 0;
    let windows: Vec<(u64, u32)> = parts
        .iter()
        .map(|&c| {
            let w = ((1u64 << c) - 1) << start;
            start += c;
            (w, c as u32 / 2)
        })
        .collect();
    let image = |m: u64| {
        windows.iter().fold(m, |acc, &(w, half)| if (m & w).count_ones() == half { acc ^ w } else { acc })
    };
    block_map(d, image)
}

fn block_map(d: &IncidenceStructure, image: impl Fn(u64) -> u64) -> Permutation {
    let images = d
        .blocks()
        .iter()
        .map(|b| d.blocks().iter().position(|x| x.points == image(b.points)).expect("image is a block"))
        .collect();
    Permutation::from_images(images).expect("bijection")
}

fn ten_point_design(mult: impl Fn(bool, bool) -> u64) -> IncidenceStructure {
    let d = gm_design(&[6, 4]);
    let blocks = d
        .blocks()
        .iter()
        .map(|b| {
            let half_first = (b.points & 0b11_1111).count_ones() == 3;
            let half_second = (b.points >> 6).count_ones() == 2;
            Block::new(b.points, mult(half_first, half_second))
        })
        .collect();
    IncidenceStructure::new(10, blocks).expect("valid blocks")
}

/// The ten-point structure on parts of sizes 6 and 4 with multiplicities
/// that make pair coverage constant: 4 when a block meets both parts in
/// half, 5 when only the first, 11 when only the second, 1 otherwise.
/// Validates to `(r, λ) = (408, 204)`.
pub fn gm64_design() -> IncidenceStructure {
    ten_point_design(|a, b| match (a, b) {
        (true, true) => 4,
        (true, false) => 5,
        (false, true) => 11,
        (false, false) => 1,
    })
}

/// Multiplicity 4 on every block meeting the first part in half and 11 on
/// the rest. Pairs inside the first part are covered 216 times, all other
/// pairs 204 times, so this is not a design.
pub fn gm64_uniform_rule() -> IncidenceStructure {
    ten_point_design(|a, _| if a { 4 } else { 11 })
}

/// Blocks meeting `C¹ ∪ C²` (first `c` points, then `c` more) in exactly
/// `C¹`, exactly `C²`, or equally many points of each. The two halves get
/// multiplicity `mult_halves`.
pub fn wqh_design(c: usize, mult_halves: u64) -> IncidenceStructure {
    let first = (1u64 << c) - 1;
    let second = first << c;
    let mut masks: Vec<u64> =
        (0u64..1 << (2 * c)).filter(|m| (m & first).count_ones() == (m & second).count_ones()).collect();
    masks.push(first);
    masks.push(second);
    masks.sort_unstable();
    let blocks = masks
        .into_iter()
        .map(|m| Block::new(m, if m == first || m == second { mult_halves } else { 1 }))
        .collect();
    IncidenceStructure::new(2 * c, blocks).expect("valid blocks")
}

/// Exchanges the two halves and fixes every balanced block.
pub fn wqh_swap(d: &IncidenceStructure, c: usize) -> Permutation {
    let first = (1u64 << c) - 1;
    let second = first << c;
    block_map(d, |m| if m == first { second } else if m == second { first } else { m })
}

/// One closed form checked against a brute-force count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub brute_force: u64,
    pub closed_form: u64,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.brute_force == self.closed_form
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountingReport {
    pub c: usize,
    pub checks: Vec<IdentityCheck>,
}

impl CountingReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(IdentityCheck::holds)
    }
}

fn check(name: impl Into<String>, brute_force: u64, closed_form: u64) -> IdentityCheck {
    IdentityCheck { name: name.into(), brute_force, closed_form }
}

fn pair_count(d: &IncidenceStructure, p: usize, q: usize) -> u64 {
    d.blocks().iter().filter(|b| b.contains(p) && b.contains(q)).map(|b| b.mult).sum()
}

fn point_count(d: &IncidenceStructure, p: usize) -> u64 {
    d.blocks().iter().filter(|b| b.contains(p)).map(|b| b.mult).sum()
}

/// Block-counting identities behind GM and WQH switching on parts of size
/// `c`, each checked by enumerating the block families.
pub fn counting_identities(c: usize) -> CountingReport {
    assert!((2..=6).contains(&c), "c must lie in 2..=6");
    let cu = c as u64;
    let mut checks = Vec::new();

    let w = wqh_design(c, 1);
    let wb: u64 = w.blocks().iter().map(|b| b.mult).sum();
    checks.push(check("wqh blocks = 2 + C(2c,c)", wb, 2 + binom(2 * cu, cu)));
    checks.push(check(
        "wqh sum of squared binomials = C(2c,c)",
        (0..=cu).map(|j| binom(cu, j) * binom(cu, j)).sum(),
        binom(2 * cu, cu),
    ));
    checks.push(check("wqh r = (2 + C(2c,c))/2", point_count(&w, 0), (2 + binom(2 * cu, cu)) / 2));
    checks.push(check("wqh same-side pairs = C(2c-2,c) + 1", pair_count(&w, 0, 1), binom(2 * cu - 2, cu) + 1));
    checks.push(check(
        "wqh same-side lattice sum",
        1 + (2..=cu).map(|i| binom(cu - 2, i - 2) * binom(cu, i)).sum::<u64>(),
        binom(2 * cu - 2, cu) + 1,
    ));
    checks.push(check("wqh cross pairs = C(2c-2,c-1)", pair_count(&w, 0, c), binom(2 * cu - 2, cu - 1)));
    checks.push(check(
        "wqh cross lattice sum",
        (1..=cu).map(|i| binom(cu - 1, i - 1).pow(2)).sum(),
        binom(2 * cu - 2, cu - 1),
    ));
    let fix = binom(2 * cu - 2, cu - 1) - binom(2 * cu - 2, cu);
    let fixed = wqh_design(c, fix);
    let lambda = fixed.validate().map(|p| p.lambda).unwrap_or(0);
    checks.push(check("wqh lambda with half-block multiplicity", lambda, binom(2 * cu - 2, cu - 1)));

    if c % 2 == 0 {
        let g = gm_design(&[c]);
        checks.push(check("gm blocks = C(c,c/2) + 2", g.block_count() as u64, binom(cu, cu / 2) + 2));
        checks.push(check("gm r = (C(c,c/2) + 2)/2", point_count(&g, 0), (binom(cu, cu / 2) + 2) / 2));
        let lambda = g.validate().map(|p| p.lambda).unwrap_or(0);
        checks.push(check("gm lambda = C(c-2,c/2-2) + 1", lambda, if cu >= 4 { binom(cu - 2, cu / 2 - 2) } else { 0 } + 1));
    }
    if c == 4 {
        for t in 2..=3usize {
            let g = gm_design(&vec![4; t]);
            let lambda = g.validate().map(|p| p.lambda).unwrap_or(0);
            checks.push(check(format!("gm lambda over {t} parts of size 4 = 2^(3t-2)"), lambda, 1 << (3 * t - 2)));
        }
    }
    CountingReport { c, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{is_regular_orthogonal, level};
    use crate::switching::derive_r_perm;
    use num_bigint::BigInt;

    #[test]
    fn binomials() {
        assert_eq!(binom(4, 2), 6);
        assert_eq!(binom(10, 5), 252);
        assert_eq!(binom(3, 5), 0);
    }

    #[test]
    fn named_matrices_are_regular_orthogonal() {
        for m in [gm_block(4), gm_block(6), wqh_block(3), ah_matrix(3), ah_matrix(5), cube_matrix()] {
            assert!(is_regular_orthogonal(&m));
        }
        assert_eq!(level(&gm_block(6)), BigInt::from(3));
        assert_eq!(level(&wqh_block(3)), BigInt::from(3));
        assert_eq!(level(&cube_matrix()), BigInt::from(2));
    }

    #[test]
    fn gm_design_reproduces_gm_blocks() {
        for parts in [vec![4], vec![6], vec![4, 4]] {
            let d = gm_design(&parts);
            let s = derive_r_perm(&d, &gm_swap(&d, &parts)).unwrap();
            let expected = RatMatrix::direct_sum(&parts.iter().map(|&c| gm_block(c)).collect::<Vec<_>>());
            assert_eq!(s.matrix(), &expected);
        }
    }

    #[test]
    fn ten_point_design() {
        let d = gm64_design();
        let p = d.validate().unwrap();
        assert_eq!((p.r, p.lambda), (408, 204));
        // (C(6,3) + 2) · (C(4,2) + 2) blocks without multiplicity.
        assert_eq!(d.block_count(), 22 * 8);
        let s = derive_r_perm(&d, &gm_swap(&d, &[6, 4])).unwrap();
        assert_eq!(s.matrix(), &RatMatrix::direct_sum(&[gm_block(6), gm_block(4)]));
    }

    #[test]
    fn uniform_rule_on_ten_points_is_not_a_design() {
        let d = gm64_uniform_rule();
        let pair = |p: usize, q: usize| pair_count(&d, p, q);
        assert_eq!((pair(0, 1), pair(0, 6), pair(6, 7)), (216, 204, 204));
        assert_eq!(point_count(&d, 0), 408);
        assert!(d.validate().is_err());
    }

    #[test]
    fn wqh_design_with_fix_gives_wqh_matrix() {
        for c in 2..=4 {
            let fix = binom(2 * c as u64 - 2, c as u64 - 1) - binom(2 * c as u64 - 2, c as u64);
            let d = wqh_design(c, fix);
            let s = derive_r_perm(&d, &wqh_swap(&d, c)).unwrap();
            assert_eq!(s.matrix(), &wqh_block(c));
        }
    }

    #[test]
    fn identities_hold() {
        for c in 2..=6 {
            let r = counting_identities(c);
            assert!(r.all_hold(), "{r:?}");
        }
        let three = counting_identities(3);
        let get = |name: &str| three.checks.iter().find(|k| k.name.starts_with(name)).unwrap().closed_form;
        assert_eq!(get("wqh same-side pairs"), 5);
        assert_eq!(get("wqh cross pairs"), 6);
    }
}
