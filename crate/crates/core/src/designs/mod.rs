//! Incidence structures with block multiplicities, `(r, λ)`-design
//! validation, closure operations and cyclic projective planes.

mod cyclic;

pub use cyclic::{cycle_adjacency, cyclic_plane, line_orbit, oval_companion, singer_identity, DifferenceSet};

use serde::{Deserialize, Serialize};

use crate::exact::{int, RatMatrix};
use crate::perm::Permutation;

pub const MAX_POINTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DesignError {
    #[error("at most {MAX_POINTS} points are supported, got {0}")]
    TooManyPoints(usize),
    #[error("a design needs at least two points")]
    TooFewPoints,
    #[error("block {block} contains point {point} outside 0..{v}")]
    PointOutOfRange { block: usize, point: usize, v: usize },
    #[error("block {0} lists a point twice")]
    DuplicatePoint(usize),
    #[error("block {0} has multiplicity zero")]
    ZeroMultiplicity(usize),
    #[error("not an (r, lambda)-design: {0}")]
    NotADesign(Witness),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("bad incidence matrix: {0}")]
    BadIncidence(String),
    #[error("difference set is not planar: {0}")]
    NotPlanar(String),
    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },
}

/// First point or pair whose count differs from the one at point 0 / pair {0, 1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Witness {
    Point { point: usize, count: u64, expected: u64 },
    Pair { pair: (usize, usize), count: u64, expected: u64 },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Point { point, count, expected } => {
                write!(f, "point {point} lies in {count} blocks, expected {expected}")
            }
            Witness::Pair { pair, count, expected } => {
                write!(f, "pair {{{}, {}}} lies in {count} blocks, expected {expected}", pair.0, pair.1)
            }
        }
    }
}

/// A block as a point bitmask with a positive multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub points: u64,
    pub mult: u64,
}

impl Block {
    pub fn new(points: u64, mult: u64) -> Self {
        Self { points, mult }
    }

    pub fn size(&self) -> u32 {
        self.points.count_ones()
    }

    pub fn contains(&self, p: usize) -> bool {
        self.points >> p & 1 == 1
    }

    pub fn point_list(&self) -> Vec<usize> {
        (0..64).filter(|&p| self.contains(p)).collect()
    }
}

/// `(r, λ)` with multiplicities counted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParams {
    pub r: u64,
    pub lambda: u64,
}

/// Points `0..v` and an ordered list of blocks. Block order is significant:
/// two structures are paired column by column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceStructure {
    v: usize,
    blocks: Vec<Block>,
}

pub fn full_mask(v: usize) -> u64 {
    if v == 64 {
        u64::MAX
    } else {
        (1u64 << v) - 1
    }
}

impl IncidenceStructure {
    pub fn new(v: usize, blocks: Vec<Block>) -> Result<Self, DesignError> {
        if v > MAX_POINTS {
            return Err(DesignError::TooManyPoints(v));
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.mult == 0 {
                return Err(DesignError::ZeroMultiplicity(i));
            }
            if b.points & !full_mask(v) != 0 {
                let point = 63 - b.points.leading_zeros() as usize;
                return Err(DesignError::PointOutOfRange { block: i, point, v });
            }
        }
        Ok(Self { v, blocks })
    }

    /// Simple structure from point lists.
    pub fn from_point_lists(v: usize, blocks: &[Vec<usize>]) -> Result<Self, DesignError> {
        let mut out = Vec::with_capacity(blocks.len());
        for (i, pts) in blocks.iter().enumerate() {
            out.push(Block::new(mask_of(i, v, pts)?, 1));
        }
        Self::new(v, out)
    }

    /// Parses an incidence matrix given as one string per point (row), one
    /// character per block (column). Nonzero digits give the multiplicity of
    /// that column; all nonzero entries of a column must agree. Whitespace is
    /// ignored.
    pub fn from_incidence_rows(rows: &[&str]) -> Result<Self, DesignError> {
        let rows: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| {
                r.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_digit(10).map(u64::from).ok_or_else(|| DesignError::BadIncidence(r.to_string())))
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let v = rows.len();
        let b = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != b) {
            return Err(DesignError::BadIncidence("ragged rows".into()));
        }
        let mut blocks = Vec::with_capacity(b);
        for j in 0..b {
            let mut points = 0u64;
            let mut mult = 0u64;
            for (p, row) in rows.iter().enumerate() {
                let x = row[j];
                if x == 0 {
                    continue;
                }
                if mult != 0 && mult != x {
                    return Err(DesignError::BadIncidence(format!("column {} mixes multiplicities", j + 1)));
                }
                mult = x;
                points |= 1 << p;
            }
            blocks.push(Block::new(points, mult.max(1)));
        }
        Self::new(v, blocks)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        self.blocks.iter().map(|b| b.mult).collect()
    }

    pub fn intersection(&self, i: usize, j: usize) -> u32 {
        (self.blocks[i].points & self.blocks[j].points).count_ones()
    }

    /// 0/1 incidence matrix, points by blocks.
    pub fn incidence_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.v, self.blocks.len(), |p, j| int(i64::from(self.blocks[j].contains(p))))
    }

    /// `N D Nᵀ` with `D` the diagonal of multiplicities.
    pub fn weighted_gram(&self) -> RatMatrix {
        RatMatrix::from_fn(self.v, self.v, |p, q| {
            let s: u64 = self.blocks.iter().filter(|b| b.contains(p) && b.contains(q)).map(|b| b.mult).sum();
            int(s as i64)
        })
    }

    /// Block `i` of the result is block `pi(i)` of `self`.
    pub fn permute_blocks(&self, pi: &Permutation) -> Self {
        assert_eq!(pi.degree(), self.blocks.len());
        Self { v: self.v, blocks: (0..self.blocks.len()).map(|i| self.blocks[pi.apply(i)]).collect() }
    }

    /// Point `p` of `self` becomes point `sigma(p)`.
    pub fn relabel_points(&self, sigma: &Permutation) -> Self {
        assert_eq!(sigma.degree(), self.v);
        let blocks = self
            .blocks
            .iter()
            .map(|b| Block::new(map_mask(b.points, sigma), b.mult))
            .collect();
        Self { v: self.v, blocks }
    }

    /// Replication number and pair coverage, both counted with multiplicity.
    pub fn validate(&self) -> Result<DesignParams, DesignError> {
        let v = self.v;
        if v < 2 {
            return Err(DesignError::TooFewPoints);
        }
        let mut pair = vec![0u64; v * v];
        for b in &self.blocks {
            let pts = b.point_list();
            for (a, &p) in pts.iter().enumerate() {
                for &q in &pts[a..] {
                    pair[p * v + q] += b.mult;
                }
            }
        }
        let r = pair[0];
        let lambda = pair[1];
        for p in 0..v {
            if pair[p * v + p] != r {
                return Err(DesignError::NotADesign(Witness::Point { point: p, count: pair[p * v + p], expected: r }));
            }
            for q in p + 1..v {
                if pair[p * v + q] != lambda {
                    let w = Witness::Pair { pair: (p, q), count: pair[p * v + q], expected: lambda };
                    return Err(DesignError::NotADesign(w));
                }
            }
        }
        // Block sizes through each point: sum of m|B| over B ∋ p equals r + (v-1)λ.
        let total = r + (v as u64 - 1) * lambda;
        for p in 0..v {
            let s: u64 = self.blocks.iter().filter(|b| b.contains(p)).map(|b| b.mult * u64::from(b.size())).sum();
            if s != total {
                return Err(DesignError::NotADesign(Witness::Point { point: p, count: s, expected: total }));
            }
        }
        Ok(DesignParams { r, lambda })
    }

    /// Appends the complement of every block (in block order, same
    /// multiplicity) and/or the empty and full blocks.
    pub fn closure(&self, add_empty_full: bool, add_complements: bool) -> Self {
        let mut blocks = self.blocks.clone();
        let full = full_mask(self.v);
        if add_complements {
            blocks.extend(self.blocks.iter().map(|b| Block::new(full & !b.points, b.mult)));
        }
        if add_empty_full {
            blocks.push(Block::new(0, 1));
            blocks.push(Block::new(full, 1));
        }
        Self { v: self.v, blocks }
    }

    pub fn to_json(&self) -> DesignJson {
        DesignJson {
            v: self.v,
            blocks: self.blocks.iter().map(|b| BlockJson { points: b.point_list(), mult: b.mult }).collect(),
        }
    }

    pub fn from_json(j: &DesignJson) -> Result<Self, DesignError> {
        let mut blocks = Vec::with_capacity(j.blocks.len());
        for (i, b) in j.blocks.iter().enumerate() {
            blocks.push(Block::new(mask_of(i, j.v, &b.points)?, b.mult));
        }
        Self::new(j.v, blocks)
    }
}

fn mask_of(block: usize, v: usize, points: &[usize]) -> Result<u64, DesignError> {
    if v > MAX_POINTS {
        return Err(DesignError::TooManyPoints(v));
    }
    let mut mask = 0u64;
    for &p in points {
        if p >= v {
            return Err(DesignError::PointOutOfRange { block, point: p, v });
        }
        if mask >> p & 1 == 1 {
            return Err(DesignError::DuplicatePoint(block));
        }
        mask |= 1 << p;
    }
    Ok(mask)
}

/// Image of a point mask under a point permutation.
pub fn map_mask(mask: u64, sigma: &Permutation) -> u64 {
    let mut out = 0u64;
    let mut m = mask;
    while m != 0 {
        let p = m.trailing_zeros() as usize;
        m &= m - 1;
        out |= 1 << sigma.apply(p);
    }
    out
}

/// True iff `|B1_i ∩ B1_j| = |B2_i ∩ B2_j|` for all block indices. The
/// structures must share `v`, block count and multiplicity vector.
pub fn gram_profile(d1: &IncidenceStructure, d2: &IncidenceStructure) -> Result<bool, DesignError> {
    if d1.v != d2.v || d1.blocks.len() != d2.blocks.len() {
        return Err(DesignError::ShapeMismatch(format!(
            "{} points / {} blocks vs {} points / {} blocks",
            d1.v,
            d1.blocks.len(),
            d2.v,
            d2.blocks.len()
        )));
    }
    if d1.multiplicities() != d2.multiplicities() {
        return Err(DesignError::ShapeMismatch("multiplicity vectors differ".into()));
    }
    Ok(first_gram_mismatch(d1, d2).is_none())
}

/// First index pair `(i, j)`, `i <= j`, whose intersection sizes differ.
pub fn first_gram_mismatch(d1: &IncidenceStructure, d2: &IncidenceStructure) -> Option<(usize, usize)> {
    let b = d1.blocks.len();
    (0..b).flat_map(|i| (i..b).map(move |j| (i, j))).find(|&(i, j)| d1.intersection(i, j) != d2.intersection(i, j))
}

/// JSON form: `{"v": 7, "blocks": [{"points": [0, 1, 2], "mult": 1}, ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignJson {
    pub v: usize,
    pub blocks: Vec<BlockJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub points: Vec<usize>,
    #[serde(default = "one")]
    pub mult: u64,
}

fn one() -> u64 {
    1
}

#[cfg(test)]
mod tests {
    use super::*;

    const FANO: [&str; 7] = ["1110000", "1001100", "1000011", "0101010", "0100101", "0011001", "0010110"];

    #[test]
    fn fano_parameters_and_gram_identity() {
        let d = IncidenceStructure::from_incidence_rows(&FANO).unwrap();
        let p = d.validate().unwrap();
        assert_eq!(p, DesignParams { r: 3, lambda: 1 });
        let expected = &RatMatrix::all_ones(7).scale(&int(1)) + &RatMatrix::identity(7).scale(&int(2));
        assert_eq!(d.weighted_gram(), expected);
    }

    #[test]
    fn rejects_non_design() {
        let d = IncidenceStructure::from_point_lists(3, &[vec![0, 1], vec![0, 2]]).unwrap();
        assert!(matches!(d.validate(), Err(DesignError::NotADesign(Witness::Point { point: 1, .. }))));
        let d = IncidenceStructure::from_point_lists(3, &[vec![0, 1], vec![2]]).unwrap();
        assert!(matches!(d.validate(), Err(DesignError::NotADesign(_))));
        assert!(IncidenceStructure::from_point_lists(3, &[vec![0, 0]]).is_err());
    }

    #[test]
    fn closure_recount() {
        let d = IncidenceStructure::from_incidence_rows(&FANO).unwrap();
        let c = d.closure(true, false);
        assert_eq!(c.block_count(), 9);
        assert_eq!(c.validate().unwrap(), DesignParams { r: 4, lambda: 2 });
        assert_eq!(d.closure(false, false), d);
        let ag22 = IncidenceStructure::from_incidence_rows(&["111000", "100110", "010101", "001011"]).unwrap();
        let c = ag22.closure(false, true);
        assert_eq!(c.block_count(), 12);
        assert_eq!(c.validate().unwrap(), DesignParams { r: 6, lambda: 2 });
    }

    #[test]
    fn gram_profile_cases() {
        let d = IncidenceStructure::from_incidence_rows(&FANO).unwrap();
        assert!(gram_profile(&d, &d).unwrap());
        let pi = Permutation::parse_cycles("(6 7)", 7).unwrap();
        assert!(gram_profile(&d, &d.permute_blocks(&pi)).unwrap());
        let mut blocks = d.blocks().to_vec();
        blocks[0] = Block::new(0b000_1011, 1);
        let broken = IncidenceStructure::new(7, blocks).unwrap();
        assert!(!gram_profile(&d, &broken).unwrap());
    }

    #[test]
    fn multiplicity_columns() {
        let d = IncidenceStructure::from_incidence_rows(&["120", "102", "022"]).unwrap();
        assert_eq!(d.multiplicities(), vec![1, 2, 2]);
        assert!(IncidenceStructure::from_incidence_rows(&["12", "21"]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let d = IncidenceStructure::from_incidence_rows(&FANO).unwrap();
        let text = serde_json::to_string(&d.to_json()).unwrap();
        let back: DesignJson = serde_json::from_str(&text).unwrap();
        assert_eq!(IncidenceStructure::from_json(&back).unwrap(), d);
        let dup: DesignJson = serde_json::from_str(r#"{"v":3,"blocks":[{"points":[1,1]}]}"#).unwrap();
        assert!(matches!(IncidenceStructure::from_json(&dup), Err(DesignError::DuplicatePoint(0))));
    }
}
