use super::{Block, DesignError, IncidenceStructure};
use crate::exact::{int, RatMatrix};

/// A set of residues modulo `modulus` in which every nonzero residue is a
/// difference of two elements exactly `lambda` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSet {
    modulus: usize,
    residues: Vec<usize>,
    lambda: usize,
}

impl DifferenceSet {
    pub fn new(modulus: usize, residues: &[usize]) -> Result<Self, DesignError> {
        if modulus < 2 || modulus > super::MAX_POINTS {
            return Err(DesignError::TooManyPoints(modulus));
        }
        let mut res: Vec<usize> = residues.iter().map(|r| r % modulus).collect();
        res.sort_unstable();
        res.dedup();
        let mut counts = vec![0usize; modulus];
        for &a in &res {
            for &b in &res {
                if a != b {
                    counts[(a + modulus - b) % modulus] += 1;
                }
            }
        }
        let lambda = counts[1];
        if let Some(d) = (1..modulus).find(|&d| counts[d] != lambda) {
            return Err(DesignError::NotPlanar(format!(
                "difference {d} occurs {} times, difference 1 occurs {lambda} times",
                counts[d]
            )));
        }
        Ok(Self { modulus, residues: res, lambda })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }
}

fn shift(mask: u64, by: usize, v: usize) -> u64 {
    let by = by % v;
    if by == 0 {
        return mask;
    }
    ((mask << by) | (mask >> (v - by))) & super::full_mask(v)
}

/// Cyclic projective plane: block `i` is the difference set shifted by `i`.
pub fn cyclic_plane(ds: &DifferenceSet) -> Result<IncidenceStructure, DesignError> {
    if ds.lambda != 1 {
        return Err(DesignError::NotPlanar(format!("lambda is {}", ds.lambda)));
    }
    let v = ds.modulus;
    let base: u64 = ds.residues.iter().fold(0, |m, &r| m | 1 << r);
    let blocks = (0..v).map(|i| Block::new(shift(base, i, v), 1)).collect();
    let plane = IncidenceStructure::new(v, blocks)?;
    let params = plane.validate()?;
    if params.lambda != 1 || params.r as usize != ds.residues.len() {
        return Err(DesignError::NotPlanar(format!("validated to {params:?}")));
    }
    Ok(plane)
}

fn check_cyclic(plane: &IncidenceStructure, line_index: usize) -> Result<(), DesignError> {
    let v = plane.v();
    if line_index >= plane.block_count() {
        return Err(DesignError::IndexOutOfRange { index: line_index, len: plane.block_count() });
    }
    let b0 = plane.blocks()[0].points;
    if plane.block_count() != v || (0..v).any(|i| plane.blocks()[i].points != shift(b0, i, v)) {
        return Err(DesignError::NotPlanar("blocks are not the cyclic shifts of block 0".into()));
    }
    Ok(())
}

/// The orbit `L_i = π^i(L)` of line `line_index` under the point shift `π`.
pub fn line_orbit(plane: &IncidenceStructure, line_index: usize) -> Result<IncidenceStructure, DesignError> {
    check_cyclic(plane, line_index)?;
    let v = plane.v();
    let l = plane.blocks()[line_index].points;
    IncidenceStructure::new(v, (0..v).map(|i| Block::new(shift(l, i, v), 1)).collect())
}

/// The oval `Ω = {p_i : p_{-i} ∈ L}` and its shifts `Ω_i = π^i(Ω)`, paired
/// index by index with [`line_orbit`]. Checks that no three points of `Ω`
/// are collinear and that the pairing preserves intersection sizes.
pub fn oval_companion(plane: &IncidenceStructure, line_index: usize) -> Result<IncidenceStructure, DesignError> {
    check_cyclic(plane, line_index)?;
    let v = plane.v();
    let l = plane.blocks()[line_index].points;
    let omega = (0..v).filter(|&p| l >> p & 1 == 1).fold(0u64, |m, p| m | 1 << ((v - p) % v));
    if let Some(i) = plane.blocks().iter().position(|b| (b.points & omega).count_ones() > 2) {
        return Err(DesignError::NotPlanar(format!("line {i} meets the oval in three or more points")));
    }
    let companion = IncidenceStructure::new(v, (0..v).map(|i| Block::new(shift(omega, i, v), 1)).collect())?;
    let lines = line_orbit(plane, line_index)?;
    if let Some((i, j)) = super::first_gram_mismatch(&lines, &companion) {
        return Err(DesignError::NotPlanar(format!("blocks {i} and {j} change their intersection size")));
    }
    Ok(companion)
}

/// Checks `NᵀAN = qA + 2J` and `NANᵀ = qA + 2J` for the cycle `0-1-...-(v-1)-0`.
pub fn singer_identity(plane: &IncidenceStructure) -> bool {
    let v = plane.v();
    if v < 3 {
        return false;
    }
    let q = plane.blocks()[0].size() as i64 - 1;
    let a = cycle_adjacency(v);
    let n = plane.incidence_matrix();
    let rhs = &a.scale(&int(q)) + &RatMatrix::all_ones(v).scale(&int(2));
    let lhs1 = &(&n.transpose() * &a) * &n;
    let lhs2 = &(&n * &a) * &n.transpose();
    lhs1 == rhs && lhs2 == rhs
}

/// Adjacency matrix of the cycle `0-1-...-(v-1)-0`.
pub fn cycle_adjacency(v: usize) -> RatMatrix {
    let mut first = vec![0i64; v];
    first[1] = 1;
    first[v - 1] = 1;
    RatMatrix::circulant(1, &first)
}
