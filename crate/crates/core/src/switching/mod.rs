//! Switching schemes: a regular orthogonal matrix `R` together with the
//! table of neighbourhoods it maps to neighbourhoods. Schemes are derived
//! from pairs of designs with equal intersection profiles, applied to
//! graphs, and tested for realizability by a design.

mod compat;
mod realize;
mod site;

pub use compat::{canonical_form, compatible_ac, edge_index, graph_to_mask, mask_to_graph, relabelling_group, symmetry_group, AcSet};
pub use realize::{design_realizable, FarkasCertificate, Realizability};
pub use site::{apply_switch, cospectral, r_cospectral, verify_site, OutsideCheck, SiteMode, SiteReport, SwitchSite};

use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::designs::{first_gram_mismatch, DesignError, DesignJson, DesignParams, IncidenceStructure};
use crate::exact::{int, is_regular_orthogonal, level, ratio, RatMatrix, ScaledMatrix};
use crate::graph::GraphError;
use crate::perm::Permutation;

/// Largest switching set for which all `2^v` neighbourhoods are enumerated.
pub const MAX_TABLE_POINTS: usize = 24;
/// Largest switching set for the `A_C` search.
pub const MAX_AC_POINTS: usize = 10;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SchemeError {
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("designs have different parameters: {0:?} vs {1:?}")]
    ParamMismatch(DesignParams, DesignParams),
    #[error("blocks {0} and {1} have different intersection sizes in the two designs")]
    GramMismatch(usize, usize),
    #[error("r equals lambda ({0}), so R is undefined")]
    RLambdaDegenerate(u64),
    #[error("permutation moves blocks {0} and {1} to blocks with a different intersection size")]
    IntersectionNotPreserved(usize, usize),
    #[error("permutation maps block {0} to a block of different multiplicity")]
    MultiplicityNotPreserved(usize),
    #[error("permutation has degree {got}, the design has {expected} blocks")]
    DegreeMismatch { got: usize, expected: usize },
    #[error("matrix is not regular orthogonal")]
    NotRegularOrthogonal,
    #[error("R^T maps block {0} of the first design to something other than block {0} of the second")]
    BlockImageMismatch(usize),
    #[error("switching set has {v} points, limit is {limit}")]
    SizeTooLarge { v: usize, limit: usize },
    #[error("entries of the scaled matrix overflow machine integers")]
    Overflow,
    #[error("the search produced more than {0} matrices")]
    TooManyResults(usize),
    #[error("site does not satisfy the switching conditions: {0}")]
    SiteInvalid(String),
    #[error("bad scheme file: {0}")]
    BadFile(String),
}

/// Where a scheme came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    TwoDesigns { first: DesignJson, second: DesignJson },
    /// `permutation` is in 1-based cycle notation on block indices.
    PermutedDesign { design: DesignJson, permutation: String },
    Named { id: String },
    Raw,
}

/// A validated regular orthogonal matrix with its provenance and the lazily
/// built table of compatible neighbourhoods.
#[derive(Debug)]
pub struct SwitchingScheme {
    r: RatMatrix,
    scaled: ScaledMatrix,
    provenance: Provenance,
    table: OnceLock<Vec<(u64, u64)>>,
    raw_ac: OnceLock<Result<AcSet, SchemeError>>,
}

impl Clone for SwitchingScheme {
    fn clone(&self) -> Self {
        Self {
            r: self.r.clone(),
            scaled: self.scaled.clone(),
            provenance: self.provenance.clone(),
            table: self.table.clone(),
            raw_ac: self.raw_ac.clone(),
        }
    }
}

impl SwitchingScheme {
    pub fn new(r: RatMatrix, provenance: Provenance) -> Result<Self, SchemeError> {
        if !is_regular_orthogonal(&r) {
            return Err(SchemeError::NotRegularOrthogonal);
        }
        if r.rows() > 64 {
            return Err(SchemeError::SizeTooLarge { v: r.rows(), limit: 64 });
        }
        let scaled = r.to_scaled().ok_or(SchemeError::Overflow)?;
        Ok(Self { r, scaled, provenance, table: OnceLock::new(), raw_ac: OnceLock::new() })
    }

    pub fn v(&self) -> usize {
        self.r.rows()
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.r
    }

    /// `ℓR` as machine integers with `ℓ` the level.
    pub fn scaled(&self) -> &ScaledMatrix {
        &self.scaled
    }

    pub fn level(&self) -> BigInt {
        level(&self.r)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    /// Pairs `(χ, Rᵀχ)` over all 0/1 vectors `χ` whose image is again 0/1,
    /// sorted by `χ` (bit `p` is point `p`). Always contains the empty and
    /// full sets and is closed under complementation.
    pub fn block_table(&self) -> Result<&[(u64, u64)], SchemeError> {
        if self.v() > MAX_TABLE_POINTS {
            return Err(SchemeError::SizeTooLarge { v: self.v(), limit: MAX_TABLE_POINTS });
        }
        Ok(self.table.get_or_init(|| compat::compatible_vectors(&self.scaled)))
    }

    /// Image of a neighbourhood under `Rᵀ`, if it is again a 0/1 vector.
    pub fn image_of(&self, chi: u64) -> Option<u64> {
        if let Ok(table) = self.block_table() {
            return table.binary_search_by_key(&chi, |e| e.0).ok().map(|i| table[i].1);
        }
        compat::image_direct(&self.scaled, chi)
    }

    /// All compatible `A_C` as edge masks (see [`edge_index`]), computed once.
    pub fn raw_compatible_ac(&self) -> Result<&AcSet, SchemeError> {
        self.raw_ac.get_or_init(|| compat::search_ac(&self.scaled)).as_ref().map_err(Clone::clone)
    }

    pub fn to_json(&self) -> SchemeJson {
        let v = self.v();
        let r = (0..v * v)
            .map(|k| {
                let x = self.r.get(k / v, k % v);
                [x.numer().clone(), x.denom().clone()]
            })
            .map(|[n, d]| [n.to_string().parse().expect("fits"), d.to_string().parse().expect("fits")])
            .collect();
        SchemeJson { v, r, level: self.level().to_string().parse().expect("fits"), provenance: self.provenance.clone() }
    }

    pub fn from_json(j: &SchemeJson) -> Result<Self, SchemeError> {
        if j.r.len() != j.v * j.v {
            return Err(SchemeError::BadFile(format!("expected {} entries, got {}", j.v * j.v, j.r.len())));
        }
        if j.r.iter().any(|e| e[1] == 0) {
            return Err(SchemeError::BadFile("zero denominator".into()));
        }
        let m = RatMatrix::from_fn(j.v, j.v, |i, k| {
            let [n, d] = j.r[i * j.v + k];
            ratio(n, d)
        });
        Self::new(m, j.provenance.clone())
    }
}

/// Scheme file: `{"v": 4, "R": [[-1, 2], [1, 2], ...], "level": 2, "provenance": {"kind": "raw"}}`.
/// `R` is row-major with every entry a reduced `[numerator, denominator]` pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeJson {
    pub v: usize,
    #[serde(rename = "R")]
    pub r: Vec<[i64; 2]>,
    #[serde(default)]
    pub level: i64,
    pub provenance: Provenance,
}

/// `R = (N₁ D N₂ᵀ − λJ) / (r − λ)` for two designs with equal parameters
/// and equal intersection profiles.
pub fn derive_r(d1: &IncidenceStructure, d2: &IncidenceStructure) -> Result<SwitchingScheme, SchemeError> {
    let p1 = d1.validate()?;
    let p2 = d2.validate()?;
    if p1 != p2 {
        return Err(SchemeError::ParamMismatch(p1, p2));
    }
    if d1.v() != d2.v() || d1.block_count() != d2.block_count() || d1.multiplicities() != d2.multiplicities() {
        return Err(SchemeError::Design(DesignError::ShapeMismatch(
            "designs must share points, block count and multiplicities".into(),
        )));
    }
    if let Some((i, j)) = first_gram_mismatch(d1, d2) {
        return Err(SchemeError::GramMismatch(i, j));
    }
    let prov = Provenance::TwoDesigns { first: d1.to_json(), second: d2.to_json() };
    build(d1, d2, p1, prov)
}

/// `R = (N D (N^π)ᵀ − λJ) / (r − λ)` where block `i` of `N^π` is block `π(i)` of `N`.
pub fn derive_r_perm(d: &IncidenceStructure, pi: &Permutation) -> Result<SwitchingScheme, SchemeError> {
    let b = d.block_count();
    if pi.degree() != b {
        return Err(SchemeError::DegreeMismatch { got: pi.degree(), expected: b });
    }
    let params = d.validate()?;
    let blocks = d.blocks();
    if let Some(i) = (0..b).find(|&i| blocks[pi.apply(i)].mult != blocks[i].mult) {
        return Err(SchemeError::MultiplicityNotPreserved(i));
    }
    for i in 0..b {
        for j in i + 1..b {
            if d.intersection(i, j) != d.intersection(pi.apply(i), pi.apply(j)) {
                return Err(SchemeError::IntersectionNotPreserved(i, j));
            }
        }
    }
    let prov = Provenance::PermutedDesign { design: d.to_json(), permutation: pi.to_cycle_string() };
    build(d, &d.permute_blocks(pi), params, prov)
}

fn build(
    d1: &IncidenceStructure,
    d2: &IncidenceStructure,
    params: DesignParams,
    provenance: Provenance,
) -> Result<SwitchingScheme, SchemeError> {
    if params.r == params.lambda {
        return Err(SchemeError::RLambdaDegenerate(params.r));
    }
    let v = d1.v();
    let scale = ratio(1, (params.r - params.lambda) as i64);
    let lambda = params.lambda;
    let r = RatMatrix::from_fn(v, v, |p, q| {
        let s: u64 = d1
            .blocks()
            .iter()
            .zip(d2.blocks())
            .filter(|(b1, b2)| b1.contains(p) && b2.contains(q))
            .map(|(b1, _)| b1.mult)
            .sum();
        &int(s as i64 - lambda as i64) * &scale
    });
    let scheme = SwitchingScheme::new(r, provenance)?;
    for (i, (b1, b2)) in d1.blocks().iter().zip(d2.blocks()).enumerate() {
        if compat::image_direct(&scheme.scaled, b1.points) != Some(b2.points) {
            return Err(SchemeError::BlockImageMismatch(i));
        }
    }
    Ok(scheme)
}
