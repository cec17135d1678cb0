//! Named switching methods: the classical families, matrices derived from
//! small designs, and generators of random graphs with a valid switching
//! site for property testing.

pub mod data;
mod equiv;
mod families;

pub use equiv::{independent_permutations, simultaneous_permutation};
pub use families::{
    ah_matrix, counting_identities, cube_matrix, gm64_design, gm64_uniform_rule, gm_block, gm_design, gm_swap, wqh_block, wqh_design,
    wqh_swap, CountingReport, IdentityCheck,
};

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{schemes_from_design, BlockRelation, Classification, ClassifyError, ClassifyOptions};
use crate::designs::{DesignError, IncidenceStructure};
use crate::exact::RatMatrix;
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::switching::{derive_r_perm, mask_to_graph, SchemeError, SwitchSite, SwitchingScheme};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("entry {0} has no source design")]
    SourceMissing(String),
    #[error("host graph needs at least {need} vertices, got {got}")]
    HostTooSmall { need: usize, got: usize },
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Design(#[from] DesignError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Identifier of a named switching method.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    /// Godsil–McKay switching on parts of the given even sizes.
    Gm(Vec<usize>),
    /// Wang–Qiu–Hu switching; each `c` is a pair of halves of size `c`.
    Wqh(Vec<usize>),
    /// The two-shift family on `2m` points; the field is `2m`.
    Ah(usize),
    /// The circulant form of Fano switching.
    Fano,
    /// The switch from the Fano lines and the `i`-th coset permutation, `1..=4`.
    FanoCoset(usize),
    Cube,
    /// The switch from points and planes of the affine 3-space over two
    /// elements and the `i`-th coset permutation, `1..=14`.
    Ag32(usize),
    New7,
    New8,
    /// The `j`-th parallelism-preserving switch of the affine plane of order 3, `1..=5`.
    Ag23(usize),
    Level5,
    Prop51,
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |parts: &[usize]| parts.iter().map(ToString::to_string).collect::<Vec<_>>().join("+");
        match self {
            CatalogId::Gm(p) => write!(f, "GM({})", join(p)),
            CatalogId::Wqh(p) => write!(f, "WQH({})", join(p)),
            CatalogId::Ah(n) => write!(f, "AH({n})"),
            CatalogId::Fano => write!(f, "Fano"),
            CatalogId::FanoCoset(i) => write!(f, "Fano({i})"),
            CatalogId::Cube => write!(f, "Cube"),
            CatalogId::Ag32(i) => write!(f, "AG32({i})"),
            CatalogId::New7 => write!(f, "New7"),
            CatalogId::New8 => write!(f, "New8"),
            CatalogId::Ag23(j) => write!(f, "AG23({j})"),
            CatalogId::Level5 => write!(f, "Level5"),
            CatalogId::Prop51 => write!(f, "Prop51"),
        }
    }
}

impl FromStr for CatalogId {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CatalogError::UnknownId(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (name, args) = match t.find('(') {
            Some(k) if t.ends_with(')') => (&t[..k], Some(&t[k + 1..t.len() - 1])),
            Some(_) => return Err(unknown()),
            None => (t.as_str(), None),
        };
        let list = |a: Option<&str>| -> Result<Vec<usize>, CatalogError> {
            let a = a.ok_or_else(unknown)?;
            a.split(['+', ',']).map(|x| x.parse::<usize>().map_err(|_| unknown())).collect()
        };
        let one = |a: Option<&str>, range: std::ops::RangeInclusive<usize>| -> Result<usize, CatalogError> {
            let v = list(a)?;
            match v[..] {
                [x] if range.contains(&x) => Ok(x),
                _ => Err(unknown()),
            }
        };
        let id = match (name.to_ascii_lowercase().as_str(), args) {
            ("gm", a) => {
                let parts = list(a)?;
                if parts.is_empty() || parts.iter().any(|&c| c < 2 || c % 2 == 1) {
                    return Err(unknown());
                }
                CatalogId::Gm(parts)
            }
            ("wqh", a) => {
                let parts = list(a)?;
                if parts.is_empty() || parts.contains(&0) {
                    return Err(unknown());
                }
                CatalogId::Wqh(parts)
            }
            ("ah", a) => {
                let n = one(a, 4..=64)?;
                if n % 2 == 1 {
                    return Err(unknown());
                }
                CatalogId::Ah(n)
            }
            ("fano", None) => CatalogId::Fano,
            ("fano", a) => CatalogId::FanoCoset(one(a, 1..=4)?),
            ("cube", None) => CatalogId::Cube,
            ("ag32", a) => CatalogId::Ag32(one(a, 1..=14)?),
            ("new7", None) => CatalogId::New7,
            ("new8", None) => CatalogId::New8,
            ("ag23", a) => CatalogId::Ag23(one(a, 1..=5)?),
            ("level5" | "level5circulant", None) => CatalogId::Level5,
            ("prop51", None) => CatalogId::Prop51,
            _ => return Err(unknown()),
        };
        Ok(id)
    }
}

/// A design and a block permutation from which an entry can be derived.
#[derive(Debug, Clone)]
pub struct Source {
    pub design: IncidenceStructure,
    pub permutation: Permutation,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub scheme: SwitchingScheme,
    pub source: Option<Source>,
}

/// Every id the catalog lists by default.
pub fn catalog_ids() -> Vec<CatalogId> {
    let mut ids = vec![
        CatalogId::Gm(vec![4]),
        CatalogId::Gm(vec![6]),
        CatalogId::Gm(vec![8]),
        CatalogId::Gm(vec![4, 4]),
        CatalogId::Gm(vec![6, 4]),
        CatalogId::Wqh(vec![2]),
        CatalogId::Wqh(vec![3]),
        CatalogId::Wqh(vec![4]),
        CatalogId::Ah(4),
        CatalogId::Ah(6),
        CatalogId::Ah(8),
        CatalogId::Fano,
    ];
    ids.extend((1..=4).map(CatalogId::FanoCoset));
    ids.push(CatalogId::Cube);
    ids.extend((1..=14).map(CatalogId::Ag32));
    ids.extend([CatalogId::New7, CatalogId::New8]);
    ids.extend((1..=5).map(CatalogId::Ag23));
    ids.extend([CatalogId::Level5, CatalogId::Prop51]);
    ids
}

fn design(rows: &[&str]) -> IncidenceStructure {
    IncidenceStructure::from_incidence_rows(rows).expect("catalog designs are well formed")
}

fn perm(cycles: &str, degree: usize) -> Permutation {
    Permutation::parse_cycles(cycles, degree).expect("catalog permutations are well formed")
}

fn scaled<const N: usize>(den: i64, rows: &[[i64; N]]) -> RatMatrix {
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    RatMatrix::from_scaled_rows(den, &rows).expect("square table")
}

fn source(d: IncidenceStructure, cycles: &str) -> Option<Source> {
    let permutation = perm(cycles, d.block_count());
    Some(Source { design: d, permutation })
}

/// The lines of the affine plane of order 3 on points `3x + y`, grouped by
/// parallel class (directions (0,1), (1,0), (1,1), (1,2)).
pub fn ag23_design() -> IncidenceStructure {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
        let mut seen: Vec<Vec<usize>> = Vec::new();
        for p in 0..9 {
            let (x, y) = (p / 3, p % 3);
            let mut line: Vec<usize> = (0..3).map(|t| 3 * ((x + t * dx) % 3) + (y + t * dy) % 3).collect();
            line.sort_unstable();
            if !seen.contains(&line) {
                seen.push(line);
            }
        }
        blocks.extend(seen);
    }
    IncidenceStructure::from_point_lists(9, &blocks).expect("valid lines")
}

/// Classification of the affine plane of order 3 under parallelism-preserving
/// block permutations, computed once.
pub fn ag23_classification() -> Result<&'static Classification, CatalogError> {
    static CELL: OnceLock<Result<Classification, ClassifyError>> = OnceLock::new();
    CELL.get_or_init(|| {
        schemes_from_design(&ag23_design(), ClassifyOptions { relation: BlockRelation::Disjointness, ..Default::default() })
    })
    .as_ref()
    .map_err(|e| e.clone().into())
}

fn ten_point_source() -> Source {
    let design = gm64_design();
    let permutation = gm_swap(&design, &[6, 4]);
    Source { design, permutation }
}

fn all_triples_of_six() -> IncidenceStructure {
    let blocks: Vec<Vec<usize>> = (0..6)
        .flat_map(|a| (a + 1..6).flat_map(move |b| (b + 1..6).map(move |c| vec![a, b, c])))
        .collect();
    IncidenceStructure::from_point_lists(6, &blocks).expect("valid triples")
}

/// Builds the entry for `id`.
pub fn make(id: &CatalogId) -> Result<CatalogEntry, CatalogError> {
    let (matrix, source) = match id {
        CatalogId::Gm(parts) => {
            let m = RatMatrix::direct_sum(&parts.iter().map(|&c| gm_block(c)).collect::<Vec<_>>());
            let src = match parts[..] {
                [4] => source(design(&data::AG22), data::AG22_SWAP),
                [6] => {
                    let d = all_triples_of_six();
                    let reversal = Permutation::from_images((0..d.block_count()).rev().collect()).expect("bijection");
                    Some(Source { design: d, permutation: reversal })
                }
                [6, 4] => Some(ten_point_source()),
                _ => None,
            };
            (m, src)
        }
        CatalogId::Wqh(parts) => {
            let m = RatMatrix::direct_sum(&parts.iter().map(|&c| wqh_block(c)).collect::<Vec<_>>());
            let src = if parts[..] == [3] { source(design(&data::WQH6), data::WQH6_SWAP) } else { None };
            (m, src)
        }
        CatalogId::Ah(n) => {
            let src = if *n == 6 { source(design(&data::AH6), data::AH6_PERM) } else { None };
            (ah_matrix(n / 2), src)
        }
        CatalogId::Fano => (RatMatrix::circulant(2, &data::FANO_ROW), None),
        CatalogId::FanoCoset(i) => {
            let m = if *i == 1 { RatMatrix::identity(7) } else { scaled(2, &data::FANO_R[i - 2]) };
            (m, source(design(&data::FANO), data::FANO_PERMS[i - 1]))
        }
        CatalogId::Cube => (cube_matrix(), None),
        CatalogId::Ag32(i) => {
            let m = scaled(data::AG32_DEN[i - 1], &data::AG32_R[i - 1]);
            (m, source(design(&data::AG32), data::AG32_PERMS[i - 1]))
        }
        CatalogId::New7 => (scaled(4, &data::NEW7_R), source(design(&data::NEW7), data::NEW7_PERM)),
        CatalogId::New8 => (scaled(3, &data::NEW8_R), source(design(&data::NEW8), data::NEW8_PERM)),
        CatalogId::Ag23(j) => {
            let c = ag23_classification()?;
            let rep = c.representatives.get(j - 1).ok_or_else(|| CatalogError::UnknownId(id.to_string()))?.clone();
            let scheme = derive_r_perm(&ag23_design(), &rep)?;
            (scheme.matrix().clone(), Some(Source { design: ag23_design(), permutation: rep }))
        }
        CatalogId::Level5 => (RatMatrix::circulant(5, &data::LEVEL5_ROW), None),
        CatalogId::Prop51 => (scaled(5, &data::PROP51_R), None),
    };
    let scheme = SwitchingScheme::new(matrix, crate::switching::Provenance::Named { id: id.to_string() })?;
    Ok(CatalogEntry { id: id.clone(), scheme, source })
}

/// Parses `id` and builds its entry.
pub fn get(id: &str) -> Result<CatalogEntry, CatalogError> {
    make(&id.parse()?)
}

/// Derives the entry's scheme from its source and returns a simultaneous
/// relabelling of rows and columns that turns the catalog matrix into the
/// derived one, if there is one.
pub fn consistency_check(entry: &CatalogEntry) -> Result<Option<Permutation>, CatalogError> {
    let src = entry.source.as_ref().ok_or_else(|| CatalogError::SourceMissing(entry.id.to_string()))?;
    let derived = derive_r_perm(&src.design, &src.permutation)?;
    Ok(simultaneous_permutation(entry.scheme.scaled(), derived.scaled()))
}

/// Whether two schemes differ only by relabelling the switching set before
/// and after the switch (independent row and column permutations).
pub fn method_equivalent(a: &SwitchingScheme, b: &SwitchingScheme) -> bool {
    independent_permutations(a.scaled(), b.scaled()).is_some()
}

/// Named schemes used as building blocks by the reducibility search.
pub fn basis(ids: &[&str]) -> Result<Vec<(String, SwitchingScheme)>, CatalogError> {
    ids.iter().map(|s| get(s).map(|e| (e.id.to_string(), e.scheme))).collect()
}

/// A random graph on `n` vertices containing a valid site for `scheme`: the
/// switching set induces a compatible graph and every outside vertex sees a
/// compatible neighbourhood. Deterministic in `seed`.
pub fn plant_site(n: usize, scheme: &SwitchingScheme, seed: u64) -> Result<SwitchSite, CatalogError> {
    let v = scheme.v();
    if n < v {
        return Err(CatalogError::HostTooSmall { need: v, got: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::random(n, 0.5, &mut rng);
    let members: Vec<usize> = sample(&mut rng, n, v).into_vec();

    // With level one every graph on the set is compatible.
    if scheme.level() != 1.into() {
        let acs = scheme.raw_compatible_ac()?;
        let mask = acs.masks[rng.gen_range(0..acs.len())];
        let inner = mask_to_graph(v, mask);
        for a in 0..v {
            for b in a + 1..v {
                g.set_edge(members[a], members[b], inner.has_edge(a, b));
            }
        }
    }
    let table = scheme.block_table()?;
    let mut inside = vec![false; n];
    members.iter().for_each(|&m| inside[m] = true);
    for x in (0..n).filter(|&x| !inside[x]) {
        let chi = table[rng.gen_range(0..table.len())].0;
        for (p, &m) in members.iter().enumerate() {
            g.set_edge(x, m, chi >> p & 1 == 1);
        }
    }
    Ok(SwitchSite::new(g, members)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::level;
    use crate::switching::{apply_switch, r_cospectral, verify_site, SiteMode};
    use num_bigint::BigInt;

    #[test]
    fn ids_round_trip() {
        for id in catalog_ids() {
            assert_eq!(id.to_string().parse::<CatalogId>().unwrap(), id);
        }
        assert_eq!("Level5Circulant".parse::<CatalogId>().unwrap(), CatalogId::Level5);
        assert_eq!("gm(6, 4)".parse::<CatalogId>().unwrap(), CatalogId::Gm(vec![6, 4]));
        for bad in ["GM(5)", "AG32(15)", "Fano(0)", "Nope", "AH(7)", "GM(4"] {
            assert!(bad.parse::<CatalogId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn basic_entries() {
        let gm4 = get("GM(4)").unwrap();
        assert_eq!(gm4.scheme.level(), BigInt::from(2));
        let ah6 = get("AH(6)").unwrap();
        assert_eq!(ah6.scheme.level(), BigInt::from(2));
        let p51 = get("Prop51").unwrap();
        assert_eq!(level(p51.scheme.matrix()), BigInt::from(5));
    }

    #[test]
    fn sources_are_consistent() {
        for id in ["GM(4)", "GM(6)", "WQH(3)", "AH(6)", "Fano(2)", "Fano(4)", "AG32(10)", "New7", "New8"] {
            let e = get(id).unwrap();
            assert!(consistency_check(&e).unwrap().is_some(), "{id}");
        }
        assert!(matches!(consistency_check(&get("Cube").unwrap()), Err(CatalogError::SourceMissing(_))));
    }

    #[test]
    fn planted_sites_switch_to_mates() {
        for (id, n, seed) in [("GM(4)", 12, 1), ("WQH(3)", 16, 2), ("AH(6)", 14, 3)] {
            let e = get(id).unwrap();
            let site = plant_site(n, &e.scheme, seed).unwrap();
            assert!(verify_site(&site, &e.scheme, SiteMode::Relaxed).ok);
            let h = apply_switch(&site, &e.scheme).unwrap();
            assert!(r_cospectral(&site.graph, &h).unwrap());
        }
    }

    #[test]
    fn planting_is_deterministic() {
        let e = get("Fano").unwrap();
        let a = plant_site(15, &e.scheme, 7).unwrap();
        let b = plant_site(15, &e.scheme, 7).unwrap();
        assert_eq!(a, b);
        assert!(matches!(plant_site(5, &e.scheme, 7), Err(CatalogError::HostTooSmall { .. })));
    }
}
