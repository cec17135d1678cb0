//! Projective spaces over the fields of two and three elements, their
//! line graphs (q-triangular graphs), and switching at the lines of a plane.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

pub use crate::graph::{isomorphic, CliqueReport};

use crate::designs::IncidenceStructure;
use crate::graph::{maximal_cliques, Graph};
use crate::perm::Permutation;
use crate::switching::{apply_switch, cospectral, derive_r_perm, SchemeError, SwitchSite};

/// Most lines accepted by [`q_triangular`].
pub const MAX_LINES: usize = 400;
/// Largest graph handed to the clique enumeration.
pub const MAX_CLIQUE_VERTICES: usize = 130;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeometryError {
    #[error("only the fields of order 2 and 3 are supported, got {0}")]
    UnsupportedField(usize),
    #[error("vector space dimension must lie in 2..=4, got {0}")]
    UnsupportedDimension(usize),
    #[error("{what} has {size} elements, limit is {limit}")]
    SizeTooLarge { what: &'static str, size: usize, limit: usize },
    #[error("plane index {index} out of range ({count} planes)")]
    PlaneOutOfRange { index: usize, count: usize },
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// `[k]_q = (q^k − 1)/(q − 1)`, the number of points of `PG(k − 1, q)`.
pub fn gaussian_points(k: u32, q: usize) -> usize {
    (q.pow(k) - 1) / (q - 1)
}

/// `PG(n − 1, q)`: points are the nonzero vectors of `F_q^n` whose first
/// nonzero coordinate is 1, in lexicographic order.
#[derive(Debug, Clone)]
pub struct ProjectiveSpace {
    q: usize,
    n: usize,
    points: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    lines: Vec<Vec<usize>>,
}

impl ProjectiveSpace {
    pub fn new(q: usize, n: usize) -> Result<Self, GeometryError> {
        if q != 2 && q != 3 {
            return Err(GeometryError::UnsupportedField(q));
        }
        if !(2..=4).contains(&n) {
            return Err(GeometryError::UnsupportedDimension(n));
        }
        let mut points = Vec::new();
        for code in 1..q.pow(n as u32) {
            let v: Vec<usize> = (0..n).rev().map(|k| code / q.pow(k as u32) % q).collect();
            if v.iter().find(|&&x| x != 0) == Some(&1) {
                points.push(v);
            }
        }
        let index: HashMap<Vec<usize>, usize> = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut space = Self { q, n, points, index, lines: Vec::new() };
        let np = space.points.len();
        let mut covered = vec![false; np * np];
        let mut lines = Vec::new();
        for a in 0..np {
            for b in a + 1..np {
                if covered[a * np + b] {
                    continue;
                }
                let line = space.span(&[a, b]);
                for &x in &line {
                    for &y in &line {
                        covered[x * np + y] = true;
                    }
                }
                lines.push(line);
            }
        }
        lines.sort();
        space.lines = lines;
        Ok(space)
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Dimension of the underlying vector space.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn point(&self, i: usize) -> &[usize] {
        &self.points[i]
    }

    /// Lines as sorted point lists, in lexicographic order.
    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    fn normalize(&self, v: &[usize]) -> Option<usize> {
        let lead = *v.iter().find(|&&x| x != 0)?;
        // Inverse of the leading coordinate: 1 ↦ 1, 2 ↦ 2 (mod 3).
        let inv = lead;
        let w: Vec<usize> = v.iter().map(|&x| x * inv % self.q).collect();
        self.index.get(&w).copied()
    }

    /// All points in the span of the given points, sorted.
    pub fn span(&self, generators: &[usize]) -> Vec<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        let k = generators.len();
        for code in 1..self.q.pow(k as u32) {
            let coeffs: Vec<usize> = (0..k).map(|t| code / self.q.pow(t as u32) % self.q).collect();
            let v: Vec<usize> = (0..self.n)
                .map(|c| generators.iter().zip(&coeffs).map(|(&g, &a)| a * self.points[g][c]).sum::<usize>() % self.q)
                .collect();
            if let Some(p) = self.normalize(&v) {
                set.insert(p);
            }
        }
        set.into_iter().collect()
    }

    /// Planes as sorted point lists, in lexicographic order. Empty when the
    /// space has fewer than three dimensions.
    pub fn planes(&self) -> Vec<Vec<usize>> {
        if self.n < 3 {
            return Vec::new();
        }
        let mut planes = BTreeSet::new();
        for line in &self.lines {
            for p in 0..self.points.len() {
                if !line.contains(&p) {
                    planes.insert(self.span(&[line[0], line[1], p]));
                }
            }
        }
        planes.into_iter().collect()
    }
}

/// `J_q(n, 2)`: the lines of `PG(n − 1, q)`, adjacent when they meet.
pub fn q_triangular(space: &ProjectiveSpace) -> Result<Graph, GeometryError> {
    let lines = space.lines();
    if lines.len() > MAX_LINES {
        return Err(GeometryError::SizeTooLarge { what: "line set", size: lines.len(), limit: MAX_LINES });
    }
    let masks: Vec<Vec<bool>> = lines
        .iter()
        .map(|l| {
            let mut m = vec![false; space.point_count()];
            l.iter().for_each(|&p| m[p] = true);
            m
        })
        .collect();
    let mut g = Graph::empty(lines.len());
    for a in 0..lines.len() {
        for b in a + 1..lines.len() {
            if lines[b].iter().any(|&p| masks[a][p]) {
                g.add_edge(a, b);
            }
        }
    }
    Ok(g)
}

/// The lines of one plane as a switching site of `J_q(n, 2)`. The design is
/// the dual plane: its points are the plane's lines (in site order) and its
/// blocks are the pencils at the plane's points (in point order). A line
/// outside the plane meets it in at most one point, so it sees a pencil or
/// nothing.
#[derive(Debug, Clone)]
pub struct PlaneSite {
    pub plane_points: Vec<usize>,
    pub site: SwitchSite,
    pub dual: IncidenceStructure,
}

/// One site per plane of the space, in plane order.
pub fn subplane_sites(space: &ProjectiveSpace, graph: &Graph) -> Result<Vec<PlaneSite>, GeometryError> {
    let line_index: HashMap<&[usize], usize> =
        space.lines().iter().enumerate().map(|(i, l)| (l.as_slice(), i)).collect();
    let mut out = Vec::new();
    for plane in space.planes() {
        let members: Vec<usize> = space
            .lines()
            .iter()
            .filter(|l| l.iter().all(|p| plane.binary_search(p).is_ok()))
            .map(|l| line_index[l.as_slice()])
            .collect();
        let pencils: Vec<Vec<usize>> = plane
            .iter()
            .map(|p| (0..members.len()).filter(|&k| space.lines()[members[k]].contains(p)).collect())
            .collect();
        let dual = IncidenceStructure::from_point_lists(members.len(), &pencils).map_err(SchemeError::from)?;
        let site = SwitchSite::new(graph.clone(), members)?;
        out.push(PlaneSite { plane_points: plane, site, dual });
    }
    Ok(out)
}

/// Maximal cliques of size at most `size_cap`, plus the clique number.
pub fn max_clique_report(g: &Graph, size_cap: usize) -> Result<CliqueReport, GeometryError> {
    if g.order() > MAX_CLIQUE_VERTICES {
        return Err(GeometryError::SizeTooLarge { what: "graph", size: g.order(), limit: MAX_CLIQUE_VERTICES });
    }
    Ok(maximal_cliques(g, size_cap))
}

/// Evidence that a plane switch produced a cospectral mate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MateCertificate {
    pub cospectral: bool,
    pub complement_cospectral: bool,
    /// Maximal cliques of size `q + 2` in the switched graph.
    pub clique_witness: Vec<Vec<usize>>,
    /// Number of maximal cliques of size `q + 2` in the original graph.
    pub original_small_cliques: usize,
}

/// Switches `J_q(n, 2)` at a plane with the dual plane and the block
/// permutation `pi` (1-based on pencils), returning the new graph and its
/// certificate. Clique data is only computed up to [`MAX_CLIQUE_VERTICES`].
pub fn switch_plane(
    site: &PlaneSite,
    pi: &Permutation,
    q: usize,
) -> Result<(Graph, MateCertificate), GeometryError> {
    let scheme = derive_r_perm(&site.dual, pi)?;
    let switched = apply_switch(&site.site, &scheme)?;
    let original = &site.site.graph;
    let cospectral_graphs = cospectral(original, &switched)?;
    let complements = cospectral(&original.complement(), &switched.complement())?;
    let (witness, before) = if original.order() <= MAX_CLIQUE_VERTICES {
        let after = max_clique_report(&switched, q + 2)?;
        let before = max_clique_report(original, q + 2)?;
        let w = after.small_cliques.into_iter().filter(|c| c.len() == q + 2).collect();
        (w, before.count_of_size(q + 2))
    } else {
        (Vec::new(), 0)
    };
    let cert = MateCertificate {
        cospectral: cospectral_graphs,
        complement_cospectral: complements,
        clique_witness: witness,
        original_small_cliques: before,
    };
    Ok((switched, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::design_automorphism_group;
    use crate::switching::{verify_site, SiteMode};

    #[test]
    fn counts_match_gaussian_numbers() {
        for (q, n) in [(2, 3), (2, 4), (3, 3), (3, 4)] {
            let s = ProjectiveSpace::new(q, n).unwrap();
            assert_eq!(s.point_count(), gaussian_points(n as u32, q));
            // Lines: [n]_q [n-1]_q / (q + 1).
            let lines = gaussian_points(n as u32, q) * gaussian_points(n as u32 - 1, q) / (q + 1);
            assert_eq!(s.lines().len(), lines);
            assert!(s.lines().iter().all(|l| l.len() == q + 1));
        }
        assert_eq!(ProjectiveSpace::new(2, 4).unwrap().planes().len(), 15);
        assert!(matches!(ProjectiveSpace::new(5, 3), Err(GeometryError::UnsupportedField(5))));
    }

    #[test]
    fn every_pair_of_points_on_one_line() {
        let s = ProjectiveSpace::new(3, 3).unwrap();
        let n = s.point_count();
        for a in 0..n {
            for b in a + 1..n {
                assert_eq!(s.lines().iter().filter(|l| l.contains(&a) && l.contains(&b)).count(), 1);
            }
        }
    }

    #[test]
    fn small_q_triangular_graphs() {
        let plane = q_triangular(&ProjectiveSpace::new(2, 3).unwrap()).unwrap();
        assert_eq!(plane.order(), 7);
        assert_eq!(plane.edge_count(), 21);
        let g = q_triangular(&ProjectiveSpace::new(2, 4).unwrap()).unwrap();
        assert_eq!(g.order(), 35);
        assert!((0..35).all(|v| g.degree(v) == 18));
        assert_eq!(q_triangular(&ProjectiveSpace::new(3, 4).unwrap()).unwrap().order(), 130);
    }

    #[test]
    fn plane_sites_are_valid() {
        let s = ProjectiveSpace::new(2, 4).unwrap();
        let g = q_triangular(&s).unwrap();
        let sites = subplane_sites(&s, &g).unwrap();
        assert_eq!(sites.len(), 15);
        for ps in &sites {
            assert_eq!(ps.site.members.len(), 7);
            assert!(g.is_clique(&ps.site.members));
            let p = ps.dual.validate().unwrap();
            assert_eq!((p.r, p.lambda), (3, 1));
            for x in ps.site.outside() {
                assert_eq!(ps.site.neighbourhood(x).count_ones(), 3);
            }
        }
        let ps = &sites[0];
        let pi = Permutation::parse_cycles("(3 4)(5 6 7)", 7).unwrap();
        let scheme = derive_r_perm(&ps.dual, &pi).unwrap();
        assert!(verify_site(&ps.site, &scheme, SiteMode::Strict).ok);
        assert!(!design_automorphism_group(&ps.dual).contains(&pi));
    }

    #[test]
    fn non_collineation_switch_creates_small_maximal_cliques() {
        let s = ProjectiveSpace::new(2, 4).unwrap();
        let g = q_triangular(&s).unwrap();
        let ps = &subplane_sites(&s, &g).unwrap()[0];
        let pi = Permutation::parse_cycles("(3 4)(5 6 7)", 7).unwrap();
        let (h, cert) = switch_plane(ps, &pi, 2).unwrap();
        assert!(cert.cospectral && cert.complement_cospectral);
        assert_eq!(cert.original_small_cliques, 0);
        assert!(!cert.clique_witness.is_empty());
        for c in &cert.clique_witness {
            assert!(h.is_clique(c));
        }
        assert!(!isomorphic(&g, &h).unwrap());
    }
}
