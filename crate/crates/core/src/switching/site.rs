use serde::Serialize;

use super::{Provenance, SchemeError, SwitchingScheme};
use crate::designs::{full_mask, IncidenceStructure};
use crate::graph::{Graph, GraphError};

/// A graph with an ordered list of vertices identified with the points
/// `0..v` of a scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchSite {
    pub graph: Graph,
    pub members: Vec<usize>,
}

impl SwitchSite {
    pub fn new(graph: Graph, members: Vec<usize>) -> Result<Self, SchemeError> {
        let n = graph.order();
        let mut seen = vec![false; n];
        for &m in &members {
            if m >= n || seen[m] {
                return Err(SchemeError::SiteInvalid(format!("member {m} is out of range or repeated")));
            }
            seen[m] = true;
        }
        if members.len() > 64 {
            return Err(SchemeError::SizeTooLarge { v: members.len(), limit: 64 });
        }
        Ok(Self { graph, members })
    }

    /// Neighbourhood of `x` inside the site, bit `p` for member `p`.
    pub fn neighbourhood(&self, x: usize) -> u64 {
        self.members.iter().enumerate().filter(|(_, &m)| self.graph.has_edge(x, m)).fold(0, |acc, (p, _)| acc | 1 << p)
    }

    pub fn outside(&self) -> Vec<usize> {
        let mut inside = vec![false; self.graph.order()];
        for &m in &self.members {
            inside[m] = true;
        }
        (0..self.graph.order()).filter(|&x| !inside[x]).collect()
    }

    pub fn induced(&self) -> Graph {
        self.graph.induced(&self.members)
    }
}

/// Which neighbourhoods an outside vertex may have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SiteMode {
    /// Any `χ` with `Rᵀχ` again 0/1 (blocks, complements, empty, full).
    #[default]
    Relaxed,
    /// Only blocks of the first source design, the empty set and the full set.
    Strict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutsideCheck {
    pub vertex: usize,
    pub neighbourhood: Vec<usize>,
    pub accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SiteReport {
    pub size_matches: bool,
    pub ac_compatible: bool,
    pub outside: Vec<OutsideCheck>,
    /// Outside vertices whose neighbourhood is not accepted.
    pub failures: Vec<usize>,
    pub ok: bool,
}

fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|&p| mask >> p & 1 == 1).collect()
}

fn source_design(p: &Provenance) -> Option<IncidenceStructure> {
    match p {
        Provenance::TwoDesigns { first, .. } => IncidenceStructure::from_json(first).ok(),
        Provenance::PermutedDesign { design, .. } => IncidenceStructure::from_json(design).ok(),
        _ => None,
    }
}

pub fn verify_site(site: &SwitchSite, scheme: &SwitchingScheme, mode: SiteMode) -> SiteReport {
    let v = scheme.v();
    if site.members.len() != v {
        return SiteReport { size_matches: false, ac_compatible: false, outside: vec![], failures: vec![], ok: false };
    }
    let ac_compatible = switched_inside(site, scheme).is_some();
    let strict_blocks: Option<Vec<u64>> = match mode {
        SiteMode::Relaxed => None,
        SiteMode::Strict => source_design(scheme.provenance()).map(|d| {
            let mut b: Vec<u64> = d.blocks().iter().map(|b| b.points).collect();
            b.extend([0, full_mask(v)]);
            b
        }),
    };
    let mut outside = Vec::new();
    let mut failures = Vec::new();
    for x in site.outside() {
        let chi = site.neighbourhood(x);
        let accepted = match &strict_blocks {
            Some(blocks) => blocks.contains(&chi),
            None => scheme.image_of(chi).is_some(),
        };
        if !accepted {
            failures.push(x);
        }
        outside.push(OutsideCheck { vertex: x, neighbourhood: bits(chi), accepted });
    }
    let ok = ac_compatible && failures.is_empty();
    SiteReport { size_matches: true, ac_compatible, outside, failures, ok }
}

/// `RᵀA_C R` as a graph on the points, if it is an adjacency matrix.
fn switched_inside(site: &SwitchSite, scheme: &SwitchingScheme) -> Option<Graph> {
    let m = scheme.scaled();
    let v = scheme.v();
    let l2 = m.scale * m.scale;
    let edges = site.induced().edges();
    let mut out = Graph::empty(v);
    for k in 0..v {
        for l in k..v {
            let mut s = 0i64;
            for &(i, j) in &edges {
                s += m.at(i, k) * m.at(j, l) + m.at(j, k) * m.at(i, l);
            }
            match (k == l, s) {
                (_, 0) => {}
                (false, x) if x == l2 => out.add_edge(k, l),
                _ => return None,
            }
        }
    }
    Some(out)
}

/// Switches the site: the induced subgraph becomes `RᵀA_C R` and every
/// outside neighbourhood `χ` becomes `Rᵀχ`. The result is checked against
/// the full product `QᵀAQ` with `Q = diag(R, I)`.
pub fn apply_switch(site: &SwitchSite, scheme: &SwitchingScheme) -> Result<Graph, SchemeError> {
    let report = verify_site(site, scheme, SiteMode::Relaxed);
    if !report.ok {
        let why = if !report.size_matches {
            "site size differs from the scheme".to_string()
        } else if !report.ac_compatible {
            "R^T A_C R is not an adjacency matrix".to_string()
        } else {
            format!("outside vertices {:?} have incompatible neighbourhoods", report.failures)
        };
        return Err(SchemeError::SiteInvalid(why));
    }
    let inside = switched_inside(site, scheme).expect("verified");
    let mut g = site.graph.clone();
    let members = &site.members;
    for (a, &u) in members.iter().enumerate() {
        for (b, &w) in members.iter().enumerate().skip(a + 1) {
            g.set_edge(u, w, inside.has_edge(a, b));
        }
    }
    for x in site.outside() {
        let image = scheme.image_of(site.neighbourhood(x)).expect("verified");
        for (p, &u) in members.iter().enumerate() {
            g.set_edge(x, u, image >> p & 1 == 1);
        }
    }
    if !matches_conjugation(site, scheme, &g) {
        return Err(SchemeError::SiteInvalid("switched graph differs from Q^T A Q".into()));
    }
    Ok(g)
}

/// Compares `ℓ²·A'` with `(ℓQ)ᵀ A (ℓQ)` entry by entry.
fn matches_conjugation(site: &SwitchSite, scheme: &SwitchingScheme, switched: &Graph) -> bool {
    let n = site.graph.order();
    let m = scheme.scaled();
    let l = m.scale;
    let mut q = vec![0i64; n * n];
    for i in 0..n {
        q[i * n + i] = l;
    }
    for (a, &u) in site.members.iter().enumerate() {
        for (b, &w) in site.members.iter().enumerate() {
            q[u * n + w] = m.at(a, b);
        }
    }
    let a = site.graph.adjacency_i64();
    // aq = A (ℓQ)
    let mut aq = vec![0i64; n * n];
    for i in 0..n {
        for k in site.graph.neighbours(i) {
            for j in 0..n {
                aq[i * n + j] += a[i * n + k] * q[k * n + j];
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let s: i64 = (0..n).map(|k| q[k * n + i] * aq[k * n + j]).sum();
            if s != l * l * i64::from(switched.has_edge(i, j)) {
                return false;
            }
        }
    }
    true
}

pub fn cospectral(g1: &Graph, g2: &Graph) -> Result<bool, SchemeError> {
    if g1.order() != g2.order() {
        return Err(GraphError::SizeMismatch(g1.order(), g2.order()).into());
    }
    Ok(g1.charpoly() == g2.charpoly())
}

/// Cospectral with cospectral complements.
pub fn r_cospectral(g1: &Graph, g2: &Graph) -> Result<bool, SchemeError> {
    Ok(cospectral(g1, g2)? && cospectral(&g1.complement(), &g2.complement())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{ratio, RatMatrix};

    fn gm4() -> SwitchingScheme {
        let r = &RatMatrix::all_ones(4).scale(&ratio(1, 2)) - &RatMatrix::identity(4);
        SwitchingScheme::new(r, Provenance::Raw).unwrap()
    }

    #[test]
    fn lone_switching_set() {
        let site = SwitchSite::new(Graph::empty(4), vec![0, 1, 2, 3]).unwrap();
        assert!(verify_site(&site, &gm4(), SiteMode::Relaxed).ok);
        assert_eq!(apply_switch(&site, &gm4()).unwrap(), Graph::empty(4));
    }

    #[test]
    fn classic_godsil_mckay_example() {
        // Outside vertex 4 sees {0, 1}, vertex 5 sees everything.
        let mut edges = vec![(4, 0), (4, 1), (5, 0), (5, 1), (5, 2), (5, 3), (4, 5)];
        edges.push((0, 1));
        edges.push((2, 3));
        let g = Graph::from_edges(6, &edges).unwrap();
        let site = SwitchSite::new(g.clone(), vec![0, 1, 2, 3]).unwrap();
        let s = gm4();
        let h = apply_switch(&site, &s).unwrap();
        assert!(h.has_edge(4, 2) && h.has_edge(4, 3) && !h.has_edge(4, 0));
        assert!(r_cospectral(&g, &h).unwrap());
        // GM switching is an involution.
        assert_eq!(apply_switch(&SwitchSite::new(h, vec![0, 1, 2, 3]).unwrap(), &s).unwrap(), g);
    }

    #[test]
    fn bad_outside_vertex_is_reported() {
        let g = Graph::from_edges(5, &[(4, 0), (4, 1), (4, 2)]).unwrap();
        let site = SwitchSite::new(g, vec![0, 1, 2, 3]).unwrap();
        let report = verify_site(&site, &gm4(), SiteMode::Relaxed);
        assert!(!report.ok);
        assert_eq!(report.failures, vec![4]);
        assert!(matches!(apply_switch(&site, &gm4()), Err(SchemeError::SiteInvalid(_))));
    }

    #[test]
    fn cospectral_pairs() {
        let k3 = Graph::complete(3);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!cospectral(&k3, &p3).unwrap());
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c4 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(cospectral(&star, &c4).unwrap());
        assert!(!r_cospectral(&star, &c4).unwrap());
        assert!(r_cospectral(&star, &star.relabel(&[4, 3, 2, 1, 0])).unwrap());
        assert!(cospectral(&k3, &star).is_err());
    }
}
