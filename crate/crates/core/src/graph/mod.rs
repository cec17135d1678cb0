//! Simple undirected graphs stored as one bit-vector per vertex, with
//! graph6 and JSON edge-list serialization, maximal clique enumeration
//! and an exact isomorphism test.

mod cliques;
mod graph6;
mod iso;

pub use cliques::{maximal_cliques, CliqueReport};
pub use graph6::{emit_graph6, parse_graph6};
pub use iso::isomorphic;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::exact::{charpoly_integer, IntPolynomial, RatMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("malformed graph6 input at byte {offset}")]
    MalformedGraph6 { offset: usize },
    #[error("edge ({0}, {1}) is out of range or a loop")]
    BadEdge(usize, usize),
    #[error("matrix is not a 0/1 symmetric matrix with zero diagonal")]
    NotAdjacency,
    #[error("graphs have different orders ({0} and {1})")]
    SizeMismatch(usize, usize),
    #[error("graph has {n} vertices, limit is {limit}")]
    SizeTooLarge { n: usize, limit: usize },
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self { n, words, adj: vec![0; n * words] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::BadEdge(u, v));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Erdős–Rényi graph with edge probability `p`.
    pub fn random(n: usize, p: f64, rng: &mut impl Rng) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn from_adjacency(m: &RatMatrix) -> Result<Self, GraphError> {
        if !m.is_adjacency_matrix() {
            return Err(GraphError::NotAdjacency);
        }
        let n = m.rows();
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if !num_traits::Zero::is_zero(m.get(i, j)) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u * self.words + v / 64] |= 1 << (v % 64);
        self.adj[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.words + v / 64] &= !(1 << (v % 64));
        self.adj[v * self.words + u / 64] &= !(1 << (u % 64));
    }

    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.add_edge(u, v)
        } else {
            self.remove_edge(u, v)
        }
    }

    /// Neighbourhood of `u` as packed words (bit `v` of the row is edge `uv`).
    pub fn row(&self, u: usize) -> &[u64] {
        &self.adj[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.has_edge(u, v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Vertex `v` of `self` becomes vertex `perm[v]` of the result.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Subgraph induced on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn adjacency_i64(&self) -> Vec<i64> {
        let n = self.n;
        let mut out = vec![0i64; n * n];
        for u in 0..n {
            for v in 0..n {
                out[u * n + v] = i64::from(self.has_edge(u, v));
            }
        }
        out
    }

    pub fn adjacency_matrix(&self) -> RatMatrix {
        RatMatrix::from_fn(self.n, self.n, |i, j| crate::exact::int(i64::from(self.has_edge(i, j))))
    }

    pub fn charpoly(&self) -> IntPolynomial {
        charpoly_integer(self.n, &self.adjacency_i64())
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson { n: self.n, edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        Self::from_edges(j.n, &edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

/// JSON edge-list form: `{"n": 4, "edges": [[0, 1], [1, 2]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn complement_and_relabel() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.complement().edges(), vec![(0, 2)]);
        assert_eq!(p3.relabel(&[1, 0, 2]).edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(p3.degree(1), 2);
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn wide_graphs_use_several_words() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let g = Graph::random(130, 0.3, &mut rng);
        let back = Graph::from_adjacency(&g.adjacency_matrix()).unwrap();
        assert_eq!(g, back);
        assert_eq!(g.complement().edge_count() + g.edge_count(), 130 * 129 / 2);
    }

    #[test]
    fn smallest_cospectral_pair() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c4 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let expected = IntPolynomial::from_i64(&[0, 0, 0, -4, 0, 1]);
        assert_eq!(star.charpoly(), expected);
        assert_eq!(c4.charpoly(), expected);
    }
}
