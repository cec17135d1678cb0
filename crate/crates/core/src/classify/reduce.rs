use std::collections::HashSet;

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::ClassifyError;
use crate::graph::Graph;
use crate::switching::{SchemeError, SwitchingScheme};

/// A basis scheme placed on an ordered list of switching-set points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub id: String,
    pub points: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ReduceOutcome {
    /// Applying the factors in order reproduces the scheme up to a final
    /// relabelling of the switching set, and every intermediate graph is simple.
    Reduced { factors: Vec<Factor> },
    /// No factorization within the bounds. `level_obstruction` names a prime
    /// dividing the scheme's level but no basis level, in which case no
    /// factorization exists at all.
    NotReduced { level_obstruction: Option<u64>, explored: usize },
}

#[derive(Debug, Clone)]
pub struct ReduceOptions {
    pub max_factors: usize,
    pub node_budget: usize,
    /// Outside neighbourhoods every intermediate step must keep 0/1. `None`
    /// means the whole compatible-vector table of the scheme.
    pub neighbourhoods: Option<Vec<u64>>,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        Self { max_factors: 3, node_budget: 2_000_000, neighbourhoods: None }
    }
}

/// Integer matrix over a positive common denominator, kept reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Frac {
    scale: i64,
    num: Vec<i64>,
}

impl Frac {
    fn identity(v: usize) -> Self {
        Self { scale: 1, num: (0..v * v).map(|k| i64::from(k % (v + 1) == 0)).collect() }
    }

    fn mul(&self, other: &Frac, v: usize) -> Frac {
        let mut num = vec![0i64; v * v];
        for i in 0..v {
            for k in 0..v {
                let a = self.num[i * v + k];
                if a == 0 {
                    continue;
                }
                for j in 0..v {
                    num[i * v + j] += a * other.num[k * v + j];
                }
            }
        }
        let mut out = Frac { scale: self.scale * other.scale, num };
        out.reduce();
        out
    }

    fn reduce(&mut self) {
        let g = self.num.iter().fold(self.scale, |g, &x| g.gcd(&x));
        if g > 1 {
            self.scale /= g;
            self.num.iter_mut().for_each(|x| *x /= g);
        }
    }

    fn sorted_columns(&self, v: usize) -> Vec<Vec<i64>> {
        let mut cols: Vec<Vec<i64>> = (0..v).map(|j| (0..v).map(|i| self.num[i * v + j]).collect()).collect();
        cols.sort_unstable();
        cols
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn level_u64(s: &SwitchingScheme) -> Result<u64, SchemeError> {
    s.level().to_u64().ok_or(SchemeError::Overflow)
}

/// Every distinct embedding of `basis` into `v` points, with its placement.
fn embeddings(basis: &SwitchingScheme, v: usize) -> Vec<(Frac, Vec<usize>)> {
    let k = basis.v();
    let m = basis.scaled();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(k);
    fn walk(
        v: usize,
        k: usize,
        m: &crate::exact::ScaledMatrix,
        tuple: &mut Vec<usize>,
        seen: &mut HashSet<Frac>,
        out: &mut Vec<(Frac, Vec<usize>)>,
    ) {
        if tuple.len() == k {
            let mut num: Vec<i64> = (0..v * v).map(|x| if x % (v + 1) == 0 { m.scale } else { 0 }).collect();
            for &p in tuple.iter() {
                num[p * v + p] = 0;
            }
            for (a, &p) in tuple.iter().enumerate() {
                for (b, &q) in tuple.iter().enumerate() {
                    num[p * v + q] = m.at(a, b);
                }
            }
            let mut f = Frac { scale: m.scale, num };
            f.reduce();
            if seen.insert(f.clone()) {
                out.push((f, tuple.clone()));
            }
            return;
        }
        for x in 0..v {
            if !tuple.contains(&x) {
                tuple.push(x);
                walk(v, k, m, tuple, seen, out);
                tuple.pop();
            }
        }
    }
    if k <= v {
        walk(v, k, m, &mut tuple, &mut seen, &mut out);
    }
    out
}

/// Searches for a factorization of `scheme`, applied to the switching-set
/// graph `ac`, into placements of `basis` schemes such that every prefix of
/// the product maps the graph (and the outside neighbourhoods) to a simple
/// graph. Iterative deepening up to `max_factors` factors.
pub fn reduce_scheme(
    scheme: &SwitchingScheme,
    ac: &Graph,
    basis: &[(String, SwitchingScheme)],
    opts: &ReduceOptions,
) -> Result<ReduceOutcome, ClassifyError> {
    let v = scheme.v();
    if ac.order() != v {
        return Err(SchemeError::SiteInvalid(format!("graph has {} vertices, scheme has {v} points", ac.order())).into());
    }
    if v > 8 {
        return Err(SchemeError::SizeTooLarge { v, limit: 8 }.into());
    }

    let mut basis_primes = HashSet::new();
    for (_, b) in basis {
        basis_primes.extend(prime_factors(level_u64(b)?));
    }
    if let Some(&p) = prime_factors(level_u64(scheme)?).iter().find(|p| !basis_primes.contains(p)) {
        return Ok(ReduceOutcome::NotReduced { level_obstruction: Some(p), explored: 0 });
    }

    let target = {
        let s = scheme.scaled();
        Frac { scale: s.scale, num: s.entries.clone() }
    };
    let target_cols = target.sorted_columns(v);
    let adjacency = ac.adjacency_i64();
    let outside: Vec<u64> = match &opts.neighbourhoods {
        Some(list) => list.clone(),
        None => scheme.block_table()?.iter().map(|e| e.0).collect(),
    };
    let moves: Vec<(usize, Frac, Vec<usize>)> = basis
        .iter()
        .enumerate()
        .flat_map(|(bi, (_, b))| embeddings(b, v).into_iter().map(move |(f, pts)| (bi, f, pts)))
        .collect();

    let admissible = |m: &Frac| -> bool {
        let s = m.scale;
        for &chi in &outside {
            for j in 0..v {
                let x: i64 = (0..v).filter(|&i| chi >> i & 1 == 1).map(|i| m.num[i * v + j]).sum();
                if x != 0 && x != s {
                    return false;
                }
            }
        }
        // Mᵀ A M, scaled by s².
        let mut am = vec![0i64; v * v];
        for i in 0..v {
            for k in 0..v {
                if adjacency[i * v + k] != 0 {
                    for j in 0..v {
                        am[i * v + j] += m.num[k * v + j];
                    }
                }
            }
        }
        let s2 = s * s;
        for i in 0..v {
            for j in i..v {
                let x: i64 = (0..v).map(|k| m.num[k * v + i] * am[k * v + j]).sum();
                if i == j && x != 0 || x != 0 && x != s2 {
                    return false;
                }
            }
        }
        true
    };

    let mut explored = 0usize;
    for depth in 1..=opts.max_factors {
        let mut path: Vec<usize> = Vec::new();
        let mut seen: HashSet<(usize, Frac)> = HashSet::new();
        if dfs(&Frac::identity(v), depth, &moves, &target, &target_cols, v, &admissible, &mut path, &mut seen, &mut explored, opts.node_budget)? {
            let factors = path
                .iter()
                .map(|&mi| Factor { id: basis[moves[mi].0].0.clone(), points: moves[mi].2.clone() })
                .collect();
            return Ok(ReduceOutcome::Reduced { factors });
        }
    }
    Ok(ReduceOutcome::NotReduced { level_obstruction: None, explored })
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    m: &Frac,
    depth: usize,
    moves: &[(usize, Frac, Vec<usize>)],
    target: &Frac,
    target_cols: &[Vec<i64>],
    v: usize,
    admissible: &dyn Fn(&Frac) -> bool,
    path: &mut Vec<usize>,
    seen: &mut HashSet<(usize, Frac)>,
    explored: &mut usize,
    budget: usize,
) -> Result<bool, ClassifyError> {
    if m.scale == target.scale && m.sorted_columns(v) == target_cols {
        return Ok(true);
    }
    if depth == 0 || !seen.insert((depth, m.clone())) {
        return Ok(false);
    }
    for (mi, (_, q, _)) in moves.iter().enumerate() {
        *explored += 1;
        if *explored > budget {
            return Err(ClassifyError::BudgetExceeded(budget as u64));
        }
        let next = m.mul(q, v);
        if !admissible(&next) {
            continue;
        }
        path.push(mi);
        if dfs(&next, depth - 1, moves, target, target_cols, v, admissible, path, seen, explored, budget)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}
