//! Exact two-phase simplex over the rationals for small problems of the form
//! `min cᵀx` subject to `Ax = b`, `x ≥ 0`. Bland's rule keeps it finite.

use num_traits::{One, Signed, Zero};

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    /// Farkas certificate: `yᵀA ≤ 0` entrywise and `yᵀb > 0`, so no `x ≥ 0`
    /// can satisfy `Ax = b`.
    Infeasible { y: Vec<Rational> },
    Unbounded,
}

/// Checks a Farkas certificate directly against the system.
pub fn certifies_infeasible(a: &[Vec<Rational>], b: &[Rational], y: &[Rational]) -> bool {
    let cols = a.first().map_or(0, Vec::len);
    let combo_ok = (0..cols).all(|j| {
        let s: Rational = a.iter().zip(y).map(|(row, yi)| &row[j] * yi).sum();
        !s.is_positive()
    });
    let rhs: Rational = b.iter().zip(y).map(|(bi, yi)| bi * yi).sum();
    combo_ok && rhs.is_positive()
}

struct Tableau {
    // rows x (cols + 1); the last column is the right-hand side.
    t: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.t[r][c].clone();
        for x in self.t[r].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.t[r].clone();
        for (i, row) in self.t.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs `c_j - c_Bᵀ B⁻¹ A_j` for every column.
    fn reduced_costs(&self, cost: &[Rational]) -> Vec<Rational> {
        let mut d: Vec<Rational> = cost.to_vec();
        for (i, row) in self.t.iter().enumerate() {
            let cb = &cost[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for j in 0..self.cols {
                if !row[j].is_zero() {
                    d[j] -= cb * &row[j];
                }
            }
        }
        d
    }

    /// Minimizes `cost` over the columns allowed to enter. Returns false if
    /// unbounded.
    fn optimize(&mut self, cost: &[Rational], may_enter: &[bool]) -> bool {
        loop {
            let d = self.reduced_costs(cost);
            let Some(c) = (0..self.cols).find(|&j| may_enter[j] && d[j].is_negative()) else {
                return true;
            };
            let rhs = self.cols;
            let mut best: Option<(Rational, usize)> = None;
            for (i, row) in self.t.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = &row[rhs] / &row[c];
                    let better = match &best {
                        None => true,
                        Some((br, bi)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((ratio, i));
                    }
                }
            }
            let Some((_, r)) = best else { return false };
            self.pivot(r, c);
        }
    }
}

/// Solves `min cᵀx, Ax = b, x ≥ 0` exactly.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], cost: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = cost.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == m);
    // Flip rows so the right-hand side is nonnegative, then add one artificial per row.
    let sign: Vec<Rational> = b.iter().map(|x| if x.is_negative() { -Rational::one() } else { Rational::one() }).collect();
    let cols = n + m;
    let mut t = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Rational> = a[i].iter().map(|x| x * &sign[i]).collect();
        row.extend((0..m).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
        row.push(&b[i] * &sign[i]);
        t.push(row);
    }
    let mut tab = Tableau { t, basis: (n..n + m).collect(), cols };

    let mut phase1 = vec![Rational::zero(); cols];
    for c in phase1.iter_mut().skip(n) {
        *c = Rational::one();
    }
    tab.optimize(&phase1, &vec![true; cols]);
    let infeasibility: Rational = (0..m).filter(|&i| tab.basis[i] >= n).map(|i| tab.t[i][cols].clone()).sum();
    if infeasibility.is_positive() {
        let d = tab.reduced_costs(&phase1);
        let y = (0..m).map(|i| (Rational::one() - &d[n + i]) * &sign[i]).collect();
        return LpOutcome::Infeasible { y };
    }

    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant and dropped.
    let mut i = 0;
    while i < tab.t.len() {
        if tab.basis[i] >= n {
            if let Some(c) = (0..n).find(|&j| !tab.t[i][j].is_zero()) {
                tab.pivot(i, c);
            } else {
                tab.t.remove(i);
                tab.basis.remove(i);
                continue;
            }
        }
        i += 1;
    }

    let mut phase2 = cost.to_vec();
    phase2.extend(std::iter::repeat(Rational::zero()).take(m));
    let may_enter: Vec<bool> = (0..cols).map(|j| j < n).collect();
    if !tab.optimize(&phase2, &may_enter) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bcol) in tab.basis.iter().enumerate() {
        if bcol < n {
            x[bcol] = tab.t[i][cols].clone();
        }
    }
    let value = x.iter().zip(cost).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { x, value }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn rows(r: &[&[i64]]) -> Vec<Vec<Rational>> {
        r.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_optimum() {
        // min x + y subject to x + 2y - s = 4, x >= 0, y >= 0, s >= 0.
        let a = rows(&[&[1, 2, -1]]);
        let out = solve(&a, &[int(4)], &[int(1), int(1), int(0)]);
        assert_eq!(out, LpOutcome::Optimal { x: vec![int(0), int(2), int(0)], value: int(2) });
    }

    #[test]
    fn infeasible_with_certificate() {
        // x + y = 1 and x + y = 2.
        let a = rows(&[&[1, 1], &[1, 1]]);
        let b = [int(1), int(2)];
        match solve(&a, &b, &[int(0), int(0)]) {
            LpOutcome::Infeasible { y } => assert!(certifies_infeasible(&a, &b, &y)),
            other => panic!("expected infeasible, got {other:?}"),
        }
        // -x = 3 with x >= 0.
        let a = rows(&[&[-1]]);
        let b = [int(3)];
        match solve(&a, &b, &[int(1)]) {
            LpOutcome::Infeasible { y } => assert!(certifies_infeasible(&a, &b, &y)),
            other => panic!("expected infeasible, got {other:?}"),
        }
    }

    #[test]
    fn redundant_rows_and_unbounded() {
        let a = rows(&[&[1, 1], &[2, 2]]);
        assert!(matches!(solve(&a, &[int(1), int(2)], &[int(1), int(0)]), LpOutcome::Optimal { .. }));
        let a = rows(&[&[1, -1]]);
        assert_eq!(solve(&a, &[int(0)], &[int(-1), int(0)]), LpOutcome::Unbounded);
    }
}
