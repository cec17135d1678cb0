use crate::exact::ScaledMatrix;
use crate::perm::Permutation;

fn sorted_row(m: &ScaledMatrix, i: usize) -> Vec<i64> {
    let mut r: Vec<i64> = (0..m.cols).map(|j| m.at(i, j)).collect();
    r.sort_unstable();
    r
}

fn sorted_col(m: &ScaledMatrix, j: usize) -> Vec<i64> {
    let mut c: Vec<i64> = (0..m.rows).map(|i| m.at(i, j)).collect();
    c.sort_unstable();
    c
}

fn same_shape(a: &ScaledMatrix, b: &ScaledMatrix) -> bool {
    a.rows == b.rows && a.cols == b.cols && a.scale == b.scale && a.rows == a.cols
}

/// A permutation `p` with `a[p(i)][p(j)] = b[i][j]` for all `i, j`.
pub fn simultaneous_permutation(a: &ScaledMatrix, b: &ScaledMatrix) -> Option<Permutation> {
    if !same_shape(a, b) {
        return None;
    }
    let n = a.rows;
    let key = |m: &ScaledMatrix, i: usize| (m.at(i, i), sorted_row(m, i), sorted_col(m, i));
    let ka: Vec<_> = (0..n).map(|i| key(a, i)).collect();
    let kb: Vec<_> = (0..n).map(|i| key(b, i)).collect();

    fn extend(
        a: &ScaledMatrix,
        b: &ScaledMatrix,
        ka: &[(i64, Vec<i64>, Vec<i64>)],
        kb: &[(i64, Vec<i64>, Vec<i64>)],
        p: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = p.len();
        if i == a.rows {
            return true;
        }
        for x in 0..a.rows {
            if used[x] || ka[x] != kb[i] {
                continue;
            }
            if p.iter().enumerate().any(|(k, &y)| a.at(x, y) != b.at(i, k) || a.at(y, x) != b.at(k, i)) {
                continue;
            }
            used[x] = true;
            p.push(x);
            if extend(a, b, ka, kb, p, used) {
                return true;
            }
            p.pop();
            used[x] = false;
        }
        false
    }

    let mut p = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(a, b, &ka, &kb, &mut p, &mut used).then(|| Permutation::from_images(p).expect("bijection"))
}

/// Row and column permutations `(s, t)` with `a[s(i)][t(j)] = b[i][j]`.
/// Two switching matrices related this way give the same switched graphs
/// up to relabelling of the switching set before and after.
pub fn independent_permutations(a: &ScaledMatrix, b: &ScaledMatrix) -> Option<(Permutation, Permutation)> {
    if !same_shape(a, b) {
        return None;
    }
    let n = a.rows;
    let ra: Vec<_> = (0..n).map(|i| sorted_row(a, i)).collect();
    let rb: Vec<_> = (0..n).map(|i| sorted_row(b, i)).collect();

    // Columns restricted to the rows chosen so far must agree as multisets.
    fn column_prefixes(m: &ScaledMatrix, rows: &[usize]) -> Vec<Vec<i64>> {
        let mut cols: Vec<Vec<i64>> = (0..m.cols).map(|j| rows.iter().map(|&i| m.at(i, j)).collect()).collect();
        cols.sort_unstable();
        cols
    }

    fn extend(
        a: &ScaledMatrix,
        b: &ScaledMatrix,
        ra: &[Vec<i64>],
        rb: &[Vec<i64>],
        s: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = s.len();
        if i == a.rows {
            return true;
        }
        let b_rows: Vec<usize> = (0..=i).collect();
        let target = column_prefixes(b, &b_rows);
        for x in 0..a.rows {
            if used[x] || ra[x] != rb[i] {
                continue;
            }
            s.push(x);
            if column_prefixes(a, s) == target {
                used[x] = true;
                if extend(a, b, ra, rb, s, used) {
                    return true;
                }
                used[x] = false;
            }
            s.pop();
        }
        false
    }

    let mut s = Vec::with_capacity(n);
    let mut used = vec![false; n];
    if !extend(a, b, &ra, &rb, &mut s, &mut used) {
        return None;
    }
    // Match each column of b to an unused column of a with the same entries.
    let mut taken = vec![false; n];
    let mut t = Vec::with_capacity(n);
    for j in 0..n {
        let col: Vec<i64> = (0..n).map(|i| b.at(i, j)).collect();
        let y = (0..n).find(|&y| !taken[y] && (0..n).all(|i| a.at(s[i], y) == col[i]))?;
        taken[y] = true;
        t.push(y);
    }
    Some((Permutation::from_images(s).expect("bijection"), Permutation::from_images(t).expect("bijection")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::RatMatrix;

    fn scaled(den: i64, rows: &[Vec<i64>]) -> ScaledMatrix {
        RatMatrix::from_scaled_rows(den, rows).unwrap().to_scaled().unwrap()
    }

    #[test]
    fn recovers_a_simultaneous_relabelling() {
        let a = scaled(5, &[vec![3, 1, 2, -1], vec![-1, 3, 1, 2], vec![2, -1, 3, 1], vec![1, 2, -1, 3]]);
        let p = [2, 0, 3, 1];
        let b = a.to_rat().permute_symmetric(&p).to_scaled().unwrap();
        let found = simultaneous_permutation(&a, &b).unwrap();
        assert_eq!(a.to_rat().permute_symmetric(found.images()), b.to_rat());
    }

    #[test]
    fn transpose_needs_independent_permutations() {
        // A non-symmetric matrix whose transpose is not a simultaneous relabelling.
        let a = scaled(1, &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
        let id = scaled(1, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(simultaneous_permutation(&a, &id).is_none());
        let (s, t) = independent_permutations(&a, &id).unwrap();
        assert_eq!(a.to_rat().permute(s.images(), t.images()), id.to_rat());
    }

    #[test]
    fn different_scales_never_match() {
        let a = scaled(2, &[vec![1, 1], vec![1, 1]]);
        let b = scaled(1, &[vec![1, 0], vec![0, 1]]);
        assert!(simultaneous_permutation(&a, &b).is_none());
        assert!(independent_permutations(&a, &b).is_none());
    }
}
