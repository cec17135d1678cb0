use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{RatMatrix, Rational};

/// `Q Qᵀ = I`, checked exactly.
pub fn is_orthogonal(q: &RatMatrix) -> bool {
    q.is_square() && &(q * &q.transpose()) == &RatMatrix::identity(q.rows())
}

/// Orthogonal with every row summing to one (`QJ = J`).
pub fn is_regular_orthogonal(q: &RatMatrix) -> bool {
    if !q.is_square() {
        return false;
    }
    let one = Rational::one();
    let rows_sum_to_one = (0..q.rows()).all(|i| q.row(i).iter().sum::<Rational>() == one);
    rows_sum_to_one && is_orthogonal(q)
}

/// Smallest positive integer `ℓ` with `ℓQ` integral.
pub fn level(q: &RatMatrix) -> BigInt {
    q.common_denominator()
}

/// Components of the bipartite support graph (row vertices and column
/// vertices joined where the entry is nonzero). Each component is a pair
/// of sorted row and column index lists.
pub fn decomposition_blocks(q: &RatMatrix) -> Vec<(Vec<usize>, Vec<usize>)> {
    let (n, m) = (q.rows(), q.cols());
    let mut parent: Vec<usize> = (0..n + m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in 0..m {
            if !q.get(i, j).is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, n + j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> =
        std::collections::BTreeMap::new();
    for x in 0..n + m {
        let root = find(&mut parent, x);
        let entry = groups.entry(root).or_default();
        if x < n {
            entry.0.push(x);
        } else {
            entry.1.push(x - n);
        }
    }
    groups.into_values().collect()
}

/// True if, after permuting rows and columns, `Q` is block diagonal with at
/// least two blocks that are not identity matrices.
pub fn is_decomposable(q: &RatMatrix) -> bool {
    let one = Rational::one();
    let non_identity = decomposition_blocks(q)
        .into_iter()
        .filter(|(rows, cols)| !(rows.len() == 1 && cols.len() == 1 && *q.get(rows[0], cols[0]) == one))
        .count();
    non_identity >= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gm4() -> RatMatrix {
        RatMatrix::from_scaled_rows(
            2,
            &[vec![-1, 1, 1, 1], vec![1, -1, 1, 1], vec![1, 1, -1, 1], vec![1, 1, 1, -1]],
        )
        .unwrap()
    }

    #[test]
    fn identity_is_regular_orthogonal_level_one() {
        let i = RatMatrix::identity(5);
        assert!(is_regular_orthogonal(&i));
        assert_eq!(level(&i), BigInt::from(1));
        assert!(!is_decomposable(&i));
    }

    #[test]
    fn gm4_matrix() {
        let q = gm4();
        assert!(is_regular_orthogonal(&q));
        assert_eq!(level(&q), BigInt::from(2));
        assert!(!is_decomposable(&q));
        assert!(is_decomposable(&RatMatrix::direct_sum(&[q.clone(), q])));
    }

    #[test]
    fn all_ones_is_not_orthogonal() {
        assert!(!is_regular_orthogonal(&RatMatrix::all_ones(2)));
        assert!(!is_regular_orthogonal(&RatMatrix::zeros(2, 3)));
    }

    #[test]
    fn orthogonal_but_not_regular() {
        let flip = RatMatrix::from_int_rows(&[vec![-1, 0], vec![0, 1]]).unwrap();
        assert!(is_orthogonal(&flip));
        assert!(!is_regular_orthogonal(&flip));
    }

    #[test]
    fn level_of_direct_sum_is_lcm() {
        let third = RatMatrix::from_scaled_rows(3, &[vec![1, 2, 2], vec![2, 1, -2], vec![2, -2, 1]]).unwrap();
        let s = RatMatrix::direct_sum(&[gm4(), third.clone()]);
        assert_eq!(level(&s), BigInt::from(6));
        assert_eq!(level(&third), BigInt::from(3));
    }
}
