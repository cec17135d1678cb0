use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{ExactError, Rational};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// The all-ones matrix `J_n`.
    pub fn all_ones(n: usize) -> Self {
        Self { rows: n, cols: n, data: vec![Rational::one(); n * n] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Integer rows divided by a common denominator: `(1/den) * rows`.
    pub fn from_scaled_rows(den: i64, rows: &[Vec<i64>]) -> Result<Self, ExactError> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(ExactError::ShapeMismatch("ragged rows".into()));
        }
        let den = BigInt::from(den);
        let data = rows
            .iter()
            .flatten()
            .map(|&x| BigRational::new(BigInt::from(x), den.clone()))
            .collect();
        Self::new(n, cols, data)
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self, ExactError> {
        Self::from_scaled_rows(1, rows)
    }

    /// `(1/den) * circulant(first_row)`: row `i` is the first row shifted right by `i`.
    pub fn circulant(den: i64, first_row: &[i64]) -> Self {
        let n = first_row.len();
        let rows: Vec<Vec<i64>> =
            (0..n).map(|i| (0..n).map(|j| first_row[(j + n - i) % n]).collect()).collect();
        Self::from_scaled_rows(den, &rows).expect("square by construction")
    }

    /// Block circulant: block `(i, j)` is `blocks[(j - i) mod m]`.
    pub fn block_circulant(blocks: &[RatMatrix]) -> Result<Self, ExactError> {
        let m = blocks.len();
        let k = blocks.first().map_or(0, |b| b.rows);
        if blocks.iter().any(|b| b.rows != k || b.cols != k) {
            return Err(ExactError::ShapeMismatch("blocks must be square of equal order".into()));
        }
        Ok(Self::from_fn(m * k, m * k, |i, j| {
            let (bi, bj) = (i / k, j / k);
            blocks[(bj + m - bi) % m].get(i % k, j % k).clone()
        }))
    }

    /// Block-diagonal matrix `diag(blocks...)`.
    pub fn direct_sum(blocks: &[RatMatrix]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(n, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.data[(r0 + i) * c + c0 + j] = b.get(i, j).clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Assembles a matrix from a grid of blocks with compatible shapes.
    pub fn from_blocks(grid: &[Vec<RatMatrix>]) -> Result<Self, ExactError> {
        let heights: Vec<usize> = grid.iter().map(|row| row[0].rows).collect();
        let widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        for (bi, row) in grid.iter().enumerate() {
            if row.len() != widths.len() {
                return Err(ExactError::ShapeMismatch("ragged block grid".into()));
            }
            for (bj, b) in row.iter().enumerate() {
                if b.rows != heights[bi] || b.cols != widths[bj] {
                    return Err(ExactError::ShapeMismatch(format!("block ({bi}, {bj})")));
                }
            }
        }
        let n: usize = heights.iter().sum();
        let c: usize = widths.iter().sum();
        let mut m = Self::zeros(n, c);
        let mut r0 = 0;
        for (bi, row) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in row.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        m.data[(r0 + i) * c + c0 + j] = b.get(i, j).clone();
                    }
                }
                c0 += widths[bj];
            }
            r0 += heights[bi];
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * factor).collect() }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.cols != other.rows {
            return Err(ExactError::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Pᵀ M P` for the permutation matrix of `perm`: entry `(i, j)` becomes `M[perm[i]][perm[j]]`.
    pub fn permute_symmetric(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        Self::from_fn(self.rows, self.cols, |i, j| self.get(perm[i], perm[j]).clone())
    }

    /// Rows reordered by `row_perm` and columns by `col_perm`.
    pub fn permute(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self.get(row_perm[i], col_perm[j]).clone())
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }

    /// Symmetric, zero diagonal, every entry 0 or 1.
    pub fn is_adjacency_matrix(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let one = Rational::one();
        for i in 0..self.rows {
            if !self.get(i, i).is_zero() {
                return false;
            }
            for j in 0..self.cols {
                let x = self.get(i, j);
                if (!x.is_zero() && *x != one) || x != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Integer entries, if every entry is integral.
    pub fn to_bigint_rows(&self) -> Result<Vec<Vec<BigInt>>, ExactError> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                let x = self.get(i, j);
                if !x.is_integer() {
                    return Err(ExactError::NonIntegral { row: i, col: j });
                }
                row.push(x.to_integer());
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Least common multiple of all entry denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.data.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// `ℓ·M` as machine integers together with `ℓ`, where `ℓ` is the
    /// common denominator. `None` if anything overflows `i64`.
    pub fn to_scaled(&self) -> Option<ScaledMatrix> {
        let den = self.common_denominator();
        let scale = den.to_i64()?;
        let mut entries = Vec::with_capacity(self.data.len());
        for x in &self.data {
            let v = (x.numer() * (&den / x.denom())).to_i64()?;
            entries.push(v);
        }
        Some(ScaledMatrix { rows: self.rows, cols: self.cols, scale, entries })
    }

    /// Renders `ℓ·M` with the scale factor in front, e.g. `1/2 * [[1, -1], ...]`.
    pub fn to_scaled_string(&self) -> String {
        let den = self.common_denominator();
        let mut s = String::new();
        if !den.is_one() {
            s.push_str(&format!("1/{den} * "));
        }
        s.push('[');
        for i in 0..self.rows {
            if i > 0 {
                s.push_str(", ");
            }
            s.push('[');
            for j in 0..self.cols {
                if j > 0 {
                    s.push_str(", ");
                }
                let x = self.get(i, j);
                s.push_str(&(x.numer() * (&den / x.denom())).to_string());
            }
            s.push(']');
        }
        s.push(']');
        s
    }

    pub fn max_abs_entry(&self) -> Rational {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatMatrix({}x{}, {})", self.rows, self.cols, self.to_scaled_string())
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_mul(rhs).expect("matrix dimensions must agree")
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// A rational matrix stored as `entries / scale` with machine integers.
/// Used on the hot paths (compatibility searches, bulk switching).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ScaledMatrix {
    pub rows: usize,
    pub cols: usize,
    pub scale: i64,
    pub entries: Vec<i64>,
}

impl ScaledMatrix {
    #[inline]
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn to_rat(&self) -> RatMatrix {
        let den = BigInt::from(self.scale);
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .entries
                .iter()
                .map(|&x| BigRational::new(BigInt::from(x), den.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    #[test]
    fn circulant_rows_shift_right() {
        let c = RatMatrix::circulant(1, &[1, 2, 3]);
        assert_eq!(c.row(1), &[int(3), int(1), int(2)]);
        assert_eq!(c.row(2), &[int(2), int(3), int(1)]);
    }

    #[test]
    fn scaled_round_trip() {
        let m = RatMatrix::from_scaled_rows(4, &[vec![1, 2], vec![-3, 4]]).unwrap();
        let s = m.to_scaled().unwrap();
        assert_eq!(s.scale, 4);
        assert_eq!(s.entries, vec![1, 2, -3, 4]);
        assert_eq!(s.to_rat(), m);
        assert_eq!(*m.get(0, 1), ratio(1, 2));
    }

    #[test]
    fn product_and_transpose() {
        let a = RatMatrix::from_int_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        let b = &a * &a.transpose();
        assert_eq!(b, RatMatrix::from_int_rows(&[vec![5, 11], vec![11, 25]]).unwrap());
        assert!(a.checked_mul(&RatMatrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn block_circulant_layout() {
        let j = RatMatrix::all_ones(2);
        let o = RatMatrix::zeros(2, 2);
        let m = RatMatrix::block_circulant(&[j.clone(), o.clone()]).unwrap();
        assert_eq!(m, RatMatrix::from_blocks(&[vec![j.clone(), o.clone()], vec![o, j]]).unwrap());
    }
}
