use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{ExactError, IntPolynomial, RatMatrix};

/// `det(xI - A)` for a square matrix with integral entries, computed with
/// the division-free Samuelson–Berkowitz recurrence on big integers.
pub fn charpoly(a: &RatMatrix) -> Result<IntPolynomial, ExactError> {
    if !a.is_square() {
        return Err(ExactError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let rows = a.to_bigint_rows()?;
    Ok(charpoly_berkowitz(&rows))
}

/// Samuelson–Berkowitz on a square big-integer matrix.
pub fn charpoly_berkowitz(a: &[Vec<BigInt>]) -> IntPolynomial {
    let n = a.len();
    // Coefficients highest degree first.
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..n {
        let mut t: Vec<BigInt> = Vec::with_capacity(k + 2);
        t.push(BigInt::one());
        t.push(-&a[k][k]);
        let mut v: Vec<BigInt> = (0..k).map(|i| a[i][k].clone()).collect();
        for _ in 0..k {
            let dot: BigInt = (0..k).map(|i| &a[k][i] * &v[i]).sum();
            t.push(-dot);
            v = (0..k).map(|i| (0..k).map(|j| &a[i][j] * &v[j]).sum()).collect();
        }
        let mut next = vec![BigInt::zero(); k + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, cj) in c.iter().enumerate().take(i.min(k) + 1) {
                *slot += &t[i - j] * cj;
            }
        }
        c = next;
    }
    c.reverse();
    IntPolynomial::new(c)
}

/// `det(xI - A)` for an `n x n` machine-integer matrix, computed by Hessenberg
/// reduction modulo enough 31-bit primes to exceed twice a Hadamard-type
/// coefficient bound, then lifted with the Chinese remainder theorem.
pub fn charpoly_integer(n: usize, entries: &[i64]) -> IntPolynomial {
    assert_eq!(entries.len(), n * n, "charpoly_integer expects a square matrix");
    if n == 0 {
        return IntPolynomial::from_i64(&[1]);
    }
    // |c_k| <= sum over k-subsets of prod of row norms <= prod_i (1 + |row_i|).
    let mut bound = BigInt::one();
    for i in 0..n {
        let sq: u128 = entries[i * n..(i + 1) * n].iter().map(|&x| (x as i128 * x as i128) as u128).sum();
        let norm = (sq as f64).sqrt().ceil() as u128 + 1;
        bound *= BigInt::from(norm + 1);
    }
    let target = bound * 2u32;

    let mut modulus = BigInt::one();
    let mut residues: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    for &p in primes() {
        let reduced: Vec<u64> = entries.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect();
        let cp = charpoly_mod_p(n, reduced, p);
        let p_big = BigInt::from(p);
        let m_mod_p = (&modulus % &p_big).to_u64().expect("residue fits");
        let inv = mod_pow(m_mod_p, p - 2, p);
        for (x, &r) in residues.iter_mut().zip(&cp) {
            let x_mod_p = (&*x % &p_big).to_u64().expect("residue fits");
            let delta = (r + p - x_mod_p) % p * inv % p;
            *x += &modulus * BigInt::from(delta);
        }
        modulus *= p_big;
        if modulus > target {
            break;
        }
    }
    assert!(modulus > target, "ran out of CRT primes");
    let half = &modulus / 2u32;
    let coeffs = residues
        .into_iter()
        .map(|x| if x > half { x - &modulus } else { x })
        .collect();
    IntPolynomial::new(coeffs)
}

/// Characteristic polynomial modulo `p`, low degree first (length `n + 1`).
fn charpoly_mod_p(n: usize, mut h: Vec<u64>, p: u64) -> Vec<u64> {
    let at = |i: usize, j: usize| i * n + j;
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| h[at(i, m - 1)] != 0) else { continue };
        if piv != m {
            for j in 0..n {
                h.swap(at(piv, j), at(m, j));
            }
            for i in 0..n {
                h.swap(at(i, piv), at(i, m));
            }
        }
        let inv = mod_pow(h[at(m, m - 1)], p - 2, p);
        for i in m + 1..n {
            let u = h[at(i, m - 1)] * inv % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[at(i, j)] = (h[at(i, j)] + p - u * h[at(m, j)] % p) % p;
            }
            for r in 0..n {
                h[at(r, m)] = (h[at(r, m)] + u * h[at(r, i)]) % p;
            }
        }
    }
    // polys[m] is the characteristic polynomial of the leading m x m block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        let diag = h[at(m - 1, m - 1)];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = (next[k] + p - diag * c % p) % p;
        }
        let mut t = 1u64;
        for i in (1..m).rev() {
            t = t * h[at(i, i - 1)] % p;
            let coef = t * h[at(i - 1, m - 1)] % p;
            if coef == 0 {
                continue;
            }
            for (k, &c) in polys[i - 1].iter().enumerate() {
                next[k] = (next[k] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n >= 1")
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Descending primes below 2^31; 256 of them cover coefficient bounds far
/// beyond any matrix this crate handles.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(256);
        let mut candidate: u64 = (1 << 31) - 1;
        while out.len() < 256 {
            if is_prime(candidate) {
                out.push(candidate);
            }
            candidate -= 2;
        }
        out
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn is_monic(p: &IntPolynomial) -> bool {
        p.coefficients().last().is_some_and(|c| c.is_one() && !c.is_negative())
    }

    fn ints(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn single_edge() {
        let p = charpoly_berkowitz(&ints(&[vec![0, 1], vec![1, 0]]));
        assert_eq!(p, IntPolynomial::from_i64(&[-1, 0, 1]));
        assert!(is_monic(&p));
    }

    #[test]
    fn triangle() {
        let rows = vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]];
        let expected = IntPolynomial::from_i64(&[-2, -3, 0, 1]);
        assert_eq!(charpoly_berkowitz(&ints(&rows)), expected);
        assert_eq!(charpoly_integer(3, &rows.concat()), expected);
    }

    #[test]
    fn non_symmetric_and_negative_entries() {
        // det(xI - A) for A = [[1,2],[3,4]] is x^2 - 5x - 2.
        let rows = vec![vec![1, 2], vec![3, 4]];
        let expected = IntPolynomial::from_i64(&[-2, -5, 1]);
        assert_eq!(charpoly_berkowitz(&ints(&rows)), expected);
        assert_eq!(charpoly_integer(2, &rows.concat()), expected);
    }

    #[test]
    fn rejects_bad_input() {
        let m = RatMatrix::zeros(2, 3);
        assert!(matches!(charpoly(&m), Err(ExactError::NotSquare { .. })));
        let h = RatMatrix::from_scaled_rows(2, &[vec![1, 0], vec![0, 2]]).unwrap();
        assert!(matches!(charpoly(&h), Err(ExactError::NonIntegral { row: 0, col: 0 })));
    }

    #[test]
    fn hessenberg_needs_pivoting() {
        // Zero sub-diagonal entries force the row/column swap path.
        let rows = vec![
            vec![0, 0, 0, 1],
            vec![0, 0, 1, 0],
            vec![0, 1, 0, 1],
            vec![1, 0, 1, 0],
        ];
        let b = charpoly_berkowitz(&ints(&rows));
        assert_eq!(charpoly_integer(4, &rows.concat()), b);
    }
}
