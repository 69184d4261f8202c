//! Exact linear algebra: fraction-free elimination over the integers and a
//! division-free determinant over any commutative ring.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Ring;
use crate::Rational;

/// Scales a rational row by the lcm of its denominators.
pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
}

/// Fraction-free (Bareiss) row echelon form.
///
/// Returns the echelon rows (only the `rank` non-zero ones) and the pivot
/// column of each. Every division performed is exact.
pub fn bareiss_echelon(mut rows: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        for i in r + 1..rows.len() {
            let factor = rows[i][c].clone();
            for j in c..ncols {
                let v = &piv * &rows[i][j] - &factor * &rows[r][j];
                rows[i][j] = v / &prev;
            }
            // columns left of c are zero below row r already
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    bareiss_echelon(rows.iter().map(|r| integer_row(r)).collect()).1.len()
}

/// Primitive form of an integer vector: divided by the gcd of its entries,
/// first non-zero entry positive.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    v.iter().map(|x| if sign { -(x / &g) } else { x / &g }).collect()
}

/// Division-free determinant (Bird's algorithm), `O(n^4)` ring operations.
pub fn determinant<R: Ring>(a: &[Vec<R>]) -> R {
    let n = a.len();
    if n == 0 {
        return R::one();
    }
    let mut x: Vec<Vec<R>> = a.to_vec();
    for _ in 1..n {
        // mu(X): strictly upper part of X, diagonal -(sum of later diagonals)
        let mut mu = vec![vec![R::zero(); n]; n];
        let mut tail = R::zero();
        for i in (0..n).rev() {
            mu[i][i] = -tail.clone();
            tail = tail + x[i][i].clone();
            for j in i + 1..n {
                mu[i][j] = x[i][j].clone();
            }
        }
        let mut next = vec![vec![R::zero(); n]; n];
        for i in 0..n {
            for k in i..n {
                if mu[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !a[k][j].is_zero() {
                        next[i][j].add_mul(&mu[i][k], &a[k][j]);
                    }
                }
            }
        }
        x = next;
    }
    let d = x[0][0].clone();
    if n.is_multiple_of(2) {
        -d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    // independent oracle: cofactor expansion
    fn laplace(a: &[Vec<Rational>]) -> Rational {
        let n = a.len();
        if n == 0 {
            return q(1);
        }
        let mut acc = q(0);
        for j in 0..n {
            let minor: Vec<Vec<Rational>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = a[0][j].clone() * laplace(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    // independent oracle: Gauss-Jordan over the rationals
    fn naive_rank(rows: &[Vec<Rational>]) -> usize {
        let mut m = rows.to_vec();
        let mut r = 0;
        let ncols = m.first().map_or(0, |x| x.len());
        for c in 0..ncols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            let piv = m[r][c].clone();
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone() / piv.clone();
                    for j in 0..ncols {
                        let v = m[r][j].clone() * f.clone();
                        m[i][j] = m[i][j].clone() - v;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn lcg(seed: &mut u64) -> i64 {
        *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((*seed >> 33) % 7) as i64 - 3
    }

    #[test]
    fn determinant_matches_laplace() {
        let mut s = 11;
        for n in 0..6 {
            for _ in 0..5 {
                let a: Vec<Vec<Rational>> =
                    (0..n).map(|_| (0..n).map(|_| q(lcg(&mut s))).collect()).collect();
                assert_eq!(determinant(&a), laplace(&a), "n = {n}");
            }
        }
    }

    #[test]
    fn rank_matches_gauss_jordan() {
        let mut s = 5;
        for rows in 1..6 {
            for cols in 1..6 {
                let mut a: Vec<Vec<Rational>> =
                    (0..rows).map(|_| (0..cols).map(|_| q(lcg(&mut s)) / q(2)).collect()).collect();
                if rows > 2 {
                    // force a dependency
                    let dep: Vec<Rational> =
                        a[0].iter().zip(&a[1]).map(|(x, y)| x.clone() * q(3) - y.clone()).collect();
                    a[2] = dep;
                }
                assert_eq!(rank(&a), naive_rank(&a));
            }
        }
    }

    #[test]
    fn primitive_normalizes() {
        let v: Vec<BigInt> = vec![0.into(), (-4).into(), 6.into()];
        assert_eq!(primitive(&v), vec![BigInt::from(0), 2.into(), (-3).into()]);
    }
}
