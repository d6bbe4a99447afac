//! Exact integer matrices: products, rank, determinant and linear solves over `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..b.len()).map(|t| a[i][t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mul_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

pub fn sub(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn is_zero(a: &Matrix) -> bool {
    a.iter().flatten().all(|&x| x == 0)
}

pub fn transpose(a: &Matrix) -> Matrix {
    let m = a.first().map_or(0, Vec::len);
    (0..m).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn rank_wide(a: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    eliminate(&mut m).len()
}

fn to_rational(a: &Matrix) -> Vec<Vec<BigRational>> {
    a.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect()
}

/// Row-reduce in place and return the pivot columns.
fn eliminate(m: &mut [Vec<BigRational>]) -> Vec<usize> {
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..cols {
                    let delta = &f * &m[row][j];
                    m[i][j] = &m[i][j] - delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

pub fn rank(a: &Matrix) -> usize {
    eliminate(&mut to_rational(a)).len()
}

/// Bareiss fraction-free elimination.
pub fn determinant(a: &Matrix) -> BigInt {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &m[n - 1][n - 1]
}

/// Unique solution of `a x = b` for square invertible `a`, required to be integral.
pub fn solve_integral(a: &Matrix, b: &[i64]) -> Result<Vec<i64>> {
    let n = a.len();
    let mut m = to_rational(a);
    for (row, &rhs) in m.iter_mut().zip(b) {
        row.push(BigRational::from_integer(BigInt::from(rhs)));
    }
    let pivots = eliminate(&mut m);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return Err(Error::Consistency("singular system".to_string()));
    }
    m.iter()
        .map(|row| {
            let x = &row[n];
            if !x.is_integer() {
                return Err(Error::NonIntegral(x.to_string()));
            }
            x.to_integer()
                .to_i64()
                .ok_or_else(|| Error::Consistency(format!("coefficient {x} overflows")))
        })
        .collect()
}

/// Dimension of the rational kernel.
pub fn nullity(a: &Matrix) -> usize {
    a.first().map_or(0, Vec::len) - rank(a)
}

pub fn is_unimodular(a: &Matrix) -> bool {
    determinant(a).abs().is_one()
}
