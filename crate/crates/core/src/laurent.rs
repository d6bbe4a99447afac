//! Integer Laurent polynomials in the fibre-scaling variable `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// `Σ c_e q^e`, stored as exponent → nonzero coefficient. Written as text,
/// e.g. `1 - q^4`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Laurent(BTreeMap<i64, i64>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn constant(c: i64) -> Self {
        Laurent::monomial(c, 0)
    }

    pub fn monomial(c: i64, e: i64) -> Self {
        let mut p = Laurent::zero();
        p.add_term(c, e);
        p
    }

    fn add_term(&mut self, c: i64, e: i64) {
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, c: i64) -> Self {
        self.0.iter().map(|(&e, &v)| (e, c * v)).collect()
    }

    pub fn shifted(&self, by: i64) -> Self {
        self.0.iter().map(|(&e, &v)| (e + by, v)).collect()
    }

    pub fn eval(&self, q: i64) -> Option<i128> {
        let q = q as i128;
        self.0.iter().try_fold(0i128, |acc, (&e, &c)| {
            let term = if e >= 0 {
                q.checked_pow(e as u32)?
            } else if q.abs() == 1 {
                q.pow((-e) as u32)
            } else {
                return None;
            };
            acc.checked_add(term.checked_mul(c as i128)?)
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }
}

impl FromIterator<(i64, i64)> for Laurent {
    fn from_iter<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut p = Laurent::zero();
        for (e, c) in iter {
            p.add_term(c, e);
        }
        p
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        self.terms().chain(rhs.terms()).collect()
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        self + &(-rhs)
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scaled(-1)
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            match (i, sign) {
                (0, "-") => write!(f, "-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            match (e, abs) {
                (0, a) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, a) => write!(f, "{a}q")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, a) => write!(f, "{a}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Laurent {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let bad = || Error::ParseLaurent(text.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Laurent::zero());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut out = Laurent::zero();
        for t in terms {
            let (sign, body) = match t.as_bytes().first() {
                Some(b'-') => (-1, &t[1..]),
                Some(b'+') => (1, &t[1..]),
                _ => (1, t),
            };
            let (coeff, exp) = match body.split_once('q') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some((c, e)) => {
                    let c = if c.is_empty() { 1 } else { c.parse().map_err(|_| bad())? };
                    let e = match e.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| bad())?,
                        None if e.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c, e)
                }
            };
            out.add_term(sign * coeff, exp);
        }
        Ok(out)
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        String::deserialize(deserializer)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type LaurentMatrix = Vec<Vec<Laurent>>;

pub fn mat_mul(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Laurent::zero(), |acc, (x, brow)| &acc + &(x * &brow[j]))
                })
                .collect()
        })
        .collect()
}

pub fn mat_identity(n: usize) -> LaurentMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| Laurent::constant(i64::from(i == j))).collect())
        .collect()
}

pub fn mat_sub(a: &LaurentMatrix, b: &LaurentMatrix) -> LaurentMatrix {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn mat_scaled(a: &LaurentMatrix, c: &Laurent) -> LaurentMatrix {
    a.iter().map(|r| r.iter().map(|x| x * c).collect()).collect()
}

pub fn mat_is_zero(a: &LaurentMatrix) -> bool {
    a.iter().flatten().all(Laurent::is_zero)
}

/// Specialize at an integer `q`; negative exponents only allow `q = ±1`.
pub fn mat_eval(a: &LaurentMatrix, q: i64) -> Option<Vec<Vec<i128>>> {
    a.iter()
        .map(|r| r.iter().map(|x| x.eval(q)).collect())
        .collect()
}

/// Rank over `Q(q)`: the rank at the generic point, found by specializing the
/// denominator-free matrix `q^N a` at several integers until it reaches the
/// number of nonzero columns.
pub fn mat_rank(a: &LaurentMatrix) -> usize {
    let shift = a
        .iter()
        .flatten()
        .filter_map(Laurent::min_exponent)
        .min()
        .unwrap_or(0)
        .min(0);
    let cleared: LaurentMatrix = a.iter().map(|r| r.iter().map(|x| x.shifted(-shift)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let upper = (0..cols)
        .filter(|&j| a.iter().any(|r| !r[j].is_zero()))
        .count()
        .min(a.len());
    let mut best = 0;
    for q in [2, 3, 5, 7, 11, 13, 17] {
        if let Some(m) = mat_eval(&cleared, q) {
            best = best.max(crate::linalg::rank_wide(&m));
        }
        if best == upper {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = &Laurent::constant(1) - &Laurent::monomial(1, -2);
        let b = &Laurent::constant(1) + &Laurent::monomial(1, -2);
        assert_eq!(&a * &b, &Laurent::constant(1) - &Laurent::monomial(1, -4));
        assert_eq!(a.to_string(), "-q^-2 + 1");
        assert_eq!("-q^-2 + 1".parse::<Laurent>().unwrap(), a);
        assert_eq!("3q - 2 + q^-1".parse::<Laurent>().unwrap().to_string(), "q^-1 - 2 + 3q");
        assert_eq!("0".parse::<Laurent>().unwrap(), Laurent::zero());
        assert_eq!(a.eval(1), Some(0));
        assert_eq!(b.eval(-1), Some(2));
        assert!((&a - &a).is_zero());
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<Laurent>(&json).unwrap(), a);
    }
}
