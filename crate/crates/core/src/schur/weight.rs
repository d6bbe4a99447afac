use std::fmt;
use std::ops::{Add, Deref, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An integer weight of `GL(n)`; `n` is the length of the sequence.
///
/// Ordering is lexicographic, which is total on weights of equal length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(parts: Vec<i64>) -> Self {
        Weight(parts)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `(c, c, ..., c)`, the weight of `det^c`.
    pub fn constant(n: usize, c: i64) -> Self {
        Weight(vec![c; n])
    }

    /// `(1^j, 0^(n-j))`, the weight of the `j`-th exterior power.
    pub fn wedge(j: usize, n: usize) -> Self {
        let mut parts = vec![0; n];
        parts[..j].iter_mut().for_each(|p| *p = 1);
        Weight(parts)
    }

    /// `(k, 0, ..., 0)`, the weight of `Sym^k`.
    pub fn sym(k: i64, n: usize) -> Self {
        let mut parts = vec![0; n];
        if n > 0 {
            parts[0] = k;
        }
        Weight(parts)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Weight of the dual representation: negate and reverse.
    pub fn dual(&self) -> Weight {
        Weight(self.0.iter().rev().map(|p| -p).collect())
    }

    pub fn shifted(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|p| p + c).collect())
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Weight(parts)
    }

    pub fn into_parts(self) -> Vec<i64> {
        self.0
    }

    pub fn expect_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<i64>> for Weight {
    fn from(parts: Vec<i64>) -> Self {
        Weight(parts)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(parts: [i64; N]) -> Self {
        Weight(parts.to_vec())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "adding weights of different length");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "subtracting weights of different length");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|p| -p).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::ParseWeight(s.to_string()))
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A non-increasing weight, i.e. the highest weight of an irreducible.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub fn new(weight: Weight) -> Result<Self> {
        if weight.is_dominant() {
            Ok(DominantWeight(weight))
        } else {
            Err(Error::NotDominant(weight))
        }
    }

    pub fn as_weight(&self) -> &Weight {
        &self.0
    }

    pub fn into_weight(self) -> Weight {
        self.0
    }
}

impl TryFrom<Weight> for DominantWeight {
    type Error = Error;
    fn try_from(w: Weight) -> Result<Self> {
        DominantWeight::new(w)
    }
}

impl<const N: usize> TryFrom<[i64; N]> for DominantWeight {
    type Error = Error;
    fn try_from(parts: [i64; N]) -> Result<Self> {
        DominantWeight::new(Weight::from(parts))
    }
}

impl Deref for DominantWeight {
    type Target = Weight;
    fn deref(&self) -> &Weight {
        &self.0
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl Serialize for DominantWeight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DominantWeight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let w = Weight::deserialize(deserializer)?;
        DominantWeight::new(w).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let w: Weight = "2,-1, 0".parse().unwrap();
        assert_eq!(w, Weight::from([2, -1, 0]));
        assert_eq!(w.to_string(), "2,-1,0");
        assert!("2,x".parse::<Weight>().is_err());
    }

    #[test]
    fn dominance() {
        assert!(Weight::from([3, 3, -1]).is_dominant());
        assert!(!Weight::from([0, 0, 0, 1]).is_dominant());
        assert!(DominantWeight::try_from([1, 2]).is_err());
    }

    #[test]
    fn dual_reverses_and_negates() {
        assert_eq!(Weight::from([2, 1, 0]).dual(), Weight::from([0, -1, -2]));
        assert_eq!(Weight::wedge(2, 4), Weight::from([1, 1, 0, 0]));
    }
}
