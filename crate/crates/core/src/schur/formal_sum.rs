use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::weight::{DominantWeight, Weight};
use crate::error::{Error, Result};

/// An integer-linear combination of keys with no zero entries stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FormalSum<K: Ord> {
    terms: BTreeMap<K, i64>,
}

/// Formal sum of `GL(n)` irreducibles, keyed by highest weight.
pub type RepSum = FormalSum<Weight>;

impl<K: Ord> Default for FormalSum<K> {
    fn default() -> Self {
        FormalSum {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> FormalSum<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(key: K, mult: i64) -> Self {
        let mut s = Self::new();
        s.add_term(key, mult);
        s
    }

    pub fn add_term(&mut self, key: K, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(mult);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += mult;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &FormalSum<K>, scale: i64) {
        for (k, m) in &other.terms {
            self.add_term(k.clone(), m * scale);
        }
    }

    pub fn scaled(&self, scale: i64) -> FormalSum<K> {
        let mut out = FormalSum::new();
        out.add_assign_scaled(self, scale);
        out
    }

    pub fn mult(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, m)| (k, *m))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when every multiplicity is positive, i.e. an honest representation.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&m| m > 0)
    }

    /// `self <= other` as multisets: every multiplicity of `self` is covered.
    pub fn is_contained_in(&self, other: &FormalSum<K>) -> bool {
        self.terms.iter().all(|(k, &m)| other.mult(k) >= m)
    }

    pub fn map_keys<J: Ord + Clone>(&self, mut f: impl FnMut(&K) -> J) -> FormalSum<J> {
        let mut out = FormalSum::new();
        for (k, m) in self.iter() {
            out.add_term(f(k), m);
        }
        out
    }
}

impl<K: Ord + Clone> std::ops::Add for &FormalSum<K> {
    type Output = FormalSum<K>;
    fn add(self, rhs: &FormalSum<K>) -> FormalSum<K> {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, 1);
        out
    }
}

impl<K: Ord + Clone> std::ops::Sub for &FormalSum<K> {
    type Output = FormalSum<K>;
    fn sub(self, rhs: &FormalSum<K>) -> FormalSum<K> {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, -1);
        out
    }
}

impl<K: Ord + Clone> FromIterator<(K, i64)> for FormalSum<K> {
    fn from_iter<I: IntoIterator<Item = (K, i64)>>(iter: I) -> Self {
        let mut out = FormalSum::new();
        for (k, m) in iter {
            out.add_term(k, m);
        }
        out
    }
}

impl<K: Ord + fmt::Display> fmt::Display for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, m)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if *m != 1 {
                write!(f, "{m}*")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for FormalSum<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// `Σ^{s_weight} S^∨ ⊗ Σ^{v_weight} V [shift] {cstar}` on `Gr(2, d)`.
///
/// `s_weight` is always the normal form on `S^∨`; `O(m)` adds `(m, m)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct SchurTerm {
    pub s_weight: DominantWeight,
    pub v_weight: DominantWeight,
    pub shift: i64,
    pub cstar: i64,
}

impl SchurTerm {
    pub fn new(s_weight: DominantWeight, v_weight: DominantWeight, shift: i64, cstar: i64) -> Self {
        SchurTerm {
            s_weight,
            v_weight,
            shift,
            cstar,
        }
    }

    /// A bare `Σ^α S^∨` with trivial `V`-factor, no shift and no grading.
    pub fn bundle(s_weight: DominantWeight, d: usize) -> Self {
        SchurTerm::new(s_weight, DominantWeight::new(Weight::zero(d)).unwrap(), 0, 0)
    }

    pub fn d(&self) -> usize {
        self.v_weight.len()
    }
}

impl fmt::Display for SchurTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S^({})", self.s_weight)?;
        if self.v_weight.parts().iter().any(|&p| p != 0) {
            write!(f, "⊗V^({})", self.v_weight)?;
        }
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        if self.cstar != 0 {
            write!(f, "{{{}}}", self.cstar)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SchurEntry {
    #[serde(flatten)]
    term: SchurTerm,
    mult: i64,
}

impl Serialize for FormalSum<SchurTerm> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(t, m)| SchurEntry {
            term: t.clone(),
            mult: m,
        }))
    }
}

impl<'de> Deserialize<'de> for FormalSum<SchurTerm> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<SchurEntry>::deserialize(deserializer)?;
        Ok(entries.into_iter().map(|e| (e.term, e.mult)).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct RepEntry {
    weight: Weight,
    mult: i64,
}

impl Serialize for FormalSum<Weight> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(w, m)| RepEntry {
            weight: w.clone(),
            mult: m,
        }))
    }
}

impl<'de> Deserialize<'de> for FormalSum<Weight> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<RepEntry>::deserialize(deserializer)?;
        Ok(entries.into_iter().map(|e| (e.weight, e.mult)).collect())
    }
}

/// Whether a rank-2 symmetric power is taken of `S` or of `S^∨`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rank2Base {
    Taut,
    Dual,
}

/// Normal form on `S^∨` of `Sym^m S^∨(t)` or `Sym^m S(t)`, using `S ≅ S^∨(-1)`.
///
/// `Sym^m S^∨(t) ↦ (m+t, t)` and `Sym^m S(t) ↦ (t, t-m)`.
pub fn normalize_rank2(m: i64, t: i64, base: Rank2Base) -> Result<DominantWeight> {
    if m < 0 {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            min: 0,
            max: i64::MAX,
        });
    }
    let parts = match base {
        Rank2Base::Dual => [m + t, t],
        Rank2Base::Taut => [t, t - m],
    };
    let w = DominantWeight::try_from(parts);
    debug_assert!(w.is_ok(), "rank-2 normal form must be dominant");
    w
}
