//! Borel–Weil–Bott on `Gr(r, d)` and Kapranov's exceptional collection.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::de::{self, Deserializer};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::report::CheckReport;
use crate::schur::{littlewood_richardson, weyl_dimension, DominantWeight, RepSum, Weight};

/// Cohomology of a homogeneous bundle: zero, or one degree carrying one irreducible.
///
/// `rep` is the highest weight of the `GL(V)`-representation written in terms of
/// `V^∨`, so `H^0(PV, O(m)) = Sym^m V^∨` has `rep = (m, 0, ..., 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BottResult {
    Zero,
    Cohomology { degree: usize, rep: DominantWeight },
}

impl BottResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, BottResult::Zero)
    }

    pub fn degree(&self) -> Option<usize> {
        match self {
            BottResult::Zero => None,
            BottResult::Cohomology { degree, .. } => Some(*degree),
        }
    }

    /// Dimension of the total cohomology.
    pub fn dimension(&self) -> u64 {
        match self {
            BottResult::Zero => 0,
            BottResult::Cohomology { rep, .. } => weyl_dimension(rep, rep.len()).unwrap(),
        }
    }

    /// Euler characteristic `Σ (-1)^i dim H^i`.
    pub fn euler_characteristic(&self) -> i64 {
        match self {
            BottResult::Zero => 0,
            BottResult::Cohomology { degree, .. } => {
                let sign = if degree % 2 == 0 { 1 } else { -1 };
                sign * self.dimension() as i64
            }
        }
    }
}

impl Serialize for BottResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BottResult::Zero => {
                let mut m = serializer.serialize_map(Some(1))?;
                m.serialize_entry("zero", &true)?;
                m.end()
            }
            BottResult::Cohomology { degree, rep } => {
                let mut m = serializer.serialize_map(Some(2))?;
                m.serialize_entry("degree", degree)?;
                m.serialize_entry("rep", rep.parts())?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for BottResult {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            zero: Option<bool>,
            degree: Option<usize>,
            rep: Option<Vec<i64>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        match raw {
            Raw {
                zero: Some(true), ..
            } => Ok(BottResult::Zero),
            Raw {
                degree: Some(degree),
                rep: Some(rep),
                ..
            } => Ok(BottResult::Cohomology {
                degree,
                rep: DominantWeight::new(Weight::new(rep)).map_err(de::Error::custom)?,
            }),
            _ => Err(de::Error::custom("expected {zero:true} or {degree, rep}")),
        }
    }
}

fn check_grassmannian(r: usize, d: usize) -> Result<()> {
    if r == 0 || r >= d {
        return Err(Error::OutOfRange {
            name: "r",
            value: r as i64,
            min: 1,
            max: d as i64 - 1,
        });
    }
    Ok(())
}

/// Cohomology of `Σ^α S^∨ ⊗ Σ^β (V/S)^∨` on `Gr(r, d)`.
///
/// The weight `(α, β)` is shifted by `ρ = (d-1, ..., 0)`; a repeated entry means
/// all cohomology vanishes, otherwise sorting by a permutation with `ℓ` inversions
/// puts everything in degree `ℓ`, with highest weight `sort(α, β + ρ) - ρ`.
pub fn bott(r: usize, d: usize, alpha: &Weight, beta: &Weight) -> Result<BottResult> {
    check_grassmannian(r, d)?;
    alpha.expect_len(r)?;
    beta.expect_len(d - r)?;
    let shifted: Vec<i64> = alpha
        .concat(beta)
        .parts()
        .iter()
        .enumerate()
        .map(|(i, p)| p + (d - 1 - i) as i64)
        .collect();

    let mut inversions = 0;
    for i in 0..d {
        for j in i + 1..d {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Equal => return Ok(BottResult::Zero),
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let rep: Vec<i64> = sorted
        .iter()
        .enumerate()
        .map(|(i, p)| p - (d - 1 - i) as i64)
        .collect();
    debug_assert!(inversions <= r * (d - r));
    Ok(BottResult::Cohomology {
        degree: inversions,
        rep: DominantWeight::new(Weight::new(rep))?,
    })
}

/// Cohomology of `Σ^α S^∨` on `Gr(r, d)` (trivial quotient factor).
pub fn bott_sub(r: usize, d: usize, alpha: &Weight) -> Result<BottResult> {
    bott(r, d, alpha, &Weight::zero(d - r))
}

/// `Ext^•_{Gr}(Σ^α S^∨, Σ^β S^∨)` by degree, as representations on `V^∨`.
pub fn ext_on_grassmannian(
    r: usize,
    d: usize,
    alpha: &Weight,
    beta: &Weight,
) -> Result<BTreeMap<usize, RepSum>> {
    let mut out: BTreeMap<usize, RepSum> = BTreeMap::new();
    for (mu, c) in littlewood_richardson(&alpha.dual(), beta, r)?.iter() {
        if let BottResult::Cohomology { degree, rep } = bott_sub(r, d, mu)? {
            out.entry(degree)
                .or_default()
                .add_term(rep.into_weight(), c);
        }
    }
    Ok(out)
}

/// Weight `α` of a Kapranov collection member `Σ^α S^∨`, `0 <= α_r <= ... <= α_1 <= d-r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CollectionWeight(DominantWeight);

impl CollectionWeight {
    pub fn new(alpha: Weight, r: usize, d: usize) -> Result<Self> {
        alpha.expect_len(r)?;
        let alpha = DominantWeight::new(alpha)?;
        for &p in alpha.parts() {
            if p < 0 || p > (d - r) as i64 {
                return Err(Error::OutsideTable {
                    weight: alpha.into_weight(),
                    reason: "collection weights satisfy 0 <= α <= (d-r, ..., d-r)",
                });
            }
        }
        Ok(CollectionWeight(alpha))
    }

    pub fn weight(&self) -> &Weight {
        self.0.as_weight()
    }

    pub fn dominant(&self) -> &DominantWeight {
        &self.0
    }
}

impl std::fmt::Display for CollectionWeight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// All `α` with `0 <= α <= α_top`, in increasing lexicographic order.
pub fn kapranov_collection(r: usize, d: usize) -> Result<Vec<CollectionWeight>> {
    check_grassmannian(r, d)?;
    let top = (d - r) as i64;
    fn rec(cap: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slots == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 0..=cap {
            cur.push(p);
            rec(p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(top, r, &mut Vec::new(), &mut raw);
    raw.sort();
    raw.into_iter()
        .map(|p| CollectionWeight::new(Weight::new(p), r, d))
        .collect()
}

/// A higher Ext between collection members.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtFailure {
    pub alpha: Weight,
    pub beta: Weight,
    pub mu: Weight,
    pub degree: usize,
    pub rep: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExceptionalReport {
    #[serde(flatten)]
    pub check: CheckReport<ExtFailure>,
    pub basis: Vec<Weight>,
    /// `hom_dims[i][j] = dim Hom(E_i, E_j)` over the collection order.
    pub hom_dims: Vec<Vec<u64>>,
}

/// Confirm that Kapranov's collection on `Gr(r, d)` has no higher Ext between
/// any ordered pair, and tabulate the `Hom` dimensions.
pub fn strong_exceptional_check(r: usize, d: usize) -> Result<ExceptionalReport> {
    let basis = kapranov_collection(r, d)?;
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
        .collect();
    let cells = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (basis[i].weight(), basis[j].weight());
            let mut hom = 0u64;
            let mut failures = Vec::new();
            for (mu, c) in littlewood_richardson(&a.dual(), b, r)?.iter() {
                match bott_sub(r, d, mu)? {
                    BottResult::Zero => {}
                    BottResult::Cohomology { degree: 0, rep } => {
                        hom += c as u64 * weyl_dimension(&rep, d)?;
                    }
                    BottResult::Cohomology { degree, rep } => failures.push(ExtFailure {
                        alpha: a.clone(),
                        beta: b.clone(),
                        mu: mu.clone(),
                        degree,
                        rep: rep.into_weight(),
                    }),
                }
            }
            Ok((i, j, hom, failures))
        })
        .collect::<Result<Vec<_>>>()?;

    let n = basis.len();
    let mut hom_dims = vec![vec![0; n]; n];
    let mut failures = Vec::new();
    for (i, j, hom, f) in cells {
        hom_dims[i][j] = hom;
        failures.extend(f);
    }
    Ok(ExceptionalReport {
        check: CheckReport::from_failures(pairs.len(), failures),
        basis: basis.iter().map(|b| b.weight().clone()).collect(),
        hom_dims,
    })
}

pub(crate) fn check_d_at_least(d: usize, min: usize) -> Result<()> {
    check_range("d", d as i64, min as i64, i64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w<const N: usize>(p: [i64; N]) -> Weight {
        Weight::from(p)
    }

    fn coh(degree: usize, rep: Vec<i64>) -> BottResult {
        BottResult::Cohomology {
            degree,
            rep: DominantWeight::new(Weight::new(rep)).unwrap(),
        }
    }

    #[test]
    fn projective_space_line_bundles() {
        for d in 2..6usize {
            let beta = Weight::zero(d - 1);
            for m in 0..5 {
                let mut rep = vec![0; d];
                rep[0] = m;
                assert_eq!(bott(1, d, &w([m]), &beta).unwrap(), coh(0, rep));
            }
            for m in (1 - d as i64)..0 {
                assert!(bott(1, d, &w([m]), &beta).unwrap().is_zero());
            }
            // H^{d-1}(O(-d)) = det V, i.e. (-1, ..., -1) on V^∨
            assert_eq!(bott(1, d, &w([-(d as i64)]), &beta).unwrap(), coh(d - 1, vec![-1; d]));
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(bott(2, 4, &w([1, 0, 0]), &w([0, 0])).is_err());
        assert!(bott(0, 4, &w([]), &w([0, 0, 0, 0])).is_err());
        assert!(bott(4, 4, &w([0, 0, 0, 0]), &w([])).is_err());
    }

    #[test]
    fn quotient_dual_is_acyclic_on_projective_space() {
        // 0 -> Q^∨ -> V^∨ ⊗ O -> O(1) -> 0 on P^3
        assert!(bott(1, 4, &w([0]), &w([1, 0, 0])).unwrap().is_zero());
    }

    #[test]
    fn json_shapes() {
        assert_eq!(serde_json::to_string(&BottResult::Zero).unwrap(), r#"{"zero":true}"#);
        let c = coh(3, vec![-1, -1, -1, -1]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"degree":3,"rep":[-1,-1,-1,-1]}"#);
        assert_eq!(serde_json::from_str::<BottResult>(&s).unwrap(), c);
    }

    #[test]
    fn collections() {
        let ws = |r, d| -> Vec<Weight> {
            kapranov_collection(r, d)
                .unwrap()
                .into_iter()
                .map(|c| c.weight().clone())
                .collect()
        };
        assert_eq!(
            ws(2, 4),
            vec![w([0, 0]), w([1, 0]), w([1, 1]), w([2, 0]), w([2, 1]), w([2, 2])]
        );
        assert_eq!(ws(1, 2), vec![w([0]), w([1])]);
        assert_eq!(ws(2, 3), vec![w([0, 0]), w([1, 0]), w([1, 1])]);
        for d in 3..8 {
            assert_eq!(ws(2, d).len(), d * (d - 1) / 2);
        }
        assert!(CollectionWeight::new(w([3, 0]), 2, 4).is_err());
    }

    #[test]
    fn exceptional_pairs() {
        let report = strong_exceptional_check(2, 4).unwrap();
        assert!(report.check.pass, "{:?}", report.check.failures);
        assert_eq!(report.check.cells_checked, 36);
        assert_eq!(report.hom_dims[0][0], 1);
        // Hom(O(1), O) = H^0(O(-1)) = 0
        assert_eq!(bott_sub(2, 4, &w([-1, -1])).unwrap(), BottResult::Zero);
        assert_eq!(report.hom_dims[2][0], 0);
    }
}
