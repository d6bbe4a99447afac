//! Graded `RHom` on `X = Tot Hom(V, S)` over `Gr(2, d)` and on
//! `X₀ = Tot Hom(V, l)` over `PV`, computed one `Sym`-degree at a time.
//!
//! Cell `(i, k)` holds the `GL(V)`-representation in cohomological degree `i`
//! coming from `Sym^k` of the fibre coordinates. Representations are recorded by
//! highest weight on `V^∨`, matching [`BottResult`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bott::{bott, bott_sub, check_d_at_least, kapranov_collection, BottResult, CollectionWeight};
use crate::error::{check_range, Result};
use crate::report::CheckReport;
use crate::schur::{
    cauchy_sym, littlewood_richardson, pad, rep_dimension, tensor, weyl_dimension, RepSum, Weight,
};

/// Default truncation of the `Sym`-expansion.
pub const DEFAULT_K_MAX: usize = 12;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradedHom {
    cells: BTreeMap<(usize, usize), RepSum>,
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    degree: usize,
    k: usize,
    rep: RepSum,
}

impl Serialize for GradedHom {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.cells.iter().map(|(&(degree, k), rep)| CellJson {
            degree,
            k,
            rep: rep.clone(),
        }))
    }
}

impl<'de> Deserialize<'de> for GradedHom {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let cells = Vec::<CellJson>::deserialize(deserializer)?;
        let mut out = GradedHom::default();
        for c in cells {
            out.add(c.degree, c.k, &c.rep);
        }
        Ok(out)
    }
}

impl GradedHom {
    fn add(&mut self, degree: usize, k: usize, rep: &RepSum) {
        if rep.is_empty() {
            return;
        }
        let cell = self.cells.entry((degree, k)).or_default();
        cell.add_assign_scaled(rep, 1);
        if cell.is_empty() {
            self.cells.remove(&(degree, k));
        }
    }

    pub fn cell(&self, degree: usize, k: usize) -> RepSum {
        self.cells.get(&(degree, k)).cloned().unwrap_or_default()
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &RepSum)> {
        self.cells.iter().map(|(&(i, k), r)| (i, k, r))
    }

    pub fn cell_dimension(&self, degree: usize, k: usize) -> i64 {
        self.cells
            .get(&(degree, k))
            .map(rep_dimension)
            .unwrap_or(0)
    }

    /// `Σ_i (-1)^i dim` of the cells in `Sym`-degree `k`.
    pub fn euler_characteristic(&self, k: usize) -> i64 {
        self.cells()
            .filter(|&(_, kk, _)| kk == k)
            .map(|(i, _, r)| if i % 2 == 0 { 1 } else { -1 } * rep_dimension(r))
            .sum()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.cells.keys().map(|&(i, _)| i).max()
    }

    /// Rows `i  k  weight  mult`, one per irreducible.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("i\tk\tweight\tmult\n");
        for (i, k, rep) in self.cells() {
            for (w, m) in rep.iter() {
                writeln!(out, "{i}\t{k}\t{w}\t{m}").unwrap();
            }
        }
        out
    }
}

/// `Σ^λ V` as a weight on `V^∨`.
fn sym_v_factor(lambda: &Weight, d: usize) -> Weight {
    pad(lambda, d).dual()
}

/// The `Σ^μ S^∨` pieces of `Σ^α S ⊗ Σ^β S^∨ ⊗ Sym^k(V ⊗ S^∨)`, each paired
/// with the partition `λ` of its `Σ^λ V` factor.
fn sym_degree_terms(alpha: &Weight, beta: &Weight, d: usize, k: usize) -> Result<Vec<(Weight, Weight, i64)>> {
    let base = littlewood_richardson(&alpha.dual(), beta, 2)?;
    let mut out = Vec::new();
    for lambda in cauchy_sym(k as i64, d, 2)? {
        for (mu0, c0) in base.iter() {
            for (mu, c1) in littlewood_richardson(mu0, &lambda, 2)?.iter() {
                out.push((mu.clone(), lambda.as_weight().clone(), c0 * c1));
            }
        }
    }
    Ok(out)
}

/// One `Sym`-degree of `RHom_X(Σ^α S^∨, Σ^β S^∨)`, for arbitrary dominant `α, β`.
pub fn rhom_x_degree(alpha: &Weight, beta: &Weight, d: usize, k: usize) -> Result<BTreeMap<usize, RepSum>> {
    let mut out: BTreeMap<usize, RepSum> = BTreeMap::new();
    for (mu, lambda, c) in sym_degree_terms(alpha, beta, d, k)? {
        if let BottResult::Cohomology { degree, rep } = bott_sub(2, d, &mu)? {
            let v = RepSum::single(sym_v_factor(&lambda, d), 1);
            let piece = tensor(&RepSum::single(rep.into_weight(), c), &v, d)?;
            out.entry(degree).or_default().add_assign_scaled(&piece, 1);
        }
    }
    Ok(out)
}

/// Graded Euler characteristic of one `Sym`-degree of `RHom_X(Σ^α S^∨, Σ^β S^∨)`.
pub fn euler_x_degree(alpha: &Weight, beta: &Weight, d: usize, k: usize) -> Result<i64> {
    let mut chi = 0;
    for (mu, lambda, c) in sym_degree_terms(alpha, beta, d, k)? {
        let h = bott_sub(2, d, &mu)?;
        if !h.is_zero() {
            chi += c * h.euler_characteristic() * weyl_dimension(&pad(&lambda, d), d)? as i64;
        }
    }
    Ok(chi)
}

/// `RHom_X(Σ^α S^∨, Σ^{α'} S^∨)` for `Sym`-degrees `0..=k_max`.
pub fn rhom_x_graded(
    alpha: &CollectionWeight,
    alpha2: &CollectionWeight,
    d: usize,
    k_max: usize,
) -> Result<GradedHom> {
    check_d_at_least(d, 3)?;
    CollectionWeight::new(alpha.weight().clone(), 2, d)?;
    CollectionWeight::new(alpha2.weight().clone(), 2, d)?;
    let per_k = (0..=k_max)
        .into_par_iter()
        .map(|k| rhom_x_degree(alpha.weight(), alpha2.weight(), d, k).map(|c| (k, c)))
        .collect::<Result<Vec<_>>>()?;
    let mut out = GradedHom::default();
    for (k, cells) in per_k {
        for (i, rep) in cells {
            out.add(i, k, &rep);
        }
    }
    Ok(out)
}

/// One `Sym`-degree of `RHom_{X₀}(l^{∨a}, l^{∨b}) = RΓ_{PV}(l^{∨ b+k-a}) ⊗ Sym^k V`.
pub fn rhom_x0_degree(a: i64, b: i64, d: usize, k: usize) -> Result<BTreeMap<usize, RepSum>> {
    let m = b + k as i64 - a;
    let mut out = BTreeMap::new();
    if let BottResult::Cohomology { degree, rep } = bott(1, d, &Weight::from([m]), &Weight::zero(d - 1))? {
        let sym_k = RepSum::single(Weight::sym(k as i64, d).dual(), 1);
        out.insert(degree, tensor(&RepSum::single(rep.into_weight(), 1), &sym_k, d)?);
    }
    Ok(out)
}

/// `RHom_{X₀}(l^{∨a}, l^{∨b})` for `Sym`-degrees `0..=k_max`, with `0 <= a, b <= d-1`
/// (the summands of the Beilinson generator pulled back to `X₀`).
pub fn rhom_x0_graded(a: i64, b: i64, d: usize, k_max: usize) -> Result<GradedHom> {
    check_d_at_least(d, 2)?;
    check_range("a", a, 0, d as i64 - 1)?;
    check_range("b", b, 0, d as i64 - 1)?;
    let mut out = GradedHom::default();
    for k in 0..=k_max {
        for (i, rep) in rhom_x0_degree(a, b, d, k)? {
            out.add(i, k, &rep);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Space {
    X,
    X0,
}

impl std::str::FromStr for Space {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "X" | "x" => Ok(Space::X),
            "X0" | "x0" => Ok(Space::X0),
            other => Err(format!("unknown space {other:?} (expected X or X0)")),
        }
    }
}

/// A non-vanishing higher cell, or a violated weight certificate (`degree = None`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TiltFailure {
    pub source: Weight,
    pub target: Weight,
    pub k: usize,
    pub degree: Option<usize>,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingReport {
    #[serde(flatten)]
    pub check: CheckReport<TiltFailure>,
    pub space: Space,
    pub d: usize,
    pub max_k_checked: usize,
    pub summands: usize,
    /// Every `Σ^μ S^∨` met satisfied `μ >= -α_top` (always true on `X₀`).
    pub certificate_holds: bool,
}

fn tilting_pair_x(
    a: &CollectionWeight,
    b: &CollectionWeight,
    d: usize,
    k: usize,
) -> Result<Vec<TiltFailure>> {
    let floor = -((d - 2) as i64);
    let mut failures = Vec::new();
    for (mu, _lambda, _c) in sym_degree_terms(a.weight(), b.weight(), d, k)? {
        if mu.parts().iter().any(|&p| p < floor) {
            failures.push(TiltFailure {
                source: a.weight().clone(),
                target: b.weight().clone(),
                k,
                degree: None,
                weight: mu.clone(),
            });
        }
        if let BottResult::Cohomology { degree, rep } = bott_sub(2, d, &mu)? {
            if degree > 0 {
                failures.push(TiltFailure {
                    source: a.weight().clone(),
                    target: b.weight().clone(),
                    k,
                    degree: Some(degree),
                    weight: rep.into_weight(),
                });
            }
        }
    }
    Ok(failures)
}

/// Check `RHom^{>0}(T, T) = 0` for the tilting bundle on `X` or `X₀`, over all
/// ordered pairs of summands and all `Sym`-degrees `k <= k_max`.
///
/// A cell is a direct sum of irreducible pieces, so it is nonzero exactly when
/// some piece lands in that degree; the sweep inspects degrees piece by piece.
/// On `X` it also checks the uniform certificate `μ >= -α_top` on every piece.
pub fn tilting_check(space: Space, d: usize, k_max: usize) -> Result<TiltingReport> {
    check_d_at_least(d, 3)?;
    let (jobs, summands): (Vec<(Weight, Weight, usize)>, usize) = match space {
        Space::X => {
            let basis = kapranov_collection(2, d)?;
            let jobs = basis
                .iter()
                .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
                .flat_map(|(a, b)| (0..=k_max).map(move |k| (a.weight().clone(), b.weight().clone(), k)))
                .collect();
            (jobs, basis.len())
        }
        Space::X0 => {
            let jobs = (0..d as i64)
                .flat_map(|a| (0..d as i64).map(move |b| (a, b)))
                .flat_map(|(a, b)| (0..=k_max).map(move |k| (Weight::from([a]), Weight::from([b]), k)))
                .collect();
            (jobs, d)
        }
    };
    let failures = jobs
        .par_iter()
        .map(|(a, b, k)| match space {
            Space::X => tilting_pair_x(
                &CollectionWeight::new(a.clone(), 2, d)?,
                &CollectionWeight::new(b.clone(), 2, d)?,
                d,
                *k,
            ),
            Space::X0 => Ok(rhom_x0_degree(a.parts()[0], b.parts()[0], d, *k)?
                .into_iter()
                .filter(|(i, _)| *i > 0)
                .flat_map(|(i, rep)| {
                    rep.keys()
                        .map(|w| TiltFailure {
                            source: a.clone(),
                            target: b.clone(),
                            k: *k,
                            degree: Some(i),
                            weight: w.clone(),
                        })
                        .collect::<Vec<_>>()
                })
                .collect()),
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    let certificate_holds = failures.iter().all(|f| f.degree.is_some());
    Ok(TiltingReport {
        check: CheckReport::from_failures(jobs.len(), failures),
        space,
        d,
        max_k_checked: k_max,
        summands,
        certificate_holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FullnessFailure {
    pub a: i64,
    pub b: i64,
    pub k: usize,
    pub weight: Weight,
    pub needed: i64,
    pub available: i64,
}

/// Character-level surjectivity of `RHom_X(Sym^a S^∨, Sym^b S^∨) → RHom_{X₀}(l^{∨a}, l^{∨b})`:
/// for every `k <= k_max` the degree-`(0, k)` cell on `X₀` must be contained,
/// with multiplicity, in the degree-`(0, k)` cell on `X`.
pub fn fullness_check(a: i64, b: i64, d: usize, k_max: usize) -> Result<CheckReport<FullnessFailure>> {
    check_d_at_least(d, 3)?;
    check_range("a", a, 0, d as i64 - 2)?;
    check_range("b", b, 0, d as i64 - 2)?;
    let source = CollectionWeight::new(Weight::from([a, 0]), 2, d)?;
    let target = CollectionWeight::new(Weight::from([b, 0]), 2, d)?;
    let per_k = (0..=k_max)
        .into_par_iter()
        .map(|k| -> Result<Vec<FullnessFailure>> {
            let base = rhom_x0_degree(a, b, d, k)?.remove(&0).unwrap_or_default();
            let total = rhom_x_degree(source.weight(), target.weight(), d, k)?
                .remove(&0)
                .unwrap_or_default();
            Ok(base
                .iter()
                .filter(|(w, m)| total.mult(w) < *m)
                .map(|(w, m)| FullnessFailure {
                    a,
                    b,
                    k,
                    weight: w.clone(),
                    needed: m,
                    available: total.mult(w),
                })
                .collect())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::from_failures(
        k_max + 1,
        per_k.into_iter().flatten().collect(),
    ))
}
