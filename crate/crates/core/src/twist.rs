//! Geometry of the flattening diagram, the Koszul terms `E_{k,j}` of `F l^{∨k}`,
//! the adjoint tables on the tilting summands, `RF l^{∨k}`, and the `r = 1`
//! spherical-object check.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bott::{bott, check_d_at_least, kapranov_collection, BottResult};
use crate::error::{check_range, Error, Result};
use crate::hom::rhom_x0_graded;
use crate::schur::{normalize_rank2, DominantWeight, FormalSum, Rank2Base, RepSum, SchurTerm, Weight};

/// `(det S^∨)^a ⊗ (det V)^b`: a line bundle on the Grassmannian, written additively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetClass {
    pub det_s_dual: i64,
    pub det_v: i64,
}

impl DetClass {
    pub fn is_trivial(&self) -> bool {
        self.det_s_dual == 0 && self.det_v == 0
    }
}

/// Rank and determinant of a bundle built from `S`, `V` and `V/S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct RankDet {
    rank: i64,
    det: DetClass,
}

impl RankDet {
    fn dual(self) -> Self {
        RankDet {
            rank: self.rank,
            det: DetClass {
                det_s_dual: -self.det.det_s_dual,
                det_v: -self.det.det_v,
            },
        }
    }

    // det(E ⊗ F) = det(E)^{rk F} ⊗ det(F)^{rk E}
    fn tensor(self, other: Self) -> Self {
        RankDet {
            rank: self.rank * other.rank,
            det: DetClass {
                det_s_dual: self.det.det_s_dual * other.rank + other.det.det_s_dual * self.rank,
                det_v: self.det.det_v * other.rank + other.det.det_v * self.rank,
            },
        }
    }

    fn hom(self, target: Self) -> Self {
        self.dual().tensor(target)
    }

    fn det_of_sum(self, other: Self) -> DetClass {
        DetClass {
            det_s_dual: self.det.det_s_dual + other.det.det_s_dual,
            det_v: self.det.det_v + other.det.det_v,
        }
    }
}

/// `det T` of `Tot Hom(V, S)` over `Gr(r, d)`, pulled back from the base:
/// `det Hom(S, V/S) ⊗ det Hom(V, S)`.
pub fn canonical_class_expansion(r: usize, d: usize) -> DetClass {
    let (r, d) = (r as i64, d as i64);
    let s_dual = RankDet {
        rank: r,
        det: DetClass { det_s_dual: 1, det_v: 0 },
    };
    let v = RankDet {
        rank: d,
        det: DetClass { det_s_dual: 0, det_v: 1 },
    };
    let s = s_dual.dual();
    // det V = det S ⊗ det(V/S)
    let quotient = RankDet {
        rank: d - r,
        det: DetClass { det_s_dual: 1, det_v: 1 },
    };
    let tangent_gr = s.hom(quotient);
    let fibre = v.hom(s);
    tangent_gr.det_of_sum(fibre)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryStats {
    pub d: usize,
    pub dim_gr: i64,
    pub dim_x: i64,
    pub dim_x0: i64,
    pub dim_b_hat: i64,
    pub dim_pi: i64,
    pub dim_j: i64,
    pub s: i64,
    pub codim_b: i64,
    pub dim_im_i: i64,
    pub codim_im_i: i64,
    pub det_tx: DetClass,
    pub det_tx0: DetClass,
    pub cy_x: bool,
    pub cy_x0: bool,
}

impl GeometryStats {
    /// `dim π - dim j` and `dim X - dim X₀` agree, and `Im i` has codimension `d`.
    pub fn is_consistent(&self) -> bool {
        self.dim_pi - self.dim_j == self.s
            && self.dim_x - self.dim_x0 == self.s
            && self.codim_im_i == self.d as i64
    }
}

pub fn geometry_stats(d: usize) -> Result<GeometryStats> {
    check_d_at_least(d, 3)?;
    let di = d as i64;
    let dim_gr = 2 * (di - 2);
    let dim_x = dim_gr + 2 * di;
    let dim_pv = di - 1;
    let dim_x0 = dim_pv + di;
    // π: B̂ → X₀ is the P(V/l)-bundle
    let dim_pi = di - 2;
    let dim_b_hat = dim_x0 + dim_pi;
    let dim_j = dim_b_hat - dim_x;
    // rank <= 1 maps V → S: (dim V + dim S)·1 - 1 = d + 1
    let codim_b = 2 * di - (di + 2 - 1);
    let dim_im_i = (dim_x - codim_b) + 1;
    let codim_im_i = (dim_gr + 2 * di) + 2 - dim_im_i;
    let det_tx = canonical_class_expansion(2, d);
    let det_tx0 = canonical_class_expansion(1, d);
    Ok(GeometryStats {
        d,
        dim_gr,
        dim_x,
        dim_x0,
        dim_b_hat,
        dim_pi,
        dim_j,
        s: dim_pi - dim_j,
        codim_b,
        dim_im_i,
        codim_im_i,
        det_tx,
        det_tx0,
        cy_x: det_tx.is_trivial(),
        cy_x0: det_tx0.is_trivial(),
    })
}

/// Terms `E_{k,j}`, `0 <= j <= d`, of the complex whose convolution is `F l^{∨k}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulComplex {
    pub k: usize,
    pub d: usize,
    pub terms: BTreeMap<usize, FormalSum<SchurTerm>>,
}

impl KoszulComplex {
    pub fn term(&self, j: usize) -> &FormalSum<SchurTerm> {
        &self.terms[&j]
    }
}

/// `E_{k,j} = Sym^{k-j} S^∨ ⊗ ∧^j V(j)` for `j <= k`, zero for `j = k+1`, and
/// `Sym^{j-k-2} S(-1)[-1] ⊗ ∧^j V(j)` for `k+2 <= j <= d`.
///
/// `cstar` records `j`, the fibre-degree offset carried by `∧^j N^∨`.
pub fn koszul_terms(k: usize, d: usize) -> Result<KoszulComplex> {
    check_d_at_least(d, 2)?;
    check_range("k", k as i64, 0, d as i64 - 2)?;
    let mut terms = BTreeMap::new();
    for j in 0..=d {
        let (ki, ji) = (k as i64, j as i64);
        let wedge = DominantWeight::new(Weight::wedge(j, d))?;
        let sum = if j <= k {
            let s = normalize_rank2(ki - ji, ji, Rank2Base::Dual)?;
            FormalSum::single(SchurTerm::new(s, wedge, 0, ji), 1)
        } else if j == k + 1 {
            FormalSum::new()
        } else {
            let s = normalize_rank2(ji - ki - 2, ji - 1, Rank2Base::Taut)?;
            FormalSum::single(SchurTerm::new(s, wedge, -1, ji), 1)
        };
        terms.insert(j, sum);
    }
    Ok(KoszulComplex { k, d, terms })
}

/// `l^{∨ l_power} ⊗ Σ^{v_weight} V [shift]` on `X₀`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct X0Term {
    pub l_power: i64,
    pub v_weight: DominantWeight,
    pub shift: i64,
}

impl X0Term {
    pub fn is_det_free(&self) -> bool {
        self.v_weight.parts().iter().all(|&p| p == 0)
    }
}

impl fmt::Display for X0Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "l^{}", self.l_power)?;
        let v = self.v_weight.parts();
        if !v.is_empty() && v.iter().all(|&p| p == v[0]) && v[0] != 0 {
            write!(f, "⊗det V^{}", v[0])?;
        } else if v.iter().any(|&p| p != 0) {
            write!(f, "⊗V^({})", self.v_weight)?;
        }
        if self.shift != 0 {
            write!(f, "[{}]", self.shift)?;
        }
        Ok(())
    }
}

pub type X0Object = FormalSum<X0Term>;

#[derive(Serialize, Deserialize)]
struct X0Entry {
    #[serde(flatten)]
    term: X0Term,
    mult: i64,
}

impl Serialize for FormalSum<X0Term> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|(t, m)| X0Entry {
            term: t.clone(),
            mult: m,
        }))
    }
}

impl<'de> Deserialize<'de> for FormalSum<X0Term> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<X0Entry>::deserialize(deserializer)?;
        Ok(entries.into_iter().map(|e| (e.term, e.mult)).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Adjoint {
    L,
    R,
}

impl std::str::FromStr for Adjoint {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "L" | "l" => Ok(Adjoint::L),
            "R" | "r" => Ok(Adjoint::R),
            other => Err(format!("unknown adjoint {other:?} (expected L or R)")),
        }
    }
}

/// Split `(a+b, a)` into `(a, b)` and check it lies in the computed table:
/// `a >= 0`, `b <= d-2`, `a+b <= d-1`.
fn table_coordinates(alpha: &DominantWeight, d: usize) -> Result<(i64, i64)> {
    alpha.expect_len(2)?;
    let (a, b) = (alpha.parts()[1], alpha.parts()[0] - alpha.parts()[1]);
    let di = d as i64;
    if a < 0 || b > di - 2 || a + b > di - 1 {
        return Err(Error::OutsideTable {
            weight: alpha.as_weight().clone(),
            reason: "adjoint table covers Sym^b S^∨(a) with a >= 0, b <= d-2, a+b <= d-1",
        });
    }
    Ok((a, b))
}

/// Image of `Sym^b S^∨(a)`, `α = (a+b, a)`, under `L` or `R`.
///
/// `a = 0` gives `l^{∨b}`; `0 < a`, `a+b <= d-2` gives zero; `a+b = d-1` gives
/// `l^{∨ d-2-b} ⊗ det V^∨`. `L` shifts the last branch by `dim π`; `R = L[dim j - dim π]`.
pub fn apply_adjoint(which: Adjoint, alpha: &DominantWeight, d: usize) -> Result<X0Object> {
    check_d_at_least(d, 3)?;
    let (a, b) = table_coordinates(alpha, d)?;
    let g = geometry_stats(d)?;
    let extra = match which {
        Adjoint::L => 0,
        Adjoint::R => g.dim_j - g.dim_pi,
    };
    let di = d as i64;
    let term = if a == 0 {
        Some(X0Term {
            l_power: b,
            v_weight: DominantWeight::new(Weight::zero(d))?,
            shift: extra,
        })
    } else if a + b <= di - 2 {
        None
    } else {
        Some(X0Term {
            l_power: di - 2 - b,
            v_weight: DominantWeight::new(Weight::constant(d, -1))?,
            shift: g.dim_pi + extra,
        })
    };
    Ok(term.map(|t| X0Object::single(t, 1)).unwrap_or_default())
}

pub fn apply_l(alpha: &DominantWeight, d: usize) -> Result<X0Object> {
    apply_adjoint(Adjoint::L, alpha, d)
}

pub fn apply_r(alpha: &DominantWeight, d: usize) -> Result<X0Object> {
    apply_adjoint(Adjoint::R, alpha, d)
}

/// Recompute `L(O(k))`, `0 <= k <= d-1`, from `ω_π ≅ O_π(-d+1) ⊗ l ⊗ det V^∨`:
/// `L(O(k)) = Rπ_* O_π(k-d+1) ⊗ l^{∨ k-1} ⊗ det V^∨ [dim π]`, with the fibre
/// cohomology on `P(V/l) ≅ P^{d-2}` taken from Bott.
pub fn l_bottom_row_from_fibres(k: i64, d: usize) -> Result<X0Object> {
    check_d_at_least(d, 3)?;
    check_range("k", k, 0, d as i64 - 1)?;
    let g = geometry_stats(d)?;
    let fibre = bott(1, d - 1, &Weight::from([k - d as i64 + 1]), &Weight::zero(d - 2))?;
    let BottResult::Cohomology { degree, rep } = fibre else {
        return Ok(X0Object::new());
    };
    let c = rep.parts()[0];
    if rep.parts().iter().any(|&p| p != c) {
        return Err(Error::Consistency(format!(
            "fibre cohomology {rep} of L(O({k})) is not a line bundle"
        )));
    }
    // (det (V/l)^∨)^c = (det V^∨ ⊗ l)^c
    Ok(X0Object::single(
        X0Term {
            l_power: (k - 1) - c,
            v_weight: DominantWeight::new(Weight::constant(d, -1 - c))?,
            shift: g.dim_pi - degree as i64,
        },
        1,
    ))
}

fn tensor_x0(obj: &X0Object, v_weight: &Weight, shift: i64) -> Result<X0Object> {
    let mut out = X0Object::new();
    for (t, m) in obj.iter() {
        // only determinant factors meet non-trivial V-weights here
        let is_det = t.v_weight.parts().iter().all(|&p| p == t.v_weight.parts()[0]);
        if !is_det {
            return Err(Error::Consistency(format!(
                "cannot tensor non-determinant factor {} symbolically",
                t.v_weight
            )));
        }
        out.add_term(
            X0Term {
                l_power: t.l_power,
                v_weight: DominantWeight::new(v_weight.shifted(t.v_weight.parts()[0]))?,
                shift: t.shift + shift,
            },
            m,
        );
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RfTerm {
    pub j: usize,
    pub e: FormalSum<SchurTerm>,
    pub r_of_e: X0Object,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RfReport {
    pub k: usize,
    pub d: usize,
    pub s: i64,
    pub terms: Vec<RfTerm>,
    /// `F_{k,0}` and `F_{k,d}[d]`.
    pub survivors: Vec<String>,
    pub survivor_terms: Vec<X0Term>,
    pub middle_vanishing: bool,
    pub middle_survivors: Vec<usize>,
    pub det_factors_cancel: bool,
    /// `Ext^i(l^{∨k}, l^{∨k}) = 0` for `|i - s| <= 1` up to the checked `Sym`-degree,
    /// so any extension between the two survivors splits.
    pub no_cross_homs: bool,
    /// `[RF l^{∨k}]` as a multiple of `[l^{∨k}]` in `K(X₀)`.
    pub k_class_multiple: i64,
    pub assumption: String,
}

/// Apply `R` to every `E_{k,j}` and collect the survivors of `RF l^{∨k}`.
pub fn rf_generator(k: usize, d: usize) -> Result<RfReport> {
    check_d_at_least(d, 3)?;
    let g = geometry_stats(d)?;
    let complex = koszul_terms(k, d)?;
    let mut terms = Vec::new();
    let mut middle_survivors = Vec::new();
    let mut first = X0Object::new();
    let mut last = X0Object::new();
    for (&j, e) in &complex.terms {
        let mut r_of_e = X0Object::new();
        for (t, m) in e.iter() {
            let r = apply_r(&t.s_weight, d)?;
            r_of_e.add_assign_scaled(&tensor_x0(&r, t.v_weight.as_weight(), t.shift)?, m);
        }
        if j == 0 {
            first = r_of_e.clone();
        } else if j == d {
            last = r_of_e.clone();
        } else if !r_of_e.is_empty() {
            middle_survivors.push(j);
        }
        terms.push(RfTerm {
            j,
            e: e.clone(),
            r_of_e,
        });
    }
    let last_shifted = last.map_keys(|t| X0Term {
        shift: t.shift + d as i64,
        ..t.clone()
    });
    let mut survivor_terms: Vec<X0Term> = first
        .keys()
        .chain(last_shifted.keys())
        .cloned()
        .collect();
    survivor_terms.sort_by_key(|t| std::cmp::Reverse(t.shift));
    let det_factors_cancel = survivor_terms.iter().all(X0Term::is_det_free);

    let ki = k as i64;
    let homs = rhom_x0_graded(ki, ki, d, crate::hom::DEFAULT_K_MAX)?;
    // negative Ext vanishes; Ext^{s-1}, Ext^s, Ext^{s+1} cover both extension directions
    let no_cross_homs = homs.cells().all(|(i, _, _)| (i as i64 - g.s).abs() > 1);

    let k_class_multiple = first
        .iter()
        .chain(last_shifted.iter())
        .map(|(t, m)| if t.shift % 2 == 0 { m } else { -m })
        .sum();

    Ok(RfReport {
        k,
        d,
        s: g.s,
        terms,
        survivors: survivor_terms.iter().map(|t| t.to_string()).collect(),
        survivor_terms,
        middle_vanishing: middle_survivors.is_empty(),
        middle_survivors,
        det_factors_cancel,
        no_cross_homs,
        k_class_multiple,
        assumption: "the convolution differentials are not modelled; the survivors are combined as a direct sum, \
                     which needs Ext^{s-1}, Ext^s and Ext^{s+1} between them to vanish (checked as no_cross_homs)"
            .to_string(),
    })
}

/// `[l^{∨0}, ..., l^{∨ d-2}]`: the nonzero `L`-images of the Kapranov collection.
pub fn adjoint_image_basis(d: usize) -> Result<Vec<X0Term>> {
    let mut out = Vec::new();
    for alpha in kapranov_collection(2, d)? {
        for (t, _) in apply_l(alpha.dominant(), d)?.iter() {
            if !out.contains(t) {
                out.push(t.clone());
            }
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalTerm {
    /// Position in the restricted complex (degree of the term).
    pub position: usize,
    /// `O(twist)` on `PV`.
    pub twist: i64,
    pub cohomology: BottResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalReport {
    pub d: usize,
    pub dim_x: usize,
    pub terms: Vec<SphericalTerm>,
    /// Total degree → `GL(V)`-representation (weights on `V^∨`).
    pub total: BTreeMap<usize, RepSum>,
    pub middle_vanishing: bool,
    pub is_spherical: bool,
}

/// `RHom_X(i_* O_{PV}, i_* O_{PV}) = RΓ(i^! i_* O_{PV})` on `X = Tot(V^∨ ⊗ O(-1))`.
///
/// The Koszul term `∧^i V(i)` becomes `∧^i V ⊗ det V^∨ (i-d)` in degree `d-i`
/// after twisted restriction by `det N [-d]`.
pub fn spherical_r1(d: usize) -> Result<SphericalReport> {
    check_d_at_least(d, 2)?;
    let mut terms = Vec::new();
    let mut total: BTreeMap<usize, RepSum> = BTreeMap::new();
    let mut middle_vanishing = true;
    for i in 0..=d {
        let twist = i as i64 - d as i64;
        let position = d - i;
        let h = bott(1, d, &Weight::from([twist]), &Weight::zero(d - 1))?;
        if let BottResult::Cohomology { degree, rep } = &h {
            if i != 0 && i != d {
                middle_vanishing = false;
            }
            // ∧^i V ⊗ det V^∨ = ∧^{d-i} V^∨, weight (1^{d-i}, 0^i) on V^∨
            let factor = RepSum::single(Weight::wedge(d - i, d), 1);
            let rep = crate::schur::tensor(&RepSum::single(rep.as_weight().clone(), 1), &factor, d)?;
            total
                .entry(position + degree)
                .or_default()
                .add_assign_scaled(&rep, 1);
        }
        terms.push(SphericalTerm {
            position,
            twist,
            cohomology: h,
        });
    }
    let dim_x = 2 * d - 1;
    let trivial = RepSum::single(Weight::zero(d), 1);
    let is_spherical = total.len() == 2
        && total.get(&0) == Some(&trivial)
        && total.get(&dim_x) == Some(&trivial);
    Ok(SphericalReport {
        d,
        dim_x,
        terms,
        total,
        middle_vanishing,
        is_spherical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dw(p: &[i64]) -> DominantWeight {
        DominantWeight::new(Weight::new(p.to_vec())).unwrap()
    }

    fn l(power: i64, det: i64, shift: i64, d: usize) -> X0Term {
        X0Term {
            l_power: power,
            v_weight: dw(&vec![det; d]),
            shift,
        }
    }

    #[test]
    fn geometry_d4() {
        let g = geometry_stats(4).unwrap();
        assert_eq!((g.dim_x, g.dim_x0, g.s, g.codim_b, g.dim_im_i), (12, 7, 5, 3, 10));
        assert!(g.cy_x && g.cy_x0 && g.is_consistent());
        let g = geometry_stats(3).unwrap();
        assert_eq!((g.s, g.codim_b), (3, 2));
        assert!(geometry_stats(2).is_err());
    }

    #[test]
    fn koszul_d4_k1() {
        let c = koszul_terms(1, 4).unwrap();
        let only = |j: usize| c.term(j).keys().next().cloned();
        let t0 = only(0).unwrap();
        assert_eq!((t0.s_weight.clone(), t0.shift), (dw(&[1, 0]), 0));
        let t1 = only(1).unwrap();
        assert_eq!((t1.s_weight.clone(), t1.v_weight.clone()), (dw(&[1, 1]), dw(&[1, 0, 0, 0])));
        assert!(c.term(2).is_empty());
        let t3 = only(3).unwrap();
        assert_eq!((t3.s_weight.clone(), t3.shift), (dw(&[2, 2]), -1));
        assert_eq!(t3.v_weight, dw(&[1, 1, 1, 0]));
        let t4 = only(4).unwrap();
        assert_eq!((t4.s_weight.clone(), t4.shift), (dw(&[3, 2]), -1));
        assert_eq!(t4.v_weight, dw(&[1, 1, 1, 1]));
        assert!(koszul_terms(3, 4).is_err());
    }

    #[test]
    fn koszul_edges() {
        let c = koszul_terms(0, 4).unwrap();
        assert_eq!(c.term(0).keys().next().unwrap().s_weight, dw(&[0, 0]));
        for d in 3..7usize {
            let c = koszul_terms(d - 2, d).unwrap();
            let top = c.term(d).keys().next().unwrap();
            let e = (d - 1) as i64;
            assert_eq!(top.s_weight, dw(&[e, e]));
            assert_eq!(top.shift, -1);
        }
    }

    #[test]
    fn adjoint_table() {
        let d = 4;
        assert_eq!(apply_l(&dw(&[1, 0]), d).unwrap(), X0Object::single(l(1, 0, 0, d), 1));
        assert_eq!(apply_r(&dw(&[1, 0]), d).unwrap(), X0Object::single(l(1, 0, -5, d), 1));
        assert!(apply_l(&dw(&[2, 2]), d).unwrap().is_empty());
        assert_eq!(
            apply_l(&dw(&[2, 1]), 3).unwrap(),
            X0Object::single(l(0, -1, 1, 3), 1)
        );
        assert!(matches!(apply_l(&dw(&[3, 0]), d), Err(Error::OutsideTable { .. })));
        assert!(apply_l(&dw(&[4, 1]), d).is_err());
    }

    #[test]
    fn bottom_row_matches_table() {
        for d in 3..7usize {
            for k in 0..d as i64 {
                assert_eq!(
                    l_bottom_row_from_fibres(k, d).unwrap(),
                    apply_l(&dw(&[k, k]), d).unwrap(),
                    "d={d} k={k}"
                );
            }
        }
    }

    #[test]
    fn rf_examples() {
        let r = rf_generator(1, 4).unwrap();
        assert_eq!(r.survivors, vec!["l^1", "l^1[-5]"]);
        assert!(r.middle_vanishing && r.det_factors_cancel && r.no_cross_homs);
        assert_eq!(rf_generator(0, 4).unwrap().survivors, vec!["l^0", "l^0[-5]"]);
        assert_eq!(rf_generator(2, 5).unwrap().survivors, vec!["l^2", "l^2[-7]"]);
        assert_eq!(r.k_class_multiple, 0);
    }

    #[test]
    fn image_basis() {
        let b = adjoint_image_basis(4).unwrap();
        assert_eq!(b, vec![l(0, 0, 0, 4), l(1, 0, 0, 4), l(2, 0, 0, 4)]);
        assert_eq!(adjoint_image_basis(3).unwrap().len(), 2);
    }

    #[test]
    fn spherical_small() {
        let r = spherical_r1(2).unwrap();
        assert!(r.is_spherical && r.middle_vanishing);
        assert_eq!(r.total.keys().copied().collect::<Vec<_>>(), vec![0, 3]);
        let r = spherical_r1(4).unwrap();
        assert_eq!(r.total.keys().copied().collect::<Vec<_>>(), vec![0, 7]);
    }
}
