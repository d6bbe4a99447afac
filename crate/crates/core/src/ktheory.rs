//! K-classes over the Kapranov basis of `K(Gr(2,d)) ≅ K(X)`, the graded Euler
//! pairing on `X`, and the matrix of the twist on K-theory.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bott::{check_d_at_least, ext_on_grassmannian, kapranov_collection};
use crate::error::{check_range, Error, Result};
use crate::hom::euler_x_degree;
use crate::laurent::{self, Laurent, LaurentMatrix};
use crate::linalg::{self, Matrix};
use crate::schur::{rep_dimension, tensor, weyl_dimension, DominantWeight, FormalSum, RepSum, SchurTerm, Weight};
use crate::twist::{apply_r, geometry_stats, koszul_terms, rf_generator};

fn basis(d: usize) -> Result<Vec<Weight>> {
    Ok(kapranov_collection(2, d)?
        .into_iter()
        .map(|c| c.weight().clone())
        .collect())
}

fn sign(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Integer coordinates over `kapranov_collection(2, d)` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClass {
    pub d: usize,
    pub coords: Vec<i64>,
}

impl KClass {
    pub fn zero(d: usize) -> Result<Self> {
        Ok(KClass {
            d,
            coords: vec![0; basis(d)?.len()],
        })
    }

    pub fn unit(d: usize, alpha: &Weight) -> Result<Self> {
        let b = basis(d)?;
        let i = b.iter().position(|w| w == alpha).ok_or_else(|| Error::OutsideTable {
            weight: alpha.clone(),
            reason: "not a member of the Kapranov collection",
        })?;
        let mut coords = vec![0; b.len()];
        coords[i] = 1;
        Ok(KClass { d, coords })
    }

    pub fn basis(&self) -> Result<Vec<Weight>> {
        basis(self.d)
    }

    pub fn add_scaled(&mut self, other: &KClass, scale: i64) {
        for (x, y) in self.coords.iter_mut().zip(&other.coords) {
            *x += scale * y;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// `Σ c_α Σ^α S^∨` as a formal sum of bundles.
    pub fn to_schur_sum(&self) -> Result<FormalSum<SchurTerm>> {
        let mut out = FormalSum::new();
        for (w, &c) in basis(self.d)?.into_iter().zip(&self.coords) {
            out.add_term(SchurTerm::bundle(DominantWeight::new(w)?, self.d), c);
        }
        Ok(out)
    }
}

/// `G[α][β] = χ_Gr(Σ^α S^∨, Σ^β S^∨)` over the Kapranov basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GramMatrix {
    pub d: usize,
    pub basis: Vec<Weight>,
    pub matrix: Matrix,
}

impl GramMatrix {
    pub fn determinant(&self) -> i64 {
        use num_traits::ToPrimitive;
        linalg::determinant(&self.matrix).to_i64().unwrap_or(i64::MAX)
    }

    pub fn is_unimodular(&self) -> bool {
        linalg::is_unimodular(&self.matrix)
    }

    /// An ordering of the basis in which `G` is upper unitriangular, if one exists.
    pub fn unitriangular_order(&self) -> Option<Vec<usize>> {
        let n = self.matrix.len();
        if (0..n).any(|i| self.matrix[i][i] != 1) {
            return None;
        }
        // topological sort of the relation "nonzero pairing from i to j"
        let mut indegree = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if i != j && self.matrix[i][j] != 0 {
                    indegree[j] += 1;
                }
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        while let Some(i) = ready.pop() {
            order.push(i);
            for j in 0..n {
                if i != j && self.matrix[i][j] != 0 {
                    indegree[j] -= 1;
                    if indegree[j] == 0 {
                        ready.push(j);
                    }
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        let n = self.matrix.len();
        (0..n).all(|i| self.matrix[i][i] == 1 && (0..i).all(|j| self.matrix[i][j] == 0))
    }
}

pub fn gram_matrix(d: usize) -> Result<GramMatrix> {
    check_d_at_least(d, 3)?;
    let basis = basis(d)?;
    let matrix = basis
        .par_iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| euler_x_degree(a, b, d, 0))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GramMatrix { d, basis, matrix })
}

fn check_term(t: &SchurTerm, d: usize) -> Result<()> {
    t.s_weight.expect_len(2)?;
    t.v_weight.expect_len(d)
}

/// `χ_Gr(Σ^α S^∨, x)` for every basis weight `α`; constant `GL(V)` factors enter by dimension.
pub fn pairing_vector(x: &FormalSum<SchurTerm>, d: usize) -> Result<Vec<i64>> {
    let basis = basis(d)?;
    let mut p = vec![0; basis.len()];
    for (t, m) in x.iter() {
        check_term(t, d)?;
        let factor = m * sign(t.shift) * weyl_dimension(t.v_weight.as_weight(), d)? as i64;
        for (pa, a) in p.iter_mut().zip(&basis) {
            *pa += factor * euler_x_degree(a, t.s_weight.as_weight(), d, 0)?;
        }
    }
    Ok(p)
}

/// The class of `x` in the Kapranov basis, from `G c = χ(-, x)`.
pub fn reduce_to_basis(x: &FormalSum<SchurTerm>, d: usize) -> Result<KClass> {
    let g = gram_matrix(d)?;
    reduce_with(&g, x)
}

fn reduce_with(g: &GramMatrix, x: &FormalSum<SchurTerm>) -> Result<KClass> {
    let p = pairing_vector(x, g.d)?;
    Ok(KClass {
        d: g.d,
        coords: linalg::solve_integral(&g.matrix, &p)?,
    })
}

/// Equivariant variant of [`reduce_to_basis`]: each coordinate is a virtual
/// `GL(V)`-representation (weights on `V^∨`) instead of an integer.
pub fn reduce_to_basis_equivariant(x: &FormalSum<SchurTerm>, d: usize) -> Result<Vec<RepSum>> {
    check_d_at_least(d, 3)?;
    let basis = basis(d)?;
    let euler = |a: &Weight, b: &Weight| -> Result<RepSum> {
        let mut out = RepSum::new();
        for (i, rep) in ext_on_grassmannian(2, d, a, b)? {
            out.add_assign_scaled(&rep, sign(i as i64));
        }
        Ok(out)
    };
    let mut p = vec![RepSum::new(); basis.len()];
    for (t, m) in x.iter() {
        check_term(t, d)?;
        let v = RepSum::single(t.v_weight.dual(), 1);
        for (pa, a) in p.iter_mut().zip(&basis) {
            let e = tensor(&euler(a, t.s_weight.as_weight())?, &v, d)?;
            pa.add_assign_scaled(&e, m * sign(t.shift));
        }
    }
    // the basis is exceptional in lexicographic order: back-substitute
    let n = basis.len();
    let mut c: Vec<RepSum> = vec![RepSum::new(); n];
    for a in (0..n).rev() {
        let mut rest = p[a].clone();
        for b in a + 1..n {
            let g = euler(&basis[a], &basis[b])?;
            if !g.is_empty() && !c[b].is_empty() {
                rest.add_assign_scaled(&tensor(&g, &c[b], d)?, -1);
            }
        }
        let diag = euler(&basis[a], &basis[a])?;
        if diag != RepSum::single(Weight::zero(d), 1) {
            return Err(Error::Consistency(format!(
                "End({}) is not the trivial representation",
                basis[a]
            )));
        }
        c[a] = rest;
    }
    Ok(c)
}

/// `[F l^{∨k}] = Σ_j (-1)^j [E_{k,j}]`; the internal shift of `E_{k,j}` is
/// accounted for inside the reduction.
pub fn f_class(k: usize, d: usize) -> Result<KClass> {
    let g = gram_matrix(d)?;
    f_class_with(&g, k)
}

fn f_class_with(g: &GramMatrix, k: usize) -> Result<KClass> {
    let d = g.d;
    check_range("k", k as i64, 0, d as i64 - 2)?;
    let complex = koszul_terms(k, d)?;
    let mut out = KClass::zero(d)?;
    for (&j, e) in &complex.terms {
        out.add_scaled(&reduce_with(g, e)?, sign(j as i64));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistMatrix {
    pub d: usize,
    pub s: i64,
    pub basis: Vec<Weight>,
    pub matrix: Matrix,
}

/// Matrix of `[T_F]`: `M e_α = e_α - [F R e_α]`, columns indexed by the basis.
pub fn twist_matrix(d: usize) -> Result<TwistMatrix> {
    check_d_at_least(d, 3)?;
    let g = gram_matrix(d)?;
    let s = geometry_stats(d)?.s;
    let basis = g.basis.clone();
    let n = basis.len();
    let mut matrix = linalg::identity(n);
    for (col, alpha) in basis.iter().enumerate() {
        for (t, m) in apply_r(&DominantWeight::new(alpha.clone())?, d)?.iter() {
            let scale = m * sign(t.shift) * weyl_dimension(t.v_weight.as_weight(), d)? as i64;
            let f = f_class_with(&g, t.l_power as usize)?;
            for (row, c) in f.coords.iter().enumerate() {
                matrix[row][col] -= scale * c;
            }
        }
    }
    Ok(TwistMatrix { d, s, basis, matrix })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistStructure {
    Identity,
    Involution,
    Unipotent,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSumTest {
    pub rank_ker_l: usize,
    pub rank_im_fl: usize,
    pub rank_sum: usize,
    pub rank_intersection: usize,
    pub over_q: bool,
    pub over_z: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistAnalysis {
    pub d: usize,
    pub s: i64,
    pub determinant: i64,
    pub unimodular: bool,
    pub squares_to_identity: bool,
    pub minus_identity_squares_to_zero: bool,
    pub structure: TwistStructure,
    pub rank_m_minus_i: usize,
    pub fixed_subspace_dimension: usize,
    pub expected_moved_rank: usize,
    pub ker_l_basis: Vec<Weight>,
    pub ker_l_fixed_pointwise: bool,
    pub f_classes: Vec<KClass>,
    /// `M [F l^{∨k}]` for each `k`.
    pub images_of_f_classes: Vec<KClass>,
    pub rf_classes_vanish: bool,
    /// `[RF l^{∨k}] = 0` for all `k` implies `(M - I)² = 0`.
    pub implication_holds: bool,
    pub claimed: String,
    pub claim_agrees: bool,
    pub direct_sum: DirectSumTest,
    pub summary: String,
    pub graded: GradedTwistAnalysis,
}

pub fn analyze_twist(m: &TwistMatrix) -> Result<TwistAnalysis> {
    use num_traits::ToPrimitive;
    let d = m.d;
    let n = m.basis.len();
    let g = gram_matrix(d)?;
    let id = linalg::identity(n);
    let n_minus = linalg::sub(&m.matrix, &id);
    let squares_to_identity = linalg::mul(&m.matrix, &m.matrix) == id;
    let minus_identity_squares_to_zero = linalg::is_zero(&linalg::mul(&n_minus, &n_minus));
    let structure = match (linalg::is_zero(&n_minus), squares_to_identity, minus_identity_squares_to_zero) {
        (true, _, _) => TwistStructure::Identity,
        (false, true, _) => TwistStructure::Involution,
        (false, false, true) => TwistStructure::Unipotent,
        _ => TwistStructure::Neither,
    };
    let determinant = linalg::determinant(&m.matrix).to_i64().unwrap_or(i64::MAX);

    let mut ker_l_basis = Vec::new();
    let mut ker_cols = Vec::new();
    for (i, alpha) in m.basis.iter().enumerate() {
        if apply_r(&DominantWeight::new(alpha.clone())?, d)?.is_empty() {
            ker_l_basis.push(alpha.clone());
            ker_cols.push(i);
        }
    }
    let ker_l_fixed_pointwise = ker_cols
        .iter()
        .all(|&c| (0..n).all(|r| m.matrix[r][c] == id[r][c]));

    let f_classes = (0..=d - 2)
        .map(|k| f_class_with(&g, k))
        .collect::<Result<Vec<_>>>()?;
    let images_of_f_classes: Vec<KClass> = f_classes
        .iter()
        .map(|f| KClass {
            d,
            coords: linalg::mul_vec(&m.matrix, &f.coords),
        })
        .collect();

    let mut rf_classes_vanish = true;
    for k in 0..=d - 2 {
        rf_classes_vanish &= rf_generator(k, d)?.k_class_multiple == 0;
    }

    let ker_span: Matrix = ker_cols
        .iter()
        .map(|&c| (0..n).map(|r| i64::from(r == c)).collect())
        .collect();
    let im_span: Matrix = f_classes.iter().map(|f| f.coords.clone()).collect();
    let both: Matrix = ker_span.iter().chain(&im_span).cloned().collect();
    let (rank_ker_l, rank_im_fl, rank_sum) = (
        linalg::rank(&ker_span),
        linalg::rank(&im_span),
        linalg::rank(&both),
    );
    let over_q = rank_sum == n && rank_ker_l + rank_im_fl == n;
    let claim_agrees = ker_l_fixed_pointwise
        && rank_im_fl == d - 1
        && f_classes
            .iter()
            .zip(&images_of_f_classes)
            .all(|(f, mf)| f.coords.iter().zip(&mf.coords).all(|(x, y)| *y == -x));
    let direct_sum = DirectSumTest {
        rank_ker_l,
        rank_im_fl,
        rank_sum,
        rank_intersection: rank_ker_l + rank_im_fl - rank_sum,
        over_q,
        over_z: over_q && both.len() == n && linalg::is_unimodular(&both),
    };

    let rank_m_minus_i = linalg::rank(&n_minus);
    let summary = format!(
        "computed: {}; claimed: identity on [ker L] and -1 on [Im FL] ({})",
        match structure {
            TwistStructure::Identity => "M = I",
            TwistStructure::Involution => "M^2 = I",
            TwistStructure::Unipotent => "(M - I)^2 = 0 with M != I",
            TwistStructure::Neither => "neither M^2 = I nor (M - I)^2 = 0",
        },
        if claim_agrees { "agree" } else { "disagree" }
    );
    Ok(TwistAnalysis {
        d,
        s: m.s,
        determinant,
        unimodular: determinant.abs() == 1,
        squares_to_identity,
        minus_identity_squares_to_zero,
        structure,
        rank_m_minus_i,
        fixed_subspace_dimension: n - rank_m_minus_i,
        expected_moved_rank: d - 1,
        ker_l_basis,
        ker_l_fixed_pointwise,
        f_classes,
        images_of_f_classes,
        rf_classes_vanish,
        implication_holds: !rf_classes_vanish || minus_identity_squares_to_zero,
        claimed: "T^K = diag(1, -1) on [ker L] ⊕ [Im FL]".to_string(),
        claim_agrees,
        direct_sum,
        summary,
        graded: analyze_graded(&twist_matrix_graded(d)?)?,
    })
}

/// Weight of `R` for the fibre-scaling action: `R(Sym^b S^∨) = l^{∨b}[-s]{-d}`,
/// the difference of the weights of `ω_{X₀}` and `ω_X` (fibre ranks `d` and `2d`).
pub fn r_grading_weight(d: usize) -> i64 {
    -(d as i64)
}

/// Coordinates over the Kapranov basis in `K^{C*}(X) ≅ K(Gr)[q, q^{-1}]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedKClass {
    pub d: usize,
    pub coords: Vec<Laurent>,
}

/// `[E{c}] = q^c [E]` with `c` the `cstar` of each term.
pub fn reduce_to_basis_graded(x: &FormalSum<SchurTerm>, d: usize) -> Result<GradedKClass> {
    let g = gram_matrix(d)?;
    reduce_graded_with(&g, x)
}

fn reduce_graded_with(g: &GramMatrix, x: &FormalSum<SchurTerm>) -> Result<GradedKClass> {
    let mut coords = vec![Laurent::zero(); g.basis.len()];
    for (t, m) in x.iter() {
        let plain = reduce_with(g, &FormalSum::single(t.clone(), m))?;
        for (c, p) in coords.iter_mut().zip(&plain.coords) {
            *c = &*c + &Laurent::monomial(*p, t.cstar);
        }
    }
    Ok(GradedKClass { d: g.d, coords })
}

pub fn f_class_graded(k: usize, d: usize) -> Result<GradedKClass> {
    let g = gram_matrix(d)?;
    reduce_graded_with(&g, &f_schur_sum(k, d)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedTwistMatrix {
    pub d: usize,
    pub s: i64,
    pub r_weight: i64,
    pub basis: Vec<Weight>,
    pub matrix: LaurentMatrix,
}

/// `M e_α = e_α - [F R e_α]` in graded K-theory.
pub fn twist_matrix_graded(d: usize) -> Result<GradedTwistMatrix> {
    check_d_at_least(d, 3)?;
    let g = gram_matrix(d)?;
    let s = geometry_stats(d)?.s;
    let w = r_grading_weight(d);
    let basis = g.basis.clone();
    let mut matrix = laurent::mat_identity(basis.len());
    for (col, alpha) in basis.iter().enumerate() {
        for (t, m) in apply_r(&DominantWeight::new(alpha.clone())?, d)?.iter() {
            let scale = m * sign(t.shift) * weyl_dimension(t.v_weight.as_weight(), d)? as i64;
            let f = reduce_graded_with(&g, &f_schur_sum(t.l_power as usize, d)?)?;
            let factor = Laurent::monomial(scale, w);
            for (row, c) in f.coords.iter().enumerate() {
                matrix[row][col] = &matrix[row][col] - &(&factor * c);
            }
        }
    }
    Ok(GradedTwistMatrix {
        d,
        s,
        r_weight: w,
        basis,
        matrix,
    })
}

/// Integer structure of a specialization of the graded matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Specialization {
    pub q: i64,
    pub matrix: Matrix,
    pub determinant: i64,
    pub rank_m_minus_i: usize,
    pub squares_to_identity: bool,
    pub minus_identity_squares_to_zero: bool,
    /// `M` is `1` on the ker-L basis and `-1` on `[F l^{∨k}]`, which span rank `d-1`.
    pub claim_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedTwistAnalysis {
    pub r_weight: i64,
    pub f_classes: Vec<GradedKClass>,
    pub f_class_rank: usize,
    pub matrix: LaurentMatrix,
    pub ker_l_fixed_pointwise: bool,
    pub rank_m_minus_i: usize,
    pub eigenvalue_on_im_fl: Laurent,
    /// `M [F l^{∨k}] = q^w [F l^{∨k}]` for every `k`.
    pub im_fl_eigen: bool,
    /// `(M - I)(M - q^w I) = 0`.
    pub minimal_relation_holds: bool,
    pub determinant: Option<Laurent>,
    /// `[RF l^{∨k}] = (1 + (-1)^s q^w) [l^{∨k}]`.
    pub rf_class_multiple: Laurent,
    pub squares_to_identity: bool,
    pub minus_identity_squares_to_zero: bool,
    pub specializations: Vec<Specialization>,
}

fn specialize(m: &GradedTwistMatrix, ker_cols: &[usize], f: &[GradedKClass], q: i64) -> Result<Specialization> {
    use num_traits::ToPrimitive;
    let to_i64 = |x: i128| i64::try_from(x).map_err(|_| Error::Consistency(format!("entry {x} overflows")));
    let matrix: Matrix = laurent::mat_eval(&m.matrix, q)
        .ok_or_else(|| Error::Consistency(format!("cannot specialize at q = {q}")))?
        .into_iter()
        .map(|r| r.into_iter().map(to_i64).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let n = matrix.len();
    let id = linalg::identity(n);
    let n_minus = linalg::sub(&matrix, &id);
    let mut claim_agrees = ker_cols.iter().all(|&c| (0..n).all(|r| matrix[r][c] == id[r][c]));
    let mut f_rows = Vec::new();
    for fc in f {
        let v: Vec<i64> = fc
            .coords
            .iter()
            .map(|x| x.eval(q).ok_or_else(|| Error::Consistency("specialization".into())).and_then(to_i64))
            .collect::<Result<_>>()?;
        let mv = linalg::mul_vec(&matrix, &v);
        claim_agrees &= mv.iter().zip(&v).all(|(a, b)| *a == -b);
        f_rows.push(v);
    }
    claim_agrees &= linalg::rank(&f_rows) == f.len();
    Ok(Specialization {
        q,
        determinant: linalg::determinant(&matrix).to_i64().unwrap_or(i64::MAX),
        rank_m_minus_i: linalg::rank(&n_minus),
        squares_to_identity: linalg::mul(&matrix, &matrix) == id,
        minus_identity_squares_to_zero: linalg::is_zero(&linalg::mul(&n_minus, &n_minus)),
        claim_agrees,
        matrix,
    })
}

pub fn analyze_graded(m: &GradedTwistMatrix) -> Result<GradedTwistAnalysis> {
    let d = m.d;
    let n = m.basis.len();
    let id = laurent::mat_identity(n);
    let n_minus = laurent::mat_sub(&m.matrix, &id);
    let lambda = Laurent::monomial(1, m.r_weight);
    let mut ker_cols = Vec::new();
    for (i, alpha) in m.basis.iter().enumerate() {
        if apply_r(&DominantWeight::new(alpha.clone())?, d)?.is_empty() {
            ker_cols.push(i);
        }
    }
    let ker_l_fixed_pointwise = ker_cols
        .iter()
        .all(|&c| (0..n).all(|r| m.matrix[r][c] == id[r][c]));
    let f_classes = (0..=d - 2)
        .map(|k| f_class_graded(k, d))
        .collect::<Result<Vec<_>>>()?;
    let f_rows: LaurentMatrix = f_classes.iter().map(|f| f.coords.clone()).collect();
    let im_fl_eigen = f_classes.iter().all(|f| {
        let col: LaurentMatrix = f.coords.iter().map(|x| vec![x.clone()]).collect();
        let image = laurent::mat_mul(&m.matrix, &col);
        image.iter().zip(&f.coords).all(|(row, x)| row[0] == &lambda * x)
    });
    let minimal_relation_holds = laurent::mat_is_zero(&laurent::mat_mul(
        &n_minus,
        &laurent::mat_sub(&m.matrix, &laurent::mat_scaled(&id, &lambda)),
    ));
    let rank_m_minus_i = laurent::mat_rank(&n_minus);
    // diagonalizable with eigenvalues 1 and q^w ≠ 1
    let determinant = minimal_relation_holds.then(|| Laurent::monomial(1, m.r_weight * rank_m_minus_i as i64));
    let rf_class_multiple = &Laurent::constant(1) + &Laurent::monomial(sign(m.s), m.r_weight);
    let specializations = [1, -1]
        .into_iter()
        .map(|q| specialize(m, &ker_cols, &f_classes, q))
        .collect::<Result<Vec<_>>>()?;
    Ok(GradedTwistAnalysis {
        r_weight: m.r_weight,
        f_class_rank: laurent::mat_rank(&f_rows),
        f_classes,
        matrix: m.matrix.clone(),
        ker_l_fixed_pointwise,
        rank_m_minus_i,
        eigenvalue_on_im_fl: lambda,
        im_fl_eigen,
        minimal_relation_holds,
        determinant,
        rf_class_multiple,
        squares_to_identity: laurent::mat_mul(&m.matrix, &m.matrix) == id,
        minus_identity_squares_to_zero: laurent::mat_is_zero(&laurent::mat_mul(&n_minus, &n_minus)),
        specializations,
    })
}

/// How the `cstar` field of a term enters the graded pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grading {
    /// `Hom(A{a}, B{b})_k = Hom(A, B)_{k+a-b}`.
    Internal,
    /// Ignore `cstar`.
    Flat,
}

/// `χ_k(x, y) = Σ_i (-1)^i dim` of the `(i, k)` cell of `RHom_X(x, y)` for `k <= k_max`.
pub fn euler_pairing_q(
    x: &FormalSum<SchurTerm>,
    y: &FormalSum<SchurTerm>,
    d: usize,
    k_max: usize,
    grading: Grading,
) -> Result<Vec<i64>> {
    check_d_at_least(d, 3)?;
    let mut pairs = Vec::new();
    for (a, ma) in x.iter() {
        check_term(a, d)?;
        for (b, mb) in y.iter() {
            check_term(b, d)?;
            pairs.push((a, b, ma * mb));
        }
    }
    let per_pair = pairs
        .par_iter()
        .map(|(a, b, m)| {
            let offset = match grading {
                Grading::Internal => a.cstar - b.cstar,
                Grading::Flat => 0,
            };
            // Hom(A ⊗ W, B ⊗ W') = Hom(A, B) ⊗ W^∨ ⊗ W'
            let scale = m
                * sign(b.shift - a.shift)
                * weyl_dimension(a.v_weight.as_weight(), d)? as i64
                * weyl_dimension(b.v_weight.as_weight(), d)? as i64;
            (0..=k_max)
                .map(|k| {
                    let inner = k as i64 + offset;
                    if inner < 0 {
                        return Ok(0);
                    }
                    Ok(scale * euler_x_degree(a.s_weight.as_weight(), b.s_weight.as_weight(), d, inner as usize)?)
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = vec![0; k_max + 1];
    for v in per_pair {
        for (o, x) in out.iter_mut().zip(v) {
            *o += x;
        }
    }
    Ok(out)
}

/// The formal sum `Σ_j (-1)^j E_{k,j}` whose class is `[F l^{∨k}]`.
pub fn f_schur_sum(k: usize, d: usize) -> Result<FormalSum<SchurTerm>> {
    let complex = koszul_terms(k, d)?;
    let mut out = FormalSum::new();
    for (&j, e) in &complex.terms {
        out.add_assign_scaled(e, sign(j as i64));
    }
    Ok(out)
}

/// Total dimension of an equivariant coordinate vector.
pub fn equivariant_dimensions(coords: &[RepSum]) -> Vec<i64> {
    coords.iter().map(rep_dimension).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(p: &[i64]) -> Weight {
        Weight::new(p.to_vec())
    }

    fn term(s: &[i64], v: &[i64], shift: i64) -> FormalSum<SchurTerm> {
        FormalSum::single(
            SchurTerm::new(
                DominantWeight::new(w(s)).unwrap(),
                DominantWeight::new(w(v)).unwrap(),
                shift,
                0,
            ),
            1,
        )
    }

    #[test]
    fn gram_examples() {
        for d in 3..6 {
            let g = gram_matrix(d).unwrap();
            assert_eq!(g.matrix[0][0], 1);
            assert_eq!(g.matrix[0][1], d as i64);
            assert_eq!(g.matrix[1][0], 0);
            assert!(g.is_unimodular() && g.is_upper_unitriangular());
            assert!(g.unitriangular_order().is_some());
        }
    }

    #[test]
    fn reduce_examples() {
        let d = 4;
        let e = reduce_to_basis(&term(&[1, 0], &[0, 0, 0, 0], 0), d).unwrap();
        assert_eq!(e, KClass::unit(d, &w(&[1, 0])).unwrap());
        let e = reduce_to_basis(&term(&[1, 0], &[1, 0, 0, 0], 0), d).unwrap();
        assert_eq!(e.coords, vec![0, 4, 0, 0, 0, 0]);
        let x = term(&[3, 2], &[0, 0, 0, 0], 0);
        let c = reduce_to_basis(&x, d).unwrap();
        let g = gram_matrix(d).unwrap();
        assert_eq!(linalg::mul_vec(&g.matrix, &c.coords), pairing_vector(&x, d).unwrap());
        let shifted = reduce_to_basis(&term(&[3, 2], &[0, 0, 0, 0], -1), d).unwrap();
        assert!(shifted.coords.iter().zip(&c.coords).all(|(a, b)| *a == -b));
    }

    #[test]
    fn equivariant_reduction_matches_dimensions() {
        let d = 4;
        for x in [term(&[3, 2], &[1, 1, 0, 0], 0), term(&[2, -1], &[0, 0, 0, 0], 1)] {
            let plain = reduce_to_basis(&x, d).unwrap();
            let eq = reduce_to_basis_equivariant(&x, d).unwrap();
            assert_eq!(equivariant_dimensions(&eq), plain.coords);
        }
    }

    #[test]
    fn f_classes_vanish_without_grading() {
        // F l^{∨k} is supported on a proper cone in X
        for d in 3..6 {
            for k in 0..=d - 2 {
                assert!(f_class(k, d).unwrap().is_zero());
            }
        }
        let c = reduce_to_basis(&f_schur_sum(0, 3).unwrap(), 3).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn graded_f_class_rank() {
        for d in 3..6 {
            let rows: LaurentMatrix = (0..=d - 2).map(|k| f_class_graded(k, d).unwrap().coords).collect();
            assert_eq!(laurent::mat_rank(&rows), d - 1);
            let f0 = f_class_graded(0, d).unwrap();
            assert_eq!(f0.coords[0], &Laurent::constant(1) - &Laurent::monomial(1, d as i64));
        }
    }

    #[test]
    fn twist_d4() {
        let m = twist_matrix(4).unwrap();
        let a = analyze_twist(&m).unwrap();
        assert_eq!(a.determinant.abs(), 1);
        assert!(a.ker_l_fixed_pointwise);
        assert_eq!(a.ker_l_basis.len(), 3);
        assert_eq!(a.structure, TwistStructure::Identity);
        assert_eq!(a.rank_m_minus_i, 0);
        assert!(a.implication_holds && a.rf_classes_vanish);
        assert!(!a.claim_agrees);

        let g = &a.graded;
        assert_eq!(g.rank_m_minus_i, 3);
        assert!(g.ker_l_fixed_pointwise && g.im_fl_eigen && g.minimal_relation_holds);
        assert_eq!(g.determinant, Some(Laurent::monomial(1, -12)));
        assert!(!g.squares_to_identity && !g.minus_identity_squares_to_zero);
    }

    #[test]
    fn graded_specialization_at_minus_one() {
        for d in [3, 5] {
            let a = analyze_graded(&twist_matrix_graded(d).unwrap()).unwrap();
            let sp = a.specializations.iter().find(|s| s.q == -1).unwrap();
            assert!(sp.squares_to_identity && sp.claim_agrees);
        }
        let a = analyze_graded(&twist_matrix_graded(4).unwrap()).unwrap();
        let sp = a.specializations.iter().find(|s| s.q == -1).unwrap();
        assert!(sp.minus_identity_squares_to_zero && !sp.claim_agrees);
    }

    #[test]
    fn pairing_examples() {
        let d = 4;
        let o = term(&[0, 0], &[0, 0, 0, 0], 0);
        let s_dual = term(&[1, 0], &[0, 0, 0, 0], 0);
        assert_eq!(euler_pairing_q(&o, &o, d, 0, Grading::Internal).unwrap(), vec![1]);
        assert_eq!(euler_pairing_q(&o, &s_dual, d, 0, Grading::Internal).unwrap(), vec![4]);
    }
}
