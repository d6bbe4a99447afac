use clap::{Args, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use grasstwist::bott::{bott, kapranov_collection, strong_exceptional_check, BottResult, CollectionWeight, ExceptionalReport};
use grasstwist::hom::{fullness_check, rhom_x0_graded, rhom_x_graded, tilting_check, FullnessFailure, GradedHom, Space, DEFAULT_K_MAX};
use grasstwist::ktheory::{
    analyze_twist, euler_pairing_q, f_schur_sum, gram_matrix, reduce_to_basis, reduce_to_basis_equivariant,
    reduce_to_basis_graded, twist_matrix, Grading, TwistAnalysis, TwistMatrix,
};
use grasstwist::report::CheckReport;
use grasstwist::schur::{
    cauchy_sym, littlewood_richardson, pad, pieri, rep_dimension, weyl_dimension, DominantWeight, FormalSum, RepSum,
    SchurTerm, Weight,
};
use grasstwist::twist::{adjoint_image_basis, apply_adjoint, geometry_stats, koszul_terms, rf_generator, spherical_r1, Adjoint, GeometryStats, X0Object};
use grasstwist::Error;

use crate::Status;

pub enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Consistency(_) | Error::NonIntegral(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

pub struct Outcome {
    pub status: Status,
    pub payload: Value,
    pub k_max: Option<usize>,
    pub tsv: Option<String>,
}

fn outcome<T: Serialize>(status: Status, payload: &T) -> Result<Outcome, Failure> {
    Ok(Outcome {
        status,
        payload: serde_json::to_value(payload).map_err(|e| Failure::Internal(e.to_string()))?,
        k_max: None,
        tsv: None,
    })
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

#[derive(Args, Debug, Clone, Copy)]
pub struct KMax {
    /// Highest `Sym`-degree of the fibre coordinates to expand.
    #[arg(long = "kmax", env = "GRASSTWIST_KMAX", default_value_t = DEFAULT_K_MAX)]
    pub k_max: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Littlewood–Richardson product of two GL(n) weights.
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight,
        #[arg(long, allow_hyphen_values = true)]
        mu: Weight,
        /// Rank of the group; defaults to the length of `lambda`.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Pieri rule: Σ^λ ⊗ ∧^j.
    Pieri {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Weight,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Cauchy decomposition of Sym^k(V ⊗ S^∨).
    Cauchy {
        #[arg(long)]
        k: i64,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
    /// Borel–Weil–Bott for Σ^α S^∨ ⊗ Σ^β Q^∨ on Gr(r, d).
    Bott {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Weight,
        /// Defaults to the zero weight.
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<Weight>,
    },
    /// Kapranov's exceptional collection on Gr(r, d).
    Collection {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
    /// Strong exceptionality of the collection, plus the Gram matrix when r = 2.
    ExceptionalCheck {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
    },
    /// Graded RHom between two tilting summands on X or X₀.
    Rhom {
        #[arg(long, default_value = "X")]
        space: Space,
        #[arg(long)]
        d: usize,
        /// A collection weight on X, or a power of l^∨ on X₀.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Weight,
        #[arg(long, allow_hyphen_values = true)]
        beta: Weight,
        #[command(flatten)]
        k_max: KMax,
    },
    /// Vanishing of higher RHom between all tilting summands.
    TiltingCheck {
        #[arg(long, default_value = "X")]
        space: Space,
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        k_max: KMax,
    },
    /// Character-level surjectivity of RHom_X(Sym^a, Sym^b) onto RHom_{X₀}(l^a, l^b).
    FullnessCheck {
        #[arg(long)]
        d: usize,
        #[arg(long, required_unless_present = "all")]
        a: Option<i64>,
        #[arg(long, required_unless_present = "all")]
        b: Option<i64>,
        /// Every pair 0 <= a, b <= d-2.
        #[arg(long, conflicts_with_all = ["a", "b"])]
        all: bool,
        #[command(flatten)]
        k_max: KMax,
    },
    /// Dimensions, the two formulas for s, and the canonical classes of X and X₀.
    Geometry {
        #[arg(long)]
        d: usize,
    },
    /// Terms E_{k,j} of the complex convolving to F l^{∨k}.
    Koszul {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
    },
    /// L or R of a collection member, or of every member with --all.
    Adjoint {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "all")]
        alpha: Option<Weight>,
        #[arg(long, default_value = "L")]
        which: Adjoint,
        #[arg(long, conflicts_with = "alpha")]
        all: bool,
    },
    /// RF l^{∨k}: survivors and vanishing of the middle terms.
    Rf {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// RHom of the zero section in Tot(V^∨ ⊗ O(-1)) over PV.
    SphericalR1 {
        #[arg(long)]
        d: usize,
    },
    /// Euler-characteristic Gram matrix of the collection.
    Gram {
        #[arg(long)]
        d: usize,
    },
    /// Class of a bundle, or of F l^{∨k}, in the collection basis.
    Kclass {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "f_class")]
        s_weight: Option<Weight>,
        /// Defaults to the trivial representation.
        #[arg(long, allow_hyphen_values = true)]
        v_weight: Option<Weight>,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        shift: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        cstar: i64,
        #[arg(long, conflicts_with = "s_weight")]
        f_class: Option<usize>,
        /// Also give coordinates in C*-graded K-theory.
        #[arg(long)]
        graded: bool,
        /// Also give GL(V)-equivariant coordinates.
        #[arg(long)]
        equivariant: bool,
    },
    /// Matrix of the twist on K-theory and its structure.
    TwistK {
        #[arg(long)]
        d: usize,
    },
    /// Graded Euler pairing χ_k(x, y) on X.
    Pairing {
        #[arg(long)]
        d: usize,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "x_f")]
        x: Option<Weight>,
        #[arg(long, conflicts_with = "x")]
        x_f: Option<usize>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "y_f")]
        y: Option<Weight>,
        #[arg(long, conflicts_with = "y")]
        y_f: Option<usize>,
        #[arg(long, value_enum, default_value = "internal")]
        grading: GradingArg,
        #[command(flatten)]
        k_max: KMax,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GradingArg {
    Internal,
    Flat,
}

impl From<GradingArg> for Grading {
    fn from(g: GradingArg) -> Self {
        match g {
            GradingArg::Internal => Grading::Internal,
            GradingArg::Flat => Grading::Flat,
        }
    }
}

/// Readable name of a `GL(V)`-representation given by its highest weight on `V^∨`.
pub fn describe_rep(w: &Weight) -> String {
    let p = w.parts();
    if p.iter().all(|&x| x == 0) {
        return "trivial".to_string();
    }
    if p.iter().all(|&x| x == p[0]) {
        return match p[0] {
            -1 => "det V".to_string(),
            1 => "det V^∨".to_string(),
            c if c < 0 => format!("(det V)^{}", -c),
            c => format!("(det V^∨)^{c}"),
        };
    }
    format!("Σ^({w}) V^∨")
}

#[derive(Serialize, Deserialize)]
struct ProductPayload {
    lambda: Weight,
    other: String,
    n: usize,
    result: RepSum,
    dimension: i64,
}

#[derive(Serialize, Deserialize)]
struct CauchyPayload {
    k: i64,
    d: usize,
    r: usize,
    partitions: Vec<DominantWeight>,
    dimension: u64,
    expected_dimension: u64,
}

#[derive(Serialize, Deserialize)]
struct BottPayload {
    r: usize,
    d: usize,
    alpha: Weight,
    beta: Weight,
    cohomology: BottResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rep: Option<String>,
    dim: u64,
}

#[derive(Serialize, Deserialize)]
struct CollectionPayload {
    r: usize,
    d: usize,
    collection: Vec<CollectionWeight>,
}

#[derive(Serialize, Deserialize)]
struct GramSummary {
    determinant: i64,
    unimodular: bool,
    upper_unitriangular: bool,
    unitriangular_order: Option<Vec<Weight>>,
}

#[derive(Serialize, Deserialize)]
struct ExceptionalPayload {
    #[serde(flatten)]
    report: ExceptionalReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    gram: Option<GramSummary>,
}

#[derive(Serialize, Deserialize)]
struct RhomPayload {
    space: Space,
    d: usize,
    alpha: Weight,
    beta: Weight,
    cells: GradedHom,
    euler: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct FullnessPair {
    a: i64,
    b: i64,
    #[serde(flatten)]
    check: CheckReport<FullnessFailure>,
}

#[derive(Serialize, Deserialize)]
struct FullnessPayload {
    d: usize,
    pass: bool,
    pairs: Vec<FullnessPair>,
}

#[derive(Serialize, Deserialize)]
struct GeometryPayload {
    #[serde(flatten)]
    stats: GeometryStats,
    formulas_for_s_agree: bool,
    codim_b_is_d_minus_1: bool,
    dim_im_i_is_dim_gr_plus_d_plus_2: bool,
}

#[derive(Serialize, Deserialize)]
struct AdjointEntry {
    alpha: Weight,
    image: X0Object,
    rendered: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct AdjointPayload {
    d: usize,
    which: Adjoint,
    images: Vec<AdjointEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nonzero_images: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GramPayload {
    d: usize,
    basis: Vec<Weight>,
    matrix: Vec<Vec<i64>>,
    #[serde(flatten)]
    summary: GramSummary,
}

#[derive(Serialize, Deserialize)]
struct KClassPayload {
    d: usize,
    basis: Vec<Weight>,
    input: FormalSum<SchurTerm>,
    coords: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    graded_coords: Option<Vec<grasstwist::laurent::Laurent>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    equivariant_coords: Option<Vec<RepSum>>,
}

#[derive(Serialize, Deserialize)]
struct TwistPayload {
    #[serde(flatten)]
    twist: TwistMatrix,
    analysis: TwistAnalysis,
}

#[derive(Serialize, Deserialize)]
struct PairingPayload {
    d: usize,
    x: FormalSum<SchurTerm>,
    y: FormalSum<SchurTerm>,
    grading: Grading,
    chi: Vec<i64>,
}

fn rank_of(n: Option<usize>, w: &Weight) -> usize {
    n.unwrap_or(w.len())
}

fn gram_summary(d: usize) -> Result<(grasstwist::ktheory::GramMatrix, GramSummary), Failure> {
    let g = gram_matrix(d)?;
    let summary = GramSummary {
        determinant: g.determinant(),
        unimodular: g.is_unimodular(),
        upper_unitriangular: g.is_upper_unitriangular(),
        unitriangular_order: g
            .unitriangular_order()
            .map(|o| o.into_iter().map(|i| g.basis[i].clone()).collect()),
    };
    Ok((g, summary))
}

fn bundle_sum(w: &Weight, d: usize) -> Result<FormalSum<SchurTerm>, Failure> {
    Ok(FormalSum::single(SchurTerm::bundle(DominantWeight::new(w.clone())?, d), 1))
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Lr { .. } => "lr",
            Command::Pieri { .. } => "pieri",
            Command::Cauchy { .. } => "cauchy",
            Command::Bott { .. } => "bott",
            Command::Collection { .. } => "collection",
            Command::ExceptionalCheck { .. } => "exceptional-check",
            Command::Rhom { .. } => "rhom",
            Command::TiltingCheck { .. } => "tilting-check",
            Command::FullnessCheck { .. } => "fullness-check",
            Command::Geometry { .. } => "geometry",
            Command::Koszul { .. } => "koszul",
            Command::Adjoint { .. } => "adjoint",
            Command::Rf { .. } => "rf",
            Command::SphericalR1 { .. } => "spherical-r1",
            Command::Gram { .. } => "gram",
            Command::Kclass { .. } => "kclass",
            Command::TwistK { .. } => "twist-k",
            Command::Pairing { .. } => "pairing",
        }
    }

    pub fn run(&self) -> Result<Outcome, Failure> {
        match self {
            Command::Lr { lambda, mu, n } => {
                let n = rank_of(*n, lambda);
                let result = littlewood_richardson(lambda, mu, n)?;
                outcome(
                    Status::Computed,
                    &ProductPayload {
                        lambda: lambda.clone(),
                        other: mu.to_string(),
                        n,
                        dimension: rep_dimension(&result),
                        result,
                    },
                )
            }
            Command::Pieri { lambda, j, n } => {
                let n = rank_of(*n, lambda);
                let result = pieri(&DominantWeight::new(lambda.clone())?, *j, n)?;
                outcome(
                    Status::Computed,
                    &ProductPayload {
                        lambda: lambda.clone(),
                        other: format!("∧^{j}"),
                        n,
                        dimension: rep_dimension(&result),
                        result,
                    },
                )
            }
            Command::Cauchy { k, d, r } => {
                let partitions = cauchy_sym(*k, *d, *r)?;
                let mut dimension = 0;
                for lambda in &partitions {
                    dimension += weyl_dimension(&pad(lambda, *d), *d)? * weyl_dimension(&pad(lambda, *r), *r)?;
                }
                let n = (*r * *d) as u64;
                let expected_dimension = (0..*k as u64).fold(1u64, |acc, i| acc * (n + i) / (i + 1));
                outcome(
                    verdict(dimension == expected_dimension),
                    &CauchyPayload {
                        k: *k,
                        d: *d,
                        r: *r,
                        partitions,
                        dimension,
                        expected_dimension,
                    },
                )
            }
            Command::Bott { r, d, alpha, beta } => {
                let beta = beta.clone().unwrap_or_else(|| Weight::zero(d.saturating_sub(*r)));
                let h = bott(*r, *d, alpha, &beta)?;
                let (degree, rep) = match &h {
                    BottResult::Zero => (None, None),
                    BottResult::Cohomology { degree, rep } => (Some(*degree), Some(describe_rep(rep))),
                };
                outcome(
                    Status::Computed,
                    &BottPayload {
                        r: *r,
                        d: *d,
                        alpha: alpha.clone(),
                        beta,
                        dim: h.dimension(),
                        cohomology: h,
                        degree,
                        rep,
                    },
                )
            }
            Command::Collection { d, r } => outcome(
                Status::Computed,
                &CollectionPayload {
                    r: *r,
                    d: *d,
                    collection: kapranov_collection(*r, *d)?,
                },
            ),
            Command::ExceptionalCheck { d, r } => {
                let report = strong_exceptional_check(*r, *d)?;
                let gram = if *r == 2 && *d >= 3 { Some(gram_summary(*d)?.1) } else { None };
                let ok = report.check.pass
                    && gram
                        .as_ref()
                        .map_or(true, |g| g.unimodular && g.unitriangular_order.is_some());
                outcome(verdict(ok), &ExceptionalPayload { report, gram })
            }
            Command::Rhom { space, d, alpha, beta, k_max } => {
                let k_max = k_max.k_max;
                let cells = match space {
                    Space::X => rhom_x_graded(
                        &CollectionWeight::new(alpha.clone(), 2, *d)?,
                        &CollectionWeight::new(beta.clone(), 2, *d)?,
                        *d,
                        k_max,
                    )?,
                    Space::X0 => {
                        alpha.expect_len(1)?;
                        beta.expect_len(1)?;
                        rhom_x0_graded(alpha.parts()[0], beta.parts()[0], *d, k_max)?
                    }
                };
                let euler = (0..=k_max).map(|k| cells.euler_characteristic(k)).collect();
                let tsv = cells.to_tsv();
                let mut out = outcome(
                    Status::Computed,
                    &RhomPayload {
                        space: *space,
                        d: *d,
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                        cells,
                        euler,
                    },
                )?;
                out.k_max = Some(k_max);
                out.tsv = Some(tsv);
                Ok(out)
            }
            Command::TiltingCheck { space, d, k_max } => {
                let report = tilting_check(*space, *d, k_max.k_max)?;
                let mut out = outcome(verdict(report.check.pass), &report)?;
                out.k_max = Some(k_max.k_max);
                Ok(out)
            }
            Command::FullnessCheck { d, a, b, all, k_max } => {
                let pairs: Vec<(i64, i64)> = if *all {
                    let top = *d as i64 - 2;
                    (0..=top).flat_map(|a| (0..=top).map(move |b| (a, b))).collect()
                } else {
                    vec![(a.unwrap_or_default(), b.unwrap_or_default())]
                };
                let mut results = Vec::new();
                for (a, b) in pairs {
                    results.push(FullnessPair {
                        a,
                        b,
                        check: fullness_check(a, b, *d, k_max.k_max)?,
                    });
                }
                let pass = results.iter().all(|p| p.check.pass);
                let mut out = outcome(verdict(pass), &FullnessPayload { d: *d, pass, pairs: results })?;
                out.k_max = Some(k_max.k_max);
                Ok(out)
            }
            Command::Geometry { d } => {
                let stats = geometry_stats(*d)?;
                let di = *d as i64;
                let payload = GeometryPayload {
                    formulas_for_s_agree: stats.is_consistent(),
                    codim_b_is_d_minus_1: stats.codim_b == di - 1,
                    dim_im_i_is_dim_gr_plus_d_plus_2: stats.dim_im_i == stats.dim_gr + di + 2,
                    stats,
                };
                let ok = payload.formulas_for_s_agree
                    && payload.codim_b_is_d_minus_1
                    && payload.dim_im_i_is_dim_gr_plus_d_plus_2
                    && payload.stats.cy_x
                    && payload.stats.cy_x0;
                outcome(verdict(ok), &payload)
            }
            Command::Koszul { k, d } => outcome(Status::Computed, &koszul_terms(*k, *d)?),
            Command::Adjoint { d, alpha, which, all } => {
                let alphas: Vec<Weight> = if *all {
                    kapranov_collection(2, *d)?
                        .into_iter()
                        .map(|c| c.weight().clone())
                        .collect()
                } else {
                    vec![alpha.clone().unwrap_or_default()]
                };
                let mut images = Vec::new();
                for a in alphas {
                    let image = apply_adjoint(*which, &DominantWeight::new(a.clone())?, *d)?;
                    let rendered = image.keys().map(ToString::to_string).collect();
                    images.push(AdjointEntry { alpha: a, image, rendered });
                }
                let (status, nonzero_images) = if *all && *which == Adjoint::L {
                    let basis = adjoint_image_basis(*d)?;
                    let ok = basis.len() == d - 1
                        && basis.iter().enumerate().all(|(i, t)| t.l_power == i as i64 && t.shift == 0 && t.is_det_free());
                    (verdict(ok), Some(basis.iter().map(ToString::to_string).collect()))
                } else {
                    (Status::Computed, None)
                };
                outcome(
                    status,
                    &AdjointPayload {
                        d: *d,
                        which: *which,
                        images,
                        nonzero_images,
                    },
                )
            }
            Command::Rf { d, k } => {
                let r = rf_generator(*k, *d)?;
                let ok = r.middle_vanishing && r.survivor_terms.len() == 2 && r.det_factors_cancel && r.no_cross_homs;
                outcome(verdict(ok), &r)
            }
            Command::SphericalR1 { d } => {
                let r = spherical_r1(*d)?;
                outcome(verdict(r.is_spherical), &r)
            }
            Command::Gram { d } => {
                let (g, summary) = gram_summary(*d)?;
                let ok = summary.unimodular && summary.unitriangular_order.is_some();
                outcome(
                    verdict(ok),
                    &GramPayload {
                        d: g.d,
                        basis: g.basis,
                        matrix: g.matrix,
                        summary,
                    },
                )
            }
            Command::Kclass {
                d,
                s_weight,
                v_weight,
                shift,
                cstar,
                f_class,
                graded,
                equivariant,
            } => {
                let input = match (f_class, s_weight) {
                    (Some(k), _) => f_schur_sum(*k, *d)?,
                    (None, Some(s)) => {
                        let v = v_weight.clone().unwrap_or_else(|| Weight::zero(*d));
                        FormalSum::single(
                            SchurTerm::new(DominantWeight::new(s.clone())?, DominantWeight::new(v)?, *shift, *cstar),
                            1,
                        )
                    }
                    (None, None) => return Err(Failure::Input("give --s-weight or --f-class".into())),
                };
                let class = reduce_to_basis(&input, *d)?;
                let graded_coords = if *graded {
                    Some(reduce_to_basis_graded(&input, *d)?.coords)
                } else {
                    None
                };
                let equivariant_coords = if *equivariant {
                    Some(reduce_to_basis_equivariant(&input, *d)?)
                } else {
                    None
                };
                outcome(
                    Status::Computed,
                    &KClassPayload {
                        d: *d,
                        basis: class.basis()?,
                        input,
                        coords: class.coords,
                        graded_coords,
                        equivariant_coords,
                    },
                )
            }
            Command::TwistK { d } => {
                let twist = twist_matrix(*d)?;
                let analysis = analyze_twist(&twist)?;
                outcome(Status::Computed, &TwistPayload { twist, analysis })
            }
            Command::Pairing {
                d,
                x,
                x_f,
                y,
                y_f,
                grading,
                k_max,
            } => {
                let side = |w: &Option<Weight>, f: &Option<usize>| -> Result<FormalSum<SchurTerm>, Failure> {
                    match (w, f) {
                        (_, Some(m)) => Ok(f_schur_sum(*m, *d)?),
                        (Some(w), None) => bundle_sum(w, *d),
                        (None, None) => Err(Failure::Input("each side needs a weight or an F l^m index".into())),
                    }
                };
                let (x, y) = (side(x, x_f)?, side(y, y_f)?);
                let grading = Grading::from(*grading);
                let chi = euler_pairing_q(&x, &y, *d, k_max.k_max, grading)?;
                let mut out = outcome(Status::Computed, &PairingPayload { d: *d, x, y, grading, chi })?;
                out.k_max = Some(k_max.k_max);
                Ok(out)
            }
        }
    }
}
