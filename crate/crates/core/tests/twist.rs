use grasstwist::hom::rhom_x0_degree;
use grasstwist::ktheory::{euler_pairing_q, f_schur_sum, r_grading_weight, Grading};
use grasstwist::schur::{rep_dimension, DominantWeight, FormalSum, SchurTerm, Weight};
use grasstwist::twist::{adjoint_image_basis, geometry_stats, koszul_terms, rf_generator, spherical_r1};

fn bundle(parts: [i64; 2], d: usize) -> FormalSum<SchurTerm> {
    FormalSum::single(SchurTerm::bundle(DominantWeight::new(Weight::from(parts)).unwrap(), d), 1)
}

fn chi_x0(a: i64, b: i64, d: usize, k: i64) -> i64 {
    if k < 0 {
        return 0;
    }
    rhom_x0_degree(a, b, d, k as usize)
        .unwrap()
        .iter()
        .map(|(i, rep)| if i % 2 == 0 { rep_dimension(rep) } else { -rep_dimension(rep) })
        .sum()
}

/// `RHom_X(Sym^b S^∨, F l^{∨m}) = RHom_{X₀}(l^{∨b}, l^{∨m})`, degree by degree.
#[test]
fn left_adjoint_matches_graded_pairing() {
    for d in 3..=5usize {
        for b in 0..=d as i64 - 2 {
            for m in 0..=d - 2 {
                let lhs = euler_pairing_q(&bundle([b, 0], d), &f_schur_sum(m, d).unwrap(), d, 8, Grading::Internal).unwrap();
                let rhs: Vec<i64> = (0..=8).map(|k| chi_x0(b, m as i64, d, k)).collect();
                assert_eq!(lhs, rhs, "d={d} b={b} m={m}");
            }
        }
    }
}

/// `RHom_X(F l^{∨m}, Sym^b S^∨) = RHom_{X₀}(l^{∨m}, l^{∨b}[-s]{w})`.
#[test]
fn right_adjoint_matches_graded_pairing() {
    for d in 3..=5usize {
        let s = geometry_stats(d).unwrap().s;
        let w = r_grading_weight(d);
        let sign = if s % 2 == 0 { 1 } else { -1 };
        for b in 0..=d as i64 - 2 {
            for m in 0..=d - 2 {
                let lhs = euler_pairing_q(&f_schur_sum(m, d).unwrap(), &bundle([b, 0], d), d, 8, Grading::Internal).unwrap();
                let rhs: Vec<i64> = (0..=8).map(|k| sign * chi_x0(m as i64, b, d, k - w)).collect();
                assert_eq!(lhs, rhs, "d={d} b={b} m={m}");
            }
        }
    }
}

#[test]
fn ker_l_is_orthogonal_to_the_image() {
    for d in 3..=5usize {
        for alpha in [[1, 1], [2, 1], [2, 2], [3, 1]] {
            if alpha[0] > d as i64 - 2 {
                continue;
            }
            for m in 0..=d - 2 {
                let chi = euler_pairing_q(&bundle(alpha, d), &f_schur_sum(m, d).unwrap(), d, 10, Grading::Internal).unwrap();
                assert!(chi.iter().all(|&c| c == 0), "d={d} α={alpha:?} m={m}: {chi:?}");
            }
        }
    }
}

#[test]
fn rf_survivors_for_small_d() {
    for d in 3..=6usize {
        let s = 2 * d as i64 - 3;
        for k in 0..=d - 2 {
            let r = rf_generator(k, d).unwrap();
            assert_eq!(r.survivors, vec![format!("l^{k}"), format!("l^{k}[-{s}]")]);
            assert!(r.middle_vanishing && r.det_factors_cancel && r.no_cross_homs);
            assert_eq!(r.k_class_multiple, 0);
        }
    }
}

#[test]
fn koszul_terms_have_expected_ranks() {
    // Σ_j (-1)^j rank E_{k,j} (with shift signs) vanishes: the complex is supported in positive codimension
    for d in 3..=6usize {
        for k in 0..=d - 2 {
            let c = koszul_terms(k, d).unwrap();
            let mut total = 0i64;
            for (&j, e) in &c.terms {
                for (t, m) in e.iter() {
                    let rank_s = (t.s_weight.parts()[0] - t.s_weight.parts()[1] + 1) as i64;
                    let rank_v = grasstwist::schur::weyl_dimension(&t.v_weight, d).unwrap() as i64;
                    let sign = if (j as i64 + t.shift) % 2 == 0 { 1 } else { -1 };
                    total += sign * m * rank_s * rank_v;
                }
            }
            assert_eq!(total, 0, "d={d} k={k}");
        }
    }
}

#[test]
fn spherical_for_r1() {
    for d in 2..=6usize {
        let r = spherical_r1(d).unwrap();
        assert!(r.is_spherical, "d={d}");
        let dims: Vec<(usize, i64)> = r.total.iter().map(|(i, rep)| (*i, rep_dimension(rep))).collect();
        assert_eq!(dims, vec![(0, 1), (2 * d - 1, 1)]);
    }
}

#[test]
fn image_of_the_collection_under_l() {
    for d in 3..=6usize {
        let basis = adjoint_image_basis(d).unwrap();
        let powers: Vec<i64> = basis.iter().map(|t| t.l_power).collect();
        assert_eq!(powers, (0..=d as i64 - 2).collect::<Vec<_>>());
        assert!(basis.iter().all(|t| t.shift == 0 && t.is_det_free()));
    }
}
