//! Combinatorial routines against the character-polynomial oracle and closed formulas.

use grasstwist::bott::{bott, bott_sub};
use grasstwist::schur::{
    cauchy_sym, decompose_character, littlewood_richardson, pad, partitions, pieri, rep_dimension,
    schur_character, weyl_dimension, DominantWeight, Weight,
};

fn partitions_up_to(max_size: i64, n: usize) -> Vec<Weight> {
    (0..=max_size)
        .flat_map(|k| partitions(k, n))
        .map(Weight::new)
        .collect()
}

#[test]
fn littlewood_richardson_matches_characters() {
    let mut cases = 0;
    for n in 1..=4 {
        let shapes = partitions_up_to(6, n);
        let chars: Vec<_> = shapes.iter().map(|w| schur_character(w, n).unwrap()).collect();
        for (i, a) in shapes.iter().enumerate() {
            for (j, b) in shapes.iter().enumerate() {
                let expected = decompose_character(&chars[i].mul(&chars[j])).unwrap();
                assert_eq!(littlewood_richardson(a, b, n).unwrap(), expected, "{a} * {b} in GL({n})");
                cases += 1;
            }
        }
    }
    assert!(cases > 1500);
}

#[test]
fn littlewood_richardson_with_negative_parts() {
    let n = 3;
    let shapes: Vec<Weight> = partitions_up_to(4, n)
        .into_iter()
        .map(|w| w.shifted(-2))
        .collect();
    for a in &shapes {
        for b in &shapes {
            let expected = decompose_character(
                &schur_character(a, n).unwrap().mul(&schur_character(b, n).unwrap()),
            )
            .unwrap();
            assert_eq!(littlewood_richardson(a, b, n).unwrap(), expected, "{a} * {b}");
        }
    }
}

#[test]
fn pieri_matches_characters() {
    for n in 1..=4 {
        for lambda in partitions_up_to(6, n) {
            for j in 0..=n {
                let e_j = schur_character(&Weight::wedge(j, n), n).unwrap();
                let expected = decompose_character(&schur_character(&lambda, n).unwrap().mul(&e_j)).unwrap();
                let got = pieri(&DominantWeight::new(lambda.clone()).unwrap(), j, n).unwrap();
                assert_eq!(got, expected, "{lambda} ⊗ ∧^{j} in GL({n})");
            }
        }
    }
}

#[test]
fn weyl_dimension_matches_character_at_one() {
    for n in 1..=5 {
        let max_size = if n == 5 { 3 } else { 6 };
        for lambda in partitions_up_to(max_size, n) {
            for shift in [-2, 0, 3] {
                let w = lambda.shifted(shift);
                let chi = schur_character(&w, n).unwrap();
                assert_eq!(weyl_dimension(&w, n).unwrap() as i64, chi.eval_at_one(), "{w}");
            }
        }
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn cauchy_dimension_identity() {
    let r = 2;
    for d in 2..=5 {
        for k in 0..=6 {
            let total: i64 = cauchy_sym(k, d, r)
                .unwrap()
                .iter()
                .map(|lambda| {
                    let on_v = weyl_dimension(&pad(lambda, d), d).unwrap();
                    let on_s = weyl_dimension(&pad(lambda, r), r).unwrap();
                    (on_v * on_s) as i64
                })
                .sum();
            // dim Sym^k of an (r d)-dimensional space
            let rd = (r * d) as i64;
            assert_eq!(total, binomial(k + rd - 1, k), "d={d} k={k}");
        }
    }
}

/// `χ(P^{d-1}, O(m)) = binom(m + d - 1, d - 1)` as a polynomial in `m`.
fn chi_projective(m: i64, d: i64) -> i64 {
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 1..d {
        num *= (m + i) as i128;
        den *= i as i128;
    }
    (num / den) as i64
}

#[test]
fn bott_on_projective_space_matches_hilbert_polynomial() {
    for d in 2..=6usize {
        for m in -12..=12 {
            let h = bott(1, d, &Weight::from([m]), &Weight::zero(d - 1)).unwrap();
            assert_eq!(h.euler_characteristic(), chi_projective(m, d as i64), "d={d} m={m}");
        }
    }
}

#[test]
fn borel_weil_dimensions_match_characters() {
    for d in 3..=5usize {
        for lambda in partitions_up_to(5, 2) {
            let h = bott_sub(2, d, &lambda).unwrap();
            assert_eq!(h.degree(), Some(0));
            let chi = schur_character(&pad(&lambda, d), d).unwrap();
            assert_eq!(h.dimension() as i64, chi.eval_at_one(), "d={d} λ={lambda}");
        }
    }
}

#[test]
fn lr_dimensions_multiply() {
    let n = 4;
    let shapes = partitions_up_to(4, n);
    for a in &shapes {
        for b in &shapes {
            let prod = littlewood_richardson(a, b, n).unwrap();
            let da = weyl_dimension(a, n).unwrap() as i64;
            let db = weyl_dimension(b, n).unwrap() as i64;
            assert_eq!(rep_dimension(&prod), da * db);
            assert!(prod.is_effective());
            assert_eq!(prod, littlewood_richardson(b, a, n).unwrap());
        }
    }
    assert_eq!(
        littlewood_richardson(&Weight::from([2, 1, 0]), &Weight::from([2, 1, 0]), 3)
            .unwrap()
            .mult(&Weight::from([3, 2, 1])),
        2
    );
}
