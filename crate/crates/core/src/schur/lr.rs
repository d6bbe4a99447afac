use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::formal_sum::RepSum;
use super::weight::{DominantWeight, Weight};
use crate::error::{Error, Result};

/// All partitions of `k` with at most `max_parts` parts, padded with zeros to
/// length `max_parts`, in lexicographically decreasing order.
pub fn partitions(k: i64, max_parts: usize) -> Vec<Vec<i64>> {
    fn rec(rest: i64, cap: i64, slots: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if rest == 0 {
            let mut p = cur.clone();
            p.resize(p.len() + slots, 0);
            out.push(p);
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            rec(rest - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k >= 0 {
        rec(k, k, max_parts, &mut Vec::new(), &mut out);
    }
    out
}

/// Dimension of the `GL(n)` irreducible with highest weight `λ`
/// (Weyl's product over positive roots).
pub fn weyl_dimension(lambda: &Weight, n: usize) -> Result<u64> {
    lambda.expect_len(n)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let p = lambda.parts();
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..n {
        for j in i + 1..n {
            num *= (p[i] - p[j]) as i128 + (j - i) as i128;
            den *= (j - i) as i128;
        }
    }
    debug_assert_eq!(num % den, 0);
    Ok((num / den) as u64)
}

/// Total dimension of a formal sum of `GL(n)` irreducibles (signed by multiplicity).
pub fn rep_dimension(rep: &RepSum) -> i64 {
    rep.iter()
        .map(|(w, m)| m * weyl_dimension(w, w.len()).expect("rep sums hold dominant weights") as i64)
        .sum()
}

/// `Σ^λ W ⊗ ∧^j W` for `GL(n)`: add each permutation of `(1^j, 0^{n-j})` and keep
/// the dominant results.
pub fn pieri(lambda: &DominantWeight, j: usize, n: usize) -> Result<RepSum> {
    lambda.expect_len(n)?;
    if j > n {
        return Err(Error::OutOfRange {
            name: "j",
            value: j as i64,
            min: 0,
            max: n as i64,
        });
    }
    let mut out = RepSum::new();
    let mut chosen = Vec::with_capacity(j);
    fn rec(
        start: usize,
        left: usize,
        chosen: &mut Vec<usize>,
        lambda: &Weight,
        out: &mut RepSum,
    ) {
        if left == 0 {
            let mut parts = lambda.parts().to_vec();
            for &i in chosen.iter() {
                parts[i] += 1;
            }
            let w = Weight::new(parts);
            if w.is_dominant() {
                out.add_term(w, 1);
            }
            return;
        }
        for i in start..=lambda.len() - left {
            chosen.push(i);
            rec(i + 1, left - 1, chosen, lambda, out);
            chosen.pop();
        }
    }
    rec(0, j, &mut chosen, lambda.as_weight(), &mut out);
    Ok(out)
}

type LrKey = (Vec<i64>, Vec<i64>, usize);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, RepSum>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, RepSum>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Decompose `Σ^λ W ⊗ Σ^μ W` for `GL(n)`.
///
/// Both weights are shifted by a power of the determinant to become partitions,
/// the Littlewood–Richardson tableaux of shape `ν/λ` and content `μ` with at most
/// `n` rows are enumerated, and the shift is undone on every `ν`.
pub fn littlewood_richardson(lambda: &Weight, mu: &Weight, n: usize) -> Result<RepSum> {
    lambda.expect_len(n)?;
    mu.expect_len(n)?;
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
    }
    if n == 0 {
        return Ok(RepSum::single(Weight::zero(0), 1));
    }
    let a = lambda.parts()[n - 1];
    let b = mu.parts()[n - 1];
    let mut outer = lambda.shifted(-a).into_parts();
    let mut content = mu.shifted(-b).into_parts();
    // c^ν_{λμ} = c^ν_{μλ}; enumerate with the smaller content.
    if content.iter().sum::<i64>() > outer.iter().sum::<i64>() {
        std::mem::swap(&mut outer, &mut content);
    }

    let key = (outer.clone(), content.clone(), n);
    let cached = lr_cache().read().unwrap().get(&key).cloned();
    let base = match cached {
        Some(v) => v,
        None => {
            let v = lr_partitions(&outer, &content, n);
            lr_cache().write().unwrap().insert(key, v.clone());
            v
        }
    };
    Ok(base.map_keys(|nu| nu.shifted(a + b)))
}

fn lr_partitions(outer: &[i64], content: &[i64], n: usize) -> RepSum {
    let labels: Vec<i64> = content.iter().copied().take_while(|&c| c > 0).collect();
    let mut out = RepSum::new();
    let mut shape = outer.to_vec();
    // cum[i][r]: number of label i in rows 0..=r.
    let mut cum = vec![vec![0i64; n]; labels.len()];
    place_label(0, &labels, &mut shape, &mut cum, &mut out);
    out
}

fn place_label(
    label: usize,
    labels: &[i64],
    shape: &mut Vec<i64>,
    cum: &mut Vec<Vec<i64>>,
    out: &mut RepSum,
) {
    if label == labels.len() {
        out.add_term(Weight::new(shape.clone()), 1);
        return;
    }
    let old = shape.clone();
    let mut strip = vec![0i64; shape.len()];
    fill_row(label, 0, labels[label], labels, &old, &mut strip, shape, cum, out);
}

#[allow(clippy::too_many_arguments)]
fn fill_row(
    label: usize,
    row: usize,
    remaining: i64,
    labels: &[i64],
    old: &[i64],
    strip: &mut Vec<i64>,
    shape: &mut Vec<i64>,
    cum: &mut Vec<Vec<i64>>,
    out: &mut RepSum,
) {
    let n = old.len();
    if remaining == 0 {
        let total = if row == 0 { 0 } else { cum[label][row - 1] };
        for r in row..n {
            cum[label][r] = total;
        }
        for r in 0..n {
            shape[r] = old[r] + strip[r];
        }
        place_label(label + 1, labels, shape, cum, out);
        shape.copy_from_slice(old);
        return;
    }
    if row == n {
        return;
    }
    let before = if row == 0 { 0 } else { cum[label][row - 1] };
    // horizontal strip: stay weakly below the previous row of the old shape
    let mut cap = if row == 0 {
        remaining
    } else {
        (old[row - 1] - old[row]).min(remaining)
    };
    // lattice word: label i in rows <= r never outnumbers label i-1 in rows < r
    if label > 0 {
        let allowed = if row == 0 { 0 } else { cum[label - 1][row - 1] };
        cap = cap.min(allowed - before);
    }
    for a in (0..=cap.max(-1)).rev() {
        strip[row] = a;
        cum[label][row] = before + a;
        fill_row(label, row + 1, remaining - a, labels, old, strip, shape, cum, out);
    }
    strip[row] = 0;
}

/// Partitions `λ ⊢ k` with at most `min(r, d)` parts; `Sym^k(V ⊗ S^∨)` is the sum
/// of `Σ^λ V ⊗ Σ^λ S^∨` over them. Each is padded to length `min(r, d)`.
pub fn cauchy_sym(k: i64, d: usize, r: usize) -> Result<Vec<DominantWeight>> {
    if k < 0 {
        return Err(Error::OutOfRange {
            name: "k",
            value: k,
            min: 0,
            max: i64::MAX,
        });
    }
    if r > d {
        return Err(Error::OutOfRange {
            name: "r",
            value: r as i64,
            min: 0,
            max: d as i64,
        });
    }
    Ok(partitions(k, r.min(d))
        .into_iter()
        .map(|p| DominantWeight::new(Weight::new(p)).unwrap())
        .collect())
}

/// Pad a partition-like weight with zeros up to length `n`.
pub fn pad(w: &Weight, n: usize) -> Weight {
    let mut parts = w.parts().to_vec();
    parts.resize(n, 0);
    Weight::new(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(terms: &[(&[i64], i64)]) -> RepSum {
        terms
            .iter()
            .map(|(w, m)| (Weight::new(w.to_vec()), *m))
            .collect()
    }

    fn dw(p: &[i64]) -> DominantWeight {
        DominantWeight::new(Weight::new(p.to_vec())).unwrap()
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(weyl_dimension(&Weight::from([1, 0, 0, 0]), 4).unwrap(), 4);
        assert_eq!(weyl_dimension(&Weight::from([1, 1]), 2).unwrap(), 1);
        assert_eq!(weyl_dimension(&Weight::from([2, 1]), 2).unwrap(), 2);
        assert_eq!(weyl_dimension(&Weight::from([2, 0, 0, 0]), 4).unwrap(), 10);
        assert!(weyl_dimension(&Weight::from([0, 1]), 2).is_err());
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri(&dw(&[1, 0]), 1, 2).unwrap(),
            rep(&[(&[2, 0], 1), (&[1, 1], 1)])
        );
        assert_eq!(pieri(&dw(&[1, 0]), 2, 2).unwrap(), rep(&[(&[2, 1], 1)]));
        assert_eq!(pieri(&dw(&[3, -1, -2]), 0, 3).unwrap(), rep(&[(&[3, -1, -2], 1)]));
        assert!(pieri(&dw(&[1, 0]), 3, 2).is_err());
    }

    #[test]
    fn lr_examples() {
        let n = 2;
        assert_eq!(
            littlewood_richardson(&Weight::from([1, 0]), &Weight::from([2, 0]), n).unwrap(),
            rep(&[(&[3, 0], 1), (&[2, 1], 1)])
        );
        assert_eq!(
            littlewood_richardson(&Weight::from([-1, -1]), &Weight::from([1, 1]), n).unwrap(),
            rep(&[(&[0, 0], 1)])
        );
        for b in 0..5 {
            for a in 0..=b {
                let prod =
                    littlewood_richardson(&Weight::from([0, -a]), &Weight::from([b, 0]), n).unwrap();
                assert_eq!(prod.mult(&Weight::from([b - a, 0])), 1, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn lr_classic_coefficient() {
        // c^{(3,2,1)}_{(2,1),(2,1)} = 2
        let prod =
            littlewood_richardson(&Weight::from([2, 1, 0]), &Weight::from([2, 1, 0]), 3).unwrap();
        assert_eq!(prod.mult(&Weight::from([3, 2, 1])), 2);
        assert_eq!(prod.mult(&Weight::from([4, 2, 0])), 1);
    }

    #[test]
    fn lr_rejects_mismatch() {
        assert!(littlewood_richardson(&Weight::from([1, 0]), &Weight::from([1]), 2).is_err());
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_sym(1, 4, 2).unwrap(), vec![dw(&[1, 0])]);
        assert_eq!(cauchy_sym(2, 4, 2).unwrap(), vec![dw(&[2, 0]), dw(&[1, 1])]);
        for k in 0..6 {
            assert!(cauchy_sym(k, 4, 2).unwrap().contains(&dw(&[k, 0])));
        }
    }
}
