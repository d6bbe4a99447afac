//! Laurent character polynomials, used as a brute-force oracle for the
//! tableau-based decompositions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use super::formal_sum::RepSum;
use super::weight::Weight;
use crate::error::{Error, Result};

/// A Laurent polynomial in `n` commuting variables with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CharacterPolynomial {
    n: usize,
    coefficients: BTreeMap<Vec<i64>, i64>,
}

impl CharacterPolynomial {
    pub fn zero(n: usize) -> Self {
        CharacterPolynomial {
            n,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn monomial(exponent: Vec<i64>, coeff: i64) -> Self {
        let mut p = Self::zero(exponent.len());
        p.add_monomial(exponent, coeff);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], 1)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn coefficients(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.coefficients
    }

    pub fn coeff(&self, exponent: &[i64]) -> i64 {
        self.coefficients.get(exponent).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    fn add_monomial(&mut self, exponent: Vec<i64>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.coefficients.entry(exponent.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.coefficients.remove(&exponent);
        }
    }

    pub fn add_scaled(&mut self, other: &CharacterPolynomial, scale: i64) {
        assert_eq!(self.n, other.n);
        for (e, c) in &other.coefficients {
            self.add_monomial(e.clone(), c * scale);
        }
    }

    pub fn mul(&self, other: &CharacterPolynomial) -> CharacterPolynomial {
        assert_eq!(self.n, other.n);
        let mut out = CharacterPolynomial::zero(self.n);
        for (e1, c1) in &self.coefficients {
            for (e2, c2) in &other.coefficients {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_monomial(e, c1 * c2);
            }
        }
        out
    }

    /// Value at `x_1 = ... = x_n = 1`, i.e. the dimension of the representation.
    pub fn eval_at_one(&self) -> i64 {
        self.coefficients.values().sum()
    }

    /// Swap variables `i` and `j`.
    pub fn transpose(&self, i: usize, j: usize) -> CharacterPolynomial {
        let mut out = CharacterPolynomial::zero(self.n);
        for (e, c) in &self.coefficients {
            let mut e = e.clone();
            e.swap(i, j);
            out.add_monomial(e, *c);
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.transpose(i, i + 1) == *self)
    }
}

/// Complete homogeneous symmetric polynomial `h_k` in `n` variables.
fn complete_homogeneous(k: i64, n: usize) -> CharacterPolynomial {
    let mut out = CharacterPolynomial::zero(n);
    if k < 0 {
        return out;
    }
    fn rec(rest: i64, pos: usize, cur: &mut Vec<i64>, out: &mut CharacterPolynomial) {
        let n = cur.len();
        if pos == n - 1 {
            cur[pos] = rest;
            out.add_monomial(cur.clone(), 1);
            return;
        }
        for e in 0..=rest {
            cur[pos] = e;
            rec(rest - e, pos + 1, cur, out);
        }
    }
    if n == 0 {
        if k == 0 {
            out.add_monomial(Vec::new(), 1);
        }
        return out;
    }
    rec(k, 0, &mut vec![0; n], &mut out);
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let mut inv = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if prefix[i] > prefix[j] {
                        inv += 1;
                    }
                }
            }
            out.push((prefix.clone(), if inv % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Character of `Σ^λ` for `GL(n)` via the Jacobi–Trudi determinant.
///
/// Negative parts are handled by factoring out a power of `x_1 ⋯ x_n`.
/// A non-dominant `λ` has `Σ^λ = 0` and yields the zero polynomial.
pub fn schur_character(lambda: &Weight, n: usize) -> Result<CharacterPolynomial> {
    lambda.expect_len(n)?;
    if !lambda.is_dominant() {
        return Ok(CharacterPolynomial::zero(n));
    }
    if n == 0 {
        return Ok(CharacterPolynomial::one(0));
    }
    static CACHE: OnceLock<RwLock<HashMap<Weight, CharacterPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(lambda) {
        return Ok(hit.clone());
    }
    let chi = jacobi_trudi(lambda, n);
    cache.write().unwrap().insert(lambda.clone(), chi.clone());
    Ok(chi)
}

fn jacobi_trudi(lambda: &Weight, n: usize) -> CharacterPolynomial {
    let offset = lambda.parts()[n - 1];
    let partition: Vec<i64> = lambda.parts().iter().map(|p| p - offset).collect();

    let max_h = partition[0] + n as i64;
    let h: Vec<CharacterPolynomial> = (0..=max_h).map(|k| complete_homogeneous(k, n)).collect();
    let entry = |i: usize, j: usize| -> Option<&CharacterPolynomial> {
        let k = partition[i] - i as i64 + j as i64;
        if k < 0 {
            None
        } else {
            Some(&h[k as usize])
        }
    };

    let mut det = CharacterPolynomial::zero(n);
    'perm: for (sigma, sign) in permutations(n) {
        let mut prod = CharacterPolynomial::one(n);
        for (i, &j) in sigma.iter().enumerate() {
            match entry(i, j) {
                Some(p) => prod = prod.mul(p),
                None => continue 'perm,
            }
        }
        det.add_scaled(&prod, sign);
    }
    det.mul(&CharacterPolynomial::monomial(vec![offset; n], 1))
}

/// Write a symmetric Laurent polynomial as an integer combination of Schur characters.
///
/// Peels off the lexicographically largest monomial, which is a highest weight.
pub fn decompose_character(chi: &CharacterPolynomial) -> Result<RepSum> {
    let n = chi.nvars();
    let mut rest = chi.clone();
    let mut out = RepSum::new();
    while let Some((top, &c)) = rest.coefficients().iter().next_back() {
        let top = Weight::new(top.clone());
        if !top.is_dominant() {
            return Err(Error::Consistency(format!(
                "character is not symmetric: leading exponent {top} is not dominant"
            )));
        }
        let s = schur_character(&top, n)?;
        rest.add_scaled(&s, -c);
        out.add_term(top, c);
    }
    Ok(out)
}
