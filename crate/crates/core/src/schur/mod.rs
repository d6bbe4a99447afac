//! Weights, Schur-power decompositions and the character oracle.

mod character;
mod formal_sum;
mod lr;
mod weight;

pub use character::{decompose_character, schur_character, CharacterPolynomial};
pub use formal_sum::{normalize_rank2, FormalSum, Rank2Base, RepSum, SchurTerm};
pub use lr::{
    cauchy_sym, littlewood_richardson, pad, partitions, pieri, rep_dimension, weyl_dimension,
};
pub use weight::{DominantWeight, Weight};

/// Tensor product of two formal sums of `GL(n)` irreducibles.
pub fn tensor(x: &RepSum, y: &RepSum, n: usize) -> error::Result<RepSum> {
    let mut out = RepSum::new();
    for (a, ma) in x.iter() {
        for (b, mb) in y.iter() {
            out.add_assign_scaled(&littlewood_richardson(a, b, n)?, ma * mb);
        }
    }
    Ok(out)
}

use crate::error;
