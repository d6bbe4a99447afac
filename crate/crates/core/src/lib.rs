//! Exact symbolic computations for the Grassmannian twist on `Tot Hom(V, S)`
//! over `Gr(2, d)`: Schur calculus, Borel–Weil–Bott, graded Ext tables,
//! Koszul data of the twist and its action on K-theory.

pub mod error;
pub mod schur;

pub use error::{Error, Result};
pub mod bott;
pub mod report;
pub mod hom;
pub mod twist;
pub mod laurent;
pub mod linalg;
pub mod ktheory;
