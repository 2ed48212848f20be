//! Exact computations around the weak Lefschetz property of Stanley-Reisner
//! rings and their stellar subdivisions, over prime fields.

pub mod algebra;
pub mod complex;
pub mod echelon;
pub mod error;
pub mod field;
pub mod harness;
pub mod homology;
pub mod lefschetz;
pub mod monomial;
pub mod par;
pub mod poly;
pub mod stellar;

pub use error::{LabError, Result};
pub use field::PrimeField;
