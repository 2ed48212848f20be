//! Graded polynomial algebra over a prime field.

pub mod ideal;
pub mod quotient;
pub mod random;
pub mod seq;

pub use ideal::{
    face_count_hilbert_function, minimalize, stanley_reisner_ideal, GradedIdeal, IdealJson, VertexIndex};
pub use quotient::{
    degree_columns, ideal_degree_span, macaulay_hilbert_function, DegreeSlice, DegreeSpan,
    Elimination, LinearSubstitution, QuotientRing, Subspace,
};
pub use random::{derive_seed, random_linear_forms, rng_from_seed, DEFAULT_SEED};
pub use seq::{IntSeq, LeftTail};
