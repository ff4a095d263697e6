//! Exact integer linear algebra: incidence matrices, norms, characteristic
//! polynomials and Perron roots.

pub mod algebraic;
pub mod matrix;
pub mod poly;

pub use algebraic::{compare_roots, perron_root, AlgebraicNumber, RationalInterval};
pub use matrix::{
    growth_value, growth_values, incidence, incidence_matrix, manhattan_norm, mat_pow, max_norm,
    parikh_sequence, IntMatrix,
};
pub use poly::{char_poly, IntPolynomial, SturmSequence};
