//! Exact computation of the zeta function `P_M = exp(Σ a_n(M) tⁿ / n)` of a
//! square matrix `M` over the integer group algebra of a free group, where
//! `a_n(M)` is the coefficient of the identity in the trace of `Mⁿ`.
//!
//! The crate is organised bottom-up:
//!
//! * [`freegroup`]: reduced words and the generator table.
//! * [`group_algebra`]: noncommutative Laurent polynomials with big-integer
//!   coefficients.
//! * [`matrix`]: matrices over the group algebra and the `a_n` sequence.
//! * [`series`]: truncated power series over exact rationals.
//! * [`cyclic`]: the cyclic series on triple letters, Lyndon words and the
//!   Euler product.
//! * [`proper`]: truncated solutions of proper noncommutative systems.
//! * [`guess`]: annihilating-polynomial search and exact kernels.
//! * [`examples`]: the built-in matrix families and their closed forms.
//! * [`document`]: the plain-text matrix format.
//!
//! All arithmetic is exact. Nothing here uses floating point.

pub mod cyclic;
pub mod document;
pub mod error;
pub mod examples;
pub mod freegroup;
pub mod group_algebra;
pub mod guess;
pub mod matrix;
pub mod proper;
pub mod sampling;
pub mod series;
mod text;

pub use cyclic::{
    alphabet_of, euler_product, lyndon_words, s_coeff, sum_coeffs_by_length, LyndonList,
    TripleLetter,
};
pub use document::{parse_matrix, parse_matrix_with, MatrixDocument};
pub use error::{Error, ErrorKind, Result};
pub use examples::ExampleId;
pub use freegroup::{Generators, ReducedWord};
pub use group_algebra::AlgebraElement;
pub use guess::{exact_kernel, guess_annihilator, BivariatePolynomial};
pub use matrix::{AlgebraMatrix, SequenceOptions};
pub use proper::{solve_truncated, ProperSystem, TruncatedNCSeries};
pub use series::TruncatedSeries;

pub use num::{BigInt, BigRational};
