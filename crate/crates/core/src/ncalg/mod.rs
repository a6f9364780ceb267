//! Exact scalars, words, and noncommutative polynomials.

pub mod mpoly;
pub mod ncpoly;
pub mod scalar;
pub mod word;

pub use mpoly::{MPoly, Monomial};
pub use ncpoly::{deshuffle_pairs, shuffle_words, NcPoly};
pub use scalar::{RatFunc, Scalar, T_VAR};
pub use word::{Alphabet, Word};
