//! Exact symbolic algebra for free Lie algebras, shuffle algebras, Chen
//! iterated integrals, and the Melnikov-function calculus of perturbed
//! Hamiltonian foliations.
//!
//! * [`ncalg`]: exact scalars, words, noncommutative polynomials with
//!   concatenation, shuffle and the canonical inner product.
//! * [`liealg`]: Lie brackets, Hall bases, Ree's Lie criterion and the
//!   orthogonal splitting of a homogeneous component into Lie and shuffle parts.
//! * [`freegrp`]: free-group words, commutators, the Magnus expansion and the
//!   lower central series degree.
//! * [`chenint`]: truncated tensor series and iterated-integral models.
//! * [`melnikov`]: the Gauss-Manin derivation, Melnikov integrands, the
//!   `C_k` scalar products, and the D4 monodromy reduction.
//! * [`cli`]: expression parser, printer, and the `chenlie` command.

pub mod chenint;
pub mod cli;
pub mod error;
pub mod freegrp;
pub mod liealg;
pub mod linalg;
pub mod melnikov;
pub mod ncalg;

pub use error::{Error, Result};
pub use ncalg::{Alphabet, NcPoly, Scalar, Word};
