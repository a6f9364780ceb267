//! Free Lie algebra inside the free associative algebra.

mod hall;
mod project;
mod tree;

pub use hall::{hall_basis, witt_dimension, HallBasis, HallSet};
pub use project::{
    decompose, in_hall_span, is_lie, lie_dimension, shuffle_dimension, word_blocks, LieProjector,
};
pub use tree::{left_normed, right_normed, LieDisplay, LieTree};

use crate::error::Result;
use crate::ncalg::{Alphabet, NcPoly};

/// Expands a bracket tree into the free associative algebra.
pub fn expand(tree: &LieTree, alphabet: &Alphabet) -> Result<NcPoly> {
    tree.expand(alphabet)
}
