//! Symbolic enveloping algebra of `sp(2n)` at small rank.

pub mod algebra;
pub mod basis;
pub mod center;
pub mod words;

pub use algebra::{exact_algebra, Monomial, PbwAlgebra, Uea};
pub use basis::{basis_elements, realize, structure_constants, BasisElement, Block};
pub use center::{build_generator, cartan_part_at, hc_eigenvalue, is_central, trace_of_word};
pub use words::{enumerate_words, enumerate_words_with, l_number, l_number_with, Adjacency, Letter, Word};

use crate::error::{Error, Result};
use crate::UeaElement;

/// `[x, y]` expanded in the basis of `sp(2n)`.
pub fn commutator(n: usize, x: BasisElement, y: BasisElement) -> Result<UeaElement> {
    exact_algebra(n)?.commutator(x, y)
}

/// Canonical PBW form of an element.
pub fn pbw_normal_form(e: &UeaElement) -> Result<UeaElement> {
    if e.rank() == 0 {
        return Err(Error::Invalid("rank must be positive".into()));
    }
    Ok(exact_algebra(e.rank())?.normal_form(e))
}
