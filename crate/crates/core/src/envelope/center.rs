//! Central generators `D_{2r} = Σ_w (-1)^{L(w)} tr(w)`, centrality checks and
//! the scalars by which central elements act on highest-weight vectors.

use num_rational::BigRational;
use num_traits::Zero;

use super::algebra::{exact_algebra, Uea};
use super::basis::{BasisElement, Block};
use super::words::{enumerate_words, l_number, Letter, Word};
use crate::error::{Error, Result};
use crate::guard;
use crate::scalar::Scalar;
use crate::weights::HalfInt;
use crate::{GaussianRational, UeaElement};

/// Largest `r` accepted by [`build_generator`] before the override.
pub const GENERATOR_HALF_DEGREE: usize = 2;

/// The `(k, l)` entry of the block named by `letter`.
fn entry(letter: Letter, k: usize, l: usize) -> BasisElement {
    match letter {
        Letter::B => BasisElement::B(k, l),
        Letter::BStar => BasisElement::B(l, k),
        Letter::EPlus => BasisElement::eplus(k, l),
        Letter::EMinus => BasisElement::eminus(k, l),
    }
}

/// `tr(X_1 ⋯ X_m)` with each letter replaced by its `n × n` block of basis
/// elements, normalized.
pub fn trace_of_word(n: usize, w: &Word) -> Result<UeaElement> {
    let alg = exact_algebra(n)?;
    let letters = w.letters();
    let m = letters.len();
    let mut out = Uea::zero(n);
    let mut ix = vec![0usize; m];
    loop {
        let word: Vec<BasisElement> = (0..m)
            .map(|t| entry(letters[t], ix[t], ix[(t + 1) % m]))
            .collect();
        out.add_assign_scaled(&alg.word(&word)?, &GaussianRational::from_i64(1));
        // odometer over index tuples
        let mut t = 0;
        loop {
            if t == m {
                return Ok(out);
            }
            ix[t] += 1;
            if ix[t] < n {
                break;
            }
            ix[t] = 0;
            t += 1;
        }
    }
}

/// Builds `D_{2r}` at rank `n`.
pub fn build_generator(n: usize, r: usize) -> Result<UeaElement> {
    if n == 0 || r == 0 {
        return Err(Error::Invalid("rank and degree must be positive".into()));
    }
    guard::check("generator rank", n, guard::GENERATOR_RANK)?;
    guard::check("generator half-degree", r, GENERATOR_HALF_DEGREE)?;
    let mut out = Uea::zero(n);
    for w in enumerate_words(r)? {
        let sign = if l_number(&w).is_multiple_of(2) { 1 } else { -1 };
        out.add_assign_scaled(&trace_of_word(n, &w)?, &GaussianRational::from_i64(sign));
    }
    Ok(out)
}

/// Whether `[e, x]` vanishes for every basis element `x`.
pub fn is_central(e: &UeaElement, n: usize) -> Result<bool> {
    if e.rank() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: e.rank(),
        });
    }
    if e.degree().unwrap_or(0) >= 4 {
        guard::check("centrality rank", n, guard::GENERATOR_RANK)?;
    }
    let alg = exact_algebra(n)?;
    for &x in alg.basis() {
        let g = alg.generator(x)?;
        if !alg.bracket(e, &g).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The scalar by which a central `e` acts on a highest-weight vector of
/// weight `λ`.
///
/// In PBW order every monomial of weight zero either ends in a positive root
/// vector or is a pure Cartan monomial, so only the latter survive; each
/// `B_{ii}` is read as `λ_i`.
pub fn hc_eigenvalue(lambda: &[HalfInt], e: &UeaElement) -> Result<GaussianRational> {
    let n = e.rank();
    if lambda.len() != n {
        return Err(Error::RankMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    if !is_central(e, n)? {
        return Err(Error::NotCentral);
    }
    Ok(cartan_part_at(lambda, e))
}

/// Evaluates the pure-Cartan part of `e` at `λ` without checking centrality.
pub fn cartan_part_at(lambda: &[HalfInt], e: &UeaElement) -> GaussianRational {
    let basis = super::basis::basis_elements(e.rank());
    let mut acc = GaussianRational::zero();
    'terms: for (m, c) in e.terms() {
        let mut value = BigRational::from_integer(1.into());
        for &i in m {
            match basis[i as usize] {
                BasisElement::B(k, l) if k == l => value *= lambda[k].to_rational(),
                x => {
                    debug_assert_ne!(x.block(), Block::Cartan);
                    continue 'terms;
                }
            }
        }
        acc = acc + c.clone() * GaussianRational::real(value);
    }
    acc
}
