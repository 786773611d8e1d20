//! Exact computations for highest-weight modules of `sp(2n)`.
//!
//! The library covers dot-orbit combinatorics of the hyperoctahedral Weyl
//! group, unitarity of highest-weight modules, K-type multiplicities in parabolic
//! Verma modules, explicit central elements of the enveloping algebra,
//! projectors onto infinitesimal-character eigenspaces, a decision table for
//! the modules generated by nearly holomorphic forms, and a small laboratory
//! for nearly holomorphic forms on the upper half plane.
//!
//! Linear-algebraic code is generic over [`Scalar`]; the aliases below pin
//! the exact instantiations used throughout.

pub mod envelope;
pub mod error;
pub mod guard;
pub mod ktypes;
pub mod linalg;
pub mod projection;
pub mod scalar;
pub mod sl2lab;
pub mod unitarity;
pub mod weights;

pub use error::{Error, Result};
pub use scalar::{Gaussian, Scalar};
pub use weights::{HalfInt, Weight, WeylElement};

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Exact Gaussian rationals, the coefficient field of the enveloping algebra.
pub type GaussianRational = Gaussian<Rational>;
/// Elements of `U(sp(2n))` with exact coefficients.
pub type UeaElement = envelope::Uea<GaussianRational>;
/// Exact q-expansions of nearly holomorphic forms.
pub type QSeries = sl2lab::Series<Rational>;
/// Exact dense matrices.
pub type RationalMatrix = linalg::Matrix<Rational>;
/// Exact module models for the projector.
pub type ModuleModel = projection::Model<Rational>;
