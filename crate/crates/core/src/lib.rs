//! Exact computations around unit interval graphs: chromatic quasisymmetric
//! functions, unicellular LLT polynomials, GKM models of Hessenberg varieties
//! and their twins, graded symmetric group characters and permutohedron face
//! modules.
//!
//! All arithmetic is exact. The polynomial and linear-algebra layers are
//! generic over a [`Scalar`] field; the combinatorial layers use the
//! big-rational aliases below.

pub mod characters;
pub mod checks;
pub mod combinat;
pub mod error;
pub mod gkm;
pub mod hessgraph;
pub mod linalg;
pub mod mpoly;
pub mod permco;
pub mod qrat;
pub mod scalar;
pub mod symfunc;

pub use error::{Error, Result};
pub use scalar::{BigQ, Fraction, Scalar};

/// Exact rational numbers.
pub type Q = BigQ;
/// Polynomials in `q` over [`Q`].
pub type QPoly = qrat::Poly<Q>;
/// Rational functions in `q` over [`Q`].
pub type QRat = qrat::RatFunc<Q>;
/// Polynomials in `t_1, .., t_n` over [`Q`].
pub type TPoly = mpoly::MPoly<Q>;
