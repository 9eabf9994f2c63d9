//! Exact analysis and construction of mixed-level fractional factorial
//! designs with roots-of-unity level coding.
//!
//! Factor levels are coded by complex roots of unity, so a design fraction
//! is captured by its counting function R = sum_alpha b_alpha X^alpha. The
//! coefficients b_alpha are computed exactly as cyclotomic integers over a
//! common denominator #D, and every structural question — centered and
//! orthogonal terms, factorial projections, orthogonal-array strength,
//! regularity — reduces to exact zero tests on them.
//!
//! The cyclotomic layer is generic over the integer scalar (any
//! `num_traits` signed integer); the design-analysis layer works with the
//! arbitrary-precision aliases below, since coefficient convolutions can
//! exceed machine range.

pub mod analysis;
pub mod counting;
pub mod cyclotomic;
pub mod design;
pub mod error;
pub mod fixtures;
pub mod poly;
pub mod regular;

/// Coefficient integer used by the design-analysis layer.
pub type Int = num_bigint::BigInt;

/// Cyclotomic integer with arbitrary-precision coefficients.
pub type CycElem = cyclotomic::Cyc<Int>;

/// Integer polynomial with arbitrary-precision coefficients.
pub type IntPolynomial = poly::IntPoly<Int>;

pub use design::{DesignSpace, Exponent, Fraction};
pub use error::{Error, Result};
