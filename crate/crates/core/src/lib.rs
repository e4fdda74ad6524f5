//! Mod-2 cohomology rings of Milnor manifolds, their free quotients and the
//! generalized projective product spaces built from them, together with the
//! cup-length and zero-divisor cup-length machinery used to bound
//! LS-category and topological complexity.
//!
//! All rings are finitely presented graded-commutative algebras over F2.
//! Because every coefficient lives in F2 there are no signs, and a polynomial
//! is simply a set of monomials.
//!
//! The crate is split into four layers:
//!
//! * [`f2poly`]: presentations, truncated Gröbner completion, normal forms and
//!   Hilbert functions.
//! * [`invariants`]: cup-length, tensor squares, basic zero divisors and
//!   zero-divisor cup-lengths.
//! * [`catalog`]: constructors for every ring family and the space
//!   descriptor grammar.
//! * [`bounds`]: bound rules with provenance, reports and the claim suite.

pub mod bounds;
pub mod catalog;
pub mod config;
mod error;
pub mod f2poly;
pub mod invariants;

pub use error::{Error, Result};
