//! Finitely presented graded-commutative algebras over F2.
//!
//! A [`Presentation`] is turned into a [`ReducedRing`] by a degree-truncated
//! Buchberger completion under the graded reverse lexicographic order. The
//! reduced ring answers normal-form and product queries and carries the
//! monomial basis of every degree up to its cap.
//!
//! Coefficients live in F2, so a [`Polynomial`] is a set of monomials and
//! addition is symmetric difference.

mod groebner;
mod packed;
mod poly;
mod presentation;
mod ring;

pub use poly::{Monomial, Polynomial};
pub use presentation::{GeneratorInfo, Presentation};
pub use ring::{
    complete_presentation, hilbert_function, multiply, normal_form, ReducedRing, RingSummary,
};

pub(crate) use packed::{add as add_elems, Elem, PMono};

/// Default upper limit on the degree cap of any completion.
pub const DEFAULT_SAFETY_LIMIT: u32 = 256;
