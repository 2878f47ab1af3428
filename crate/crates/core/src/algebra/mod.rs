//! Coefficient fields, monomials, term orders and sparse polynomials.

pub mod field;
pub mod monomial;
pub mod order;
pub mod poly;

pub use field::{Field, PrimeField, Rationals};
pub use monomial::{Monomial, MAX_VARS};
pub use order::{OrderKind, TermOrder};
pub use poly::{PolyRing, Polynomial, RingRef};
