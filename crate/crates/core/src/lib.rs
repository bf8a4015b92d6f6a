//! Exact symbolic linear algebra for differential matrix algebras.
//!
//! The library works over two differential base rings: the rationals ℚ with
//! the zero derivation, and the rational function field ℚ(x) with d/dx. On
//! top of an exact arithmetic kernel ([`exactnum`]) it provides:
//!
//! * differential matrix algebras (Mₙ(R), Z) with the derivation
//!   ∂_Z(Y) = Y′ + ZY − YZ, tensor products and gauge transformations
//!   ([`diffalg`]),
//! * class invariants of such algebras built from the adjoint operator
//!   I_Z = L_Z − R_Z ([`invariants`]),
//! * a decision procedure for membership in the trivial class, emitting
//!   checkable gauge certificates or separation witnesses ([`triviality`]),
//! * finite commutative monoid quotients and unit groups ([`monoid`]),
//! * a persistent registry of algebra presentations with verified
//!   equivalence certificates and separation witnesses ([`registry`]),
//! * canonical JSON encodings for every public value ([`json`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to use from multiple threads.

pub mod diffalg;
pub mod error;
pub mod exactnum;
pub mod invariants;
pub mod json;
pub mod monoid;
pub mod registry;
pub mod triviality;

pub use error::Error;
pub use exactnum::{
    log_derivative_solve, BaseRing, Field, Matrix, Polynomial, Rational, RationalFunction,
};

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
