//! Exact arithmetic kernel: rationals, polynomials over ℚ, rational
//! functions ℚ(x) with the derivation d/dx, and matrices over these fields.

mod field;
mod intfactor;
mod logderiv;
mod matrix;
mod polynomial;
mod ratfunc;
mod rational;

pub use field::{promote_poly, DiffField, Field};
pub use logderiv::log_derivative_solve;
pub use matrix::Matrix;
pub use polynomial::{lagrange_interpolate, Polynomial};
pub use ratfunc::{rf_derive, RationalFunction};
pub use rational::{parse_rational, rat, rat_int, rational_to_string, Rational};

/// The two differential base rings supported by the crate.
///
/// `ConstantField` is ℚ with the zero derivation, so every element is a
/// constant. `RationalFunctionField` is ℚ(x) with d/dx, whose constants are
/// exactly ℚ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BaseRing {
    ConstantField,
    RationalFunctionField,
}

impl BaseRing {
    pub fn label(self) -> &'static str {
        match self {
            BaseRing::ConstantField => "Q",
            BaseRing::RationalFunctionField => "Q(x)",
        }
    }
}
