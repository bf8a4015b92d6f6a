//! Field abstraction shared by ℚ and ℚ(x).
//!
//! Matrix code and the differential-algebra layer are generic over these
//! traits; the two implementations are [`Rational`] and
//! [`RationalFunction`].

use num_traits::{One, Zero};

use super::polynomial::Polynomial;
use super::ratfunc::RationalFunction;
use super::rational::{rat_int, Rational};
use crate::error::Error;

pub trait Field: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, Error>;
    fn from_i64(v: i64) -> Self;

    fn div(&self, other: &Self) -> Result<Self, Error> {
        Ok(self.mul(&other.inv()?))
    }
}

/// A field carrying a derivation, with its constants identified with ℚ.
pub trait DiffField: Field {
    /// The derivation: zero on ℚ, d/dx on ℚ(x).
    fn derive(&self) -> Self;
    /// True when the element is a constant (lies in ℚ).
    fn is_constant(&self) -> bool;
    fn to_rational(&self) -> Option<Rational>;
    fn from_rational(r: &Rational) -> Self;
    /// Embedding into ℚ(x); the identity on rational functions.
    fn to_ratfunc(&self) -> RationalFunction;
    /// The base ring this scalar type realizes.
    fn base_ring() -> super::BaseRing;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn inv(&self) -> Result<Self, Error> {
        if Zero::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        Ok(<Rational as One>::one() / self.clone())
    }
    fn from_i64(v: i64) -> Self {
        rat_int(v)
    }
}

impl DiffField for Rational {
    fn derive(&self) -> Self {
        Zero::zero()
    }
    fn is_constant(&self) -> bool {
        true
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_ratfunc(&self) -> RationalFunction {
        RationalFunction::constant(self.clone())
    }
    fn base_ring() -> super::BaseRing {
        super::BaseRing::ConstantField
    }
}

impl Field for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RationalFunction::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RationalFunction::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RationalFunction::mul(self, other)
    }
    fn neg(&self) -> Self {
        RationalFunction::neg(self)
    }
    fn inv(&self) -> Result<Self, Error> {
        RationalFunction::inv(self)
    }
    fn from_i64(v: i64) -> Self {
        RationalFunction::from_i64(v)
    }
}

impl DiffField for RationalFunction {
    fn derive(&self) -> Self {
        RationalFunction::derive(self)
    }
    fn is_constant(&self) -> bool {
        RationalFunction::is_constant(self)
    }
    fn to_rational(&self) -> Option<Rational> {
        RationalFunction::to_rational(self)
    }
    fn from_rational(r: &Rational) -> Self {
        RationalFunction::constant(r.clone())
    }
    fn to_ratfunc(&self) -> RationalFunction {
        self.clone()
    }
    fn base_ring() -> super::BaseRing {
        super::BaseRing::RationalFunctionField
    }
}

/// Lifts a ℚ polynomial in an abstract variable to coefficients in K.
pub fn promote_poly<K: DiffField>(p: &Polynomial) -> Vec<K> {
    p.coeffs().iter().map(|c| K::from_rational(c)).collect()
}
