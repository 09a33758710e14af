use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldDescriptor, FieldKind};
use crate::error::{Error, Result};

/// Arbitrary-precision rational number in lowest terms with positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self(BigRational::from_integer(n.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Self(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Field for Rational {
    const KIND: FieldKind = FieldKind::Rationals;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::rationals()
    }

    fn zero_in(_d: &FieldDescriptor) -> Self {
        Self(BigRational::zero())
    }

    fn one_in(_d: &FieldDescriptor) -> Self {
        Self(BigRational::one())
    }

    fn from_i64(n: i64, _d: &FieldDescriptor) -> Self {
        Self::from_integer(n)
    }

    fn from_bigint(n: &BigInt, _d: &FieldDescriptor) -> Self {
        Self::from_integer(n.clone())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Self(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Self(-&self.0)
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self(self.0.recip()))
    }

    fn split_sign(&self) -> (bool, Self) {
        if self.0.is_negative() {
            (true, self.neg())
        } else {
            (false, self.clone())
        }
    }
}
