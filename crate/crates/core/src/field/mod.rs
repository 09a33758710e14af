//! Exact coefficient fields.
//!
//! Three concrete fields implement [`Field`]: the rationals ([`Rational`]),
//! prime fields ([`Fp`]) and the rational function field F_p(t) ([`Fpt`]).
//! The rest of the crate is generic over [`Field`].

mod function;
mod prime;
mod rational;

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;

use crate::error::{Error, Result};

pub use function::{Fpt, UniPoly};
pub use prime::Fp;
pub use rational::Rational;

/// Largest characteristic accepted for prime fields (exclusive).
pub const MAX_CHARACTERISTIC: u32 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    Rationals,
    PrimeField,
    RationalFunctionField,
}

/// Identifies one concrete field: Q, F_p or F_p(t).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    kind: FieldKind,
    characteristic: u32,
}

impl FieldDescriptor {
    pub const fn rationals() -> Self {
        Self {
            kind: FieldKind::Rationals,
            characteristic: 0,
        }
    }

    pub fn prime_field(p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(Self {
            kind: FieldKind::PrimeField,
            characteristic: p,
        })
    }

    pub fn rational_function_field(p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(Self {
            kind: FieldKind::RationalFunctionField,
            characteristic: p,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_finite(&self) -> bool {
        self.kind == FieldKind::PrimeField
    }

    /// Parses `QQ`, `GF(p)` or `GF(p)(t)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "QQ" {
            return Ok(Self::rationals());
        }
        let bad = || Error::InvalidField(format!("unrecognized field {s:?}"));
        let rest = s.strip_prefix("GF(").ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let p: u32 = rest[..close].trim().parse().map_err(|_| bad())?;
        match &rest[close + 1..] {
            "" => Self::prime_field(p),
            "(t)" => Self::rational_function_field(p),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "QQ"),
            FieldKind::PrimeField => write!(f, "GF({})", self.characteristic),
            FieldKind::RationalFunctionField => write!(f, "GF({})(t)", self.characteristic),
        }
    }
}

fn check_prime(p: u32) -> Result<()> {
    if p >= MAX_CHARACTERISTIC {
        return Err(Error::InvalidField(format!("characteristic {p} is not below 2^31")));
    }
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    Ok(())
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field element.
///
/// Elements carry enough information to recover their [`FieldDescriptor`];
/// binary operations on elements of different fields of the same kind (for
/// instance F_5 and F_7) panic. Use [`field_arith`] for a checked variant.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: FieldKind;

    fn descriptor(&self) -> FieldDescriptor;

    fn zero_in(d: &FieldDescriptor) -> Self;
    fn one_in(d: &FieldDescriptor) -> Self;
    fn from_i64(n: i64, d: &FieldDescriptor) -> Self;
    fn from_bigint(n: &BigInt, d: &FieldDescriptor) -> Self;

    /// The transcendental `t`, for function fields.
    fn generator(_d: &FieldDescriptor) -> Option<Self> {
        None
    }

    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;

    fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.descriptor());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Splits off a leading minus sign for rendering. Only ordered fields
    /// ever report a negative value.
    fn split_sign(&self) -> (bool, Self) {
        (false, self.clone())
    }

    /// Text that can appear as the left operand of `*` and re-parse to the
    /// same value.
    fn render_factor(&self) -> String {
        self.to_string()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic.
pub fn field_arith<F: Field>(op: ArithOp, a: &F, b: &F) -> Result<F> {
    if a.descriptor() != b.descriptor() {
        return Err(Error::FieldMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    })
}

pub fn field_invert<F: Field>(a: &F) -> Result<F> {
    a.inv()
}

/// Canonical image of an integer; reduces modulo p in positive characteristic.
pub fn embed_integer<F: Field>(n: i64, d: &FieldDescriptor) -> Result<F> {
    if d.kind() != F::KIND {
        return Err(Error::FieldMismatch);
    }
    Ok(F::from_i64(n, d))
}
