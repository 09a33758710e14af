use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{Field, FieldDescriptor, FieldKind};
use crate::error::{Error, Result};

/// Residue modulo a prime `p < 2^31`, stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    value: u32,
    p: u32,
}

impl Fp {
    /// `p` is trusted to be prime; use [`FieldDescriptor::prime_field`] to
    /// validate it.
    pub fn new(value: i64, p: u32) -> Self {
        Self {
            value: reduce_i64(value, p),
            p,
        }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn check(&self, rhs: &Self) {
        assert_eq!(self.p, rhs.p, "field mismatch");
    }
}

pub(crate) fn reduce_i64(n: i64, p: u32) -> u32 {
    n.rem_euclid(i64::from(p)) as u32
}

pub(crate) fn reduce_bigint(n: &BigInt, p: u32) -> u32 {
    n.mod_floor(&BigInt::from(p)).to_u32().expect("residue below modulus")
}

/// Modular inverse by the extended Euclidean algorithm. `a` must be nonzero
/// modulo `p`.
pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut r0, mut r1) = (i64::from(p), i64::from(a));
    let (mut s0, mut s1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    reduce_i64(s0, p)
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Field for Fp {
    const KIND: FieldKind = FieldKind::PrimeField;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            kind: FieldKind::PrimeField,
            characteristic: self.p,
        }
    }

    fn zero_in(d: &FieldDescriptor) -> Self {
        Self {
            value: 0,
            p: d.characteristic(),
        }
    }

    fn one_in(d: &FieldDescriptor) -> Self {
        Self {
            value: 1,
            p: d.characteristic(),
        }
    }

    fn from_i64(n: i64, d: &FieldDescriptor) -> Self {
        Self::new(n, d.characteristic())
    }

    fn from_bigint(n: &BigInt, d: &FieldDescriptor) -> Self {
        let p = d.characteristic();
        Self {
            value: reduce_bigint(n, p),
            p,
        }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn is_one(&self) -> bool {
        self.value == 1
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let s = self.value + rhs.value;
        Self {
            value: if s >= self.p { s - self.p } else { s },
            p: self.p,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.check(rhs);
        let value = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.value + self.p - rhs.value
        };
        Self { value, p: self.p }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Self {
            value: (u64::from(self.value) * u64::from(rhs.value) % u64::from(self.p)) as u32,
            p: self.p,
        }
    }

    fn neg(&self) -> Self {
        Self {
            value: if self.value == 0 { 0 } else { self.p - self.value },
            p: self.p,
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            value: inv_mod(self.value, self.p),
            p: self.p,
        })
    }
}
