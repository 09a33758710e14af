use std::fmt;

use num_bigint::BigInt;

use super::prime::{inv_mod, reduce_bigint, reduce_i64};
use super::{Field, FieldDescriptor, FieldKind};
use crate::error::{Error, Result};

/// Dense univariate polynomial over F_p in the variable `t`.
///
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial is an empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    p: u32,
    coeffs: Vec<u32>,
}

impl UniPoly {
    pub fn zero(p: u32) -> Self {
        Self { p, coeffs: Vec::new() }
    }

    pub fn constant(c: u32, p: u32) -> Self {
        Self::from_coeffs(vec![c % p], p)
    }

    /// The monomial `t^k`.
    pub fn monomial(k: usize, p: u32) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1 % p;
        Self::from_coeffs(coeffs, p)
    }

    /// Builds from low-to-high coefficients, reducing modulo `p`.
    pub fn from_coeffs(mut coeffs: Vec<u32>, p: u32) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut poly = Self { p, coeffs };
        poly.trim();
        poly
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let p = self.p;
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, &s) in coeffs.iter_mut().zip(&short.coeffs) {
            let v = *c + s;
            *c = if v >= p { v - p } else { v };
        }
        let mut out = Self { p, coeffs };
        out.trim();
        out
    }

    pub fn neg(&self) -> Self {
        let p = self.p;
        Self {
            p,
            coeffs: self.coeffs.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: u32) -> Self {
        let c = c % self.p;
        if c == 1 {
            return self.clone();
        }
        if c == 0 {
            return Self::zero(self.p);
        }
        let p = u64::from(self.p);
        let c = u64::from(c);
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|&a| (u64::from(a) * c % p) as u32).collect(),
        }
    }

    /// Schoolbook product with delayed modular reduction.
    pub fn mul(&self, rhs: &Self) -> Self {
        let p = self.p;
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(p);
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(self.coeffs[0]);
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(rhs.coeffs[0]);
        }
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (&self.coeffs, &rhs.coeffs)
        } else {
            (&rhs.coeffs, &self.coeffs)
        };
        if short.iter().filter(|&&c| c != 0).count() == 1 {
            // c * t^k: a scaled shift
            let k = short.len() - 1;
            let c = u64::from(short[k]);
            let pm = u64::from(p);
            let mut coeffs = vec![0u32; k];
            if c == 1 {
                coeffs.extend_from_slice(long);
            } else {
                coeffs.extend(long.iter().map(|&a| (u64::from(a) * c % pm) as u32));
            }
            return Self { p, coeffs };
        }
        let pm = u64::from(p);
        let max_product = (pm - 1) * (pm - 1);
        let batch = if max_product == 0 {
            usize::MAX
        } else {
            ((u64::MAX - pm) / max_product) as usize
        };
        let mut acc = vec![0u64; long.len() + short.len() - 1];
        let mut pending = 0usize;
        for (j, &b) in short.iter().enumerate() {
            if b == 0 {
                continue;
            }
            if pending == batch {
                acc.iter_mut().for_each(|v| *v %= pm);
                pending = 0;
            }
            let b = u64::from(b);
            for (slot, &a) in acc[j..].iter_mut().zip(long.iter()) {
                *slot += u64::from(a) * b;
            }
            pending += 1;
        }
        let nonzero = short.iter().filter(|&&c| c != 0).count() as u64;
        let coeffs = if pending as u64 == nonzero && nonzero.saturating_mul(max_product) < u64::from(u32::MAX) {
            // nothing was reduced early and every slot fits in 32 bits
            acc.into_iter().map(|v| v as u32 % p).collect()
        } else {
            acc.into_iter().map(|v| (v % pm) as u32).collect()
        };
        let mut out = Self { p, coeffs };
        out.trim();
        out
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.p;
        let dd = divisor.degree().expect("division by zero polynomial");
        if self.coeffs.len() <= dd {
            return (Self::zero(p), self.clone());
        }
        let pm = u64::from(p);
        let lead_inv = u64::from(inv_mod(divisor.leading_coeff(), p));
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            if c == 0 {
                continue;
            }
            let q = (u64::from(c) * lead_inv % pm) as u32;
            quot[k] = q;
            let q = u64::from(q);
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let sub = (u64::from(d) * q % pm) as u32;
                let r = rem[k + i];
                rem[k + i] = if r >= sub { r - sub } else { r + p - sub };
            }
        }
        rem.truncate(dd);
        let mut quot = Self { p, coeffs: quot };
        let mut rem = Self { p, coeffs: rem };
        quot.trim();
        rem.trim();
        (quot, rem)
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            0 | 1 => self.clone(),
            c => self.scale(inv_mod(c, self.p)),
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        if self.degree() == Some(0) || rhs.degree() == Some(0) {
            return Self::constant(1, self.p);
        }
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn evaluate(&self, t: u32) -> u32 {
        let pm = u64::from(self.p);
        let t = u64::from(t % self.p);
        self.coeffs
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * t + u64::from(c)) % pm) as u32
    }

    fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}*t^{k}")?,
            }
        }
        Ok(())
    }
}

/// Element of F_p(t): a reduced quotient `num / den` with `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fpt {
    num: UniPoly,
    den: UniPoly,
}

impl Fpt {
    /// Canonicalizes `num / den`.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        assert_eq!(num.p, den.p, "field mismatch");
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn from_poly(num: UniPoly) -> Self {
        let den = UniPoly::constant(1, num.p);
        Self { num, den }
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    pub fn modulus(&self) -> u32 {
        self.num.p
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn reduce(num: UniPoly, den: UniPoly) -> Self {
        let p = num.p;
        if num.is_zero() {
            return Self {
                num,
                den: UniPoly::constant(1, p),
            };
        }
        if den.degree() == Some(0) {
            let c = inv_mod(den.coeffs[0], p);
            return Self {
                num: num.scale(c),
                den: UniPoly::constant(1, p),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let c = inv_mod(den.leading_coeff(), p);
        Self {
            num: num.scale(c),
            den: den.scale(c),
        }
    }

    fn check(&self, rhs: &Self) {
        assert_eq!(self.num.p, rhs.num.p, "field mismatch");
    }
}

impl fmt::Display for Fpt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.term_count() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl Field for Fpt {
    const KIND: FieldKind = FieldKind::RationalFunctionField;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor {
            kind: FieldKind::RationalFunctionField,
            characteristic: self.num.p,
        }
    }

    fn zero_in(d: &FieldDescriptor) -> Self {
        Self::from_poly(UniPoly::zero(d.characteristic()))
    }

    fn one_in(d: &FieldDescriptor) -> Self {
        Self::from_poly(UniPoly::constant(1, d.characteristic()))
    }

    fn from_i64(n: i64, d: &FieldDescriptor) -> Self {
        let p = d.characteristic();
        Self::from_poly(UniPoly::constant(reduce_i64(n, p), p))
    }

    fn from_bigint(n: &BigInt, d: &FieldDescriptor) -> Self {
        let p = d.characteristic();
        Self::from_poly(UniPoly::constant(reduce_bigint(n, p), p))
    }

    fn generator(d: &FieldDescriptor) -> Option<Self> {
        Some(Self::from_poly(UniPoly::monomial(1, d.characteristic())))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.den == rhs.den {
            let num = self.num.add(&rhs.num);
            if self.den.is_one() {
                return Self::from_poly(num);
            }
            return Self::reduce(num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let (ls, rs) = if g.is_one() {
            (rhs.den.clone(), self.den.clone())
        } else {
            (rhs.den.div_rem(&g).0, self.den.div_rem(&g).0)
        };
        let num = self.num.mul(&ls).add(&rhs.num.mul(&rs));
        Self::reduce(num, self.den.mul(&ls))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_poly(self.num.mul(&rhs.num));
        }
        if self.is_zero() || rhs.is_zero() {
            return Self::from_poly(UniPoly::zero(self.num.p));
        }
        // cross-cancel so the product is already in lowest terms
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let cancel = |a: &UniPoly, g: &UniPoly| if g.is_one() { a.clone() } else { a.div_rem(g).0 };
        let num = cancel(&self.num, &g1).mul(&cancel(&rhs.num, &g2));
        let den = cancel(&self.den, &g2).mul(&cancel(&rhs.den, &g1));
        let c = inv_mod(den.leading_coeff(), self.num.p);
        Self {
            num: num.scale(c),
            den: den.scale(c),
        }
    }

    fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = inv_mod(self.num.leading_coeff(), self.num.p);
        Ok(Self {
            num: self.den.scale(c),
            den: self.num.scale(c),
        })
    }

    fn render_factor(&self) -> String {
        if self.den.is_one() && self.num.term_count() > 1 {
            format!("({})", self.num)
        } else {
            self.to_string()
        }
    }
}
