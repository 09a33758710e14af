//! Sparse multivariate polynomials over an exact [`Field`].

mod monomial;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{ArithOp, Field, FieldDescriptor};

pub use monomial::{default_names, Monomial, MonomialOrder, OrderKind};

/// A polynomial in `num_vars` variables.
///
/// Terms are kept strictly descending under the polynomial's monomial order
/// and no stored coefficient is zero, so two polynomials with the same order
/// are equal exactly when their term lists are.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly<F: Field> {
    descriptor: FieldDescriptor,
    num_vars: usize,
    order: MonomialOrder,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(descriptor: FieldDescriptor, num_vars: usize, order: MonomialOrder) -> Self {
        assert_eq!(order.num_vars(), num_vars, "order is over a different number of variables");
        Self {
            descriptor,
            num_vars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: F, num_vars: usize, order: MonomialOrder) -> Self {
        Self::term(Monomial::one(num_vars), c, order)
    }

    pub fn from_i64(n: i64, descriptor: FieldDescriptor, num_vars: usize, order: MonomialOrder) -> Self {
        Self::constant(F::from_i64(n, &descriptor), num_vars, order)
    }

    pub fn one(descriptor: FieldDescriptor, num_vars: usize, order: MonomialOrder) -> Self {
        Self::constant(F::one_in(&descriptor), num_vars, order)
    }

    /// The variable with index `i`.
    pub fn variable(i: usize, descriptor: FieldDescriptor, num_vars: usize, order: MonomialOrder) -> Self {
        assert!(i < num_vars, "variable index out of range");
        Self::term(Monomial::variable(i, num_vars), F::one_in(&descriptor), order)
    }

    /// A single term `c * m`.
    pub fn term(m: Monomial, c: F, order: MonomialOrder) -> Self {
        let descriptor = c.descriptor();
        let mut p = Self::zero(descriptor, m.num_vars(), order);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Collects terms, combining repeated monomials and dropping zeros.
    pub fn from_terms(
        descriptor: FieldDescriptor,
        num_vars: usize,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.num_vars(), num_vars, "monomial has the wrong number of variables");
            assert_eq!(c.descriptor(), descriptor, "field mismatch");
            match acc.get_mut(&m) {
                Some(slot) => *slot = slot.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut p = Self::zero(descriptor, num_vars, order);
        p.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        p.sort_terms();
        p
    }

    fn sort_terms(&mut self) {
        let order = &self.order;
        self.terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.descriptor
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for constants, including zero.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&F> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// Same polynomial with terms re-sorted under `order`.
    pub fn with_order(&self, order: &MonomialOrder) -> Self {
        if &self.order == order {
            return self.clone();
        }
        assert_eq!(order.num_vars(), self.num_vars, "order is over a different number of variables");
        let mut p = self.clone();
        p.order = order.clone();
        p.sort_terms();
        p
    }

    pub fn is_compatible(&self, other: &Self) -> bool {
        self.descriptor == other.descriptor && self.num_vars == other.num_vars
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.descriptor != other.descriptor {
            return Err(Error::FieldMismatch);
        }
        if self.num_vars != other.num_vars {
            return Err(Error::ShapeMismatch(format!(
                "polynomials in {} and {} variables",
                self.num_vars, other.num_vars
            )));
        }
        Ok(())
    }

    fn empty_like(&self) -> Self {
        Self::zero(self.descriptor, self.num_vars, self.order.clone())
    }

    fn merge(&self, other: &Self, negate_rhs: bool) -> Self {
        let reordered;
        let other = if other.order == self.order {
            other
        } else {
            reordered = other.with_order(&self.order);
            &reordered
        };
        let order = &self.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let rhs_coeff = |c: &F| if negate_rhs { c.neg() } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match order.cmp(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), rhs_coeff(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs { ca.sub(cb) } else { ca.add(cb) };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|(m, c)| (m.clone(), rhs_coeff(c))));
        let mut p = self.empty_like();
        p.terms = out;
        p
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.empty_like();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c).with_order(&self.order);
        }
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(slot) => *slot = slot.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut p = self.empty_like();
        p.terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        p.sort_terms();
        p
    }

    pub fn neg(&self) -> Self {
        let mut p = self.empty_like();
        p.terms = self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect();
        p
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return self.empty_like();
        }
        if c.is_one() {
            return self.clone();
        }
        let mut p = self.empty_like();
        p.terms = self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect();
        p
    }

    /// Product with the single term `c * m`; multiplying by a monomial
    /// preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return self.empty_like();
        }
        let mut p = self.empty_like();
        p.terms = self
            .terms
            .iter()
            .map(|(t, a)| (t.mul(m), if c.is_one() { a.clone() } else { a.mul(c) }))
            .collect();
        p
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.descriptor, self.num_vars, self.order.clone());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("leading coefficient is nonzero")),
            _ => self.clone(),
        }
    }

    /// Value at `point`.
    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        if point.len() != self.num_vars {
            return Err(Error::ShapeMismatch(format!(
                "point has {} coordinates, polynomial has {} variables",
                point.len(),
                self.num_vars
            )));
        }
        if point.iter().any(|v| v.descriptor() != self.descriptor) {
            return Err(Error::FieldMismatch);
        }
        let mut acc: Option<F> = None;
        for (m, c) in &self.terms {
            let mut value: Option<F> = if c.is_one() { None } else { Some(c.clone()) };
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = if e == 1 { point[i].clone() } else { point[i].pow(u64::from(e)) };
                value = Some(match value {
                    None => factor,
                    Some(v) => v.mul(&factor),
                });
            }
            let value = value.unwrap_or_else(|| F::one_in(&self.descriptor));
            acc = Some(match acc {
                None => value,
                Some(a) => a.add(&value),
            });
        }
        Ok(acc.unwrap_or_else(|| F::zero_in(&self.descriptor)))
    }

    /// Replaces variable `i` by `images[i]` and expands. The result keeps
    /// this polynomial's order.
    pub fn substitute(&self, images: &[MultiPoly<F>]) -> Result<Self> {
        if images.len() != self.num_vars {
            return Err(Error::ShapeMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.num_vars
            )));
        }
        let Some(target_vars) = images.first().map(|g| g.num_vars) else {
            return Ok(self.clone());
        };
        for g in images {
            if g.descriptor != self.descriptor {
                return Err(Error::FieldMismatch);
            }
            if g.num_vars != target_vars {
                return Err(Error::ShapeMismatch("images live in different rings".into()));
            }
        }
        let order = if target_vars == self.num_vars {
            self.order.clone()
        } else {
            images[0].order.clone()
        };
        let images: Vec<MultiPoly<F>> = images.iter().map(|g| g.with_order(&order)).collect();
        let mut powers: HashMap<(usize, u32), MultiPoly<F>> = HashMap::new();
        let mut acc = MultiPoly::zero(self.descriptor, target_vars, order.clone());
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(c.clone(), target_vars, order.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = powers.entry((i, e)).or_insert_with(|| images[i].pow(e));
                term = term.mul_unchecked(power);
            }
            acc = acc.merge(&term, false);
        }
        Ok(acc)
    }

    /// Removes and returns the leading term.
    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, F)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Builds from terms that are already strictly descending and nonzero.
    pub(crate) fn from_sorted_terms(
        descriptor: FieldDescriptor,
        num_vars: usize,
        order: MonomialOrder,
        terms: Vec<(Monomial, F)>,
    ) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Self {
            descriptor,
            num_vars,
            order,
            terms,
        }
    }

    /// Canonical text: terms in descending order, explicit `*` and `^`.
    pub fn render(&self, names: &[impl AsRef<str>]) -> String {
        assert!(names.len() >= self.num_vars, "not enough variable names");
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (negative, magnitude) = c.split_sign();
            let body = if m.is_one() {
                magnitude.to_string()
            } else if magnitude.is_one() {
                m.render(names)
            } else {
                format!("{}*{}", magnitude.render_factor(), m.render(names))
            };
            match (k, negative) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        }
        out
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.num_vars)))
    }
}

/// Checked ring arithmetic.
pub fn poly_arith<F: Field>(op: ArithOp, f: &MultiPoly<F>, g: &MultiPoly<F>) -> Result<MultiPoly<F>> {
    match op {
        ArithOp::Add => f.try_add(g),
        ArithOp::Sub => f.try_sub(g),
        ArithOp::Mul => f.try_mul(g),
    }
}

pub fn poly_evaluate<F: Field>(f: &MultiPoly<F>, point: &[F]) -> Result<F> {
    f.evaluate(point)
}

pub fn poly_substitute<F: Field>(f: &MultiPoly<F>, images: &[MultiPoly<F>]) -> Result<MultiPoly<F>> {
    f.substitute(images)
}

// Operator forms panic on incompatible operands; use the `try_*` methods
// when operands come from untrusted input.
impl<F: Field> Add for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn add(self, rhs: Self) -> MultiPoly<F> {
        self.try_add(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Sub for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn sub(self, rhs: Self) -> MultiPoly<F> {
        self.try_sub(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Mul for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn mul(self, rhs: Self) -> MultiPoly<F> {
        self.try_mul(rhs).expect("incompatible polynomials")
    }
}

impl<F: Field> Neg for &MultiPoly<F> {
    type Output = MultiPoly<F>;
    fn neg(self) -> MultiPoly<F> {
        MultiPoly::neg(self)
    }
}
