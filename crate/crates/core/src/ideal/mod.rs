//! Ideals of polynomial rings, represented by reduced Gröbner bases.

mod buchberger;
mod vanishing;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::poly::{Monomial, MonomialOrder, MultiPoly};

pub use buchberger::{buchberger, s_polynomial};
pub use vanishing::{vanishing_ideal, PointSet};

/// The reduced Gröbner basis of an ideal under a fixed monomial order.
///
/// Generators are monic, fully interreduced and sorted by descending leading
/// monomial, so the basis is a canonical name for the ideal. An empty list is
/// the zero ideal and `[1]` is the unit ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedGroebnerBasis<F: Field> {
    order: MonomialOrder,
    generators: Vec<MultiPoly<F>>,
    num_vars: usize,
    descriptor: FieldDescriptor,
}

impl<F: Field> ReducedGroebnerBasis<F> {
    pub fn zero_ideal(descriptor: FieldDescriptor, num_vars: usize, order: MonomialOrder) -> Self {
        Self {
            order,
            generators: Vec::new(),
            num_vars,
            descriptor,
        }
    }

    pub fn unit_ideal(descriptor: FieldDescriptor, num_vars: usize, order: MonomialOrder) -> Self {
        let one = MultiPoly::one(descriptor, num_vars, order.clone());
        Self {
            order,
            generators: vec![one],
            num_vars,
            descriptor,
        }
    }

    /// Caller guarantees the generators already form a reduced basis.
    pub(crate) fn from_reduced(
        descriptor: FieldDescriptor,
        num_vars: usize,
        order: MonomialOrder,
        mut generators: Vec<MultiPoly<F>>,
    ) -> Self {
        generators.sort_by(|a, b| {
            order.cmp(
                b.leading_monomial().expect("nonzero generator"),
                a.leading_monomial().expect("nonzero generator"),
            )
        });
        Self {
            order,
            generators,
            num_vars,
            descriptor,
        }
    }

    pub fn generators(&self) -> &[MultiPoly<F>] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.descriptor
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn normal_form(&self, f: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        if f.descriptor() != self.descriptor {
            return Err(Error::FieldMismatch);
        }
        if f.num_vars() != self.num_vars {
            return Err(Error::ShapeMismatch(format!(
                "polynomial in {} variables, ideal in {}",
                f.num_vars(),
                self.num_vars
            )));
        }
        Ok(reduce(&f.with_order(&self.order), &self.generators))
    }

    pub fn contains(&self, f: &MultiPoly<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Krull dimension of the quotient ring, or -1 for the unit ideal.
    ///
    /// Computed as the largest set of variables none of whose monomials is a
    /// leading monomial of the basis.
    pub fn dimension(&self) -> i64 {
        if self.is_unit_ideal() {
            return -1;
        }
        let n = self.num_vars;
        assert!(n < 64, "dimension search supports fewer than 64 variables");
        let supports: Vec<u64> = self
            .leading_monomials()
            .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
            .collect();
        (0u64..(1 << n))
            .filter(|&set| supports.iter().all(|&s| s & !set != 0))
            .map(|set| i64::from(set.count_ones()))
            .max()
            .unwrap_or(0)
    }

    /// The ideal sum `self + other`; its variety is the intersection.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_same_ring(self, other)?;
        let gens: Vec<MultiPoly<F>> = self.generators.iter().chain(other.generators.iter()).cloned().collect();
        buchberger(self.descriptor, &gens, &self.order)
    }

    /// Re-computes the basis under another order.
    pub fn with_order(&self, order: &MonomialOrder) -> Self {
        if &self.order == order {
            return self.clone();
        }
        buchberger(self.descriptor, &self.generators, order).expect("generators share a ring")
    }

    /// Monomials outside the leading-term ideal, when there are finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if self.is_unit_ideal() {
            return Some(Vec::new());
        }
        let lms: Vec<&Monomial> = self.leading_monomials().collect();
        // zero-dimensional iff every variable has a pure power among the leading monomials
        for i in 0..self.num_vars {
            let pure = lms.iter().any(|m| m.support().eq(std::iter::once(i)));
            if !pure {
                return None;
            }
        }
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut frontier = vec![Monomial::one(self.num_vars)];
        while let Some(m) = frontier.pop() {
            if lms.iter().any(|lm| lm.divides(&m)) || !seen.insert(m.clone()) {
                continue;
            }
            for i in 0..self.num_vars {
                frontier.push(m.mul(&Monomial::variable(i, self.num_vars)));
            }
        }
        let mut out: Vec<Monomial> = seen.into_iter().collect();
        out.sort_by(|a, b| self.order.cmp(a, b));
        Some(out)
    }

    /// Generators rendered as canonical text.
    pub fn render(&self, names: &[impl AsRef<str>]) -> Vec<String> {
        self.generators.iter().map(|g| g.render(names)).collect()
    }
}

fn check_same_ring<F: Field>(a: &ReducedGroebnerBasis<F>, b: &ReducedGroebnerBasis<F>) -> Result<()> {
    if a.descriptor != b.descriptor {
        return Err(Error::FieldMismatch);
    }
    if a.num_vars != b.num_vars {
        return Err(Error::ShapeMismatch(format!(
            "ideals in {} and {} variables",
            a.num_vars, b.num_vars
        )));
    }
    if a.order != b.order {
        return Err(Error::OrderMismatch);
    }
    Ok(())
}

/// Full multivariate division remainder of `f` by `divisors`.
///
/// All divisors must share `f`'s order. The remainder has no term divisible
/// by any divisor's leading monomial.
pub(crate) fn reduce<F: Field>(f: &MultiPoly<F>, divisors: &[MultiPoly<F>]) -> MultiPoly<F> {
    let mut p = f.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let divisor = divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().expect("nonzero divisor");
                let q = lm.quotient_of(&m).expect("leading monomial divides");
                let coeff = if lc.is_one() { c } else { c.div(lc).expect("nonzero leading coefficient") };
                p = &p - &g.mul_term(&q, &coeff);
            }
            None => {
                remainder.push(p.pop_leading().expect("nonzero polynomial"));
            }
        }
    }
    MultiPoly::from_sorted_terms(f.descriptor(), f.num_vars(), f.order().clone(), remainder)
}

/// Normal form of `f` modulo the ideal; zero exactly for ideal members.
pub fn normal_form<F: Field>(f: &MultiPoly<F>, gb: &ReducedGroebnerBasis<F>) -> Result<MultiPoly<F>> {
    gb.normal_form(f)
}

/// Equality of ideals, decided by comparing canonical bases.
pub fn ideal_equal<F: Field>(a: &ReducedGroebnerBasis<F>, b: &ReducedGroebnerBasis<F>) -> Result<bool> {
    check_same_ring(a, b)?;
    Ok(a.generators == b.generators)
}

pub fn ideal_dimension<F: Field>(gb: &ReducedGroebnerBasis<F>) -> i64 {
    gb.dimension()
}

#[cfg(test)]
mod tests;
