use std::collections::HashSet;

use super::ReducedGroebnerBasis;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::poly::{Monomial, MonomialOrder, MultiPoly};

/// A finite set of points with coordinates in the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet<F: Field> {
    points: Vec<Vec<F>>,
    num_vars: usize,
    descriptor: FieldDescriptor,
}

impl<F: Field> PointSet<F> {
    pub fn new(descriptor: FieldDescriptor, num_vars: usize, points: Vec<Vec<F>>) -> Result<Self> {
        for pt in &points {
            if pt.len() != num_vars {
                return Err(Error::ShapeMismatch(format!(
                    "point with {} coordinates in {}-space",
                    pt.len(),
                    num_vars
                )));
            }
            if pt.iter().any(|c| c.descriptor() != descriptor) {
                return Err(Error::FieldMismatch);
            }
        }
        Ok(Self {
            points,
            num_vars,
            descriptor,
        })
    }

    pub fn points(&self) -> &[Vec<F>] {
        &self.points
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.descriptor
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Points without repetition, first occurrence order.
    pub fn distinct(&self) -> Vec<&Vec<F>> {
        let mut seen = HashSet::new();
        self.points.iter().filter(|p| seen.insert(*p)).collect()
    }
}

struct EchelonRow<F: Field> {
    pivot: usize,
    values: Vec<F>,
    poly: MultiPoly<F>,
}

fn monomial_value<F: Field>(m: &Monomial, point: &[F], d: &FieldDescriptor) -> F {
    m.exponents()
        .iter()
        .zip(point)
        .filter(|(&e, _)| e > 0)
        .fold(F::one_in(d), |acc, (&e, c)| acc.mul(&c.pow(u64::from(e))))
}

/// Reduced Gröbner basis of the ideal of all polynomials vanishing on `pts`.
///
/// Buchberger–Möller: monomials are visited in increasing order; each one's
/// evaluation vector is reduced against the echelon form of the vectors of
/// the standard monomials found so far. A dependent monomial yields a basis
/// element whose tail lies in the span of standard monomials, so the output
/// is reduced without a separate interreduction.
pub fn vanishing_ideal<F: Field>(pts: &PointSet<F>, order: &MonomialOrder) -> Result<ReducedGroebnerBasis<F>> {
    if pts.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let n = pts.num_vars;
    if order.num_vars() != n {
        return Err(Error::ShapeMismatch(format!(
            "order over {} variables, points in {}-space",
            order.num_vars(),
            n
        )));
    }
    let d = pts.descriptor;
    let points = pts.distinct();

    let mut rows: Vec<EchelonRow<F>> = Vec::new();
    let mut basis: Vec<MultiPoly<F>> = Vec::new();
    let mut candidates: Vec<Monomial> = vec![Monomial::one(n)];

    while !candidates.is_empty() {
        let idx = (0..candidates.len())
            .min_by(|&a, &b| order.cmp(&candidates[a], &candidates[b]))
            .expect("nonempty");
        let m = candidates.swap_remove(idx);
        if basis
            .iter()
            .any(|g| g.leading_monomial().expect("nonzero").divides(&m))
        {
            continue;
        }

        let mut values: Vec<F> = points.iter().map(|pt| monomial_value(&m, pt, &d)).collect();
        let mut poly = MultiPoly::term(m.clone(), F::one_in(&d), order.clone());
        for row in &rows {
            let c = values[row.pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (v, r) in values.iter_mut().zip(&row.values) {
                *v = v.sub(&c.mul(r));
            }
            poly = &poly - &row.poly.scale(&c);
        }

        match values.iter().position(|v| !v.is_zero()) {
            None => basis.push(poly),
            Some(pivot) => {
                let scale = values[pivot].inv()?;
                let values = values.iter().map(|v| v.mul(&scale)).collect();
                rows.push(EchelonRow {
                    pivot,
                    values,
                    poly: poly.scale(&scale),
                });
                for i in 0..n {
                    let next = m.mul(&Monomial::variable(i, n));
                    if !candidates.contains(&next) {
                        candidates.push(next);
                    }
                }
            }
        }
    }

    Ok(ReducedGroebnerBasis::from_reduced(d, n, order.clone(), basis))
}
