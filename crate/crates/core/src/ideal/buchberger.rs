use std::collections::BTreeSet;

use super::{reduce, ReducedGroebnerBasis};
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::poly::{MonomialOrder, MultiPoly};

/// The S-polynomial of two nonzero polynomials sharing an order.
pub fn s_polynomial<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> MultiPoly<F> {
    let (mf, cf) = f.leading_term().expect("nonzero polynomial");
    let (mg, cg) = g.leading_term().expect("nonzero polynomial");
    let lcm = mf.lcm(mg);
    let left = f.mul_term(
        &mf.quotient_of(&lcm).expect("lcm is a multiple"),
        &cf.inv().expect("nonzero leading coefficient"),
    );
    let right = g.mul_term(
        &mg.quotient_of(&lcm).expect("lcm is a multiple"),
        &cg.inv().expect("nonzero leading coefficient"),
    );
    &left - &right
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first) and both of Buchberger's criteria: pairs with coprime leading
/// monomials are skipped, and so are pairs covered by the chain criterion.
pub fn buchberger<F: Field>(
    descriptor: FieldDescriptor,
    gens: &[MultiPoly<F>],
    order: &MonomialOrder,
) -> Result<ReducedGroebnerBasis<F>> {
    let num_vars = order.num_vars();
    for g in gens {
        if g.descriptor() != descriptor {
            return Err(Error::FieldMismatch);
        }
        if g.num_vars() != num_vars {
            return Err(Error::ShapeMismatch(format!(
                "generator in {} variables, order over {}",
                g.num_vars(),
                num_vars
            )));
        }
    }

    let mut basis: Vec<MultiPoly<F>> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return Ok(ReducedGroebnerBasis::unit_ideal(descriptor, num_vars, order.clone()));
        }
        let g = g.with_order(order).monic();
        if !basis.contains(&g) {
            basis.push(g);
        }
    }
    if basis.is_empty() {
        return Ok(ReducedGroebnerBasis::zero_ideal(descriptor, num_vars, order.clone()));
    }

    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 1..basis.len() {
        for i in 0..j {
            pending.insert((i, j));
        }
    }

    while let Some(pair) = select_pair(&pending, &basis, order) {
        pending.remove(&pair);
        let (i, j) = pair;
        let lm_i = basis[i].leading_monomial().expect("nonzero");
        let lm_j = basis[j].leading_monomial().expect("nonzero");
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        if chain_criterion(i, j, &basis, &pending) {
            continue;
        }
        let h = reduce(&s_polynomial(&basis[i], &basis[j]), &basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(ReducedGroebnerBasis::unit_ideal(descriptor, num_vars, order.clone()));
        }
        let k = basis.len();
        basis.push(h.monic());
        for i in 0..k {
            pending.insert((i, k));
        }
    }

    Ok(ReducedGroebnerBasis::from_reduced(
        descriptor,
        num_vars,
        order.clone(),
        interreduce(basis, order),
    ))
}

/// Pair with the smallest lcm of leading monomials; ties by index.
fn select_pair<F: Field>(
    pending: &BTreeSet<(usize, usize)>,
    basis: &[MultiPoly<F>],
    order: &MonomialOrder,
) -> Option<(usize, usize)> {
    pending
        .iter()
        .map(|&(i, j)| {
            let lcm = basis[i]
                .leading_monomial()
                .expect("nonzero")
                .lcm(basis[j].leading_monomial().expect("nonzero"));
            ((i, j), lcm)
        })
        .min_by(|(pa, la), (pb, lb)| order.cmp(la, lb).then(pa.cmp(pb)))
        .map(|(pair, _)| pair)
}

/// True when some third element's leading monomial divides the lcm of the
/// pair and both of its pairings with the pair have already been treated.
fn chain_criterion<F: Field>(i: usize, j: usize, basis: &[MultiPoly<F>], pending: &BTreeSet<(usize, usize)>) -> bool {
    let lcm = basis[i]
        .leading_monomial()
        .expect("nonzero")
        .lcm(basis[j].leading_monomial().expect("nonzero"));
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    (0..basis.len()).any(|k| {
        k != i
            && k != j
            && basis[k].leading_monomial().expect("nonzero").divides(&lcm)
            && !pending.contains(&key(i, k))
            && !pending.contains(&key(j, k))
    })
}

/// Turns a Gröbner basis into the reduced one: drop elements whose leading
/// monomial is a multiple of another's, then reduce the tails.
fn interreduce<F: Field>(mut basis: Vec<MultiPoly<F>>, order: &MonomialOrder) -> Vec<MultiPoly<F>> {
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().expect("nonzero"), b.leading_monomial().expect("nonzero")));
    let mut minimal: Vec<MultiPoly<F>> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().expect("nonzero");
        if minimal
            .iter()
            .all(|h| !h.leading_monomial().expect("nonzero").divides(lm))
        {
            minimal.push(g);
        }
    }
    (0..minimal.len())
        .map(|k| {
            let others: Vec<MultiPoly<F>> = minimal
                .iter()
                .enumerate()
                .filter(|&(idx, _)| idx != k)
                .map(|(_, g)| g.clone())
                .collect();
            let g = &minimal[k];
            let (lm, lc) = g.leading_term().expect("nonzero").clone();
            let mut tail = g.clone();
            tail.pop_leading();
            let head = MultiPoly::term(lm, lc, order.clone());
            (&head + &reduce(&tail, &others)).monic()
        })
        .collect()
}
