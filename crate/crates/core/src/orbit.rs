//! Polynomial self-maps of affine space and the orbits of rational points.
//!
//! Iterates are always computed by repeated evaluation. Composing the map
//! with itself symbolically makes coefficients explode, so even `φ^a` is kept
//! as "apply `φ` a times" (see [`Morphism::power`]).

use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::ideal::ReducedGroebnerBasis;
use crate::poly::MultiPoly;

/// A point of affine space with coordinates in the field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalPoint<F: Field> {
    coordinates: Vec<F>,
}

impl<F: Field> RationalPoint<F> {
    pub fn new(descriptor: FieldDescriptor, coordinates: Vec<F>) -> Result<Self> {
        if coordinates.iter().any(|c| c.descriptor() != descriptor) {
            return Err(Error::FieldMismatch);
        }
        Ok(Self { coordinates })
    }

    pub fn coordinates(&self) -> &[F] {
        &self.coordinates
    }

    pub fn num_vars(&self) -> usize {
        self.coordinates.len()
    }

    pub fn into_coordinates(self) -> Vec<F> {
        self.coordinates
    }
}

impl<F: Field> std::fmt::Display for RationalPoint<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coordinates.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A polynomial map `A^n -> A^n`, possibly iterated a fixed number of times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<F: Field> {
    components: Vec<MultiPoly<F>>,
    num_vars: usize,
    descriptor: FieldDescriptor,
    repeat: u64,
}

impl<F: Field> Morphism<F> {
    pub fn new(descriptor: FieldDescriptor, components: Vec<MultiPoly<F>>) -> Result<Self> {
        let num_vars = components.len();
        for c in &components {
            if c.descriptor() != descriptor {
                return Err(Error::FieldMismatch);
            }
            if c.num_vars() != num_vars {
                return Err(Error::ShapeMismatch(format!(
                    "component in {} variables for a self-map of {}-space",
                    c.num_vars(),
                    num_vars
                )));
            }
        }
        Ok(Self {
            components,
            num_vars,
            descriptor,
            repeat: 1,
        })
    }

    /// The components of the underlying single-step map.
    pub fn components(&self) -> &[MultiPoly<F>] {
        &self.components
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        self.descriptor
    }

    /// How many times the underlying map is applied per step.
    pub fn repeat(&self) -> u64 {
        self.repeat
    }

    /// `self^k`, still evaluated step by step. `power(0)` is the identity.
    pub fn power(&self, k: u64) -> Self {
        Self {
            repeat: self.repeat * k,
            ..self.clone()
        }
    }

    fn check_point(&self, point: &RationalPoint<F>) -> Result<()> {
        if point.num_vars() != self.num_vars {
            return Err(Error::ShapeMismatch(format!(
                "point in {}-space, map on {}-space",
                point.num_vars(),
                self.num_vars
            )));
        }
        if point.coordinates.iter().any(|c| c.descriptor() != self.descriptor) {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn step_unchecked(&self, coords: &[F]) -> Vec<F> {
        self.components
            .iter()
            .map(|c| c.evaluate(coords).expect("checked point"))
            .collect()
    }

    fn apply_unchecked(&self, coords: Vec<F>) -> Vec<F> {
        (0..self.repeat).fold(coords, |acc, _| self.step_unchecked(&acc))
    }

    pub fn apply(&self, point: &RationalPoint<F>) -> Result<RationalPoint<F>> {
        self.check_point(point)?;
        Ok(RationalPoint {
            coordinates: self.apply_unchecked(point.coordinates.clone()),
        })
    }

    /// `g ∘ self`, substituting the components once per underlying step.
    pub fn pullback(&self, g: &MultiPoly<F>) -> Result<MultiPoly<F>> {
        if g.descriptor() != self.descriptor {
            return Err(Error::FieldMismatch);
        }
        if g.num_vars() != self.num_vars {
            return Err(Error::ShapeMismatch(format!(
                "polynomial in {} variables, map on {}-space",
                g.num_vars(),
                self.num_vars
            )));
        }
        let mut out = g.clone();
        for _ in 0..self.repeat {
            out = out.substitute(&self.components)?;
        }
        Ok(out)
    }

    /// Lazily iterates the orbit `α, φ(α), φ²(α), …`.
    pub fn orbit(&self, alpha: &RationalPoint<F>) -> Result<Orbit<'_, F>> {
        self.check_point(alpha)?;
        Ok(Orbit {
            map: self,
            next: Some(alpha.coordinates.clone()),
        })
    }
}

/// Infinite iterator over an orbit; each item is one application of the map
/// to the previous one.
pub struct Orbit<'a, F: Field> {
    map: &'a Morphism<F>,
    next: Option<Vec<F>>,
}

impl<F: Field> Iterator for Orbit<'_, F> {
    type Item = RationalPoint<F>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.next.take().expect("orbits are infinite");
        self.next = Some(self.map.apply_unchecked(current.clone()));
        Some(RationalPoint { coordinates: current })
    }
}

/// Preperiod `τ` and period `c` of an eventually periodic orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CycleStructure {
    pub preperiod: usize,
    pub period: usize,
}

/// The indices `n < horizon` at which the orbit lies in a subvariety.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReturnSet {
    horizon: usize,
    indices: Vec<usize>,
}

impl ReturnSet {
    /// Sorts and deduplicates; errors if an index is not below the horizon.
    pub fn new(horizon: usize, mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if let Some(&last) = indices.last() {
            if last >= horizon {
                return Err(Error::InvalidParameter(format!(
                    "index {last} outside horizon {horizon}"
                )));
            }
        }
        Ok(Self { horizon, indices })
    }

    pub fn from_predicate(horizon: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        Self {
            horizon,
            indices: (0..horizon).filter(|&n| pred(n)).collect(),
        }
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, n: usize) -> bool {
        self.indices.binary_search(&n).is_ok()
    }

    /// Membership bitmap over `[0, horizon)`.
    pub fn indicator(&self) -> Vec<bool> {
        let mut out = vec![false; self.horizon];
        for &n in &self.indices {
            out[n] = true;
        }
        out
    }
}

/// `φⁿ(α)` by `n` successive evaluations.
pub fn morphism_iterate<F: Field>(phi: &Morphism<F>, alpha: &RationalPoint<F>, n: usize) -> Result<RationalPoint<F>> {
    Ok(phi.orbit(alpha)?.nth(n).expect("orbits are infinite"))
}

/// `[α, φ(α), …, φ^{N-1}(α)]`.
pub fn orbit_prefix<F: Field>(phi: &Morphism<F>, alpha: &RationalPoint<F>, n: usize) -> Result<Vec<RationalPoint<F>>> {
    Ok(phi.orbit(alpha)?.take(n).collect())
}

/// Minimal preperiod and period of the orbit, by Brent's algorithm.
///
/// Only prime fields are accepted: there every orbit is eventually periodic
/// and the search terminates.
pub fn detect_cycle<F: Field>(phi: &Morphism<F>, alpha: &RationalPoint<F>) -> Result<CycleStructure> {
    if !phi.descriptor.is_finite() {
        return Err(Error::CycleRequiresFiniteField);
    }
    phi.check_point(alpha)?;
    let f = |x: &Vec<F>| phi.apply_unchecked(x.clone());
    let x0 = alpha.coordinates.clone();

    let mut power = 1usize;
    let mut period = 1usize;
    let mut tortoise = x0.clone();
    let mut hare = f(&x0);
    while tortoise != hare {
        if power == period {
            tortoise = hare.clone();
            power *= 2;
            period = 0;
        }
        hare = f(&hare);
        period += 1;
    }

    let mut tortoise = x0.clone();
    let mut hare = x0;
    for _ in 0..period {
        hare = f(&hare);
    }
    let mut preperiod = 0;
    while tortoise != hare {
        tortoise = f(&tortoise);
        hare = f(&hare);
        preperiod += 1;
    }
    Ok(CycleStructure { preperiod, period })
}

/// Indices `n < N` with every generator of `v` vanishing at `φⁿ(α)`.
///
/// The orbit is streamed, never stored, so memory stays flat in `N`.
pub fn return_set<F: Field>(
    phi: &Morphism<F>,
    alpha: &RationalPoint<F>,
    v: &ReducedGroebnerBasis<F>,
    n: usize,
) -> Result<ReturnSet> {
    if v.descriptor() != phi.descriptor {
        return Err(Error::FieldMismatch);
    }
    if v.num_vars() != phi.num_vars {
        return Err(Error::ShapeMismatch(format!(
            "subvariety of {}-space, map on {}-space",
            v.num_vars(),
            phi.num_vars
        )));
    }
    let mut indices = Vec::new();
    for (i, point) in phi.orbit(alpha)?.take(n).enumerate() {
        let inside = v
            .generators()
            .iter()
            .all(|g| g.evaluate(point.coordinates()).expect("checked point").is_zero());
        if inside {
            indices.push(i);
        }
    }
    Ok(ReturnSet { horizon: n, indices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Fpt, Rational, UniPoly};
    use crate::ideal::buchberger;
    use crate::poly::{Monomial, MonomialOrder};
    use proptest::prelude::*;

    fn fpt(coeffs: &[u32], p: u32) -> Fpt {
        Fpt::from_poly(UniPoly::from_coeffs(coeffs.to_vec(), p))
    }

    /// `(x, y) -> (t*x, (1 - t)*y)` over F_p(t).
    fn example_map(p: u32) -> Morphism<Fpt> {
        let d = FieldDescriptor::rational_function_field(p).unwrap();
        let o = MonomialOrder::grevlex(2);
        let t = fpt(&[0, 1], p);
        let one_minus_t = fpt(&[1, p - 1], p);
        Morphism::new(
            d,
            vec![
                MultiPoly::term(Monomial::variable(0, 2), t, o.clone()),
                MultiPoly::term(Monomial::variable(1, 2), one_minus_t, o),
            ],
        )
        .unwrap()
    }

    fn example_line(p: u32) -> ReducedGroebnerBasis<Fpt> {
        let d = FieldDescriptor::rational_function_field(p).unwrap();
        let o = MonomialOrder::grevlex(2);
        let line = &(&MultiPoly::variable(0, d, 2, o.clone()) + &MultiPoly::variable(1, d, 2, o.clone()))
            - &MultiPoly::one(d, 2, o.clone());
        buchberger(d, &[line], &o).unwrap()
    }

    fn ones(p: u32) -> RationalPoint<Fpt> {
        let d = FieldDescriptor::rational_function_field(p).unwrap();
        RationalPoint::new(d, vec![fpt(&[1], p), fpt(&[1], p)]).unwrap()
    }

    fn swap() -> Morphism<Rational> {
        let d = FieldDescriptor::rationals();
        let o = MonomialOrder::grevlex(2);
        Morphism::new(
            d,
            vec![MultiPoly::variable(1, d, 2, o.clone()), MultiPoly::variable(0, d, 2, o)],
        )
        .unwrap()
    }

    fn qpoint(coords: &[i64]) -> RationalPoint<Rational> {
        RationalPoint::new(
            FieldDescriptor::rationals(),
            coords.iter().map(|&c| Rational::from_integer(c)).collect(),
        )
        .unwrap()
    }

    /// A univariate map over F_p given by coefficients low to high.
    fn fp_map(p: u32, coeffs: &[i64]) -> Morphism<Fp> {
        let d = FieldDescriptor::prime_field(p).unwrap();
        let o = MonomialOrder::grevlex(1);
        let poly = MultiPoly::from_terms(
            d,
            1,
            o,
            coeffs
                .iter()
                .enumerate()
                .map(|(e, &c)| (Monomial::new(vec![e as u32]), Fp::new(c, p))),
        );
        Morphism::new(d, vec![poly]).unwrap()
    }

    fn fp_point(p: u32, v: i64) -> RationalPoint<Fp> {
        RationalPoint::new(FieldDescriptor::prime_field(p).unwrap(), vec![Fp::new(v, p)]).unwrap()
    }

    #[test]
    fn third_iterate_of_example_map() {
        let pt = morphism_iterate(&example_map(2), &ones(2), 3).unwrap();
        // (1 - t)^3 = 1 + t + t^2 + t^3 in characteristic 2
        assert_eq!(pt.coordinates(), &[fpt(&[0, 0, 0, 1], 2), fpt(&[1, 1, 1, 1], 2)]);
        let pt3 = morphism_iterate(&example_map(3), &ones(3), 3).unwrap();
        assert_eq!(pt3.coordinates(), &[fpt(&[0, 0, 0, 1], 3), fpt(&[1, 0, 0, 2], 3)]);
    }

    #[test]
    fn zeroth_iterate_is_the_point() {
        assert_eq!(morphism_iterate(&example_map(2), &ones(2), 0).unwrap(), ones(2));
    }

    #[test]
    fn swap_is_an_involution() {
        assert_eq!(morphism_iterate(&swap(), &qpoint(&[1, 2]), 2).unwrap(), qpoint(&[1, 2]));
        assert_eq!(swap().power(2).apply(&qpoint(&[1, 2])).unwrap(), qpoint(&[1, 2]));
    }

    #[test]
    fn orbit_prefixes() {
        let prefix = orbit_prefix(&example_map(2), &ones(2), 3).unwrap();
        let shown: Vec<String> = prefix.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["(1, 1)", "(t, t + 1)", "(t^2, t^2 + 1)"]);
        assert!(orbit_prefix(&example_map(2), &ones(2), 0).unwrap().is_empty());

        let squares = orbit_prefix(&fp_map(7, &[0, 0, 1]), &fp_point(7, 3), 4).unwrap();
        let values: Vec<u32> = squares.iter().map(|p| p.coordinates()[0].value()).collect();
        assert_eq!(values, vec![3, 2, 4, 2]);
    }

    #[test]
    fn cycles() {
        let sq = detect_cycle(&fp_map(7, &[0, 0, 1]), &fp_point(7, 3)).unwrap();
        assert_eq!(sq, CycleStructure { preperiod: 1, period: 2 });
        let id = detect_cycle(&fp_map(5, &[0, 1]), &fp_point(5, 2)).unwrap();
        assert_eq!(id, CycleStructure { preperiod: 0, period: 1 });
        let shift = detect_cycle(&fp_map(5, &[1, 1]), &fp_point(5, 0)).unwrap();
        assert_eq!(shift, CycleStructure { preperiod: 0, period: 5 });
    }

    #[test]
    fn cycle_detection_needs_a_finite_field() {
        assert_eq!(
            detect_cycle(&swap(), &qpoint(&[1, 2])),
            Err(Error::CycleRequiresFiniteField)
        );
        assert_eq!(
            detect_cycle(&example_map(2), &ones(2)),
            Err(Error::CycleRequiresFiniteField)
        );
    }

    #[test]
    fn example_return_set_is_powers_of_p() {
        let s = return_set(&example_map(2), &ones(2), &example_line(2), 20).unwrap();
        assert_eq!(s.indices(), &[1, 2, 4, 8, 16]);
        let s3 = return_set(&example_map(3), &ones(3), &example_line(3), 30).unwrap();
        assert_eq!(s3.indices(), &[1, 3, 9, 27]);
    }

    #[test]
    fn zero_ideal_contains_everything() {
        let d = FieldDescriptor::rationals();
        let zero = ReducedGroebnerBasis::zero_ideal(d, 2, MonomialOrder::grevlex(2));
        let s = return_set(&swap(), &qpoint(&[1, 2]), &zero, 10).unwrap();
        assert_eq!(s.indices(), (0..10).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn swap_returns_on_even_steps() {
        let d = FieldDescriptor::rationals();
        let o = MonomialOrder::grevlex(2);
        let v = buchberger(d, &[&MultiPoly::variable(0, d, 2, o.clone()) - &MultiPoly::one(d, 2, o.clone())], &o).unwrap();
        let s = return_set(&swap(), &qpoint(&[1, 2]), &v, 7).unwrap();
        assert_eq!(s.indices(), &[0, 2, 4, 6]);
    }

    #[test]
    fn mismatched_point_is_rejected() {
        assert!(matches!(
            morphism_iterate(&swap(), &qpoint(&[1, 2, 3]), 1),
            Err(Error::ShapeMismatch(_))
        ));
    }

    #[test]
    fn pullback_matches_pointwise_iteration() {
        let phi = example_map(2);
        let v = example_line(2);
        let g = &v.generators()[0];
        let pulled = phi.power(3).pullback(g).unwrap();
        let alpha = ones(2);
        let direct = g.evaluate(morphism_iterate(&phi, &alpha, 3).unwrap().coordinates()).unwrap();
        assert_eq!(pulled.evaluate(alpha.coordinates()).unwrap(), direct);
    }

    #[test]
    fn return_set_constructor_validates() {
        assert_eq!(ReturnSet::new(5, vec![3, 1, 3]).unwrap().indices(), &[1, 3]);
        assert!(ReturnSet::new(3, vec![3]).is_err());
    }

    fn quadratic_map(p: u32, a: i64, b: i64, c: i64) -> Morphism<Fp> {
        fp_map(p, &[c, b, a])
    }

    proptest! {
        #[test]
        fn semigroup_law(a in 0i64..7, b in 0i64..7, c in 0i64..7, x in 0i64..7, m in 0usize..15, n in 0usize..15) {
            let phi = quadratic_map(7, a, b, c);
            let alpha = fp_point(7, x);
            let direct = morphism_iterate(&phi, &alpha, m + n).unwrap();
            let mid = morphism_iterate(&phi, &alpha, m).unwrap();
            prop_assert_eq!(direct, morphism_iterate(&phi, &mid, n).unwrap());
        }

        #[test]
        fn orbit_is_periodic_beyond_preperiod(a in 0i64..11, b in 0i64..11, c in 0i64..11, x in 0i64..11, target in 0i64..11) {
            let p = 11;
            let phi = quadratic_map(p, a, b, c);
            let alpha = fp_point(p, x);
            let cyc = detect_cycle(&phi, &alpha).unwrap();
            let horizon = cyc.preperiod + 3 * cyc.period;
            let prefix = orbit_prefix(&phi, &alpha, horizon).unwrap();
            for n in cyc.preperiod..horizon - cyc.period {
                prop_assert_eq!(&prefix[n], &prefix[n + cyc.period]);
            }
            // minimality: all points before the cycle closes are distinct
            let head = &prefix[..cyc.preperiod + cyc.period];
            let distinct: std::collections::HashSet<_> = head.iter().collect();
            prop_assert_eq!(distinct.len(), head.len());

            let d = FieldDescriptor::prime_field(p).unwrap();
            let o = MonomialOrder::grevlex(1);
            let v = buchberger(d, &[&MultiPoly::variable(0, d, 1, o.clone()) - &MultiPoly::from_i64(target, d, 1, o.clone())], &o).unwrap();
            let s = return_set(&phi, &alpha, &v, horizon).unwrap();
            for &n in s.indices() {
                if n >= cyc.preperiod && n + cyc.period < horizon {
                    prop_assert!(s.contains(n + cyc.period));
                }
            }
        }

        #[test]
        fn sum_of_ideals_intersects_return_sets(a in 0i64..5, b in 0i64..5, x in 0i64..5, y in 0i64..5, u in 0i64..5, w in 0i64..5) {
            let p = 5;
            let d = FieldDescriptor::prime_field(p).unwrap();
            let o = MonomialOrder::grevlex(2);
            let xv = MultiPoly::variable(0, d, 2, o.clone());
            let yv = MultiPoly::variable(1, d, 2, o.clone());
            let phi = Morphism::new(d, vec![
                &(&yv * &yv) + &MultiPoly::from_i64(a, d, 2, o.clone()),
                &(&xv * &yv) + &MultiPoly::from_i64(b, d, 2, o.clone()),
            ]).unwrap();
            let alpha = RationalPoint::new(d, vec![Fp::new(x, p), Fp::new(y, p)]).unwrap();
            let v1 = buchberger(d, &[&xv - &MultiPoly::from_i64(u, d, 2, o.clone())], &o).unwrap();
            let v2 = buchberger(d, &[&yv - &MultiPoly::from_i64(w, d, 2, o.clone())], &o).unwrap();
            let both = v1.sum(&v2).unwrap();
            let s1 = return_set(&phi, &alpha, &v1, 40).unwrap();
            let s2 = return_set(&phi, &alpha, &v2, 40).unwrap();
            let s12 = return_set(&phi, &alpha, &both, 40).unwrap();
            let expected: Vec<usize> = s1.indices().iter().copied().filter(|&n| s2.contains(n)).collect();
            prop_assert_eq!(s12.indices(), expected.as_slice());
        }
    }
}
