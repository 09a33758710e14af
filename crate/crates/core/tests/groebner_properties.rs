use dml_core::field::Field;
use dml_core::ideal::{buchberger, ideal_equal, s_polynomial, vanishing_ideal, PointSet};
use dml_core::{FieldDescriptor, Fp, Monomial, MonomialOrder, MultiPoly, OrderKind, Rational};
use proptest::prelude::*;

const P: u32 = 7;

fn fp7() -> FieldDescriptor {
    FieldDescriptor::prime_field(P).unwrap()
}

fn orders(n: usize) -> Vec<MonomialOrder> {
    let reversed: Vec<usize> = (0..n).rev().collect();
    vec![
        MonomialOrder::lex(n),
        MonomialOrder::grevlex(n),
        MonomialOrder::new(OrderKind::Lex, reversed.clone()),
        MonomialOrder::new(OrderKind::GrevLex, reversed),
    ]
}

/// Up to four terms of total degree at most 3.
fn arb_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
    proptest::collection::vec((proptest::collection::vec(0u32..=3, n), 1i64..7), 1..=4).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(mut e, c)| {
                while e.iter().sum::<u32>() > 3 {
                    let i = e.iter().position(|&x| x > 0).unwrap();
                    e[i] -= 1;
                }
                (e, c)
            })
            .collect()
    })
}

fn build(terms: &[(Vec<u32>, i64)], n: usize, order: &MonomialOrder) -> MultiPoly<Fp> {
    MultiPoly::from_terms(
        fp7(),
        n,
        order.clone(),
        terms.iter().map(|(e, c)| (Monomial::new(e.clone()), Fp::new(*c, P))),
    )
}

fn arb_system() -> impl Strategy<Value = (usize, Vec<Vec<(Vec<u32>, i64)>>, usize)> {
    (1usize..=3).prop_flat_map(|n| (Just(n), proptest::collection::vec(arb_poly(n), 1..=3), 0usize..4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bases_are_groebner_and_contain_the_input((n, system, oi) in arb_system()) {
        let order = &orders(n)[oi];
        let gens: Vec<_> = system.iter().map(|t| build(t, n, order)).collect();
        let gb = buchberger(fp7(), &gens, order).unwrap();
        for (i, f) in gb.generators().iter().enumerate() {
            prop_assert!(f.leading_coeff().unwrap().is_one());
            for g in &gb.generators()[i + 1..] {
                prop_assert!(gb.normal_form(&s_polynomial(f, g)).unwrap().is_zero());
            }
        }
        for g in &gens {
            prop_assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn bases_ignore_generator_order((n, system, oi) in arb_system(), seed in any::<u64>()) {
        let order = &orders(n)[oi];
        let gens: Vec<_> = system.iter().map(|t| build(t, n, order)).collect();
        let mut shuffled = gens.clone();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        if seed % 2 == 0 {
            shuffled.reverse();
        }
        let a = buchberger(fp7(), &gens, order).unwrap();
        let b = buchberger(fp7(), &shuffled, order).unwrap();
        prop_assert!(ideal_equal(&a, &b).unwrap());
    }

    #[test]
    fn normal_forms_are_idempotent((n, system, oi) in arb_system(), f in arb_poly(3)) {
        let order = &orders(n)[oi];
        let gens: Vec<_> = system.iter().map(|t| build(t, n, order)).collect();
        let gb = buchberger(fp7(), &gens, order).unwrap();
        let f: Vec<_> = f.into_iter().map(|(e, c)| (e[..n].to_vec(), c)).collect();
        let nf = gb.normal_form(&build(&f, n, order)).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn adding_a_generator_never_raises_dimension((n, system, oi) in arb_system(), extra in arb_poly(3)) {
        let order = &orders(n)[oi];
        let gens: Vec<_> = system.iter().map(|t| build(t, n, order)).collect();
        let gb = buchberger(fp7(), &gens, order).unwrap();
        let extra: Vec<_> = extra.into_iter().map(|(e, c)| (e[..n].to_vec(), c)).collect();
        let mut more = gens.clone();
        more.push(build(&extra, n, order));
        let bigger = buchberger(fp7(), &more, order).unwrap();
        prop_assert!(bigger.dimension() <= gb.dimension());
    }

    #[test]
    fn groebner_bases_agree_across_orders_as_ideals((n, system, _oi) in arb_system()) {
        let os = orders(n);
        let gens: Vec<_> = system.iter().map(|t| build(t, n, &os[0])).collect();
        let a = buchberger(fp7(), &gens, &os[0]).unwrap();
        let b = buchberger(fp7(), &gens, &os[1]).unwrap();
        for g in b.generators() {
            prop_assert!(a.contains(g).unwrap());
        }
        for g in a.generators() {
            prop_assert!(b.contains(g).unwrap());
        }
        prop_assert_eq!(a.dimension(), b.dimension());
    }

    #[test]
    fn vanishing_ideals_over_the_rationals(points in proptest::collection::vec((-4i64..5, -4i64..5), 1..12), oi in 0usize..4) {
        let d = FieldDescriptor::rationals();
        let pts = PointSet::new(
            d,
            2,
            points.iter().map(|&(a, b)| vec![Rational::from_integer(a), Rational::from_integer(b)]).collect(),
        ).unwrap();
        let order = &orders(2)[oi];
        let gb = vanishing_ideal(&pts, order).unwrap();
        for pt in pts.points() {
            for g in gb.generators() {
                prop_assert!(g.evaluate(pt).unwrap().is_zero());
            }
        }
        prop_assert_eq!(gb.standard_monomials().unwrap().len(), pts.distinct().len());
        prop_assert_eq!(&buchberger(d, gb.generators(), order).unwrap(), &gb);
    }
}
