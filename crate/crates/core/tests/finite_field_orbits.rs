//! Over a prime field every orbit is eventually periodic, so the return set
//! past the preperiod is exactly a union of residue classes. Progression
//! mining must recover that union at a horizon of four periods.

use dml_core::closure::{certify_invariant, closure_chain, ClosureParams};
use dml_core::density::{covered_set, decompose_return_set, detect_progressions};
use dml_core::ideal::buchberger;
use dml_core::orbit::{detect_cycle, orbit_prefix, return_set, Morphism, RationalPoint};
use dml_core::field::Field;
use dml_core::{FieldDescriptor, Fp, Monomial, MonomialOrder, MultiPoly, ReturnSet};
use proptest::prelude::*;

type Terms = Vec<(u32, u32, i64)>;

fn poly(p: u32, terms: &Terms) -> MultiPoly<Fp> {
    let d = FieldDescriptor::prime_field(p).unwrap();
    MultiPoly::from_terms(
        d,
        2,
        MonomialOrder::grevlex(2),
        terms.iter().map(|&(i, j, c)| (Monomial::new(vec![i, j]), Fp::new(c, p))),
    )
}

fn arb_terms() -> impl Strategy<Value = Terms> {
    proptest::collection::vec((0u32..3, 0u32..3, 0i64..13), 1..4)
}

fn arb_instance() -> impl Strategy<Value = (u32, Terms, Terms, (i64, i64), Terms)> {
    (
        prop::sample::select(vec![2u32, 3, 5, 7, 11, 13]),
        arb_terms(),
        arb_terms(),
        (0i64..13, 0i64..13),
        arb_terms(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn progressions_match_residue_classes((p, f, g, (x, y), v) in arb_instance()) {
        let d = FieldDescriptor::prime_field(p).unwrap();
        let phi = Morphism::new(d, vec![poly(p, &f), poly(p, &g)]).unwrap();
        let alpha = RationalPoint::new(d, vec![Fp::new(x, p), Fp::new(y, p)]).unwrap();
        let target = buchberger(d, &[poly(p, &v)], &MonomialOrder::grevlex(2)).unwrap();

        let cycle = detect_cycle(&phi, &alpha).unwrap();
        let (tau, c) = (cycle.preperiod, cycle.period);
        let n = tau + 4 * c;
        let s = return_set(&phi, &alpha, &target, n).unwrap();

        let prefix = orbit_prefix(&phi, &alpha, n).unwrap();
        let in_v = |k: usize| target.generators().iter().all(|h| h.evaluate(prefix[k].coordinates()).unwrap().is_zero());
        let exact_a = ReturnSet::from_predicate(n, |k| k >= tau && in_v(tau + (k - tau) % c));
        let exact_b = ReturnSet::from_predicate(n, |k| k < tau && in_v(k));

        let progs = detect_progressions(&s, c, 4, tau).unwrap();
        let decomposition = decompose_return_set(&s, &progs).unwrap();
        prop_assert_eq!(covered_set(&progs, n), exact_a);
        prop_assert_eq!(decomposition.residual, exact_b);
    }

    #[test]
    fn certified_closures_stay_in_the_return_set((p, f, g, (x, y), v) in arb_instance()) {
        let d = FieldDescriptor::prime_field(p).unwrap();
        let phi = Morphism::new(d, vec![poly(p, &f), poly(p, &g)]).unwrap();
        let alpha = RationalPoint::new(d, vec![Fp::new(x, p), Fp::new(y, p)]).unwrap();
        let target = buchberger(d, &[poly(p, &v)], &MonomialOrder::grevlex(2)).unwrap();
        let cycle = detect_cycle(&phi, &alpha).unwrap();
        let n = cycle.preperiod + 4 * cycle.period;
        let s = return_set(&phi, &alpha, &target, n).unwrap();
        let progs = detect_progressions(&s, cycle.period, 4, cycle.preperiod).unwrap();
        // a chain holds one closure per offset; keep the moduli small
        for prog in progs.into_iter().filter(|q| q.a <= 6).take(3) {
            let chain = closure_chain(&phi, &alpha, prog.a, prog.b, &ClosureParams::default()).unwrap();
            let w = &chain.link(prog.b).unwrap().closure.ideal;
            let cert = certify_invariant(w, &phi, prog.a).unwrap();
            let inside_v = target.generators().iter().all(|h| w.contains(h).unwrap());
            if cert.invariant && inside_v {
                let longer = return_set(&phi, &alpha, &target, 3 * n).unwrap();
                prop_assert!(prog.members(3 * n).all(|k| longer.contains(k)));
            }
        }
    }
}
