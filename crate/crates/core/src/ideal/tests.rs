use super::*;
use crate::field::{Fp, Fpt, Rational, UniPoly};
use crate::poly::OrderKind;

fn qq() -> FieldDescriptor {
    FieldDescriptor::rationals()
}

fn lex_y_gt_x() -> MonomialOrder {
    MonomialOrder::new(OrderKind::Lex, vec![1, 0])
}

/// Terms are `(numerator, denominator, [deg_x, deg_y])`.
fn q(order: &MonomialOrder, terms: &[(i64, i64, [u32; 2])]) -> MultiPoly<Rational> {
    MultiPoly::from_terms(
        qq(),
        2,
        order.clone(),
        terms
            .iter()
            .map(|(n, d, e)| (Monomial::new(e.to_vec()), Rational::new(*n, *d).unwrap())),
    )
}

fn gb(order: &MonomialOrder, gens: &[MultiPoly<Rational>]) -> ReducedGroebnerBasis<Rational> {
    buchberger(qq(), gens, order).unwrap()
}

const XY: [&str; 2] = ["x", "y"];

#[test]
fn linear_point_is_already_reduced() {
    let o = lex_y_gt_x();
    let g = gb(&o, &[q(&o, &[(1, 1, [1, 0]), (-1, 1, [0, 0])]), q(&o, &[(1, 1, [0, 1]), (-2, 1, [0, 0])])]);
    assert_eq!(g.render(&XY), vec!["y - 2", "x - 1"]);
}

#[test]
fn monomial_ideal_s_pair_vanishes() {
    let o = MonomialOrder::lex(2);
    let x2 = q(&o, &[(1, 1, [2, 0])]);
    let xy = q(&o, &[(1, 1, [1, 1])]);
    // y*x^2 - x*(x*y) = 0
    assert!(s_polynomial(&x2, &xy).is_zero());
    let g = gb(&o, &[xy.clone(), x2.clone()]);
    assert_eq!(g.generators(), &[x2, xy]);
}

#[test]
fn linear_system_over_rationals() {
    let o = lex_y_gt_x();
    let g = gb(
        &o,
        &[
            q(&o, &[(1, 1, [1, 0]), (1, 1, [0, 1]), (-1, 1, [0, 0])]),
            q(&o, &[(1, 1, [1, 0]), (-1, 1, [0, 1])]),
        ],
    );
    // x + y = 1, x = y  =>  x = y = 1/2
    assert_eq!(g.render(&XY), vec!["y - 1/2", "x - 1/2"]);
}

#[test]
fn normal_form_examples() {
    let o = MonomialOrder::grevlex(2);
    let point = gb(&o, &[q(&o, &[(1, 1, [1, 0]), (-1, 1, [0, 0])]), q(&o, &[(1, 1, [0, 1]), (-2, 1, [0, 0])])]);
    let nf = normal_form(&q(&o, &[(1, 1, [1, 0]), (1, 1, [0, 1])]), &point).unwrap();
    assert_eq!(nf.render(&XY), "3");

    let x = gb(&o, &[q(&o, &[(1, 1, [1, 0])])]);
    assert!(normal_form(&q(&o, &[(1, 1, [2, 0])]), &x).unwrap().is_zero());
}

#[test]
fn normal_form_over_function_field() {
    let d = FieldDescriptor::rational_function_field(2).unwrap();
    let o = MonomialOrder::lex(2);
    let c = |coeffs: &[u32]| Fpt::from_poly(UniPoly::from_coeffs(coeffs.to_vec(), 2));
    let poly = |terms: &[(&[u32], [u32; 2])]| {
        MultiPoly::from_terms(d, 2, o.clone(), terms.iter().map(|(k, e)| (Monomial::new(e.to_vec()), c(k))))
    };
    let line = buchberger(d, &[poly(&[(&[1], [1, 0]), (&[1], [0, 1]), (&[1], [0, 0])])], &o).unwrap();
    let f = poly(&[(&[0, 1], [1, 0]), (&[1, 1], [0, 1]), (&[1], [0, 0])]);
    let nf = normal_form(&f, &line).unwrap();
    // f - t*(x + y + 1) = y + t + 1
    assert_eq!(nf, poly(&[(&[1], [0, 1]), (&[1, 1], [0, 0])]));
    assert_eq!(nf.render(&XY), "y + t + 1");
}

#[test]
fn equality_of_ideals() {
    let o = MonomialOrder::grevlex(2);
    let a = gb(&o, &[q(&o, &[(1, 1, [1, 0]), (-1, 1, [0, 0])]), q(&o, &[(1, 1, [0, 1]), (-2, 1, [0, 0])])]);
    let b = gb(&o, &[q(&o, &[(1, 1, [0, 1]), (-2, 1, [0, 0])]), q(&o, &[(2, 1, [1, 0]), (-2, 1, [0, 0])])]);
    assert!(ideal_equal(&a, &b).unwrap());

    let zero = ReducedGroebnerBasis::<Rational>::zero_ideal(qq(), 2, o.clone());
    let unit = ReducedGroebnerBasis::<Rational>::unit_ideal(qq(), 2, o.clone());
    assert!(!ideal_equal(&zero, &unit).unwrap());

    let x = gb(&o, &[q(&o, &[(1, 1, [1, 0])])]);
    let x2 = gb(&o, &[q(&o, &[(1, 1, [2, 0])])]);
    assert!(!ideal_equal(&x, &x2).unwrap());

    let lex = x.with_order(&MonomialOrder::lex(2));
    assert_eq!(ideal_equal(&x, &lex), Err(Error::OrderMismatch));
}

#[test]
fn dimensions() {
    let o = MonomialOrder::grevlex(2);
    let point = gb(&o, &[q(&o, &[(1, 1, [1, 0]), (-1, 1, [0, 0])]), q(&o, &[(1, 1, [0, 1]), (-2, 1, [0, 0])])]);
    assert_eq!(ideal_dimension(&point), 0);
    let line = gb(&o, &[q(&o, &[(1, 1, [1, 0]), (1, 1, [0, 1]), (-1, 1, [0, 0])])]);
    assert_eq!(ideal_dimension(&line), 1);
    assert_eq!(ideal_dimension(&ReducedGroebnerBasis::<Rational>::zero_ideal(qq(), 2, o.clone())), 2);
    assert_eq!(ideal_dimension(&ReducedGroebnerBasis::<Rational>::unit_ideal(qq(), 2, o)), -1);
}

#[test]
fn inconsistent_system_is_the_unit_ideal() {
    let o = MonomialOrder::grevlex(2);
    let g = gb(&o, &[q(&o, &[(1, 1, [1, 0]), (-1, 1, [0, 0])]), q(&o, &[(1, 1, [1, 0]), (-2, 1, [0, 0])])]);
    assert!(g.is_unit_ideal());
    assert_eq!(g.render(&XY), vec!["1"]);
}

#[test]
fn empty_generators_give_zero_ideal() {
    let g = buchberger::<Rational>(qq(), &[], &MonomialOrder::grevlex(3)).unwrap();
    assert!(g.is_zero_ideal());
    assert_eq!(g.num_vars(), 3);
}

fn qpoints(pts: &[[i64; 2]]) -> PointSet<Rational> {
    PointSet::new(
        qq(),
        2,
        pts.iter()
            .map(|p| p.iter().map(|&v| Rational::from_integer(v)).collect())
            .collect(),
    )
    .unwrap()
}

#[test]
fn vanishing_ideal_of_one_point() {
    let g = vanishing_ideal(&qpoints(&[[1, 2]]), &lex_y_gt_x()).unwrap();
    assert_eq!(g.render(&XY), vec!["y - 2", "x - 1"]);
}

#[test]
fn vanishing_ideal_of_parabola_points() {
    let pts = qpoints(&[[1, 1], [2, 4], [3, 9]]);
    let g = vanishing_ideal(&pts, &lex_y_gt_x()).unwrap();
    assert_eq!(g.render(&XY), vec!["y - x^2", "x^3 - 6*x^2 + 11*x - 6"]);
    // oracle: both vanish on all points and the quotient has dimension 3
    for p in pts.points() {
        for f in g.generators() {
            assert!(f.evaluate(p).unwrap().is_zero());
        }
    }
    assert_eq!(g.standard_monomials().unwrap().len(), 3);
    assert_eq!(g.dimension(), 0);
}

#[test]
fn vanishing_ideal_of_two_diagonal_points() {
    let g = vanishing_ideal(&qpoints(&[[0, 0], [1, 1], [0, 0]]), &lex_y_gt_x()).unwrap();
    assert_eq!(g.render(&XY), vec!["y - x", "x^2 - x"]);
    assert_eq!(g.standard_monomials().unwrap().len(), 2);
}

#[test]
fn vanishing_ideal_rejects_empty_input() {
    let empty = PointSet::<Fp>::new(FieldDescriptor::prime_field(7).unwrap(), 2, vec![]).unwrap();
    assert_eq!(vanishing_ideal(&empty, &MonomialOrder::grevlex(2)), Err(Error::EmptyPointSet));
}

#[test]
fn vanishing_ideal_matches_buchberger_of_its_own_output() {
    let pts = qpoints(&[[0, 1], [2, 3], [5, 1], [1, 1], [4, 4]]);
    let o = MonomialOrder::grevlex(2);
    let g = vanishing_ideal(&pts, &o).unwrap();
    let again = buchberger(qq(), g.generators(), &o).unwrap();
    assert_eq!(g, again);
}

#[test]
fn sum_intersects_varieties() {
    let o = MonomialOrder::grevlex(2);
    let a = gb(&o, &[q(&o, &[(1, 1, [1, 0]), (-1, 1, [0, 0])])]);
    let b = gb(&o, &[q(&o, &[(1, 1, [0, 1]), (-2, 1, [0, 0])])]);
    let s = a.sum(&b).unwrap();
    assert_eq!(s.dimension(), 0);
    assert_eq!(s.render(&XY), vec!["x - 1", "y - 2"]);
}
