use super::*;
use crate::finring::RingDescriptor;
use crate::ringmaps::RingMap;

fn constant(ring: &FiniteRing, n: usize) -> Extension {
    Extension::builder(ring, n).build().unwrap()
}

fn swap_ore() -> Extension {
    let r = FiniteRing::build(&RingDescriptor::Product(vec![
        RingDescriptor::Modular(2),
        RingDescriptor::Modular(2),
    ]))
    .unwrap();
    let fam = MapFamily::new(
        &r,
        vec![RingMap::coordinate_swap(&r).unwrap()],
        vec![RingMap::zero_derivation(&r, 0)],
    )
    .unwrap();
    Extension::builder(&r, 1).family(fam).build().unwrap()
}

fn differential_ore() -> Extension {
    let r = FiniteRing::build(&RingDescriptor::dual(2)).unwrap();
    let fam = MapFamily::new(
        &r,
        vec![RingMap::identity(&r)],
        vec![RingMap::formal_derivative(&r, 0).unwrap()],
    )
    .unwrap();
    Extension::builder(&r, 1).family(fam).build().unwrap()
}

#[test]
fn constant_extension_over_z6() {
    let r = FiniteRing::modular(6);
    let e = constant(&r, 2);
    let f = e.term(2, &[1, 0]);
    let g = e.term(3, &[0, 1]);
    assert!(e.mul(&f, &g).unwrap().is_zero());
    // x2 * x1 commutes to x1 x2.
    assert_eq!(e.mul(&e.var(1), &e.var(0)).unwrap(), e.term(1, &[1, 1]));
    assert_eq!(e.x_times_r(0, 5), e.term(5, &[1, 0]));
}

#[test]
fn non_unit_constant_rejected() {
    let r = FiniteRing::modular(4);
    let err = Extension::builder(&r, 2)
        .relation(0, 1, 2, SkewPoly::zero())
        .build()
        .unwrap_err();
    assert!(matches!(err, PbwError::NonUnitConstant { i: 0, j: 1, .. }));
}

#[test]
fn non_central_constant_rejected() {
    let r = FiniteRing::build(&RingDescriptor::matrix(2, 2)).unwrap();
    let u = r.parse_element("[[1,1],[0,1]]").unwrap();
    let err = Extension::builder(&r, 2)
        .relation(0, 1, u, SkewPoly::zero())
        .build()
        .unwrap_err();
    assert!(matches!(err, PbwError::CentralityViolation { .. }));
}

#[test]
fn swap_ore_products() {
    let e = swap_ore();
    let r = e.ring();
    let a = r.parse_element("(1,0)").unwrap();
    let b = r.parse_element("(0,1)").unwrap();
    assert_eq!(e.x_times_r(0, a), e.term(b, &[1]));
    assert_eq!(e.x_alpha_times_r(&[2], a), e.term(a, &[2]));
    assert_eq!(e.mul(&e.term(r.one(), &[2]), &e.constant(a)).unwrap(), e.term(a, &[2]));
}

#[test]
fn differential_ore_products() {
    let e = differential_ore();
    let r = e.ring();
    let t = r.parse_element("t").unwrap();
    let expect = e.add(&e.term(t, &[1]), &e.one());
    assert_eq!(e.x_times_r(0, t), expect);
    // x^2 t = t x^2 + 2x and 2 = 0.
    assert_eq!(e.x_alpha_times_r(&[2], t), e.term(t, &[2]));
    assert_eq!(e.mul(&e.term(r.one(), &[2]), &e.constant(t)).unwrap(), e.term(t, &[2]));
    assert_eq!(e.render(&expect), "1 + t*x1");
}

#[test]
fn inner_derivation_ore_over_m2f2() {
    // sigma = id, delta = [e12, -]: x r = r x + (e12 r - r e12).
    let r = FiniteRing::build(&RingDescriptor::matrix(2, 2)).unwrap();
    let e12 = r.parse_element("[[0,1],[0,0]]").unwrap();
    let e11 = r.parse_element("[[1,0],[0,0]]").unwrap();
    let id = RingMap::identity(&r);
    let d = RingMap::inner_derivation(&r, e12, &id, 0);
    let fam = MapFamily::new(&r, vec![id], vec![d]).unwrap();
    let e = Extension::builder(&r, 1).family(fam).build().unwrap();
    // e12 e11 - e11 e12 = -e12 = e12 over F_2.
    assert_eq!(e.x_times_r(0, e11), e.add(&e.term(e11, &[1]), &e.constant(e12)));
    for k in 0..4u32 {
        for a in r.elements() {
            let lhs = e.x_alpha_times_r(&[k], a);
            let rhs = e.mul(&e.term(r.one(), &[k]), &e.constant(a)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn leading_data() {
    let r = FiniteRing::modular(6);
    let e = constant(&r, 2);
    let z = e.leading(&SkewPoly::zero());
    assert_eq!((z.lm, z.lc, z.deg), (None, 0, 0));
    let f = e.add(&e.term(2, &[1, 0]), &e.term(3, &[0, 1]));
    let l = e.leading(&f);
    assert_eq!(l.lm, Some(Monomial::new(vec![0, 1])));
    assert_eq!(l.lc, 3);
    assert_eq!(l.deg, 1);
}

#[test]
fn powers() {
    let r = FiniteRing::modular(4);
    let e = constant(&r, 1);
    assert_eq!(e.pow(&e.var(0), 3).unwrap(), e.term(1, &[3]));
    let f = e.add(&e.constant(2), &e.term(2, &[1]));
    assert!(e.pow(&f, 2).unwrap().is_zero());
    assert_eq!(e.pow(&f, 0).unwrap(), e.one());
}

#[test]
fn render_wraps_compound_coefficients() {
    let r = FiniteRing::build(&RingDescriptor::dual(3)).unwrap();
    let e = constant(&r, 2);
    let a = r.parse_element("1+t").unwrap();
    let f = e.add(&e.constant(a), &e.term(r.one(), &[2, 1]));
    assert_eq!(e.render(&f), "(1+t) + x1^2*x2");
    assert_eq!(e.render(&SkewPoly::zero()), "0");
}

#[test]
fn bad_shapes() {
    let r = FiniteRing::modular(2);
    assert!(matches!(
        Extension::builder(&r, 2).relation(1, 0, 1, SkewPoly::zero()).build(),
        Err(PbwError::Shape(_))
    ));
    let e = constant(&r, 2);
    let tail = e.term(1, &[1, 1]);
    assert!(matches!(
        Extension::builder(&r, 2).relation(0, 1, 1, tail).build(),
        Err(PbwError::Shape(_))
    ));
}

#[test]
fn inconsistent_three_variable_presentation() {
    // x2 x1 = x1 x2 + x3 with x3 central is fine; adding x3 x2 = x2 x3 + x2
    // breaks the overlap x3 x2 x1 (the Jacobi identity fails).
    let r = FiniteRing::modular(3);
    let n = 3;
    let b = || Extension::builder(&r, n);
    let x3 = SkewPoly::term(&r, Monomial::var(n, 2), 1);
    let x2 = SkewPoly::term(&r, Monomial::var(n, 1), 1);
    b().relation(0, 1, 1, x3.clone()).build().unwrap();
    let err = b()
        .relation(0, 1, 1, x3)
        .relation(1, 2, 1, x2)
        .build()
        .unwrap_err();
    assert!(matches!(
        err,
        PbwError::InconsistentPresentation {
            overlap: Overlap::Variables { i: 0, j: 1, k: 2 },
            ..
        }
    ));
}

#[test]
fn enveloping_algebra_of_sl2_is_consistent() {
    // e < f < h: f e = e f - h, h e = e h + 2e, h f = f h - 2f.
    let r = FiniteRing::modular(5);
    let n = 3;
    let v = |i| SkewPoly::term(&r, Monomial::var(n, i), 1);
    let e = Extension::builder(&r, n)
        .relation(0, 1, 1, v(2).neg(&r))
        .relation(0, 2, 1, v(0).scale_left(&r, 2))
        .relation(1, 2, 1, v(1).scale_left(&r, 3))
        .build()
        .unwrap();
    let rep = e.validate().unwrap();
    assert!(rep.strict_pbw);
    assert!(rep.leading_compatible);
    assert_eq!(rep.triples_checked, 1);
}

#[test]
fn budget_exceeded_is_reported() {
    let r = FiniteRing::modular(5);
    let n = 2;
    let tail = SkewPoly::term(&r, Monomial::var(n, 0), 1);
    let e = Extension::builder(&r, n)
        .relation(0, 1, 1, tail)
        .budget(10)
        .build_unchecked()
        .unwrap();
    let f = e.term(1, &[0, 6]);
    let g = e.term(1, &[6, 0]);
    assert!(matches!(e.mul(&f, &g), Err(PbwError::RewriteBudgetExceeded { budget: 10 })));
}
