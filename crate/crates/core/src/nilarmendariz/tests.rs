use super::*;
use crate::finring::{FiniteRing, RingDescriptor};
use crate::report::{Verdict, Witness};
use crate::ringmaps::{MapFamily, RingMap};

fn constant(d: RingDescriptor, n: usize) -> Extension {
    let r = FiniteRing::build(&d).unwrap();
    Extension::builder(&r, n).build().unwrap()
}

fn z4(n: usize) -> Extension {
    constant(RingDescriptor::Modular(4), n)
}

fn m2f2() -> Extension {
    constant(RingDescriptor::matrix(2, 2), 1)
}

#[test]
fn oracle_examples() {
    let e = z4(1);
    let v = is_nilpotent_poly_oracle(&e, &SkewPoly::zero()).unwrap();
    assert!(v.nilpotent);
    assert_eq!(v.exponent_used, 1);
    let f = e.add(&e.constant(2), &e.term(2, &[1]));
    let v = is_nilpotent_poly_oracle(&e, &f).unwrap();
    assert!(v.nilpotent);
    assert_eq!(v.exponent_used, 2);
    let v = is_nilpotent_poly_oracle(&e, &e.one()).unwrap();
    assert!(!v.nilpotent);
    // One term, k = 2: bound 1 * 2 + 1.
    assert_eq!(v.exponent_used, 3);
}

#[test]
fn criterion_examples() {
    let e = z4(2);
    let ctx = NilContext::new(&e);
    assert!(ctx.hypotheses_hold());
    let f = e.add(&e.constant(2), &e.term(2, &[1, 1]));
    assert!(ctx.nilpotent_by_criterion(&f).unwrap().nilpotent);
    assert!(ctx.nilpotent(&f).unwrap().nilpotent);
    assert_eq!(ctx.nilpotent(&f).unwrap().method, NilMethod::BothAgree);
    let g = e.add(&e.constant(1), &e.term(2, &[1, 0]));
    assert!(!ctx.nilpotent_by_criterion(&g).unwrap().nilpotent);
    assert!(ctx.nilpotent_by_criterion(&SkewPoly::zero()).unwrap().nilpotent);
}

#[test]
fn criterion_refuses_without_hypotheses() {
    let e = m2f2();
    let err = is_nilpotent_poly_criterion(&e, &e.one()).unwrap_err();
    assert!(matches!(err, NilError::HypothesisNotVerified { ref hypothesis, .. } if hypothesis == "reversible"));
}

#[test]
fn z4_is_skew_pi_armendariz_at_deg1() {
    let e = z4(1);
    let ctx = NilContext::new(&e);
    let rep = check_armendariz(&ctx, ArmendarizVariant::SkewPi, &SearchBound::deg1(&e)).unwrap();
    assert_eq!(rep.verdict, Verdict::HoldsAtBound);
    assert_eq!(rep.work_count, 256);
}

#[test]
fn m2f2_skew_pi_counterexample() {
    let e = m2f2();
    let r = e.ring();
    let ctx = NilContext::new(&e);
    let rep = check_armendariz(&ctx, ArmendarizVariant::SkewPi, &SearchBound::deg1(&e)).unwrap();
    assert_eq!(rep.verdict, Verdict::Fails);
    let w = rep.witness.clone().unwrap();
    let el = |s: &str| r.parse_element(s).unwrap();
    let (e11, e12, e21) = (el("[[1,0],[0,0]]"), el("[[0,1],[0,0]]"), el("[[0,0],[1,0]]"));
    let f = e.add(&e.constant(e11), &e.term(e12, &[1]));
    let g = e.add(&e.constant(e21), &e.term(e11, &[1]));
    match &w {
        Witness::Armendariz {
            f: wf,
            g: wg,
            pair,
            offending,
        } => {
            assert_eq!(wf, &f);
            assert_eq!(wg, &g);
            assert_eq!(pair.left, (Monomial::one(1), e11));
            assert_eq!(pair.right, (Monomial::var(1, 0), e11));
            assert_eq!(offending, &e.constant(e11));
        }
        other => panic!("unexpected witness {other:?}"),
    }
    assert!(e.mul(&f, &g).unwrap().is_zero());
    assert!(reverify_witness(&e, &w, Some(ArmendarizVariant::SkewPi)));
}

#[test]
fn field_satisfies_every_variant() {
    let e = constant(RingDescriptor::Modular(2), 1);
    let ctx = NilContext::new(&e);
    for v in ArmendarizVariant::ALL {
        let rep = check_armendariz(&ctx, v, &SearchBound::deg2(&e)).unwrap();
        assert_eq!(rep.verdict, Verdict::HoldsAtBound, "{v}");
    }
}

#[test]
fn pair_cap_gives_undecided() {
    let e = z4(1);
    let ctx = NilContext::new(&e);
    let rep =
        check_armendariz_capped(&ctx, ArmendarizVariant::SkewPi, &SearchBound::deg1(&e), Some(10))
            .unwrap();
    assert_eq!(rep.verdict, Verdict::UndecidedAtCap);
    assert_eq!(rep.work_count, 10);
}

#[test]
fn search_bounds() {
    let e = z4(2);
    let b = SearchBound::deg1(&e);
    assert_eq!(b.support().len(), 3);
    assert!(b.support()[0].is_one());
    assert_eq!(b.pair_count(4), 64 * 64);
    assert_eq!(SearchBound::deg2(&e).support().len(), 6);
    let big = constant(RingDescriptor::Modular(17), 1);
    assert!(matches!(
        SearchBound::deg1(&big).scope,
        CoefficientScope::Sampled { pairs: 4096, .. }
    ));
}

#[test]
fn lemma_examples() {
    let ctx = NilContext::new(&z4(1));
    assert_eq!(verify_lemma_nil_stability(&ctx).unwrap().verdict, Verdict::Holds);
    assert_eq!(verify_lemma_nil_pullback(&ctx).unwrap().verdict, Verdict::Holds);

    let r = FiniteRing::build(&RingDescriptor::dual(2)).unwrap();
    let fam = MapFamily::new(
        &r,
        vec![RingMap::identity(&r)],
        vec![RingMap::formal_derivative(&r, 0).unwrap()],
    )
    .unwrap();
    let e = Extension::builder(&r, 1).family(fam).build().unwrap();
    let ctx = NilContext::new(&e);
    assert!(matches!(
        verify_lemma_nil_stability(&ctx),
        Err(NilError::HypothesisNotVerified { .. })
    ));

    let e = constant(
        RingDescriptor::Product(vec![RingDescriptor::Modular(2), RingDescriptor::Modular(2)]),
        1,
    );
    let ctx = NilContext::new(&e);
    assert!(verify_lemma_nil_stability(&ctx).unwrap().holds());
}

fn status(imps: &[Implication], name: &str) -> ImplicationStatus {
    imps.iter().find(|i| i.name == name).unwrap().status
}

#[test]
fn suite_examples() {
    let e = z4(1);
    let ctx = NilContext::new(&e);
    let imps = verify_implication_suite(&ctx, &SearchBound::deg1(&e)).unwrap();
    assert_eq!(status(&imps, "theorem"), ImplicationStatus::Confirmed);
    assert!(imps.iter().all(|i| i.status != ImplicationStatus::Violation));

    let e = m2f2();
    let ctx = NilContext::new(&e);
    let imps = verify_implication_suite(&ctx, &SearchBound::deg1(&e)).unwrap();
    for name in ["theorem", "proposition-sigma-delta", "proposition-sigma", "corollary", "conjecture"] {
        assert_eq!(status(&imps, name), ImplicationStatus::Vacuous, "{name}");
    }

    let e = constant(RingDescriptor::Modular(2), 1);
    let ctx = NilContext::new(&e);
    let imps = verify_implication_suite(&ctx, &SearchBound::deg1(&e)).unwrap();
    assert_eq!(status(&imps, "corollary"), ImplicationStatus::Confirmed);
    assert_eq!(status(&imps, "conjecture"), ImplicationStatus::SearchOnly);
}

#[test]
fn decode_is_big_endian_in_support_order() {
    assert_eq!(decode_coeffs(18, 16, 2), vec![1, 2]);
    assert_eq!(decode_coeffs(0, 4, 3), vec![0, 0, 0]);
    assert_eq!(decode_coeffs(63, 4, 3), vec![3, 3, 3]);
}
