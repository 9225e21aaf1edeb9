use proptest::prelude::*;
use skewpbw::finring::RingDescriptor;
use skewpbw::nilarmendariz::{
    check_armendariz, check_armendariz_capped, is_nilpotent_poly_oracle, reverify_witness,
    verify_implication_suite, ArmendarizVariant, CoefficientScope, ImplicationStatus, NilContext,
    SearchBound,
};
use skewpbw::pbw::{Extension, Monomial};
use skewpbw::presets::{build_preset, catalog, PresetParams};
use skewpbw::report::Verdict;

fn constant(desc: RingDescriptor, n: usize) -> Extension {
    let params = PresetParams {
        ring: Some(desc),
        n: Some(n),
        ..Default::default()
    };
    build_preset("constant", &params).unwrap().ext
}

fn hypothesis_rings() -> Vec<Extension> {
    vec![
        constant(RingDescriptor::Modular(8), 2),
        constant(RingDescriptor::Modular(12), 1),
        constant(RingDescriptor::dual(3), 2),
        constant(
            RingDescriptor::Product(vec![RingDescriptor::Modular(4), RingDescriptor::Modular(2)]),
            1,
        ),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Oracle and coefficient criterion agree, and oracle-nilpotent
    /// polynomials have every coefficient in nil(R).
    #[test]
    fn oracle_agrees_with_criterion(k in 0usize..4, raw in prop::collection::vec((prop::collection::vec(0u32..3, 2), any::<usize>()), 0..4)) {
        let ext = &hypothesis_rings()[k];
        let ctx = NilContext::new(ext);
        prop_assert!(ctx.hypotheses_hold());
        let n = ext.n();
        let size = ext.ring().size();
        let f = ext.poly(raw.iter().map(|(e, c)| (Monomial::new(e[..n].to_vec()), c % size)));
        let oracle = is_nilpotent_poly_oracle(ext, &f).unwrap();
        let crit = ctx.nilpotent_by_criterion(&f).unwrap();
        prop_assert_eq!(oracle.nilpotent, crit.nilpotent);
        if oracle.nilpotent {
            prop_assert!(f.coefficients().all(|a| ext.ring().is_nilpotent(a)));
        }
    }

    /// Sampled searches are reproducible from their seed.
    #[test]
    fn sampled_search_is_deterministic(seed in any::<u64>()) {
        let ext = constant(RingDescriptor::Modular(18), 1);
        let ctx = NilContext::new(&ext);
        let bound = SearchBound::deg1(&ext).with_seed(seed);
        let sampled = matches!(bound.scope, CoefficientScope::Sampled { .. });
        prop_assert!(sampled);
        let a = check_armendariz(&ctx, ArmendarizVariant::SkewPi, &bound).unwrap();
        let b = check_armendariz(&ctx, ArmendarizVariant::SkewPi, &bound).unwrap();
        prop_assert_eq!(a, b);
    }
}

fn failing_extensions() -> Vec<Extension> {
    vec![
        build_preset("swap_ore", &PresetParams::default()).unwrap().ext,
        build_preset("differential_ore", &PresetParams::default()).unwrap().ext,
        constant(RingDescriptor::matrix(2, 2), 1),
    ]
}

#[test]
fn failures_persist_on_larger_supports() {
    for ext in failing_extensions().into_iter().take(2) {
        let ctx = NilContext::new(&ext);
        for v in ArmendarizVariant::ALL {
            let small = check_armendariz(&ctx, v, &SearchBound::deg1(&ext)).unwrap();
            if small.verdict != Verdict::Fails {
                continue;
            }
            let big = check_armendariz(&ctx, v, &SearchBound::deg2(&ext)).unwrap();
            assert_eq!(big.verdict, Verdict::Fails, "{v} on {ext:?}");
            // The small witness also lies in the larger search space.
            let w = small.witness.unwrap();
            assert!(reverify_witness(&ext, &w, Some(v)));
        }
    }
}

#[test]
fn every_witness_reverifies() {
    for ext in failing_extensions() {
        let ctx = NilContext::new(&ext);
        for v in ArmendarizVariant::ALL {
            let rep = check_armendariz(&ctx, v, &SearchBound::deg1(&ext)).unwrap();
            if let Some(w) = &rep.witness {
                assert!(reverify_witness(&ext, w, Some(v)), "{v}");
            }
            for r in ctx.compatibility().reports() {
                if let Some(w) = &r.witness {
                    assert!(reverify_witness(&ext, w, None));
                }
            }
        }
    }
}

#[test]
fn capped_search_never_reports_a_false_hold() {
    let ext = constant(RingDescriptor::matrix(2, 2), 1);
    let ctx = NilContext::new(&ext);
    let full = check_armendariz(&ctx, ArmendarizVariant::SkewPi, &SearchBound::deg1(&ext)).unwrap();
    let cap = full.work_count - 1;
    let capped =
        check_armendariz_capped(&ctx, ArmendarizVariant::SkewPi, &SearchBound::deg1(&ext), Some(cap))
            .unwrap();
    assert_eq!(capped.verdict, Verdict::UndecidedAtCap);
    let reached =
        check_armendariz_capped(&ctx, ArmendarizVariant::SkewPi, &SearchBound::deg1(&ext), Some(cap + 1))
            .unwrap();
    assert_eq!(reached, full);
}

/// The proved implications are never violated anywhere in the catalog.
#[test]
fn no_implication_violations_over_the_catalog() {
    for p in catalog() {
        let bound = SearchBound::deg1(&p.ext);
        if bound.pair_count(p.ext.ring().size()) > 100_000 {
            continue;
        }
        let ctx = NilContext::new(&p.ext);
        let imps = verify_implication_suite(&ctx, &bound).unwrap();
        for i in imps {
            assert_ne!(i.status, ImplicationStatus::Violation, "{} on {}", i.name, p.label);
        }
    }
}
