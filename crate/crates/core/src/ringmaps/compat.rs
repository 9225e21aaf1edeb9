//! (Sigma, Delta)-compatibility and sigma-rigidity, decided over the closures.

use super::closure::{
    delta_closure, sigma_closure, ClosureCapExceeded, DeltaClosure, SigmaClosure,
    DEFAULT_CLOSURE_CAP,
};
use super::MapFamily;
use crate::finring::{Elem, FiniteRing, SAMPLED_TUPLES};
use crate::report::{PropertyReport, Verdict, Witness};

pub const SIGMA_COMPATIBLE: &str = "sigma-compatible";
pub const DELTA_COMPATIBLE: &str = "delta-compatible";
pub const SIGMA_RIGID: &str = "sigma-rigid";

#[derive(Clone, Debug)]
pub struct Compatibility {
    /// `None` when the closure cap was hit.
    pub sigma_closure: Option<SigmaClosure>,
    pub delta_closure: Option<DeltaClosure>,
    pub sigma: PropertyReport,
    pub delta: PropertyReport,
}

impl Compatibility {
    pub fn is_compatible(&self) -> bool {
        self.sigma.holds() && self.delta.holds()
    }

    pub fn reports(&self) -> [&PropertyReport; 2] {
        [&self.sigma, &self.delta]
    }
}

/// Pairs `(a, b)` in lexicographic order, or a fixed-seed sample above the
/// ring's exhaustive cap.
fn pair_scan(ring: &FiniteRing) -> (Box<dyn Iterator<Item = (Elem, Elem)> + '_>, bool) {
    if ring.is_small() {
        let n = ring.size();
        (Box::new((0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))), true)
    } else {
        let mut s = ring.sample_stream(0);
        let it = (0..SAMPLED_TUPLES).map(move |_| (s.next().unwrap(), s.next().unwrap()));
        (Box::new(it), false)
    }
}

fn capped(property: &str, e: &ClosureCapExceeded) -> PropertyReport {
    PropertyReport::new(property, Verdict::UndecidedAtCap).with_note(e.to_string())
}

fn exhaustive_verdict(exhaustive: bool) -> Verdict {
    if exhaustive {
        Verdict::Holds
    } else {
        Verdict::HoldsAtBound
    }
}

pub fn check_compatibility(ring: &FiniteRing, family: &MapFamily) -> Compatibility {
    check_compatibility_with_cap(ring, family, DEFAULT_CLOSURE_CAP)
}

pub fn check_compatibility_with_cap(
    ring: &FiniteRing,
    family: &MapFamily,
    cap: usize,
) -> Compatibility {
    let sc = sigma_closure(ring, family, cap);
    let dc = delta_closure(family, cap);
    let sigma = match &sc {
        Ok(c) => sigma_report(ring, c),
        Err(e) => capped(SIGMA_COMPATIBLE, e),
    };
    let delta = match &dc {
        Ok(c) => delta_report(ring, c),
        Err(e) => capped(DELTA_COMPATIBLE, e),
    };
    Compatibility {
        sigma_closure: sc.ok(),
        delta_closure: dc.ok(),
        sigma,
        delta,
    }
}

/// `a sigma^alpha(b) = 0 <=> ab = 0` for every closure member.
pub fn sigma_report(ring: &FiniteRing, closure: &SigmaClosure) -> PropertyReport {
    let z = ring.zero();
    let (pairs, exhaustive) = pair_scan(ring);
    let mut work = 0u64;
    for (a, b) in pairs {
        work += 1;
        let ab_zero = ring.mul(a, b) == z;
        for (s, alpha) in closure.iter() {
            if (ring.mul(a, s[b]) == z) != ab_zero {
                let w = Witness::SigmaCompatibility {
                    alpha: alpha.clone(),
                    a,
                    b,
                };
                return PropertyReport::failing(SIGMA_COMPATIBLE, w, work);
            }
        }
    }
    PropertyReport::new(SIGMA_COMPATIBLE, exhaustive_verdict(exhaustive))
        .with_work(work)
        .with_note(format!("sigma closure size {}", closure.len()))
}

/// `ab = 0 => a d(b) = 0` for every delta-closure member `d`.
pub fn delta_report(ring: &FiniteRing, closure: &DeltaClosure) -> PropertyReport {
    let z = ring.zero();
    let (pairs, exhaustive) = pair_scan(ring);
    let mut work = 0u64;
    for (a, b) in pairs {
        work += 1;
        if ring.mul(a, b) != z {
            continue;
        }
        for (d, word) in closure.iter() {
            if ring.mul(a, d[b]) != z {
                let w = Witness::DeltaCompatibility {
                    word: word.clone(),
                    a,
                    b,
                };
                return PropertyReport::failing(DELTA_COMPATIBLE, w, work);
            }
        }
    }
    PropertyReport::new(DELTA_COMPATIBLE, exhaustive_verdict(exhaustive))
        .with_work(work)
        .with_note(format!("delta closure size {}", closure.len()))
}

/// `a sigma^alpha(a) = 0 => a = 0` for every closure member.
pub fn check_sigma_rigid(ring: &FiniteRing, family: &MapFamily) -> PropertyReport {
    match sigma_closure(ring, family, DEFAULT_CLOSURE_CAP) {
        Ok(c) => rigid_report(ring, &c),
        Err(e) => capped(SIGMA_RIGID, &e),
    }
}

pub fn rigid_report(ring: &FiniteRing, closure: &SigmaClosure) -> PropertyReport {
    let z = ring.zero();
    let mut work = 0u64;
    for a in ring.elements() {
        work += 1;
        if a == z {
            continue;
        }
        for (s, alpha) in closure.iter() {
            if ring.mul(a, s[a]) == z {
                let w = Witness::Rigidity {
                    alpha: alpha.clone(),
                    a,
                };
                return PropertyReport::failing(SIGMA_RIGID, w, work);
            }
        }
    }
    PropertyReport::new(SIGMA_RIGID, Verdict::Holds).with_work(work)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{check_ring_class, RingClass, RingDescriptor};
    use crate::ringmaps::RingMap;

    fn f2f2() -> FiniteRing {
        FiniteRing::build(&RingDescriptor::Product(vec![
            RingDescriptor::Modular(2),
            RingDescriptor::Modular(2),
        ]))
        .unwrap()
    }

    fn swap_family(r: &FiniteRing) -> MapFamily {
        MapFamily::new(
            r,
            vec![RingMap::coordinate_swap(r).unwrap()],
            vec![RingMap::zero_derivation(r, 0)],
        )
        .unwrap()
    }

    fn derivative_family(r: &FiniteRing) -> MapFamily {
        MapFamily::new(
            r,
            vec![RingMap::identity(r)],
            vec![RingMap::formal_derivative(r, 0).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn identity_families_are_compatible() {
        for d in [
            RingDescriptor::Modular(4),
            RingDescriptor::Modular(6),
            RingDescriptor::matrix(2, 2),
            RingDescriptor::dual(3),
        ] {
            let r = FiniteRing::build(&d).unwrap();
            let c = check_compatibility(&r, &MapFamily::constant(&r, 2));
            assert!(c.is_compatible(), "{d}");
            assert_eq!(c.sigma.verdict, Verdict::Holds);
            assert_eq!(c.sigma_closure.unwrap().len(), 1);
        }
    }

    #[test]
    fn swap_fails_sigma_compatibility() {
        let r = f2f2();
        let c = check_compatibility(&r, &swap_family(&r));
        assert_eq!(c.sigma.verdict, Verdict::Fails);
        let e1 = r.parse_element("(1,0)").unwrap();
        assert_eq!(
            c.sigma.witness,
            Some(Witness::SigmaCompatibility {
                alpha: vec![1],
                a: e1,
                b: e1
            })
        );
        // Oracle on bit pairs: (1,0)(1,0) = (1,0), (1,0)(0,1) = (0,0).
        assert_ne!(r.mul(e1, e1), r.zero());
        let s = r.parse_element("(0,1)").unwrap();
        assert_eq!(r.mul(e1, s), r.zero());
        assert!(c.delta.holds());
        assert_eq!(c.sigma_closure.unwrap().len(), 2);
    }

    #[test]
    fn derivative_fails_delta_compatibility() {
        let r = FiniteRing::build(&RingDescriptor::dual(2)).unwrap();
        let c = check_compatibility(&r, &derivative_family(&r));
        assert!(c.sigma.holds());
        assert_eq!(c.delta.verdict, Verdict::Fails);
        let t = r.parse_element("t").unwrap();
        assert_eq!(
            c.delta.witness,
            Some(Witness::DeltaCompatibility {
                word: vec![0],
                a: t,
                b: t
            })
        );
        assert_eq!(r.mul(t, t), r.zero());
        assert_eq!(r.mul(t, r.one()), t);
        assert!(c.delta_closure.unwrap().len() <= 2);
    }

    #[test]
    fn rigidity_examples() {
        let f2 = FiniteRing::modular(2);
        assert_eq!(
            check_sigma_rigid(&f2, &MapFamily::constant(&f2, 1)).verdict,
            Verdict::Holds
        );
        let z4 = FiniteRing::modular(4);
        let rep = check_sigma_rigid(&z4, &MapFamily::constant(&z4, 1));
        assert_eq!(
            rep.witness,
            Some(Witness::Rigidity {
                alpha: vec![0],
                a: 2
            })
        );
        let r = f2f2();
        let rep = check_sigma_rigid(&r, &swap_family(&r));
        assert_eq!(
            rep.witness,
            Some(Witness::Rigidity {
                alpha: vec![1],
                a: r.parse_element("(1,0)").unwrap()
            })
        );
    }

    #[test]
    fn cap_downgrades_to_undecided() {
        let r = f2f2();
        let c = check_compatibility_with_cap(&r, &swap_family(&r), 1);
        assert_eq!(c.sigma.verdict, Verdict::UndecidedAtCap);
        assert!(!c.is_compatible());
    }

    /// Library of small (ring, family) inputs, compatible or not.
    fn catalog() -> Vec<(FiniteRing, MapFamily)> {
        let mut out = Vec::new();
        for d in [
            RingDescriptor::Modular(2),
            RingDescriptor::Modular(4),
            RingDescriptor::Modular(8),
            RingDescriptor::Modular(12),
            RingDescriptor::dual(2),
            RingDescriptor::dual(3),
            RingDescriptor::matrix(2, 2),
            RingDescriptor::Product(vec![RingDescriptor::Modular(2), RingDescriptor::Modular(2)]),
            RingDescriptor::Product(vec![RingDescriptor::Modular(4), RingDescriptor::Modular(4)]),
        ] {
            let r = FiniteRing::build(&d).unwrap();
            out.push((r.clone(), MapFamily::constant(&r, 2)));
            if let Ok(s) = RingMap::coordinate_swap(&r) {
                let f = MapFamily::new(&r, vec![s], vec![RingMap::zero_derivation(&r, 0)]).unwrap();
                out.push((r.clone(), f));
            }
            if let Ok(d) = RingMap::formal_derivative(&r, 0) {
                let f = MapFamily::new(&r, vec![RingMap::identity(&r)], vec![d]).unwrap();
                out.push((r.clone(), f));
            }
            if r.matrix_shape().is_some() {
                let u = r.parse_element("[[1,1],[0,1]]").unwrap();
                let s = RingMap::conjugation(&r, u).unwrap();
                let e12 = r.parse_element("[[0,1],[0,0]]").unwrap();
                let d = RingMap::inner_derivation(&r, e12, &s, 0);
                out.push((r.clone(), MapFamily::new(&r, vec![s], vec![d]).unwrap()));
            }
        }
        out
    }

    #[test]
    fn compatible_ring_consequences() {
        let mut checked = 0;
        for (r, fam) in catalog() {
            let c = check_compatibility(&r, &fam);
            if !c.is_compatible() {
                continue;
            }
            checked += 1;
            let (sc, dc) = (c.sigma_closure.unwrap(), c.delta_closure.unwrap());
            let z = r.zero();
            for a in r.elements() {
                for b in r.elements() {
                    if r.mul(a, b) != z {
                        continue;
                    }
                    for s in sc.tables() {
                        assert_eq!(r.mul(a, s[b]), z);
                        assert_eq!(r.mul(s[a], b), z);
                        for d in dc.tables() {
                            assert_eq!(r.mul(s[a], d[b]), z);
                            assert_eq!(r.mul(d[a], s[b]), z);
                        }
                    }
                }
            }
        }
        assert!(checked >= 5);
    }

    #[test]
    fn rigid_implies_reduced_and_compatible() {
        for (r, fam) in catalog() {
            if check_sigma_rigid(&r, &fam).holds() {
                assert!(check_ring_class(&r, RingClass::Reduced).holds);
                assert!(check_compatibility(&r, &fam).is_compatible());
            }
        }
    }

    #[test]
    fn witnesses_reverify() {
        for (r, fam) in catalog() {
            let c = check_compatibility(&r, &fam);
            let z = r.zero();
            match c.sigma.witness {
                Some(Witness::SigmaCompatibility { alpha, a, b }) => {
                    let sb = fam.apply_sigma_power(&alpha, b);
                    assert_ne!(r.mul(a, sb) == z, r.mul(a, b) == z);
                }
                None => assert!(c.sigma.holds()),
                other => panic!("unexpected witness {other:?}"),
            }
            match c.delta.witness {
                Some(Witness::DeltaCompatibility { word, a, b }) => {
                    assert_eq!(r.mul(a, b), z);
                    assert_ne!(r.mul(a, fam.apply_delta_word(&word, b)), z);
                }
                None => assert!(c.delta.holds()),
                other => panic!("unexpected witness {other:?}"),
            }
        }
    }
}
