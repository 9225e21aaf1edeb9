//! Ring-class predicates: reduced, reversible, semicommutative, NI.

use std::fmt;

use serde::Serialize;

use super::{Elem, FiniteRing, SAMPLED_TUPLES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingClass {
    Reduced,
    Reversible,
    Semicommutative,
    #[serde(rename = "NI")]
    Ni,
}

impl RingClass {
    pub const ALL: [RingClass; 4] = [
        RingClass::Reduced,
        RingClass::Reversible,
        RingClass::Semicommutative,
        RingClass::Ni,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RingClass::Reduced => "reduced",
            RingClass::Reversible => "reversible",
            RingClass::Semicommutative => "semicommutative",
            RingClass::Ni => "NI",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "reduced" => Some(RingClass::Reduced),
            "reversible" => Some(RingClass::Reversible),
            "semicommutative" => Some(RingClass::Semicommutative),
            "ni" => Some(RingClass::Ni),
            _ => None,
        }
    }
}

impl fmt::Display for RingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Concrete violation of a ring-class condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ClassWitness {
    /// `a != 0` is nilpotent.
    NonzeroNilpotent { a: Elem },
    /// `ab = 0` but `ba != 0`.
    NotReversible { a: Elem, b: Elem },
    /// `ab = 0` but `arb != 0`.
    NotSemicommutative { a: Elem, r: Elem, b: Elem },
    /// `a, b` nilpotent, `a + b` not.
    NilNotAdditive { a: Elem, b: Elem },
    /// `a` nilpotent, `ra` (or `ar` when `right`) not.
    NilNotAbsorbing { r: Elem, a: Elem, right: bool },
}

impl ClassWitness {
    /// Recomputes the defining condition; `true` when the violation reproduces.
    pub fn reverify(&self, ring: &FiniteRing) -> bool {
        let z = ring.zero();
        match *self {
            ClassWitness::NonzeroNilpotent { a } => a != z && ring.is_nilpotent(a),
            ClassWitness::NotReversible { a, b } => ring.mul(a, b) == z && ring.mul(b, a) != z,
            ClassWitness::NotSemicommutative { a, r, b } => {
                ring.mul(a, b) == z && ring.mul(ring.mul(a, r), b) != z
            }
            ClassWitness::NilNotAdditive { a, b } => {
                ring.is_nilpotent(a) && ring.is_nilpotent(b) && !ring.is_nilpotent(ring.add(a, b))
            }
            ClassWitness::NilNotAbsorbing { r, a, right } => {
                let p = if right { ring.mul(a, r) } else { ring.mul(r, a) };
                ring.is_nilpotent(a) && !ring.is_nilpotent(p)
            }
        }
    }

    pub fn describe(&self, ring: &FiniteRing) -> String {
        let d = |e: Elem| ring.display(e);
        match *self {
            ClassWitness::NonzeroNilpotent { a } => format!("a = {} is nonzero and nilpotent", d(a)),
            ClassWitness::NotReversible { a, b } => format!(
                "a = {}, b = {}: ab = 0 but ba = {}",
                d(a),
                d(b),
                d(ring.mul(b, a))
            ),
            ClassWitness::NotSemicommutative { a, r, b } => format!(
                "a = {}, r = {}, b = {}: ab = 0 but arb = {}",
                d(a),
                d(r),
                d(b),
                d(ring.mul(ring.mul(a, r), b))
            ),
            ClassWitness::NilNotAdditive { a, b } => format!(
                "a = {}, b = {} are nilpotent but a + b = {} is not",
                d(a),
                d(b),
                d(ring.add(a, b))
            ),
            ClassWitness::NilNotAbsorbing { r, a, right } => {
                let (p, side) = if right {
                    (ring.mul(a, r), "ar")
                } else {
                    (ring.mul(r, a), "ra")
                };
                format!(
                    "a = {} is nilpotent but {side} = {} (r = {}) is not",
                    d(a),
                    d(p),
                    d(r)
                )
            }
        }
    }
}

/// How much of the quantified space a verdict covers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum Coverage {
    Exhaustive,
    Sampled { seed: u64, samples: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingClassVerdict {
    pub class: RingClass,
    pub holds: bool,
    pub witness: Option<ClassWitness>,
    pub coverage: Coverage,
}

impl RingClassVerdict {
    fn from_witness(class: RingClass, witness: Option<ClassWitness>, coverage: Coverage) -> Self {
        RingClassVerdict {
            class,
            holds: witness.is_none(),
            witness,
            coverage,
        }
    }
}

/// Decides `class` for `ring`: exhaustively up to the ring's cap, on a
/// fixed-seed sample of tuples above it.
pub fn check_ring_class(ring: &FiniteRing, class: RingClass) -> RingClassVerdict {
    let exhaustive = ring.is_small();
    let coverage = if exhaustive {
        Coverage::Exhaustive
    } else {
        Coverage::Sampled {
            seed: 0,
            samples: SAMPLED_TUPLES,
        }
    };
    let witness = match class {
        RingClass::Reduced => find_nonzero_nilpotent(ring),
        RingClass::Reversible => {
            if exhaustive {
                find_reversible(ring, pairs(ring))
            } else {
                let mut s = ring.sample_stream(0);
                let it = (0..SAMPLED_TUPLES).map(|_| (s.next().unwrap(), s.next().unwrap()));
                find_reversible(ring, it)
            }
        }
        RingClass::Semicommutative => {
            if exhaustive {
                let n = ring.size();
                let triples = (0..n).flat_map(move |a| {
                    (0..n).flat_map(move |b| (0..n).map(move |r| (a, r, b)))
                });
                find_semicommutative(ring, triples)
            } else {
                let mut s = ring.sample_stream(0);
                let it = (0..SAMPLED_TUPLES)
                    .map(|_| (s.next().unwrap(), s.next().unwrap(), s.next().unwrap()));
                find_semicommutative(ring, it)
            }
        }
        RingClass::Ni => find_ni(ring),
    };
    // Reduced and NI scans run over the full nil set even above the cap.
    let coverage = match class {
        RingClass::Reduced | RingClass::Ni => Coverage::Exhaustive,
        _ => coverage,
    };
    RingClassVerdict::from_witness(class, witness, coverage)
}

fn pairs(ring: &FiniteRing) -> impl Iterator<Item = (Elem, Elem)> {
    let n = ring.size();
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn find_nonzero_nilpotent(ring: &FiniteRing) -> Option<ClassWitness> {
    ring.nil_set()
        .into_iter()
        .find(|&a| a != ring.zero())
        .map(|a| ClassWitness::NonzeroNilpotent { a })
}

fn find_reversible(
    ring: &FiniteRing,
    mut it: impl Iterator<Item = (Elem, Elem)>,
) -> Option<ClassWitness> {
    let z = ring.zero();
    it.find(|&(a, b)| ring.mul(a, b) == z && ring.mul(b, a) != z)
        .map(|(a, b)| ClassWitness::NotReversible { a, b })
}

fn find_semicommutative(
    ring: &FiniteRing,
    mut it: impl Iterator<Item = (Elem, Elem, Elem)>,
) -> Option<ClassWitness> {
    let z = ring.zero();
    it.find(|&(a, r, b)| ring.mul(a, b) == z && ring.mul(ring.mul(a, r), b) != z)
        .map(|(a, r, b)| ClassWitness::NotSemicommutative { a, r, b })
}

fn find_ni(ring: &FiniteRing) -> Option<ClassWitness> {
    let nil = ring.nil_set();
    for &a in &nil {
        for &b in &nil {
            if !ring.in_nil(ring.add(a, b)) {
                return Some(ClassWitness::NilNotAdditive { a, b });
            }
        }
    }
    for &a in &nil {
        for r in ring.elements() {
            if !ring.in_nil(ring.mul(r, a)) {
                return Some(ClassWitness::NilNotAbsorbing { r, a, right: false });
            }
            if !ring.in_nil(ring.mul(a, r)) {
                return Some(ClassWitness::NilNotAbsorbing { r, a, right: true });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::RingDescriptor;

    fn m2f2() -> FiniteRing {
        FiniteRing::build(&RingDescriptor::matrix(2, 2)).unwrap()
    }

    #[test]
    fn commutative_ring_is_reversible() {
        let v = check_ring_class(&FiniteRing::modular(4), RingClass::Reversible);
        assert!(v.holds);
        assert!(v.witness.is_none());
        assert!(!check_ring_class(&FiniteRing::modular(4), RingClass::Reduced).holds);
    }

    #[test]
    fn matrix_ring_is_not_reversible() {
        let r = m2f2();
        let v = check_ring_class(&r, RingClass::Reversible);
        assert!(!v.holds);
        let w = v.witness.unwrap();
        assert!(w.reverify(&r));
        // Lowest index pair: a = e11, b = e21.
        let e11 = r.parse_element("[[1,0],[0,0]]").unwrap();
        let e21 = r.parse_element("[[0,0],[1,0]]").unwrap();
        assert_eq!(w, ClassWitness::NotReversible { a: e11, b: e21 });
        // The pair (e12, e11) violates reversibility as well.
        let e12 = r.parse_element("[[0,1],[0,0]]").unwrap();
        assert!(ClassWitness::NotReversible { a: e12, b: e11 }.reverify(&r));
    }

    #[test]
    fn matrix_ring_is_not_ni() {
        let r = m2f2();
        let v = check_ring_class(&r, RingClass::Ni);
        assert!(!v.holds);
        let e12 = r.parse_element("[[0,1],[0,0]]").unwrap();
        let e21 = r.parse_element("[[0,0],[1,0]]").unwrap();
        assert_eq!(v.witness, Some(ClassWitness::NilNotAdditive { a: e12, b: e21 }));
        // (e12 + e21)^2 is the identity.
        let s = r.add(e12, e21);
        assert_eq!(r.mul(s, s), r.one());
    }

    #[test]
    fn sampled_coverage_above_cap() {
        let r = FiniteRing::build_with_limits(&RingDescriptor::matrix(3, 2), 64, 1 << 12).unwrap();
        let v = check_ring_class(&r, RingClass::Reversible);
        assert!(matches!(v.coverage, Coverage::Sampled { .. }));
        if let Some(w) = &v.witness {
            assert!(w.reverify(&r));
        }
    }
}
