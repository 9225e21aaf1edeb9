//! Tabulated ring endomorphisms and sigma-derivations.
//!
//! A skew PBW extension attaches to each variable `x_i` an injective
//! endomorphism `sigma_i` and a `sigma_i`-derivation `delta_i` of the base
//! ring, so that `x_i r = sigma_i(r) x_i + delta_i(r)`. Over a finite ring both
//! are plain lookup tables; [`closure`] turns the quantifier "for every
//! exponent vector" into a finite scan and [`compat`] decides compatibility
//! and rigidity on top of it.

pub mod closure;
pub mod compat;

use std::fmt;

use thiserror::Error;

use crate::finring::{Elem, FiniteRing, SAMPLED_TUPLES};

pub use closure::{
    compatibility_closure, DeltaClosure, MonoidClosure, SigmaClosure, DEFAULT_CLOSURE_CAP,
};
pub use compat::{check_compatibility, check_sigma_rigid, Compatibility};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Endomorphism,
    /// A `sigma`-derivation paired with `sigmas[sigma]` of its family.
    SigmaDerivation { sigma: usize },
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapAxiom {
    FixesOne,
    Additive,
    Multiplicative,
    Injective,
    /// `delta(ab) = sigma(a) delta(b) + delta(a) b`
    SigmaLeibniz,
}

impl fmt::Display for MapAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MapAxiom::FixesOne => "fixes-one",
            MapAxiom::Additive => "additive",
            MapAxiom::Multiplicative => "multiplicative",
            MapAxiom::Injective => "injective",
            MapAxiom::SigmaLeibniz => "sigma-leibniz",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("map table has {found} entries, ring has {expected} elements")]
    TableLength { expected: usize, found: usize },
    #[error("map table entry {index} -> {value} is not a ring element")]
    OutOfRange { index: usize, value: usize },
    #[error("{axiom} axiom violated at ({}, {})", .witness.0, .witness.1)]
    AxiomViolation {
        axiom: MapAxiom,
        witness: (Elem, Elem),
    },
    #[error("map builder {builder} does not apply: {reason}")]
    NotApplicable {
        builder: &'static str,
        reason: String,
    },
    #[error("family needs one sigma and one delta per variable ({sigmas} sigmas, {deltas} deltas)")]
    FamilyShape { sigmas: usize, deltas: usize },
}

/// A self-map of a finite ring given by its table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMap {
    table: Vec<Elem>,
    kind: MapKind,
}

impl RingMap {
    pub fn from_table(ring: &FiniteRing, table: Vec<Elem>, kind: MapKind) -> Result<Self, MapError> {
        if table.len() != ring.size() {
            return Err(MapError::TableLength {
                expected: ring.size(),
                found: table.len(),
            });
        }
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= ring.size()) {
            return Err(MapError::OutOfRange { index, value });
        }
        Ok(RingMap { table, kind })
    }

    pub fn from_fn(ring: &FiniteRing, kind: MapKind, f: impl Fn(Elem) -> Elem) -> Self {
        RingMap {
            table: ring.elements().map(f).collect(),
            kind,
        }
    }

    pub fn identity(ring: &FiniteRing) -> Self {
        Self::from_fn(ring, MapKind::Endomorphism, |a| a)
    }

    /// The zero derivation paired with `sigmas[sigma]`.
    pub fn zero_derivation(ring: &FiniteRing, sigma: usize) -> Self {
        let z = ring.zero();
        Self::from_fn(ring, MapKind::SigmaDerivation { sigma }, |_| z)
    }

    /// Exchange of the two factors of `S x S`.
    pub fn coordinate_swap(ring: &FiniteRing) -> Result<Self, MapError> {
        let not = |reason: &str| MapError::NotApplicable {
            builder: "swap",
            reason: reason.to_string(),
        };
        let factors = ring.factors().ok_or_else(|| not("ring is not a product"))?;
        if factors.len() != 2 || factors[0] != factors[1] {
            return Err(not("ring is not a product of two equal factors"));
        }
        let table = ring
            .elements()
            .map(|a| {
                let c = ring.components(a);
                ring.from_components(&[c[1], c[0]]).expect("swapped digits")
            })
            .collect();
        Ok(RingMap {
            table,
            kind: MapKind::Endomorphism,
        })
    }

    /// Entrywise `x -> x^p` on `M_k(Z/p)` (or `Z/p`).
    pub fn frobenius(ring: &FiniteRing) -> Result<Self, MapError> {
        let p = match (ring.matrix_shape(), ring.descriptor()) {
            (Some((_, p)), _) => p,
            (None, crate::finring::RingDescriptor::Modular(n)) => *n as usize,
            _ => {
                return Err(MapError::NotApplicable {
                    builder: "frobenius",
                    reason: "ring is neither modular nor a matrix ring".into(),
                })
            }
        };
        let pow = |x: usize| -> usize {
            let mut acc = 1 % p;
            for _ in 0..p {
                acc = acc * x % p;
            }
            acc
        };
        let table = ring
            .elements()
            .map(|a| {
                let digits: Vec<Elem> = ring.components(a).into_iter().map(pow).collect();
                ring.from_components(&digits).expect("entries in range")
            })
            .collect();
        Ok(RingMap {
            table,
            kind: MapKind::Endomorphism,
        })
    }

    /// `a + bt -> b` on `F_2[t]/(t^2)`, an `id`-derivation. In any other
    /// characteristic `d(t^2) = 2t` clashes with `t^2 = 0`.
    pub fn formal_derivative(ring: &FiniteRing, sigma: usize) -> Result<Self, MapError> {
        let n = ring.dual_modulus().ok_or_else(|| MapError::NotApplicable {
            builder: "derivative",
            reason: "ring is not of the form Z/n[t]/(t^2)".into(),
        })?;
        if n != 2 {
            return Err(MapError::NotApplicable {
                builder: "derivative",
                reason: format!("d/dt is not a derivation of Z/{n}[t]/(t^2)"),
            });
        }
        let table = ring
            .elements()
            .map(|a| {
                let c = ring.components(a);
                ring.from_components(&[c[1], 0]).expect("digit in range")
            })
            .collect();
        Ok(RingMap {
            table,
            kind: MapKind::SigmaDerivation { sigma },
        })
    }

    /// Inner sigma-derivation `r -> c r - sigma(r) c`.
    pub fn inner_derivation(ring: &FiniteRing, c: Elem, sigma: &RingMap, sigma_index: usize) -> Self {
        Self::from_fn(ring, MapKind::SigmaDerivation { sigma: sigma_index }, |r| {
            ring.sub(ring.mul(c, r), ring.mul(sigma.apply(r), c))
        })
    }

    /// Inner automorphism `r -> u r u^-1`.
    pub fn conjugation(ring: &FiniteRing, u: Elem) -> Result<Self, MapError> {
        let inv = ring.unit_inverse(u).ok_or_else(|| MapError::NotApplicable {
            builder: "conjugation",
            reason: format!("{} is not a unit", ring.display(u)),
        })?;
        Ok(Self::from_fn(ring, MapKind::Endomorphism, |r| {
            ring.mul(ring.mul(u, r), inv)
        }))
    }

    #[inline]
    pub fn apply(&self, a: Elem) -> Elem {
        self.table[a]
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn with_kind(mut self, kind: MapKind) -> Self {
        self.kind = kind;
        self
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RingMap) -> RingMap {
        RingMap {
            table: other.table.iter().map(|&a| self.table[a]).collect(),
            kind: MapKind::Plain,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &a)| i == a)
    }

    pub fn is_zero(&self, ring: &FiniteRing) -> bool {
        self.table.iter().all(|&a| a == ring.zero())
    }

    /// Checks the kind-specific axioms, exhaustively over pairs up to the
    /// ring's cap and on a fixed-seed sample above it. Sigma-derivations need
    /// their paired endomorphism.
    pub fn validate(&self, ring: &FiniteRing, paired_sigma: Option<&RingMap>) -> Result<(), MapError> {
        if self.table.len() != ring.size() {
            return Err(MapError::TableLength {
                expected: ring.size(),
                found: self.table.len(),
            });
        }
        match self.kind {
            MapKind::Plain => Ok(()),
            MapKind::Endomorphism => {
                if self.apply(ring.one()) != ring.one() {
                    return Err(MapError::AxiomViolation {
                        axiom: MapAxiom::FixesOne,
                        witness: (ring.one(), self.apply(ring.one())),
                    });
                }
                self.check_pairs(ring, |a, b| {
                    if self.apply(ring.add(a, b)) != ring.add(self.apply(a), self.apply(b)) {
                        return Some(MapAxiom::Additive);
                    }
                    if self.apply(ring.mul(a, b)) != ring.mul(self.apply(a), self.apply(b)) {
                        return Some(MapAxiom::Multiplicative);
                    }
                    None
                })?;
                let mut preimage = vec![None; ring.size()];
                for a in ring.elements() {
                    if let Some(b) = preimage[self.apply(a)] {
                        return Err(MapError::AxiomViolation {
                            axiom: MapAxiom::Injective,
                            witness: (b, a),
                        });
                    }
                    preimage[self.apply(a)] = Some(a);
                }
                Ok(())
            }
            MapKind::SigmaDerivation { .. } => {
                let sigma = paired_sigma.expect("sigma-derivation validated without its sigma");
                self.check_pairs(ring, |a, b| {
                    if self.apply(ring.add(a, b)) != ring.add(self.apply(a), self.apply(b)) {
                        return Some(MapAxiom::Additive);
                    }
                    let lhs = self.apply(ring.mul(a, b));
                    let rhs = ring.add(
                        ring.mul(sigma.apply(a), self.apply(b)),
                        ring.mul(self.apply(a), b),
                    );
                    (lhs != rhs).then_some(MapAxiom::SigmaLeibniz)
                })
            }
        }
    }

    fn check_pairs(
        &self,
        ring: &FiniteRing,
        law: impl Fn(Elem, Elem) -> Option<MapAxiom>,
    ) -> Result<(), MapError> {
        let fail = |axiom, a, b| MapError::AxiomViolation {
            axiom,
            witness: (a, b),
        };
        if ring.is_small() {
            for a in ring.elements() {
                for b in ring.elements() {
                    if let Some(axiom) = law(a, b) {
                        return Err(fail(axiom, a, b));
                    }
                }
            }
        } else {
            let mut s = ring.sample_stream(0);
            for _ in 0..SAMPLED_TUPLES {
                let (a, b) = (s.next().unwrap(), s.next().unwrap());
                if let Some(axiom) = law(a, b) {
                    return Err(fail(axiom, a, b));
                }
            }
        }
        Ok(())
    }
}

/// The families `Sigma = {sigma_1..sigma_n}` and `Delta = {delta_1..delta_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFamily {
    sigmas: Vec<RingMap>,
    deltas: Vec<RingMap>,
}

impl MapFamily {
    /// Validates every map: sigmas as injective endomorphisms, `deltas[i]` as
    /// a `sigmas[i]`-derivation.
    pub fn new(ring: &FiniteRing, sigmas: Vec<RingMap>, deltas: Vec<RingMap>) -> Result<Self, FamilyError> {
        if sigmas.len() != deltas.len() {
            return Err(FamilyError {
                role: MapRole::Sigma,
                index: 0,
                error: MapError::FamilyShape {
                    sigmas: sigmas.len(),
                    deltas: deltas.len(),
                },
            });
        }
        let sigmas: Vec<RingMap> = sigmas
            .into_iter()
            .map(|m| m.with_kind(MapKind::Endomorphism))
            .collect();
        let deltas: Vec<RingMap> = deltas
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.with_kind(MapKind::SigmaDerivation { sigma: i }))
            .collect();
        for (i, s) in sigmas.iter().enumerate() {
            s.validate(ring, None).map_err(|error| FamilyError {
                role: MapRole::Sigma,
                index: i,
                error,
            })?;
        }
        for (i, d) in deltas.iter().enumerate() {
            d.validate(ring, Some(&sigmas[i])).map_err(|error| FamilyError {
                role: MapRole::Delta,
                index: i,
                error,
            })?;
        }
        Ok(MapFamily { sigmas, deltas })
    }

    /// `sigma_i = id`, `delta_i = 0` for `n` variables.
    pub fn constant(ring: &FiniteRing, n: usize) -> Self {
        MapFamily {
            sigmas: (0..n).map(|_| RingMap::identity(ring)).collect(),
            deltas: (0..n).map(|i| RingMap::zero_derivation(ring, i)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.sigmas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigmas.is_empty()
    }

    pub fn sigma(&self, i: usize) -> &RingMap {
        &self.sigmas[i]
    }

    pub fn delta(&self, i: usize) -> &RingMap {
        &self.deltas[i]
    }

    pub fn sigmas(&self) -> &[RingMap] {
        &self.sigmas
    }

    pub fn deltas(&self) -> &[RingMap] {
        &self.deltas
    }

    /// `sigma^alpha = sigma_1^{alpha_1} ∘ .. ∘ sigma_n^{alpha_n}`.
    pub fn sigma_power(&self, ring: &FiniteRing, alpha: &[u32]) -> RingMap {
        RingMap::from_fn(ring, MapKind::Endomorphism, |r| self.apply_sigma_power(alpha, r))
    }

    /// `sigma^alpha(r)`, innermost `sigma_n`.
    pub fn apply_sigma_power(&self, alpha: &[u32], r: Elem) -> Elem {
        let mut x = r;
        for (i, &e) in alpha.iter().enumerate().rev() {
            for _ in 0..e {
                x = self.sigmas[i].apply(x);
            }
        }
        x
    }

    /// `d(r)` for the delta word `[i_1, .., i_l]`, read as
    /// `delta_{i_1} ∘ .. ∘ delta_{i_l}`.
    pub fn apply_delta_word(&self, word: &[usize], r: Elem) -> Elem {
        word.iter().rev().fold(r, |x, &i| self.deltas[i].apply(x))
    }

    /// Whether all sigmas are the identity and all deltas vanish.
    pub fn is_constant(&self, ring: &FiniteRing) -> bool {
        self.sigmas.iter().all(RingMap::is_identity) && self.deltas.iter().all(|d| d.is_zero(ring))
    }

    /// Whether the sigmas commute pairwise.
    pub fn sigmas_commute(&self) -> bool {
        self.sigmas.iter().enumerate().all(|(i, s)| {
            self.sigmas[i + 1..]
                .iter()
                .all(|t| s.compose(t).table == t.compose(s).table)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapRole {
    Sigma,
    Delta,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{} {}: {error}", match .role { MapRole::Sigma => "sigma", MapRole::Delta => "delta" }, .index + 1)]
pub struct FamilyError {
    pub role: MapRole,
    /// Zero-based variable index.
    pub index: usize,
    pub error: MapError,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::RingDescriptor;

    fn f2f2() -> FiniteRing {
        FiniteRing::build(&RingDescriptor::Product(vec![
            RingDescriptor::Modular(2),
            RingDescriptor::Modular(2),
        ]))
        .unwrap()
    }

    #[test]
    fn identity_is_an_endomorphism() {
        let r = FiniteRing::modular(4);
        RingMap::identity(&r).validate(&r, None).unwrap();
    }

    #[test]
    fn swap_is_an_endomorphism() {
        let r = f2f2();
        let swap = RingMap::coordinate_swap(&r).unwrap();
        swap.validate(&r, None).unwrap();
        // Oracle: componentwise arithmetic on bit pairs (x0, x1) = x & 1, x >> 1.
        let enc = |x0: usize, x1: usize| x0 | (x1 << 1);
        let sw = |x: usize| enc(x >> 1, x & 1);
        let add = |x: usize, y: usize| x ^ y;
        let mul = |x: usize, y: usize| x & y;
        for a in 0..4usize {
            assert_eq!(swap.apply(a), sw(a));
            for b in 0..4usize {
                assert_eq!(sw(add(a, b)), add(sw(a), sw(b)));
                assert_eq!(sw(mul(a, b)), mul(sw(a), sw(b)));
                assert_eq!(r.add(a, b), add(a, b));
                assert_eq!(r.mul(a, b), mul(a, b));
            }
        }
    }

    #[test]
    fn doubling_does_not_fix_one() {
        let r = FiniteRing::modular(4);
        let m = RingMap::from_fn(&r, MapKind::Endomorphism, |a| (2 * a) % 4);
        assert_eq!(
            m.validate(&r, None),
            Err(MapError::AxiomViolation {
                axiom: MapAxiom::FixesOne,
                witness: (1, 2)
            })
        );
    }

    #[test]
    fn non_injective_endomorphism_rejected() {
        // (a, b) -> (a, a) is a unital ring map but not injective.
        let r = f2f2();
        let diag = RingMap::from_fn(&r, MapKind::Endomorphism, |x| {
            let c = r.components(x);
            r.from_components(&[c[0], c[0]]).unwrap()
        });
        assert!(matches!(
            diag.validate(&r, None),
            Err(MapError::AxiomViolation {
                axiom: MapAxiom::Injective,
                ..
            })
        ));
    }

    #[test]
    fn formal_derivative_is_a_derivation() {
        let r = FiniteRing::build(&RingDescriptor::dual(2)).unwrap();
        let id = RingMap::identity(&r);
        let d = RingMap::formal_derivative(&r, 0).unwrap();
        d.validate(&r, Some(&id)).unwrap();
        let t = r.parse_element("t").unwrap();
        assert_eq!(d.apply(t), r.one());
        assert!(RingMap::formal_derivative(&FiniteRing::modular(4), 0).is_err());
        let f3 = FiniteRing::build(&RingDescriptor::dual(3)).unwrap();
        assert!(RingMap::formal_derivative(&f3, 0).is_err());
        // Over F_3 the map itself breaks the Leibniz rule at t * t.
        let t = f3.parse_element("t").unwrap();
        let raw = RingMap::from_fn(&f3, MapKind::SigmaDerivation { sigma: 0 }, |x| {
            f3.from_components(&[f3.components(x)[1], 0]).unwrap()
        });
        assert_eq!(
            raw.validate(&f3, Some(&RingMap::identity(&f3))),
            Err(MapError::AxiomViolation {
                axiom: MapAxiom::SigmaLeibniz,
                witness: (t, t)
            })
        );
    }

    #[test]
    fn inner_derivation_satisfies_leibniz() {
        let r = FiniteRing::build(&RingDescriptor::matrix(2, 2)).unwrap();
        let e12 = r.parse_element("[[0,1],[0,0]]").unwrap();
        let u = r.parse_element("[[1,1],[0,1]]").unwrap();
        let sigma = RingMap::conjugation(&r, u).unwrap();
        sigma.validate(&r, None).unwrap();
        let d = RingMap::inner_derivation(&r, e12, &sigma, 0);
        d.validate(&r, Some(&sigma)).unwrap();
    }

    #[test]
    fn broken_leibniz_rule_detected() {
        let r = FiniteRing::build(&RingDescriptor::dual(2)).unwrap();
        let id = RingMap::identity(&r);
        // a + bt -> a is additive but not a derivation.
        let bad = RingMap::from_fn(&r, MapKind::SigmaDerivation { sigma: 0 }, |x| {
            r.from_components(&[r.components(x)[0], 0]).unwrap()
        });
        assert!(matches!(
            bad.validate(&r, Some(&id)),
            Err(MapError::AxiomViolation {
                axiom: MapAxiom::SigmaLeibniz,
                ..
            })
        ));
    }

    #[test]
    fn table_length_checked() {
        let r = FiniteRing::modular(4);
        assert!(matches!(
            RingMap::from_table(&r, vec![0, 1, 2], MapKind::Endomorphism),
            Err(MapError::TableLength { .. })
        ));
    }

    #[test]
    fn sigma_powers() {
        let r = f2f2();
        let fam = MapFamily::new(
            &r,
            vec![RingMap::coordinate_swap(&r).unwrap()],
            vec![RingMap::zero_derivation(&r, 0)],
        )
        .unwrap();
        assert!(fam.sigma_power(&r, &[0]).is_identity());
        assert!(fam.sigma_power(&r, &[2]).is_identity());
        assert_eq!(fam.sigma_power(&r, &[3]).table(), fam.sigma(0).table());
    }

    #[test]
    fn frobenius_on_prime_field_matrices_is_identity() {
        let r = FiniteRing::build(&RingDescriptor::matrix(2, 3)).unwrap();
        let f = RingMap::frobenius(&r).unwrap();
        assert!(f.is_identity());
    }
}
