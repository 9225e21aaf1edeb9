//! Normal-form elements of a skew PBW extension.

use std::collections::BTreeMap;

use super::Monomial;
use crate::finring::{Elem, FiniteRing};

/// `sum a_alpha x^alpha` with no zero coefficients. Only the extension knows
/// which element is zero, so construction goes through [`SkewPoly::from_terms`]
/// or the extension's helpers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewPoly {
    terms: BTreeMap<Monomial, Elem>,
}

impl SkewPoly {
    pub fn zero() -> Self {
        SkewPoly::default()
    }

    /// Sums coefficients of repeated monomials and drops zeros.
    pub fn from_terms(ring: &FiniteRing, terms: impl IntoIterator<Item = (Monomial, Elem)>) -> Self {
        let mut p = SkewPoly::zero();
        for (m, a) in terms {
            p.add_term(ring, m, a);
        }
        p
    }

    pub fn term(ring: &FiniteRing, m: Monomial, a: Elem) -> Self {
        Self::from_terms(ring, [(m, a)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<Elem> {
        self.terms.get(m).copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Elem)> {
        self.terms.iter().map(|(m, &a)| (m, a))
    }

    pub fn coefficients(&self) -> impl Iterator<Item = Elem> + '_ {
        self.terms.values().copied()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, ring: &FiniteRing, m: Monomial, a: Elem) {
        if a == ring.zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(a);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = ring.add(*o.get(), a);
                if s == ring.zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += r * other`.
    pub(crate) fn add_scaled(&mut self, ring: &FiniteRing, r: Elem, other: &SkewPoly) {
        if r == ring.zero() {
            return;
        }
        let one = ring.one();
        for (m, &a) in &other.terms {
            let c = if r == one { a } else { ring.mul(r, a) };
            self.add_term(ring, m.clone(), c);
        }
    }

    pub fn add(&self, ring: &FiniteRing, other: &SkewPoly) -> SkewPoly {
        let mut p = self.clone();
        p.add_scaled(ring, ring.one(), other);
        p
    }

    pub fn neg(&self, ring: &FiniteRing) -> SkewPoly {
        SkewPoly {
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), ring.neg(a))).collect(),
        }
    }

    pub fn sub(&self, ring: &FiniteRing, other: &SkewPoly) -> SkewPoly {
        self.add(ring, &other.neg(ring))
    }

    /// Left scalar multiple `r * self`; coefficients sit to the left of the
    /// monomials, so no rewriting is involved.
    pub fn scale_left(&self, ring: &FiniteRing, r: Elem) -> SkewPoly {
        let mut p = SkewPoly::zero();
        p.add_scaled(ring, r, self);
        p
    }

    /// Multiplies every monomial by `m` on the right, assuming the results
    /// stay standard (all variables of `self` precede those of `m`).
    pub(crate) fn shift(&self, m: &Monomial) -> SkewPoly {
        SkewPoly {
            terms: self.terms.iter().map(|(k, &a)| (k.times(m), a)).collect(),
        }
    }
}
