//! Nilpotent skew polynomials and Armendariz-type properties of the base ring.
//!
//! The Armendariz conditions quantify over all pairs of polynomials; a
//! [`SearchBound`] makes that finite by fixing the monomials `f` and `g` may
//! use and the coefficients they may carry. Verdicts on such searches are
//! therefore "holds at bound" at best.

mod armendariz;
mod lemmas;
mod verify;

use std::fmt;

use thiserror::Error;

use crate::finring::{check_ring_class, Elem, RingClass, RingClassVerdict};
use crate::pbw::{Extension, Monomial, PbwError, SkewPoly};
use crate::ringmaps::{check_compatibility, Compatibility};

pub use armendariz::{check_armendariz, check_armendariz_capped, ArmendarizVariant};
pub use lemmas::{
    verify_implication_suite, verify_lemma_nil_pullback, verify_lemma_nil_stability, Implication,
    ImplicationStatus, NIL_PULLBACK, NIL_STABILITY,
};
pub use verify::reverify_witness;

/// Rings larger than this are searched on a coefficient sample by default.
pub const EXHAUSTIVE_RING_LIMIT: usize = 16;
pub const DEFAULT_SAMPLE_PAIRS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientScope {
    All,
    Sampled { seed: u64, pairs: usize },
}

/// Which polynomials an Armendariz search ranges over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SearchBound {
    /// Ascending in the extension's monomial order, no repeats.
    support: Vec<Monomial>,
    pub scope: CoefficientScope,
}

impl SearchBound {
    /// Sorts and deduplicates `support` under the extension's order.
    pub fn new(ext: &Extension, mut support: Vec<Monomial>, scope: CoefficientScope) -> Self {
        support.sort_by(|a, b| ext.cmp_monomials(a, b));
        support.dedup();
        SearchBound { support, scope }
    }

    /// `{1, x_1, .., x_n}`.
    pub fn deg1(ext: &Extension) -> Self {
        Self::up_to_degree(ext, 1)
    }

    /// All standard monomials of degree at most two.
    pub fn deg2(ext: &Extension) -> Self {
        Self::up_to_degree(ext, 2)
    }

    pub fn up_to_degree(ext: &Extension, d: u32) -> Self {
        let n = ext.n();
        let mut out = vec![Monomial::one(n)];
        let mut frontier = vec![Monomial::one(n)];
        for _ in 0..d {
            let mut next = Vec::new();
            for m in &frontier {
                let start = m.alpha().iter().rposition(|&e| e > 0).unwrap_or(0);
                for i in start..n {
                    next.push(m.bump(i, 1));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        Self::new(ext, out, default_scope(ext, 0))
    }

    pub fn with_scope(mut self, scope: CoefficientScope) -> Self {
        self.scope = scope;
        self
    }

    /// Reseeds a sampled scope; exhaustive scopes are unchanged.
    pub fn with_seed(mut self, seed: u64) -> Self {
        if let CoefficientScope::Sampled { pairs, .. } = self.scope {
            self.scope = CoefficientScope::Sampled { seed, pairs };
        }
        self
    }

    pub fn support(&self) -> &[Monomial] {
        &self.support
    }

    /// Number of `(f, g)` pairs the bound covers, saturating.
    pub fn pair_count(&self, ring_size: usize) -> u128 {
        match self.scope {
            CoefficientScope::Sampled { pairs, .. } => pairs as u128,
            CoefficientScope::All => {
                let polys = (ring_size as u128).checked_pow(self.support.len() as u32);
                polys.and_then(|p| p.checked_mul(p)).unwrap_or(u128::MAX)
            }
        }
    }

    pub fn describe(&self, ext: &Extension) -> String {
        let mons: Vec<String> = self.support.iter().map(|m| m.render(ext.names())).collect();
        let scope = match self.scope {
            CoefficientScope::All => "all coefficients".to_string(),
            CoefficientScope::Sampled { seed, pairs } => format!("{pairs} sampled pairs, seed {seed}"),
        };
        format!("support {{{}}}, {scope}", mons.join(", "))
    }
}

/// Exhaustive up to [`EXHAUSTIVE_RING_LIMIT`] elements, sampled above.
pub fn default_scope(ext: &Extension, seed: u64) -> CoefficientScope {
    if ext.ring().size() <= EXHAUSTIVE_RING_LIMIT {
        CoefficientScope::All
    } else {
        CoefficientScope::Sampled {
            seed,
            pairs: DEFAULT_SAMPLE_PAIRS,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NilMethod {
    CoefficientCriterion,
    PowerOracle,
    BothAgree,
}

impl NilMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            NilMethod::CoefficientCriterion => "coefficient_criterion",
            NilMethod::PowerOracle => "power_oracle",
            NilMethod::BothAgree => "both_agree",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilPolyVerdict {
    pub nilpotent: bool,
    pub method: NilMethod,
    /// First exponent with `f^e = 0`, or the oracle bound when none was found.
    pub exponent_used: u32,
    /// `false` only for a negative oracle answer outside the hypotheses under
    /// which the bound is known to suffice.
    pub exact: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NilError {
    #[error("hypothesis not verified: {hypothesis} ({detail})")]
    HypothesisNotVerified { hypothesis: String, detail: String },
    #[error("oracle and criterion disagree on {0}")]
    Disagreement(String),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

/// An extension together with the base-ring facts the theorems assume.
#[derive(Clone, Debug)]
pub struct NilContext {
    ext: Extension,
    reversible: RingClassVerdict,
    compat: Compatibility,
}

impl NilContext {
    pub fn new(ext: &Extension) -> Self {
        NilContext {
            ext: ext.clone(),
            reversible: check_ring_class(ext.ring(), RingClass::Reversible),
            compat: check_compatibility(ext.ring(), ext.family()),
        }
    }

    pub fn ext(&self) -> &Extension {
        &self.ext
    }

    pub fn reversible(&self) -> &RingClassVerdict {
        &self.reversible
    }

    pub fn compatibility(&self) -> &Compatibility {
        &self.compat
    }

    /// Reversible and (Sigma, Delta)-compatible.
    pub fn hypotheses_hold(&self) -> bool {
        self.reversible.holds && self.compat.is_compatible()
    }

    fn require_hypotheses(&self) -> Result<(), NilError> {
        if !self.reversible.holds {
            return Err(NilError::HypothesisNotVerified {
                hypothesis: "reversible".into(),
                detail: self
                    .reversible
                    .witness
                    .as_ref()
                    .map(|w| w.describe(self.ext.ring()))
                    .unwrap_or_default(),
            });
        }
        self.require_compatible()
    }

    fn require_compatible(&self) -> Result<(), NilError> {
        for rep in self.compat.reports() {
            if !rep.holds() {
                return Err(NilError::HypothesisNotVerified {
                    hypothesis: rep.property.clone(),
                    detail: rep.verdict.to_string(),
                });
            }
        }
        Ok(())
    }

    /// `true` iff every coefficient is nilpotent; needs the hypotheses.
    pub fn nilpotent_by_criterion(&self, f: &SkewPoly) -> Result<NilPolyVerdict, NilError> {
        self.require_hypotheses()?;
        let ring = self.ext.ring();
        Ok(NilPolyVerdict {
            nilpotent: f.coefficients().all(|a| ring.in_nil(a)),
            method: NilMethod::CoefficientCriterion,
            exponent_used: 0,
            exact: true,
        })
    }

    /// Power oracle, marked exact when the hypotheses hold.
    pub fn nilpotent_by_oracle(&self, f: &SkewPoly) -> Result<NilPolyVerdict, NilError> {
        let mut v = is_nilpotent_poly_oracle(&self.ext, f)?;
        v.exact |= self.hypotheses_hold();
        Ok(v)
    }

    /// Both methods when the hypotheses hold (an error if they disagree),
    /// otherwise the oracle alone.
    pub fn nilpotent(&self, f: &SkewPoly) -> Result<NilPolyVerdict, NilError> {
        let oracle = self.nilpotent_by_oracle(f)?;
        if !self.hypotheses_hold() {
            return Ok(oracle);
        }
        let crit = self.nilpotent_by_criterion(f)?;
        if crit.nilpotent != oracle.nilpotent {
            return Err(NilError::Disagreement(self.ext.render(f)));
        }
        Ok(NilPolyVerdict {
            method: NilMethod::BothAgree,
            ..oracle
        })
    }

    /// Fast nilpotency decision used inside searches.
    pub(crate) fn nilpotent_fast(&self, f: &SkewPoly) -> Result<bool, NilError> {
        if self.hypotheses_hold() {
            let ring = self.ext.ring();
            Ok(f.coefficients().all(|a| ring.in_nil(a)))
        } else {
            Ok(is_nilpotent_poly_oracle(&self.ext, f)?.nilpotent)
        }
    }
}

/// `(m + 1) k + 1` for a polynomial with `m + 1` terms, `k` the largest
/// nilpotency index in the base ring.
pub fn oracle_bound(ext: &Extension, f: &SkewPoly) -> u32 {
    let k = ext.ring().max_nilpotency_index().max(1);
    (f.len() as u32) * k + 1
}

/// Raises `f` to successive powers up to [`oracle_bound`].
pub fn is_nilpotent_poly_oracle(ext: &Extension, f: &SkewPoly) -> Result<NilPolyVerdict, PbwError> {
    if f.is_zero() {
        return Ok(NilPolyVerdict {
            nilpotent: true,
            method: NilMethod::PowerOracle,
            exponent_used: 1,
            exact: true,
        });
    }
    let bound = oracle_bound(ext, f);
    let mut p = f.clone();
    for e in 1..=bound {
        if p.is_zero() {
            return Ok(NilPolyVerdict {
                nilpotent: true,
                method: NilMethod::PowerOracle,
                exponent_used: e,
                exact: true,
            });
        }
        if e < bound {
            p = ext.mul(&p, f)?;
        }
    }
    Ok(NilPolyVerdict {
        nilpotent: false,
        method: NilMethod::PowerOracle,
        exponent_used: bound,
        exact: false,
    })
}

/// Stand-alone criterion; checks the hypotheses itself.
pub fn is_nilpotent_poly_criterion(ext: &Extension, f: &SkewPoly) -> Result<NilPolyVerdict, NilError> {
    NilContext::new(ext).nilpotent_by_criterion(f)
}

/// Coefficient tuple `(a_0, .., a_{s-1})` of the `idx`-th polynomial in
/// enumeration order: base-`|R|` digits, first support monomial most
/// significant.
pub(crate) fn decode_coeffs(idx: u128, base: usize, len: usize) -> Vec<Elem> {
    let mut out = vec![0; len];
    let mut x = idx;
    for slot in out.iter_mut().rev() {
        *slot = (x % base as u128) as usize;
        x /= base as u128;
    }
    out
}

impl fmt::Display for ArmendarizVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests;
