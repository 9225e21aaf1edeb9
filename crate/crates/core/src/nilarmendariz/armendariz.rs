//! Bounded searches for Armendariz-type counterexamples.
//!
//! Pairs are enumerated as `p = f_index * G + g_index`; the first witness in
//! that order is reported, so parallel scans return the same witness as a
//! sequential one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{decode_coeffs, CoefficientScope, NilContext, NilError, SearchBound};
use crate::finring::Elem;
use crate::pbw::{Monomial, SkewPoly};
use crate::report::{PropertyReport, TermPair, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArmendarizVariant {
    /// `fg` nilpotent implies every `a_i b_j` nilpotent.
    SkewPi,
    /// `fg = 0` implies `a_i X_i b_j Y_j = 0`.
    SigmaDeltaSkew,
    /// `fg = 0` implies `a_i sigma^{alpha_i}(b_j) = 0`.
    SigmaSkew,
    /// `fg = 0` implies `a_0 b_k = 0`.
    Skew,
}

impl ArmendarizVariant {
    pub const ALL: [ArmendarizVariant; 4] = [
        ArmendarizVariant::SkewPi,
        ArmendarizVariant::SigmaDeltaSkew,
        ArmendarizVariant::SigmaSkew,
        ArmendarizVariant::Skew,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ArmendarizVariant::SkewPi => "skew-pi",
            ArmendarizVariant::SigmaDeltaSkew => "sigma-delta-skew",
            ArmendarizVariant::SigmaSkew => "sigma-skew",
            ArmendarizVariant::Skew => "skew",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.name() == s || v.name().replace('-', "_") == s)
    }

    pub fn property(self) -> String {
        format!("armendariz:{}", self.name())
    }
}

struct Search<'a> {
    ctx: &'a NilContext,
    variant: ArmendarizVariant,
    support: &'a [Monomial],
}

impl Search<'_> {
    fn poly(&self, coeffs: &[Elem]) -> SkewPoly {
        self.ctx
            .ext()
            .poly(self.support.iter().cloned().zip(coeffs.iter().copied()))
    }

    /// `Some(witness)` when `(f, g)` satisfies the premise and violates the
    /// conclusion.
    fn examine(&self, fa: &[Elem], gb: &[Elem]) -> Result<Option<Witness>, NilError> {
        let ext = self.ctx.ext();
        let ring = ext.ring();
        let z = ring.zero();
        let s = self.support;
        let (f, g) = (self.poly(fa), self.poly(gb));
        if f.is_zero() || g.is_zero() {
            return Ok(None);
        }
        let pairs = || {
            (0..s.len()).flat_map(move |i| (0..s.len()).map(move |j| (i, j)))
        };
        let witness = |i: usize, j: usize, offending: SkewPoly| Witness::Armendariz {
            f: f.clone(),
            g: g.clone(),
            pair: TermPair {
                left: (s[i].clone(), fa[i]),
                right: (s[j].clone(), gb[j]),
            },
            offending,
        };
        match self.variant {
            ArmendarizVariant::SkewPi => {
                let bad = pairs().find(|&(i, j)| !ring.in_nil(ring.mul(fa[i], gb[j])));
                let Some((i, j)) = bad else { return Ok(None) };
                let fg = ext.mul(&f, &g)?;
                if !self.ctx.nilpotent_fast(&fg)? {
                    return Ok(None);
                }
                Ok(Some(witness(i, j, ext.constant(ring.mul(fa[i], gb[j])))))
            }
            ArmendarizVariant::SigmaDeltaSkew => {
                if !ext.mul(&f, &g)?.is_zero() {
                    return Ok(None);
                }
                for (i, j) in pairs() {
                    if fa[i] == z || gb[j] == z {
                        continue;
                    }
                    let l = SkewPoly::term(ring, s[i].clone(), fa[i]);
                    let r = SkewPoly::term(ring, s[j].clone(), gb[j]);
                    let p = ext.mul(&l, &r)?;
                    if !p.is_zero() {
                        return Ok(Some(witness(i, j, p)));
                    }
                }
                Ok(None)
            }
            ArmendarizVariant::SigmaSkew => {
                if !ext.mul(&f, &g)?.is_zero() {
                    return Ok(None);
                }
                let fam = ext.family();
                for (i, j) in pairs() {
                    let v = ring.mul(fa[i], fam.apply_sigma_power(s[i].alpha(), gb[j]));
                    if v != z {
                        return Ok(Some(witness(i, j, ext.constant(v))));
                    }
                }
                Ok(None)
            }
            ArmendarizVariant::Skew => {
                let Some(i0) = s.iter().position(Monomial::is_one) else {
                    return Ok(None);
                };
                if (0..s.len()).all(|k| ring.mul(fa[i0], gb[k]) == z) {
                    return Ok(None);
                }
                if !ext.mul(&f, &g)?.is_zero() {
                    return Ok(None);
                }
                let k = (0..s.len())
                    .find(|&k| ring.mul(fa[i0], gb[k]) != z)
                    .expect("checked above");
                Ok(Some(witness(i0, k, ext.constant(ring.mul(fa[i0], gb[k])))))
            }
        }
    }
}

/// Exhaustive (or sampled) search without a pair cap.
pub fn check_armendariz(
    ctx: &NilContext,
    variant: ArmendarizVariant,
    bound: &SearchBound,
) -> Result<PropertyReport, NilError> {
    check_armendariz_capped(ctx, variant, bound, None)
}

/// As [`check_armendariz`], giving up with `undecided_at_cap` after
/// `max_pairs` pairs without a witness.
pub fn check_armendariz_capped(
    ctx: &NilContext,
    variant: ArmendarizVariant,
    bound: &SearchBound,
    max_pairs: Option<u64>,
) -> Result<PropertyReport, NilError> {
    let ring = ctx.ext().ring();
    let size = ring.size();
    let s = bound.support().len();
    let search = Search {
        ctx,
        variant,
        support: bound.support(),
    };
    let total = bound.pair_count(size);
    let limit = match max_pairs {
        Some(m) => total.min(m as u128),
        None => total,
    };
    let found: Option<(u128, Result<Option<Witness>, NilError>)> = match bound.scope {
        CoefficientScope::All => {
            let polys = (size as u128).pow(s as u32);
            (0..limit as u64)
                .into_par_iter()
                .map(|p| {
                    let p = p as u128;
                    let fa = decode_coeffs(p / polys, size, s);
                    let gb = decode_coeffs(p % polys, size, s);
                    (p, search.examine(&fa, &gb))
                })
                .find_first(|(_, r)| !matches!(r, Ok(None)))
        }
        CoefficientScope::Sampled { seed, .. } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draws: Vec<(Vec<Elem>, Vec<Elem>)> = (0..limit)
                .map(|_| {
                    let fa = (0..s).map(|_| rng.gen_range(0..size)).collect();
                    let gb = (0..s).map(|_| rng.gen_range(0..size)).collect();
                    (fa, gb)
                })
                .collect();
            draws
                .par_iter()
                .enumerate()
                .map(|(p, (fa, gb))| (p as u128, search.examine(fa, gb)))
                .find_first(|(_, r)| !matches!(r, Ok(None)))
        }
    };
    let property = variant.property();
    let report = match found {
        Some((_, Err(e))) => return Err(e),
        Some((p, Ok(Some(w)))) => PropertyReport::failing(property, w, (p + 1) as u64),
        Some((_, Ok(None))) => unreachable!("filtered by find_first"),
        None if limit < total => PropertyReport::new(property, Verdict::UndecidedAtCap)
            .with_work(limit as u64)
            .with_note(format!("pair cap {limit} reached before the bound was exhausted")),
        None => PropertyReport::new(property, Verdict::HoldsAtBound).with_work(limit as u64),
    };
    let mut report = report;
    report.bound = Some(bound.clone());
    if variant == ArmendarizVariant::SkewPi && !ctx.hypotheses_hold() {
        report = report.with_note(
            "nilpotency of fg decided by the power oracle; negative answers are at oracle bound",
        );
    }
    Ok(report)
}
