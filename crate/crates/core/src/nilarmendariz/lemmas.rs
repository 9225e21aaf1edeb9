//! Instance checks of the nil-stability lemmas and of the implications
//! between the ring classes.

use std::fmt;

use super::{check_armendariz, ArmendarizVariant, NilContext, NilError, SearchBound};
use crate::finring::{check_ring_class, Elem, RingClass, SAMPLED_TUPLES};
use crate::report::{PropertyReport, Verdict, Witness};
use crate::ringmaps::{check_sigma_rigid, DeltaClosure, SigmaClosure};

pub const NIL_STABILITY: &str = "lemma:nil-stability";
pub const NIL_PULLBACK: &str = "lemma:nil-pullback";

fn closures(ctx: &NilContext) -> Result<(&SigmaClosure, &DeltaClosure), NilError> {
    let c = ctx.compatibility();
    match (&c.sigma_closure, &c.delta_closure) {
        (Some(s), Some(d)) => Ok((s, d)),
        _ => Err(NilError::HypothesisNotVerified {
            hypothesis: "closure within cap".into(),
            detail: "map closure exceeded its cap".into(),
        }),
    }
}

fn element_pairs(ctx: &NilContext) -> (Vec<(Elem, Elem)>, bool) {
    let ring = ctx.ext().ring();
    if ring.is_small() {
        let n = ring.size();
        ((0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect(), true)
    } else {
        let mut s = ring.sample_stream(0);
        let v = (0..SAMPLED_TUPLES)
            .map(|_| (s.next().unwrap(), s.next().unwrap()))
            .collect();
        (v, false)
    }
}

/// `ab` nilpotent implies `a sigma^alpha(delta^beta(b))` and
/// `a delta^beta(sigma^alpha(b))` nilpotent, on compatible reversible rings.
/// The identity is included among the `delta^beta`.
pub fn verify_lemma_nil_stability(ctx: &NilContext) -> Result<PropertyReport, NilError> {
    ctx.require_hypotheses()?;
    let ring = ctx.ext().ring();
    let (sc, dc) = closures(ctx)?;
    let id: Vec<Elem> = ring.elements().collect();
    let mut deltas: Vec<(&[Elem], Vec<usize>)> = vec![(&id, Vec::new())];
    deltas.extend(dc.iter().map(|(t, w)| (t, w.clone())));
    let (pairs, exhaustive) = element_pairs(ctx);
    let mut work = 0u64;
    for (a, b) in pairs {
        work += 1;
        if !ring.in_nil(ring.mul(a, b)) {
            continue;
        }
        for (s, alpha) in sc.iter() {
            for (d, word) in &deltas {
                for delta_inner in [true, false] {
                    let v = if delta_inner { s[d[b]] } else { d[s[b]] };
                    if !ring.in_nil(ring.mul(a, v)) {
                        let w = Witness::NilStability {
                            alpha: alpha.clone(),
                            word: word.clone(),
                            a,
                            b,
                            delta_inner,
                        };
                        return Ok(PropertyReport::failing(NIL_STABILITY, w, work));
                    }
                }
            }
        }
    }
    let verdict = if exhaustive { Verdict::Holds } else { Verdict::HoldsAtBound };
    Ok(PropertyReport::new(NIL_STABILITY, verdict).with_work(work))
}

/// `a sigma^theta(b)` nilpotent implies `ab` nilpotent, on compatible rings.
pub fn verify_lemma_nil_pullback(ctx: &NilContext) -> Result<PropertyReport, NilError> {
    ctx.require_compatible()?;
    let ring = ctx.ext().ring();
    let (sc, _) = closures(ctx)?;
    let (pairs, exhaustive) = element_pairs(ctx);
    let mut work = 0u64;
    for (a, b) in pairs {
        work += 1;
        if ring.in_nil(ring.mul(a, b)) {
            continue;
        }
        for (s, alpha) in sc.iter() {
            if ring.in_nil(ring.mul(a, s[b])) {
                let w = Witness::NilPullback {
                    alpha: alpha.clone(),
                    a,
                    b,
                };
                return Ok(PropertyReport::failing(NIL_PULLBACK, w, work));
            }
        }
    }
    let verdict = if exhaustive { Verdict::Holds } else { Verdict::HoldsAtBound };
    Ok(PropertyReport::new(NIL_PULLBACK, verdict).with_work(work))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ImplicationStatus {
    /// Some antecedent does not hold.
    Vacuous,
    /// Antecedents and consequent hold.
    Confirmed,
    /// Antecedents hold, consequent fails.
    Violation,
    /// Antecedents hold, consequent hit a cap.
    Undecided,
    /// An open statement: evaluated, never asserted.
    SearchOnly,
}

impl ImplicationStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ImplicationStatus::Vacuous => "vacuous",
            ImplicationStatus::Confirmed => "confirmed",
            ImplicationStatus::Violation => "VIOLATION",
            ImplicationStatus::Undecided => "undecided",
            ImplicationStatus::SearchOnly => "search-only",
        }
    }
}

impl fmt::Display for ImplicationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug)]
pub struct Implication {
    pub name: &'static str,
    pub statement: &'static str,
    pub antecedents: Vec<PropertyReport>,
    pub consequent: PropertyReport,
    pub status: ImplicationStatus,
}

impl Implication {
    fn new(
        name: &'static str,
        statement: &'static str,
        antecedents: Vec<PropertyReport>,
        consequent: PropertyReport,
        open: bool,
    ) -> Self {
        let status = if antecedents.iter().any(|a| !a.holds()) {
            ImplicationStatus::Vacuous
        } else if open {
            ImplicationStatus::SearchOnly
        } else {
            match consequent.verdict {
                Verdict::Holds | Verdict::HoldsAtBound => ImplicationStatus::Confirmed,
                Verdict::Fails => ImplicationStatus::Violation,
                Verdict::UndecidedAtCap => ImplicationStatus::Undecided,
            }
        };
        Implication {
            name,
            statement,
            antecedents,
            consequent,
            status,
        }
    }
}

fn class_report(ctx: &NilContext, class: RingClass) -> PropertyReport {
    let v = check_ring_class(ctx.ext().ring(), class);
    let verdict = match (v.holds, &v.coverage) {
        (false, _) => Verdict::Fails,
        (true, crate::finring::Coverage::Exhaustive) => Verdict::Holds,
        (true, _) => Verdict::HoldsAtBound,
    };
    let mut r = PropertyReport::new(format!("ring:{}", class.name()), verdict);
    if let Some(w) = &v.witness {
        r = r.with_note(w.describe(ctx.ext().ring()));
    }
    r
}

fn conjunction(name: &str, parts: &[&PropertyReport]) -> PropertyReport {
    let verdict = if parts.iter().any(|p| p.verdict == Verdict::Fails) {
        Verdict::Fails
    } else if parts.iter().any(|p| p.verdict == Verdict::UndecidedAtCap) {
        Verdict::UndecidedAtCap
    } else if parts.iter().all(|p| p.verdict == Verdict::Holds) {
        Verdict::Holds
    } else {
        Verdict::HoldsAtBound
    };
    let mut r = PropertyReport::new(name, verdict);
    for p in parts {
        r = r.with_note(format!("{}: {}", p.property, p.verdict));
    }
    r
}

/// Evaluates every antecedent and consequent once and reports each
/// implication's status. Nothing is asserted about the open conjecture.
pub fn verify_implication_suite(
    ctx: &NilContext,
    bound: &SearchBound,
) -> Result<Vec<Implication>, NilError> {
    let ext = ctx.ext();
    let compat = ctx.compatibility();
    let sigma_c = compat.sigma.clone();
    let compatible = conjunction("compatible", &[&compat.sigma, &compat.delta]);
    let reduced = class_report(ctx, RingClass::Reduced);
    let reversible = class_report(ctx, RingClass::Reversible);
    let semicomm = class_report(ctx, RingClass::Semicommutative);
    let ni = class_report(ctx, RingClass::Ni);
    let rigid = check_sigma_rigid(ext.ring(), ext.family());
    let skew_pi = check_armendariz(ctx, ArmendarizVariant::SkewPi, bound)?;
    let sd_skew = check_armendariz(ctx, ArmendarizVariant::SigmaDeltaSkew, bound)?;
    let s_skew = check_armendariz(ctx, ArmendarizVariant::SigmaSkew, bound)?;
    let skew = check_armendariz(ctx, ArmendarizVariant::Skew, bound)?;

    Ok(vec![
        Implication::new(
            "theorem",
            "compatible and reversible => skew-pi",
            vec![compatible.clone(), reversible.clone()],
            skew_pi.clone(),
            false,
        ),
        Implication::new(
            "proposition-sigma-delta",
            "sigma-compatible and sigma-delta-skew => skew-pi",
            vec![sigma_c.clone(), sd_skew],
            skew_pi.clone(),
            false,
        ),
        Implication::new(
            "proposition-sigma",
            "sigma-compatible and sigma-skew => skew-pi",
            vec![sigma_c, s_skew],
            skew_pi.clone(),
            false,
        ),
        Implication::new(
            "corollary",
            "sigma-rigid => skew-pi",
            vec![rigid.clone()],
            skew_pi.clone(),
            false,
        ),
        Implication::new(
            "conjecture",
            "compatible and skew => skew-pi",
            vec![compatible.clone(), skew],
            skew_pi,
            true,
        ),
        Implication::new(
            "rigid-reduced",
            "sigma-rigid => reduced",
            vec![rigid.clone()],
            reduced.clone(),
            false,
        ),
        Implication::new(
            "rigid-compatible",
            "sigma-rigid => compatible",
            vec![rigid],
            compatible,
            false,
        ),
        Implication::new(
            "reduced-reversible",
            "reduced => reversible",
            vec![reduced],
            reversible.clone(),
            false,
        ),
        Implication::new(
            "reversible-semicommutative",
            "reversible => semicommutative",
            vec![reversible],
            semicomm.clone(),
            false,
        ),
        Implication::new(
            "semicommutative-ni",
            "semicommutative => NI",
            vec![semicomm],
            ni,
            false,
        ),
    ])
}
