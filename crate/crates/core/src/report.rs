//! Outcomes of property checks.

use std::fmt;

use crate::finring::Elem;
use crate::nilarmendariz::SearchBound;
use crate::pbw::{Monomial, SkewPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Decided exactly over the whole quantified (finite) space.
    Holds,
    /// No counterexample within the recorded search bound or sample.
    HoldsAtBound,
    /// A witness was found.
    Fails,
    /// A cap was hit before the check could finish.
    UndecidedAtCap,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::HoldsAtBound => "holds_at_bound",
            Verdict::Fails => "fails",
            Verdict::UndecidedAtCap => "undecided_at_cap",
        }
    }

    pub fn holds(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::HoldsAtBound)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which coefficient product an Armendariz-type conclusion is about.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermPair {
    /// Monomial `X_i` of `f` and its coefficient `a_i`.
    pub left: (Monomial, Elem),
    /// Monomial `Y_j` of `g` and its coefficient `b_j`.
    pub right: (Monomial, Elem),
}

/// A concrete counterexample carried by a failing report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `a * sigma^alpha(b) = 0` disagrees with `ab = 0`.
    SigmaCompatibility { alpha: Vec<u32>, a: Elem, b: Elem },
    /// `ab = 0` but `a * d(b) != 0` for the delta word `d`.
    DeltaCompatibility { word: Vec<usize>, a: Elem, b: Elem },
    /// `a * sigma^alpha(a) = 0` with `a != 0`.
    Rigidity { alpha: Vec<u32>, a: Elem },
    /// `f`, `g` satisfy the variant's premise but the coefficient pair
    /// violates its conclusion; `offending` is the product that should
    /// vanish (or be nilpotent).
    Armendariz {
        f: SkewPoly,
        g: SkewPoly,
        pair: TermPair,
        offending: SkewPoly,
    },
    /// `ab` nilpotent, but `a * sigma^alpha(d(b))` (or `a * d(sigma^alpha(b))`
    /// when `delta_inner` is false) is not.
    NilStability {
        alpha: Vec<u32>,
        word: Vec<usize>,
        a: Elem,
        b: Elem,
        delta_inner: bool,
    },
    /// `a * sigma^alpha(b)` nilpotent but `ab` not.
    NilPullback { alpha: Vec<u32>, a: Elem, b: Elem },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub bound: Option<SearchBound>,
    /// Tuples (pairs of polynomials, element pairs, ...) examined; for failing
    /// reports, the position of the witness in enumeration order.
    pub work_count: u64,
    pub notes: Vec<String>,
}

impl PropertyReport {
    pub fn new(property: impl Into<String>, verdict: Verdict) -> Self {
        PropertyReport {
            property: property.into(),
            verdict,
            witness: None,
            bound: None,
            work_count: 0,
            notes: Vec::new(),
        }
    }

    pub fn failing(property: impl Into<String>, witness: Witness, work_count: u64) -> Self {
        PropertyReport {
            witness: Some(witness),
            work_count,
            ..PropertyReport::new(property, Verdict::Fails)
        }
    }

    pub fn with_work(mut self, work_count: u64) -> Self {
        self.work_count = work_count;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }
}

pub(crate) fn fmt_alpha(alpha: &[u32]) -> String {
    let parts: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
    format!("sigma^({})", parts.join(","))
}

pub(crate) fn fmt_delta_word(word: &[usize]) -> String {
    let parts: Vec<String> = word.iter().map(|i| format!("delta{}", i + 1)).collect();
    parts.join("∘")
}
