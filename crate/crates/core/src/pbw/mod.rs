//! Skew PBW extensions `A = sigma(R)<x_1, .., x_n>` over a finite ring.
//!
//! Elements are kept in normal form: left `R`-linear combinations of the
//! standard monomials `x_1^{a_1} .. x_n^{a_n}`. Multiplication rewrites with
//!
//! ```text
//! x_i r   = sigma_i(r) x_i + delta_i(r)
//! x_j x_i = c_ij x_i x_j + tail_ij          (i < j)
//! ```
//!
//! Tails may contain standard monomials of degree up to two, which the
//! quantum Weyl and Jordan plane presentations need. `ValidationReport`
//! records whether a presentation stays inside the linear-tail shape and
//! whether every tail is below `x_i x_j` in the chosen order.

mod monomial;
mod poly;
mod rewrite;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::finring::{Coverage, Elem, FiniteRing};
use crate::ringmaps::{FamilyError, MapAxiom, MapError, MapFamily, MapRole};

pub use monomial::{Monomial, MonomialOrder, OrderKind};
pub use poly::SkewPoly;

pub const DEFAULT_REWRITE_BUDGET: u64 = 1_000_000;

/// Scalars checked per variable pair when the base ring is too large to scan.
const SCALAR_SAMPLE: usize = 512;

/// The critical overlap a desk check compares.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Overlap {
    /// `x_k x_j x_i` with `i < j < k`.
    Variables { i: usize, j: usize, k: usize },
    /// `x_j x_i r` with `i < j`.
    Scalar { i: usize, j: usize, r: Elem },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PbwError {
    #[error("c_{{{},{}}} is not central (fails to commute with {witness})", .i + 1, .j + 1)]
    CentralityViolation { i: usize, j: usize, witness: String },
    #[error("c_{{{},{}}} = {value} is not a unit", .i + 1, .j + 1)]
    NonUnitConstant { i: usize, j: usize, value: String },
    #[error("sigma_{} is not injective: {} and {} have the same image", .index + 1, .witness.0, .witness.1)]
    InjectivityViolation { index: usize, witness: (Elem, Elem) },
    #[error("inconsistent presentation at {overlap_text}: {left_text} != {right_text}")]
    InconsistentPresentation {
        overlap: Overlap,
        overlap_text: String,
        left: SkewPoly,
        right: SkewPoly,
        left_text: String,
        right_text: String,
    },
    #[error("rewriting exceeded its budget of {budget} steps")]
    RewriteBudgetExceeded { budget: u64 },
    #[error(transparent)]
    Map(#[from] FamilyError),
    #[error("malformed presentation: {0}")]
    Shape(String),
}

/// Outcome of [`Extension::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Every tail lies in `R + R x_1 + .. + R x_n`.
    pub strict_pbw: bool,
    /// Every tail monomial is below `x_i x_j` in the extension's order, so
    /// leading terms multiply as in the associated graded ring.
    pub leading_compatible: bool,
    pub triples_checked: usize,
    pub scalar_checks: usize,
    pub scalar_coverage: Coverage,
}

/// Leading data of a polynomial; `lm = None` encodes `lm(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData {
    pub lm: Option<Monomial>,
    pub lc: Elem,
    pub deg: u32,
}

impl LeadingData {
    pub fn exp(&self) -> Option<&[u32]> {
        self.lm.as_ref().map(Monomial::alpha)
    }

    pub fn lt(&self) -> (Elem, Option<&Monomial>) {
        (self.lc, self.lm.as_ref())
    }
}

struct Inner {
    ring: FiniteRing,
    family: MapFamily,
    names: Vec<String>,
    order: MonomialOrder,
    /// `consts[i][j]`, `tails[i][j]` for `i < j`.
    consts: Vec<Vec<Elem>>,
    tails: Vec<Vec<SkewPoly>>,
    budget: u64,
    cache: RwLock<HashMap<(usize, Monomial), SkewPoly>>,
}

/// A presentation of a skew PBW extension together with its multiplication.
#[derive(Clone)]
pub struct Extension {
    inner: Arc<Inner>,
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Extension")
            .field("ring", &self.inner.ring.descriptor().to_string())
            .field("names", &self.inner.names)
            .field("order", &self.inner.order)
            .finish()
    }
}

pub struct ExtensionBuilder {
    ring: FiniteRing,
    n: usize,
    family: Option<MapFamily>,
    names: Option<Vec<String>>,
    order: Option<MonomialOrder>,
    relations: Vec<(usize, usize, Elem, SkewPoly)>,
    budget: u64,
}

impl ExtensionBuilder {
    pub fn new(ring: &FiniteRing, n: usize) -> Self {
        ExtensionBuilder {
            ring: ring.clone(),
            n,
            family: None,
            names: None,
            order: None,
            relations: Vec::new(),
            budget: DEFAULT_REWRITE_BUDGET,
        }
    }

    pub fn family(mut self, family: MapFamily) -> Self {
        self.family = Some(family);
        self
    }

    pub fn names(mut self, names: Vec<String>) -> Self {
        self.names = Some(names);
        self
    }

    pub fn order(mut self, order: MonomialOrder) -> Self {
        self.order = Some(order);
        self
    }

    /// `x_j x_i = c x_i x_j + tail` for zero-based `i < j`. Unspecified pairs
    /// default to `c = 1`, `tail = 0`.
    pub fn relation(mut self, i: usize, j: usize, c: Elem, tail: SkewPoly) -> Self {
        self.relations.push((i, j, c, tail));
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Assembles the extension, checking only shapes.
    pub fn build_unchecked(self) -> Result<Extension, PbwError> {
        let n = self.n;
        let ring = self.ring;
        let family = self.family.unwrap_or_else(|| MapFamily::constant(&ring, n));
        if family.len() != n {
            return Err(PbwError::Shape(format!(
                "{} variables but {} maps",
                n,
                family.len()
            )));
        }
        let names = self
            .names
            .unwrap_or_else(|| (1..=n).map(|i| format!("x{i}")).collect());
        if names.len() != n {
            return Err(PbwError::Shape(format!("{} names for {n} variables", names.len())));
        }
        let order = self.order.unwrap_or_else(|| MonomialOrder::deglex(n));
        if order.precedence().len() != n {
            return Err(PbwError::Shape("order precedence has the wrong length".into()));
        }
        let mut consts = vec![vec![ring.one(); n]; n];
        let mut tails = vec![vec![SkewPoly::zero(); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for (i, j, c, tail) in self.relations {
            if i >= j || j >= n {
                return Err(PbwError::Shape(format!(
                    "relation ({}, {}) needs 1 <= i < j <= {n}",
                    i + 1,
                    j + 1
                )));
            }
            if std::mem::replace(&mut seen[i][j], true) {
                return Err(PbwError::Shape(format!("relation ({}, {}) given twice", i + 1, j + 1)));
            }
            if tail.terms().any(|(m, _)| m.n() != n) {
                return Err(PbwError::Shape("tail monomial of the wrong length".into()));
            }
            let ij = Monomial::var(n, i).times(&Monomial::var(n, j));
            if tail.coeff(&ij).is_some() {
                return Err(PbwError::Shape(format!(
                    "tail of relation ({}, {}) contains {}",
                    i + 1,
                    j + 1,
                    ij.render(&names)
                )));
            }
            consts[i][j] = c;
            tails[i][j] = tail;
        }
        Ok(Extension {
            inner: Arc::new(Inner {
                ring,
                family,
                names,
                order,
                consts,
                tails,
                budget: self.budget,
                cache: RwLock::new(HashMap::new()),
            }),
        })
    }

    /// Assembles and validates.
    pub fn build(self) -> Result<Extension, PbwError> {
        let ext = self.build_unchecked()?;
        ext.validate()?;
        Ok(ext)
    }
}

/// Converts a family construction failure, singling out injectivity.
pub fn family_error(e: FamilyError) -> PbwError {
    match e {
        FamilyError {
            role: MapRole::Sigma,
            index,
            error:
                MapError::AxiomViolation {
                    axiom: MapAxiom::Injective,
                    witness,
                },
        } => PbwError::InjectivityViolation { index, witness },
        other => PbwError::Map(other),
    }
}

impl Extension {
    pub fn builder(ring: &FiniteRing, n: usize) -> ExtensionBuilder {
        ExtensionBuilder::new(ring, n)
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.inner.ring
    }

    pub fn family(&self) -> &MapFamily {
        &self.inner.family
    }

    pub fn n(&self) -> usize {
        self.inner.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.inner.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.inner.names.iter().position(|s| s == name)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.inner.order
    }

    pub fn budget(&self) -> u64 {
        self.inner.budget
    }

    /// `(c_ij, tail_ij)` for zero-based `i < j`.
    pub fn relation(&self, i: usize, j: usize) -> (Elem, &SkewPoly) {
        (self.inner.consts[i][j], &self.inner.tails[i][j])
    }

    /// The same presentation under another monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Extension, PbwError> {
        if order.precedence().len() != self.n() {
            return Err(PbwError::Shape("order precedence has the wrong length".into()));
        }
        let i = &self.inner;
        Ok(Extension {
            inner: Arc::new(Inner {
                ring: i.ring.clone(),
                family: i.family.clone(),
                names: i.names.clone(),
                order,
                consts: i.consts.clone(),
                tails: i.tails.clone(),
                budget: i.budget,
                cache: RwLock::new(HashMap::new()),
            }),
        })
    }

    /// The same data with one relation replaced, unvalidated.
    pub fn with_relation(&self, i: usize, j: usize, c: Elem, tail: SkewPoly) -> Extension {
        let inner = &self.inner;
        let mut consts = inner.consts.clone();
        let mut tails = inner.tails.clone();
        consts[i][j] = c;
        tails[i][j] = tail;
        Extension {
            inner: Arc::new(Inner {
                ring: inner.ring.clone(),
                family: inner.family.clone(),
                names: inner.names.clone(),
                order: inner.order.clone(),
                consts,
                tails,
                budget: inner.budget,
                cache: RwLock::new(HashMap::new()),
            }),
        }
    }

    pub(crate) fn cached(&self, i: usize, m: &Monomial) -> Option<SkewPoly> {
        let cache = self.inner.cache.read().expect("cache lock");
        cache.get(&(i, m.clone())).cloned()
    }

    pub(crate) fn remember(&self, i: usize, m: &Monomial, p: &SkewPoly) {
        let mut cache = self.inner.cache.write().expect("cache lock");
        cache.entry((i, m.clone())).or_insert_with(|| p.clone());
    }

    pub fn zero(&self) -> SkewPoly {
        SkewPoly::zero()
    }

    pub fn one(&self) -> SkewPoly {
        self.constant(self.ring().one())
    }

    pub fn constant(&self, r: Elem) -> SkewPoly {
        SkewPoly::term(self.ring(), Monomial::one(self.n()), r)
    }

    /// `r x^alpha`.
    pub fn term(&self, r: Elem, alpha: &[u32]) -> SkewPoly {
        SkewPoly::term(self.ring(), Monomial::new(alpha.to_vec()), r)
    }

    /// The variable `x_{i+1}`.
    pub fn var(&self, i: usize) -> SkewPoly {
        SkewPoly::term(self.ring(), Monomial::var(self.n(), i), self.ring().one())
    }

    pub fn poly(&self, terms: impl IntoIterator<Item = (Monomial, Elem)>) -> SkewPoly {
        SkewPoly::from_terms(self.ring(), terms)
    }

    pub fn add(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        f.add(self.ring(), g)
    }

    pub fn sub(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        f.sub(self.ring(), g)
    }

    pub fn scale_left(&self, r: Elem, f: &SkewPoly) -> SkewPoly {
        f.scale_left(self.ring(), r)
    }

    /// `x_i r = sigma_i(r) x_i + delta_i(r)`.
    pub fn x_times_r(&self, i: usize, r: Elem) -> SkewPoly {
        let fam = self.family();
        self.poly([
            (Monomial::var(self.n(), i), fam.sigma(i).apply(r)),
            (Monomial::one(self.n()), fam.delta(i).apply(r)),
        ])
    }

    /// `x^alpha r` from the explicit expansion, independent of [`Self::mul`].
    pub fn x_alpha_times_r(&self, alpha: &[u32], r: Elem) -> SkewPoly {
        rewrite::closed_form(self, alpha, r)
    }

    pub fn mul(&self, f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly, PbwError> {
        rewrite::Rewriter::new(self).mul(f, g)
    }

    /// `f^k` with `f^0 = 1`.
    pub fn pow(&self, f: &SkewPoly, k: u32) -> Result<SkewPoly, PbwError> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, f)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.inner.order.cmp(a, b)
    }

    pub fn leading(&self, f: &SkewPoly) -> LeadingData {
        match f.terms().max_by(|(a, _), (b, _)| self.cmp_monomials(a, b)) {
            None => LeadingData {
                lm: None,
                lc: self.ring().zero(),
                deg: 0,
            },
            Some((m, a)) => LeadingData {
                lm: Some(m.clone()),
                lc: a,
                deg: m.degree(),
            },
        }
    }

    /// Terms in ascending monomial order, `a_0 + a_1 X_1 + .. + a_m X_m`.
    pub fn sorted_terms<'a>(&self, f: &'a SkewPoly) -> Vec<(&'a Monomial, Elem)> {
        let mut t: Vec<_> = f.terms().collect();
        t.sort_by(|(a, _), (b, _)| self.cmp_monomials(a, b));
        t
    }

    /// Coefficient text, parenthesized when it would not read as one token.
    pub fn render_coeff(&self, a: Elem) -> String {
        let s = self.ring().display(a);
        if s.contains('+') || s.contains('-') || s.contains(' ') {
            format!("({s})")
        } else {
            s
        }
    }

    /// Ascending normal form, e.g. `1 + x1*d1` or `2*x1^2 + [[0,1],[0,0]]*x2`.
    pub fn render(&self, f: &SkewPoly) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let one = self.ring().one();
        let parts: Vec<String> = self
            .sorted_terms(f)
            .into_iter()
            .map(|(m, a)| match (m.is_one(), a == one) {
                (true, _) => self.render_coeff(a),
                (false, true) => m.render(self.names()),
                (false, false) => format!("{}*{}", self.render_coeff(a), m.render(self.names())),
            })
            .collect();
        parts.join(" + ")
    }

    /// Checks the constants, the sigmas and the critical overlaps.
    pub fn validate(&self) -> Result<ValidationReport, PbwError> {
        let ring = self.ring();
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                let c = self.inner.consts[i][j];
                if let Some(w) = ring.centrality_witness(c) {
                    return Err(PbwError::CentralityViolation {
                        i,
                        j,
                        witness: ring.display(w),
                    });
                }
                if ring.unit_inverse(c).is_none() {
                    return Err(PbwError::NonUnitConstant {
                        i,
                        j,
                        value: ring.display(c),
                    });
                }
            }
        }
        for (index, s) in self.family().sigmas().iter().enumerate() {
            let mut pre = vec![None; ring.size()];
            for a in ring.elements() {
                if let Some(b) = pre[s.apply(a)] {
                    return Err(PbwError::InjectivityViolation {
                        index,
                        witness: (b, a),
                    });
                }
                pre[s.apply(a)] = Some(a);
            }
        }
        let mut triples = 0;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    triples += 1;
                    let (xi, xj, xk) = (self.var(i), self.var(j), self.var(k));
                    let left = self.mul(&xk, &self.mul(&xj, &xi)?)?;
                    let right = self.mul(&self.mul(&xk, &xj)?, &xi)?;
                    self.compare(Overlap::Variables { i, j, k }, left, right)?;
                }
            }
        }
        let (scalars, coverage): (Vec<Elem>, Coverage) = if ring.is_small() {
            (ring.elements().collect(), Coverage::Exhaustive)
        } else {
            (
                ring.sample_stream(0).take(SCALAR_SAMPLE).collect(),
                Coverage::Sampled {
                    seed: 0,
                    samples: SCALAR_SAMPLE,
                },
            )
        };
        let mut scalar_checks = 0;
        for i in 0..n {
            for j in i + 1..n {
                let ji = self.mul(&self.var(j), &self.var(i))?;
                for &r in &scalars {
                    scalar_checks += 1;
                    let left = self.mul(&self.var(j), &self.x_times_r(i, r))?;
                    let right = self.mul(&ji, &self.constant(r))?;
                    self.compare(Overlap::Scalar { i, j, r }, left, right)?;
                }
            }
        }
        let mut strict_pbw = true;
        let mut leading_compatible = true;
        for i in 0..n {
            for j in i + 1..n {
                let ij = Monomial::var(n, i).times(&Monomial::var(n, j));
                for (m, _) in self.inner.tails[i][j].terms() {
                    strict_pbw &= m.degree() <= 1;
                    leading_compatible &= self.cmp_monomials(m, &ij) == Ordering::Less;
                }
            }
        }
        Ok(ValidationReport {
            strict_pbw,
            leading_compatible,
            triples_checked: triples,
            scalar_checks,
            scalar_coverage: coverage,
        })
    }

    fn compare(&self, overlap: Overlap, left: SkewPoly, right: SkewPoly) -> Result<(), PbwError> {
        if left == right {
            return Ok(());
        }
        let name = |i: usize| self.names()[i].clone();
        let overlap_text = match &overlap {
            Overlap::Variables { i, j, k } => format!("{}*{}*{}", name(*k), name(*j), name(*i)),
            Overlap::Scalar { i, j, r } => {
                format!("{}*{}*{}", name(*j), name(*i), self.render_coeff(*r))
            }
        };
        Err(PbwError::InconsistentPresentation {
            overlap,
            overlap_text,
            left_text: self.render(&left),
            right_text: self.render(&right),
            left,
            right,
        })
    }
}

#[cfg(test)]
mod tests;
