//! The two routes to normal forms.
//!
//! [`Rewriter`] multiplies by reducing one adjacent pair at a time: a variable
//! passing a coefficient uses `x_i r = sigma_i(r) x_i + delta_i(r)`, two
//! variables out of order use `x_j x_i = c_ij x_i x_j + tail_ij`. Results of
//! `x_i * x^alpha` do not depend on coefficients and are memoized on the
//! extension.
//!
//! [`closed_form`] evaluates `x^alpha r` by the explicit nested sum
//! over levels `k = n..1` without touching any variable-variable relation.

use super::{Extension, Monomial, PbwError, SkewPoly};
use crate::finring::Elem;

/// Recursion guard on top of the step budget.
const MAX_DEPTH: usize = 4096;

pub(crate) struct Rewriter<'a> {
    ext: &'a Extension,
    steps: u64,
    depth: usize,
}

impl<'a> Rewriter<'a> {
    pub(crate) fn new(ext: &'a Extension) -> Self {
        Rewriter {
            ext,
            steps: 0,
            depth: 0,
        }
    }

    fn tick(&mut self) -> Result<(), PbwError> {
        self.steps += 1;
        if self.steps > self.ext.budget() || self.depth > MAX_DEPTH {
            return Err(PbwError::RewriteBudgetExceeded {
                budget: self.ext.budget(),
            });
        }
        Ok(())
    }

    /// `x_i * x^alpha` in normal form.
    pub(crate) fn var_times_monomial(&mut self, i: usize, m: &Monomial) -> Result<SkewPoly, PbwError> {
        let ring = self.ext.ring();
        let j = match m.first_var() {
            Some(j) if j < i => j,
            _ => return Ok(SkewPoly::term(ring, m.bump(i, 1), ring.one())),
        };
        if let Some(p) = self.ext.cached(i, m) {
            return Ok(p);
        }
        self.tick()?;
        self.depth += 1;
        // x_i x_j x^beta = c_ji x_j (x_i x^beta) + tail_ji x^beta
        let beta = m.bump(j, -1);
        let ext = self.ext;
        let (c, tail) = ext.relation(j, i);
        let inner = self.var_times_monomial(i, &beta)?;
        let mut out = self.var_times_poly(j, &inner)?.scale_left(ring, c);
        let beta_poly = SkewPoly::term(ring, beta, ring.one());
        let t = self.mul(tail, &beta_poly)?;
        out.add_scaled(ring, ring.one(), &t);
        self.depth -= 1;
        self.ext.remember(i, m, &out);
        Ok(out)
    }

    /// `x_i * p`.
    pub(crate) fn var_times_poly(&mut self, i: usize, p: &SkewPoly) -> Result<SkewPoly, PbwError> {
        let ring = self.ext.ring();
        let (sigma, delta) = (self.ext.family().sigma(i), self.ext.family().delta(i));
        let mut out = SkewPoly::zero();
        for (m, b) in p.terms() {
            self.tick()?;
            let sb = sigma.apply(b);
            if sb != ring.zero() {
                let q = self.var_times_monomial(i, m)?;
                out.add_scaled(ring, sb, &q);
            }
            out.add_term(ring, m.clone(), delta.apply(b));
        }
        Ok(out)
    }

    /// `x^alpha * p`, applying `x_n` first.
    pub(crate) fn monomial_times_poly(&mut self, m: &Monomial, p: &SkewPoly) -> Result<SkewPoly, PbwError> {
        let mut acc = p.clone();
        for (i, &e) in m.alpha().iter().enumerate().rev() {
            for _ in 0..e {
                acc = self.var_times_poly(i, &acc)?;
            }
        }
        Ok(acc)
    }

    pub(crate) fn mul(&mut self, f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly, PbwError> {
        let ring = self.ext.ring();
        let mut out = SkewPoly::zero();
        if g.is_zero() {
            return Ok(out);
        }
        for (m, a) in f.terms() {
            let q = self.monomial_times_poly(m, g)?;
            out.add_scaled(ring, a, &q);
        }
        Ok(out)
    }
}

/// `x^alpha r` by the explicit expansion. Every summand is already a standard
/// monomial: the recursive part only involves variables up to level `k`, and
/// it is followed by `x_k^{j-1} x_{k+1}^{alpha_{k+1}} .. x_n^{alpha_n}`.
pub(crate) fn closed_form(ext: &Extension, alpha: &[u32], r: Elem) -> SkewPoly {
    let ring = ext.ring();
    let fam = ext.family();
    let n = alpha.len();
    let mut out = SkewPoly::zero();
    if r == ring.zero() {
        return out;
    }
    out.add_term(ring, Monomial::new(alpha.to_vec()), fam.apply_sigma_power(alpha, r));
    for k in (0..n).rev() {
        if alpha[k] == 0 {
            continue;
        }
        let mut tail_alpha = vec![0; n];
        tail_alpha[k + 1..].copy_from_slice(&alpha[k + 1..]);
        let s_k = fam.apply_sigma_power(&tail_alpha, r);
        let mut sig = s_k;
        for j in 1..=alpha[k] {
            // sig = sigma_k^{j-1}(s_k)
            let d = fam.delta(k).apply(sig);
            sig = fam.sigma(k).apply(sig);
            if d == ring.zero() {
                continue;
            }
            let mut prefix = alpha.to_vec();
            prefix[k] = alpha[k] - j;
            prefix[k + 1..].iter_mut().for_each(|e| *e = 0);
            let mut suffix = tail_alpha.clone();
            suffix[k] = j - 1;
            let part = closed_form(ext, &prefix, d).shift(&Monomial::new(suffix));
            out.add_scaled(ring, ring.one(), &part);
        }
    }
    out
}
