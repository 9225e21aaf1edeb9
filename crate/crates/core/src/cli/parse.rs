//! Polynomial text.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := piece ('*' piece)*
//! piece  := var ('^' int)? | coeff
//! ```
//!
//! Coefficients use the ring's display syntax; ones containing `+` or `-`
//! are written in parentheses, e.g. `(1+t)*x1`. Pieces are multiplied left to
//! right in the extension, so `d1*x1` and `x1*t` are normalized.

use thiserror::Error;

use crate::finring::{split_top_level, Elem, FiniteRing};
use crate::pbw::{Extension, Monomial, PbwError, SkewPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("parse error in {text:?}: {reason}")]
    Syntax { text: String, reason: String },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("bad coefficient {text:?}: {reason}")]
    BadCoefficient { text: String, reason: String },
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

enum Piece {
    Var(usize, u32),
    Coeff(Elem),
}

fn syntax(text: &str, reason: impl Into<String>) -> PolyParseError {
    PolyParseError::Syntax {
        text: text.to_string(),
        reason: reason.into(),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_coeff(ring: &FiniteRing, text: &str) -> Result<Elem, PolyParseError> {
    match ring.parse_element(text) {
        Ok(a) => Ok(a),
        Err(first) => {
            let inner = text
                .strip_prefix('(')
                .and_then(|t| t.strip_suffix(')'))
                .map(|t| ring.parse_element(t));
            match inner {
                Some(Ok(a)) => Ok(a),
                _ => Err(PolyParseError::BadCoefficient {
                    text: text.to_string(),
                    reason: first.to_string(),
                }),
            }
        }
    }
}

fn parse_piece(ring: &FiniteRing, names: &[String], text: &str) -> Result<Piece, PolyParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(syntax(text, "empty factor"));
    }
    let (base, exp) = match split_top_level(text, '^').as_slice() {
        [b] => (b.trim(), None),
        [b, e] => (b.trim(), Some(e.trim())),
        _ => return Err(syntax(text, "repeated '^'")),
    };
    if let Some(i) = names.iter().position(|n| n == base) {
        let k = match exp {
            None => 1,
            Some(e) => e
                .parse::<u32>()
                .map_err(|_| syntax(text, "exponent must be a nonnegative integer"))?,
        };
        return Ok(Piece::Var(i, k));
    }
    if exp.is_some() {
        return if is_identifier(base) {
            Err(PolyParseError::UnknownVariable(base.to_string()))
        } else {
            Err(syntax(text, "only variables take exponents"))
        };
    }
    match parse_coeff(ring, text) {
        Ok(a) => Ok(Piece::Coeff(a)),
        Err(_) if is_identifier(text) => Err(PolyParseError::UnknownVariable(text.to_string())),
        Err(e) => Err(e),
    }
}

fn terms(text: &str) -> Result<Vec<&str>, PolyParseError> {
    if text.trim().is_empty() {
        return Err(syntax(text, "empty expression"));
    }
    let parts = split_top_level(text, '+');
    if parts.iter().any(|t| t.trim().is_empty()) {
        return Err(syntax(text, "empty term"));
    }
    Ok(parts)
}

/// Parses `text` and multiplies each term out in `ext`.
pub fn parse_poly(text: &str, ext: &Extension) -> Result<SkewPoly, PolyParseError> {
    let ring = ext.ring();
    let mut acc = ext.zero();
    for term in terms(text)? {
        let mut prod = ext.one();
        for piece in split_top_level(term, '*') {
            let factor = match parse_piece(ring, ext.names(), piece)? {
                Piece::Var(i, k) => {
                    let mut alpha = vec![0; ext.n()];
                    alpha[i] = k;
                    ext.term(ring.one(), &alpha)
                }
                Piece::Coeff(a) => ext.constant(a),
            };
            prod = ext.mul(&prod, &factor)?;
        }
        acc = ext.add(&acc, &prod);
    }
    Ok(acc)
}

/// Parses a polynomial already in normal form, without an extension: at
/// most one leading coefficient per term and variables in PBW order.
pub fn parse_normal_form(
    text: &str,
    ring: &FiniteRing,
    names: &[String],
) -> Result<SkewPoly, PolyParseError> {
    let mut out = Vec::new();
    for term in terms(text)? {
        let mut alpha = vec![0u32; names.len()];
        let mut coeff = ring.one();
        let mut last: Option<usize> = None;
        for (pos, piece) in split_top_level(term, '*').into_iter().enumerate() {
            match parse_piece(ring, names, piece)? {
                Piece::Coeff(a) if pos == 0 => coeff = a,
                Piece::Coeff(_) => {
                    return Err(syntax(term, "a coefficient may only lead its term"));
                }
                Piece::Var(i, k) => {
                    if last.is_some_and(|l| l >= i) {
                        return Err(syntax(term, "variables must appear in PBW order"));
                    }
                    last = Some(i);
                    alpha[i] = k;
                }
            }
        }
        out.push((Monomial::new(alpha), coeff));
    }
    Ok(SkewPoly::from_terms(ring, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::RingDescriptor;
    use crate::presets::{build_preset, PresetParams};

    fn z4(n: usize) -> Extension {
        let r = FiniteRing::modular(4);
        Extension::builder(&r, n).build().unwrap()
    }

    #[test]
    fn constant_and_linear() {
        let e = z4(2);
        let f = parse_poly("2 + 2*x1", &e).unwrap();
        assert_eq!(f, e.add(&e.constant(2), &e.term(2, &[1, 0])));
        assert_eq!(parse_poly("x2*x1^2 + 3", &e).unwrap(), e.add(&e.term(1, &[2, 1]), &e.constant(3)));
    }

    #[test]
    fn weyl_reorders() {
        let p = build_preset("quantum_weyl", &PresetParams::modulus(5)).unwrap();
        let f = parse_poly("d1*x1", &p.ext).unwrap();
        assert_eq!(p.ext.render(&f), "1 + x1*d1");
    }

    #[test]
    fn errors() {
        let e = z4(2);
        assert_eq!(parse_poly("x9", &e), Err(PolyParseError::UnknownVariable("x9".into())));
        assert!(matches!(parse_poly("(1,0)*x1", &e), Err(PolyParseError::BadCoefficient { .. })));
        assert!(matches!(parse_poly("x1 + ", &e), Err(PolyParseError::Syntax { .. })));
        assert!(matches!(parse_poly("x1^-1", &e), Err(PolyParseError::Syntax { .. })));
    }

    #[test]
    fn compound_coefficients() {
        let r = FiniteRing::build(&RingDescriptor::dual(3)).unwrap();
        let e = Extension::builder(&r, 1).build().unwrap();
        let f = parse_poly("(1+t)*x1 + 2t", &e).unwrap();
        assert_eq!(e.render(&f), "2t + (1+t)*x1");
        assert_eq!(parse_poly(&e.render(&f), &e).unwrap(), f);
        let m = FiniteRing::build(&RingDescriptor::matrix(2, 2)).unwrap();
        let e = Extension::builder(&m, 1).build().unwrap();
        let f = parse_poly("[[1,0],[0,0]] + [[0,1],[0,0]]*x1", &e).unwrap();
        assert_eq!(f.len(), 2);
    }

    #[test]
    fn normal_form_tails() {
        let r = FiniteRing::modular(5);
        let names: Vec<String> = ["x1", "x2", "x3"].map(String::from).to_vec();
        let f = parse_normal_form("1 + 2*x1*x3", &r, &names).unwrap();
        assert_eq!(f.len(), 2);
        assert!(parse_normal_form("x3*x1", &r, &names).is_err());
        assert!(parse_normal_form("x1*2", &r, &names).is_err());
    }
}
