//! Independent recomputation of reported witnesses.

use super::{is_nilpotent_poly_oracle, ArmendarizVariant};
use crate::pbw::{Extension, SkewPoly};
use crate::report::Witness;

/// Recomputes the defining condition behind `w` on `ext` and returns `true`
/// when the violation reproduces. `variant` is needed for Armendariz
/// witnesses and ignored otherwise.
pub fn reverify_witness(ext: &Extension, w: &Witness, variant: Option<ArmendarizVariant>) -> bool {
    let ring = ext.ring();
    let fam = ext.family();
    let z = ring.zero();
    let nil = |x| ring.is_nilpotent(x);
    match w {
        Witness::SigmaCompatibility { alpha, a, b } => {
            (ring.mul(*a, fam.apply_sigma_power(alpha, *b)) == z) != (ring.mul(*a, *b) == z)
        }
        Witness::DeltaCompatibility { word, a, b } => {
            ring.mul(*a, *b) == z && ring.mul(*a, fam.apply_delta_word(word, *b)) != z
        }
        Witness::Rigidity { alpha, a } => {
            *a != z && ring.mul(*a, fam.apply_sigma_power(alpha, *a)) == z
        }
        Witness::NilStability {
            alpha,
            word,
            a,
            b,
            delta_inner,
        } => {
            let v = if *delta_inner {
                fam.apply_sigma_power(alpha, fam.apply_delta_word(word, *b))
            } else {
                fam.apply_delta_word(word, fam.apply_sigma_power(alpha, *b))
            };
            nil(ring.mul(*a, *b)) && !nil(ring.mul(*a, v))
        }
        Witness::NilPullback { alpha, a, b } => {
            nil(ring.mul(*a, fam.apply_sigma_power(alpha, *b))) && !nil(ring.mul(*a, *b))
        }
        Witness::Armendariz {
            f,
            g,
            pair,
            offending,
        } => {
            let Some(variant) = variant else { return false };
            let (xi, ai) = (&pair.left.0, pair.left.1);
            let (yj, bj) = (&pair.right.0, pair.right.1);
            if f.coeff(xi).unwrap_or(z) != ai || g.coeff(yj).unwrap_or(z) != bj {
                return false;
            }
            let Ok(fg) = ext.mul(f, g) else { return false };
            match variant {
                ArmendarizVariant::SkewPi => {
                    let premise = is_nilpotent_poly_oracle(ext, &fg)
                        .map(|v| v.nilpotent)
                        .unwrap_or(false);
                    let p = ring.mul(ai, bj);
                    premise && !nil(p) && *offending == ext.constant(p)
                }
                ArmendarizVariant::SigmaDeltaSkew => {
                    let l = SkewPoly::term(ring, xi.clone(), ai);
                    let r = SkewPoly::term(ring, yj.clone(), bj);
                    let Ok(p) = ext.mul(&l, &r) else { return false };
                    fg.is_zero() && !p.is_zero() && *offending == p
                }
                ArmendarizVariant::SigmaSkew => {
                    let p = ring.mul(ai, fam.apply_sigma_power(xi.alpha(), bj));
                    fg.is_zero() && p != z && *offending == ext.constant(p)
                }
                ArmendarizVariant::Skew => {
                    let p = ring.mul(ai, bj);
                    fg.is_zero() && xi.is_one() && p != z && *offending == ext.constant(p)
                }
            }
        }
    }
}
