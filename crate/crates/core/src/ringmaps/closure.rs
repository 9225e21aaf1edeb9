//! Finite function-monoid closures of the sigma and delta families.
//!
//! Every self-map of a finite ring has eventually periodic powers, so the set
//! `{sigma^alpha : alpha in N^n}` is finite and can be enumerated by walking
//! the distinct powers of each `sigma_i`. The delta side is closed under all
//! nonempty words in `delta_1..delta_n`.

use std::collections::HashMap;

use thiserror::Error;

use super::MapFamily;
use crate::finring::{Elem, FiniteRing};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{which} closure exceeded {cap} distinct maps")]
pub struct ClosureCapExceeded {
    pub which: &'static str,
    pub cap: usize,
}

/// Distinct map tables, each with one word that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidClosure<W> {
    maps: Vec<Vec<Elem>>,
    certificates: Vec<W>,
    index: HashMap<Vec<Elem>, usize>,
}

/// Certificates are exponent vectors `alpha`.
pub type SigmaClosure = MonoidClosure<Vec<u32>>;
/// Certificates are delta words `[i_1, .., i_l]` meaning
/// `delta_{i_1} ∘ .. ∘ delta_{i_l}`.
pub type DeltaClosure = MonoidClosure<Vec<usize>>;

impl<W: Clone> MonoidClosure<W> {
    fn empty() -> Self {
        MonoidClosure {
            maps: Vec::new(),
            certificates: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn insert(&mut self, table: Vec<Elem>, word: W) -> bool {
        if self.index.contains_key(&table) {
            return false;
        }
        self.index.insert(table.clone(), self.maps.len());
        self.maps.push(table);
        self.certificates.push(word);
        true
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn contains(&self, table: &[Elem]) -> bool {
        self.index.contains_key(table)
    }

    pub fn tables(&self) -> &[Vec<Elem>] {
        &self.maps
    }

    pub fn certificate(&self, i: usize) -> &W {
        &self.certificates[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[Elem], &W)> {
        self.maps
            .iter()
            .map(Vec::as_slice)
            .zip(self.certificates.iter())
    }
}

fn compose(outer: &[Elem], inner: &[Elem]) -> Vec<Elem> {
    inner.iter().map(|&a| outer[a]).collect()
}

/// All distinct `sigma^alpha`, built innermost-first: start from the powers of
/// `sigma_n`, then prepend powers of `sigma_{n-1}`, and so on.
pub fn sigma_closure(
    ring: &FiniteRing,
    family: &MapFamily,
    cap: usize,
) -> Result<SigmaClosure, ClosureCapExceeded> {
    let n = family.len();
    let mut current = SigmaClosure::empty();
    current.insert(ring.elements().collect(), vec![0; n]);
    for k in (0..n).rev() {
        let powers = distinct_powers(family.sigma(k).table(), cap)?;
        let mut next = SigmaClosure::empty();
        for (e, p) in powers.iter().enumerate() {
            for (s, alpha) in current.iter() {
                let mut word = alpha.clone();
                word[k] = e as u32;
                next.insert(compose(p, s), word);
                if next.len() > cap {
                    return Err(ClosureCapExceeded { which: "sigma", cap });
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// `[id, m, m^2, ..]` up to the first repeated table.
fn distinct_powers(m: &[Elem], cap: usize) -> Result<Vec<Vec<Elem>>, ClosureCapExceeded> {
    let mut seen = HashMap::new();
    let mut powers = Vec::new();
    let mut p: Vec<Elem> = (0..m.len()).collect();
    while !seen.contains_key(&p) {
        if powers.len() >= cap {
            return Err(ClosureCapExceeded { which: "sigma", cap });
        }
        seen.insert(p.clone(), powers.len());
        powers.push(p.clone());
        p = compose(m, &p);
    }
    Ok(powers)
}

/// All distinct composites of nonempty words in the deltas (breadth first, so
/// certificates are shortest words).
pub fn delta_closure(
    family: &MapFamily,
    cap: usize,
) -> Result<DeltaClosure, ClosureCapExceeded> {
    let mut closure = DeltaClosure::empty();
    for i in 0..family.len() {
        closure.insert(family.delta(i).table().to_vec(), vec![i]);
    }
    let mut head = 0;
    while head < closure.len() {
        let (table, word) = (closure.maps[head].clone(), closure.certificates[head].clone());
        for i in 0..family.len() {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(i);
            w.extend_from_slice(&word);
            closure.insert(compose(family.delta(i).table(), &table), w);
            if closure.len() > cap {
                return Err(ClosureCapExceeded { which: "delta", cap });
            }
        }
        head += 1;
    }
    Ok(closure)
}

pub fn compatibility_closure(
    ring: &FiniteRing,
    family: &MapFamily,
    cap: usize,
) -> Result<(SigmaClosure, DeltaClosure), ClosureCapExceeded> {
    Ok((sigma_closure(ring, family, cap)?, delta_closure(family, cap)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::RingDescriptor;
    use crate::ringmaps::RingMap;

    fn swap_family() -> (FiniteRing, MapFamily) {
        let r = FiniteRing::build(&RingDescriptor::Product(vec![
            RingDescriptor::Modular(2),
            RingDescriptor::Modular(2),
        ]))
        .unwrap();
        let fam = MapFamily::new(
            &r,
            vec![RingMap::coordinate_swap(&r).unwrap()],
            vec![RingMap::zero_derivation(&r, 0)],
        )
        .unwrap();
        (r, fam)
    }

    #[test]
    fn identity_family_closures() {
        let r = FiniteRing::modular(4);
        let fam = MapFamily::constant(&r, 2);
        let (s, d) = compatibility_closure(&r, &fam, DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.certificate(0), &vec![0, 0]);
        assert_eq!(d.len(), 1);
        assert!(d.tables()[0].iter().all(|&x| x == 0));
    }

    #[test]
    fn swap_closure_is_id_and_swap() {
        let (r, fam) = swap_family();
        let (s, _) = compatibility_closure(&r, &fam, DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.contains(&[0, 1, 2, 3]));
        assert!(s.contains(fam.sigma(0).table()));
        assert_eq!(s.certificate(1), &vec![1]);
    }

    #[test]
    fn cap_is_enforced() {
        let (r, fam) = swap_family();
        assert!(sigma_closure(&r, &fam, 1).is_err());
    }

    #[test]
    fn derivative_closure_on_dual_numbers() {
        let r = FiniteRing::build(&RingDescriptor::dual(2)).unwrap();
        let fam = MapFamily::new(
            &r,
            vec![RingMap::identity(&r)],
            vec![RingMap::formal_derivative(&r, 0).unwrap()],
        )
        .unwrap();
        let d = delta_closure(&fam, DEFAULT_CLOSURE_CAP).unwrap();
        // d/dt and (d/dt)^2 = 0.
        assert_eq!(d.len(), 2);
        assert_eq!(d.certificate(1), &vec![0, 0]);
    }
}
