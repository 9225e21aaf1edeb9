//! Finite unital rings.
//!
//! A [`FiniteRing`] is a carrier `{0, .., N-1}` of element indices together with
//! addition and multiplication. Structured backends (integers modulo `n`, direct
//! products, matrix rings, dual numbers) compute operations from the element
//! encoding; rings up to the exhaustive cap additionally carry materialized
//! operation tables so that the hot loops of the checkers are plain lookups.
//!
//! Element indices of composite backends are little-endian mixed-radix
//! encodings: the first product factor (resp. the `(0,0)` matrix entry, the
//! constant part of a dual number) is the least significant digit. Witness
//! searches scan indices in increasing order, so this encoding fixes which
//! witness is reported first.

mod classes;
mod element;

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use classes::{check_ring_class, ClassWitness, Coverage, RingClass, RingClassVerdict};
pub(crate) use element::split_top_level;

/// Index of an element in its ring's carrier.
pub type Elem = usize;

/// Default number of elements up to which rings materialize tables and
/// property checks run exhaustively.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 256;

/// Largest carrier accepted by [`FiniteRing::build`].
pub const DEFAULT_MAX_SIZE: usize = 1 << 16;

/// Number of random tuples examined by sampled checks above the cap.
pub const SAMPLED_TUPLES: usize = 1 << 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RingDescriptor {
    /// Integers modulo `n`.
    Modular(u64),
    /// Direct product of the listed rings.
    Product(Vec<RingDescriptor>),
    /// `size x size` matrices over the integers modulo `base`.
    Matrix { size: usize, base: u64 },
    /// Dual numbers `Z/n[t]/(t^2)`.
    Dual(u64),
    /// Explicit operation tables.
    Tables {
        size: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        zero: usize,
        one: usize,
    },
}

impl RingDescriptor {
    /// The ring `Z/p[t]/(t^2)` (for `p` prime, `F_p[t]/(t^2)`).
    pub fn dual(p: u64) -> Self {
        RingDescriptor::Dual(p)
    }

    pub fn matrix(size: usize, base: u64) -> Self {
        RingDescriptor::Matrix { size, base }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Modular(n) => write!(f, "Z/{n}"),
            RingDescriptor::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    if matches!(p, RingDescriptor::Product(_)) {
                        write!(f, "({p})")?;
                    } else {
                        write!(f, "{p}")?;
                    }
                }
                Ok(())
            }
            RingDescriptor::Matrix { size, base } => write!(f, "M{size}(Z/{base})"),
            RingDescriptor::Dual(n) => write!(f, "Z/{n}[t]/(t^2)"),
            RingDescriptor::Tables { size, .. } => write!(f, "tables({size})"),
        }
    }
}

/// Ring axiom named in an [`RingError::AxiomViolation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RingAxiom {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    MulIdentity,
    LeftDistributive,
    RightDistributive,
    ZeroIsNotOne,
}

impl fmt::Display for RingAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RingAxiom::AddAssociative => "additive associativity",
            RingAxiom::AddCommutative => "additive commutativity",
            RingAxiom::AddIdentity => "additive identity",
            RingAxiom::AddInverse => "additive inverse",
            RingAxiom::MulAssociative => "multiplicative associativity",
            RingAxiom::MulIdentity => "multiplicative identity",
            RingAxiom::LeftDistributive => "left distributivity",
            RingAxiom::RightDistributive => "right distributivity",
            RingAxiom::ZeroIsNotOne => "zero distinct from one",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring axiom violated: {axiom} at ({}, {}, {})", .witness.0, .witness.1, .witness.2)]
    AxiomViolation {
        axiom: RingAxiom,
        witness: (Elem, Elem, Elem),
    },
    #[error("ring of {size} elements exceeds the size cap {cap}")]
    SizeCapExceeded { size: u128, cap: usize },
    #[error("invalid ring descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("cannot parse ring element {text:?}: {reason}")]
    BadElement { text: String, reason: String },
}

#[derive(Debug)]
enum Backend {
    Modular { n: usize },
    Product { factors: Vec<FiniteRing>, radix: Vec<usize> },
    Matrix { k: usize, p: usize },
    Dual { n: usize },
    Tables,
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

#[derive(Debug)]
struct NilInfo {
    index: Vec<Option<u32>>,
}

#[derive(Debug)]
struct RingInner {
    descriptor: RingDescriptor,
    size: usize,
    cap: usize,
    zero: Elem,
    one: Elem,
    backend: Backend,
    tables: Option<Tables>,
    nil: OnceLock<NilInfo>,
}

/// A finite unital ring. Cheap to clone; immutable after construction.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    inner: Arc<RingInner>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.descriptor == other.inner.descriptor
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn build(descriptor: &RingDescriptor) -> Result<Self, RingError> {
        Self::build_with_limits(descriptor, DEFAULT_EXHAUSTIVE_CAP, DEFAULT_MAX_SIZE)
    }

    pub fn modular(n: u64) -> Self {
        Self::build(&RingDescriptor::Modular(n)).expect("modular ring")
    }

    /// Builds a ring with an explicit exhaustive-check cap and size limit.
    pub fn build_with_limits(
        descriptor: &RingDescriptor,
        cap: usize,
        max_size: usize,
    ) -> Result<Self, RingError> {
        let size = descriptor_size(descriptor)?;
        if size > max_size as u128 {
            return Err(RingError::SizeCapExceeded {
                size,
                cap: max_size,
            });
        }
        let size = size as usize;
        let (backend, zero, one) = match descriptor {
            RingDescriptor::Modular(n) => (Backend::Modular { n: *n as usize }, 0, 1 % size),
            RingDescriptor::Product(parts) => {
                let factors = parts
                    .iter()
                    .map(|d| Self::build_with_limits(d, cap, max_size))
                    .collect::<Result<Vec<_>, _>>()?;
                let radix: Vec<usize> = factors.iter().map(|r| r.size()).collect();
                let zeros: Vec<Elem> = factors.iter().map(|r| r.zero()).collect();
                let ones: Vec<Elem> = factors.iter().map(|r| r.one()).collect();
                let (zero, one) = (encode_digits(&radix, &zeros), encode_digits(&radix, &ones));
                (Backend::Product { factors, radix }, zero, one)
            }
            RingDescriptor::Matrix { size: k, base } => {
                let k = *k;
                let p = *base as usize;
                let mut id = vec![0usize; k * k];
                for i in 0..k {
                    id[i * k + i] = 1 % p;
                }
                let one = encode_digits(&vec![p; k * k], &id);
                (Backend::Matrix { k, p }, 0, one)
            }
            RingDescriptor::Dual(n) => (Backend::Dual { n: *n as usize }, 0, 1 % (*n as usize)),
            RingDescriptor::Tables {
                zero, one, ..
            } => (Backend::Tables, *zero, *one),
        };

        let inner = RingInner {
            descriptor: descriptor.clone(),
            size,
            cap,
            zero,
            one,
            backend,
            tables: None,
            nil: OnceLock::new(),
        };
        let mut ring = FiniteRing {
            inner: Arc::new(inner),
        };

        if let RingDescriptor::Tables { add, mul, .. } = descriptor {
            let tables = tables_from_descriptor(size, add, mul, zero, one)?;
            Arc::get_mut(&mut ring.inner).expect("unshared").tables = Some(tables);
            ring.check_axioms()?;
        } else if size <= cap {
            let tables = ring.materialize();
            Arc::get_mut(&mut ring.inner).expect("unshared").tables = Some(tables);
        }
        Ok(ring)
    }

    fn materialize(&self) -> Tables {
        let n = self.size();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                add.push(self.add(a, b) as u32);
                mul.push(self.mul(a, b) as u32);
            }
        }
        let neg = (0..n).map(|a| self.neg(a) as u32).collect();
        Tables { add, mul, neg }
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.inner.descriptor
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    /// Carrier size up to which checks are exhaustive.
    pub fn exhaustive_cap(&self) -> usize {
        self.inner.cap
    }

    pub fn is_small(&self) -> bool {
        self.inner.size <= self.inner.cap
    }

    pub fn zero(&self) -> Elem {
        self.inner.zero
    }

    pub fn one(&self) -> Elem {
        self.inner.one
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.inner.size
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.inner.tables {
            return t.add[a * self.inner.size + b] as Elem;
        }
        match &self.inner.backend {
            Backend::Modular { n } => (a + b) % n,
            Backend::Product { factors, radix } => {
                let (x, y) = (decode_digits(radix, a), decode_digits(radix, b));
                let z: Vec<Elem> = factors
                    .iter()
                    .zip(x.iter().zip(&y))
                    .map(|(r, (u, v))| r.add(*u, *v))
                    .collect();
                encode_digits(radix, &z)
            }
            Backend::Matrix { k, p } => {
                let radix = vec![*p; k * k];
                let (x, y) = (decode_digits(&radix, a), decode_digits(&radix, b));
                let z: Vec<Elem> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
                encode_digits(&radix, &z)
            }
            Backend::Dual { n } => {
                let (a0, a1) = (a % n, a / n);
                let (b0, b1) = (b % n, b / n);
                (a0 + b0) % n + ((a1 + b1) % n) * n
            }
            Backend::Tables => unreachable!("table rings are always materialized"),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if let Some(t) = &self.inner.tables {
            return t.mul[a * self.inner.size + b] as Elem;
        }
        match &self.inner.backend {
            Backend::Modular { n } => (a * b) % n,
            Backend::Product { factors, radix } => {
                let (x, y) = (decode_digits(radix, a), decode_digits(radix, b));
                let z: Vec<Elem> = factors
                    .iter()
                    .zip(x.iter().zip(&y))
                    .map(|(r, (u, v))| r.mul(*u, *v))
                    .collect();
                encode_digits(radix, &z)
            }
            Backend::Matrix { k, p } => {
                let k = *k;
                let radix = vec![*p; k * k];
                let (x, y) = (decode_digits(&radix, a), decode_digits(&radix, b));
                let mut z = vec![0usize; k * k];
                for i in 0..k {
                    for j in 0..k {
                        let mut s = 0usize;
                        for l in 0..k {
                            s = (s + x[i * k + l] * y[l * k + j]) % p;
                        }
                        z[i * k + j] = s;
                    }
                }
                encode_digits(&radix, &z)
            }
            Backend::Dual { n } => {
                let (a0, a1) = (a % n, a / n);
                let (b0, b1) = (b % n, b / n);
                (a0 * b0) % n + ((a0 * b1 + a1 * b0) % n) * n
            }
            Backend::Tables => unreachable!("table rings are always materialized"),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if let Some(t) = &self.inner.tables {
            return t.neg[a] as Elem;
        }
        match &self.inner.backend {
            Backend::Modular { n } => (n - a) % n,
            Backend::Product { factors, radix } => {
                let x = decode_digits(radix, a);
                let z: Vec<Elem> = factors.iter().zip(&x).map(|(r, u)| r.neg(*u)).collect();
                encode_digits(radix, &z)
            }
            Backend::Matrix { k, p } => {
                let radix = vec![*p; k * k];
                let z: Vec<Elem> = decode_digits(&radix, a).iter().map(|u| (p - u) % p).collect();
                encode_digits(&radix, &z)
            }
            Backend::Dual { n } => (n - a % n) % n + ((n - a / n) % n) * n,
            Backend::Tables => unreachable!("table rings are always materialized"),
        }
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `a^k`, with `a^0 = 1`.
    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    /// The image of the integer `k` under `Z -> R`.
    pub fn from_int(&self, k: i64) -> Elem {
        let mut acc = self.zero();
        let mut base = self.one();
        let mut m = k.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            m >>= 1;
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    /// Two-sided inverse of `a`, if any.
    pub fn unit_inverse(&self, a: Elem) -> Option<Elem> {
        self.elements()
            .find(|&u| self.mul(a, u) == self.one() && self.mul(u, a) == self.one())
    }

    pub fn is_central(&self, a: Elem) -> bool {
        self.elements().all(|r| self.mul(a, r) == self.mul(r, a))
    }

    /// First element that fails to commute with `a`.
    pub fn centrality_witness(&self, a: Elem) -> Option<Elem> {
        self.elements().find(|&r| self.mul(a, r) != self.mul(r, a))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| self.is_central(a))
    }

    /// Least `m >= 1` with `a^m = 0`, found by iterating powers until zero or
    /// the first repeated power.
    pub fn nilpotency_index(&self, a: Elem) -> Option<u32> {
        if let Some(info) = self.inner.nil.get() {
            return info.index[a];
        }
        self.compute_nilpotency_index(a)
    }

    fn compute_nilpotency_index(&self, a: Elem) -> Option<u32> {
        let mut seen = HashSet::new();
        let mut p = a;
        let mut m = 1u32;
        loop {
            if p == self.zero() {
                return Some(m);
            }
            if !seen.insert(p) {
                return None;
            }
            p = self.mul(p, a);
            m += 1;
        }
    }

    pub fn is_nilpotent(&self, a: Elem) -> bool {
        self.nilpotency_index(a).is_some()
    }

    fn nil_info(&self) -> &NilInfo {
        self.inner.nil.get_or_init(|| NilInfo {
            index: self
                .elements()
                .map(|a| self.compute_nilpotency_index(a))
                .collect(),
        })
    }

    /// All nilpotent elements, in index order.
    pub fn nil_set(&self) -> Vec<Elem> {
        let info = self.nil_info();
        self.elements().filter(|&a| info.index[a].is_some()).collect()
    }

    /// Membership test against the cached nil set.
    #[inline]
    pub fn in_nil(&self, a: Elem) -> bool {
        self.nil_info().index[a].is_some()
    }

    /// Largest nilpotency index over `nil(R)`; `1` for a reduced ring.
    pub fn max_nilpotency_index(&self) -> u32 {
        self.nil_info().index.iter().flatten().copied().max().unwrap_or(1)
    }

    /// Exhaustive (or sampled above the cap) check of the ring axioms.
    pub fn check_axioms(&self) -> Result<(), RingError> {
        let n = self.size();
        let (z, o) = (self.zero(), self.one());
        if n > 1 && z == o {
            return Err(RingError::AxiomViolation {
                axiom: RingAxiom::ZeroIsNotOne,
                witness: (z, o, z),
            });
        }
        for a in 0..n {
            if self.add(a, z) != a || self.add(z, a) != a {
                return Err(violation(RingAxiom::AddIdentity, a, z, z));
            }
            if self.add(a, self.neg(a)) != z {
                return Err(violation(RingAxiom::AddInverse, a, self.neg(a), z));
            }
            if self.mul(a, o) != a || self.mul(o, a) != a {
                return Err(violation(RingAxiom::MulIdentity, a, o, o));
            }
        }
        let check = |a: Elem, b: Elem, c: Elem| -> Result<(), RingError> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Err(violation(RingAxiom::AddAssociative, a, b, c));
            }
            if self.add(a, b) != self.add(b, a) {
                return Err(violation(RingAxiom::AddCommutative, a, b, c));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(violation(RingAxiom::MulAssociative, a, b, c));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return Err(violation(RingAxiom::LeftDistributive, a, b, c));
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return Err(violation(RingAxiom::RightDistributive, a, b, c));
            }
            Ok(())
        };
        if self.is_small() {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            for _ in 0..SAMPLED_TUPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Digits of a product or matrix element (factor components, row-major
    /// entries, or `[a, b]` for `a + bt`). Modular and table elements yield
    /// `[index]`.
    pub fn components(&self, a: Elem) -> Vec<Elem> {
        match &self.inner.backend {
            Backend::Product { radix, .. } => decode_digits(radix, a),
            Backend::Matrix { k, p } => decode_digits(&vec![*p; k * k], a),
            Backend::Dual { n } => vec![a % n, a / n],
            Backend::Modular { .. } | Backend::Tables => vec![a],
        }
    }

    /// Inverse of [`FiniteRing::components`].
    pub fn from_components(&self, digits: &[Elem]) -> Result<Elem, RingError> {
        let bad = |reason: &str| RingError::BadElement {
            text: format!("{digits:?}"),
            reason: reason.to_string(),
        };
        let radix: Vec<usize> = match &self.inner.backend {
            Backend::Product { radix, .. } => radix.clone(),
            Backend::Matrix { k, p } => vec![*p; k * k],
            Backend::Dual { n } => vec![*n, *n],
            Backend::Modular { .. } | Backend::Tables => vec![self.size()],
        };
        if digits.len() != radix.len() {
            return Err(bad("wrong number of components"));
        }
        if digits.iter().zip(&radix).any(|(d, r)| d >= r) {
            return Err(bad("component out of range"));
        }
        Ok(encode_digits(&radix, digits))
    }

    /// Product factors, for direct-product rings.
    pub fn factors(&self) -> Option<&[FiniteRing]> {
        match &self.inner.backend {
            Backend::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// `(k, p)` for matrix rings `M_k(Z/p)`.
    pub fn matrix_shape(&self) -> Option<(usize, usize)> {
        match &self.inner.backend {
            Backend::Matrix { k, p } => Some((*k, *p)),
            _ => None,
        }
    }

    /// Modulus `n` for dual-number rings `Z/n[t]/(t^2)`.
    pub fn dual_modulus(&self) -> Option<usize> {
        match &self.inner.backend {
            Backend::Dual { n } => Some(*n),
            _ => None,
        }
    }

    /// Deterministic stream of `count` random indices, for sampled checks.
    pub(crate) fn sample_stream(&self, seed: u64) -> impl Iterator<Item = Elem> + '_ {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.size();
        std::iter::repeat_with(move || rng.gen_range(0..n))
    }
}

fn violation(axiom: RingAxiom, a: Elem, b: Elem, c: Elem) -> RingError {
    RingError::AxiomViolation {
        axiom,
        witness: (a, b, c),
    }
}

fn descriptor_size(d: &RingDescriptor) -> Result<u128, RingError> {
    let invalid = |s: &str| RingError::InvalidDescriptor(s.to_string());
    let size = match d {
        RingDescriptor::Modular(n) => {
            if *n == 0 {
                return Err(invalid("modulus must be at least 1"));
            }
            *n as u128
        }
        RingDescriptor::Product(parts) => {
            if parts.is_empty() {
                return Err(invalid("product of zero rings"));
            }
            let mut s: u128 = 1;
            for p in parts {
                s = s.saturating_mul(descriptor_size(p)?);
            }
            s
        }
        RingDescriptor::Matrix { size, base } => {
            if *size == 0 || *base == 0 {
                return Err(invalid("matrix size and base must be at least 1"));
            }
            let entries = (*size as u32).saturating_mul(*size as u32);
            (*base as u128).checked_pow(entries).unwrap_or(u128::MAX)
        }
        RingDescriptor::Dual(n) => {
            if *n == 0 {
                return Err(invalid("modulus must be at least 1"));
            }
            (*n as u128) * (*n as u128)
        }
        RingDescriptor::Tables { size, .. } => {
            if *size == 0 {
                return Err(invalid("empty carrier"));
            }
            *size as u128
        }
    };
    Ok(size)
}

fn tables_from_descriptor(
    size: usize,
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: usize,
    one: usize,
) -> Result<Tables, RingError> {
    let invalid = |s: String| RingError::InvalidDescriptor(s);
    if zero >= size || one >= size {
        return Err(invalid("zero/one index out of range".into()));
    }
    for (name, t) in [("add", add), ("mul", mul)] {
        if t.len() != size || t.iter().any(|row| row.len() != size) {
            return Err(invalid(format!("{name} table must be {size}x{size}")));
        }
        if t.iter().flatten().any(|&e| e >= size) {
            return Err(invalid(format!("{name} table entry out of range")));
        }
    }
    let flat = |t: &[Vec<usize>]| -> Vec<u32> { t.iter().flatten().map(|&e| e as u32).collect() };
    let add_flat = flat(add);
    let mut neg = Vec::with_capacity(size);
    for a in 0..size {
        match (0..size).find(|&b| add_flat[a * size + b] as usize == zero) {
            Some(b) => neg.push(b as u32),
            None => {
                return Err(RingError::AxiomViolation {
                    axiom: RingAxiom::AddInverse,
                    witness: (a, a, zero),
                })
            }
        }
    }
    Ok(Tables {
        add: add_flat,
        mul: flat(mul),
        neg,
    })
}

pub(crate) fn encode_digits(radix: &[usize], digits: &[usize]) -> usize {
    let mut idx = 0;
    for (d, r) in digits.iter().zip(radix).rev() {
        idx = idx * r + d;
    }
    idx
}

pub(crate) fn decode_digits(radix: &[usize], mut idx: usize) -> Vec<usize> {
    radix
        .iter()
        .map(|r| {
            let d = idx % r;
            idx /= r;
            d
        })
        .collect()
}
