//! Ready-made extensions.
//!
//! | name               | ring              | variables        | relations                                   |
//! |--------------------|-------------------|------------------|---------------------------------------------|
//! | `constant`         | any               | `x1..xn`         | `x_i r = r x_i`, variables commute          |
//! | `quantum_weyl`     | `Z/p`             | `x1, x2, d1, d2` | quantum Weyl algebra `A_2(J_{a,b})`         |
//! | `jordan_plane`     | `Z/p`             | `x1, x2`         | `x2 x1 = x1 x2 - a x1^2`                    |
//! | `quantum_plane`    | `Z/p`             | `x1, x2`         | `x2 x1 = q x1 x2`                           |
//! | `swap_ore`         | `S x S`           | `x`              | `x r = swap(r) x`                           |
//! | `differential_ore` | `F_2[t]/(t^2)`    | `x`              | `x r = r x + d/dt(r)`                       |
//!
//! Only relation shapes with a faithful finite-ring instance are shipped;
//! algebras whose relations need `i`, adjoints or generic complex `q` are not.

use serde::Deserialize;
use thiserror::Error;

use crate::finring::{FiniteRing, RingDescriptor, RingError};
use crate::pbw::{Extension, Monomial, PbwError, SkewPoly};
use crate::ringmaps::{MapFamily, RingMap};

#[derive(Debug, Error)]
pub enum PresetError {
    #[error("unknown preset {0:?} (known: {known})", known = PRESET_NAMES.join(", "))]
    UnknownPreset(String),
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

pub const PRESET_NAMES: [&str; 6] = [
    "constant",
    "quantum_weyl",
    "jordan_plane",
    "quantum_plane",
    "swap_ore",
    "differential_ore",
];

/// Builder parameters; unused fields are rejected per preset.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresetParams {
    /// Base ring (`constant`) or factor ring (`swap_ore`).
    pub ring: Option<RingDescriptor>,
    pub n: Option<usize>,
    /// Modulus of the coefficient ring `Z/p`.
    pub p: Option<u64>,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub q: Option<i64>,
}

impl PresetParams {
    pub fn modulus(p: u64) -> Self {
        PresetParams {
            p: Some(p),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug)]
pub struct Preset {
    pub name: &'static str,
    /// Instance label such as `quantum_weyl(a=0,b=0)/Z5`.
    pub label: String,
    pub description: &'static str,
    pub params: PresetParams,
    pub ext: Extension,
}

fn invalid(name: &'static str, reason: impl Into<String>) -> PresetError {
    PresetError::InvalidParameter {
        name,
        reason: reason.into(),
    }
}

fn only(params: &PresetParams, allowed: &[&'static str]) -> Result<(), PresetError> {
    let given: [(&'static str, bool); 6] = [
        ("ring", params.ring.is_some()),
        ("n", params.n.is_some()),
        ("p", params.p.is_some()),
        ("a", params.a.is_some()),
        ("b", params.b.is_some()),
        ("q", params.q.is_some()),
    ];
    match given.iter().find(|(name, set)| *set && !allowed.contains(name)) {
        Some((name, _)) => Err(invalid(name, "not used by this preset")),
        None => Ok(()),
    }
}

fn field(params: &PresetParams, default: u64) -> Result<FiniteRing, PresetError> {
    let p = params.p.unwrap_or(default);
    if p < 2 {
        return Err(invalid("p", "modulus must be at least 2"));
    }
    Ok(FiniteRing::build(&RingDescriptor::Modular(p))?)
}

pub fn build_preset(name: &str, params: &PresetParams) -> Result<Preset, PresetError> {
    match name {
        "constant" => constant(params),
        "quantum_weyl" => quantum_weyl(params),
        "jordan_plane" => jordan_plane(params),
        "quantum_plane" => quantum_plane(params),
        "swap_ore" => swap_ore(params),
        "differential_ore" => differential_ore(params),
        other => Err(PresetError::UnknownPreset(other.to_string())),
    }
}

fn constant(params: &PresetParams) -> Result<Preset, PresetError> {
    only(params, &["ring", "n"])?;
    let desc = params.ring.clone().unwrap_or(RingDescriptor::Modular(4));
    let n = params.n.unwrap_or(1);
    if n == 0 {
        return Err(invalid("n", "need at least one variable"));
    }
    let ring = FiniteRing::build(&desc)?;
    let ext = Extension::builder(&ring, n).build()?;
    Ok(Preset {
        name: "constant",
        label: format!("constant(n={n})/{desc}"),
        description: "sigma_i = id, delta_i = 0, commuting variables",
        params: params.clone(),
        ext,
    })
}

/// `A_2(J_{a,b})` in the PBW order `x1 < x2 < d1 < d2`, all `c = 1`:
///
/// ```text
/// x2 x1 = x1 x2 - a x1^2
/// d2 d1 = d1 d2 + b d2^2
/// d1 x1 = x1 d1 + 1 + a x1 d2
/// d1 x2 = x2 d1 - a x1 d1 - ab x1 d2 + b x2 d2
/// d2 x1 = x1 d2
/// d2 x2 = x2 d2 + 1 - b x1 d2
/// ```
fn quantum_weyl(params: &PresetParams) -> Result<Preset, PresetError> {
    only(params, &["p", "a", "b"])?;
    let ring = field(params, 5)?;
    let (a, b) = (params.a.unwrap_or(0), params.b.unwrap_or(0));
    let ext = quantum_weyl_relations(&ring, a, b).build()?;
    Ok(Preset {
        name: "quantum_weyl",
        label: format!("quantum_weyl(a={a},b={b})/{}", ring.descriptor()),
        description: "quantum Weyl algebra A_2(J_{a,b}); a = b = 0 gives the second Weyl algebra",
        params: params.clone(),
        ext,
    })
}

/// The unvalidated quantum Weyl presentation, for experiments that alter it.
pub fn quantum_weyl_relations(ring: &FiniteRing, a: i64, b: i64) -> crate::pbw::ExtensionBuilder {
    let n = 4;
    let m = |e: [u32; 4]| Monomial::new(e.to_vec());
    let k = |v: i64| ring.from_int(v);
    let poly = |terms: Vec<([u32; 4], i64)>| {
        SkewPoly::from_terms(ring, terms.into_iter().map(|(e, c)| (m(e), k(c))))
    };
    let one = ring.one();
    Extension::builder(ring, n)
        .names(["x1", "x2", "d1", "d2"].map(String::from).to_vec())
        .relation(0, 1, one, poly(vec![([2, 0, 0, 0], -a)]))
        .relation(2, 3, one, poly(vec![([0, 0, 0, 2], b)]))
        .relation(0, 2, one, poly(vec![([0; 4], 1), ([1, 0, 0, 1], a)]))
        .relation(
            1,
            2,
            one,
            poly(vec![
                ([1, 0, 1, 0], -a),
                ([1, 0, 0, 1], -a * b),
                ([0, 1, 0, 1], b),
            ]),
        )
        .relation(0, 3, one, SkewPoly::zero())
        .relation(1, 3, one, poly(vec![([0; 4], 1), ([1, 0, 0, 1], -b)]))
}

fn jordan_plane(params: &PresetParams) -> Result<Preset, PresetError> {
    only(params, &["p", "a"])?;
    let ring = field(params, 3)?;
    let a = params.a.unwrap_or(1);
    let tail = SkewPoly::term(&ring, Monomial::new(vec![2, 0]), ring.from_int(-a));
    let ext = Extension::builder(&ring, 2)
        .relation(0, 1, ring.one(), tail)
        .build()?;
    Ok(Preset {
        name: "jordan_plane",
        label: format!("jordan_plane(a={a})/{}", ring.descriptor()),
        description: "x2 x1 = x1 x2 - a x1^2",
        params: params.clone(),
        ext,
    })
}

fn quantum_plane(params: &PresetParams) -> Result<Preset, PresetError> {
    only(params, &["p", "q"])?;
    let ring = field(params, 5)?;
    let q = params.q.unwrap_or(2);
    let qe = ring.from_int(q);
    if ring.unit_inverse(qe).is_none() {
        return Err(invalid("q", format!("{q} is not a unit modulo {}", ring.size())));
    }
    let ext = Extension::builder(&ring, 2)
        .relation(0, 1, qe, SkewPoly::zero())
        .build()?;
    Ok(Preset {
        name: "quantum_plane",
        label: format!("quantum_plane(q={q})/{}", ring.descriptor()),
        description: "x2 x1 = q x1 x2",
        params: params.clone(),
        ext,
    })
}

fn swap_ore(params: &PresetParams) -> Result<Preset, PresetError> {
    only(params, &["ring"])?;
    let factor = params.ring.clone().unwrap_or(RingDescriptor::Modular(2));
    let desc = RingDescriptor::Product(vec![factor.clone(), factor]);
    let ring = FiniteRing::build(&desc)?;
    let swap = RingMap::coordinate_swap(&ring).map_err(|e| invalid("ring", e.to_string()))?;
    let fam = MapFamily::new(&ring, vec![swap], vec![RingMap::zero_derivation(&ring, 0)])
        .map_err(crate::pbw::family_error)?;
    let ext = Extension::builder(&ring, 1)
        .family(fam)
        .names(vec!["x".into()])
        .build()?;
    Ok(Preset {
        name: "swap_ore",
        label: format!("swap_ore/{desc}"),
        description: "x (a, b) = (b, a) x",
        params: params.clone(),
        ext,
    })
}

fn differential_ore(params: &PresetParams) -> Result<Preset, PresetError> {
    only(params, &["p"])?;
    let p = params.p.unwrap_or(2);
    let ring = FiniteRing::build(&RingDescriptor::Dual(p))?;
    let d = RingMap::formal_derivative(&ring, 0).map_err(|e| invalid("p", e.to_string()))?;
    let fam = MapFamily::new(&ring, vec![RingMap::identity(&ring)], vec![d])
        .map_err(crate::pbw::family_error)?;
    let ext = Extension::builder(&ring, 1)
        .family(fam)
        .names(vec!["x".into()])
        .build()?;
    Ok(Preset {
        name: "differential_ore",
        label: format!("differential_ore/{}", ring.descriptor()),
        description: "x r = r x + d/dt(r) on F_2[t]/(t^2)",
        params: params.clone(),
        ext,
    })
}

/// Default instances of every preset plus a few constant extensions.
pub fn catalog() -> Vec<Preset> {
    let p = |name: &str, params: PresetParams| build_preset(name, &params).expect("catalog preset");
    let constant = |ring: RingDescriptor, n: usize| PresetParams {
        ring: Some(ring),
        n: Some(n),
        ..Default::default()
    };
    let qw = |a, b, m| PresetParams {
        p: Some(m),
        a: Some(a),
        b: Some(b),
        ..Default::default()
    };
    vec![
        p("constant", constant(RingDescriptor::Modular(4), 2)),
        p(
            "constant",
            constant(
                RingDescriptor::Product(vec![RingDescriptor::Modular(2), RingDescriptor::Modular(2)]),
                2,
            ),
        ),
        p("constant", constant(RingDescriptor::matrix(2, 2), 1)),
        p("constant", constant(RingDescriptor::Modular(2), 1)),
        p("quantum_weyl", qw(0, 0, 5)),
        p("quantum_weyl", qw(1, 1, 3)),
        p("quantum_weyl", qw(2, 3, 5)),
        p("jordan_plane", PresetParams::modulus(3)),
        p("quantum_plane", PresetParams::modulus(5)),
        p("swap_ore", PresetParams::default()),
        p("differential_ore", PresetParams::default()),
    ]
}
