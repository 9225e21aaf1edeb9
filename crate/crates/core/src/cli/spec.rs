//! Extension spec files.
//!
//! ```json
//! {
//!   "format": 1,
//!   "ring": {"matrix": {"size": 2, "base": 2}},
//!   "variables": ["x"],
//!   "sigma": [{"builder": "conjugation", "element": [[1,1],[0,1]]}],
//!   "delta": [{"table": [0, 0, ...]}],
//!   "relations": [{"i": 1, "j": 2, "c": 1, "tail": "x3"}],
//!   "order": {"kind": "deglex", "precedence": ["x1", "x2"]}
//! }
//! ```
//!
//! `variables` is a count or a list of names (default `x1..xn`). A relation
//! `{i, j, c, tail}` with `1 <= i < j` reads `x_j x_i = c x_i x_j + tail`;
//! omitted pairs commute. Elements are JSON integers, matrix row lists or
//! strings in the ring's display syntax. Map builders: `identity`, `zero`,
//! `swap`, `frobenius`, `derivative`, `conjugation` and `inner` (the last two
//! take an `element`). Alternatively `{"format": 1, "preset": {"name": ..,
//! "params": {..}}}` loads a catalog preset.

use std::fmt;
use std::path::Path;

use serde::Deserialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::parse::parse_normal_form;
use crate::finring::{Elem, FiniteRing, RingDescriptor};
use crate::pbw::{Extension, MonomialOrder, OrderKind, PbwError};
use crate::presets::{build_preset, PresetParams};
use crate::ringmaps::{FamilyError, MapError, MapFamily, MapKind, MapRole, RingMap};

pub const SPEC_FORMAT: u32 = 1;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid `{key}` at line {line}, column {column}: {message}")]
    Invalid {
        line: usize,
        column: usize,
        key: String,
        message: String,
        /// The underlying presentation error, when there is one.
        pbw: Option<PbwError>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpecFile {
    format: u32,
    preset: Option<PresetRef>,
    ring: Option<RingDescriptor>,
    variables: Option<Variables>,
    sigma: Option<Vec<MapDef>>,
    delta: Option<Vec<MapDef>>,
    #[serde(default)]
    relations: Vec<RelationDef>,
    order: Option<OrderDef>,
    budget: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresetRef {
    name: String,
    #[serde(default)]
    params: PresetParams,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Variables {
    Count(usize),
    Names(Vec<String>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDef {
    table: Option<Vec<Value>>,
    builder: Option<String>,
    element: Option<Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationDef {
    i: usize,
    j: usize,
    c: Option<Value>,
    tail: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderDef {
    kind: OrderKind,
    precedence: Option<Vec<String>>,
}

/// A loaded spec: the extension plus what reports need to identify it.
#[derive(Clone)]
pub struct LoadedSpec {
    pub ext: Extension,
    /// Hex SHA-256 of the canonical (key-sorted, whitespace-free) JSON.
    pub digest: String,
    pub label: String,
}

impl fmt::Debug for LoadedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LoadedSpec")
            .field("label", &self.label)
            .field("digest", &self.digest)
            .finish()
    }
}

pub fn parse_spec(path: impl AsRef<Path>) -> Result<LoadedSpec, SpecError> {
    let text = read(path.as_ref())?;
    parse_spec_str(&text)
}

/// Loads without the overlap desk check; `Extension::validate` runs it later.
pub fn parse_spec_unchecked(path: impl AsRef<Path>) -> Result<LoadedSpec, SpecError> {
    let text = read(path.as_ref())?;
    load(&text, false)
}

pub fn parse_spec_str(text: &str) -> Result<LoadedSpec, SpecError> {
    load(text, true)
}

fn read(path: &Path) -> Result<String, SpecError> {
    std::fs::read_to_string(path).map_err(|e| SpecError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// 1-based line and column of the first `"key"` in `text`, or of the start.
fn locate(text: &str, key: &str) -> (usize, usize) {
    let offset = text.find(&format!("\"{key}\"")).unwrap_or(0);
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = before.len() - before.rfind('\n').map(|i| i + 1).unwrap_or(0) + 1;
    (line, column)
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn invalid(&self, key: &str, message: impl Into<String>) -> SpecError {
        let (line, column) = locate(self.text, key);
        SpecError::Invalid {
            line,
            column,
            key: key.to_string(),
            message: message.into(),
            pbw: None,
        }
    }

    fn parse_error(&self, key: &str, message: impl Into<String>) -> SpecError {
        let (line, column) = locate(self.text, key);
        SpecError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn pbw(&self, e: PbwError) -> SpecError {
        let key = match &e {
            PbwError::InjectivityViolation { .. } => "sigma",
            PbwError::Map(f) => role_key(f.role),
            _ => "relations",
        };
        let (line, column) = locate(self.text, key);
        let key = if self.text.contains("\"preset\"") { "preset" } else { key };
        SpecError::Invalid {
            line,
            column,
            key: key.to_string(),
            message: e.to_string(),
            pbw: Some(e),
        }
    }

    fn family(&self, e: FamilyError) -> SpecError {
        let key = role_key(e.role);
        match e.error {
            MapError::TableLength { .. } | MapError::OutOfRange { .. } => {
                self.parse_error(key, e.to_string())
            }
            _ => self.pbw(crate::pbw::family_error(e)),
        }
    }
}

fn role_key(role: MapRole) -> &'static str {
    match role {
        MapRole::Sigma => "sigma",
        MapRole::Delta => "delta",
    }
}

fn element(ring: &FiniteRing, v: &Value) -> Result<Elem, String> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(_) | Value::Array(_) => v.to_string(),
        other => return Err(format!("{other} is not a ring element")),
    };
    ring.parse_element(&text).map_err(|e| e.to_string())
}

fn load(text: &str, validate: bool) -> Result<LoadedSpec, SpecError> {
    let parse_err = |e: serde_json::Error| {
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let message = e.to_string();
        SpecError::Parse {
            line: e.line(),
            column: e.column(),
            message: message.strip_suffix(&suffix).unwrap_or(&message).to_string(),
        }
    };
    let raw: Value = serde_json::from_str(text).map_err(parse_err)?;
    let spec: SpecFile = serde_json::from_str(text).map_err(parse_err)?;
    let digest = hex::encode(Sha256::digest(raw.to_string().as_bytes()));
    let ctx = Ctx { text };
    if spec.format != SPEC_FORMAT {
        return Err(ctx.invalid("format", format!("unsupported format {}, expected {SPEC_FORMAT}", spec.format)));
    }
    if let Some(p) = &spec.preset {
        let explicit = spec.ring.is_some()
            || spec.variables.is_some()
            || spec.sigma.is_some()
            || spec.delta.is_some()
            || !spec.relations.is_empty()
            || spec.order.is_some()
            || spec.budget.is_some();
        if explicit {
            return Err(ctx.invalid("preset", "a preset excludes explicit ring, variables, maps, relations and order"));
        }
        let preset = build_preset(&p.name, &p.params).map_err(|e| match e {
            crate::presets::PresetError::Pbw(e) => ctx.pbw(e),
            other => ctx.invalid("preset", other.to_string()),
        })?;
        return Ok(LoadedSpec {
            ext: preset.ext,
            digest,
            label: preset.label,
        });
    }

    let desc = spec.ring.ok_or_else(|| ctx.invalid("ring", "missing `ring`"))?;
    let ring = FiniteRing::build(&desc).map_err(|e| ctx.invalid("ring", e.to_string()))?;
    let names: Vec<String> = match spec.variables {
        None => return Err(ctx.invalid("variables", "missing `variables`")),
        Some(Variables::Count(n)) => (1..=n).map(|i| format!("x{i}")).collect(),
        Some(Variables::Names(v)) => v,
    };
    let n = names.len();
    if n == 0 {
        return Err(ctx.invalid("variables", "need at least one variable"));
    }

    let sigma_defs = spec.sigma.unwrap_or_default();
    let delta_defs = spec.delta.unwrap_or_default();
    for (key, defs) in [("sigma", &sigma_defs), ("delta", &delta_defs)] {
        if !defs.is_empty() && defs.len() != n {
            return Err(ctx.parse_error(key, format!("expected {n} maps, found {}", defs.len())));
        }
    }
    let mut sigmas = Vec::with_capacity(n);
    for i in 0..n {
        sigmas.push(match sigma_defs.get(i) {
            None => RingMap::identity(&ring),
            Some(d) => map(&ctx, &ring, d, "sigma", MapKind::Endomorphism, None)?,
        });
    }
    let mut deltas = Vec::with_capacity(n);
    for (i, sigma) in sigmas.iter().enumerate() {
        let kind = MapKind::SigmaDerivation { sigma: i };
        deltas.push(match delta_defs.get(i) {
            None => RingMap::zero_derivation(&ring, i),
            Some(d) => map(&ctx, &ring, d, "delta", kind, Some(sigma))?,
        });
    }
    let family = MapFamily::new(&ring, sigmas, deltas).map_err(|e| ctx.family(e))?;

    let mut b = Extension::builder(&ring, n).family(family).names(names.clone());
    if let Some(o) = spec.order {
        let precedence = match o.precedence {
            None => (0..n).collect(),
            Some(p) => p
                .iter()
                .map(|v| names.iter().position(|x| x == v))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| ctx.invalid("precedence", "unknown variable"))?,
        };
        let order = MonomialOrder::new(o.kind, precedence)
            .ok_or_else(|| ctx.invalid("precedence", "not a permutation of the variables"))?;
        b = b.order(order);
    }
    if let Some(budget) = spec.budget {
        b = b.budget(budget);
    }
    for (k, r) in spec.relations.iter().enumerate() {
        if r.i == 0 || r.i >= r.j || r.j > n {
            return Err(ctx.invalid("relations", format!("relations[{k}]: need 1 <= i < j <= {n}")));
        }
        let c = match &r.c {
            None => ring.one(),
            Some(v) => element(&ring, v)
                .map_err(|m| ctx.invalid("relations", format!("relations[{k}].c: {m}")))?,
        };
        let tail = match &r.tail {
            None => crate::pbw::SkewPoly::zero(),
            Some(t) => parse_normal_form(t, &ring, &names)
                .map_err(|e| ctx.invalid("relations", format!("relations[{k}].tail: {e}")))?,
        };
        b = b.relation(r.i - 1, r.j - 1, c, tail);
    }
    let ext = if validate { b.build() } else { b.build_unchecked() }.map_err(|e| ctx.pbw(e))?;
    Ok(LoadedSpec {
        label: format!("{} / {}", desc, names.join(",")),
        ext,
        digest,
    })
}

fn map(
    ctx: &Ctx,
    ring: &FiniteRing,
    d: &MapDef,
    key: &str,
    kind: MapKind,
    sigma: Option<&RingMap>,
) -> Result<RingMap, SpecError> {
    let el = |v: &Option<Value>| -> Result<Elem, SpecError> {
        let v = v
            .as_ref()
            .ok_or_else(|| ctx.invalid(key, "this builder needs an `element`"))?;
        element(ring, v).map_err(|m| ctx.invalid(key, m))
    };
    let sigma_index = match kind {
        MapKind::SigmaDerivation { sigma } => sigma,
        _ => 0,
    };
    match (&d.table, &d.builder) {
        (Some(t), None) => {
            let table = t
                .iter()
                .map(|v| element(ring, v))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|m| ctx.parse_error(key, m))?;
            RingMap::from_table(ring, table, kind).map_err(|e| ctx.parse_error(key, e.to_string()))
        }
        (None, Some(b)) => {
            let not_applicable = |e: MapError| ctx.invalid(key, e.to_string());
            let m = match b.as_str() {
                "identity" => RingMap::identity(ring),
                "zero" => RingMap::zero_derivation(ring, sigma_index),
                "swap" => RingMap::coordinate_swap(ring).map_err(not_applicable)?,
                "frobenius" => RingMap::frobenius(ring).map_err(not_applicable)?,
                "derivative" => RingMap::formal_derivative(ring, sigma_index).map_err(not_applicable)?,
                "conjugation" => RingMap::conjugation(ring, el(&d.element)?).map_err(not_applicable)?,
                "inner" => {
                    let id = RingMap::identity(ring);
                    RingMap::inner_derivation(ring, el(&d.element)?, sigma.unwrap_or(&id), sigma_index)
                }
                other => return Err(ctx.invalid(key, format!("unknown map builder {other:?}"))),
            };
            Ok(m.with_kind(kind))
        }
        _ => Err(ctx.parse_error(key, "a map needs exactly one of `table` and `builder`")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_constant_spec() {
        let s = parse_spec_str(r#"{"format": 1, "ring": {"modular": 4}, "variables": 2}"#).unwrap();
        assert_eq!(s.ext.n(), 2);
        assert_eq!(s.ext.names(), ["x1", "x2"]);
        assert!(s.ext.family().is_constant(s.ext.ring()));
    }

    #[test]
    fn digest_ignores_layout_and_key_order() {
        let a = parse_spec_str(r#"{"format": 1, "ring": {"modular": 4}, "variables": 2}"#).unwrap();
        let b = parse_spec_str("{\n  \"variables\": 2,\n  \"ring\": {\"modular\": 4},\n  \"format\": 1\n}").unwrap();
        assert_eq!(a.digest, b.digest);
    }

    #[test]
    fn non_unit_constant_points_at_relations() {
        let text = "{\n  \"format\": 1,\n  \"ring\": {\"modular\": 4},\n  \"variables\": 2,\n  \"relations\": [{\"i\": 1, \"j\": 2, \"c\": 2}]\n}";
        match parse_spec_str(text).unwrap_err() {
            SpecError::Invalid { line, column, key, pbw, .. } => {
                assert_eq!((line, column), (5, 3));
                assert_eq!(key, "relations");
                assert!(matches!(pbw, Some(PbwError::NonUnitConstant { i: 0, j: 1, .. })));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn short_sigma_table_is_a_parse_error() {
        let text = r#"{"format": 1, "ring": {"modular": 4}, "variables": 1, "sigma": [{"table": [0, 1, 2]}]}"#;
        assert!(matches!(parse_spec_str(text), Err(SpecError::Parse { line: 1, .. })));
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let text = "{\"format\": 1,\n \"ring\": {\"modular\": 4}, \"variables\": 1, \"sigmas\": []}";
        match parse_spec_str(text).unwrap_err() {
            SpecError::Parse { line, message, .. } => {
                assert_eq!(line, 2);
                assert!(message.contains("sigmas"));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn builders_and_presets() {
        let text = r#"{"format": 1, "ring": {"product": [{"modular": 2}, {"modular": 2}]},
            "variables": ["x"], "sigma": [{"builder": "swap"}]}"#;
        let s = parse_spec_str(text).unwrap();
        assert!(!s.ext.family().is_constant(s.ext.ring()));
        let text = r#"{"format": 1, "ring": {"dual": 2}, "variables": 1, "delta": [{"builder": "derivative"}]}"#;
        assert!(parse_spec_str(text).is_ok());
        let text = r#"{"format": 1, "preset": {"name": "quantum_weyl", "params": {"p": 5}}}"#;
        let s = parse_spec_str(text).unwrap();
        assert_eq!(s.ext.names(), ["x1", "x2", "d1", "d2"]);
        let text = r#"{"format": 1, "preset": {"name": "jordan_plane"}, "variables": 2}"#;
        assert!(matches!(parse_spec_str(text), Err(SpecError::Invalid { .. })));
    }

    #[test]
    fn inconsistent_tails_are_caught_or_deferred() {
        let text = r#"{"format": 1, "ring": {"modular": 3}, "variables": 3,
            "relations": [{"i": 1, "j": 2, "tail": "x3"}, {"i": 2, "j": 3, "tail": "x2"}]}"#;
        assert!(matches!(
            parse_spec_str(text),
            Err(SpecError::Invalid { pbw: Some(PbwError::InconsistentPresentation { .. }), .. })
        ));
        let s = load(text, false).unwrap();
        assert!(s.ext.validate().is_err());
    }
}
