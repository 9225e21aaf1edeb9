//! JSON report documents.
//!
//! Everything that identifies a result lives in `body`; wall-clock timing sits
//! beside it so that bodies of repeated runs compare byte for byte.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::finring::{Elem, FiniteRing};
use crate::nilarmendariz::{CoefficientScope, Implication, SearchBound};
use crate::pbw::{Extension, Monomial, SkewPoly};
use crate::report::{PropertyReport, Witness};

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub body: Value,
    pub timing: Timing,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

impl ReportDocument {
    /// Canonical text of the body: keys sorted, no whitespace.
    pub fn body_bytes(&self) -> String {
        self.body.to_string()
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Builds the body of a [`ReportDocument`].
pub struct BodyBuilder {
    fields: Map<String, Value>,
}

impl BodyBuilder {
    pub fn new(command: &str, spec_digest: Option<&str>, seed: u64) -> Self {
        let mut fields = Map::new();
        fields.insert("tool".into(), json!("skewpbw"));
        fields.insert("tool_version".into(), json!(env!("CARGO_PKG_VERSION")));
        fields.insert("report_version".into(), json!(REPORT_VERSION));
        fields.insert("command".into(), json!(command));
        fields.insert("spec_digest".into(), json!(spec_digest));
        fields.insert("seed".into(), json!(seed));
        fields.insert("results".into(), json!([]));
        BodyBuilder { fields }
    }

    pub fn set(&mut self, key: &str, value: Value) -> &mut Self {
        self.fields.insert(key.into(), value);
        self
    }

    pub fn push_result(&mut self, value: Value) -> &mut Self {
        if let Some(Value::Array(v)) = self.fields.get_mut("results") {
            v.push(value);
        }
        self
    }

    pub fn finish(self, exit_code: i32, elapsed_ms: f64) -> ReportDocument {
        let mut fields = self.fields;
        fields.insert("exit_code".into(), json!(exit_code));
        ReportDocument {
            body: Value::Object(fields),
            timing: Timing { elapsed_ms },
        }
    }
}

/// Matrix elements as row lists, integers as numbers, anything else as its
/// display string.
pub fn element_json(ring: &FiniteRing, a: Elem) -> Value {
    let s = ring.display(a);
    match serde_json::from_str::<Value>(&s) {
        Ok(v @ (Value::Array(_) | Value::Number(_))) => v,
        _ => Value::String(s),
    }
}

pub fn monomial_json(ext: &Extension, m: &Monomial) -> Value {
    json!(m.render(ext.names()))
}

pub fn poly_json(ext: &Extension, f: &SkewPoly) -> Value {
    json!(ext.render(f))
}

fn word_json(word: &[usize]) -> Value {
    json!(word.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn witness_json(ext: &Extension, w: &Witness) -> Value {
    let ring = ext.ring();
    let e = |a: Elem| element_json(ring, a);
    match w {
        Witness::SigmaCompatibility { alpha, a, b } => json!({
            "kind": "sigma-compatibility", "alpha": alpha, "a": e(*a), "b": e(*b),
        }),
        Witness::DeltaCompatibility { word, a, b } => json!({
            "kind": "delta-compatibility", "delta_word": word_json(word), "a": e(*a), "b": e(*b),
        }),
        Witness::Rigidity { alpha, a } => json!({
            "kind": "rigidity", "alpha": alpha, "a": e(*a),
        }),
        Witness::Armendariz { f, g, pair, offending } => json!({
            "kind": "armendariz",
            "f": poly_json(ext, f),
            "g": poly_json(ext, g),
            "left": {"monomial": monomial_json(ext, &pair.left.0), "coefficient": e(pair.left.1)},
            "right": {"monomial": monomial_json(ext, &pair.right.0), "coefficient": e(pair.right.1)},
            "offending": poly_json(ext, offending),
        }),
        Witness::NilStability { alpha, word, a, b, delta_inner } => json!({
            "kind": "nil-stability", "alpha": alpha, "delta_word": word_json(word),
            "a": e(*a), "b": e(*b), "delta_inner": delta_inner,
        }),
        Witness::NilPullback { alpha, a, b } => json!({
            "kind": "nil-pullback", "alpha": alpha, "a": e(*a), "b": e(*b),
        }),
    }
}

pub fn bound_json(ext: &Extension, b: &SearchBound) -> Value {
    let support: Vec<Value> = b.support().iter().map(|m| monomial_json(ext, m)).collect();
    let scope = match b.scope {
        CoefficientScope::All => json!({"mode": "all"}),
        CoefficientScope::Sampled { seed, pairs } => json!({"mode": "sampled", "seed": seed, "pairs": pairs}),
    };
    json!({"support": support, "scope": scope})
}

pub fn report_json(ext: &Extension, r: &PropertyReport) -> Value {
    json!({
        "property": r.property,
        "verdict": r.verdict.as_str(),
        "witness": r.witness.as_ref().map(|w| witness_json(ext, w)),
        "bound": r.bound.as_ref().map(|b| bound_json(ext, b)),
        "work_count": r.work_count,
        "notes": r.notes,
    })
}

pub fn implication_json(ext: &Extension, imp: &Implication) -> Value {
    json!({
        "name": imp.name,
        "statement": imp.statement,
        "status": imp.status.as_str(),
        "antecedents": imp.antecedents.iter().map(|a| report_json(ext, a)).collect::<Vec<_>>(),
        "consequent": report_json(ext, &imp.consequent),
    })
}
