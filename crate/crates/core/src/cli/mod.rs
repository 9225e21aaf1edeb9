//! Command-line front end.
//!
//! Every subcommand prints a human-readable result and, with `--json PATH`,
//! writes a [`ReportDocument`]. Exit codes: 0 holds/ok, 1 a property fails
//! (witness found), 2 usage or parse error, 3 undecided at a cap.

mod document;
mod parse;
mod spec;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub use document::{
    bound_json, element_json, implication_json, report_json, witness_json, BodyBuilder,
    ReportDocument, Timing, REPORT_VERSION,
};
pub use parse::{parse_normal_form, parse_poly, PolyParseError};
pub use spec::{parse_spec, parse_spec_str, parse_spec_unchecked, LoadedSpec, SpecError, SPEC_FORMAT};

use crate::finring::{check_ring_class, ClassWitness, Coverage, RingClass};
use crate::nilarmendariz::{
    check_armendariz_capped, default_scope, verify_implication_suite, verify_lemma_nil_pullback,
    verify_lemma_nil_stability, ArmendarizVariant, ImplicationStatus, NilContext, NilError,
    SearchBound,
};
use crate::pbw::{Extension, PbwError};
use crate::presets::catalog;
use crate::report::{fmt_alpha, fmt_delta_word, PropertyReport, Verdict, Witness};
use crate::ringmaps::{check_compatibility, check_sigma_rigid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "skewpbw", version, about = "Skew PBW extensions over finite rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Extension spec file (JSON).
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Seed for sampled scopes.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct Search {
    /// `deg1`, `deg2`, `degN` or a comma-separated monomial list such as `1,x1,x1*x2`.
    #[arg(long, default_value = "deg1")]
    pub support: String,
    /// Give up after this many polynomial pairs.
    #[arg(long)]
    pub max_pairs: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the presentation: constants, sigmas and critical overlaps.
    Validate(Common),
    /// Multiply the expressions left to right.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Normal form of an expression.
    Nf {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Leading monomial, coefficient, term and degree.
    Leading {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Decide whether an expression is nilpotent.
    Nilpotent {
        #[command(flatten)]
        common: Common,
        expr: String,
    },
    /// Reduced, reversible, semicommutative and NI checks on the base ring.
    RingClass {
        #[command(flatten)]
        common: Common,
        /// Only this class.
        #[arg(long)]
        class: Option<String>,
    },
    /// (Sigma, Delta)-compatibility of the base ring.
    Compat(Common),
    /// Sigma-rigidity of the base ring.
    Rigid(Common),
    /// Bounded search for an Armendariz-type counterexample.
    Armendariz {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        search: Search,
        /// skew-pi, sigma-skew, sigma-delta-skew or skew.
        #[arg(long, default_value = "skew-pi")]
        variant: String,
    },
    /// Instance checks of the nil-stability and nil-pullback lemmas.
    Lemmas(Common),
    /// Every implication between the ring classes on this extension.
    Suite {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "deg1")]
        support: String,
    },
    /// List the preset catalog.
    Presets {
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

/// Result of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub document: Option<ReportDocument>,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure::usage(e)
    }
}

impl From<PolyParseError> for Failure {
    fn from(e: PolyParseError) -> Self {
        match e {
            PolyParseError::Pbw(p) => p.into(),
            other => Failure::usage(other),
        }
    }
}

impl From<PbwError> for Failure {
    fn from(e: PbwError) -> Self {
        let code = match e {
            PbwError::RewriteBudgetExceeded { .. } => EXIT_UNDECIDED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<NilError> for Failure {
    fn from(e: NilError) -> Self {
        match e {
            NilError::Pbw(p) => p.into(),
            other => Failure::usage(other),
        }
    }
}

/// Runs one command line (`args[0]` is the program name).
pub fn run_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Outcome {
                code,
                stdout,
                stderr,
                document: None,
            };
        }
    };
    run(cli.command)
}

pub fn run(command: Command) -> Outcome {
    let start = Instant::now();
    let mut out = String::new();
    let json_path = match &command {
        Command::Presets { json } => json.clone(),
        Command::Validate(c) | Command::Compat(c) | Command::Rigid(c) | Command::Lemmas(c) => c.json.clone(),
        Command::Mul { common, .. }
        | Command::Nf { common, .. }
        | Command::Leading { common, .. }
        | Command::Nilpotent { common, .. }
        | Command::RingClass { common, .. }
        | Command::Armendariz { common, .. }
        | Command::Suite { common, .. } => common.json.clone(),
    };
    match execute(command, &mut out) {
        Ok((code, body)) => {
            let doc = body.finish(code, start.elapsed().as_secs_f64() * 1e3);
            let mut stderr = String::new();
            let mut code = code;
            if let Some(path) = json_path {
                if let Err(e) = std::fs::write(&path, doc.to_json_pretty() + "\n") {
                    stderr = format!("cannot write {}: {e}\n", path.display());
                    code = EXIT_USAGE;
                }
            }
            Outcome {
                code,
                stdout: out,
                stderr,
                document: Some(doc),
            }
        }
        Err(f) => Outcome {
            code: f.code,
            stdout: out,
            stderr: format!("error: {}\n", f.message),
            document: None,
        },
    }
}

fn load(common: &Common) -> Result<LoadedSpec, Failure> {
    let path = common
        .spec
        .as_ref()
        .ok_or_else(|| Failure::usage("--spec PATH is required"))?;
    Ok(parse_spec(path)?)
}

fn verdict_code<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> i32 {
    let mut code = EXIT_OK;
    for v in verdicts {
        match v {
            Verdict::Fails => return EXIT_FAILS,
            Verdict::UndecidedAtCap => code = EXIT_UNDECIDED,
            _ => {}
        }
    }
    code
}

fn header(out: &mut String, spec: &LoadedSpec) {
    let _ = writeln!(out, "spec: {} (digest {})", spec.label, &spec.digest[..12]);
}

/// One line per report, plus its witness.
fn print_report(out: &mut String, ext: &Extension, r: &PropertyReport) {
    let _ = writeln!(out, "{}: {} (work {})", r.property, r.verdict, r.work_count);
    if let Some(b) = &r.bound {
        let _ = writeln!(out, "  bound: {}", b.describe(ext));
    }
    if let Some(w) = &r.witness {
        let _ = writeln!(out, "  witness: {}", witness_text(ext, w));
    }
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
}

pub fn witness_text(ext: &Extension, w: &Witness) -> String {
    let ring = ext.ring();
    let d = |a| ring.display(a);
    let word = |w: &[usize]| {
        if w.is_empty() {
            "id".to_string()
        } else {
            fmt_delta_word(w)
        }
    };
    match w {
        Witness::SigmaCompatibility { alpha, a, b } => format!(
            "a = {}, b = {}, {}: ab = {}, a*sigma(b) = {}",
            d(*a),
            d(*b),
            fmt_alpha(alpha),
            d(ring.mul(*a, *b)),
            d(ring.mul(*a, ext.family().apply_sigma_power(alpha, *b)))
        ),
        Witness::DeltaCompatibility { word: wd, a, b } => format!(
            "a = {}, b = {}, {}: ab = 0 but a*delta(b) = {}",
            d(*a),
            d(*b),
            word(wd),
            d(ring.mul(*a, ext.family().apply_delta_word(wd, *b)))
        ),
        Witness::Rigidity { alpha, a } => {
            format!("a = {} is nonzero with a*{}(a) = 0", d(*a), fmt_alpha(alpha))
        }
        Witness::Armendariz {
            f,
            g,
            pair,
            offending,
        } => format!(
            "f = {}, g = {}; a = {} at {}, b = {} at {}; offending {}",
            ext.render(f),
            ext.render(g),
            d(pair.left.1),
            pair.left.0.render(ext.names()),
            d(pair.right.1),
            pair.right.0.render(ext.names()),
            ext.render(offending)
        ),
        Witness::NilStability {
            alpha,
            word: wd,
            a,
            b,
            delta_inner,
        } => {
            let order = if *delta_inner { "sigma after delta" } else { "delta after sigma" };
            format!(
                "a = {}, b = {}, {} and {} ({order}): ab nilpotent, image not",
                d(*a),
                d(*b),
                fmt_alpha(alpha),
                word(wd)
            )
        }
        Witness::NilPullback { alpha, a, b } => format!(
            "a = {}, b = {}, {}: a*sigma(b) nilpotent, ab = {} not",
            d(*a),
            d(*b),
            fmt_alpha(alpha),
            d(ring.mul(*a, *b))
        ),
    }
}

pub fn parse_support(text: &str, ext: &Extension, seed: u64) -> Result<SearchBound, String> {
    let text = text.trim();
    if let Some(d) = text.strip_prefix("deg") {
        let d: u32 = d.parse().map_err(|_| format!("bad support {text:?}"))?;
        return Ok(SearchBound::up_to_degree(ext, d).with_seed(seed));
    }
    let mut mons = Vec::new();
    for part in text.split(',') {
        let p = parse_normal_form(part, ext.ring(), ext.names()).map_err(|e| e.to_string())?;
        match p.terms().collect::<Vec<_>>().as_slice() {
            [(m, a)] if *a == ext.ring().one() => mons.push((*m).clone()),
            _ => return Err(format!("{part:?} is not a monomial")),
        }
    }
    Ok(SearchBound::new(ext, mons, default_scope(ext, seed)))
}

fn class_witness_json(ext: &Extension, w: &ClassWitness) -> Value {
    let mut v = serde_json::to_value(w).expect("witness serializes");
    if let Value::Object(m) = &mut v {
        for key in ["a", "b", "r"] {
            if let Some(Value::Number(n)) = m.get(key) {
                let e = n.as_u64().unwrap_or(0) as usize;
                m.insert(key.into(), element_json(ext.ring(), e));
            }
        }
    }
    v
}

fn execute(command: Command, out: &mut String) -> Result<(i32, BodyBuilder), Failure> {
    match command {
        Command::Presets { .. } => {
            let mut body = BodyBuilder::new("presets", None, 0);
            let mut list = Vec::new();
            for p in catalog() {
                let _ = writeln!(out, "{:<36} {}", p.label, p.description);
                list.push(json!({
                    "name": p.name,
                    "label": p.label,
                    "description": p.description,
                    "variables": p.ext.names(),
                }));
            }
            body.set("presets", Value::Array(list));
            Ok((EXIT_OK, body))
        }
        Command::Validate(c) => {
            let path = c.spec.as_ref().ok_or_else(|| Failure::usage("--spec PATH is required"))?;
            let spec = parse_spec_unchecked(path)?;
            let ext = &spec.ext;
            header(out, &spec);
            let mut body = BodyBuilder::new("validate", Some(&spec.digest), c.seed);
            let code = match ext.validate() {
                Ok(r) => {
                    let coverage = match r.scalar_coverage {
                        Coverage::Exhaustive => "exhaustive".to_string(),
                        Coverage::Sampled { samples, .. } => format!("{samples} sampled"),
                    };
                    let _ = writeln!(out, "presentation: ok");
                    let _ = writeln!(
                        out,
                        "  {} variable triples, {} scalar overlaps ({coverage})",
                        r.triples_checked, r.scalar_checks
                    );
                    let _ = writeln!(out, "  strict PBW: {}, leading-compatible: {}", r.strict_pbw, r.leading_compatible);
                    body.push_result(json!({
                        "property": "presentation",
                        "verdict": Verdict::Holds.as_str(),
                        "strict_pbw": r.strict_pbw,
                        "leading_compatible": r.leading_compatible,
                        "triples_checked": r.triples_checked,
                        "scalar_checks": r.scalar_checks,
                        "scalar_coverage": serde_json::to_value(&r.scalar_coverage).expect("coverage serializes"),
                    }));
                    EXIT_OK
                }
                Err(PbwError::RewriteBudgetExceeded { budget }) => {
                    let _ = writeln!(out, "presentation: undecided (rewrite budget {budget})");
                    body.push_result(json!({"property": "presentation", "verdict": Verdict::UndecidedAtCap.as_str()}));
                    EXIT_UNDECIDED
                }
                Err(e) => {
                    let _ = writeln!(out, "presentation: fails\n  {e}");
                    let mut r = json!({
                        "property": "presentation",
                        "verdict": Verdict::Fails.as_str(),
                        "error": e.to_string(),
                    });
                    if let PbwError::InconsistentPresentation {
                        overlap_text,
                        left_text,
                        right_text,
                        ..
                    } = &e
                    {
                        r["witness"] = json!({
                            "kind": "inconsistent-presentation",
                            "overlap": overlap_text,
                            "left": left_text,
                            "right": right_text,
                        });
                    }
                    body.push_result(r);
                    EXIT_FAILS
                }
            };
            Ok((code, body))
        }
        Command::Mul { common, exprs } => {
            let spec = load(&common)?;
            let ext = &spec.ext;
            let mut acc = ext.one();
            for e in &exprs {
                acc = ext.mul(&acc, &parse_poly(e, ext)?)?;
            }
            let text = ext.render(&acc);
            let _ = writeln!(out, "{text}");
            let mut body = BodyBuilder::new("mul", Some(&spec.digest), common.seed);
            body.set("inputs", json!(exprs)).set("product", json!(text));
            Ok((EXIT_OK, body))
        }
        Command::Nf { common, expr } => {
            let spec = load(&common)?;
            let f = parse_poly(&expr, &spec.ext)?;
            let text = spec.ext.render(&f);
            let _ = writeln!(out, "{text}");
            let mut body = BodyBuilder::new("nf", Some(&spec.digest), common.seed);
            body.set("input", json!(expr)).set("normal_form", json!(text));
            Ok((EXIT_OK, body))
        }
        Command::Leading { common, expr } => {
            let spec = load(&common)?;
            let ext = &spec.ext;
            let f = parse_poly(&expr, ext)?;
            let l = ext.leading(&f);
            let lm = l.lm.as_ref().map(|m| m.render(ext.names())).unwrap_or_else(|| "0".into());
            let lt = match &l.lm {
                None => "0".to_string(),
                Some(m) => ext.render(&ext.poly([(m.clone(), l.lc)])),
            };
            let _ = writeln!(out, "lm = {lm}\nlc = {}\nlt = {lt}\ndeg = {}", ext.ring().display(l.lc), l.deg);
            let mut body = BodyBuilder::new("leading", Some(&spec.digest), common.seed);
            body.set("input", json!(expr))
                .set("lm", json!(lm))
                .set("exp", json!(l.exp()))
                .set("lc", element_json(ext.ring(), l.lc))
                .set("lt", json!(lt))
                .set("deg", json!(l.deg));
            Ok((EXIT_OK, body))
        }
        Command::Nilpotent { common, expr } => {
            let spec = load(&common)?;
            let ext = &spec.ext;
            let f = parse_poly(&expr, ext)?;
            let ctx = NilContext::new(ext);
            let v = ctx.nilpotent(&f)?;
            let answer = if v.nilpotent { "nilpotent" } else { "not nilpotent" };
            let _ = writeln!(
                out,
                "{}: {answer} (method {}, exponent {}{})",
                ext.render(&f),
                v.method.as_str(),
                v.exponent_used,
                if v.exact { "" } else { ", inexact" }
            );
            let code = if v.exact { EXIT_OK } else { EXIT_UNDECIDED };
            let mut body = BodyBuilder::new("nilpotent", Some(&spec.digest), common.seed);
            body.set("input", json!(expr)).push_result(json!({
                "property": "nilpotent",
                "polynomial": ext.render(&f),
                "nilpotent": v.nilpotent,
                "method": v.method.as_str(),
                "exponent_used": v.exponent_used,
                "exact": v.exact,
            }));
            Ok((code, body))
        }
        Command::RingClass { common, class } => {
            let spec = load(&common)?;
            let ext = &spec.ext;
            header(out, &spec);
            let classes = match class {
                None => RingClass::ALL.to_vec(),
                Some(c) => vec![RingClass::from_name(&c)
                    .ok_or_else(|| Failure::usage(format!("unknown ring class {c:?}")))?],
            };
            let mut body = BodyBuilder::new("ring-class", Some(&spec.digest), common.seed);
            let mut verdicts = Vec::new();
            for c in classes {
                let v = check_ring_class(ext.ring(), c);
                let verdict = match (v.holds, &v.coverage) {
                    (false, _) => Verdict::Fails,
                    (true, Coverage::Exhaustive) => Verdict::Holds,
                    (true, _) => Verdict::HoldsAtBound,
                };
                let _ = writeln!(out, "ring:{}: {verdict}", c.name());
                if let Some(w) = &v.witness {
                    let _ = writeln!(out, "  witness: {}", w.describe(ext.ring()));
                }
                body.push_result(json!({
                    "property": format!("ring:{}", c.name()),
                    "verdict": verdict.as_str(),
                    "witness": v.witness.as_ref().map(|w| class_witness_json(ext, w)),
                    "coverage": serde_json::to_value(&v.coverage).expect("coverage serializes"),
                }));
                verdicts.push(verdict);
            }
            Ok((verdict_code(&verdicts), body))
        }
        Command::Compat(c) => {
            let spec = load(&c)?;
            let ext = &spec.ext;
            header(out, &spec);
            let compat = check_compatibility(ext.ring(), ext.family());
            let mut body = BodyBuilder::new("compat", Some(&spec.digest), c.seed);
            let sizes = (
                compat.sigma_closure.as_ref().map(|s| s.len()),
                compat.delta_closure.as_ref().map(|d| d.len()),
            );
            let show = |s: Option<usize>| s.map_or("over cap".to_string(), |n| n.to_string());
            let _ = writeln!(out, "closures: sigma {}, delta {}", show(sizes.0), show(sizes.1));
            body.set("sigma_closure_size", json!(sizes.0))
                .set("delta_closure_size", json!(sizes.1));
            for r in compat.reports() {
                print_report(out, ext, r);
                body.push_result(report_json(ext, r));
            }
            let _ = writeln!(out, "compatible: {}", compat.is_compatible());
            body.set("compatible", json!(compat.is_compatible()));
            Ok((verdict_code(compat.reports().map(|r| &r.verdict)), body))
        }
        Command::Rigid(c) => {
            let spec = load(&c)?;
            let ext = &spec.ext;
            header(out, &spec);
            let r = check_sigma_rigid(ext.ring(), ext.family());
            print_report(out, ext, &r);
            let mut body = BodyBuilder::new("rigid", Some(&spec.digest), c.seed);
            body.push_result(report_json(ext, &r));
            Ok((verdict_code([&r.verdict]), body))
        }
        Command::Armendariz {
            common,
            search,
            variant,
        } => {
            let spec = load(&common)?;
            let ext = &spec.ext;
            let variant = ArmendarizVariant::from_name(&variant)
                .ok_or_else(|| Failure::usage(format!("unknown variant {variant:?}")))?;
            let bound = parse_support(&search.support, ext, common.seed).map_err(Failure::usage)?;
            header(out, &spec);
            if search.support.trim() != "deg1" {
                let _ = writeln!(
                    out,
                    "work estimate: {} polynomial pairs ({})",
                    bound.pair_count(ext.ring().size()),
                    bound.describe(ext)
                );
            }
            let ctx = NilContext::new(ext);
            let r = check_armendariz_capped(&ctx, variant, &bound, search.max_pairs)?;
            print_report(out, ext, &r);
            let mut body = BodyBuilder::new("armendariz", Some(&spec.digest), common.seed);
            body.set("variant", json!(variant.name()))
                .set("max_pairs", json!(search.max_pairs))
                .push_result(report_json(ext, &r));
            Ok((verdict_code([&r.verdict]), body))
        }
        Command::Lemmas(c) => {
            let spec = load(&c)?;
            let ext = &spec.ext;
            header(out, &spec);
            let ctx = NilContext::new(ext);
            let mut body = BodyBuilder::new("lemmas", Some(&spec.digest), c.seed);
            let mut verdicts = Vec::new();
            for (name, res) in [
                (crate::nilarmendariz::NIL_STABILITY, verify_lemma_nil_stability(&ctx)),
                (crate::nilarmendariz::NIL_PULLBACK, verify_lemma_nil_pullback(&ctx)),
            ] {
                match res {
                    Ok(r) => {
                        print_report(out, ext, &r);
                        body.push_result(report_json(ext, &r));
                        verdicts.push(r.verdict);
                    }
                    Err(NilError::HypothesisNotVerified { hypothesis, detail }) => {
                        let _ = writeln!(out, "{name}: not applicable ({hypothesis} not verified: {detail})");
                        body.push_result(json!({
                            "property": name,
                            "verdict": "not_applicable",
                            "reason": format!("{hypothesis} not verified: {detail}"),
                        }));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            Ok((verdict_code(&verdicts), body))
        }
        Command::Suite { common, support } => {
            let spec = load(&common)?;
            let ext = &spec.ext;
            let bound = parse_support(&support, ext, common.seed).map_err(Failure::usage)?;
            header(out, &spec);
            let _ = writeln!(out, "bound: {}", bound.describe(ext));
            let ctx = NilContext::new(ext);
            let imps = verify_implication_suite(&ctx, &bound)?;
            let mut body = BodyBuilder::new("suite", Some(&spec.digest), common.seed);
            body.set("bound", bound_json(ext, &bound));
            let mut code = EXIT_OK;
            for imp in &imps {
                let _ = writeln!(out, "{:<28} {:<12} {}", imp.name, imp.status.as_str(), imp.statement);
                if imp.status == ImplicationStatus::Violation {
                    if let Some(w) = &imp.consequent.witness {
                        let _ = writeln!(out, "  witness: {}", witness_text(ext, w));
                    }
                }
                code = match (code, imp.status) {
                    (_, ImplicationStatus::Violation) => EXIT_FAILS,
                    (EXIT_OK, ImplicationStatus::Undecided) => EXIT_UNDECIDED,
                    (c, _) => c,
                };
                body.push_result(implication_json(ext, imp));
            }
            Ok((code, body))
        }
    }
}

#[cfg(test)]
mod tests;
