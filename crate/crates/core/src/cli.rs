//! Command-line front end. Every invocation prints one JSON report on
//! standard output and a one-line summary on standard error.
//!
//! Exit codes: 0 when the verdict is ok, 1 when it is not (or a
//! computation is refused), 2 for malformed input.

use std::collections::BTreeMap;

use clap::{Parser, ValueEnum};
use serde_json::{json, Value};

use crate::action::ActionData;
use crate::algebra::LeibnizAlgebra;
use crate::bider::{actor, bider_algebra, bider_qn, bider_xmod, lift_sequence, ShortExactSequence};
use crate::catalog::{self, CatalogObject};
use crate::error::{Error, Result};
use crate::io::{bider_to_json, check_field, maps_from_json, matrix_to_json, Codec};
use crate::report::AlgebraReport;
use crate::scalar::{Field, Rational, F2, F3};
use crate::xaction::XModActionData;
use crate::xmod::{CrossedModule, XModMorphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Validate,
    Ann,
    Comm,
    Bider,
    BiderQn,
    BiderXmod,
    Actor,
    Delta,
    Canonical,
    Center,
    Conditions,
    Inner,
    Outer,
    Semidirect,
    SemidirectXmod,
    XactionValidate,
    XactionToMorphism,
    MorphismToXaction,
    Lift,
    Catalog,
}

impl Command {
    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Q,
    F2,
    F3,
}

#[derive(Debug, Parser)]
#[command(
    name = "leibniz-xmod",
    about = "Leibniz algebras, crossed modules and their actors"
)]
struct Args {
    command: Command,
    /// `catalog:ID` or a path to a JSON document.
    #[arg(long = "in")]
    input: Option<String>,
    #[arg(long, value_enum, default_value = "q")]
    field: FieldArg,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Everything a command can read.
enum Input<F> {
    Algebra(LeibnizAlgebra<F>),
    Action(ActionData<F>),
    XMod(CrossedModule<F>),
    XAction(XModActionData<F>),
    Morphism(XModMorphism<F>),
    /// A morphism into the actor of `acted_on`, in the actor's canonical
    /// basis.
    IntoActor {
        acted_on: CrossedModule<F>,
        source: CrossedModule<F>,
        doc: Value,
    },
    Sequence(ShortExactSequence<F>),
}

impl<F: Field> Input<F> {
    fn kind(&self) -> &'static str {
        match self {
            Input::Algebra(_) => "algebra",
            Input::Action(_) => "action",
            Input::XMod(_) => "crossed-module",
            Input::XAction(_) => "xmod-action",
            Input::Morphism(_) => "morphism",
            Input::IntoActor { .. } => "morphism-into-actor",
            Input::Sequence(_) => "sequence",
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Input::Algebra(a) => a.to_json(),
            Input::Action(a) => a.to_json(),
            Input::XMod(x) => x.to_json(),
            Input::XAction(d) => d.to_json(),
            Input::Morphism(f) => f.to_json(),
            Input::IntoActor { doc, .. } => doc.clone(),
            Input::Sequence(s) => s.to_json(),
        }
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_document<F: Field>(v: &Value) -> Result<Input<F>> {
    check_field::<F>(v)?;
    // A previous report: read its result, or the one object nested in it.
    if let (Some(_), Some(inner)) = (v.get("command"), v.get("result")) {
        return match inner.as_object() {
            Some(o) if o.len() == 1 && o.values().all(Value::is_object) => {
                parse_document(o.values().next().unwrap())
            }
            _ => parse_document(inner),
        };
    }
    let has = |k: &str| v.get(k).is_some();
    if has("acted_on") {
        let acted_on = CrossedModule::from_json(&v["acted_on"])?;
        let source = CrossedModule::from_json(
            v.get("source")
                .ok_or_else(|| malformed("missing key \"source\""))?,
        )?;
        return Ok(Input::IntoActor {
            acted_on,
            source,
            doc: v.clone(),
        });
    }
    if has("sub") {
        return Ok(Input::Sequence(ShortExactSequence::from_json(v)?));
    }
    if has("p_on_n") {
        return Ok(Input::XAction(XModActionData::from_json(v)?));
    }
    if has("top_map") {
        return Ok(Input::Morphism(XModMorphism::from_json(v)?));
    }
    if has("boundary") {
        return Ok(Input::XMod(CrossedModule::from_json(v)?));
    }
    if has("left") {
        return Ok(Input::Action(ActionData::from_json(v)?));
    }
    if has("dim") {
        return Ok(Input::Algebra(LeibnizAlgebra::from_json(v)?));
    }
    Err(malformed("unrecognized document"))
}

fn load_input<F: Field>(spec: &str) -> Result<Input<F>> {
    if let Some(id) = spec.strip_prefix("catalog:") {
        return Ok(match catalog::load::<F>(id)?.object {
            CatalogObject::Algebra(a) => Input::Algebra(a),
            CatalogObject::CrossedModule(x) => Input::XMod(x),
            CatalogObject::Action(d) => Input::XAction(d),
            CatalogObject::Sequence(s) => Input::Sequence(s),
        });
    }
    let text = std::fs::read_to_string(spec)?;
    let v: Value = serde_json::from_str(&text)?;
    parse_document(&v)
}

/// Report under construction.
struct Report<F> {
    ok: bool,
    dims: BTreeMap<String, Value>,
    result: BTreeMap<String, Value>,
    checks: AlgebraReport<F>,
    error: Option<String>,
    summary: String,
}

impl<F: Field> Report<F> {
    fn new() -> Self {
        Report {
            ok: true,
            dims: BTreeMap::new(),
            result: BTreeMap::new(),
            checks: AlgebraReport::new(),
            error: None,
            summary: String::new(),
        }
    }

    fn dim(&mut self, k: &str, d: usize) {
        self.dims.insert(k.into(), json!(d));
    }

    fn put(&mut self, k: &str, v: Value) {
        self.result.insert(k.into(), v);
    }

    /// Records a validator outcome; the verdict is the conjunction.
    fn verdict(&mut self, prefix: &str, r: AlgebraReport<F>) {
        self.ok &= r.ok();
        self.checks.absorb(prefix, r);
    }
}

fn violation_json<F: Field>(r: &AlgebraReport<F>) -> Value {
    Value::Array(
        r.violations()
            .iter()
            .map(|v| {
                json!({
                    "label": v.label,
                    "witness": v.witness,
                    "lhs": v.lhs.iter().map(crate::io::scalar_to_json).collect::<Vec<_>>(),
                    "rhs": v.rhs.iter().map(crate::io::scalar_to_json).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn wrong_kind<F: Field>(cmd: Command, input: &Input<F>) -> Error {
    malformed(format!(
        "{} does not accept a {} document",
        cmd.name(),
        input.kind()
    ))
}

fn validated_xmod<F: Field>(rep: &mut Report<F>, x: &CrossedModule<F>) -> bool {
    let r = x.validate();
    if !r.ok() {
        rep.verdict("input", r);
        rep.summary = "input crossed module is invalid".into();
        return false;
    }
    true
}

fn maps_json<F: Field>(f: &XModMorphism<F>) -> Value {
    json!({ "top_map": matrix_to_json(&f.top_map), "base_map": matrix_to_json(&f.base_map) })
}

fn execute<F: Field>(cmd: Command, input: &Input<F>, rep: &mut Report<F>) -> Result<()> {
    use Command::*;
    match (cmd, input) {
        (Validate, i) => {
            match i {
                Input::Algebra(a) => rep.verdict("", a.validate_leibniz()),
                Input::Action(a) => {
                    rep.verdict("actor", a.actor.validate_leibniz());
                    rep.verdict("target", a.target.validate_leibniz());
                    rep.verdict("", a.validate());
                }
                Input::XMod(x) => rep.verdict("", x.validate()),
                Input::XAction(d) => {
                    rep.verdict("actor", d.actor.validate());
                    rep.verdict("target", d.target.validate());
                    rep.verdict("", d.validate());
                }
                Input::Morphism(f) => {
                    rep.verdict("source", f.source.validate());
                    rep.verdict("target", f.target.validate());
                    rep.verdict("", f.validate());
                }
                Input::IntoActor { .. } => return Err(wrong_kind(cmd, i)),
                Input::Sequence(s) => {
                    if let Err(e) = s.check_exact() {
                        rep.ok = false;
                        rep.error = Some(e.to_string());
                    }
                }
            }
            rep.put("kind", json!(i.kind()));
            rep.summary = format!(
                "{} {}",
                i.kind(),
                if rep.ok { "is valid" } else { "is invalid" }
            );
        }
        (Ann | Comm, Input::Algebra(a)) => {
            let (name, s) = if cmd == Ann {
                ("annihilator", a.annihilator())
            } else {
                ("commutator", a.commutator())
            };
            rep.dim(name, s.dim());
            rep.put(name, s.to_json());
            if cmd == Comm {
                rep.put("perfect", json!(a.is_perfect()));
            }
            rep.summary = format!("{name} of dimension {}", s.dim());
        }
        (Ann | Comm, Input::XMod(x)) => {
            let name = if cmd == Ann {
                "annihilator"
            } else {
                "commutator"
            };
            for (side, a) in [("top", x.top()), ("base", x.base())] {
                let s = if cmd == Ann {
                    a.annihilator()
                } else {
                    a.commutator()
                };
                rep.dim(side, s.dim());
                rep.put(side, s.to_json());
            }
            rep.summary = format!(
                "{name}s of dimensions {} and {}",
                rep.dims["top"], rep.dims["base"]
            );
        }
        (Bider, Input::Algebra(a)) => {
            let b = bider_algebra(a)?;
            rep.verdict("bracket", b.algebra().validate_leibniz());
            rep.dim("bider", b.dim());
            rep.put("bider", bider_to_json(&b, &a.to_json()));
            rep.summary = format!("biderivations of dimension {}", b.dim());
        }
        (BiderQn | BiderXmod, Input::XMod(x)) => {
            if !validated_xmod(rep, x) {
                return Ok(());
            }
            let (name, dim, v, r) = if cmd == BiderQn {
                let b = bider_qn(x)?;
                (
                    "bider-qn",
                    b.dim(),
                    bider_to_json(&b, &x.to_json()),
                    b.algebra().validate_leibniz(),
                )
            } else {
                let b = bider_xmod(x)?;
                (
                    "bider-xmod",
                    b.dim(),
                    bider_to_json(&b, &x.to_json()),
                    b.algebra().validate_leibniz(),
                )
            };
            rep.verdict("bracket", r);
            rep.dim(name, dim);
            rep.put(name, v);
            rep.summary = format!("{name} of dimension {dim}");
        }
        (Actor | Delta | Canonical | Inner | Outer, Input::XMod(x)) => {
            if !validated_xmod(rep, x) {
                return Ok(());
            }
            let a = actor(x)?;
            let (top, base) = a.xmod.dims();
            rep.dim("top", top);
            rep.dim("base", base);
            match cmd {
                Actor => {
                    rep.verdict("actor", a.xmod.validate());
                    rep.put("actor", a.xmod.to_json());
                    rep.put("pairs", bider_to_json(&a.pairs, &x.to_json()));
                    rep.put("quads", bider_to_json(&a.quads, &x.to_json()));
                    rep.summary = format!("actor of dimensions ({top}, {base})");
                }
                Delta => {
                    rep.put("delta", matrix_to_json(a.delta()));
                    rep.put("rank", json!(a.delta().rank()));
                    rep.summary = format!("delta of rank {}", a.delta().rank());
                }
                Canonical => {
                    let f = a.canonical_morphism()?;
                    rep.verdict("canonical", f.validate());
                    let k = f.kernel()?;
                    rep.dim("kernel-top", k.top.dim());
                    rep.dim("kernel-base", k.base.dim());
                    rep.put("morphism", maps_json(&f));
                    rep.summary = format!(
                        "canonical morphism with kernel of dimensions {:?}",
                        k.dims()
                    );
                }
                Inner => {
                    let inn = a.inner()?;
                    rep.dim("inner-top", inn.top.dim());
                    rep.dim("inner-base", inn.base.dim());
                    rep.put("top", inn.top.to_json());
                    rep.put("base", inn.base.to_json());
                    rep.verdict("inner", inn.xmod.validate());
                    rep.summary = format!("inner biderivations of dimensions {:?}", inn.dims());
                }
                _ => {
                    let out = a.outer()?;
                    rep.dim("outer-top", out.xmod.dims().0);
                    rep.dim("outer-base", out.xmod.dims().1);
                    rep.verdict("outer", out.xmod.validate());
                    rep.put("outer", out.xmod.to_json());
                    rep.summary =
                        format!("outer biderivations of dimensions {:?}", out.xmod.dims());
                }
            }
        }
        (Center, Input::XMod(x)) => {
            if !validated_xmod(rep, x) {
                return Ok(());
            }
            let c = x.center()?;
            rep.dim("top", c.center.top.dim());
            rep.dim("base", c.center.base.dim());
            rep.put("top", c.center.top.to_json());
            rep.put("base", c.center.base.to_json());
            rep.put(
                "warning",
                c.warning.clone().map_or(Value::Null, Value::String),
            );
            rep.summary = format!("center of dimensions {:?}", c.center.dims());
        }
        (Conditions, Input::XMod(x)) => {
            let c = x.conditions();
            rep.put("con1", json!(c.con1));
            rep.put("con2", json!(c.con2));
            rep.put("con3", json!(c.con3));
            rep.put(
                "perfect_top_centerless_base",
                json!(c.perfect_top_centerless_base),
            );
            rep.summary = format!("CON1 {} CON2 {} CON3 {}", c.con1, c.con2, c.con3);
        }
        (Semidirect, Input::Action(a)) => semidirect(rep, a)?,
        (Semidirect, Input::XMod(x)) => semidirect(rep, x.action())?,
        (SemidirectXmod, Input::XAction(d)) => {
            let r = d.validate();
            if !r.ok() {
                rep.verdict("input", r);
                rep.summary = "action data is invalid".into();
                return Ok(());
            }
            let s = d.semidirect_xmod()?;
            rep.verdict("", s.check_split());
            rep.dim("top", s.xmod.dims().0);
            rep.dim("base", s.xmod.dims().1);
            rep.put("xmod", s.xmod.to_json());
            rep.put("inclusion", maps_json(&s.inclusion));
            rep.put("projection", maps_json(&s.projection));
            rep.put("section", maps_json(&s.section));
            rep.summary = format!("semidirect product of dimensions {:?}", s.xmod.dims());
        }
        (XactionValidate, Input::XAction(d)) => {
            let forward = d.validate_forward().ok();
            rep.verdict("", d.validate());
            rep.put("forward_ok", json!(forward));
            let flags = d.target.conditions();
            if !flags.any() && flags.perfect_top_centerless_base {
                rep.put("note", json!("target has a perfect top and a centerless base; only the p-actions are determined"));
            }
            rep.summary = format!("action data {}", if rep.ok { "valid" } else { "invalid" });
        }
        (XactionToMorphism, Input::XAction(d)) => {
            let a = actor(&d.target)?;
            let f = d.morphism_from_action(&a)?;
            rep.verdict("", f.validate());
            rep.put("acted_on", d.target.to_json());
            rep.put("source", d.actor.to_json());
            rep.put("top_map", matrix_to_json(&f.top_map));
            rep.put("base_map", matrix_to_json(&f.base_map));
            rep.summary = "morphism into the actor".into();
        }
        (
            MorphismToXaction,
            Input::IntoActor {
                acted_on,
                source,
                doc,
            },
        ) => {
            let a = actor(acted_on)?;
            let f = maps_from_json(doc, source.clone(), a.xmod.clone())?;
            let d = XModActionData::action_from_morphism(&f, &a)?;
            rep.verdict("", d.validate());
            rep.put("xaction", d.to_json());
            rep.summary = "action data read off the morphism".into();
        }
        (MorphismToXaction, Input::XAction(d)) => {
            // Round trip through the actor.
            let a = actor(&d.target)?;
            let f = d.morphism_from_action(&a)?;
            let back = XModActionData::action_from_morphism(&f, &a)?;
            rep.verdict("", back.validate());
            rep.ok &= back == *d;
            rep.put("round_trip", json!(back == *d));
            rep.put("xaction", back.to_json());
            rep.summary = format!(
                "round trip {}",
                if back == *d { "exact" } else { "differs" }
            );
        }
        (Lift, Input::Sequence(s)) => {
            let l = lift_sequence(s)?;
            rep.verdict("", l.report.clone());
            rep.dim("actor-top", l.actor.xmod.dims().0);
            rep.dim("actor-base", l.actor.xmod.dims().1);
            rep.dim("outer-top", l.outer.xmod.dims().0);
            rep.dim("outer-base", l.outer.xmod.dims().1);
            rep.put("alpha_beta", maps_json(&l.alpha_beta));
            rep.put("gamma", maps_json(&l.gamma));
            rep.summary = format!("lift {}", if rep.ok { "commutes" } else { "fails" });
        }
        (_, i) => return Err(wrong_kind(cmd, i)),
    }
    Ok(())
}

fn semidirect<F: Field>(rep: &mut Report<F>, a: &ActionData<F>) -> Result<()> {
    let r = a.validate();
    if !r.ok() {
        rep.verdict("input", r);
        rep.summary = "action is invalid".into();
        return Ok(());
    }
    let s = a.semidirect()?;
    rep.verdict("", s.algebra.validate_leibniz());
    rep.dim("semidirect", s.algebra.dim());
    rep.put("algebra", s.algebra.to_json());
    rep.summary = format!("semidirect product of dimension {}", s.algebra.dim());
    Ok(())
}

fn catalog_listing<F: Field>(rep: &mut Report<F>) -> Result<()> {
    let mut entries = Vec::new();
    for id in catalog::ids() {
        let e = catalog::load::<F>(id)?;
        entries.push(json!({ "id": id, "kind": e.object.kind(), "note": e.note }));
    }
    rep.summary = format!("{} catalog entries", entries.len());
    rep.put("entries", Value::Array(entries));
    Ok(())
}

fn is_refusal(e: &Error) -> bool {
    matches!(
        e,
        Error::NoCondition(_)
            | Error::NotExact(_)
            | Error::Invalid(_)
            | Error::NotClosed(_)
            | Error::NotInSolutionSpace(_)
    )
}

fn run_with<F: Field>(cmd: Command, input_spec: Option<&str>) -> (i32, Value, String) {
    let mut rep = Report::<F>::new();
    let outcome: Result<()> = (|| {
        if cmd == Command::Catalog && input_spec.is_none() {
            return catalog_listing(&mut rep);
        }
        let spec = input_spec.ok_or_else(|| malformed(format!("{} needs --in", cmd.name())))?;
        let input = load_input::<F>(spec)?;
        if cmd == Command::Catalog {
            rep.put("kind", json!(input.kind()));
            rep.put("object", input.to_json());
            rep.summary = format!("{} {spec}", input.kind());
            return Ok(());
        }
        execute(cmd, &input, &mut rep)
    })();
    let code = match &outcome {
        Ok(()) if rep.ok => 0,
        Ok(()) => 1,
        Err(e) if is_refusal(e) => 1,
        Err(_) => 2,
    };
    if let Err(e) = &outcome {
        rep.ok = false;
        rep.error = Some(e.to_string());
        rep.summary = if code == 1 {
            format!("refused: {e}")
        } else {
            format!("error: {e}")
        };
    }
    let mut doc = BTreeMap::new();
    doc.insert("command", json!(cmd.name()));
    doc.insert("field", json!(F::TAG.to_string()));
    doc.insert("input", input_spec.map_or(Value::Null, |s| json!(s)));
    doc.insert("ok", json!(rep.ok));
    doc.insert("dims", json!(rep.dims));
    doc.insert("result", json!(rep.result));
    doc.insert("violations", violation_json(&rep.checks));
    if let Some(e) = &rep.error {
        doc.insert("error", json!(e));
    }
    let summary = format!("{}: {}", cmd.name(), rep.summary);
    (code, json!(doc), summary)
}

/// Parses `argv` (program name first) and runs one command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let input = args.input.as_deref();
    let (code, doc, summary) = match args.field {
        FieldArg::Q => run_with::<Rational>(args.command, input),
        FieldArg::F2 => run_with::<F2>(args.command, input),
        FieldArg::F3 => run_with::<F3>(args.command, input),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    text.push('\n');
    match &args.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: format!("{summary}\nreport written to {path}\n"),
            },
            Err(e) => Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("cannot write {path}: {e}\n"),
            },
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: format!("{summary}\n"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, Value) {
        let mut argv = vec!["leibniz-xmod"];
        argv.extend_from_slice(args);
        let o = run(argv);
        let v = if o.stdout.is_empty() {
            Value::Null
        } else {
            serde_json::from_str(&o.stdout).unwrap()
        };
        (o.code, v)
    }

    #[test]
    fn actor_of_l2() {
        let (code, v) = run_args(&["actor", "--in", "catalog:q-q-id-L2"]);
        assert_eq!(code, 0);
        assert_eq!(v["dims"], json!({"top": 3, "base": 3}));
        assert_eq!(v["ok"], json!(true));
    }

    #[test]
    fn conditions_of_sl2() {
        let (code, v) = run_args(&["conditions", "--in", "catalog:sl2-id"]);
        assert_eq!(code, 0);
        assert_eq!(v["result"]["con1"], json!(true));
        assert_eq!(v["result"]["con2"], json!(true));
        assert_eq!(v["result"]["con3"], json!(true));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["actor", "--in", "catalog:nope"]).0, 2);
        assert_eq!(run_args(&["frobnicate"]).0, 2);
        assert_eq!(run_args(&["actor", "--in", "catalog:L2"]).0, 2);
        assert_eq!(
            run_args(&["validate", "--in", "/nonexistent/file.json"]).0,
            2
        );
        let (code, v) = run_args(&["lift", "--in", "catalog:sl2-split"]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(
            run_args(&["validate", "--in", "catalog:forward-only-action"]).0,
            1
        );
    }

    #[test]
    fn catalog_listing_and_fields() {
        let (code, v) = run_args(&["catalog"]);
        assert_eq!(code, 0);
        assert_eq!(
            v["result"]["entries"].as_array().unwrap().len(),
            catalog::ids().len()
        );
        let (code, v) = run_args(&["bider", "--in", "catalog:L2", "--field", "f2"]);
        assert_eq!(code, 0);
        assert_eq!(v["field"], json!("F2"));
    }
}
