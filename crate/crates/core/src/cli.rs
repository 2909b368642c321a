//! Command-line front end.
//!
//! Objects are read as JSON documents:
//!
//! ```json
//! {"kind": "ideal", "vars": ["x", "y", "z"], "gens": ["x*y", "x*z", [0, 1, 1]]}
//! {"kind": "complex", "vars": ["x", "y", "z"], "facets": [["x", "y"], ["z"]]}
//! {"kind": "clutter", "vars": ["x", "y", "z"], "edges": [["x", "y"], ["y", "z"]]}
//! ```
//!
//! A complex may name its `ground` set and a clutter its `vertices`; both
//! default to all variables. The variable order fixes every tie-break, so
//! it is part of the input.
//!
//! Exit status: 0 success, 1 property violation, 2 usage or parse error,
//! 3 search budget exhausted.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::clutters::{self, BoundOptions, Chordality, ChordalityChecker, MinorTrace};
use crate::decomposition::{self, Decision, IdealSearcher, Mode};
use crate::error::{Error, Result};
use crate::model::{minimal_sets, Clutter, Ctx, Monomial, MonomialIdeal, SimplicialComplex, VariableContext, VertexSet};
use crate::oracle::{self, Field};
use crate::resolution::{self, BettiTable};
use crate::verify::{self, Property};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ideal,
    Complex,
    Clutter,
}

/// A generator given as a monomial string or an exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GenSpec {
    Text(String),
    Exponents(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub kind: Kind,
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<Vec<GenSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
    Clutter(Clutter),
}

impl Object {
    pub fn ctx(&self) -> &Ctx {
        match self {
            Object::Ideal(i) => i.ctx(),
            Object::Complex(c) => c.ctx(),
            Object::Clutter(h) => h.ctx(),
        }
    }

    /// The ideal a computation runs on: `I`, `I_Δ` or `I(H)`.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        match self {
            Object::Ideal(i) => Ok(i.clone()),
            Object::Complex(c) => c.ideal(),
            Object::Clutter(h) => Ok(h.edge_ideal()),
        }
    }

    pub fn display(&self) -> String {
        match self {
            Object::Ideal(i) => i.display(),
            Object::Complex(c) => c.display(),
            Object::Clutter(h) => h.display(),
        }
    }
}

/// A parsed object plus the warnings raised while minimalizing it.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub object: Object,
    pub warnings: Vec<String>,
}

pub fn parse_document(text: &str) -> Result<Parsed> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(at) => full[..at].to_string(),
            None => full,
        };
        Error::Syntax {
            line: e.line(),
            column: e.column(),
            message,
        }
    })?;
    build(&doc)
}

fn reject_field(present: bool, field: &str, kind: &str) -> Result<()> {
    if present {
        return Err(Error::Precondition(format!("field `{field}` does not apply to a {kind}")));
    }
    Ok(())
}

fn require<'a, T>(value: &'a Option<T>, field: &str) -> Result<&'a T> {
    value
        .as_ref()
        .ok_or_else(|| Error::Precondition(format!("missing field `{field}`")))
}

pub fn build(doc: &InputDocument) -> Result<Parsed> {
    let ctx = VariableContext::new(doc.vars.iter().cloned())?;
    let mut warnings = Vec::new();
    let object = match doc.kind {
        Kind::Ideal => {
            reject_field(doc.facets.is_some(), "facets", "ideal")?;
            reject_field(doc.ground.is_some(), "ground", "ideal")?;
            reject_field(doc.edges.is_some(), "edges", "ideal")?;
            reject_field(doc.vertices.is_some(), "vertices", "ideal")?;
            let specs = require(&doc.gens, "gens")?;
            let gens = specs
                .iter()
                .map(|g| match g {
                    GenSpec::Text(t) => Monomial::parse(&ctx, t),
                    GenSpec::Exponents(e) if e.len() == ctx.len() => Ok(Monomial::from_exponents(e.clone())),
                    GenSpec::Exponents(e) => Err(Error::MonomialSyntax {
                        text: format!("{e:?}"),
                        column: 0,
                        reason: format!("expected {} exponents", ctx.len()),
                    }),
                })
                .collect::<Result<Vec<_>>>()?;
            let ideal = if gens.is_empty() {
                MonomialIdeal::zero(&ctx)
            } else {
                MonomialIdeal::minimalize(&ctx, gens)?
            };
            if ideal.len() < specs.len() {
                warnings.push(format!(
                    "removed {} duplicate or redundant generator(s)",
                    specs.len() - ideal.len()
                ));
            }
            Object::Ideal(ideal)
        }
        Kind::Complex => {
            reject_field(doc.gens.is_some(), "gens", "complex")?;
            reject_field(doc.edges.is_some(), "edges", "complex")?;
            reject_field(doc.vertices.is_some(), "vertices", "complex")?;
            let faces = require(&doc.facets, "facets")?
                .iter()
                .map(|f| ctx.set_from_names(f))
                .collect::<Result<Vec<_>>>()?;
            let ground = match &doc.ground {
                Some(g) => ctx.set_from_names(g)?,
                None => ctx.all(),
            };
            let count = faces.len();
            let complex = SimplicialComplex::new(&ctx, ground, faces)?;
            if complex.facets().len() < count {
                warnings.push(format!(
                    "removed {} duplicate or non-maximal face(s)",
                    count - complex.facets().len()
                ));
            }
            Object::Complex(complex)
        }
        Kind::Clutter => {
            reject_field(doc.gens.is_some(), "gens", "clutter")?;
            reject_field(doc.facets.is_some(), "facets", "clutter")?;
            reject_field(doc.ground.is_some(), "ground", "clutter")?;
            let edges = require(&doc.edges, "edges")?
                .iter()
                .map(|e| ctx.set_from_names(e))
                .collect::<Result<Vec<_>>>()?;
            let vertices = match &doc.vertices {
                Some(v) => ctx.set_from_names(v)?,
                None => ctx.all(),
            };
            let count = edges.len();
            let edges = minimal_sets(edges);
            if edges.len() < count {
                warnings.push(format!("removed {} duplicate or non-minimal edge(s)", count - edges.len()));
            }
            Object::Clutter(Clutter::new(&ctx, vertices, edges)?)
        }
    };
    Ok(Parsed { object, warnings })
}

fn names(ctx: &VariableContext, s: VertexSet) -> Vec<String> {
    ctx.set_names(s)
}

/// The document that parses back to `object`.
pub fn emit(object: &Object) -> InputDocument {
    let ctx = object.ctx();
    let mut doc = InputDocument {
        kind: Kind::Ideal,
        vars: ctx.names().to_vec(),
        gens: None,
        facets: None,
        ground: None,
        edges: None,
        vertices: None,
    };
    match object {
        Object::Ideal(i) => {
            doc.gens = Some(i.gens().iter().map(|g| GenSpec::Text(g.to_string_with(ctx))).collect());
        }
        Object::Complex(c) => {
            doc.kind = Kind::Complex;
            doc.facets = Some(c.facets().iter().map(|f| names(ctx, *f)).collect());
            if c.ground() != ctx.all() {
                doc.ground = Some(names(ctx, c.ground()));
            }
        }
        Object::Clutter(h) => {
            doc.kind = Kind::Clutter;
            doc.edges = Some(h.edges().iter().map(|e| names(ctx, *e)).collect());
            if h.vertices() != ctx.all() {
                doc.vertices = Some(names(ctx, h.vertices()));
            }
        }
    }
    doc
}

pub fn emit_json(object: &Object) -> String {
    serde_json::to_string(&emit(object)).expect("documents serialize")
}

#[derive(Parser, Debug)]
#[command(name = "kdecomp", version, about = "Shedding decompositions, Betti tables and chordal clutters")]
struct Cli {
    /// Print structured JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander dual of an ideal, complex, or the edge ideal of a clutter
    Dual {
        /// Input document; standard input when absent or `-`
        input: Option<PathBuf>,
    },
    /// Graded Betti table
    Betti {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = BettiMethod::Oracle)]
        method: BettiMethod,
        /// Field characteristic for the oracle: 0 or a prime
        #[arg(long, default_value_t = 0)]
        characteristic: u32,
    },
    /// Decide k-decomposability and print a certificate
    Decompose {
        input: Option<PathBuf>,
        /// Largest shedding face dimension, or `any`
        #[arg(long, value_parser = parse_k)]
        k: KBound,
        #[arg(long, value_enum, default_value_t = ModeArg::Direct)]
        mode: ModeArg,
    },
    /// reg(R/I), pd(R/I) and big height
    Invariants { input: Option<PathBuf> },
    /// Clutter operations
    Clutter {
        #[command(subcommand)]
        action: ClutterCommand,
    },
    /// Randomized property runs
    Verify {
        #[arg(value_enum)]
        property: PropertyArg,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
}

#[derive(Subcommand, Debug)]
enum ClutterCommand {
    /// Decide chordality; a witness minor is printed otherwise
    Chordal { input: Option<PathBuf> },
    /// Regularity identity and bound at a simplicial vertex and an edge through it
    Bound {
        input: Option<PathBuf>,
        #[arg(long)]
        vertex: String,
        /// Comma separated vertex names
        #[arg(long)]
        edge: String,
        /// Skip the chordality report on the minors
        #[arg(long)]
        no_minor_check: bool,
    },
    /// Apply deletions and contractions, e.g. `d:x,c:y`
    Minor {
        input: Option<PathBuf>,
        #[arg(long)]
        ops: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BettiMethod {
    Order,
    Recursive,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Direct,
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PropertyArg {
    Terao,
    Ha,
    Regp,
    LemmaH,
    ThreeWay,
}

impl From<PropertyArg> for Property {
    fn from(p: PropertyArg) -> Self {
        match p {
            PropertyArg::Terao => Property::Terao,
            PropertyArg::Ha => Property::Ha,
            PropertyArg::Regp => Property::Regp,
            PropertyArg::LemmaH => Property::LemmaH,
            PropertyArg::ThreeWay => Property::ThreeWay,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct KBound(Option<usize>);

fn parse_k(text: &str) -> std::result::Result<KBound, String> {
    if text == "any" {
        return Ok(KBound(None));
    }
    text.parse::<usize>()
        .map(|k| KBound(Some(k)))
        .map_err(|_| format!("expected a nonnegative integer or `any`, got `{text}`"))
}

/// Exit status for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Violation(_) | Error::Internal(_) => 1,
        Error::Budget(_) => 3,
        _ => 2,
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// Runs the command line `args` (program name first). Returns the exit
/// status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdin, stderr) {
        Ok(out) => {
            let _ = stdout.write_all(out.text.as_bytes());
            out.code
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read_object(path: &Option<PathBuf>, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<Object> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", p.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::Precondition(format!("cannot read standard input: {e}")))?;
        }
    }
    let parsed = parse_document(&text)?;
    for w in &parsed.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    Ok(parsed.object)
}

fn to_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<Output> {
    match &cli.command {
        Command::Dual { input } => {
            let object = read_object(input, stdin, stderr)?;
            let dual = match &object {
                Object::Complex(c) => Object::Complex(c.alexander_dual()),
                other => Object::Ideal(other.ideal()?.alexander_dual()?),
            };
            Ok(Output::ok(if cli.json {
                to_json(&serde_json::to_value(emit(&dual)).expect("documents serialize"))
            } else {
                format!("{}\n", dual.display())
            }))
        }
        Command::Betti {
            input,
            method,
            characteristic,
        } => {
            let object = read_object(input, stdin, stderr)?;
            let field = field_of(*characteristic)?;
            let ideal = object.ideal()?;
            if ideal.is_zero() {
                return Err(Error::ZeroIdeal);
            }
            let table = betti(&ideal, *method, field)?;
            Ok(Output::ok(if cli.json {
                to_json(&json!({
                    "method": format!("{method:?}").to_lowercase(),
                    "table": table.to_doc(),
                }))
            } else {
                table.render()
            }))
        }
        Command::Decompose { input, k, mode } => {
            let object = read_object(input, stdin, stderr)?;
            decompose(&object, k.0, *mode, cli.json)
        }
        Command::Invariants { input } => {
            let object = read_object(input, stdin, stderr)?;
            invariants(&object, cli.json)
        }
        Command::Clutter { action } => clutter(action, cli.json, stdin, stderr),
        Command::Verify { property, seed, count } => {
            let report = verify::run((*property).into(), *seed, *count)?;
            let code = if report.passed() { 0 } else { 1 };
            let text = if cli.json {
                to_json(&serde_json::to_value(&report).expect("reports serialize"))
            } else {
                let mut t = format!(
                    "{}: seed {}, {} checked of {} drawn: {}\n",
                    report.property,
                    report.seed,
                    report.checked,
                    report.drawn,
                    if report.passed() { "ok" } else { "FAILED" }
                );
                if let Some(c) = &report.counterexample {
                    t.push_str(&format!("counterexample: {c}\n"));
                }
                t
            };
            Ok(Output { text, code })
        }
    }
}

fn field_of(characteristic: u32) -> Result<Field> {
    match characteristic {
        0 => Ok(Field::Rational),
        p if p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) => Ok(Field::Prime(p)),
        p => Err(Error::Precondition(format!("characteristic {p} is neither 0 nor a prime"))),
    }
}

fn betti(ideal: &MonomialIdeal, method: BettiMethod, field: Field) -> Result<BettiTable> {
    match method {
        BettiMethod::Oracle => oracle::betti_oracle(ideal, field),
        BettiMethod::Order => match resolution::linear_quotients_order(ideal)? {
            Some(order) => Ok(resolution::betti_from_order(&order)),
            None => Err(Error::Precondition("the ideal has no order of linear quotients".into())),
        },
        BettiMethod::Recursive => match IdealSearcher::new(None).decide(ideal)? {
            Decision::Decomposable(cert) => resolution::betti_recursive(&cert, ideal.ctx()),
            Decision::NotDecomposable => Err(Error::Precondition("the ideal is not decomposable".into())),
            Decision::Undecided => Err(Error::Budget("decomposition search ran out of nodes".into())),
        },
    }
}

fn k_label(k: Option<usize>) -> String {
    k.map_or_else(|| "decomposable".to_string(), |k| format!("{k}-decomposable"))
}

fn decompose(object: &Object, k: Option<usize>, mode: ModeArg, json: bool) -> Result<Output> {
    let ctx = object.ctx();
    let mode = match mode {
        ModeArg::Direct => Mode::Direct,
        ModeArg::Dual => Mode::Dual,
    };
    let (decision, rendered, doc) = match object {
        Object::Ideal(ideal) => {
            if mode == Mode::Dual {
                return Err(Error::Precondition("dual mode applies to complexes and clutters".into()));
            }
            let d = IdealSearcher::new(k).decide(ideal)?;
            let rendered = d.certificate().map(|c| c.render(ctx));
            let doc = d.certificate().map(|c| c.to_doc(ctx));
            (d.map(|_| ()), rendered, doc)
        }
        Object::Complex(_) | Object::Clutter(_) => {
            let complex = match object {
                Object::Complex(c) => c.clone(),
                Object::Clutter(h) => h.independence_complex(),
                Object::Ideal(_) => unreachable!(),
            };
            let d = decomposition::k_decomposable_complex(&complex, k, mode)?;
            let rendered = d.certificate().map(|c| c.render(ctx));
            let doc = d.certificate().map(|c| c.to_doc(ctx));
            (d.map(|_| ()), rendered, doc)
        }
    };
    let (status, code) = match decision {
        Decision::Decomposable(()) => ("decomposable", 0),
        Decision::NotDecomposable => ("not-decomposable", 0),
        Decision::Undecided => ("undecided", 3),
    };
    let text = if json {
        to_json(&json!({
            "k": k,
            "mode": if mode == Mode::Dual { "dual" } else { "direct" },
            "decision": status,
            "certificate": doc,
        }))
    } else {
        match (code, rendered) {
            (0, Some(r)) => format!("{}\n{r}", k_label(k)),
            (0, None) => format!("not {}\n", k_label(k)),
            _ => "undecided: search budget exhausted\n".to_string(),
        }
    };
    Ok(Output { text, code })
}

fn invariants(object: &Object, json: bool) -> Result<Output> {
    let ideal = object.ideal()?;
    let (reg, pd) = oracle::quotient_reg_pd(&ideal, Field::Rational)?;
    let bight = if ideal.is_squarefree() {
        Some(resolution::bight(&ideal)?)
    } else {
        None
    };
    // cross-check against the certificate recursion when one is found
    let check = if ideal.is_zero() {
        "zero ideal"
    } else {
        match IdealSearcher::new(None).decide(&ideal)? {
            Decision::Decomposable(cert) => {
                let (pd_i, reg_i) = resolution::pd_reg_from_certificate(&cert, ideal.ctx())?;
                if (reg_i - 1, pd_i + 1) != (reg, pd) {
                    return Err(Error::Violation(format!(
                        "certificate recursion gives reg(R/I) = {}, pd(R/I) = {}; oracle {reg}, {pd}",
                        reg_i - 1,
                        pd_i + 1
                    )));
                }
                "certificate agrees"
            }
            Decision::NotDecomposable => "no certificate",
            Decision::Undecided => "certificate search undecided",
        }
    };
    let text = if json {
        to_json(&json!({ "reg": reg, "pd": pd, "bight": bight, "check": check }))
    } else {
        format!(
            "reg(R/I) = {reg}\npd(R/I) = {pd}\nbight(I) = {}\ncheck: {check}\n",
            bight.map_or_else(|| "n/a".to_string(), |b| b.to_string())
        )
    };
    Ok(Output::ok(text))
}

fn as_clutter(object: Object) -> Result<Clutter> {
    match object {
        Object::Clutter(h) => Ok(h),
        _ => Err(Error::Precondition("expected a clutter document".into())),
    }
}

fn clutter(action: &ClutterCommand, json: bool, stdin: &mut dyn Read, stderr: &mut dyn Write) -> Result<Output> {
    match action {
        ClutterCommand::Chordal { input } => {
            let h = as_clutter(read_object(input, stdin, stderr)?)?;
            let ctx = h.ctx();
            match clutters::is_chordal(&h) {
                Chordality::Chordal => Ok(Output::ok(if json {
                    to_json(&json!({ "chordal": true }))
                } else {
                    "chordal\n".to_string()
                })),
                Chordality::NotChordal(trace) => {
                    let minor = trace.replay(&h)?;
                    Ok(Output::ok(if json {
                        to_json(&json!({
                            "chordal": false,
                            "witness": trace.to_doc(ctx),
                            "minor": emit(&Object::Clutter(minor)),
                        }))
                    } else {
                        format!(
                            "not chordal\nwitness: {}\nminor without simplicial vertex: {}\n",
                            trace.render(ctx),
                            minor.display()
                        )
                    }))
                }
                Chordality::Undecided => Ok(Output {
                    text: if json {
                        to_json(&json!({ "chordal": null }))
                    } else {
                        "undecided: minor search budget exhausted\n".to_string()
                    },
                    code: 3,
                }),
            }
        }
        ClutterCommand::Bound {
            input,
            vertex,
            edge,
            no_minor_check,
        } => {
            let h = as_clutter(read_object(input, stdin, stderr)?)?;
            let ctx = h.ctx().clone();
            let x = ctx.index_of(vertex.trim())?;
            let names: Vec<&str> = edge.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let e = ctx.set_from_names(&names)?;
            let opts = BoundOptions {
                check_minor_chordality: !no_minor_check,
            };
            let r = clutters::chordal_reg_bound_with(&mut ChordalityChecker::default(), &h, x, e, opts)?;
            let sigma = e.without(x);
            Ok(Output::ok(if json {
                to_json(&json!({
                    "sigma": ctx.set_names(sigma),
                    "report": r,
                }))
            } else {
                let dels: Vec<String> = r.reg_deletions.iter().map(|v| v.to_string()).collect();
                format!(
                    "sigma = {}, d = {}\nreg(R/I(H)) = {}\n(i)  max{{{}, {} + {}}} = {}\n(ii) max{{{} + {} - 1, {} + {}}} = {}\nminors chordal: {}\n",
                    ctx.fmt_set(sigma),
                    r.d,
                    r.reg,
                    r.reg_with_sigma,
                    r.reg_contraction,
                    r.d,
                    r.identity_rhs,
                    dels.join(" + "),
                    r.d,
                    r.reg_contraction,
                    r.d,
                    r.bound_rhs,
                    match r.minors_chordal {
                        Some(true) => "yes",
                        Some(false) => "no",
                        None => "not checked",
                    }
                )
            }))
        }
        ClutterCommand::Minor { input, ops } => {
            let h = as_clutter(read_object(input, stdin, stderr)?)?;
            let trace = MinorTrace::parse(h.ctx(), ops)?;
            let minor = trace.replay(&h)?;
            Ok(Output::ok(if json {
                to_json(&serde_json::to_value(emit(&Object::Clutter(minor))).expect("documents serialize"))
            } else {
                format!("{}\n", minor.display())
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("kdecomp").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const TRIANGLE: &str = r#"{"kind":"ideal","vars":["x","y","z"],"gens":["x*y","x*z","y*z"]}"#;

    #[test]
    fn parses_documents() {
        let p = parse_document(TRIANGLE).unwrap();
        let Object::Ideal(i) = &p.object else { panic!() };
        assert_eq!(i.display(), "(x*y, x*z, y*z)");
        let p = parse_document(r#"{"kind":"clutter","vars":["x","y","z"],"edges":[["x","y"],["y","z"]]}"#).unwrap();
        assert!(matches!(p.object, Object::Clutter(ref h) if h.edges().len() == 2));
        let bad = parse_document(r#"{"kind":"ideal","vars":["x"],"gens":["1"]}"#);
        assert_eq!(bad.unwrap_err(), Error::ImproperIdeal);
        let Err(Error::Syntax { line, .. }) = parse_document("{\n\"kind\": ") else {
            panic!("expected a syntax error");
        };
        assert_eq!(line, 2);
    }

    #[test]
    fn duplicates_warn() {
        let p = parse_document(r#"{"kind":"ideal","vars":["x","y"],"gens":["x","x*y",[1,0]]}"#).unwrap();
        assert_eq!(p.warnings.len(), 1);
        let (code, _, err) = call(&["dual"], r#"{"kind":"ideal","vars":["x","y"],"gens":["x","x*y"]}"#);
        assert_eq!(code, 0);
        assert!(err.starts_with("warning:"));
    }

    #[test]
    fn round_trip() {
        for text in [
            TRIANGLE,
            r#"{"kind":"ideal","vars":["a","b"],"gens":[[2,0],[1,1],"b^3"]}"#,
            r#"{"kind":"complex","vars":["x","y","z","w"],"facets":[["x","y"],["z"]],"ground":["x","y","z"]}"#,
            r#"{"kind":"complex","vars":["x"],"facets":[]}"#,
            r#"{"kind":"complex","vars":["x"],"facets":[[]]}"#,
            r#"{"kind":"clutter","vars":["x","y","z"],"edges":[["x","y","z"]],"vertices":["x","y","z"]}"#,
        ] {
            let once = parse_document(text).unwrap().object;
            let twice = parse_document(&emit_json(&once)).unwrap().object;
            assert_eq!(once, twice, "{text}");
        }
    }

    #[test]
    fn betti_oracle_total_row() {
        let (code, out, _) = call(&["betti", "--method", "oracle"], TRIANGLE);
        assert_eq!(code, 0);
        assert!(out.contains("total: 3 2"), "{out}");
        for m in ["order", "recursive"] {
            assert_eq!(call(&["betti", "--method", m], TRIANGLE).1, out);
        }
    }

    #[test]
    fn decompose_root() {
        let (code, out, _) = call(
            &["decompose", "--k", "0"],
            r#"{"kind":"ideal","vars":["x","y"],"gens":["x^2","x*y","y^2"]}"#,
        );
        assert_eq!(code, 0);
        assert_eq!(out.lines().nth(1), Some("u = x"));
    }

    #[test]
    fn exit_statuses() {
        assert_eq!(call(&["verify", "terao", "--count", "100", "--seed", "7"], "").0, 0);
        assert_eq!(call(&["verify", "terao", "--count", "3"], "").0, 2);
        assert_eq!(call(&["dual"], "not json").0, 2);
        assert_eq!(call(&["bogus"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn clutter_commands() {
        let square = r#"{"kind":"clutter","vars":["a","b","c","d"],"edges":[["a","b"],["b","c"],["c","d"],["a","d"]]}"#;
        let (code, out, _) = call(&["clutter", "chordal"], square);
        assert_eq!(code, 0);
        assert!(out.starts_with("not chordal"));
        let (code, out, _) = call(&["clutter", "minor", "--ops", "d:a"], square);
        assert_eq!(code, 0);
        assert_eq!(out, "V={b,c,d} E=[{b,c}, {c,d}]\n");
        let tri = r#"{"kind":"clutter","vars":["x","y","z"],"edges":[["x","y"],["x","z"],["y","z"]]}"#;
        let (code, out, _) = call(&["clutter", "bound", "--vertex", "x", "--edge", "x,y"], tri);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("reg(R/I(H)) = 1"));
        assert_eq!(call(&["clutter", "bound", "--vertex", "x", "--edge", "x,y"], square).0, 2);
    }
}
