//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns what the process should print and its exit code.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::decompose::{decompose, direct_sum, Certificate};
use crate::document::{emit_bialgebra, parse_document, parse_functor, WbaDocument};
use crate::error::{Error, Violation};
use crate::fixtures::preset;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{FieldSpec, Scalar};
use crate::structure::{check_algebra, check_coalgebra, Verdict};
use crate::tannaka::reconstruct_weak_bialgebra_map;
use crate::weak::{build_weak_bialgebra, dualize, lemma_suite, solve_antipode, verify_antipode, AntipodeSolution, CounitalMap, WeakBialgebra};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Parser)]
#[command(name = "wba", about = "Exact checks and constructions for finite-dimensional weak bialgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the report or constructed document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Field override for `fixture`, e.g. `Q` or `GF(5)`.
    #[arg(long, global = true)]
    pub field: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the algebra, coalgebra and weak bialgebra axioms, the derived identities and the antipode.
    Check { file: PathBuf },
    /// Print the four counital maps and bases of the counital subalgebras.
    Counital { file: PathBuf },
    /// Run the suite of derived identities only.
    Lemmas { file: PathBuf },
    /// Split into indecomposable weak bialgebras.
    Decompose { file: PathBuf },
    /// Recover the weak bialgebra map behind functor data.
    Reconstruct { source: PathBuf, target: PathBuf, functor: PathBuf },
    /// Direct sum of two documents.
    Dsum { a: PathBuf, b: PathBuf },
    /// Dual weak bialgebra.
    Dualize { file: PathBuf },
    /// Emit a named preset (k, c2, gpd2, sum, z3@gf2).
    Fixture { name: String },
}

/// What a finished command wants printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A command's verdicts and derived data.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: Vec<String>,
    pub checks: Vec<(String, Verdict)>,
    pub data: Map<String, Value>,
    pub error: Option<String>,
    pub exit_code: i32,
}

impl Report {
    fn new(command: Vec<String>) -> Self {
        Report {
            command,
            ..Default::default()
        }
    }

    fn check(&mut self, name: impl Into<String>, verdict: Verdict) -> bool {
        let pass = verdict.is_pass();
        self.checks.push((name.into(), verdict));
        pass
    }

    fn data(&mut self, key: &str, value: Value) {
        self.data.insert(key.to_string(), value);
    }

    /// Records an error; law failures become a failed check.
    fn fail(&mut self, stage: &str, e: Error) {
        match e {
            Error::Violations { violations, .. } => {
                self.check(stage, Verdict { violations });
            }
            Error::Precondition(m) | Error::Domain(m) => {
                self.check(stage, Verdict {
                    violations: vec![Violation::new("precondition", vec![], m, "")],
                });
            }
            Error::Malformed(m) => self.error = Some(m),
            Error::Internal(m) => self.error = Some(format!("internal error: {m}")),
        }
    }

    fn finish(mut self) -> Self {
        self.exit_code = if self.error.is_some() {
            EXIT_MALFORMED
        } else if self.checks.iter().all(|(_, v)| v.is_pass()) {
            EXIT_PASS
        } else {
            EXIT_VIOLATION
        };
        self
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|(name, v)| {
                json!({
                    "name": name,
                    "pass": v.is_pass(),
                    "violations": v.violations.iter().map(|x| json!({
                        "law": x.law, "witness": x.witness, "lhs": x.lhs, "rhs": x.rhs,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("checks".into(), Value::Array(checks));
        m.insert("data".into(), Value::Object(self.data.clone()));
        if let Some(e) = &self.error {
            m.insert("error".into(), json!(e));
        }
        m.insert("exit_code".into(), json!(self.exit_code));
        Value::Object(m)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("report serialization");
                s.push('\n');
                s
            }
            Format::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = format!("$ wba {}\n", self.command.join(" "));
        for (name, v) in &self.checks {
            let _ = writeln!(out, "{} {name}", if v.is_pass() { "PASS" } else { "FAIL" });
            for x in &v.violations {
                let _ = writeln!(out, "    {x}");
            }
        }
        if let Some(e) = &self.error {
            let _ = writeln!(out, "ERROR {e}");
        }
        for (k, v) in &self.data {
            render_value(&mut out, k, v, 0);
        }
        let _ = writeln!(out, "exit {}", self.exit_code);
        out
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Null => Some("-".into()),
        Value::Bool(_) | Value::Number(_) => Some(v.to_string()),
        Value::Array(xs) if xs.iter().all(|x| matches!(x, Value::String(_) | Value::Number(_))) => {
            Some(format!("[{}]", xs.iter().map(|x| inline(x).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = inline(v) {
        let _ = writeln!(out, "{pad}{key}: {s}");
        return;
    }
    let _ = writeln!(out, "{pad}{key}:");
    match v {
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                match inline(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}  {s}");
                    }
                    None => render_value(out, &format!("[{i}]"), x, depth + 1),
                }
            }
        }
        Value::Object(m) => {
            for (k, x) in m {
                render_value(out, k, x, depth + 1);
            }
        }
        _ => unreachable!("inline covers scalars"),
    }
}

fn strings(xs: &[Scalar]) -> Value {
    json!(xs.iter().map(|x| x.to_string()).collect::<Vec<_>>())
}

fn matrix_value(m: &Matrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| strings(r)).collect())
}

fn basis_value(s: &Subspace) -> Value {
    Value::Array(s.basis_vectors().iter().map(|r| strings(r)).collect())
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<WbaDocument, Error> {
    parse_document(&read(path)?).map_err(|e| match e {
        Error::Malformed(m) => Error::Malformed(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Verifies a document in stages and records one check per stage; `None`
/// when a stage failed.
fn gate(report: &mut Report, doc: &WbaDocument) -> Option<WeakBialgebra> {
    let a = report.check("algebra", check_algebra(&doc.algebra));
    let c = report.check("coalgebra", check_coalgebra(&doc.coalgebra));
    if !(a && c) {
        return None;
    }
    let h = match build_weak_bialgebra(doc.algebra.clone(), doc.coalgebra.clone()) {
        Ok(h) => h,
        Err(e) => {
            report.fail("weak bialgebra axioms", e);
            return None;
        }
    };
    report.check("weak bialgebra axioms", Verdict::pass());
    match &doc.antipode {
        Some(s) => match verify_antipode(&h, s) {
            Ok(v) => {
                if report.check("antipode", v) {
                    Some(h.with_antipode(s.clone()).expect("verified antipode"))
                } else {
                    None
                }
            }
            Err(e) => {
                report.fail("antipode", e);
                None
            }
        },
        None => Some(h),
    }
}

fn describe(report: &mut Report, h: &WeakBialgebra) {
    report.data("field", json!(h.field().to_string()));
    report.data("dim", json!(h.dim()));
    report.data("basis", json!(h.labels()));
    report.data("dim H_t", json!(h.h_t().dim()));
    report.data("dim H_s", json!(h.h_s().dim()));
    report.data("ordinary bialgebra", json!(h.is_ordinary_bialgebra()));
}

fn cmd_check(report: &mut Report, file: &Path) -> Result<(), Error> {
    let doc = load(file)?;
    let Some(h) = gate(report, &doc) else { return Ok(()) };
    let suite = lemma_suite(&h)?;
    for c in suite.checks {
        report.check(c.name, c.verdict);
    }
    let h = Arc::new(h);
    for named in &doc.comodules {
        let verdict = match crate::comodule::Comodule::new(h.clone(), named.coaction.clone()) {
            Ok(c) => crate::comodule::bimodule_checks(&c),
            Err(Error::Violations { violations, .. }) => Verdict { violations },
            Err(e) => return Err(e),
        };
        report.check(format!("comodule {}", named.name), verdict);
    }
    describe(report, &h);
    let antipode = match (h.antipode(), solve_antipode(&h)) {
        (Some(s), _) => json!({"status": "given", "matrix": matrix_value(s)}),
        (None, AntipodeSolution::Antipode(s)) => json!({"status": "solved", "matrix": matrix_value(&s)}),
        (None, AntipodeSolution::None) => json!({"status": "none"}),
        (None, AntipodeSolution::Undetermined(k)) => json!({"status": format!("undetermined ({k} free parameters)")}),
    };
    report.data("antipode", antipode);
    Ok(())
}

fn cmd_counital(report: &mut Report, file: &Path) -> Result<(), Error> {
    let doc = load(file)?;
    let Some(h) = gate(report, &doc) else { return Ok(()) };
    describe(report, &h);
    for which in CounitalMap::ALL {
        report.data(&format!("ε_{which}"), matrix_value(h.counital_matrix(which)));
    }
    report.data("H_t basis", basis_value(h.h_t()));
    report.data("H_s basis", basis_value(h.h_s()));
    Ok(())
}

fn cmd_lemmas(report: &mut Report, file: &Path) -> Result<(), Error> {
    let doc = load(file)?;
    let Some(h) = gate(report, &doc) else { return Ok(()) };
    for c in lemma_suite(&h)?.checks {
        report.check(c.name, c.verdict);
    }
    Ok(())
}

fn cmd_decompose(report: &mut Report, file: &Path) -> Result<(), Error> {
    let doc = load(file)?;
    let Some(h) = gate(report, &doc) else { return Ok(()) };
    let h = Arc::new(h);
    let r = decompose(&h)?;
    report.check("reassembly", Verdict::pass());
    report.data("dim", json!(h.dim()));
    report.data("dim Z(H) ∩ H_t ∩ H_s", json!(r.search_space.dim()));
    report.data(
        "primitive idempotents",
        Value::Array(r.primitive_idempotents.iter().map(|e| strings(e)).collect()),
    );
    report.data("blocks", json!(r.splitting.blocks.len()));
    let blocks: Vec<Value> = r
        .splitting
        .blocks
        .iter()
        .zip(&r.certificates)
        .map(|(b, c)| {
            let (status, reason) = match c {
                Certificate::Indecomposable { reason } => ("indecomposable", reason),
                Certificate::Undecided { reason } => ("undecided", reason),
            };
            json!({
                "dim": b.bialgebra.dim(),
                "unit": strings(&b.unit),
                "basis": b.bialgebra.labels(),
                "embedding": matrix_value(&b.embedding),
                "certificate": status,
                "reason": reason,
            })
        })
        .collect();
    report.data("block", Value::Array(blocks));
    Ok(())
}

fn cmd_reconstruct(report: &mut Report, source: &Path, target: &Path, functor: &Path) -> Result<(), Error> {
    let (ds, dt) = (load(source)?, load(target)?);
    let text = read(functor)?;
    let Some(h) = gate(report, &ds) else { return Ok(()) };
    let mut inner = Report::new(vec![]);
    let Some(k) = gate(&mut inner, &dt) else {
        for (name, v) in inner.checks {
            report.check(format!("target {name}"), v);
        }
        return Ok(());
    };
    let (h, k) = (Arc::new(h), Arc::new(k));
    let named = ds.comodules_over(&h)?;
    let fd = parse_functor(&text, &h, &k, &named).map_err(|e| match e {
        Error::Malformed(m) => Error::Malformed(format!("{}: {m}", functor.display())),
        other => other,
    })?;
    let r = match reconstruct_weak_bialgebra_map(&fd) {
        Ok(r) => r,
        Err(e) => {
            report.fail("functor data", e);
            return Ok(());
        }
    };
    for layer in &r.layers {
        report.check(layer.name, layer.verdict.clone());
    }
    report.data("φ", matrix_value(&r.phi));
    report.data("weak bialgebra map", json!(r.map.is_some()));
    Ok(())
}

fn emit(report: &mut Report, out: &Option<PathBuf>, h: &WeakBialgebra, stdout: &mut Option<String>) -> Result<(), Error> {
    let text = emit_bialgebra(h);
    match out {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| Error::Malformed(format!("{}: {e}", p.display())))?;
            report.data("wrote", json!(p.display().to_string()));
            describe(report, h);
        }
        None => *stdout = Some(text),
    }
    Ok(())
}

fn build_gated(report: &mut Report, path: &Path, label: &str) -> Result<Option<WeakBialgebra>, Error> {
    let doc = load(path)?;
    let mut inner = Report::new(vec![]);
    let h = gate(&mut inner, &doc);
    for (name, v) in inner.checks {
        report.check(format!("{label}{name}"), v);
    }
    Ok(h)
}

/// Parses `args` (without the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("wba".into()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { exit_code: code, stdout: String::new(), stderr: text }
            } else {
                Outcome { exit_code: code, stdout: text, stderr: String::new() }
            };
        }
    };
    let echo: Vec<String> = args.iter().map(|a| a.to_string_lossy().into_owned()).collect();
    execute(&cli, echo)
}

pub fn execute(cli: &Cli, echo: Vec<String>) -> Outcome {
    let mut report = Report::new(echo);
    let mut document: Option<String> = None;
    let result = (|| -> Result<(), Error> {
        let field = match (&cli.field, &cli.command) {
            (None, _) => None,
            (Some(f), Command::Fixture { .. }) => Some(f.parse::<FieldSpec>()?),
            (Some(_), _) => return Err(Error::Malformed("--field only applies to fixture".into())),
        };
        match &cli.command {
            Command::Check { file } => cmd_check(&mut report, file),
            Command::Counital { file } => cmd_counital(&mut report, file),
            Command::Lemmas { file } => cmd_lemmas(&mut report, file),
            Command::Decompose { file } => cmd_decompose(&mut report, file),
            Command::Reconstruct { source, target, functor } => cmd_reconstruct(&mut report, source, target, functor),
            Command::Dsum { a, b } => {
                let ha = build_gated(&mut report, a, "A: ")?;
                let hb = build_gated(&mut report, b, "B: ")?;
                if let (Some(ha), Some(hb)) = (ha, hb) {
                    let s = direct_sum(&ha, &hb)?;
                    emit(&mut report, &cli.out, &s, &mut document)?;
                }
                Ok(())
            }
            Command::Dualize { file } => {
                let doc = load(file)?;
                if let Some(h) = gate(&mut report, &doc) {
                    emit(&mut report, &cli.out, &dualize(&h)?, &mut document)?;
                }
                Ok(())
            }
            Command::Fixture { name } => {
                let h = preset(name, field)?;
                emit(&mut report, &cli.out, &h, &mut document)
            }
        }
    })();
    if let Err(e) = result {
        report.fail("input", e);
    }
    let report = report.finish();
    let constructs = matches!(cli.command, Command::Dsum { .. } | Command::Dualize { .. } | Command::Fixture { .. });
    if let (Some(doc), 0) = (&document, report.exit_code) {
        return Outcome {
            exit_code: EXIT_PASS,
            stdout: doc.clone(),
            stderr: String::new(),
        };
    }
    let rendered = report.render(cli.format);
    if let (Some(p), false) = (&cli.out, constructs) {
        if let Err(e) = std::fs::write(p, &rendered) {
            return Outcome {
                exit_code: EXIT_MALFORMED,
                stdout: String::new(),
                stderr: format!("{}: {e}\n", p.display()),
            };
        }
        return Outcome {
            exit_code: report.exit_code,
            stdout: String::new(),
            stderr: String::new(),
        };
    }
    Outcome {
        exit_code: report.exit_code,
        stdout: rendered,
        stderr: String::new(),
    }
}
