//! The `tqft2d` command line: argument parsing, command dispatch and output
//! rendering.
//!
//! Exit codes: 0 on success or a positive verdict, 1 on a validation failure
//! or a not-positive verdict, 2 on input errors.

pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog;
use crate::eval::{
    circle_state_space, integrate_theory, is_reflection_positive_with, partition_genus_detailed, EvalError,
    RouteChoice, RpReport, Verdict,
};
use crate::frobenius::{validate_frobenius, FrobeniusAlgebra, Symmetry};
use crate::scalars::fmt_vector;
use crate::superalg::{center, is_semisimple, validate_star, TraceFunctional};
use crate::theories::TheorySpec;
use crate::torsors::{count_torsor_classes, enumerate_etale_spin_classes, PicardTwoGroup};

use format::{parse_document, print_theory, Document, DocumentError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Human,
    Machine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum RouteArg {
    #[default]
    Auto,
    Oriented,
    Hermitian,
}

impl From<RouteArg> for RouteChoice {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::Auto => RouteChoice::Auto,
            RouteArg::Oriented => RouteChoice::Oriented,
            RouteArg::Hermitian => RouteChoice::Hermitian,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "tqft2d", version, about = "Exact data and reflection-positivity checks for 2d TQFTs")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate an algebra or theory file.
    Validate { input: String },
    /// Integrate a theory down to an oriented Frobenius algebra.
    Integrate {
        input: String,
        #[arg(long, value_enum, default_value_t)]
        route: RouteArg,
    },
    /// Circle state space and its pairing.
    Hilbert {
        input: String,
        #[arg(long, value_enum, default_value_t)]
        route: RouteArg,
    },
    /// Closed genus-N surface value of the integrated theory.
    Partition {
        input: String,
        #[arg(long)]
        genus: u32,
        #[arg(long, value_enum, default_value_t)]
        route: RouteArg,
    },
    /// Reflection-positivity verdict.
    CheckRp {
        input: String,
        #[arg(long, value_enum, default_value_t)]
        route: RouteArg,
    },
    /// List the eight étale-locally-spin structures.
    ClassifyStructures,
    /// List the catalog, print one entry as a file, or sweep the verdicts.
    Catalog {
        name: Option<String>,
        #[arg(long, conflicts_with = "name")]
        sweep: bool,
    },
}

/// Where an input argument points: a file path or `catalog:<name>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    File(PathBuf),
    Catalog(String),
}

impl Input {
    pub fn parse(s: &str) -> Self {
        match s.strip_prefix("catalog:") {
            Some(name) => Input::Catalog(name.to_string()),
            None => Input::File(PathBuf::from(s)),
        }
    }
}

enum Failure {
    Input(String),
    Invalid(String),
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::RouteUnavailable { .. } => Failure::Input(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

fn load_document(input: &Input) -> Result<Document, Failure> {
    match input {
        Input::Catalog(name) => {
            let t = catalog::theory(name).ok_or_else(|| Failure::Input(format!("unknown catalog entry {name:?}")))?;
            parse_document(&print_theory(&t)).map_err(|e| Failure::Input(e.to_string()))
        }
        Input::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            parse_document(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
    }
}

fn load_theory(input: &Input) -> Result<TheorySpec, Failure> {
    if let Input::Catalog(name) = input {
        return catalog::theory(name).ok_or_else(|| Failure::Input(format!("unknown catalog entry {name:?}")));
    }
    let doc = load_document(input)?;
    doc.into_theory().map_err(|e| match e {
        DocumentError::Theory(t) => Failure::Invalid(t.to_string()),
        other => Failure::Input(other.to_string()),
    })
}

/// Collects output lines; machine lines are `key=value` fields joined by
/// single spaces.
struct Out {
    format: OutputFormat,
    lines: Vec<String>,
}

impl Out {
    fn record(&mut self, fields: &[(&str, String)]) {
        match self.format {
            OutputFormat::Machine => {
                let parts: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
                self.lines.push(parts.join(" "));
            }
            OutputFormat::Human => {
                let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                for (k, v) in fields {
                    self.lines.push(format!("{k:width$}  {v}"));
                }
            }
        }
    }

    fn line(&mut self, s: String) {
        self.lines.push(s);
    }
}

fn sig(s: (usize, usize, usize)) -> String {
    format!("({},{},{})", s.0, s.1, s.2)
}

fn rp_fields(name: &str, r: &RpReport) -> Vec<(&'static str, String)> {
    let mut f = vec![
        ("theory", name.to_string()),
        ("kind", r.kind.to_string()),
        ("route", r.route.clone()),
        ("verdict", r.verdict.to_string()),
        ("gram", r.circle.gram().to_string()),
        ("tag", r.circle.tag().to_string()),
    ];
    if let Some(s) = r.circle_signature {
        f.push(("circle_signature", sig(s)));
    }
    f.push(("real_signature", sig(r.signature)));
    if let Some(w) = &r.witness {
        f.push(("witness", fmt_vector(w)));
    }
    f
}

fn exit_for(v: Verdict) -> i32 {
    match v {
        Verdict::Positive | Verdict::VacuousZero => EXIT_OK,
        Verdict::NotPositive => EXIT_FAILED,
    }
}

fn input_name(input: &Input) -> String {
    match input {
        Input::Catalog(n) => format!("catalog:{n}"),
        Input::File(p) => p.display().to_string(),
    }
}

fn validate(input: &Input, out: &mut Out) -> Result<i32, Failure> {
    let doc = load_document(input)?;
    let mut report = doc.algebra.validation().clone();
    if doc.kind.is_none() {
        // plain algebra file: check what is present
        if let Some(t) = &doc.trace {
            let f = FrobeniusAlgebra::new(
                doc.algebra.clone(),
                TraceFunctional::new(t.clone()),
                doc.symmetry.unwrap_or(Symmetry::SymmetricSuper),
            )
            .expect("trace length checked by the parser");
            // includes the algebra checks
            report = validate_frobenius(&f);
        }
        if let Some(s) = &doc.star {
            report.merge(validate_star(&doc.algebra, s));
        }
        let semisimple = report.is_valid() && is_semisimple(&doc.algebra).unwrap_or(false);
        out.record(&[
            ("input", input_name(input)),
            ("status", if report.is_valid() { "valid" } else { "invalid" }.to_string()),
            ("dim", doc.algebra.dim().to_string()),
            ("semisimple", semisimple.to_string()),
            ("report", report.to_string()),
        ]);
        return Ok(if report.is_valid() { EXIT_OK } else { EXIT_FAILED });
    }
    let kind = doc.kind.expect("checked above");
    match doc.into_theory() {
        Ok(t) => {
            out.record(&[
                ("input", input_name(input)),
                ("status", "valid".to_string()),
                ("kind", kind.to_string()),
                ("dim", t.algebra().dim().to_string()),
            ]);
            Ok(EXIT_OK)
        }
        Err(DocumentError::Theory(e)) => {
            out.record(&[
                ("input", input_name(input)),
                ("status", "invalid".to_string()),
                ("kind", kind.to_string()),
                ("report", e.to_string()),
            ]);
            Ok(EXIT_FAILED)
        }
        Err(e) => Err(Failure::Input(e.to_string())),
    }
}

fn integrate(input: &Input, route: RouteChoice, out: &mut Out) -> Result<i32, Failure> {
    let t = load_theory(input)?;
    let i = integrate_theory(&t, route)?;
    let b = i.frobenius.algebra();
    let z = center(b).map_err(|e| Failure::Invalid(e.to_string()))?;
    let stage = if i.stage.is_empty() { "none" } else { i.stage };
    out.record(&[
        ("input", input_name(input)),
        ("kind", t.kind().to_string()),
        ("stage", stage.to_string()),
        ("hermitian", i.hermitian.to_string()),
        ("dim", b.dim().to_string()),
        ("center_dim", z.len().to_string()),
        ("semisimple", is_semisimple(b).unwrap_or(false).to_string()),
        ("commutative", b.is_commutative().to_string()),
        ("unit_trace", i.frobenius.trace().eval(b.unit()).to_string()),
    ]);
    Ok(EXIT_OK)
}

fn hilbert(input: &Input, route: RouteChoice, out: &mut Out) -> Result<i32, Failure> {
    let t = load_theory(input)?;
    let i = integrate_theory(&t, route)?;
    let h = circle_state_space(&i.frobenius, i.star.as_ref())?;
    out.record(&[
        ("input", input_name(input)),
        ("kind", t.kind().to_string()),
        ("dim", h.dim().to_string()),
        ("tag", h.tag().to_string()),
        ("gram", h.gram().to_string()),
    ]);
    Ok(EXIT_OK)
}

fn partition(input: &Input, genus: u32, route: RouteChoice, out: &mut Out) -> Result<i32, Failure> {
    let t = load_theory(input)?;
    let i = integrate_theory(&t, route)?;
    let v = partition_genus_detailed(&i.frobenius, genus)?;
    out.record(&[
        ("input", input_name(input)),
        ("kind", t.kind().to_string()),
        ("genus", genus.to_string()),
        ("value", v.value.to_string()),
        ("restricted_to_center", v.restricted_to_center.to_string()),
    ]);
    Ok(EXIT_OK)
}

fn check_rp(input: &Input, route: RouteChoice, out: &mut Out) -> Result<i32, Failure> {
    let t = load_theory(input)?;
    let r = is_reflection_positive_with(&t, route)?;
    let mut fields = rp_fields(&input_name(input), &r);
    // lead with the verdict so the first fields read "verdict=... gram=..."
    fields.sort_by_key(|(k, _)| match *k {
        "verdict" => 0,
        "gram" => 1,
        _ => 2,
    });
    out.record(&fields);
    Ok(exit_for(r.verdict))
}

fn classify(out: &mut Out) -> Result<i32, Failure> {
    let classes = enumerate_etale_spin_classes();
    let count = count_torsor_classes(&PicardTwoGroup::galois_of_reals()).map_err(|e| Failure::Invalid(e.to_string()))?;
    if count != classes.len() as u64 {
        return Err(Failure::Invalid(format!("torsor count {count} disagrees with {} classes", classes.len())));
    }
    for c in classes {
        let line = match out.format {
            OutputFormat::Machine => format!(
                "class=({},{},{}) kind={} distinguished={}",
                c.a,
                c.b,
                c.c,
                c.name(),
                c.is_distinguished()
            ),
            OutputFormat::Human => format!(
                "({},{},{})  {}{}",
                c.a,
                c.b,
                c.c,
                c.name(),
                if c.is_distinguished() { "  (distinguished)" } else { "" }
            ),
        };
        out.line(line);
    }
    Ok(EXIT_OK)
}

fn catalog_cmd(name: Option<&str>, sweep: bool, out: &mut Out) -> Result<i32, Failure> {
    if sweep {
        for e in catalog::ENTRIES {
            let t = catalog::theory(e.name).expect("catalog entries build");
            let r = is_reflection_positive_with(&t, RouteChoice::Auto)?;
            let fields = [
                ("theory", e.name.to_string()),
                ("kind", r.kind.to_string()),
                ("route", r.route.clone()),
                ("verdict", r.verdict.to_string()),
                ("gram", r.circle.gram().to_string()),
            ];
            match out.format {
                OutputFormat::Machine => out.record(&fields),
                OutputFormat::Human => {
                    out.line(format!("{:26} {:36} {:22} {}", e.name, e.kind.name(), r.route, r.verdict))
                }
            }
        }
        // the sweep reports verdicts; individual verdicts do not set the exit code
        return Ok(EXIT_OK);
    }
    match name {
        Some(n) => {
            let t = catalog::theory(n).ok_or_else(|| Failure::Input(format!("unknown catalog entry {n:?}")))?;
            for l in print_theory(&t).lines() {
                out.line(l.to_string());
            }
        }
        None => {
            for e in catalog::ENTRIES {
                match out.format {
                    OutputFormat::Machine => out.record(&[
                        ("name", e.name.to_string()),
                        ("kind", e.kind.to_string()),
                    ]),
                    OutputFormat::Human => out.line(format!("{:26} {:36} {}", e.name, e.kind.name(), e.description)),
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs a parsed command, writing results to `stdout` and diagnostics to
/// `stderr`, and returns the exit code.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut out = Out {
        format: cli.format,
        lines: Vec::new(),
    };
    let result = match &cli.command {
        Command::Validate { input } => validate(&Input::parse(input), &mut out),
        Command::Integrate { input, route } => integrate(&Input::parse(input), (*route).into(), &mut out),
        Command::Hilbert { input, route } => hilbert(&Input::parse(input), (*route).into(), &mut out),
        Command::Partition { input, genus, route } => partition(&Input::parse(input), *genus, (*route).into(), &mut out),
        Command::CheckRp { input, route } => check_rp(&Input::parse(input), (*route).into(), &mut out),
        Command::ClassifyStructures => classify(&mut out),
        Command::Catalog { name, sweep } => catalog_cmd(name.as_deref(), *sweep, &mut out),
    };
    for l in &out.lines {
        let _ = writeln!(stdout, "{l}");
    }
    match result {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(stderr, "invalid: {msg}");
            EXIT_FAILED
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            code
        }
    }
}

#[cfg(test)]
mod tests;
