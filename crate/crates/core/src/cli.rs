//! The `hopfkit` command line.
//!
//! Exit codes: 0 when every applicable check passes, 1 when a check fails or
//! the algebra violates the Hopf axioms, 2 for unreadable input or bad usage.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bicross::{self, Bicross, BicrossBasis, BicrossError};
use crate::constructions::{ConstructionError, Preset};
use crate::hopf::{HopfAlgebra, HopfError};
use crate::integrals::{self, IntegralError};
use crate::io::{self, AlgebraDescriptor, LoadError, Parameters, ReportDocument};
use crate::qsl2::{self, Generator, PbwMonomial, Qsl2};
use crate::radford::{self, Battery};
use crate::report::VerificationReport;
use crate::scalar::{FieldSpec, ScalarError};

pub const DEFAULT_WINDOW: i64 = 4;
pub const DEFAULT_DEGREE: u32 = 6;
pub const DEFAULT_INFINITE_ORDER_BOUND: u64 = 100;

#[derive(Debug, Parser)]
#[command(name = "hopfkit", version, about = "Exact verification of integrals, Nakayama maps and the S⁴ formula")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Options {
    /// Field to build a preset over, e.g. `Q`, `Fp:5`, `cyclotomic:3`.
    #[arg(long, value_name = "SPEC")]
    pub field: Option<String>,
    /// Window |k| ≤ K for bicross presets.
    #[arg(long, value_name = "K")]
    pub window: Option<i64>,
    /// Total degree bound D for qsl2.
    #[arg(long, value_name = "D")]
    pub degree: Option<u32>,
    /// Largest power tried when computing orders.
    #[arg(long, value_name = "N")]
    pub order_bound: Option<u64>,
    /// Write the JSON document here instead of printing a table.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification battery.
    Verify {
        /// A preset (`sweedler`, `taft:3`, `group:C5`, `dual:taft:2`, `bicross:3`, `qsl2`, …) or an algebra file.
        target: String,
        #[arg(value_parser = parse_battery)]
        battery: Battery,
        #[command(flatten)]
        options: Options,
    },
    /// Print computed objects in coordinates.
    Inspect {
        target: String,
        what: InspectWhat,
        #[command(flatten)]
        options: Options,
    },
    /// Write a preset as an algebra file.
    Export {
        preset: String,
        #[arg(long, value_name = "PATH")]
        out: PathBuf,
        #[arg(long, value_name = "SPEC")]
        field: Option<String>,
    },
}

fn parse_battery(s: &str) -> Result<Battery, String> {
    s.parse().map_err(|_| format!("unknown battery `{s}` (axioms, integrals, radford, mainss, all)"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InspectWhat {
    Integrals,
    Grouplikes,
    Nakayama,
    Orders,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Load(#[from] LoadError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Integral(#[from] IntegralError),
    #[error(transparent)]
    Bicross(#[from] BicrossError),
    #[error("bad field: {0}")]
    Field(#[from] ScalarError),
    #[error("`{0}` is neither a preset nor a readable file")]
    UnknownTarget(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Hopf(HopfError::AxiomFailure(_))
            | CliError::Load(LoadError::Hopf(HopfError::AxiomFailure(_)))
            | CliError::Construction(ConstructionError::Hopf(HopfError::AxiomFailure(_)))
            | CliError::Integral(_)
            | CliError::Bicross(_) => 1,
            _ => 2,
        }
    }
}

/// A resolved command-line target.
pub enum Target {
    Finite { name: String, algebra: HopfAlgebra },
    Bicross { name: String, n: u64 },
    Qsl2,
}

impl Target {
    pub fn resolve(target: &str, field: Option<&str>) -> Result<Target, CliError> {
        let field: Option<FieldSpec> = field.map(str::parse).transpose()?;
        match target.parse::<Preset>() {
            Ok(Preset::Bicross(n)) => {
                reject_field(&field, target)?;
                Ok(Target::Bicross {
                    name: target.to_string(),
                    n,
                })
            }
            Ok(Preset::Qsl2) => {
                reject_field(&field, target)?;
                Ok(Target::Qsl2)
            }
            Ok(p) => Ok(Target::Finite {
                name: target.to_string(),
                algebra: p.build(field.as_ref())?,
            }),
            Err(e) => {
                let path = Path::new(target);
                if !path.is_file() {
                    return Err(if target.contains(['/', '.']) {
                        CliError::UnknownTarget(target.to_string())
                    } else {
                        e.into()
                    });
                }
                reject_field(&field, target)?;
                Ok(Target::Finite {
                    name: target.to_string(),
                    algebra: io::load_algebra(path)?,
                })
            }
        }
    }

    fn descriptor(&self) -> AlgebraDescriptor {
        match self {
            Target::Finite { name, algebra } => AlgebraDescriptor {
                target: name.clone(),
                field: algebra.field.to_string(),
                dim: Some(algebra.dim()),
            },
            Target::Bicross { name, n } => AlgebraDescriptor {
                target: name.clone(),
                field: FieldSpec::cyclotomic(*n).map(|f| f.to_string()).unwrap_or_default(),
                dim: None,
            },
            Target::Qsl2 => AlgebraDescriptor {
                target: "qsl2".into(),
                field: FieldSpec::rational_functions().to_string(),
                dim: None,
            },
        }
    }

    fn parameters(&self, o: &Options) -> Parameters {
        match self {
            Target::Finite { algebra, .. } => Parameters {
                window: None,
                degree: None,
                order_bound: Some(o.order_bound.unwrap_or_else(|| radford::default_order_bound(algebra))),
            },
            Target::Bicross { .. } => Parameters {
                window: Some(o.window.unwrap_or(DEFAULT_WINDOW)),
                degree: None,
                order_bound: Some(o.order_bound.unwrap_or(DEFAULT_INFINITE_ORDER_BOUND)),
            },
            Target::Qsl2 => Parameters {
                window: None,
                degree: Some(o.degree.unwrap_or(DEFAULT_DEGREE)),
                order_bound: Some(o.order_bound.unwrap_or(DEFAULT_INFINITE_ORDER_BOUND)),
            },
        }
    }
}

fn reject_field(field: &Option<FieldSpec>, target: &str) -> Result<(), CliError> {
    match field {
        Some(f) => Err(CliError::Usage(format!("--field {f} cannot be applied to `{target}`"))),
        None => Ok(()),
    }
}

/// Run a battery and package the result.
pub fn verify(target: &str, battery: Battery, options: &Options) -> Result<ReportDocument, CliError> {
    let t = Target::resolve(target, options.field.as_deref())?;
    let params = t.parameters(options);
    if let Some(w) = options.window {
        if w < 1 {
            return Err(CliError::Usage(format!("--window must be at least 1, got {w}")));
        }
    }
    let report = match &t {
        Target::Finite { algebra, .. } => radford::run_battery(algebra, battery, params.order_bound)?,
        Target::Bicross { n, .. } => {
            bicross::bicross_battery(*n, params.window.expect("set"), battery, params.order_bound)?
        }
        Target::Qsl2 => qsl2::qsl2_battery(params.degree.expect("set"), battery, params.order_bound),
    };
    Ok(ReportDocument::new(t.descriptor(), battery.name(), params, &report))
}

/// Computed objects for `inspect`: named values in display order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InspectDocument {
    pub engine_version: String,
    pub algebra: AlgebraDescriptor,
    pub what: InspectWhat,
    pub parameters: Parameters,
    pub entries: Vec<InspectEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InspectEntry {
    pub name: String,
    pub value: String,
}

impl InspectDocument {
    pub fn get(&self, name: &str) -> Option<&str> {
        self.entries.iter().find(|e| e.name == name).map(|e| e.value.as_str())
    }

    pub fn table(&self) -> String {
        let width = self.entries.iter().map(|e| e.name.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            let pad = width - e.name.chars().count();
            let _ = writeln!(out, "{}{}  {}", e.name, " ".repeat(pad), e.value);
        }
        out
    }
}

struct Entries(Vec<InspectEntry>);

impl Entries {
    fn push(&mut self, name: impl Into<String>, value: impl ToString) {
        self.0.push(InspectEntry {
            name: name.into(),
            value: value.to_string(),
        });
    }
}

pub fn inspect(target: &str, what: InspectWhat, options: &Options) -> Result<InspectDocument, CliError> {
    let t = Target::resolve(target, options.field.as_deref())?;
    let params = t.parameters(options);
    let bound = params.order_bound.expect("set");
    let mut e = Entries(Vec::new());
    match &t {
        Target::Finite { algebra: h, .. } => inspect_finite(h, what, bound, &mut e)?,
        Target::Bicross { n, .. } => inspect_bicross(*n, params.window.expect("set"), what, bound, &mut e)?,
        Target::Qsl2 => inspect_qsl2(params.degree.expect("set"), what, bound, &mut e),
    }
    Ok(InspectDocument {
        engine_version: env!("CARGO_PKG_VERSION").to_string(),
        algebra: t.descriptor(),
        what,
        parameters: params,
        entries: e.0,
    })
}

fn inspect_finite(h: &HopfAlgebra, what: InspectWhat, bound: u64, e: &mut Entries) -> Result<(), CliError> {
    let (ints, gl) = integrals::analyze(h)?;
    let names = &h.basis_names;
    match what {
        InspectWhat::Integrals => {
            e.push("left integral t", &ints.left_h);
            e.push("right integral T", &ints.right_h);
            e.push("left integral λ", &ints.left_hstar);
            e.push("right integral Λ", &ints.right_hstar);
            e.push("ε(t)", ints.left_h.counit());
            e.push("λ(1)", ints.left_hstar.eval(&h.one())?);
        }
        InspectWhat::Grouplikes => {
            for (i, name) in names.iter().enumerate() {
                e.push(format!("α({name})"), &gl.alpha.values()[i]);
            }
            e.push("g", &gl.g);
            e.push("g⁻¹", &gl.g_inv);
            e.push("order(α)", radford::order_of_character(&gl.alpha, bound));
            e.push("order(g)", radford::order_of_grouplike(&gl.g, bound));
        }
        InspectWhat::Nakayama => {
            let chi = integrals::nakayama_chi(h, &ints)?;
            let omega = integrals::nakayama_omega(h, &ints)?;
            for (label, m) in [("χ", &chi), ("Ω", &omega)] {
                for (i, name) in names.iter().enumerate() {
                    e.push(format!("{label}({name})"), h.format_vec(&m.column(i)));
                }
            }
        }
        InspectWhat::Orders => {
            let s = h.antipode_power(1);
            e.push("order(S)", radford::order_of_map(&s, bound));
            e.push("order(S²)", radford::order_of_map(&h.antipode_power(2), bound));
            e.push("order(α)", radford::order_of_character(&gl.alpha, bound));
            e.push("order(g)", radford::order_of_grouplike(&gl.g, bound));
        }
    }
    Ok(())
}

fn inspect_bicross(n: u64, window: i64, what: InspectWhat, bound: u64, e: &mut Entries) -> Result<(), CliError> {
    let b = Bicross::new(n)?;
    let gens = [
        BicrossBasis::new(1, 0, 0),
        BicrossBasis::new(0, 1, 0),
        BicrossBasis::new(0, 0, 1),
    ];
    match what {
        InspectWhat::Integrals => {
            e.push("right integral Λ", format!("p_{{{}}}", BicrossBasis::new(0, b.n() - 1, 0)));
            e.push("window", format!("|k| ≤ {window}"));
        }
        InspectWhat::Grouplikes => {
            let alpha = bicross::distinguished_alpha_bicross(&b, window)?;
            for g in gens {
                e.push(format!("α({g})"), alpha.alpha.eval_basis(&g));
            }
            let g = bicross::distinguished_g_bicross(&b, window.max(b.n() as i64))?;
            e.push("g", &g);
            e.push("order(α)", bicross::order_of_character_bicross(&b, &alpha.alpha, bound));
            e.push("order(g)", bicross::order_of_grouplike_bicross(&b, &g, bound));
        }
        InspectWhat::Nakayama => {
            let alpha = bicross::distinguished_alpha_bicross(&b, window)?;
            for g in gens {
                e.push(format!("Ω({g})"), &alpha.omega[&g]);
            }
            for g in gens {
                e.push(format!("α⁻¹({g})"), alpha.alpha_inv.eval_basis(&g));
            }
        }
        InspectWhat::Orders => {
            let alpha = bicross::distinguished_alpha_bicross(&b, window)?;
            let g = bicross::distinguished_g_bicross(&b, window.max(b.n() as i64))?;
            e.push("order(S)", bicross::order_of_antipode_bicross(&b, window, bound));
            e.push("order(α)", bicross::order_of_character_bicross(&b, &alpha.alpha, bound));
            e.push("order(g)", bicross::order_of_grouplike_bicross(&b, &g, bound));
        }
    }
    Ok(())
}

fn inspect_qsl2(degree: u32, what: InspectWhat, bound: u64, e: &mut Entries) {
    let h = Qsl2::new();
    match what {
        InspectWhat::Integrals => {
            for w in ["", "bc", "da", "ad"] {
                let x = h.normal_form(&Qsl2::parse_word(w).expect("word"));
                e.push(format!("λ({})", if w.is_empty() { "1" } else { w }), h.lambda(&x));
            }
            for m in 2..=degree / 2 {
                let mono = PbwMonomial::new(0, m, m, 0).expect("i = 0");
                e.push(format!("λ({mono})"), h.lambda_monomial(&mono));
            }
        }
        InspectWhat::Grouplikes => {
            let alpha = h.alpha();
            for (g, v) in Generator::ALL.iter().zip([&alpha.a, &alpha.b, &alpha.c, &alpha.d]) {
                e.push(format!("α({g})"), v);
            }
            e.push("g", "1");
            e.push("order(α)", qsl2::order_of_alpha(&h, bound));
        }
        InspectWhat::Nakayama => {
            for g in Generator::ALL {
                e.push(format!("χ({g})"), h.chi_generator(g));
            }
            e.push("checked on", format!("monomials of degree ≤ {degree}"));
        }
        InspectWhat::Orders => {
            e.push("order(S)", qsl2::order_of_antipode_on_b(&h, bound));
            e.push("order(α)", qsl2::order_of_alpha(&h, bound));
            e.push("order(g)", "1");
        }
    }
}

pub fn export(preset: &str, out: &Path, field: Option<&str>) -> Result<(), CliError> {
    let field: Option<FieldSpec> = field.map(str::parse).transpose()?;
    let p: Preset = preset.parse()?;
    let h = p.build(field.as_ref())?;
    io::save_algebra(&h, out).map_err(|source| CliError::Write {
        path: out.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn human_report(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let p = &doc.parameters;
    let _ = write!(
        out,
        "hopfkit {}  target {}  field {}  battery {}",
        doc.engine_version, doc.algebra.target, doc.algebra.field, doc.battery
    );
    if let Some(w) = p.window {
        let _ = write!(out, "  window {w}");
    }
    if let Some(d) = p.degree {
        let _ = write!(out, "  degree {d}");
    }
    out.push('\n');
    let report = VerificationReport {
        checks: doc.checks.clone(),
    };
    let _ = writeln!(out, "{report}");
    let _ = writeln!(
        out,
        "status: {}  ({} passed, {} failed, {} not applicable)",
        doc.status, doc.summary.passed, doc.summary.failed, doc.summary.not_applicable
    );
    out
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Verify {
            target,
            battery,
            options,
        } => {
            let doc = verify(&target, battery, &options)?;
            match &options.json {
                Some(path) => {
                    write_file(path, &doc.to_json())?;
                    println!("{}: {}", doc.algebra.target, doc.status);
                }
                None => print!("{}", human_report(&doc)),
            }
            Ok(if doc.status == crate::report::Status::Pass { 0 } else { 1 })
        }
        Command::Inspect {
            target,
            what,
            options,
        } => {
            let doc = inspect(&target, what, &options)?;
            match &options.json {
                Some(path) => {
                    let mut s = serde_json::to_string_pretty(&doc).expect("inspect documents serialize");
                    s.push('\n');
                    write_file(path, &s)?;
                }
                None => print!("{}", doc.table()),
            }
            Ok(0)
        }
        Command::Export { preset, out, field } => {
            export(&preset, &out, field.as_deref())?;
            Ok(0)
        }
    }
}

/// Parse arguments, run, and return the process exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
