//! Command-line front end: argument parsing, dispatch over the scalar type,
//! and rendering of results as JSON or CSV.
//!
//! [`run`] is the whole program; the binary only forwards the process
//! arguments and standard streams to it.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use mvcvar::laws::run_laws;
use mvcvar::scenario::load_scenarios_from_str;
use mvcvar::{
    desirable_region, enumerate_mvar, enumerate_mvar_oracle, export_mip, full_report, vmcvar, ConfidenceLevel, Exact,
    Exceedance, InputFormat, Law, RiskValue, RiskVector, Scalar, ScalarizationWeights, ScenarioSet,
};
use serde_json::{json, Map, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;
pub const EXIT_LAW: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "mvcvar",
    version,
    about = "Multivariate VaR and vector-valued multivariate CVaR for discrete scenarios"
)]
#[command(arg_required_else_help = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Scenario file (CSV `prob,x1,..,xd[,label]` or JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,

    /// Confidence level as a decimal literal in (0,1), e.g. 0.6.
    #[arg(long, global = true)]
    level: Option<String>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Compute in exact rational arithmetic instead of f64.
    #[arg(long, global = true)]
    exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// p-level efficient points (multivariate VaR).
    Mvar {
        /// Cross-check against exhaustive subset enumeration.
        #[arg(long)]
        oracle: bool,
    },
    /// Vector-valued multivariate CVaR with the anchoring pLEPs.
    Vmcvar,
    /// All measures side by side.
    Compare {
        /// Scalarization weights `c1,c2,...` for the scalar comparator.
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
        /// Condition the comparator on strict exceedance of the pLEP.
        #[arg(long)]
        strict_exceedance: bool,
    },
    /// Randomized checks of the coherence laws.
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// One of normalized, homogeneous, translation, monotone,
        /// subadditivity_violation, ordering.
        #[arg(long)]
        law: Option<String>,
    },
    /// Plot data for the desirable region of a bivariate instance (CSV).
    Region {
        /// Destination file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weighted-sum mixed-integer model in LP format.
    ExportMip {
        /// Scalarization weights `c1,c2,...`.
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        /// Destination file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A terminating condition with its exit code and diagnostic kind.
#[derive(Debug)]
struct Failure {
    code: i32,
    kind: String,
    message: String,
}

impl Failure {
    fn new(code: i32, kind: &str, message: impl Into<String>) -> Self {
        Self { code, kind: kind.to_string(), message: message.into() }
    }

    fn usage(kind: &str, message: impl Into<String>) -> Self {
        Self::new(EXIT_USAGE, kind, message)
    }
}

impl From<mvcvar::Error> for Failure {
    fn from(e: mvcvar::Error) -> Self {
        Self::new(EXIT_DATA, e.kind(), e.to_string())
    }
}

/// What a successful dispatch produced: the document for standard output
/// and the exit code to report (nonzero for law violations, where the
/// report is still emitted).
struct Completion {
    stdout: String,
    code: i32,
    diagnostic: Option<Failure>,
}

impl Completion {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: EXIT_OK, diagnostic: None }
    }
}

/// Runs the program on `args` (including the program name) and returns the
/// process exit code.
pub fn run<I, A>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => return report_clap_error(&e, stdout, stderr),
    };
    let result = if cli.exact { execute::<Exact>(&cli) } else { execute::<f64>(&cli) };
    match result {
        Ok(done) => {
            let _ = stdout.write_all(done.stdout.as_bytes());
            if let Some(f) = done.diagnostic {
                let _ = writeln!(stderr, "error:{}: {}", f.kind, f.message);
            }
            done.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error:{}: {}", f.kind, f.message);
            f.code
        }
    }
}

fn report_clap_error(e: &clap::Error, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    use clap::error::ErrorKind;
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            let _ = write!(stdout, "{}", e.render());
            EXIT_OK
        }
        _ => {
            let rendered = e.render().to_string();
            let first = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let first = first.trim_start_matches("error: ").trim();
            let summary = if e.kind() == ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                "no subcommand given"
            } else {
                first
            };
            let _ = writeln!(stderr, "error:usage: {summary}");
            let _ = write!(stderr, "{rendered}");
            EXIT_USAGE
        }
    }
}

fn execute<T: Scalar>(cli: &Cli) -> Result<Completion, Failure> {
    match &cli.command {
        Command::Laws { seed, trials, law } => laws::<T>(cli.format, *seed, *trials, law.as_deref()),
        Command::Mvar { oracle } => {
            let (set, level) = inputs::<T>(cli)?;
            mvar(&set, &level, *oracle, cli.format)
        }
        Command::Vmcvar => {
            let (set, level) = inputs::<T>(cli)?;
            let result = vmcvar(&set, &level)?;
            Ok(Completion::ok(match cli.format {
                Format::Json => {
                    let doc = json!({
                        "level": level.p().to_f64_lossy(),
                        "vmcvar": result.vectors.iter().map(vmcvar_entry).collect::<Vec<_>>(),
                    });
                    json_line(&doc)
                }
                Format::Csv => {
                    let mut table = Table::new(set.dim());
                    for (k, r) in result.vectors.iter().enumerate() {
                        table.risk("vmcvar", k, &r.value);
                    }
                    table.finish()
                }
            }))
        }
        Command::Compare { weights, strict_exceedance } => {
            let (set, level) = inputs::<T>(cli)?;
            let weights = weights.as_deref().map(parse_weights::<T>).transpose()?;
            let exceedance = if *strict_exceedance { Exceedance::Strictly } else { Exceedance::AtLeast };
            let report = full_report(&set, &level, weights.as_ref(), exceedance)?;
            Ok(Completion::ok(match cli.format {
                Format::Json => json_line(&report.to_json()),
                Format::Csv => {
                    let mut table = Table::new(set.dim());
                    for (k, q) in report.mvar.points().iter().enumerate() {
                        table.vector("mvar", k, &q.eta);
                    }
                    for (k, r) in report.vmcvar.vectors.iter().enumerate() {
                        table.risk("vmcvar", k, &r.value);
                    }
                    table.risk("vmcvar_bar", 0, &report.vmcvar_bar.value);
                    table.risk("cte", 0, &report.cte.value);
                    if let Some(scalar) = &report.mcvar_bar_scalar {
                        table.scalar("mcvar_bar_scalar", 0, scalar);
                    }
                    table.finish()
                }
            }))
        }
        Command::Region { out } => {
            let (set, level) = inputs::<T>(cli)?;
            let csv = desirable_region(&set, &level)?.to_csv();
            emit_to(out.as_deref(), csv)
        }
        Command::ExportMip { weights, out } => {
            let (set, level) = inputs::<T>(cli)?;
            let weights = parse_weights::<T>(weights)?;
            let lp = export_mip(&set, &level, &weights)?;
            emit_to(out.as_deref(), lp)
        }
    }
}

fn inputs<T: Scalar>(cli: &Cli) -> Result<(ScenarioSet<T>, ConfidenceLevel<T>), Failure> {
    let path = cli.input.as_deref().ok_or_else(|| Failure::usage("usage", "--input is required"))?;
    let text = cli.level.as_deref().ok_or_else(|| Failure::usage("usage", "--level is required"))?;
    let level = ConfidenceLevel::parse(text).map_err(|e| Failure::usage(e.kind(), e.to_string()))?;
    let content = fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_DATA, "io", format!("cannot read '{}': {e}", path.display())))?;
    let format = InputFormat::detect(&path.to_string_lossy(), &content);
    let set = load_scenarios_from_str(&content, format)?;
    Ok((set, level))
}

fn parse_weights<T: Scalar>(text: &str) -> Result<ScalarizationWeights<T>, Failure> {
    let values = text
        .split(',')
        .map(|t| {
            T::parse_decimal(t.trim())
                .ok_or_else(|| Failure::usage("invalid_weights", format!("'{}' is not a decimal number", t.trim())))
        })
        .collect::<Result<Vec<T>, Failure>>()?;
    ScalarizationWeights::new(values).map_err(|e| Failure::usage(e.kind(), e.to_string()))
}

fn mvar<T: Scalar>(
    set: &ScenarioSet<T>,
    level: &ConfidenceLevel<T>,
    oracle: bool,
    format: Format,
) -> Result<Completion, Failure> {
    let result = enumerate_mvar(set, level)?;
    if oracle {
        let reference = enumerate_mvar_oracle(set, level)?;
        if !result.same_points(&reference, &T::default_coord_tol()) {
            return Err(Failure::new(
                EXIT_ORACLE,
                "oracle_mismatch",
                format!("grid scan found {} pLEPs, subset enumeration found {}", result.len(), reference.len()),
            ));
        }
    }
    Ok(Completion::ok(match format {
        Format::Json => {
            let doc = json!({
                "level": level.p().to_f64_lossy(),
                "plep": result.points().iter().map(|q| floats(&q.eta)).collect::<Vec<_>>(),
                "cdf": result.points().iter().map(|q| q.cdf.to_f64_lossy()).collect::<Vec<_>>(),
            });
            json_line(&doc)
        }
        Format::Csv => {
            let mut table = Table::new(set.dim());
            for (k, q) in result.points().iter().enumerate() {
                table.vector("mvar", k, &q.eta);
            }
            for (k, q) in result.points().iter().enumerate() {
                table.scalar("cdf", k, &RiskValue::Defined(q.cdf.clone()));
            }
            table.finish()
        }
    }))
}

fn laws<T: Scalar>(format: Format, seed: u64, trials: u64, law: Option<&str>) -> Result<Completion, Failure> {
    let law = law
        .map(|name| {
            Law::parse(name).ok_or_else(|| {
                let known: Vec<&str> = Law::ALL.iter().map(|l| l.name()).collect();
                Failure::usage("unknown_law", format!("'{name}' is not one of {}", known.join(", ")))
            })
        })
        .transpose()?;
    let reports = run_laws::<T>(seed, trials, law)?;
    let stdout = match format {
        Format::Json => {
            let doc = serde_json::to_value(&reports).expect("law reports serialize");
            json_line(&doc)
        }
        Format::Csv => {
            let mut out = String::from("law,instances_tested,instances_generated,violations,holds\n");
            for r in &reports {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.law.name(),
                    r.instances_tested,
                    r.instances_generated,
                    r.violations.len(),
                    r.holds()
                ));
            }
            out
        }
    };
    let failed: Vec<&str> = reports.iter().filter(|r| !r.holds()).map(|r| r.law.name()).collect();
    if failed.is_empty() {
        Ok(Completion::ok(stdout))
    } else {
        Ok(Completion {
            stdout,
            code: EXIT_LAW,
            diagnostic: Some(Failure::new(EXIT_LAW, "law_violation", format!("failed: {}", failed.join(", ")))),
        })
    }
}

fn emit_to(out: Option<&Path>, text: String) -> Result<Completion, Failure> {
    match out {
        None => Ok(Completion::ok(text)),
        Some(path) => {
            fs::write(path, text)
                .map_err(|e| Failure::new(EXIT_DATA, "io", format!("cannot write '{}': {e}", path.display())))?;
            Ok(Completion::ok(String::new()))
        }
    }
}

fn floats<T: Scalar>(v: &[T]) -> Vec<f64> {
    v.iter().map(Scalar::to_f64_lossy).collect()
}

fn risk_value<T: Scalar>(value: &RiskValue<Vec<T>>) -> Value {
    match value {
        RiskValue::Defined(v) => json!(floats(v)),
        RiskValue::Undefined => json!("undefined"),
    }
}

fn vmcvar_entry<T: Scalar>(r: &RiskVector<T>) -> Value {
    let mut entry = Map::new();
    entry.insert("value".into(), risk_value(&r.value));
    if let Some(anchor) = &r.anchor {
        entry.insert("anchor".into(), json!(floats(&anchor.eta)));
    }
    Value::Object(entry)
}

fn json_line(doc: &Value) -> String {
    let mut text = serde_json::to_string(doc).expect("JSON values serialize");
    text.push('\n');
    text
}

/// CSV with columns `kind,index,status,x1..xd`; undefined values leave the
/// coordinates empty and scalars occupy `x1`.
struct Table {
    dim: usize,
    out: String,
}

impl Table {
    fn new(dim: usize) -> Self {
        let mut out = String::from("kind,index,status");
        for i in 1..=dim {
            out.push_str(&format!(",x{i}"));
        }
        out.push('\n');
        Self { dim, out }
    }

    fn row(&mut self, kind: &str, index: usize, status: &str, cells: &[String]) {
        self.out.push_str(&format!("{kind},{index},{status}"));
        for i in 0..self.dim {
            self.out.push(',');
            if let Some(cell) = cells.get(i) {
                self.out.push_str(cell);
            }
        }
        self.out.push('\n');
    }

    fn vector<T: Scalar>(&mut self, kind: &str, index: usize, v: &[T]) {
        let cells: Vec<String> = v.iter().map(Scalar::to_decimal_text).collect();
        self.row(kind, index, "defined", &cells);
    }

    fn risk<T: Scalar>(&mut self, kind: &str, index: usize, value: &RiskValue<Vec<T>>) {
        match value {
            RiskValue::Defined(v) => self.vector(kind, index, v),
            RiskValue::Undefined => self.row(kind, index, "undefined", &[]),
        }
    }

    fn scalar<T: Scalar>(&mut self, kind: &str, index: usize, value: &RiskValue<T>) {
        match value {
            RiskValue::Defined(v) => self.row(kind, index, "defined", &[v.to_decimal_text()]),
            RiskValue::Undefined => self.row(kind, index, "undefined", &[]),
        }
    }

    fn finish(self) -> String {
        self.out
    }
}
