//! The `genocchi` command line: tables, single evaluations and the identity
//! suite. [`run`] is the whole program; the binary only forwards its
//! arguments and standard streams.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use genocchi_core::identities::{run_suite, IdentityId, LambdaChoice, SuiteConfig};
use genocchi_core::io::{table_to_csv, to_json};
use genocchi_core::{Error, Family, FamilySpec, Field, PolyTable, RatFun, Rational};

#[derive(Parser)]
#[command(
    name = "genocchi",
    version,
    about = "Exact Genocchi, Bernoulli and Euler polynomial tables and identity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a table of polynomial rows.
    Table(TableArgs),
    /// Print one row evaluated at a rational point.
    Eval(EvalArgs),
    /// Run the identity suite and write a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_parser = parse_family)]
    family: Family,
    #[arg(long)]
    order: Option<u32>,
    /// A rational `p/q` or `symbolic`.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_lambda)]
    lambda: Option<LambdaChoice>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    la: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    lb: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    lc: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    y: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    p: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    a: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    b: Option<Rational>,
    /// Series precision; defaults to max(33, max_n + 1).
    #[arg(long)]
    precision: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    max_n: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n: usize,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    x: Rational,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    /// Comma-separated identity ids; skips the sequence checks.
    #[arg(long, value_delimiter = ',', value_parser = parse_id)]
    only: Option<Vec<IdentityId>>,
    #[arg(long, default_value_t = 16)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_order: u32,
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true, value_parser = parse_lambda)]
    lambda: LambdaChoice,
    #[arg(long, default_value_t = 20)]
    log_samples: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Series precision; defaults to max(33, max_n + 5 max_order + 1).
    #[arg(long)]
    precision: Option<usize>,
    /// Treat every identity as expected to hold.
    #[arg(long)]
    expect_pass: bool,
    #[arg(long)]
    report: Option<PathBuf>,
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_lambda(s: &str) -> Result<LambdaChoice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_id(s: &str) -> Result<IdentityId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Domain(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(_) | Error::Config(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl FamilyArgs {
    /// A λ on a family without one selects its Apostol form.
    fn family(&self) -> Result<Family, Failure> {
        let concrete_one = matches!(&self.lambda, Some(LambdaChoice::Rational(q)) if *q == Rational::from(1i64));
        match (self.family, &self.lambda) {
            (f, None) => Ok(f),
            (f, Some(_)) if f.uses_lambda() => Ok(f),
            (f, Some(_)) if concrete_one => Ok(f),
            (Family::Genocchi, Some(_)) => Ok(Family::ApostolGenocchi),
            (Family::Bernoulli, Some(_)) => Ok(Family::ApostolBernoulli),
            (f, Some(_)) => Err(Failure::Usage(format!("{f} takes no λ"))),
        }
    }

    fn symbolic(&self) -> bool {
        matches!(self.lambda, Some(LambdaChoice::Symbolic))
    }

    fn spec<F: Field>(&self, lambda: F, max_n: usize) -> Result<FamilySpec<F>, Failure> {
        let family = self.family()?;
        let lift = |q: &Rational| F::from_rational(q);
        let mut spec = FamilySpec::new(family, max_n).with_lambda(lambda);
        if let Some(l) = self.order {
            spec = spec.with_order(l);
        }
        match (&self.la, &self.lb, &self.lc) {
            (None, None, None) if family.uses_logs() => {
                let lc = if family == Family::LuoEulerAb { F::zero() } else { F::one() };
                spec = spec.with_logs(F::zero(), F::one(), lc);
            }
            (None, None, None) => {}
            (la, lb, lc) if family.uses_logs() => {
                let get = |v: &Option<Rational>, name: &str| {
                    v.as_ref()
                        .map(lift)
                        .ok_or_else(|| Failure::Usage(format!("--{name} is required with the other logs")))
                };
                let lc =
                    if family == Family::LuoEulerAb { lc.as_ref().map_or_else(F::zero, lift) } else { get(lc, "lc")? };
                spec = spec.with_logs(get(la, "la")?, get(lb, "lb")?, lc);
            }
            _ => return Err(Failure::Usage(format!("{family} takes no --la/--lb/--lc"))),
        }
        if self.y.is_some() || self.p.is_some() {
            let y = self.y.as_ref().map_or_else(F::zero, lift);
            let p = self.p.as_ref().map_or_else(F::one, lift);
            spec = spec.with_aux(y, p);
        }
        match (&self.a, &self.b) {
            (None, None) => {}
            (Some(a), Some(b)) => spec = spec.with_scales(lift(a), lift(b)),
            _ => return Err(Failure::Usage("--a and --b go together".into())),
        }
        Ok(spec)
    }

    fn build<F: Field>(&self, lambda: F, max_n: usize) -> Result<PolyTable<F>, Failure> {
        let spec = self.spec(lambda, max_n)?;
        let precision = self.precision.unwrap_or(genocchi_core::series::DEFAULT_PRECISION.max(max_n + 1));
        Ok(PolyTable::build_with_precision(&spec, precision)?)
    }
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| Failure::from(e.error))?;
    Ok(())
}

fn emit(path: Option<&Path>, contents: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => write_atomic(p, contents),
        None => {
            out.write_all(contents.as_bytes())?;
            Ok(())
        }
    }
}

fn render<F: Field + serde::Serialize + std::fmt::Display>(
    t: &PolyTable<F>,
    format: Format,
) -> Result<String, Failure> {
    Ok(match format {
        Format::Csv => table_to_csv(t)?,
        Format::Json => to_json(t)?,
    })
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let f = &args.family;
    let text = if f.symbolic() {
        render(&f.build(RatFun::lambda(), args.max_n)?, args.format)?
    } else {
        let lambda = match &f.lambda {
            Some(LambdaChoice::Rational(q)) => q.clone(),
            _ => Rational::from(1i64),
        };
        render(&f.build(lambda, args.max_n)?, args.format)?
    };
    emit(args.output.as_deref(), &text, out)
}

fn cmd_eval(args: &EvalArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let f = &args.family;
    let lambda = match &f.lambda {
        Some(LambdaChoice::Symbolic) => return Err(Failure::Usage("eval needs a rational λ".into())),
        Some(LambdaChoice::Rational(q)) => q.clone(),
        None => Rational::from(1i64),
    };
    let table = f.build(lambda, args.n)?;
    writeln!(out, "{}", table.row(args.n)?.eval(&args.x))?;
    Ok(())
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let Suite::All = args.suite;
    let mut cfg = SuiteConfig {
        lambda: args.lambda.clone(),
        max_n: args.max_n,
        max_order: args.max_order,
        log_samples: args.log_samples,
        only: args.only.clone(),
        precision: args.precision,
        ..SuiteConfig::default()
    };
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    if args.expect_pass {
        cfg.expected_failures.clear();
    }
    cfg.precision()?;
    let report = run_suite(&cfg)?;
    if let Some(path) = &args.report {
        write_atomic(path, &report.to_json()?)?;
    }
    let s = &report.summary;
    writeln!(out, "pass {}, fail {}, documented_discrepancy {}", s.pass, s.fail, s.documented_discrepancy)?;
    for r in report.results.iter().filter(|r| r.status == genocchi_core::identities::Status::Fail).take(10) {
        writeln!(err, "FAIL {} ({})", r.id, r.params)?;
    }
    for e in report.resolved() {
        writeln!(err, "expected failure {} no longer fails", e.expected.id)?;
    }
    for c in report.failed_checks() {
        writeln!(err, "check {} failed: {}", c.name, c.detail.as_deref().unwrap_or(""))?;
    }
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Runs one command line (program name first) and returns the exit code:
/// 0 on success, 1 on a computation or verification failure, 2 on a usage
/// error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return e.exit_code() as u8;
        }
    };
    let result = match &cli.command {
        Command::Table(a) => cmd_table(a, out),
        Command::Eval(a) => cmd_eval(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Verification) => 1,
    }
}
