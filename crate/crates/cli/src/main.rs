use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use mexpart::congruence::{check_progression, Evaluator, FunctionId, ProgressionSpec};
use mexpart::mex::{mex_count_oracle, MexParams};
use mexpart::overpartition::{singular_overpartition_oracle, SingularParams};
use mexpart::report::{Failure, ReportBuilder, Subject};
use mexpart::suite::{run_suite, Bounds, Suite, ARGUMENT_CAP};
use mexpart::{Error, VerificationReport};

#[derive(Parser)]
#[command(name = "mexpart")]
#[command(about = "Exact computation and congruence checking for mex-related partition functions")]
#[command(version)]
struct Cli {
    /// Truncation order of every power series
    #[arg(long, global = true, default_value_t = 2000)]
    trunc: usize,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print f(0), ..., f(n-max)
    Compute {
        #[arg(value_enum)]
        function: ComputeFunction,
        #[command(flatten)]
        params: FunctionParams,
        #[arg(long)]
        n_max: usize,
    },
    /// Run a verification suite; exit 1 if any counterexample is found
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long)]
        t_max: Option<u32>,
        #[arg(long)]
        k_max: Option<u32>,
        #[arg(long)]
        alpha_max: Option<u32>,
        #[arg(long)]
        beta_max: Option<u32>,
        /// Prime for the families that take one
        #[arg(long)]
        prime: Option<u64>,
        /// Largest progression argument a family sweep will visit
        #[arg(long, default_value_t = ARGUMENT_CAP)]
        argument_cap: u64,
        #[command(flatten)]
        progression: ProgressionArgs,
    },
    /// Compare the enumeration oracle with the generating function
    OracleCheck {
        #[arg(value_enum)]
        function: OracleFunction,
        #[command(flatten)]
        params: FunctionParams,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComputeFunction {
    P,
    #[value(name = "p_tt")]
    PTt,
    #[value(name = "p_2tt")]
    P2tt,
    Singular,
    #[value(name = "p_Aa_oracle")]
    PAaOracle,
    #[value(name = "C_ki_oracle")]
    CkiOracle,
}

impl ComputeFunction {
    fn name(self) -> &'static str {
        match self {
            ComputeFunction::P => "p",
            ComputeFunction::PTt => "p_tt",
            ComputeFunction::P2tt => "p_2tt",
            ComputeFunction::Singular => "singular",
            ComputeFunction::PAaOracle => "p_Aa_oracle",
            ComputeFunction::CkiOracle => "C_ki_oracle",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleFunction {
    #[value(name = "p_tt")]
    PTt,
    #[value(name = "p_2tt")]
    P2tt,
    Singular,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Thm1,
    Thm2,
    Ramanujan,
    Thm3,
    Parity,
    Section1,
    Thm5,
    Thm11,
    Thm6,
    Cor1,
    Thm12,
    Thm13,
    Thm14,
    Final,
    /// A single progression given by --function, --step, --offset and --modulus
    Progression,
}

#[derive(Args, Default)]
struct FunctionParams {
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    i: Option<u32>,
    #[arg(long = "A")]
    big_a: Option<u32>,
    #[arg(long = "a")]
    small_a: Option<u32>,
}

#[derive(Args)]
struct ProgressionArgs {
    #[arg(long, value_enum)]
    function: Option<ProgressionFunction>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    i: Option<u32>,
    #[arg(long)]
    step: Option<u64>,
    #[arg(long)]
    offset: Option<u64>,
    #[arg(long)]
    modulus: Option<u64>,
    #[arg(long)]
    exclude_multiples_of: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProgressionFunction {
    P,
    #[value(name = "p_tt")]
    PTt,
    #[value(name = "p_2tt")]
    P2tt,
    Singular,
}

enum Failed {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        Failed::Lib(e)
    }
}

impl From<io::Error> for Failed {
    fn from(e: io::Error) -> Self {
        Failed::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> Failed {
    Failed::Usage(msg.into())
}

fn need<T>(value: Option<T>, flag: &str, function: &str) -> Result<T, Failed> {
    value.ok_or_else(|| usage(format!("{function} requires --{flag}")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failed::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failed::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failed::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failed::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool, Failed> {
    match cli.command {
        Command::Compute { function, params, n_max } => {
            compute(function, &params, n_max, cli.trunc, cli.format)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            n_max,
            t_max,
            k_max,
            alpha_max,
            beta_max,
            prime,
            argument_cap,
            progression,
        } => {
            let eval = Evaluator::new(cli.trunc);
            let reports = match suite {
                SuiteArg::Progression => {
                    let n_max = need(n_max, "n-max", "verify progression")?;
                    let spec = progression_spec(&progression)?;
                    vec![check_progression(&eval, &spec, n_max)?]
                }
                other => {
                    let bounds = Bounds {
                        n_max,
                        t_max,
                        k_max,
                        alpha_max,
                        beta_max,
                        prime,
                        argument_cap,
                    };
                    run_suite(suite_of(other), &bounds, &eval)?
                }
            };
            emit_reports(&reports, cli.format)
        }
        Command::OracleCheck { function, params, n_max } => {
            let report = oracle_check(function, &params, n_max, cli.trunc)?;
            emit_reports(&[report], cli.format)
        }
    }
}

fn suite_of(arg: SuiteArg) -> Suite {
    match arg {
        SuiteArg::All => Suite::All,
        SuiteArg::Thm1 => Suite::Thm1,
        SuiteArg::Thm2 => Suite::Thm2,
        SuiteArg::Ramanujan => Suite::Ramanujan,
        SuiteArg::Thm3 => Suite::Thm3,
        SuiteArg::Parity => Suite::Parity,
        SuiteArg::Section1 => Suite::Section1,
        SuiteArg::Thm5 => Suite::Thm5,
        SuiteArg::Thm11 => Suite::Thm11,
        SuiteArg::Thm6 => Suite::Thm6,
        SuiteArg::Cor1 => Suite::Cor1,
        SuiteArg::Thm12 => Suite::Thm12,
        SuiteArg::Thm13 => Suite::Thm13,
        SuiteArg::Thm14 => Suite::Thm14,
        SuiteArg::Final => Suite::Final,
        SuiteArg::Progression => unreachable!("handled by the caller"),
    }
}

fn progression_spec(args: &ProgressionArgs) -> Result<ProgressionSpec, Failed> {
    let what = "verify progression";
    let function = match need(args.function, "function", what)? {
        ProgressionFunction::P => FunctionId::P,
        ProgressionFunction::PTt => FunctionId::p_tt(need(args.t, "t", what)?)?,
        ProgressionFunction::P2tt => FunctionId::p_2tt(need(args.t, "t", what)?)?,
        ProgressionFunction::Singular => FunctionId::singular(SingularParams::new(
            need(args.k, "k", what)?,
            need(args.i, "i", what)?,
        )?),
    };
    let step = need(args.step, "step", what)?;
    let offset = need(args.offset, "offset", what)?;
    let modulus = need(args.modulus, "modulus", what)?;
    let label = format!("{function}({step}n+{offset}) mod {modulus}");
    let spec = ProgressionSpec::new(label, function, step, offset, modulus)?;
    Ok(match args.exclude_multiples_of {
        Some(p) if p >= 2 => spec.excluding_multiples_of(p),
        Some(p) => return Err(usage(format!("--exclude-multiples-of must be at least 2, got {p}"))),
        None => spec,
    })
}

fn ensure_trunc(n_max: usize, trunc: usize) -> Result<(), Failed> {
    if n_max > trunc {
        return Err(Error::TruncationTooSmall {
            needed: n_max as u64,
            order: trunc,
        }
        .into());
    }
    Ok(())
}

fn compute(function: ComputeFunction, params: &FunctionParams, n_max: usize, trunc: usize, format: Format) -> Result<(), Failed> {
    let name = function.name();
    let (label, values): (String, Vec<BigInt>) = match function {
        ComputeFunction::P | ComputeFunction::PTt | ComputeFunction::P2tt | ComputeFunction::Singular => {
            let id = match function {
                ComputeFunction::P => FunctionId::P,
                ComputeFunction::PTt => FunctionId::p_tt(need(params.t, "t", name)?)?,
                ComputeFunction::P2tt => FunctionId::p_2tt(need(params.t, "t", name)?)?,
                _ => FunctionId::singular(SingularParams::new(need(params.k, "k", name)?, need(params.i, "i", name)?)?),
            };
            ensure_trunc(n_max, trunc)?;
            (id.params(), id.series(n_max)?.into_coeffs())
        }
        ComputeFunction::PAaOracle => {
            let a = need(params.big_a, "A", name)?;
            let r = need(params.small_a, "a", name)?;
            let mp = MexParams::new(a, r)?;
            let values = (0..=n_max)
                .map(|n| mex_count_oracle(n, mp).map(BigInt::from))
                .collect::<Result<_, _>>()?;
            (format!("A={a};a={r}"), values)
        }
        ComputeFunction::CkiOracle => {
            let sp = SingularParams::new(need(params.k, "k", name)?, need(params.i, "i", name)?)?;
            let values = (0..=n_max)
                .map(|n| singular_overpartition_oracle(n, sp).map(BigInt::from))
                .collect::<Result<_, _>>()?;
            (format!("k={};i={}", sp.k(), sp.i()), values)
        }
    };
    let mut out = io::stdout().lock();
    if format == Format::Csv {
        writeln!(out, "function,params,n,value")?;
    }
    for (n, v) in values.iter().enumerate() {
        match format {
            Format::Json => writeln!(
                out,
                "{}",
                json!({ "function": name, "params": label, "n": n, "value": v.to_string() })
            )?,
            Format::Csv => writeln!(out, "{name},{label},{n},{v}")?,
        }
    }
    Ok(())
}

fn oracle_check(function: OracleFunction, params: &FunctionParams, n_max: usize, trunc: usize) -> Result<VerificationReport, Failed> {
    ensure_trunc(n_max, trunc)?;
    let (id, oracle): (FunctionId, Box<dyn Fn(usize) -> mexpart::Result<u64>>) = match function {
        OracleFunction::PTt | OracleFunction::P2tt => {
            let t = need(params.t, "t", "oracle-check")?;
            let (id, mp) = if function == OracleFunction::PTt {
                (FunctionId::p_tt(t)?, MexParams::new(t, t)?)
            } else {
                (FunctionId::p_2tt(t)?, MexParams::new(2 * t, t)?)
            };
            (id, Box::new(move |n| mex_count_oracle(n, mp)))
        }
        OracleFunction::Singular => {
            let sp = SingularParams::new(need(params.k, "k", "oracle-check")?, need(params.i, "i", "oracle-check")?)?;
            (FunctionId::singular(sp), Box::new(move |n| singular_overpartition_oracle(n, sp)))
        }
    };
    let series = id.series(n_max)?;
    let mut report = ReportBuilder::new(Subject::check(format!("oracle_vs_series {id}")));
    for n in 0..=n_max {
        let value = BigInt::from(oracle(n)?);
        let expected = series.coeff(n);
        report.record(&value == expected, || Failure {
            n: n as u64,
            argument: n as u64,
            value: value.to_string(),
            expected: expected.to_string(),
            label: None,
        });
    }
    Ok(report.finish())
}

fn emit_reports(reports: &[VerificationReport], format: Format) -> Result<bool, Failed> {
    let mut out = io::stdout().lock();
    if format == Format::Csv {
        writeln!(out, "label,checked,skipped,failed,passed,first_failure_n")?;
    }
    for r in reports {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(r).expect("reports serialize"))?,
            Format::Csv => {
                let first = r.failures.first().map(|f| f.n.to_string()).unwrap_or_default();
                writeln!(
                    out,
                    "\"{}\",{},{},{},{},{first}",
                    r.label().replace('"', "\"\""),
                    r.checked,
                    r.skipped,
                    r.failed,
                    r.passed
                )?;
            }
        }
    }
    out.flush()?;
    let failed = reports.iter().filter(|r| !r.passed).count();
    for r in reports.iter().filter(|r| !r.passed) {
        eprintln!("{}", r.summary());
    }
    eprintln!("{} report(s), {failed} failed", reports.len());
    Ok(failed == 0)
}
