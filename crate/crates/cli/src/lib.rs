//! The `coconvex` command-line tool: JSON in, JSON or tables out.
//!
//! Exit codes: `0` success, `1` an inequality violation was found, `2` the
//! input was malformed or failed validation.

pub mod input;
pub mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coconvex::exactgeom::polytope::factorial;
use coconvex::localalg::{self, LocalIdeal};
use coconvex::regions::mixed_covol;
use coconvex::semigroups::PrimaryGradedSequence;
use coconvex::verify::{run_suite, InstanceSpec, Suite, VerificationReport};
use coconvex::Rational;
use num_bigint::BigInt;
use serde_json::{json, Value};

use input::{read_json, CountingInput, IdealFile, IdealList, MixedInput, RegionInput};
use output::{int, points, q};

/// Relative `--output` paths resolve against this directory when it is set.
pub const OUTPUT_DIR_ENV: &str = "COCONVEX_OUTPUT_DIR";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] coconvex::Error),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// Short name shown in diagnostics, e.g. `NotCobounded`.
    pub fn kind(&self) -> String {
        match self {
            CliError::Input(_) => "InvalidInput".into(),
            CliError::Io(_) => "Io".into(),
            CliError::Core(e) => {
                let dbg = format!("{e:?}");
                dbg.split(|c: char| !c.is_alphanumeric())
                    .next()
                    .unwrap_or("Error")
                    .to_string()
            }
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "coconvex",
    version,
    about = "Covolumes of Newton regions and multiplicities of primary ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// Write the result here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Include wall-clock time in JSON output (tables always show it).
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// e(a) of an ideal: exact for monomial ideals, via initial ideals of powers otherwise.
    Multiplicity {
        #[command(flatten)]
        io: InputArgs,
        /// Powers examined for polynomial ideals (default n + 4).
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Covolume of a Newton region (or of a monomial ideal's region).
    Covolume {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Facets, vertices and bounded faces of a Newton region.
    Newton {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Mixed covolume of n regions, or mixed multiplicity of n monomial ideals.
    Mixed {
        #[command(flatten)]
        io: InputArgs,
    },
    /// H(k) for k = 1..kmax with its stabilized polynomial fit.
    HilbertSamuel {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, default_value_t = 10)]
        kmax: u32,
    },
    /// The initial staircase of a^k.
    InitialIdeal {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// The chain e(a) <= e(in(a)) <= n! dim R/a.
    Lech {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Local Bernstein-Kushnirenko number of n monomial ideals.
    Bk {
        #[command(flatten)]
        io: InputArgs,
    },
    /// Run a verification suite on seeded random instances.
    Verify {
        /// bm-covol, af-covol, bm-mult, polynomiality, lech, or all.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        exponent_bound: Option<i64>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind());
            2
        }
    }
}

struct Outcome {
    value: Value,
    violation: bool,
}

fn ok(value: Value) -> Outcome {
    Outcome {
        value,
        violation: false,
    }
}

fn execute(cmd: Command) -> Result<i32, CliError> {
    let start = Instant::now();
    let (out, result) = match cmd {
        Command::Multiplicity { io, kmax } => (io.out, multiplicity(&io.input, kmax)?),
        Command::Covolume { io } => (io.out, covolume(&io.input)?),
        Command::Newton { io } => (io.out, newton(&io.input)?),
        Command::Mixed { io } => (io.out, mixed(&io.input)?),
        Command::HilbertSamuel { io, kmax } => (io.out, hilbert_samuel(&io.input, kmax)?),
        Command::InitialIdeal { io, k } => (io.out, initial_ideal(&io.input, k)?),
        Command::Lech { io, kmax } => (io.out, lech(&io.input, kmax)?),
        Command::Bk { io } => (io.out, bk(&io.input)?),
        Command::Verify {
            suite,
            count,
            seed,
            dim,
            exponent_bound,
            out,
        } => (out, verify(&suite, count, seed, dim, exponent_bound)?),
    };
    emit(&out, result.value, start)?;
    Ok(if result.violation { 1 } else { 0 })
}

fn resolve_output(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Some(dir) = std::env::var_os(OUTPUT_DIR_ENV) {
            return Path::new(&dir).join(path);
        }
    }
    path.to_path_buf()
}

fn emit(out: &OutputArgs, mut value: Value, start: Instant) -> Result<(), CliError> {
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let text = match out.format {
        Format::Json => {
            if out.timing {
                if let Value::Object(m) = &mut value {
                    m.insert("time_ms".into(), json!((elapsed * 1000.0).round() / 1000.0));
                }
            }
            let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut s = output::table(&value);
            s.push_str(&format!("time  {elapsed:.3} ms\n"));
            s
        }
    };
    match &out.output {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Io(e.to_string()))
        }
        Some(p) => {
            let path = resolve_output(p);
            std::fs::write(&path, text)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))
        }
    }
}

fn n_factorial(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

fn multiplicity(path: &Path, kmax: Option<u32>) -> Result<Outcome, CliError> {
    let file: IdealFile = read_json(path)?;
    match file.to_ideal()? {
        LocalIdeal::Monomial(m) => {
            let region = m.region()?;
            Ok(ok(json!({
                "e": int(&localalg::multiplicity(&m)?),
                "covolume": q(&region.covol()),
                "generators": points(&m.generators()),
            })))
        }
        LocalIdeal::Poly(p) => {
            let kmax = kmax.unwrap_or_else(|| localalg::default_kmax(p.dim()));
            let r = localalg::multiplicity_report(&p, kmax)?;
            Ok(ok(json!({
                "e": q(r.best()),
                "exact": r.exact.is_some(),
                "upper_bound": q(&r.upper),
                "u": r.u.iter().map(q).collect::<Vec<_>>(),
                "initial_multiplicities": r.initial_multiplicities.iter().map(int).collect::<Vec<_>>(),
                "hilbert": r.hilbert,
                "fit_start": r.fit.as_ref().map(|f| f.start),
            })))
        }
    }
}

fn region_of(path: &Path) -> Result<coconvex::NewtonRegion, CliError> {
    match read_json::<RegionInput>(path)? {
        RegionInput::Region(r) => r.to_region(),
        RegionInput::Ideal(i) => Ok(i.to_monomial()?.region()?),
    }
}

fn covolume(path: &Path) -> Result<Outcome, CliError> {
    let r = region_of(path)?;
    Ok(ok(json!({
        "covolume": q(&r.covol()),
        "threshold": q(r.threshold()),
        "vertices": r.generators().iter().map(|g| output::rat_point(g)).collect::<Vec<_>>(),
    })))
}

fn newton(path: &Path) -> Result<Outcome, CliError> {
    let r = region_of(path)?;
    let mut v = output::region(&r);
    let faces: Vec<Value> = r
        .newton_diagram()?
        .iter()
        .map(|f| Value::Array(f.vertices().iter().map(|p| output::rat_point(p)).collect()))
        .collect();
    if let Value::Object(m) = &mut v {
        m.insert("covolume".into(), q(&r.covol()));
        m.insert("diagram".into(), Value::Array(faces));
    }
    Ok(ok(v))
}

fn mixed(path: &Path) -> Result<Outcome, CliError> {
    match read_json::<MixedInput>(path)? {
        MixedInput::Regions { regions } => {
            let rs = regions
                .iter()
                .map(|r| r.to_region())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ok(json!({ "mixed_covolume": q(&mixed_covol(&rs)?) })))
        }
        MixedInput::Ideals { ideals } => {
            let ms = ideals
                .iter()
                .map(IdealFile::to_monomial)
                .collect::<Result<Vec<_>, _>>()?;
            let regions = ms
                .iter()
                .map(|m| m.region())
                .collect::<Result<Vec<_>, _>>()?;
            Ok(ok(json!({
                "mixed_covolume": q(&mixed_covol(&regions)?),
                "mixed_multiplicity": int(&localalg::mixed_multiplicity(&ms)?),
            })))
        }
    }
}

fn fit_value(fit: &Option<coconvex::fit::StabilizedFit>) -> Value {
    match fit {
        None => Value::Null,
        Some(f) => json!({"leading_coefficient": q(&f.leading), "start": f.start}),
    }
}

fn hilbert_samuel(path: &Path, kmax: u32) -> Result<Outcome, CliError> {
    if kmax == 0 {
        return Err(CliError::Input("kmax must be positive".into()));
    }
    match read_json::<CountingInput>(path)? {
        CountingInput::Semigroup(s) => {
            let ideal = s.to_ideal()?;
            let ell = ideal.semigroup().default_ell();
            let seq = PrimaryGradedSequence::powers(ideal, &ell)?;
            let h = seq.hilbert_samuel_sequence(kmax)?;
            let fit = seq.hilbert_fit(kmax)?;
            Ok(ok(json!({
                "H": h,
                "fit": fit_value(&fit),
                "t0": q(seq.t0()),
                "multiplicity": fit.as_ref().map(|f| q(&f.leading)),
            })))
        }
        CountingInput::Ideal(i) => {
            let ideal = i.to_ideal()?;
            let h = localalg::hilbert_samuel(&ideal, kmax)?;
            let hb: Vec<BigInt> = h.iter().map(|&v| BigInt::from(v)).collect();
            let fit = coconvex::fit::stabilized_leading_coefficient(&hb, ideal.dim());
            let e = fit
                .as_ref()
                .map(|f| q(&(&f.leading * n_factorial(ideal.dim()))));
            Ok(ok(
                json!({ "H": h, "fit": fit_value(&fit), "multiplicity": e }),
            ))
        }
    }
}

fn initial_ideal(path: &Path, k: u32) -> Result<Outcome, CliError> {
    let file: IdealFile = read_json(path)?;
    let a = file.to_poly_ideal()?;
    let stair = localalg::initial_semigroup_ideal(&a, k)?;
    Ok(ok(json!({
        "k": k,
        "m0": a.m0(),
        "generators": points(&stair.sorted_generators()),
        "colength": stair.complement_count()?,
    })))
}

fn lech(path: &Path, kmax: Option<u32>) -> Result<Outcome, CliError> {
    let file: IdealFile = read_json(path)?;
    let chain = match file.to_ideal()? {
        LocalIdeal::Monomial(m) => localalg::lech_chain_monomial(&m)?,
        LocalIdeal::Poly(p) => {
            let kmax = kmax.unwrap_or_else(|| localalg::default_kmax(p.dim()));
            localalg::lech_chain_with(&p, kmax)?
        }
    };
    Ok(Outcome {
        value: json!({
            "e": q(&chain.e),
            "e_exact": chain.e_exact,
            "e_in": int(&chain.e_in),
            "colength": chain.colength,
            "bound": int(&chain.bound),
            "holds": chain.holds,
        }),
        violation: !chain.holds,
    })
}

fn bk(path: &Path) -> Result<Outcome, CliError> {
    let list: IdealList = read_json(path)?;
    let ms = list
        .ideals
        .iter()
        .map(IdealFile::to_monomial)
        .collect::<Result<Vec<_>, _>>()?;
    let r = localalg::bk_report(&ms)?;
    Ok(ok(
        json!({ "number": int(&r.number), "statement": r.to_string() }),
    ))
}

fn verify(
    suite: &str,
    count: usize,
    seed: u64,
    dim: usize,
    exponent_bound: Option<i64>,
) -> Result<Outcome, CliError> {
    let mut spec = InstanceSpec::new(dim, seed);
    if let Some(b) = exponent_bound {
        spec.exponent_bound = b;
    }
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let reports: Vec<VerificationReport> = suites
        .iter()
        .map(|&s| run_suite(s, &spec, count))
        .collect::<Result<_, _>>()?;
    let violation = reports.iter().any(|r| !r.is_clean());
    let value = if reports.len() == 1 {
        output::report(&reports[0])
    } else {
        json!({ "reports": reports.iter().map(output::report).collect::<Vec<_>>() })
    };
    Ok(Outcome { value, violation })
}
