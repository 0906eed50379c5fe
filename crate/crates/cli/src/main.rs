use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weylschur::rational::{self, Rational};
use weylschur::specialize::{self, CharacterKind};
use weylschur::symring::{omega, to_schur_expansion};
use weylschur::{weyldet, Basis, Partition, SymFunc};

mod realize;
mod verify;

use realize::{Kind, Via};
use verify::{Convention, Params, Suite};

const DEFAULT_MAX_WEIGHT_CAP: u32 = 10;

/// `println!` that exits quietly when stdout is closed early, e.g. by `head`.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

#[derive(Parser)]
#[command(name = "weylschur", version, about = "Exact Schur, symplectic and orthogonal Schur functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Sp,
    SoOdd,
    SoEven,
}

#[derive(Subcommand)]
enum Command {
    /// Compute sp_λ, o_λ or s_λ through a chosen realization.
    Char {
        kind: Kind,
        partition: Partition,
        /// det:<h|e|hhat|ehat|hcheck|echeck>, vertex, vertex-dual, frobenius:<creation|annihilation>
        #[arg(long, default_value = "det:h")]
        via: Via,
        #[arg(long, default_value = "p")]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Schur-basis coefficients of sp_λ, o_λ or s_λ.
    Expand {
        kind: Kind,
        partition: Partition,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare ω(sp_λ) with o_λ′.
    Dual {
        partition: Partition,
        #[arg(long, default_value = "p")]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate the universal character at a torus point and compare with the Weyl character.
    Specialize {
        #[arg(value_enum)]
        group: Group,
        partition: Partition,
        /// Comma-separated rationals x_1,…,x_n, e.g. 2,1/3
        #[arg(long)]
        point: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Mode indices m, n range over [-R, R].
        #[arg(long, default_value_t = 5)]
        range: i64,
        /// Largest kernel size.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..=6))]
        k: u64,
        /// Index convention for the relations suite.
        #[arg(long, value_enum, default_value_t = Convention::Derived)]
        convention: Convention,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time the determinant and vertex-operator realizations.
    Bench {
        kind: Kind,
        partition: Partition,
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        repetitions: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Usage(String),
    Identity,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Char { kind, partition, via, basis, format } => {
            let f = realize::compute(kind, &partition, via).map_err(Failure::Usage)?;
            print_symfunc(&f.to_basis(basis), format);
            Ok(())
        }
        Command::Expand { kind, partition, format } => expand(kind, &partition, format),
        Command::Dual { partition, basis, format } => dual(&partition, basis, format),
        Command::Specialize { group, partition, point, format } => specialize_cmd(group, &partition, &point, format),
        Command::Verify { suite, max_weight, seed, range, k, convention, format } => {
            let cap = max_weight_cap()?;
            if max_weight > cap {
                return Err(Failure::Usage(format!(
                    "--max-weight {max_weight} exceeds the cap {cap} (WEYLSCHUR_MAX_WEIGHT)"
                )));
            }
            if range < 0 {
                return Err(Failure::Usage("--range must be non-negative".into()));
            }
            let params = Params { max_weight, seed, range, k: k as usize, convention };
            verify_cmd(suite, &params, format)
        }
        Command::Bench { kind, partition, repetitions, format } => {
            bench(kind, &partition, repetitions as usize, format)
        }
    }
}

fn max_weight_cap() -> Result<u32, Failure> {
    match std::env::var("WEYLSCHUR_MAX_WEIGHT") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("WEYLSCHUR_MAX_WEIGHT must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_WEIGHT_CAP),
    }
}

fn print_symfunc(f: &SymFunc, format: Format) {
    match format {
        Format::Text => out!("{f}"),
        Format::Json => out!("{}", f.to_json()),
    }
}

fn expand(kind: Kind, lambda: &Partition, format: Format) -> Result<(), Failure> {
    let expansion = to_schur_expansion(&realize::reference(kind, lambda));
    let rows: Vec<(&Partition, &Rational)> = expansion.canonical_terms();
    match format {
        Format::Text => {
            let width = rows.iter().map(|(mu, _)| mu.to_string().len()).max().unwrap_or(0).max(2);
            out!("{:<width$}  coeff", "mu");
            for (mu, c) in &rows {
                out!("{:<width$}  {}", mu.to_string(), rational::format(c));
            }
        }
        Format::Json => {
            let coefficients: Vec<Value> =
                rows.iter().map(|(mu, c)| json!({ "partition": mu, "coeff": rational::format(c) })).collect();
            out!("{}", json!({ "kind": kind.as_str(), "lambda": lambda, "coefficients": coefficients }));
        }
    }
    if expansion.has_integer_coefficients() {
        Ok(())
    } else {
        eprintln!("non-integral Schur coefficient in the expansion of {}{lambda}", kind.as_str());
        Err(Failure::Identity)
    }
}

fn dual(lambda: &Partition, basis: Basis, format: Format) -> Result<(), Failure> {
    let lhs = omega(&weyldet::sp(lambda)).to_basis(basis);
    let rhs = weyldet::o(&lambda.conjugate()).to_basis(basis);
    let verdict = if lhs == rhs { "EQUAL" } else { "NOT EQUAL" };
    match format {
        Format::Text => {
            out!("omega(sp{lambda}) = {lhs}");
            out!("o{} = {rhs}", lambda.conjugate());
            out!("{verdict}");
        }
        Format::Json => out!(
            "{}",
            json!({
                "lambda": lambda,
                "omega_sp": lhs.to_json(),
                "o_conjugate": rhs.to_json(),
                "verdict": verdict,
            })
        ),
    }
    if lhs == rhs {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn specialize_cmd(group: Group, lambda: &Partition, point: &str, format: Format) -> Result<(), Failure> {
    let xs: Vec<Rational> = point
        .split(',')
        .map(|t| rational::parse(t.trim()))
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Usage(format!("--point: {e}")))?;
    let kind = match group {
        Group::Sp => CharacterKind::Sp,
        Group::SoOdd => CharacterKind::OOdd,
        Group::SoEven => CharacterKind::OEven,
    };
    let c = specialize::character_crosscheck(kind, lambda, &xs).map_err(|e| Failure::Usage(e.to_string()))?;
    let (universal, oracle) = (rational::format(&c.universal), rational::format(&c.oracle));
    match format {
        Format::Json => {
            let shown: Vec<String> = xs.iter().map(rational::format).collect();
            out!(
                "{}",
                json!({
                    "lambda": lambda,
                    "group": kind.group_name(),
                    "rank": xs.len(),
                    "point": shown,
                    "universal": universal,
                    "oracle": oracle,
                })
            );
        }
        Format::Text => {
            out!("universal {universal}");
            out!("oracle    {oracle}");
        }
    }
    if c.agrees() {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn verify_cmd(suite: Suite, params: &Params, format: Format) -> Result<(), Failure> {
    let reports = verify::run(suite, params);
    let pass = reports.iter().all(|r| r.passed());
    match format {
        Format::Text => {
            for r in &reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                out!("{}: {status} {} instances, {} failed", r.suite.name(), r.instances.len(), r.failures());
                for c in r.counterexamples() {
                    out!("counterexample {c}");
                }
            }
        }
        Format::Json => {
            let suites: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
            let doc = json!({
                "pass": pass,
                "max_weight": params.max_weight,
                "seed": params.seed,
                "range": params.range,
                "k": params.k,
                "suites": suites,
            });
            out!("{doc}");
        }
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

struct Timing {
    min: Duration,
    median: Duration,
    mean: Duration,
}

fn time(repetitions: usize, f: impl Fn() -> SymFunc) -> Timing {
    let mut samples: Vec<Duration> = (0..repetitions)
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(f());
            start.elapsed()
        })
        .collect();
    samples.sort();
    let total: Duration = samples.iter().sum();
    Timing { min: samples[0], median: samples[samples.len() / 2], mean: total / repetitions as u32 }
}

fn bench(kind: Kind, lambda: &Partition, repetitions: usize, format: Format) -> Result<(), Failure> {
    let det = || realize::reference(kind, lambda);
    let vertex = || realize::compute(kind, lambda, Via::Vertex).expect("vertex realization always admissible");
    let (a, b) = (det(), vertex());
    if a != b {
        eprintln!("realizations disagree: det {a} vs vertex {b}");
        return Err(Failure::Identity);
    }
    let timings = [("det", time(repetitions, det)), ("vertex", time(repetitions, vertex))];
    match format {
        Format::Text => {
            out!(
                "{}{lambda}: realizations equal ({} power-sum terms), {repetitions} repetitions",
                kind.as_str(),
                a.num_terms()
            );
            for (name, t) in &timings {
                out!("{name:<7} min {:>12.3?}  median {:>12.3?}  mean {:>12.3?}", t.min, t.median, t.mean);
            }
        }
        Format::Json => {
            let rows: Vec<Value> = timings
                .iter()
                .map(|(name, t)| {
                    json!({
                        "realization": name,
                        "min_ns": t.min.as_nanos() as u64,
                        "median_ns": t.median.as_nanos() as u64,
                        "mean_ns": t.mean.as_nanos() as u64,
                    })
                })
                .collect();
            out!(
                "{}",
                json!({ "kind": kind.as_str(), "lambda": lambda, "repetitions": repetitions, "equal": true, "timings": rows })
            );
        }
    }
    Ok(())
}
