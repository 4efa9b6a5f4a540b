//! Command-line front end: analyze a generator polynomial, inspect
//! submonoids, compute invariant lower-bound schedules, and replay the
//! built-in verification fixtures.

mod fixtures;

use clap::{Args, Parser, Subcommand};
use monadica::error::Error;
use monadica::invariants::theorem68_schedule;
use monadica::monoid::membership;
use monadica::pipeline::{analyze_parsed, FullAnalysis, PipelineOptions};
use monadica::report::{self, Report};
use monadica::submonoid::{analyze_submonoid, monadic_submonoid};
use monadica::zpoly::parse::parse_poly;

#[derive(Parser)]
#[command(name = "monadica", version, about = "Divisor theory of monadic submonoids of Int(Z)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Emit human-readable tables instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Emit JSON (the default).
    #[arg(long)]
    json: bool,
    /// Manual atom degree bound; disables the completeness certificate.
    #[arg(long, value_name = "N")]
    atom_degree_bound: Option<u32>,
    /// Residue-class search depth cap for the profile computation.
    #[arg(long, value_name = "N", default_value_t = 64)]
    depth_cap: u32,
}

impl CommonOpts {
    fn pipeline(&self) -> PipelineOptions {
        PipelineOptions {
            depth_cap: self.depth_cap,
            atom_degree_bound: self.atom_degree_bound,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: factors, profiles, atoms, primes, class group.
    Analyze {
        /// Generator polynomial, e.g. "(X(X-1)^2(X-2))/12".
        poly: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Analyze the monadic submonoid of [[ambient]] generated by an element.
    Submonoid {
        ambient: String,
        generator: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Context and valuation profiles only.
    Profiles {
        poly: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Context and atom set only.
    Atoms {
        poly: String,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Lower-bound schedules for elasticity and tame degree.
    Invariants {
        /// Family to instantiate (currently: theorem68).
        #[arg(long, default_value = "theorem68")]
        family: String,
        /// Largest schedule index.
        #[arg(long, default_value_t = 3)]
        max_i: u32,
        /// Length cap for the zero-sum search.
        #[arg(long, default_value_t = 12)]
        davenport_cap: u32,
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Replay the built-in verification fixtures.
    VerifyPaper {
        /// Run only fixtures whose name contains this substring.
        #[arg(long)]
        only: Option<String>,
        /// Corrupt one expectation to prove the harness detects failures.
        #[arg(long, hide = true)]
        corrupt: bool,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::InvalidInput(_) | Error::NotIntegerValued(_) => 2,
        Error::FactorizationFailed(_) => 3,
        Error::AtomBoundExceeded { .. } => 4,
        Error::NotMember(_) => 5,
        _ => 1,
    }
}

fn emit(report: &Report, pretty: bool) {
    if pretty {
        print!("{}", report::pretty(report));
    } else {
        println!("{}", serde_json::to_string(report).expect("serializable report"));
    }
}

fn run_analysis(poly: &str, opts: &CommonOpts) -> Result<(Report, FullAnalysis), Error> {
    let parsed = parse_poly(poly)?;
    let analysis = analyze_parsed(&parsed, &opts.pipeline())?;
    let report = report::build_report(poly, &analysis, parsed.poly.denominator());
    Ok((report, analysis))
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err);
            std::process::exit(exit_code(&err));
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Analyze { poly, opts } => {
            let (report, _) = run_analysis(&poly, &opts)?;
            emit(&report, opts.pretty);
            Ok(0)
        }
        Command::Submonoid { ambient, generator, opts } => {
            let parsed_ambient = parse_poly(&ambient)?;
            if !parsed_ambient.poly.is_integral() {
                return Err(Error::InvalidInput(
                    "the ambient polynomial must have integer coefficients".into(),
                ));
            }
            let (_, analysis) = run_analysis(&ambient, &opts)?;
            let parsed_gen = parse_poly(&generator)?;
            let element = membership(&analysis.ambient.ctx, &parsed_gen.poly)?
                .ok_or_else(|| Error::NotMember(generator.clone()))?;
            let sub = monadic_submonoid(&analysis.ambient, &element);
            let sub_analysis = analyze_submonoid(&analysis.ambient, sub)?;
            let full = FullAnalysis { ambient: analysis.ambient, sub: Some(sub_analysis) };
            let mut report =
                report::build_report(&ambient, &full, parsed_ambient.poly.denominator());
            report.input = format!("{} | {}", ambient, generator);
            emit(&report, opts.pretty);
            Ok(0)
        }
        Command::Profiles { poly, opts } => {
            let (mut report, _) = run_analysis(&poly, &opts)?;
            report.atoms.list.clear();
            report.primes.clear();
            report.atom_divisors.clear();
            report.submonoid = None;
            emit(&report, opts.pretty);
            Ok(0)
        }
        Command::Atoms { poly, opts } => {
            let (mut report, _) = run_analysis(&poly, &opts)?;
            report.primes.clear();
            report.atom_divisors.clear();
            report.submonoid = None;
            emit(&report, opts.pretty);
            Ok(0)
        }
        Command::Invariants { family, max_i, davenport_cap, opts } => {
            if family != "theorem68" {
                return Err(Error::InvalidInput(format!("unknown family '{}'", family)));
            }
            let rows = theorem68_schedule(max_i, davenport_cap, &opts.pipeline())?;
            let bounds = report::bounds_report(&rows);
            if opts.pretty {
                println!("i | primes | D (exact?) | elasticity >= | tame >=");
                for b in &bounds {
                    println!(
                        "{} | {:?} | {}{} | {} | {}",
                        b.index,
                        b.primes,
                        b.davenport,
                        if b.davenport_exact { "" } else { " (lower bound)" },
                        b.elasticity_lb,
                        b.tame_lb
                    );
                }
            } else {
                println!("{}", serde_json::to_string(&bounds).expect("serializable bounds"));
            }
            Ok(0)
        }
        Command::VerifyPaper { only, corrupt } => {
            let failures = fixtures::run_all(only.as_deref(), corrupt);
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}
