//! Command-line surface: compute poset polynomials, multiply in the shuffle,
//! DAB and Dyck algebras, run stability checks, and drive the verification
//! suites.
//!
//! Exit codes: 0 success, 1 verification failures, 2 stability refuted,
//! 64 usage error, 65 malformed input.

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use peulerian_core::polyring::{parse_poly, Poly, UnivariatePoly};
use peulerian_core::poset::{LabeledPoset, PosetJson};
use peulerian_core::stability::{self, Region, StabilityVerdict};
use peulerian_core::{dyck, eulerian, fqsym, verify, Permutation};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_SUITE_FAILED: u8 = 1;
const EXIT_REFUTED: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(
    name = "peulerian",
    about = "Multivariate poset Eulerian polynomials, Dyck-path algebras, and stability checks",
    version
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for enumeration and sampling (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the linear extensions of a poset (lexicographic).
    Extensions(PosetArg),
    /// Multivariate Eulerian polynomial A_P(z).
    Eulerian(PosetArg),
    /// Univariate Eulerian polynomial A_P(x).
    EulerianUni(PosetArg),
    /// Descent-bottom Eulerian polynomial (unprimed variables only).
    DbEulerian(PosetArg),
    /// Multivariate peak polynomial.
    Peak(PosetArg),
    /// Univariate peak polynomial.
    PeakUni(PosetArg),
    /// Shuffle product of two permutations, e.g. `shuffle 132 21`.
    Shuffle { left: String, right: String },
    /// Product in the descent/ascent-bottom algebra, grades inferred from degree.
    DabMul { left: String, right: String },
    /// Bullet product of two coded Dyck words, e.g. `dyck-mul uudu uuud`.
    DyckMul { left: String, right: String },
    /// All coded Dyck words of the given semilength.
    DyckEnum { n: usize },
    /// Code a basis monomial as a Dyck word (or decode with --inverse).
    Theta {
        arg: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Exact real-rootedness of a univariate polynomial (file or inline).
    CheckRealrooted { poly: String },
    /// Stability semi-decision for a multivariate polynomial.
    CheckStable {
        poly: String,
        #[arg(long, default_value = "upper")]
        region: String,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct PosetArg {
    /// Poset as inline JSON `{"n":4,"covers":[[1,2],[3,2],[3,4]]}` or a file path.
    poset: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: shudif, fori, dyck-iso, catalan-dim, dual, union-relabel,
    /// oplus, peak-psi, malo, symbol, forests.
    suite: String,
    /// Size cap where the suite takes one (e.g. `--max 7` for shudif).
    #[arg(long)]
    max: Option<usize>,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Sampling budget for the stability sweeps.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are successful exits
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(EXIT_USAGE);
            }
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
    };
    #[cfg(feature = "parallel")]
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("warning: could not size thread pool: {e}");
        }
    }
    #[cfg(not(feature = "parallel"))]
    if cli.threads.is_some() {
        eprintln!("warning: built without the `parallel` feature; --threads ignored");
    }

    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_DATA)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Extensions(arg) => {
            let p = read_poset(&arg.poset)?;
            let exts = p.linear_extensions();
            if cli.json {
                let words: Vec<Vec<u8>> =
                    exts.iter().map(|e| e.word().to_vec()).collect();
                println!("{}", serde_json::to_string(&words)?);
            } else {
                for e in exts {
                    println!("{e}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Eulerian(arg) => {
            emit_poly(cli, eulerian::multivariate_eulerian(&read_poset(&arg.poset)?))
        }
        Command::EulerianUni(arg) => emit_uni(
            cli,
            eulerian::univariate_eulerian(&read_poset(&arg.poset)?),
        ),
        Command::DbEulerian(arg) => {
            emit_poly(cli, eulerian::db_eulerian(&read_poset(&arg.poset)?))
        }
        Command::Peak(arg) => {
            emit_poly(cli, eulerian::multivariate_peak(&read_poset(&arg.poset)?))
        }
        Command::PeakUni(arg) => {
            emit_uni(cli, eulerian::univariate_peak(&read_poset(&arg.poset)?))
        }
        Command::Shuffle { left, right } => {
            let l = Permutation::parse(left)?;
            let r = Permutation::parse(right)?;
            let sh = fqsym::shuffle(&l, &r);
            if cli.json {
                let terms: Vec<(Vec<u8>, i64)> = sh
                    .iter()
                    .map(|(p, &c)| (p.word().to_vec(), c))
                    .collect();
                println!("{}", serde_json::to_string(&terms)?);
            } else {
                let parts: Vec<String> = sh
                    .iter()
                    .map(|(p, &c)| if c == 1 { p.to_string() } else { format!("{c}*{p}") })
                    .collect();
                println!("{}", parts.join(" + "));
            }
            Ok(EXIT_OK)
        }
        Command::DabMul { left, right } => {
            let l = read_poly(left)?;
            let r = read_poly(right)?;
            let grade = |p: &Poly| -> anyhow::Result<usize> {
                match p.homogeneous_degree() {
                    Some(0) => Ok(0),
                    Some(d) => Ok(d - 1),
                    None => Err(anyhow!("operand is not homogeneous; grade is ambiguous")),
                }
            };
            let prod = fqsym::dab_product(&l, grade(&l)?, &r, grade(&r)?)?;
            emit_poly(cli, prod)
        }
        Command::DyckMul { left, right } => {
            let l = dyck::DyckWord::from_letters(left)?;
            let r = dyck::DyckWord::from_letters(right)?;
            for (w, label) in [(&l, "left"), (&r, "right")] {
                if !w.is_valid_code() {
                    return Err(anyhow!("{label} operand {w} is not a valid coded word"));
                }
            }
            let prod = dyck::bullet(&l, &r);
            if cli.json {
                let terms: Vec<(String, i64)> =
                    prod.iter().map(|(w, &c)| (w.to_string(), c)).collect();
                println!("{}", serde_json::to_string(&terms)?);
            } else {
                let parts: Vec<String> = prod
                    .iter()
                    .map(|(w, &c)| if c == 1 { w.to_string() } else { format!("{c}*{w}") })
                    .collect();
                println!("{}", parts.join(" + "));
            }
            Ok(EXIT_OK)
        }
        Command::DyckEnum { n } => {
            let words = dyck::enumerate_dyck(*n);
            if cli.json {
                let strs: Vec<String> = words.iter().map(|w| w.to_string()).collect();
                println!("{}", serde_json::to_string(&strs)?);
            } else {
                for w in words {
                    println!("{w}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Theta { arg, inverse } => {
            if *inverse {
                let w = dyck::DyckWord::from_letters(arg)?;
                let mono = dyck::theta_inverse(&w)?;
                println!("{mono}");
            } else {
                let p = read_poly(arg)?;
                let (mono, _) = p
                    .iter()
                    .next()
                    .ok_or_else(|| anyhow!("empty polynomial"))?;
                if p.num_terms() != 1 {
                    return Err(anyhow!("theta expects a single monomial"));
                }
                let n = mono.degree().checked_sub(1).ok_or_else(|| {
                    anyhow!("basis monomials have degree n+1 >= 2")
                })?;
                println!("{}", dyck::theta(mono, n)?);
            }
            Ok(EXIT_OK)
        }
        Command::CheckRealrooted { poly } => {
            let p = read_poly(poly)?;
            let uni = UnivariatePoly::from_poly(&p).context("input must be univariate")?;
            let real = stability::is_real_rooted(&uni)?;
            println!(
                "{}",
                serde_json::json!({
                    "real_rooted": real,
                    "degree": uni.degree(),
                    "polynomial": uni.to_string(),
                })
            );
            Ok(if real { EXIT_OK } else { EXIT_REFUTED })
        }
        Command::CheckStable {
            poly,
            region,
            budget,
            seed,
        } => {
            let p = read_poly(poly)?;
            let region = match region.as_str() {
                "upper" => Region::UpperHalfPlane,
                "right" => Region::RightHalfPlane,
                other => return Err(anyhow!("unknown region {other:?}; use upper or right")),
            };
            let verdict = stability::check_stable(&p, region, *budget, *seed);
            println!("{}", serde_json::to_string(&verdict)?);
            Ok(match verdict {
                StabilityVerdict::Refuted { .. } => EXIT_REFUTED,
                _ => EXIT_OK,
            })
        }
        Command::Verify(args) => {
            let report = verify::run_suite(&args.suite, args.max, args.seed, args.budget)?;
            if cli.json {
                println!("{}", serde_json::to_string(&report)?);
            } else {
                println!(
                    "suite {}: {} cases, {} failures ({} ms)",
                    report.suite,
                    report.cases,
                    report.failures.len(),
                    report.wall_ms
                );
                for f in &report.failures {
                    println!("  FAIL {}", f.case);
                    if !f.lhs.is_empty() || !f.rhs.is_empty() {
                        println!("       lhs: {}", f.lhs);
                        println!("       rhs: {}", f.rhs);
                    }
                }
            }
            Ok(if report.passed() {
                EXIT_OK
            } else {
                EXIT_SUITE_FAILED
            })
        }
    }
}

fn read_raw(arg: &str) -> anyhow::Result<String> {
    let trimmed = arg.trim();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(trimmed.to_string());
    }
    // a bare expression (contains polynomial syntax) is used inline;
    // otherwise treat as a path
    if std::path::Path::new(trimmed).exists() {
        return std::fs::read_to_string(trimmed)
            .with_context(|| format!("reading {trimmed}"));
    }
    Ok(trimmed.to_string())
}

fn read_poset(arg: &str) -> anyhow::Result<LabeledPoset> {
    let raw = read_raw(arg)?;
    let json: PosetJson = serde_json::from_str(raw.trim())
        .with_context(|| "poset must be JSON like {\"n\":4,\"covers\":[[1,2]]}")?;
    Ok(LabeledPoset::from_json(&json)?)
}

fn read_poly(arg: &str) -> anyhow::Result<Poly> {
    let raw = read_raw(arg)?;
    let trimmed = raw.trim();
    if trimmed.starts_with('{') {
        let json: peulerian_core::polyring::PolyJson = serde_json::from_str(trimmed)?;
        Ok(Poly::from_json(&json)?)
    } else {
        Ok(parse_poly(trimmed)?)
    }
}

fn emit_poly(cli: &Cli, p: Poly) -> anyhow::Result<u8> {
    if cli.json {
        println!("{}", serde_json::to_string(&p.to_json())?);
    } else {
        println!("{p}");
    }
    Ok(EXIT_OK)
}

fn emit_uni(cli: &Cli, p: UnivariatePoly) -> anyhow::Result<u8> {
    if cli.json {
        println!(
            "{}",
            serde_json::to_string(&p.to_poly(peulerian_core::VarId::X).to_json())?
        );
    } else {
        println!("{p}");
    }
    Ok(EXIT_OK)
}
