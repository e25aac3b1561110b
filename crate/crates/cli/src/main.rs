//! Command line surface for the boundary-weight calculus.
//!
//! Exit codes: 0 success / verification pass, 1 verification failure,
//! 2 usage error (including malformed characters), 3 budget guard.

use picard_weights_cli::{ledger, output, verify};

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use picard_weights::{
    boundary_profile, classify, compare_degree, enumerate, kostant_cohomology, kuga_sato_profile,
    oracle_decompose, parse_character, EnumerationSpec, Error, TorusCharacter,
    DEFAULT_SUBSET_BUDGET,
};

use output::{
    render_json, CellOut, ClassifyOut, ConstituentOut, DecompositionOut, DegenerationOut,
    DegenerationRowOut, KostantOut, ProfileOut,
};

const THREADS_ENV: &str = "PICARD_WEIGHTS_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Closed,
    Brute,
    Both,
}

#[derive(Parser)]
#[command(
    name = "picard-weights",
    about = "Exact boundary-cohomology weight calculus over the GL(3)^g x GL(1) character lattice",
    version
)]
struct Cli {
    /// Worker threads; overrides PICARD_WEIGHTS_THREADS (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Guard on binomial(6gr, p) basis subsets for the peeling oracle
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_BUDGET)]
    subset_budget: u128,
    /// Output format (JSON is authoritative; TSV drops witnesses)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Known-discrepancy ledger file (default: the embedded checked-in copy)
    #[arg(long, global = true)]
    ledger: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the dominant constituent highest weights of Lambda^p((V*)^r)
    Enumerate {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: i64,
    },
    /// Decompose Lambda^p((V*)^r) with multiplicities via the peeling oracle
    Oracle {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        p: i64,
    },
    /// Unipotent cohomology characters of a dominant highest weight
    Kostant {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        lambda: String,
        /// Single cohomological degree (all of 0..=3g when omitted)
        #[arg(long)]
        q: Option<usize>,
    },
    /// Boundary cohomology weight profile of a dominant highest weight
    Profile {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        lambda: String,
        /// Shift degrees by the exterior degree p of lambda
        #[arg(long)]
        kuga_sato: bool,
    },
    /// Interior-motive decision for a character against (g, r)
    Classify {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Closed-form and brute-force degeneration weight sets
    Degeneration {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        r: usize,
        /// Single exterior degree (the full 0..=6rg matrix when omitted)
        #[arg(long)]
        p: Option<i64>,
        /// Single boundary degree (all of 0..=4g-1 when omitted)
        #[arg(long)]
        k: Option<i64>,
        #[arg(long, value_enum, default_value_t = Source::Both)]
        source: Source,
    },
    /// Run a verification suite and report pass/fail per criterion
    Verify {
        /// Restrict the suite to one g (default: the suite's own grid)
        #[arg(long, requires = "r")]
        g: Option<usize>,
        /// Restrict the suite to one r
        #[arg(long, requires = "g")]
        r: Option<usize>,
        #[arg(long)]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.exit)
        }
    }
}

struct Failure {
    exit: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            exit: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = match e {
            Error::EnumerationBudget { .. } | Error::SubsetBudget { .. } => 3,
            _ => 2,
        };
        Failure {
            exit,
            message: e.to_string(),
        }
    }
}

fn positive(name: &str, value: usize) -> Result<(), Failure> {
    if value == 0 {
        return Err(Failure::usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn parse_lambda(text: &str, g: usize) -> Result<TorusCharacter, Failure> {
    positive("g", g)?;
    parse_character(text, g).map_err(Failure::from)
}

fn effective_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var(THREADS_ENV).ok().and_then(|v| v.parse().ok()))
        .filter(|&t| t >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    if cli.threads == Some(0) {
        return Err(Failure::usage("--threads must be at least 1"));
    }
    let threads = effective_threads(cli.threads);
    match cli.command {
        Command::Enumerate { g, r, p } => {
            positive("g", g)?;
            positive("r", r)?;
            let set = enumerate(&EnumerationSpec::new(g, r, p));
            let out = DecompositionOut {
                g,
                r,
                p,
                constituents: set
                    .characters
                    .iter()
                    .map(|c| ConstituentOut {
                        character: c.to_string(),
                        multiplicity: 1,
                    })
                    .collect(),
            };
            emit(cli.format, &out, DecompositionOut::to_tsv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { g, r, p } => {
            positive("g", g)?;
            positive("r", r)?;
            let dec = oracle_decompose(&EnumerationSpec::new(g, r, p), cli.subset_budget)?;
            let out = DecompositionOut {
                g,
                r,
                p,
                constituents: dec
                    .constituents
                    .iter()
                    .map(|(c, mult)| ConstituentOut {
                        character: c.to_string(),
                        multiplicity: *mult,
                    })
                    .collect(),
            };
            emit(cli.format, &out, DecompositionOut::to_tsv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Kostant { g, lambda, q } => {
            let lambda = parse_lambda(&lambda, g)?;
            let degrees = match q {
                Some(q) => vec![q],
                None => (0..=3 * g).collect(),
            };
            let mut out = KostantOut {
                lambda: lambda.to_string(),
                g,
                degrees: Default::default(),
            };
            for q in degrees {
                let mut classes: Vec<String> = kostant_cohomology(&lambda, q)?
                    .iter()
                    .map(|c| c.to_string())
                    .collect();
                classes.sort_unstable();
                out.degrees.insert(q, classes);
            }
            emit(cli.format, &out, KostantOut::to_tsv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Profile {
            g,
            lambda,
            kuga_sato,
        } => {
            let lambda = parse_lambda(&lambda, g)?;
            let profile = if kuga_sato {
                kuga_sato_profile(&lambda)?
            } else {
                boundary_profile(&lambda)?
            };
            let out = ProfileOut::new(&lambda, &profile);
            emit(cli.format, &out, ProfileOut::to_tsv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { g, r, lambda } => {
            positive("r", r)?;
            let lambda = parse_lambda(&lambda, g)?;
            let classification = classify(&lambda, r);
            let out = ClassifyOut::new(&lambda, r, &classification);
            emit(cli.format, &out, ClassifyOut::to_tsv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Degeneration { g, r, p, k, source } => {
            positive("g", g)?;
            positive("r", r)?;
            if let Some(k) = k {
                let max = 4 * g as i64 - 1;
                if !(0..=max).contains(&k) {
                    return Err(Failure::usage(format!("--k must be within 0..={max}")));
                }
            }
            let ps: Vec<i64> = match p {
                Some(p) => vec![p],
                None => (0..=6 * (g as i64) * (r as i64)).collect(),
            };
            let mut rows = Vec::with_capacity(ps.len());
            for p in ps {
                let cells = compare_degree(g, r, p)?;
                let selected = cells.iter().filter(|cell| k.is_none_or(|k| cell.k == k));
                rows.push(DegenerationRowOut {
                    p,
                    cells: selected
                        .map(|cell| {
                            let mut view = CellOut::both(cell);
                            match source {
                                Source::Both => {}
                                Source::Closed => {
                                    view.brute_force = None;
                                    view.matches = None;
                                    view.discrepancies = None;
                                }
                                Source::Brute => {
                                    view.closed_form = None;
                                    view.matches = None;
                                    view.discrepancies = None;
                                }
                            }
                            view
                        })
                        .collect(),
                });
            }
            let out = DegenerationOut { g, r, rows };
            emit(cli.format, &out, DegenerationOut::to_tsv);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { g, r, suite } => {
            if !verify::SUITES.contains(&suite.as_str()) {
                return Err(Failure::usage(format!(
                    "unknown suite `{suite}` (expected one of {})",
                    verify::SUITES.join(", ")
                )));
            }
            let grid = match (g, r) {
                (Some(g), Some(r)) => {
                    positive("g", g)?;
                    positive("r", r)?;
                    Some((g, r))
                }
                _ => None,
            };
            let ledger = ledger::load_ledger(cli.ledger.as_deref()).map_err(Failure::usage)?;
            let ctx = verify::VerifyContext {
                threads,
                subset_budget: cli.subset_budget,
                ledger,
            };
            let report = verify::run_suite(&suite, grid, &ctx);
            let passed = report.passed;
            emit(cli.format, &report, output::SuiteOut::to_tsv);
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn emit<T: serde::Serialize>(format: Format, value: &T, tsv: impl Fn(&T) -> String) {
    match format {
        Format::Json => print!("{}", render_json(value)),
        Format::Tsv => print!("{}", tsv(value)),
    }
}
