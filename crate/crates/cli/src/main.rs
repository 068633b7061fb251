//! `hamtour`: counting, bounds, convergence tables and Monte Carlo checks
//! for Hamilton cycles in tournaments.
//!
//! Exit codes: 0 success, 1 validation error, 2 cap exceeded, 3 self-test
//! failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hamtour::exact::{
    brute_force_cycles, count_hamilton_cycles_with, count_hamilton_paths_with, path_cover_profile_with, Caps,
    BRUTE_CYCLES_MAX,
};
use hamtour::experiments::{
    convergence, monte_carlo, sample_seed, selftest, write_convergence_csv, ConvergenceTarget, MonteCarloKind,
    SelftestOptions,
};
use hamtour::formula::{hamilton_count_triangular_with, lower_bound};
use hamtour::tournament::{compose_c3, make_random, make_transitive, read_trn};
use hamtour::{BigCount, Error};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "hamtour", version, about = "Hamilton cycles in tournaments: exact counts, bounds and asymptotics")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Size cap for the exact dynamic programs (overrides both defaults: 24 for
    /// paths/cycles, 20 for path covers).
    #[arg(long, global = true)]
    cap: Option<usize>,

    /// Output format. Defaults to csv for `convergence`, json elsewhere.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Count Hamilton cycles, Hamilton paths or k-path covers of a `.trn` file.
    Count { path: PathBuf, what: What },
    /// Hamilton cycles of C3(T1, T2, T3) against the Stirling lower bound.
    Triangular {
        m1: usize,
        m2: usize,
        m3: usize,
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the composed tournament (`.trn`) with a block-size sidecar.
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Exact-vs-asymptotic convergence table.
    Convergence {
        target: Target,
        /// Sizes, comma separated (`n` for internal-free, `m` otherwise).
        #[arg(value_delimiter = ',', num_args = 1.., required = true)]
        sizes: Vec<usize>,
    },
    /// Seeded Monte Carlo estimate of an expected Hamilton path/cycle count.
    Montecarlo {
        kind: Kind,
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exhaustive small-case oracle suite.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_corruption: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Cycles,
    Paths,
    Covers,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Mode {
    Transitive,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Wilf,
    Corollary,
    Integral,
    InternalFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    SzelePaths,
    SzeleCycles,
    Wormald,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } | Error::Overflow => 2,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

#[derive(Serialize)]
struct CountOut {
    n: usize,
    count: String,
}

#[derive(Serialize)]
struct CoversOut {
    n: usize,
    counts: Vec<String>,
}

#[derive(Serialize)]
struct CrossCheck {
    method: &'static str,
    agrees: bool,
}

#[derive(Serialize)]
struct TriangularOut {
    m1: usize,
    m2: usize,
    m3: usize,
    mode: Mode,
    seed: Option<u64>,
    count: String,
    lower_bound: String,
    difference: String,
    equal: bool,
    cross_check: Option<CrossCheck>,
}

/// Largest composed size cross-checked by the direct cycle DP.
const DP_CROSS_CHECK_MAX: usize = 20;

fn json(value: &impl Serialize) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn json_only(format: Option<Format>) -> Result<(), Failure> {
    match format {
        Some(Format::Csv) => Err(invalid("this command only produces json")),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let caps = cli.cap.map(Caps::uniform).unwrap_or_default();
    match cli.command {
        Command::Count { path, what } => {
            json_only(cli.format)?;
            let t = read_trn(&path)?;
            let n = t.n();
            Ok(match what {
                What::Cycles => json(&CountOut {
                    n,
                    count: count_hamilton_cycles_with::<BigCount>(&t, &caps)?.to_string(),
                }),
                What::Paths => json(&CountOut {
                    n,
                    count: count_hamilton_paths_with::<BigCount>(&t, &caps)?.to_string(),
                }),
                What::Covers => json(&CoversOut {
                    n,
                    counts: path_cover_profile_with::<BigCount>(&t, &caps)?
                        .counts()
                        .iter()
                        .map(ToString::to_string)
                        .collect(),
                }),
            })
        }
        Command::Triangular {
            m1,
            m2,
            m3,
            mode,
            seed,
            export,
        } => {
            json_only(cli.format)?;
            let sizes = [m1, m2, m3];
            let mut parts = Vec::with_capacity(3);
            for (j, &m) in sizes.iter().enumerate() {
                parts.push(match mode {
                    Mode::Transitive => make_transitive(m)?,
                    Mode::Random => make_random(m, sample_seed(seed, j as u64))?,
                });
            }
            let count: BigCount = hamilton_count_triangular_with(&parts[0], &parts[1], &parts[2], &caps)?;
            let bound = lower_bound(m1, m2, m3)?;
            let composition = compose_c3(&parts[0], &parts[1], &parts[2])?;
            if let Some(path) = export {
                composition.export(path)?;
            }
            let composed = composition.composed();
            let cross_check = if composed.n() <= BRUTE_CYCLES_MAX {
                Some(CrossCheck {
                    method: "brute-force",
                    agrees: brute_force_cycles(composed)? == count,
                })
            } else if composed.n() <= caps.paths.min(DP_CROSS_CHECK_MAX) {
                Some(CrossCheck {
                    method: "dp",
                    agrees: count_hamilton_cycles_with::<BigCount>(composed, &caps)? == count,
                })
            } else {
                None
            };
            Ok(json(&TriangularOut {
                m1,
                m2,
                m3,
                mode,
                seed: matches!(mode, Mode::Random).then_some(seed),
                difference: (&count - &bound).to_string(),
                equal: count == bound,
                count: count.to_string(),
                lower_bound: bound.to_string(),
                cross_check,
            }))
        }
        Command::Convergence { target, sizes } => {
            let target = match target {
                Target::Wilf => ConvergenceTarget::Wilf,
                Target::Corollary => ConvergenceTarget::Corollary,
                Target::Integral => ConvergenceTarget::Integral,
                Target::InternalFree => ConvergenceTarget::InternalFree,
            };
            let rows = convergence(target, &sizes)?;
            match cli.format.unwrap_or(Format::Csv) {
                Format::Json => Ok(json(&rows)),
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_convergence_csv(&rows, &mut buf).expect("write to memory");
                    Ok(String::from_utf8(buf).expect("ascii"))
                }
            }
        }
        Command::Montecarlo { kind, n, samples, seed } => {
            json_only(cli.format)?;
            let kind = match kind {
                Kind::SzelePaths => MonteCarloKind::SzelePaths,
                Kind::SzeleCycles => MonteCarloKind::SzeleCycles,
                Kind::Wormald => MonteCarloKind::Wormald,
            };
            Ok(json(&monte_carlo(kind, n, samples, seed, &caps)?))
        }
        Command::Selftest {
            seed,
            inject_corruption,
        } => {
            json_only(cli.format)?;
            let report = selftest(SelftestOptions {
                seed,
                inject_corruption,
            });
            let mut text = String::new();
            for p in &report.properties {
                let status = if p.passed { "PASS" } else { "FAIL" };
                text.push_str(&format!("{status} {} ({} checked)\n", p.name, p.checked));
                if let Some(why) = &p.failure {
                    text.push_str(&format!("     {why}\n"));
                }
            }
            if report.passed() {
                Ok(text)
            } else {
                Err(Failure {
                    code: 3,
                    message: text.trim_end().to_string(),
                })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.out.clone();
    match run(cli) {
        Ok(text) => {
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}
