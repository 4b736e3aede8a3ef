mod bench;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;
use vanish_core::gen::random_points_text;
use vanish_core::io::{parse_points, render_text, ResultJson};
use vanish_core::{
    bm_run, check_newton, check_reduced_gb, check_vanishing, gpbm_run, spbm_run, verify_result, BmResult, Field,
    FieldSpec, PointSet, TermOrder, VerifyReport,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] vanish_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed result file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Bm,
    Spbm,
    Gpbm,
    Auto,
}

impl Algo {
    /// `auto` is spbm for lex and inlex, gpbm otherwise; spbm needs lex or inlex.
    pub fn resolve(self, order: TermOrder) -> Result<Algo, CliError> {
        match (self, order) {
            (Algo::Auto, TermOrder::Tdinlex) => Ok(Algo::Gpbm),
            (Algo::Auto, _) => Ok(Algo::Spbm),
            (Algo::Spbm, TermOrder::Tdinlex) => Err(CliError::Usage("spbm supports only lex and inlex".into())),
            (a, _) => Ok(a),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algo::Bm => "bm",
            Algo::Spbm => "spbm",
            Algo::Gpbm => "gpbm",
            Algo::Auto => "auto",
        }
    }

    pub fn run<F: Field>(self, ps: &PointSet<F>, order: TermOrder) -> vanish_core::Result<BmResult<F>> {
        match self {
            Algo::Bm => bm_run(ps, order),
            Algo::Spbm => spbm_run(ps, order),
            Algo::Gpbm | Algo::Auto => gpbm_run(ps, order),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "vanish", version, about = "Vanishing ideals of bivariate point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute G, N and Q for a point file and verify the result.
    Compute {
        /// `q:<prime>` or `rational`
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        order: TermOrder,
        #[arg(long, value_enum, default_value = "auto")]
        algo: Algo,
        /// File of `x,y` lines
        #[arg(long)]
        points: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        out: OutFormat,
    },
    /// Write distinct random points, reproducible from the seed.
    Gen {
        #[arg(long)]
        field: FieldSpec,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout if omitted
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time algorithms on random point sets and write CSV records.
    Bench(bench::BenchArgs),
    /// Re-check a stored JSON result against its point file.
    Verify {
        #[arg(long)]
        result: PathBuf,
        #[arg(long)]
        points: PathBuf,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        }),
        None => io::stdout().write_all(text.as_bytes()).map_err(|source| CliError::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn compute<F: Field>(field: &F, text: &str, order: TermOrder, algo: Algo, out: OutFormat) -> Result<(), CliError> {
    let algo = algo.resolve(order)?;
    let ps = parse_points(field, text)?;
    let r = algo.run(&ps, order)?;
    let report = verify_result(&r, &ps)?;
    match out {
        OutFormat::Json => {
            let json = serde_json::to_string(&ResultJson::from_result(&r, algo.name()))?;
            write_output(None, &format!("{json}\n"))?;
            eprintln!("{report}");
        }
        OutFormat::Text => write_output(None, &format!("{}{report}\n", render_text(&r)))?,
    }
    if report.passed {
        Ok(())
    } else {
        Err(CliError::VerifyFailed)
    }
}

fn verify_stored<F: Field>(field: &F, stored: &ResultJson, text: &str) -> Result<VerifyReport, CliError> {
    let ps = parse_points(field, text)?;
    let order = stored.term_order()?;
    let g = stored.g_polys(field)?;
    let q = stored.q_polys(field)?;
    let n = stored.n_exponents();
    let mut report = check_vanishing(&g, &ps).merge(check_reduced_gb(&g, &n, order, ps.len()));
    let pts: Option<Vec<_>> = stored.point_permutation.iter().map(|&k| ps.points().get(k).cloned()).collect();
    match pts {
        Some(pts) if pts.len() == q.len() => report = report.merge(check_newton(&q, &pts)?),
        _ => report.push("Q is triangular on the ordered points", Some("pointPermutation does not match Q".into())),
    }
    Ok(report)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Compute {
            field,
            order,
            algo,
            points,
            out,
        } => {
            let text = read(&points)?;
            match field {
                FieldSpec::Prime(f) => compute(&f, &text, order, algo, out),
                FieldSpec::Rational => compute(&vanish_core::Rationals, &text, order, algo, out),
            }
        }
        Command::Gen { field, n, seed, output } => write_output(output.as_deref(), &random_points_text(&field, n, seed)?),
        Command::Bench(args) => bench::run(&args),
        Command::Verify { result, points } => {
            let stored: ResultJson = serde_json::from_str(&read(&result)?)?;
            let text = read(&points)?;
            let report = match stored.field.parse::<FieldSpec>()? {
                FieldSpec::Prime(f) => verify_stored(&f, &stored, &text)?,
                FieldSpec::Rational => verify_stored(&vanish_core::Rationals, &stored, &text)?,
            };
            println!("{report}");
            if report.passed {
                Ok(())
            } else {
                Err(CliError::VerifyFailed)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("vanish: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
