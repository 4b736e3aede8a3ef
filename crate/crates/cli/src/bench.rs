//! The `bench` subcommand: one CSV record per (algorithm, size, repetition).

use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use serde::Serialize;
use vanish_core::gen::{random_points_prime, random_points_rational};
use vanish_core::{Field, FieldSpec, PointSet, TermOrder};

use crate::{write_output, Algo, CliError};

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long)]
    field: FieldSpec,
    #[arg(long)]
    order: TermOrder,
    /// Comma-separated point counts
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    reps: usize,
    /// Comma-separated algorithms; `auto` is resolved against the order
    #[arg(long, value_delimiter = ',', value_enum, default_value = "bm,auto")]
    algos: Vec<Algo>,
    /// Repetition `r` draws its points with seed `seed + r`
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output; stdout if omitted
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRecord {
    pub algorithm: &'static str,
    pub field: String,
    pub order: &'static str,
    pub size: usize,
    pub repetition: usize,
    pub wall_nanos: u128,
    /// `#Ξ′ / #Ξ` for seeded runs.
    pub mcs_ratio: Option<f64>,
}

fn time_cell<F: Field>(
    ps: &PointSet<F>,
    algos: &[Algo],
    args: &BenchArgs,
    rep: usize,
    out: &mut Vec<BenchRecord>,
) -> Result<(), CliError> {
    for &algo in algos {
        let start = Instant::now();
        let r = algo.run(ps, args.order)?;
        let wall_nanos = start.elapsed().as_nanos();
        out.push(BenchRecord {
            algorithm: algo.name(),
            field: args.field.to_string(),
            order: args.order.name(),
            size: ps.len(),
            repetition: rep,
            wall_nanos,
            mcs_ratio: (algo != Algo::Bm).then(|| r.seeded as f64 / ps.len() as f64),
        });
    }
    Ok(())
}

fn median(mut v: Vec<u128>) -> u128 {
    v.sort_unstable();
    v[v.len() / 2]
}

pub fn run(args: &BenchArgs) -> Result<(), CliError> {
    if args.reps == 0 {
        return Err(CliError::Usage("--reps must be at least 1".into()));
    }
    let mut algos: Vec<Algo> = Vec::new();
    for a in &args.algos {
        let a = a.resolve(args.order)?;
        if !algos.contains(&a) {
            algos.push(a);
        }
    }
    let mut records = Vec::new();
    for &size in &args.sizes {
        for rep in 0..args.reps {
            let seed = args.seed.wrapping_add(rep as u64);
            match &args.field {
                FieldSpec::Prime(f) => time_cell(&random_points_prime(f, size, seed)?, &algos, args, rep, &mut records)?,
                FieldSpec::Rational => time_cell(&random_points_rational(size, seed)?, &algos, args, rep, &mut records)?,
            }
        }
    }
    let rank = |name: &str| algos.iter().position(|a| a.name() == name);
    records.sort_by_key(|r| (rank(r.algorithm), r.size, r.repetition));

    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &records {
        w.serialize(r)?;
    }
    let mut text = String::from_utf8(w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?)
        .expect("csv output is UTF-8");
    text.push_str(&summary(&records, &algos, &args.sizes));
    write_output(args.output.as_deref(), &text)
}

/// `# median ...` lines: per-cell medians, then speedups over the first algorithm.
fn summary(records: &[BenchRecord], algos: &[Algo], sizes: &[usize]) -> String {
    let med = |a: Algo, size: usize| {
        median(records.iter().filter(|r| r.algorithm == a.name() && r.size == size).map(|r| r.wall_nanos).collect())
    };
    let mut out = String::new();
    let mut seen = Vec::new();
    for &size in sizes {
        if seen.contains(&size) {
            continue;
        }
        seen.push(size);
        for &a in algos {
            out.push_str(&format!("# median {} size={size}: {:.3} ms\n", a.name(), med(a, size) as f64 / 1e6));
        }
        let base = algos[0];
        for &a in &algos[1..] {
            let ratio = med(base, size) as f64 / med(a, size).max(1) as f64;
            out.push_str(&format!("# median speedup {}/{} size={size}: {ratio:.2}x\n", base.name(), a.name()));
        }
    }
    out
}
