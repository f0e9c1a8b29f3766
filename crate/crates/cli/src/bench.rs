//! Benchmark grids, CSV rows and their summaries.

use std::collections::HashMap;
use std::io::{Read, Write};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::workload::{generate, run, trial_seed, validate, Algo, Dim};
use crate::Result;

/// One timed run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRow {
    pub algo: Algo,
    pub dim: Dim,
    pub n: usize,
    pub m: usize,
    pub sigma: i64,
    pub trial: usize,
    pub seed: u64,
    pub time_ns: u64,
    pub comparisons: u64,
}

/// Mean over the trials of one `(algo, dim, n, m, sigma)` cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub algo: Algo,
    pub dim: Dim,
    pub n: usize,
    pub m: usize,
    pub sigma: i64,
    pub trials: usize,
    pub mean_time_ns: f64,
    pub mean_comparisons: f64,
}

/// The `(n, m)` points of a benchmark run, in output order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub points: Vec<(usize, usize)>,
}

impl Grid {
    /// Every combination of the listed text and pattern sizes.
    pub fn product(ns: &[usize], ms: &[usize]) -> Self {
        let points = ns
            .iter()
            .flat_map(|&n| ms.iter().map(move |&m| (n, m)))
            .collect();
        Grid { points }
    }

    /// A text-size sweep at fixed `m` followed by a pattern-size sweep at
    /// fixed `n`, without repeating shared points.
    pub fn sweeps(ns: &[usize], fixed_m: usize, fixed_n: usize, ms: &[usize]) -> Self {
        let mut points: Vec<(usize, usize)> = ns.iter().map(|&n| (n, fixed_m)).collect();
        for &m in ms {
            if !points.contains(&(fixed_n, m)) {
                points.push((fixed_n, m));
            }
        }
        Grid { points }
    }
}

/// Ready-made 1D grids on random texts with 1000 distinct characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    /// n from 1e5 to 1e6 at m = 10, then m from 5 to 100 at n = 1e6;
    /// 50 trials each.
    Paper,
    /// The same shape scaled to n <= 1e5 with 10 trials.
    PaperSmall,
}

impl Preset {
    pub const SIGMA: i64 = 1000;

    pub fn grid(self) -> Grid {
        match self {
            Preset::Paper => {
                let ns: Vec<usize> = (1..=10).map(|k| k * 100_000).collect();
                let ms = [5, 10, 20, 30, 40, 50, 60, 70, 80, 90, 100];
                Grid::sweeps(&ns, 10, 1_000_000, &ms)
            }
            Preset::PaperSmall => {
                let ns: Vec<usize> = (1..=10).map(|k| k * 10_000).collect();
                Grid::sweeps(&ns, 10, 100_000, &[5, 10, 20, 50, 100])
            }
        }
    }

    pub fn trials(self) -> usize {
        match self {
            Preset::Paper => 50,
            Preset::PaperSmall => 10,
        }
    }
}

/// Runs every algorithm over every grid point and trial. Rows come out
/// ordered by algorithm, grid point, then trial; all algorithms see the same
/// instances.
pub fn bench(
    algos: &[Algo],
    dim: Dim,
    grid: &Grid,
    sigma: i64,
    trials: usize,
    seed: u64,
) -> Result<Vec<BenchRow>> {
    for &(n, m) in &grid.points {
        validate(n, m, sigma, trials)?;
    }
    let mut rows = Vec::with_capacity(algos.len() * grid.points.len() * trials);
    for &algo in algos {
        for &(n, m) in &grid.points {
            for trial in 0..trials {
                let seed = trial_seed(seed, trial);
                let instance = generate(dim, n, m, sigma, seed);
                let report = run(&instance, algo)?;
                rows.push(BenchRow {
                    algo,
                    dim,
                    n,
                    m,
                    sigma,
                    trial,
                    seed,
                    time_ns: report.time_ns,
                    comparisons: report.comparisons(),
                });
            }
        }
    }
    Ok(rows)
}

fn writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn write_rows<W: Write, T: Serialize>(out: W, rows: &[T]) -> Result<()> {
    let mut w = writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_rows<R: Read>(input: R) -> Result<Vec<BenchRow>> {
    let mut r = csv::Reader::from_reader(input);
    let rows = r
        .deserialize()
        .collect::<std::result::Result<Vec<BenchRow>, _>>()?;
    Ok(rows)
}

/// Averages rows per `(algo, dim, n, m, sigma)`, keeping first-seen order.
pub fn summarize(rows: &[BenchRow]) -> Vec<SummaryRow> {
    let mut index: HashMap<(Algo, Dim, usize, usize, i64), usize> = HashMap::new();
    let mut out: Vec<SummaryRow> = Vec::new();
    let mut sums: Vec<(u128, u128)> = Vec::new();
    for r in rows {
        let key = (r.algo, r.dim, r.n, r.m, r.sigma);
        let k = *index.entry(key).or_insert_with(|| {
            out.push(SummaryRow {
                algo: r.algo,
                dim: r.dim,
                n: r.n,
                m: r.m,
                sigma: r.sigma,
                trials: 0,
                mean_time_ns: 0.0,
                mean_comparisons: 0.0,
            });
            sums.push((0, 0));
            out.len() - 1
        });
        out[k].trials += 1;
        sums[k].0 += r.time_ns as u128;
        sums[k].1 += r.comparisons as u128;
    }
    for (row, (time, cmps)) in out.iter_mut().zip(sums) {
        row.mean_time_ns = time as f64 / row.trials as f64;
        row.mean_comparisons = cmps as f64 / row.trials as f64;
    }
    out
}
