use std::fmt;
use std::time::Instant;

use clap::ValueEnum;
use oppm::oppm1d::naive_match_1d_counted;
use oppm::oppm2d::naive_match_2d_counted;
use oppm::{Counters, KmpMatcher, Matrix, Pattern1D, Pattern2D};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
pub enum Dim {
    #[value(name = "1")]
    #[serde(rename = "1")]
    One,
    #[value(name = "2")]
    #[serde(rename = "2")]
    Two,
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dim::One => "1",
            Dim::Two => "2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    /// Duel-and-sweep (1D or 2D).
    Duel,
    /// Order-preserving KMP (1D only).
    Kmp,
    /// All-pairs check of every window.
    Naive,
    /// 2D matching through serialized column strips.
    Reduction2d,
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algo::Duel => "duel",
            Algo::Kmp => "kmp",
            Algo::Naive => "naive",
            Algo::Reduction2d => "reduction2d",
        })
    }
}

impl Algo {
    pub fn supports(self, dim: Dim) -> bool {
        !matches!(
            (self, dim),
            (Algo::Kmp, Dim::Two) | (Algo::Reduction2d, Dim::One)
        )
    }
}

/// A text and a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    One { text: Vec<i64>, pattern: Vec<i64> },
    Two { text: Matrix, pattern: Matrix },
}

impl Instance {
    pub fn dim(&self) -> Dim {
        match self {
            Instance::One { .. } => Dim::One,
            Instance::Two { .. } => Dim::Two,
        }
    }

    /// Whether the pattern is larger than the text in some direction.
    pub fn pattern_too_large(&self) -> bool {
        match self {
            Instance::One { text, pattern } => pattern.len() > text.len(),
            Instance::Two { text, pattern } => {
                pattern.width() > text.width() || pattern.height() > text.height()
            }
        }
    }
}

pub fn validate(n: usize, m: usize, sigma: i64, trials: usize) -> Result<()> {
    if m == 0 {
        return Err(CliError::Workload("pattern size must be at least 1".into()));
    }
    if m > n {
        return Err(CliError::Workload(format!(
            "pattern size {m} exceeds text size {n}"
        )));
    }
    if sigma < 1 {
        return Err(CliError::Workload(
            "alphabet size must be at least 1".into(),
        ));
    }
    if trials < 1 {
        return Err(CliError::Workload("need at least one trial".into()));
    }
    Ok(())
}

/// Random instance with characters drawn uniformly from `1..=sigma`.
///
/// The text is drawn before the pattern from a ChaCha8 stream seeded with
/// `seed`, so output is identical across runs and platforms. Sizes are
/// lengths in 1D and side lengths of square matrices in 2D.
pub fn generate(dim: Dim, n: usize, m: usize, sigma: i64, seed: u64) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw =
        |len: usize| -> Vec<i64> { (0..len).map(|_| rng.gen_range(1..=sigma)).collect() };
    match dim {
        Dim::One => {
            let text = draw(n);
            let pattern = draw(m);
            Instance::One { text, pattern }
        }
        Dim::Two => {
            let text = Matrix::new(n, n, draw(n * n)).unwrap();
            let pattern = Matrix::new(m, m, draw(m * m)).unwrap();
            Instance::Two { text, pattern }
        }
    }
}

/// Per-trial seed derived from the workload seed.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    seed.wrapping_add(trial as u64)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Positions {
    One(Vec<usize>),
    Two(Vec<(usize, usize)>),
}

impl Positions {
    pub fn len(&self) -> usize {
        match self {
            Positions::One(p) => p.len(),
            Positions::Two(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// One 1-based position per line; `x y` in 2D.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        match self {
            Positions::One(p) => p.iter().for_each(|x| out.push_str(&format!("{}\n", x + 1))),
            Positions::Two(p) => p
                .iter()
                .for_each(|(x, y)| out.push_str(&format!("{} {}\n", x + 1, y + 1))),
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub positions: Positions,
    /// Wall time of preprocessing plus matching.
    pub time_ns: u64,
    pub counters: Counters,
}

impl MatchReport {
    pub fn comparisons(&self) -> u64 {
        self.counters.comparisons()
    }

    pub fn stats_block(&self) -> String {
        let c = &self.counters;
        format!(
            "matches: {}\ntime_ns: {}\ncomparisons: {}\nduels: {}\nduel_comparisons: {}\n\
             sweep_steps: {}\nsweep_comparisons: {}\nscan_comparisons: {}\n",
            self.positions.len(),
            self.time_ns,
            c.comparisons(),
            c.duels,
            c.duel_comparisons,
            c.sweep_steps,
            c.sweep_comparisons,
            c.scan_comparisons,
        )
    }
}

/// Runs `algo` on `instance`, timing preprocessing and matching together.
pub fn run(instance: &Instance, algo: Algo) -> Result<MatchReport> {
    let dim = instance.dim();
    if !algo.supports(dim) {
        return Err(CliError::Unsupported { algo, dim });
    }
    let mut counters = Counters::default();
    let start = Instant::now();
    let positions = match instance {
        Instance::One { text, pattern } => Positions::One(match algo {
            Algo::Duel => Pattern1D::new(pattern)?.find_counted(text, &mut counters),
            Algo::Kmp => KmpMatcher::new(pattern)?.find_counted(text, &mut counters),
            Algo::Naive => naive_match_1d_counted(text, pattern, &mut counters),
            Algo::Reduction2d => unreachable!(),
        }),
        Instance::Two { text, pattern } => Positions::Two(match algo {
            Algo::Duel => Pattern2D::new(pattern.clone())?.find_counted(text, &mut counters),
            Algo::Reduction2d => {
                Pattern2D::new(pattern.clone())?.find_by_reduction_counted(text, &mut counters)
            }
            Algo::Naive => naive_match_2d_counted(text, pattern, &mut counters),
            Algo::Kmp => unreachable!(),
        }),
    };
    let time_ns = start.elapsed().as_nanos() as u64;
    Ok(MatchReport {
        positions,
        time_ns,
        counters,
    })
}
