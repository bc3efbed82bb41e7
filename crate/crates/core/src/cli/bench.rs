//! `lcscount bench`: time both algorithms on seeded random input.

use std::io::Write;
use std::time::Instant;

use clap::Args;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::trace::{CellEvent, Tracer};
use crate::{count_full_traced, count_linear_space_traced, Algorithm, CountKind};

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Length of each generated sequence.
    #[arg(long = "len", value_name = "N")]
    pub len: usize,
    /// Number of distinct symbols (1-256).
    #[arg(long, value_name = "K", default_value_t = 4, value_parser = clap::value_parser!(u16).range(1..=256))]
    pub alphabet: u16,
    #[arg(long, value_name = "S", default_value_t = 0)]
    pub seed: u64,
    /// Skip the full-table runs when the table would exceed this many cells.
    #[arg(long, value_name = "CELLS", default_value_t = 25_000_000)]
    pub max_full_cells: usize,
}

/// Two sequences of `len` symbols drawn uniformly from `0..alphabet`.
pub fn random_pair(len: usize, alphabet: u16, seed: u64) -> (Vec<u8>, Vec<u8>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || {
        (0..len)
            .map(|_| (rng.gen_range(0..alphabet)) as u8)
            .collect::<Vec<_>>()
    };
    let a = draw();
    let b = draw();
    (a, b)
}

#[derive(Default)]
struct Workspace {
    length_cells: usize,
    count_cells: usize,
}

impl Tracer for Workspace {
    #[inline]
    fn cell(&mut self, _: &CellEvent<'_>) {}

    fn workspace(&mut self, length_cells: usize, count_cells: usize) {
        self.length_cells = length_cells;
        self.count_cells = count_cells;
    }
}

pub(crate) fn run(args: &BenchArgs, out: &mut dyn Write) -> std::io::Result<()> {
    let (a, b) = random_pair(args.len, args.alphabet, args.seed);
    writeln!(out, "m: {}", a.len())?;
    writeln!(out, "n: {}", b.len())?;
    writeln!(out, "alphabet: {}", args.alphabet)?;
    writeln!(out, "seed: {}", args.seed)?;

    let full_cells = (a.len() + 1).saturating_mul(b.len() + 1);
    for algorithm in [Algorithm::Full, Algorithm::Linear] {
        for kind in CountKind::ALL {
            let kind_name = match kind {
                CountKind::Distinct => "distinct",
                CountKind::Embeddings => "embeddings",
            };
            write!(out, "algorithm={} kind={kind_name}", algorithm.name())?;
            if algorithm == Algorithm::Full && full_cells > args.max_full_cells {
                writeln!(out, " skipped=table-too-large table_cells={full_cells}")?;
                continue;
            }
            let mut workspace = Workspace::default();
            let start = Instant::now();
            let (length, count) = match algorithm {
                Algorithm::Full => count_full_traced(&a, &b, kind, &mut workspace),
                Algorithm::Linear => count_linear_space_traced(&a, &b, kind, &mut workspace),
            };
            let elapsed = start.elapsed();
            writeln!(
                out,
                " lcs_length={length} count_bits={} time_ms={:.3} length_cells={} count_cells={}",
                count.bits(),
                elapsed.as_secs_f64() * 1e3,
                workspace.length_cells,
                workspace.count_cells,
            )?;
        }
    }
    Ok(())
}
