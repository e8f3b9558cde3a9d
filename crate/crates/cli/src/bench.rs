//! Scaling benchmark: seeded random texts, median wall-clock timings.

use std::io::{self, Write};
use std::time::{Duration, Instant};

use lrq::TextIndex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub alphabet: usize,
    pub seed: u64,
    pub repeats: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub size: usize,
    pub build_ms: f64,
    pub query_ms: f64,
    /// First 16 hex digits of the text's SHA-256.
    pub text_hash: String,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.sizes.is_empty() {
            return Err(CliError::Usage("--sizes needs at least one size".into()));
        }
        if self.sizes.contains(&0) {
            return Err(CliError::Usage("--sizes must all be positive".into()));
        }
        if self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CliError::Usage("--sizes must be strictly ascending".into()));
        }
        if !(1..=256).contains(&self.alphabet) {
            return Err(CliError::Usage("--alphabet must be in 1..=256".into()));
        }
        if self.repeats == 0 {
            return Err(CliError::Usage("--repeats must be positive".into()));
        }
        Ok(())
    }
}

/// Random text over `alphabet` symbols: lowercase letters when the alphabet
/// fits in `a..=z`, raw byte values otherwise.
pub fn random_text(size: usize, alphabet: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = if alphabet <= 26 { b'a' } else { 0 };
    (0..size)
        .map(|_| base + rng.gen_range(0..alphabet) as u8)
        .collect()
}

pub fn text_hash(text: &[u8]) -> String {
    Sha256::digest(text)[..8]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn median_ms(mut samples: Vec<Duration>) -> f64 {
    samples.sort();
    let mid = samples.len() / 2;
    let d = if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    };
    d.as_secs_f64() * 1e3
}

pub fn run(config: &BenchConfig) -> Result<Vec<BenchRow>, CliError> {
    config.validate()?;
    let mut rows = Vec::with_capacity(config.sizes.len());
    for &size in &config.sizes {
        let text = random_text(size, config.alphabet, config.seed);
        let mut build = Vec::with_capacity(config.repeats);
        let mut index = None;
        for _ in 0..config.repeats {
            let t = Instant::now();
            let built = TextIndex::build(text.clone());
            build.push(t.elapsed());
            index = Some(built);
        }
        let index = index.expect("repeats is positive");
        let mut query = Vec::with_capacity(config.repeats);
        for _ in 0..config.repeats {
            let t = Instant::now();
            let table = lrq::all_lr_fast(&index);
            query.push(t.elapsed());
            assert_eq!(table.len(), size);
        }
        rows.push(BenchRow {
            size,
            build_ms: median_ms(build),
            query_ms: median_ms(query),
            text_hash: text_hash(&text),
        });
    }
    Ok(rows)
}

pub fn write_tsv<W: Write>(out: &mut W, rows: &[BenchRow], header: bool) -> io::Result<()> {
    if header {
        writeln!(out, "size\tbuild_ms\tquery_ms\ttext_hash")?;
    }
    for r in rows {
        writeln!(
            out,
            "{}\t{:.3}\t{:.3}\t{}",
            r.size, r.build_ms, r.query_ms, r.text_hash
        )?;
    }
    Ok(())
}
