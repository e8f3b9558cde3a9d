use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use lrq::{all_lr_at, all_lr_fast, all_lr_reference, leftmost_lr_at, save_index, TextIndex};
use rayon::prelude::*;

use crate::args::{
    AllPositionsArgs, BenchArgs, Command, IndexArgs, InputFormat, QueryArgs, Source,
};
use crate::bench::{self, BenchConfig};
use crate::fasta;
use crate::output::{write_records, QueryOutputRecord};
use crate::CliError;

pub fn run<W: Write>(command: Command, out: &mut W) -> Result<(), CliError> {
    match command {
        Command::Index(args) => cmd_index(&args).map(|_| ()),
        Command::Query(args) => cmd_query(&args, out),
        Command::AllPositions(args) => cmd_all_positions(&args, out),
        Command::Bench(args) => cmd_bench(&args, out),
    }
}

fn read_file(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn write_index(index: &TextIndex, path: &Path) -> Result<(), CliError> {
    let file = File::create(path).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })?;
    save_index(index, &mut BufWriter::new(file)).map_err(|source| match source {
        lrq::Error::Io(source) => CliError::Write {
            path: path.to_path_buf(),
            source,
        },
        source => CliError::Index {
            path: path.to_path_buf(),
            source,
        },
    })
}

/// Path of the index for FASTA record `ordinal` (1-based).
pub fn record_path(out: &Path, ordinal: usize) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(format!(".{ordinal}"));
    PathBuf::from(name)
}

/// Writes the index file(s) and returns their paths in record order.
pub fn cmd_index(args: &IndexArgs) -> Result<Vec<PathBuf>, CliError> {
    let data = read_file(&args.input)?;
    match args.format {
        InputFormat::Raw => {
            write_index(&TextIndex::build(data), &args.out)?;
            Ok(vec![args.out.clone()])
        }
        InputFormat::Fasta => {
            let records = fasta::parse(&data)?;
            records
                .into_par_iter()
                .enumerate()
                .map(|(i, record)| {
                    let path = record_path(&args.out, i + 1);
                    write_index(&TextIndex::build(record.sequence), &path)?;
                    Ok(path)
                })
                .collect::<Vec<_>>()
                .into_iter()
                .collect()
        }
    }
}

pub fn load_source(source: &Source) -> Result<TextIndex, CliError> {
    match (&source.index, &source.text) {
        (Some(path), _) => {
            let file = File::open(path).map_err(|source| CliError::Read {
                path: path.clone(),
                source,
            })?;
            lrq::load_index(&mut BufReader::new(file)).map_err(|source| CliError::Index {
                path: path.clone(),
                source,
            })
        }
        (None, Some(text)) => Ok(TextIndex::build(text.clone().into_bytes())),
        (None, None) => Err(CliError::Usage(
            "one of --index or --text is required".into(),
        )),
    }
}

fn usage_for(err: lrq::Error) -> CliError {
    match err {
        e @ lrq::Error::PositionOutOfRange { .. } => CliError::Usage(e.to_string()),
        e => CliError::Lrq(e),
    }
}

pub fn cmd_query<W: Write>(args: &QueryArgs, out: &mut W) -> Result<(), CliError> {
    let index = load_source(&args.source)?;
    let k = args.pos;
    let hits = if args.all {
        let all = all_lr_at(&index, k).map_err(usage_for)?;
        if all.is_empty() {
            vec![lrq::Repeat::ABSENT]
        } else {
            all
        }
    } else {
        vec![leftmost_lr_at(&index, k).map_err(usage_for)?]
    };
    let text = args.out.show_substring.then(|| index.text());
    let records: Vec<_> = hits
        .into_iter()
        .map(|lr| QueryOutputRecord::new(k, lr, text))
        .collect();
    write_records(out, &records, args.out.output, args.out.header)?;
    Ok(())
}

pub fn cmd_all_positions<W: Write>(args: &AllPositionsArgs, out: &mut W) -> Result<(), CliError> {
    let index = load_source(&args.source)?;
    let table = if args.reference {
        all_lr_reference(&index)
    } else {
        all_lr_fast(&index)
    };
    let text = args.out.show_substring.then(|| index.text());
    let records: Vec<_> = table
        .entries()
        .iter()
        .enumerate()
        .map(|(slot, &lr)| QueryOutputRecord::new(slot + 1, lr, text))
        .collect();
    write_records(out, &records, args.out.output, args.out.header)?;
    Ok(())
}

pub fn cmd_bench<W: Write>(args: &BenchArgs, out: &mut W) -> Result<(), CliError> {
    let config = BenchConfig {
        sizes: args.sizes.clone(),
        alphabet: args.alphabet,
        seed: args.seed,
        repeats: args.repeats,
    };
    let rows = bench::run(&config)?;
    bench::write_tsv(out, &rows, args.header)?;
    Ok(())
}
