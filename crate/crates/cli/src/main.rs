use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use lrq_cli::args::Cli;
use lrq_cli::commands;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = commands::run(cli.command, &mut out).and_then(|()| Ok(out.flush()?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lrq: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
