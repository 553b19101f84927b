//! `numplane`: run named suites and counterexamples from the command line.

mod registry;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use run::{Output, RunSpec};

#[derive(Parser, Debug)]
#[command(name = "numplane", version, about = "Exact checks of configuration theorems over number planes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one suite or counterexample.
    Run {
        #[arg(long)]
        suite: String,
        /// Coordinate system; defaults to rational, or the counterexample's own.
        #[arg(long)]
        system: Option<String>,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Terms kept in the t-adic part of truncated systems.
        #[arg(long, default_value_t = 16)]
        trunc_t: usize,
        /// Terms kept in the s-adic part of truncated systems.
        #[arg(long, default_value_t = 16)]
        trunc_s: usize,
        #[arg(long)]
        json: bool,
        /// Write an SVG drawing of the construction to this path.
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// List suites, with the section each reproduces, and systems.
    List,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { run::exit::USAGE as u8 } else { 0 });
        }
    };
    match cli.command {
        Command::List => {
            print!("{}", registry::listing());
            ExitCode::SUCCESS
        }
        Command::Run { suite, system, n, seed, trunc_t, trunc_s, json, svg } => {
            let spec = RunSpec {
                suite,
                system,
                n,
                seed,
                trunc: (trunc_t, trunc_s),
                output: if json { Output::Json } else { Output::Text },
                svg,
            };
            let out = run::run(&spec);
            print!("{}", out.stdout);
            if !out.stderr.is_empty() {
                eprintln!("{}", out.stderr.trim_end());
            }
            ExitCode::from(out.code as u8)
        }
    }
}
