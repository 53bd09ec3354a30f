mod args;
mod jobs;
mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use lattice_zeta_core::acceptance::{run_suite, Suite};
use lattice_zeta_core::ZetaError;
use rayon::prelude::*;

use args::{Cli, Command, Format, JobSpec};
use jobs::{evaluate, units, Row};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_MATH: u8 = 3;

enum Failure {
    Usage(String),
    Math(ZetaError),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, Failure> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("LATTICE_ZETA_THREADS") {
        let n: usize = v
            .parse()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| Failure::Usage(format!("LATTICE_ZETA_THREADS={v:?} is not a positive integer")))?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))
}

fn compute(spec: &JobSpec) -> Result<Vec<Row>, Failure> {
    let work = units(spec);
    let pool = thread_pool()?;
    // collect keeps input order regardless of scheduling
    let chunks: Vec<_> = pool.install(|| {
        work.par_iter()
            .map(|&(s, n)| evaluate(spec, s, n))
            .collect()
    });
    let mut rows = Vec::new();
    for chunk in chunks {
        rows.extend(chunk.map_err(Failure::Math)?);
    }
    Ok(rows)
}

fn emit(spec: &JobSpec, rows: &[Row], scalar: bool) -> Result<(), Failure> {
    let format = spec.format.unwrap_or(Format::Csv);
    match &spec.out {
        Some(path) => {
            let file = BufWriter::new(File::create(path)?);
            match format {
                Format::Csv => output::write_csv(rows, file)?,
                Format::Json => output::write_json(rows, file)?,
            }
        }
        None if scalar && spec.format.is_none() && rows.len() == 1 => {
            let mut out = io::stdout().lock();
            writeln!(out, "{}", output::plain_value(&rows[0]))?;
        }
        None => {
            let out = io::stdout().lock();
            match format {
                Format::Csv => output::write_csv(rows, out)?,
                Format::Json => output::write_json(rows, out)?,
            }
        }
    }
    Ok(())
}

fn check(suite: Suite) -> ExitCode {
    let outcomes = run_suite(suite);
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_CHECK_FAILED)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let (job, sweep) = match cli.command {
        Command::Check { suite } => return Ok(check(suite)),
        Command::Eval(job) => (job, false),
        Command::Sweep(job) => (job, true),
    };
    let spec = JobSpec::from_args(job, sweep).map_err(Failure::Usage)?;
    let rows = compute(&spec)?;
    emit(&spec, &rows, !sweep)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_MATH)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}
