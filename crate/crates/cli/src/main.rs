use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use klcf_cli::{bench, gen, run, set_threads, Cli, CliError, Command};

const EXIT_USAGE: u8 = 64;

fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Some(Command::Gen(args)) => {
            gen::gen(&args)?;
        }
        Some(Command::Bench(args)) => {
            set_threads(args.threads)?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            bench::bench(&args, &mut out)?;
            out.flush().map_err(|source| CliError::Write {
                path: "<stdout>".into(),
                source,
            })?;
        }
        None => {
            set_threads(cli.run.threads)?;
            let report = run(&cli.run)?;
            println!("{}", report.render(cli.run.output_format()));
        }
    }
    Ok(())
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
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("klcf: {e}");
            if let Some(hint) = e.hint() {
                eprintln!("{hint}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
