use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use fiatcell::cli::{exit_code, run, Command, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    let start = Instant::now();
    match run(&cfg) {
        Ok(outcome) => {
            print!("{}", outcome.output);
            if matches!(cfg.command, Command::ReportAll) {
                eprintln!("# runtime {:.2?}", start.elapsed());
            }
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
