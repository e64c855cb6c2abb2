//! Builds C_{C,X} for a bundled `.ccx` fixture and runs the bimodule checks.
//!
//!     cargo run --example ccx_suite -- exterior2

use fiatcell::bimod::DEFAULT_SEED;
use fiatcell::report::Report;
use fiatcell::suite::{ccx_records, load_ccx};

fn main() -> fiatcell::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "zigzagA2".into());
    let ccx = load_ccx(&name)?;
    print!("{}", ccx.ms.to_text());

    let mut report = Report::new(format!("C_(C,X) for {name}"));
    report.extend(ccx_records(&ccx, DEFAULT_SEED)?);
    print!("{}", report.to_text());
    Ok(())
}
