//! Command-line front end: `compute`, `table` and `verify`.

pub mod compute;
pub mod error;
pub mod render;
pub mod table;
pub mod verify;

use std::io::Write;

use clap::{Parser, Subcommand};

pub use compute::{evaluate, ComputeArgs, Evaluation, Invariant, Method};
pub use error::{CliError, CliResult};
pub use render::{render_poly, Format, OutputRecord, PolyForms};
pub use table::{Family, Table, TableArgs, TableFormat};
pub use verify::{Check, Tally, VerifyArgs};

#[derive(Parser, Debug)]
#[command(
    name = "pretzel",
    version,
    about = "Kauffman bracket and Conway polynomials of pretzel links"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one invariant of one pretzel link.
    Compute(ComputeArgs),
    /// Tabulate an invariant over a family, one column per method.
    Table(TableArgs),
    /// Check the closed formulas and symmetries against exhaustive enumeration.
    Verify(VerifyArgs),
}

pub fn run(cli: &Cli, out: &mut dyn Write, diag: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Compute(args) => compute::run_compute(args, out, diag),
        Command::Table(args) => {
            let t = table::build_table(args)?;
            table::write_table(&t, args.format, out)
        }
        Command::Verify(args) => verify::run_verify(args, out),
    }
}
