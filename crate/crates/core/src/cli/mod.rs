//! Command-line front end: the structure file format, reports and commands.

mod commands;
mod format;
mod report;

pub use commands::{exit_code, run, CatalogAction, Category, Cli, Command, GlobalOpts, OutFormat, Outcome, SideArg};
pub use format::{emit_matrix_file, emit_structure, parse_matrix_file, parse_structure, FORMAT_VERSION};
pub use report::{digest, CheckEntry, ReportFile, WitnessEntry, TOOL};
