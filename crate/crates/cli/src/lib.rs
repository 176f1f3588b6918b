//! Command-line frontend for `stabctx-core`: run configuration, wall-clock
//! budgets, DIMACS and JSON formats, and the table-producing commands.

pub mod build;
pub mod cli;
pub mod commands;
pub mod config;
pub mod deadline;
pub mod dimacs;
pub mod output;

pub use config::{Format, GraphSource, RunConfig};
pub use deadline::Deadline;
pub use output::{Field, Num, Record, SCHEMA_VERSION};
