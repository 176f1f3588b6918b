use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::commands;
use crate::config::{default_jobs, Family, Format, GraphSource, RunConfig};
use crate::dimacs::parse_dimacs;

#[derive(Parser, Debug)]
#[command(name = "stabctx", version, about = "Stabilizer-state orthogonality graphs and contextuality invariants")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    /// Prime local dimension d.
    #[arg(long, short = 'd', global = true, default_value_t = 2)]
    pub dimension: u32,
    #[arg(long, global = true, value_enum, default_value_t = Family::Ent)]
    pub family: Family,
    /// Wall-clock seconds allowed per invariant.
    #[arg(long, global = true, default_value_t = RunConfig::DEFAULT_BUDGET_SECONDS)]
    pub budget_seconds: u64,
    /// Target accuracy of numerical solvers, in (0, 0.1).
    #[arg(long, global = true, default_value_t = RunConfig::DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Family sizes |sep|, |ent|, |tot| at the given dimension.
    Counts,
    /// alpha, omega, chi, clique cover, alpha*, theta of one family.
    Invariants,
    /// The CHSH orthogonality graph: degree, alpha, lambda_max, theta, odd cycles.
    Chsh,
    /// The Peres-Mermin square and its 24 projectors.
    Pm,
    /// The KCBS pentagon.
    Kcbs,
    /// Six stabilizer projectors reproducing the qubit CHSH operator.
    AltChsh,
    /// Write a graph as DIMACS or JSON.
    Export {
        #[arg(long, value_enum, default_value_t = GraphSource::Family)]
        graph: GraphSource,
    },
    /// Invariants of a graph read from a DIMACS file.
    Graph { path: PathBuf },
}

impl GlobalArgs {
    pub fn config(&self) -> Result<RunConfig> {
        let mut cfg = RunConfig::new(self.dimension, self.family)?;
        cfg.budget_seconds = self.budget_seconds;
        cfg.tolerance = self.tolerance;
        cfg.seed = self.seed;
        cfg.jobs = self.jobs.unwrap_or_else(default_jobs);
        cfg.format = self.format;
        cfg.out = self.out.clone();
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Runs a parsed command line and returns the rendered output.
pub fn run(cli: &Cli) -> Result<String> {
    let cfg = cli.global.config()?;
    let record = match &cli.command {
        Command::Export { graph } => return commands::cmd_export(&cfg, *graph),
        Command::Counts => commands::cmd_counts(&cfg)?,
        Command::Invariants => commands::cmd_invariants(&cfg)?,
        Command::Chsh => commands::cmd_chsh(&cfg)?,
        Command::Pm => commands::cmd_pm(&cfg)?,
        Command::Kcbs => commands::cmd_kcbs(&cfg)?,
        Command::AltChsh => commands::cmd_alt_chsh(&cfg)?,
        Command::Graph { path } => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let g = parse_dimacs(&text).with_context(|| format!("parsing {}", path.display()))?;
            commands::cmd_graph(&cfg, &g, &path.display().to_string())?
        }
    };
    Ok(match cfg.format {
        Format::Table => record.to_table(),
        Format::Json => record.to_json(),
        Format::Csv => record.to_csv(),
        Format::Dimacs => bail!("--format dimacs only applies to export"),
    })
}
