use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde::Serialize;
use stabctx_core::stabilizer::FamilyKind;
use stabctx_core::PrimeDim;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Single,
    Sep,
    Ent,
    Tot,
}

impl Family {
    pub fn kind(self) -> FamilyKind {
        match self {
            Family::Single => FamilyKind::Single,
            Family::Sep => FamilyKind::Separable,
            Family::Ent => FamilyKind::Entangled,
            Family::Tot => FamilyKind::Total,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Table,
    Json,
    Csv,
    Dimacs,
}

/// Which graph `export` writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphSource {
    /// The orthogonality graph of `--family`.
    Family,
    Chsh,
    Pm,
    Kcbs,
    AltChsh,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub dimension: PrimeDim,
    pub family: Family,
    /// Wall-clock seconds per invariant.
    pub budget_seconds: u64,
    /// Target gap for numerical solvers.
    pub tolerance: f64,
    pub seed: u64,
    pub jobs: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub const DEFAULT_BUDGET_SECONDS: u64 = 60;
    pub const DEFAULT_TOLERANCE: f64 = 1e-6;

    pub fn new(dimension: u32, family: Family) -> Result<Self> {
        let cfg = RunConfig {
            dimension: PrimeDim::new(dimension)?,
            family,
            budget_seconds: Self::DEFAULT_BUDGET_SECONDS,
            tolerance: Self::DEFAULT_TOLERANCE,
            seed: 0,
            jobs: default_jobs(),
            format: Format::Table,
            out: None,
        };
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.budget_seconds == 0 {
            bail!("--budget-seconds must be positive");
        }
        if !(self.tolerance > 0.0 && self.tolerance < 0.1) {
            bail!("--tolerance must lie in (0, 0.1), got {}", self.tolerance);
        }
        if self.jobs == 0 {
            bail!("--jobs must be positive");
        }
        Ok(())
    }

    pub fn d(&self) -> u32 {
        self.dimension.get()
    }
}

pub fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let mut c = RunConfig::new(3, Family::Ent).unwrap();
        assert!(c.validate().is_ok());
        c.tolerance = 0.2;
        assert!(c.validate().is_err());
        c.tolerance = 1e-3;
        c.budget_seconds = 0;
        assert!(c.validate().is_err());
        assert!(RunConfig::new(4, Family::Ent).is_err());
    }
}
