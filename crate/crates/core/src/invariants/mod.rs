//! Solvers for alpha, omega, chi, clique cover, alpha*, theta and induced
//! odd cycles.

pub mod clique;
pub mod coloring;
pub mod cover;
pub mod cycles;
pub mod packing;
pub mod report;
pub mod theta;

use core::fmt;

pub use clique::{independence_number, max_clique, CliqueOptions, CliqueResult};
pub use coloring::{chromatic_number, normal_cayley_chromatic, ChromaticOptions, ColoringResult};
pub use cover::{clique_cover, verify_clique_cover, CoverOptions, CoverResult};
pub use cycles::{
    count_induced_cycles, induced_odd_cycles, is_induced_cycle, CycleSearch, OddCycleEntry, OddCycleOptions,
    OddCycleReport,
};
pub use packing::{fractional_packing, maximal_cliques, PackingResult};
pub use report::{compute_report, Computed, InvariantReport, ReportOptions};
pub use theta::{lovasz_theta, odd_cycle_theta, ThetaOptions, ThetaResult};

/// How a reported value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// Proven optimal.
    Exact,
    /// Only a bracket is known.
    Bounded,
    /// Numerical, certified to within a tolerance.
    Tolerance,
    /// Not computed (size cap or budget).
    Skipped,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::Bounded => "bound",
            Status::Tolerance => "tolerance",
            Status::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
