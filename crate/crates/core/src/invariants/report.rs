//! All invariants of one graph, with per-field status and cross-checks.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::FromPrimitive;

use super::clique::{independence_number, max_clique, CliqueOptions, CliqueResult};
use super::coloring::{chromatic_number, normal_cayley_chromatic, ChromaticOptions, ColoringResult};
use super::cover::{clique_cover, CoverOptions, CoverResult};
use super::packing::{fractional_packing, PackingResult};
use super::theta::{lovasz_theta, ThetaOptions, ThetaResult};
use super::Status;
use crate::budget::Budget;
use crate::graph::Graph;
use crate::{Error, Result};

/// A field that may have been skipped.
#[derive(Clone, Debug, PartialEq)]
pub enum Computed<T> {
    Done(T),
    /// Only a bracket is known, for numerical fields.
    Bracket { lower: f64, upper: f64 },
    Skipped(String),
}

impl<T> Computed<T> {
    pub fn done(&self) -> Option<&T> {
        match self {
            Computed::Done(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    /// Options for the independence search; they refer to the complement.
    pub alpha: CliqueOptions,
    pub omega: CliqueOptions,
    pub chi: ChromaticOptions,
    pub cover: CoverOptions,
    /// `None` skips theta.
    pub theta: Option<ThetaOptions>,
    /// Largest graph for which `alpha*` is attempted.
    pub alpha_star_cap: usize,
    /// Hilbert-space dimension of the projectors, if the graph comes from one.
    pub hilbert_dim: Option<usize>,
    /// The caller vouches that the graph is a normal Cayley graph.
    pub normal_cayley: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            alpha: CliqueOptions::default(),
            omega: CliqueOptions::default(),
            chi: ChromaticOptions::default(),
            cover: CoverOptions::default(),
            theta: Some(ThetaOptions::default()),
            alpha_star_cap: 64,
            hilbert_dim: None,
            normal_cayley: false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub vertices: usize,
    pub edges: usize,
    pub alpha: CliqueResult,
    pub omega: CliqueResult,
    pub chi: ColoringResult,
    /// Set when chi came from the normal Cayley theorem rather than search.
    pub chi_by_theorem: bool,
    pub clique_cover: CoverResult,
    pub alpha_star: Computed<PackingResult>,
    pub theta: Computed<ThetaResult>,
    /// Largest eigenvalue of the projector sum, when known.
    pub lambda_max: Option<f64>,
    pub hilbert_dim: Option<usize>,
}

impl InvariantReport {
    /// `alpha < chi_bar`, when both are exact.
    pub fn sic_alpha_below_cover(&self) -> Option<bool> {
        match (self.alpha.value(), self.clique_cover.value()) {
            (Some(a), Some(c)) => Some(a < c),
            _ if self.alpha.upper < self.clique_cover.lower => Some(true),
            _ => None,
        }
    }

    /// `chi > D`, decided from the bracket when possible.
    pub fn sic_chi_exceeds_dim(&self) -> Option<bool> {
        let dim = self.hilbert_dim?;
        if self.chi.lower > dim {
            Some(true)
        } else if self.chi.upper <= dim {
            Some(false)
        } else {
            None
        }
    }

    /// Violated links of `alpha <= theta <= alpha* <= chi_bar` and
    /// `omega <= chi`, within `tol` for theta.
    pub fn sandwich_violations(&self, tol: f64) -> Vec<String> {
        let mut out = Vec::new();
        let alpha = self.alpha.size;
        if alpha > self.clique_cover.upper {
            out.push(format!("alpha {alpha} > clique cover {}", self.clique_cover.upper));
        }
        if let Some(t) = self.theta.done() {
            if alpha as f64 > t.upper + tol {
                out.push(format!("alpha {alpha} > theta {}", t.upper));
            }
            if t.lower > self.clique_cover.upper as f64 + tol {
                out.push(format!("theta {} > clique cover {}", t.lower, self.clique_cover.upper));
            }
            if let Some(p) = self.alpha_star.done() {
                if t.lower - tol > p.as_f64() {
                    out.push(format!("theta {} > alpha* {}", t.lower, p.value));
                }
            }
        }
        if let Some(p) = self.alpha_star.done() {
            let cover = BigRational::from_usize(self.clique_cover.upper).expect("usize fits");
            if p.value > cover {
                out.push(format!("alpha* {} > clique cover {}", p.value, self.clique_cover.upper));
            }
            let a = BigRational::from_usize(alpha).expect("usize fits");
            if a > p.value {
                out.push(format!("alpha {alpha} > alpha* {}", p.value));
            }
        }
        if let (Some(w), Some(c)) = (self.omega.value(), self.chi.value()) {
            if w > c {
                out.push(format!("omega {w} > chi {c}"));
            }
        }
        if let (Some(lm), Some(t)) = (self.lambda_max, self.theta.done()) {
            if lm > t.upper + tol {
                out.push(format!("lambda_max {lm} > theta {}", t.upper));
            }
        }
        out
    }
}

pub type BudgetFactory<'a> = dyn FnMut() -> Box<dyn Budget> + 'a;

/// Runs every solver, each with a fresh budget from `budgets`.
pub fn compute_report(g: &Graph, opts: &ReportOptions, budgets: &mut BudgetFactory<'_>) -> Result<InvariantReport> {
    let n = g.n();
    let mut omega_opts = opts.omega.clone();
    if let Some(d) = opts.hilbert_dim {
        omega_opts.upper_bound = Some(omega_opts.upper_bound.map_or(d, |u| u.min(d)));
    }
    let omega = max_clique(g, &omega_opts, &mut *budgets())?;
    let alpha = independence_number(g, &opts.alpha, &mut *budgets())?;

    let mut chi_opts = opts.chi.clone();
    if chi_opts.clique.is_none() {
        chi_opts.clique = Some(omega.witness.clone());
    }
    let mut chi = chromatic_number(g, &chi_opts, &mut *budgets())?;
    if omega.status == Status::Exact && chi.lower < omega.size {
        chi.lower = omega.size;
    }
    let mut chi_by_theorem = false;
    if opts.normal_cayley && chi.status != Status::Exact {
        if let (Some(a), Some(w)) = (alpha.value(), omega.value()) {
            if let Some(c) = normal_cayley_chromatic(n, a, w) {
                chi.lower = c;
                chi.upper = c;
                chi.colouring.clear();
                chi.status = Status::Exact;
                chi_by_theorem = true;
            }
        }
    }

    let mut cover_opts = opts.cover.clone();
    if cover_opts.independent_set.is_none() {
        cover_opts.independent_set = Some(alpha.witness.clone());
    }
    if cover_opts.max_clique_size.is_none() {
        cover_opts.max_clique_size = omega.value().or(opts.hilbert_dim);
    }
    let clique_cover = clique_cover(g, &cover_opts, &mut *budgets())?;

    let alpha_star = if n > opts.alpha_star_cap {
        Computed::Skipped(format!("{n} vertices exceeds the LP cap of {}", opts.alpha_star_cap))
    } else {
        match fractional_packing(g, &mut *budgets()) {
            Ok(p) => Computed::Done(p),
            Err(Error::BudgetExceeded(why)) => Computed::Skipped(why),
            Err(e) => return Err(e),
        }
    };

    let theta = match &opts.theta {
        None => Computed::Skipped("not requested".to_string()),
        Some(t) => match lovasz_theta(g, t, &mut *budgets()) {
            Ok(r) => Computed::Done(r),
            Err(Error::NoConvergence { lower, upper }) => Computed::Bracket { lower, upper },
            Err(Error::BudgetExceeded(why)) => Computed::Skipped(why),
            Err(e) => return Err(e),
        },
    };

    Ok(InvariantReport {
        vertices: n,
        edges: g.edge_count(),
        alpha,
        omega,
        chi,
        chi_by_theorem,
        clique_cover,
        alpha_star,
        theta,
        lambda_max: None,
        hilbert_dim: opts.hilbert_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Unlimited;

    fn unlimited() -> Box<dyn Budget> {
        Box::new(Unlimited)
    }

    #[test]
    fn pentagon_report() {
        let r = compute_report(&Graph::cycle(5), &ReportOptions::default(), &mut unlimited).unwrap();
        assert_eq!(r.alpha.value(), Some(2));
        assert_eq!(r.omega.value(), Some(2));
        assert_eq!(r.chi.value(), Some(3));
        assert_eq!(r.clique_cover.value(), Some(3));
        let p = r.alpha_star.done().unwrap();
        assert!((p.as_f64() - 2.5).abs() < 1e-12);
        let t = r.theta.done().unwrap();
        assert!((t.value - 5f64.sqrt()).abs() < 1e-5);
        assert!(r.sandwich_violations(1e-6).is_empty());
        assert_eq!(r.sic_alpha_below_cover(), Some(true));
    }

    #[test]
    fn skips_are_reported() {
        let opts = ReportOptions {
            theta: None,
            alpha_star_cap: 3,
            hilbert_dim: Some(2),
            ..Default::default()
        };
        let r = compute_report(&Graph::cycle(7), &opts, &mut unlimited).unwrap();
        assert!(matches!(r.alpha_star, Computed::Skipped(_)));
        assert!(matches!(r.theta, Computed::Skipped(_)));
        assert_eq!(r.sic_chi_exceeds_dim(), Some(true));
    }
}
