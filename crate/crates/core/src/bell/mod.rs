//! Bell and Kochen-Specker scenarios as sums of rank-1 projectors: the
//! qudit CHSH family, the Peres-Mermin square, KCBS and a six-projector
//! form of qubit CHSH.

pub mod alternate;
pub mod chsh;
pub mod kcbs;
pub mod peres_mermin;

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{projector_graph, Graph};
use crate::linalg::{hermitian_eigen, DenseMatrix};
use crate::{Result, STRUCTURAL_TOL};

pub use alternate::alternate_chsh_scenario;
pub use chsh::{
    chsh_operator, chsh_scenario, chsh_strategy_alpha, classical_bound, regularity_conjecture_check, BellOperator,
    ChshScenario, ChshVertex, StrategyOptimum,
};
pub use kcbs::kcbs_scenario;
pub use peres_mermin::{peres_mermin, PeresMerminRecord};

/// Rank-1 projectors, their orthogonality graph and `Sigma`, their sum.
#[derive(Clone, Debug)]
pub struct ContextualityScenario {
    pub name: String,
    pub projectors: Vec<DenseMatrix>,
    pub labels: Vec<String>,
    pub graph: Graph,
    pub sigma: DenseMatrix,
    /// `alpha` of the graph, once computed.
    pub nchv_bound: Option<usize>,
    /// `lambda_max(Sigma)`.
    pub qm_value: f64,
    /// `theta` of the graph, once computed.
    pub theta_bound: Option<f64>,
}

impl ContextualityScenario {
    /// Builds the graph from dense orthogonality and `Sigma` from the sum.
    pub fn from_projectors(name: impl Into<String>, projectors: Vec<DenseMatrix>, labels: Vec<String>) -> Result<Self> {
        let graph = projector_graph(&projectors, STRUCTURAL_TOL).with_labels(labels.clone());
        Self::with_graph(name, projectors, labels, graph)
    }

    /// As [`from_projectors`](Self::from_projectors) with a graph the caller
    /// obtained another way.
    pub fn with_graph(
        name: impl Into<String>,
        projectors: Vec<DenseMatrix>,
        labels: Vec<String>,
        graph: Graph,
    ) -> Result<Self> {
        let dim = projectors.first().map_or(0, |p| p.dim());
        let mut sigma = DenseMatrix::zeros(dim);
        for p in &projectors {
            sigma.add_assign(p);
        }
        let qm_value = if dim == 0 { 0.0 } else { hermitian_eigen(&sigma)?.max() };
        Ok(ContextualityScenario {
            name: name.into(),
            projectors,
            labels,
            graph,
            sigma,
            nchv_bound: None,
            qm_value,
            theta_bound: None,
        })
    }

    pub fn hilbert_dim(&self) -> usize {
        self.sigma.dim()
    }

    /// Largest deviation of any projector from being a rank-1 projector.
    pub fn projector_defect(&self) -> f64 {
        self.projectors
            .iter()
            .map(|p| {
                let idem = p.mul(p).max_abs_diff(p);
                let tr = (p.trace().re - 1.0).abs() + p.trace().im.abs();
                idem.max(p.hermitian_deviation()).max(tr)
            })
            .fold(0.0, f64::max)
    }

    /// Whether the graph's edges are exactly the dense orthogonal pairs.
    pub fn graph_matches_projectors(&self, tol: f64) -> bool {
        self.graph.same_edges(&projector_graph(&self.projectors, tol))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;

    #[test]
    fn basis_scenario() {
        let projectors: Vec<DenseMatrix> = (0..3)
            .map(|i| DenseMatrix::from_fn(3, |r, c| C64::new((r == i && c == i) as u8 as f64, 0.0)))
            .collect();
        let s = ContextualityScenario::from_projectors("basis", projectors, alloc::vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        assert_eq!(s.graph.edge_count(), 3);
        assert!((s.qm_value - 1.0).abs() < 1e-12);
        assert!(s.projector_defect() < 1e-12);
        assert!(s.graph_matches_projectors(1e-10));
    }
}
