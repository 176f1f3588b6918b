//! The Peres-Mermin square
//!
//! ```text
//! XY  YX  ZZ
//! YZ  ZY  XX
//! ZX  XZ  YY
//! ```
//!
//! and its 24 rank-1 projectors, one basis per row and column.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{orthogonality_graph, Graph};
use crate::iso::{find_isomorphism, verify_isomorphism};
use crate::linalg::DenseMatrix;
use crate::modular::PrimeDim;
use crate::pauli::{symplectic_commutes, SymplecticPauli};
use crate::stabilizer::{enumerate_two_qudit, FamilyKind, StabilizerState};
use crate::{Error, Result};

const SQUARE: [[&str; 3]; 3] = [["XY", "YX", "ZZ"], ["YZ", "ZY", "XX"], ["ZX", "XZ", "YY"]];

fn parse(op: &str) -> SymplecticPauli {
    let d = PrimeDim::new(2).expect("2 is prime");
    let (mut x, mut z) = (Vec::new(), Vec::new());
    for c in op.chars() {
        let (a, b) = match c {
            'X' => (1, 0),
            'Y' => (1, 1),
            'Z' => (0, 1),
            _ => (0, 0),
        };
        x.push(a);
        z.push(b);
    }
    SymplecticPauli::new(d, x, z, 0).expect("two-qubit shape")
}

#[derive(Clone, Debug)]
pub struct PeresMerminRecord {
    pub square: [[SymplecticPauli; 3]; 3],
    /// Every row and column is a commuting triple.
    pub contexts_commute: bool,
    /// `max |R_i - I|` over rows, entrywise.
    pub row_deviation: f64,
    /// `max |C_j + I|` over columns, entrywise.
    pub column_deviation: f64,
    /// Sign assignments consistent with `R_i = I` and `C_j = -I`, out of 512.
    pub consistent_assignments: usize,
    pub states: Vec<StabilizerState>,
    pub graph: Graph,
    /// `map[i]`: index in the entangled two-qubit family of state `i`.
    pub bijection: Option<Vec<usize>>,
    /// The bijection preserves orthogonality.
    pub bijection_is_isomorphism: bool,
    /// An isomorphism found by search, ignoring labels.
    pub searched_isomorphism: Option<Vec<usize>>,
}

impl PeresMerminRecord {
    pub fn contradiction_verified(&self) -> bool {
        self.contexts_commute
            && self.row_deviation < 1e-12
            && self.column_deviation < 1e-12
            && self.consistent_assignments == 0
    }
}

fn contexts(square: &[[SymplecticPauli; 3]; 3]) -> Vec<(String, [SymplecticPauli; 3])> {
    let mut out = Vec::new();
    for (i, row) in square.iter().enumerate() {
        out.push((format!("R{}", i + 1), row.clone()));
    }
    for j in 0..3 {
        out.push((
            format!("C{}", j + 1),
            [square[0][j].clone(), square[1][j].clone(), square[2][j].clone()],
        ));
    }
    out
}

fn product_matrix(ops: &[SymplecticPauli; 3]) -> Result<DenseMatrix> {
    Ok(ops[0].matrix()?.mul(&ops[1].matrix()?).mul(&ops[2].matrix()?))
}

pub fn peres_mermin() -> Result<PeresMerminRecord> {
    let square: [[SymplecticPauli; 3]; 3] = SQUARE.map(|row| row.map(parse));
    let ctx = contexts(&square);

    let mut contexts_commute = true;
    for (_, ops) in &ctx {
        for a in 0..3 {
            for b in a + 1..3 {
                contexts_commute &= symplectic_commutes(&ops[a], &ops[b])?;
                let m = ops[a].matrix()?.commutator(&ops[b].matrix()?);
                contexts_commute &= m.max_abs() < 1e-12;
            }
        }
    }
    let id = DenseMatrix::identity(4);
    let mut row_deviation: f64 = 0.0;
    let mut column_deviation: f64 = 0.0;
    for (i, (_, ops)) in ctx.iter().enumerate() {
        let p = product_matrix(ops)?;
        if i < 3 {
            row_deviation = row_deviation.max(p.max_abs_diff(&id));
        } else {
            column_deviation = column_deviation.max(p.add(&id).max_abs());
        }
    }

    let consistent_assignments = (0u32..512)
        .filter(|&mask| {
            let v = |r: usize, c: usize| if mask >> (3 * r + c) & 1 == 1 { -1i32 } else { 1 };
            (0..3).all(|r| v(r, 0) * v(r, 1) * v(r, 2) == 1) && (0..3).all(|c| v(0, c) * v(1, c) * v(2, c) == -1)
        })
        .count();

    // a basis per context: common eigenstates of the first two operators
    let mut states = Vec::new();
    for (name, ops) in &ctx {
        for (s1, s2) in [(0, 0), (2, 0), (0, 2), (2, 2)] {
            let g = [ops[0].clone().with_phase(s1), ops[1].clone().with_phase(s2)];
            let sign = |s: u32| if s == 0 { '+' } else { '-' };
            states.push(StabilizerState::from_generators(&g, format!("{name}({}{})", sign(s1), sign(s2)))?);
        }
    }
    let n = states.len();
    let mut graph = Graph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if crate::stabilizer::is_orthogonal(&states[i], &states[j])? {
                graph.add_edge(i, j);
            }
        }
    }
    let graph = graph.with_labels(states.iter().map(|s| String::from(s.label())).collect());

    let d = PrimeDim::new(2)?;
    let ent = enumerate_two_qudit(d, FamilyKind::Entangled)?;
    let ent_graph = orthogonality_graph(&ent);
    let bijection: Option<Vec<usize>> = states
        .iter()
        .map(|s| ent.states.iter().position(|t| t == s))
        .collect();
    let bijection = bijection.filter(|m| {
        let mut seen = m.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == ent.len() && n == ent.len()
    });
    let bijection_is_isomorphism = bijection
        .as_ref()
        .is_some_and(|m| verify_isomorphism(&graph, &ent_graph, m));
    let searched_isomorphism = find_isomorphism(&graph, &ent_graph);
    if let Some(m) = &searched_isomorphism {
        if !verify_isomorphism(&graph, &ent_graph, m) {
            return Err(Error::SearchFailed);
        }
    }

    Ok(PeresMerminRecord {
        square,
        contexts_commute,
        row_deviation,
        column_deviation,
        consistent_assignments,
        states,
        graph,
        bijection,
        bijection_is_isomorphism,
        searched_isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::C64;

    #[test]
    fn square_is_contradictory() {
        let r = peres_mermin().unwrap();
        assert!(r.contexts_commute);
        assert!(r.row_deviation < 1e-12 && r.column_deviation < 1e-12);
        assert_eq!(r.consistent_assignments, 0);
        assert!(r.contradiction_verified());
    }

    #[test]
    fn projectors_are_the_entangled_family() {
        let r = peres_mermin().unwrap();
        assert_eq!(r.states.len(), 24);
        assert!(r.bijection.is_some());
        assert!(r.bijection_is_isomorphism);
        assert!(r.searched_isomorphism.is_some());
        assert_eq!(r.graph.regular_degree(), Some(9));
    }

    #[test]
    fn first_row_basis() {
        // (II + XY + YX + ZZ) / 4
        let r = peres_mermin().unwrap();
        let mut want = DenseMatrix::identity(4);
        for op in ["XY", "YX", "ZZ"] {
            want.add_assign(&parse(op).matrix().unwrap());
        }
        let want = want.scale(C64::new(0.25, 0.0));
        assert!(r.states[0].projector().unwrap().max_abs_diff(&want) < 1e-12);
    }
}
