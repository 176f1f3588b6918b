//! Six two-qubit stabilizer projectors with `4 Sigma - 6 I = XX + XY + YX - YY`.
//!
//! A rank-1 two-qubit stabilizer projector is `(I + g1 + g2 + g3) / 4`, so
//! the identity holds exactly when the signed nontrivial group elements of
//! the six states add up to the four CHSH terms. The search runs over the
//! 60 states in family order and keeps the first solution whose graph is
//! the complement of the 5-pan.

use alloc::string::String;
use alloc::vec::Vec;

use super::ContextualityScenario;
use crate::budget::Unlimited;
use crate::graph::Graph;
use crate::invariants::{independence_number, CliqueOptions};
use crate::iso::find_isomorphism;
use crate::linalg::{DenseMatrix, C64};
use crate::modular::PrimeDim;
use crate::pauli::SymplecticPauli;
use crate::stabilizer::{enumerate_two_qudit, is_orthogonal, FamilyKind, StabilizerState};
use crate::{Error, Result};

const SIZE: usize = 6;

/// Signed coefficient vector over the 16 two-qubit Pauli keys.
fn coefficients(s: &StabilizerState) -> [i8; 16] {
    let mut c = [0i8; 16];
    for &(key, phase) in s.elements().iter().skip(1) {
        c[key as usize] += if phase == 0 { 1 } else { -1 };
    }
    c
}

fn target() -> [i8; 16] {
    let d = PrimeDim::new(2).expect("prime");
    let mut t = [0i8; 16];
    for (z, sign) in [([0, 0], 1), ([0, 1], 1), ([1, 0], 1), ([1, 1], -1)] {
        let p = SymplecticPauli::new(d, alloc::vec![1, 1], z.to_vec(), 0).expect("shape");
        t[p.key() as usize] = sign;
    }
    t
}

struct Search<'a> {
    coeffs: &'a [[i8; 16]],
    target: [i8; 16],
    chosen: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn go(&mut self, start: usize, acc: [i8; 16]) {
        let left = SIZE - self.chosen.len();
        let distance: i32 = acc.iter().zip(&self.target).map(|(a, t)| (a - t).abs() as i32).sum();
        if left == 0 {
            if distance == 0 {
                self.found.push(self.chosen.clone());
            }
            return;
        }
        // each state moves at most three coefficients by one
        if distance > 3 * left as i32 {
            return;
        }
        for i in start..self.coeffs.len() {
            if self.coeffs.len() - i < left {
                break;
            }
            let mut next = acc;
            for (n, c) in next.iter_mut().zip(&self.coeffs[i]) {
                *n += c;
            }
            self.chosen.push(i);
            self.go(i + 1, next);
            self.chosen.pop();
        }
    }
}

/// All 6-subsets of the two-qubit stabilizer states meeting the identity,
/// as index lists into the total family.
pub fn alternate_chsh_candidates() -> Result<(Vec<StabilizerState>, Vec<Vec<usize>>)> {
    let d = PrimeDim::new(2)?;
    let family = enumerate_two_qudit(d, FamilyKind::Total)?;
    let coeffs: Vec<[i8; 16]> = family.states.iter().map(coefficients).collect();
    let mut s = Search {
        coeffs: &coeffs,
        target: target(),
        chosen: Vec::new(),
        found: Vec::new(),
    };
    s.go(0, [0; 16]);
    Ok((family.states, s.found))
}

pub fn alternate_chsh_scenario() -> Result<ContextualityScenario> {
    let (states, candidates) = alternate_chsh_candidates()?;
    let pan = Graph::pan(5).complement();
    for cand in candidates {
        let chosen: Vec<&StabilizerState> = cand.iter().map(|&i| &states[i]).collect();
        let mut g = Graph::empty(SIZE);
        for i in 0..SIZE {
            for j in i + 1..SIZE {
                if is_orthogonal(chosen[i], chosen[j])? {
                    g.add_edge(i, j);
                }
            }
        }
        if find_isomorphism(&g, &pan).is_none() {
            continue;
        }
        let projectors: Vec<DenseMatrix> = chosen.iter().map(|s| s.projector()).collect::<Result<_>>()?;
        let labels: Vec<String> = chosen.iter().map(|s| String::from(s.label())).collect();
        let mut scenario = ContextualityScenario::from_projectors("chsh-alternate", projectors, labels)?;
        if !scenario.graph.same_edges(&g) {
            return Err(Error::SearchFailed);
        }
        let dev = identity_deviation(&scenario.sigma)?;
        if !(dev < 1e-9) {
            return Err(Error::DecompositionMismatch(dev));
        }
        let alpha = independence_number(&scenario.graph, &CliqueOptions::default(), &mut Unlimited)?;
        scenario.nchv_bound = alpha.value();
        return Ok(scenario);
    }
    Err(Error::SearchFailed)
}

/// `max |4 Sigma - 6 I - B|` against the dense qubit CHSH operator.
pub fn identity_deviation(sigma: &DenseMatrix) -> Result<f64> {
    let d = PrimeDim::new(2)?;
    let b = super::chsh::chsh_operator(d)?.matrix;
    let lhs = sigma
        .scale(C64::new(4.0, 0.0))
        .sub(&DenseMatrix::identity(4).scale(C64::new(6.0, 0.0)));
    Ok(lhs.max_abs_diff(&b))
}
