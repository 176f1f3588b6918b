//! The qudit CHSH operator and its decomposition into `d^3` rank-1 product
//! stabilizer projectors.
//!
//! For odd `d`, with `h = 2^{-1}`,
//! `A_j = omega^{j(j+1)} X Z^j`, `B_k = omega^{h^2(k^2+2k)} X Z^{hk}` and
//! `B = sum_{n != 0} sum_{j,k} omega^{njk} A_j^n (x) B_k^n`.
//! Writing `T_jk = omega^{jk} A_j (x) B_k = omega^e P`, the inner sum over
//! `n` is `d Pi_P[-e] - I`, so `B = d sum Pi - d^2 I`. For qubits the same
//! holds with `A_0 = B_0 = X`, `A_1 = B_1 = Y`, `omega = -1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::ContextualityScenario;
use crate::graph::Graph;
use crate::linalg::{unit_root, DenseMatrix, C64};
use crate::modular::PrimeDim;
use crate::pauli::{rank1_decompose, SymplecticPauli};
use crate::stabilizer::{is_orthogonal, StabilizerState};
use crate::{Error, Result};

/// Classical (local) bound of the Bell operator; only known for `d <= 7`.
pub fn classical_bound(d: PrimeDim) -> Result<u32> {
    match d.get() {
        2 => Ok(2),
        3 => Ok(9),
        5 => Ok(35),
        7 => Ok(84),
        other => Err(Error::UnsupportedDim(other)),
    }
}

/// One `(j, k)` term: `T_jk = zeta^phase P` with `P = pauli`, contributing
/// `d Pi_pauli[label] - I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BellTerm {
    pub j: u32,
    pub k: u32,
    pub pauli: SymplecticPauli,
    pub label: u32,
}

#[derive(Clone, Debug)]
pub struct BellOperator {
    pub d: PrimeDim,
    pub matrix: DenseMatrix,
    pub classical_bound: u32,
    /// Alice's observables `A_j`, phases included.
    pub alice: Vec<SymplecticPauli>,
    /// Bob's observables `B_k`.
    pub bob: Vec<SymplecticPauli>,
    /// Terms in `(j, k)` lexicographic order.
    pub terms: Vec<BellTerm>,
}

impl BellOperator {
    /// Bell-operator bound implied by a bound on `<Sigma>`: `d s - d^2`.
    pub fn bell_value(&self, sigma_value: f64) -> f64 {
        let d = self.d.get() as f64;
        d * sigma_value - d * d
    }
}

fn observables(d: PrimeDim) -> Result<(Vec<SymplecticPauli>, Vec<SymplecticPauli>)> {
    if d.is_qubit() {
        let ops = vec![SymplecticPauli::single(d, 1, 0), SymplecticPauli::single(d, 1, 1)];
        return Ok((ops.clone(), ops));
    }
    let h = d.half()?;
    let step = d.omega_step();
    let alice = (0..d.get())
        .map(|j| SymplecticPauli::from_raw(d, vec![1], vec![j], step * d.mul(j, d.add(j, 1))))
        .collect::<Result<Vec<_>>>()?;
    let bob = (0..d.get())
        .map(|k| {
            let e = d.mul(d.mul(h, h), d.add(d.mul(k, k), d.mul(2, k)));
            SymplecticPauli::from_raw(d, vec![1], vec![d.mul(h, k)], step * e)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((alice, bob))
}

/// Bell operator by direct dense summation, independent of the symbolic
/// term reduction.
fn dense_operator(d: PrimeDim) -> Result<DenseMatrix> {
    let p = d.get() as usize;
    let shift = DenseMatrix::from_fn(p, |r, c| C64::new(((c + 1) % p == r) as u8 as f64, 0.0));
    let clock = DenseMatrix::from_fn(p, |r, c| if r == c { unit_root(d.get(), r as i64) } else { C64::new(0.0, 0.0) });
    if d.is_qubit() {
        let y = shift.mul(&clock).scale(C64::new(0.0, 1.0));
        let x = shift;
        let mut b = x.kron(&x);
        b.add_assign(&x.kron(&y));
        b.add_assign(&y.kron(&x));
        b = b.sub(&y.kron(&y));
        return Ok(b);
    }
    let h = d.half()?;
    let a: Vec<DenseMatrix> = (0..d.get())
        .map(|j| {
            let ph = unit_root(d.get(), (j * (j + 1)) as i64);
            shift.mul(&clock.pow(j)).scale(ph)
        })
        .collect();
    let b: Vec<DenseMatrix> = (0..d.get())
        .map(|k| {
            let e = d.mul(d.mul(h, h), d.add(d.mul(k, k), d.mul(2, k)));
            shift.mul(&clock.pow(d.mul(h, k))).scale(unit_root(d.get(), e as i64))
        })
        .collect();
    let mut out = DenseMatrix::zeros(p * p);
    for n in 1..d.get() {
        let an: Vec<DenseMatrix> = a.iter().map(|m| m.pow(n)).collect();
        let bn: Vec<DenseMatrix> = b.iter().map(|m| m.pow(n)).collect();
        for j in 0..d.get() {
            for k in 0..d.get() {
                let w = unit_root(d.get(), (n * j * k) as i64);
                out.add_assign(&an[j as usize].kron(&bn[k as usize]).scale(w));
            }
        }
    }
    Ok(out)
}

pub fn chsh_operator(d: PrimeDim) -> Result<BellOperator> {
    let bound = classical_bound(d)?;
    let (alice, bob) = observables(d)?;
    let step = d.omega_step();
    let mut terms = Vec::with_capacity((d.get() * d.get()) as usize);
    for (j, a) in alice.iter().enumerate() {
        for (k, b) in bob.iter().enumerate() {
            let t = a.tensor(b)?;
            let phase = t.phase() + step * d.mul(j as u32, k as u32);
            let t = t.with_phase(phase % d.phase_order());
            let e = t.omega_power().ok_or(Error::NonObservablePhase)?;
            let pauli = t.with_phase(0);
            terms.push(BellTerm {
                j: j as u32,
                k: k as u32,
                pauli,
                label: d.neg(e),
            });
        }
    }
    Ok(BellOperator {
        d,
        matrix: dense_operator(d)?,
        classical_bound: bound,
        alice,
        bob,
        terms,
    })
}

/// Vertex of the CHSH graph: `Pi_{A_j}[a] (x) Pi_{B_k}[b]` with
/// `a + b` equal to the term label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ChshVertex {
    pub j: u32,
    pub k: u32,
    pub a: u32,
    pub b: u32,
}

#[derive(Clone, Debug)]
pub struct ChshScenario {
    pub operator: BellOperator,
    pub scenario: ContextualityScenario,
    pub vertices: Vec<ChshVertex>,
    pub states: Vec<StabilizerState>,
}

impl ChshScenario {
    pub fn d(&self) -> PrimeDim {
        self.operator.d
    }

    /// Does the graph join exactly the pairs that share a local basis with
    /// different outcomes?
    pub fn local_structure_holds(&self) -> bool {
        let vs = &self.vertices;
        (0..vs.len()).all(|i| {
            (i + 1..vs.len()).all(|j| {
                let (p, q) = (vs[i], vs[j]);
                let local = (p.j == q.j && p.a != q.a) || (p.k == q.k && p.b != q.b);
                self.scenario.graph.has_edge(i, j) == local
            })
        })
    }

    /// Vertices consistent with a deterministic strategy.
    pub fn strategy_vertices(&self, f: &[u32], g: &[u32]) -> Vec<usize> {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| f[v.j as usize] == v.a && g[v.k as usize] == v.b)
            .map(|(i, _)| i)
            .collect()
    }

    /// Largest deviation of `d Sigma - d^2 I` from the dense Bell operator.
    pub fn decomposition_deviation(&self) -> f64 {
        let d = self.d().get() as f64;
        let dim = self.operator.matrix.dim();
        let lhs = self
            .scenario
            .sigma
            .scale(C64::new(d, 0.0))
            .sub(&DenseMatrix::identity(dim).scale(C64::new(d * d, 0.0)));
        lhs.max_abs_diff(&self.operator.matrix)
    }
}

pub fn chsh_scenario(d: PrimeDim) -> Result<ChshScenario> {
    let operator = chsh_operator(d)?;
    let mut projectors = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut vertices = Vec::new();
    let mut states = Vec::new();
    for t in &operator.terms {
        let parts = rank1_decompose(&t.pauli, t.label)?;
        let (x1, z1) = (t.pauli.x()[0], t.pauli.z()[0]);
        let (x2, z2) = (t.pauli.x()[1], t.pauli.z()[1]);
        for (a, p) in parts.into_iter().enumerate() {
            let a = a as u32;
            let b = d.sub(t.label, a);
            let s = StabilizerState::single(d, x1, z1, a)?.tensor(&StabilizerState::single(d, x2, z2, b)?)?;
            vertices.push(ChshVertex { j: t.j, k: t.k, a, b });
            labels.push(p.label_string());
            projectors.push(p.matrix);
            states.push(s);
        }
    }
    let n = states.len();
    let mut orth = vec![false; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let o = is_orthogonal(&states[i], &states[j])?;
            orth[i * n + j] = o;
        }
    }
    let graph = Graph::from_predicate(n, |i, j| orth[i.min(j) * n + i.max(j)]).with_labels(labels.clone());
    let scenario = ContextualityScenario::with_graph(format!("chsh-d{}", d.get()), projectors, labels, graph)?;
    let out = ChshScenario {
        operator,
        scenario,
        vertices,
        states,
    };
    let dev = out.decomposition_deviation();
    if !(dev <= 1e-9) {
        return Err(Error::DecompositionMismatch(dev));
    }
    Ok(out)
}

/// `true` iff every vertex has degree `(2d - 1)(d - 1)`.
pub fn regularity_conjecture_check(s: &ChshScenario) -> bool {
    let d = s.d().get() as usize;
    s.scenario.graph.regular_degree() == Some((2 * d - 1) * (d - 1))
}

/// Best deterministic local strategy: `max_{f,g} #{(j,k) : f(j) + g(k) = label_jk}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyOptimum {
    pub value: usize,
    pub f: Vec<u32>,
    pub g: Vec<u32>,
}

/// Exhausts Alice's `d^d` strategies; Bob's best reply is chosen per `k`.
/// When [`ChshScenario::local_structure_holds`], this equals `alpha`.
pub fn chsh_strategy_alpha(op: &BellOperator) -> StrategyOptimum {
    let d = op.d;
    let p = d.get() as usize;
    let mut label = vec![0u32; p * p];
    for t in &op.terms {
        label[t.j as usize * p + t.k as usize] = t.label;
    }
    let mut f = vec![0u32; p];
    let mut best = StrategyOptimum {
        value: 0,
        f: f.clone(),
        g: vec![0; p],
    };
    let mut counts = vec![0usize; p];
    loop {
        let mut total = 0;
        let mut g = vec![0u32; p];
        for k in 0..p {
            counts.iter_mut().for_each(|c| *c = 0);
            for j in 0..p {
                counts[d.sub(label[j * p + k], f[j]) as usize] += 1;
            }
            let (b, c) = counts
                .iter()
                .enumerate()
                .max_by_key(|&(b, &c)| (c, core::cmp::Reverse(b)))
                .expect("d > 0");
            g[k] = b as u32;
            total += c;
        }
        if total > best.value {
            best = StrategyOptimum {
                value: total,
                f: f.clone(),
                g,
            };
        }
        let mut i = p;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            f[i] += 1;
            if f[i] < d.get() {
                break;
            }
            f[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::projector_graph;
    use crate::invariants::{independence_number, CliqueOptions};
    use crate::linalg::hermitian_eigen;
    use crate::budget::Unlimited;

    fn dim(d: u32) -> PrimeDim {
        PrimeDim::new(d).unwrap()
    }

    #[test]
    fn qubit_operator() {
        let op = chsh_operator(dim(2)).unwrap();
        let labels: Vec<(u32, u32, u32)> = op.terms.iter().map(|t| (t.pauli.z()[0], t.pauli.z()[1], t.label)).collect();
        assert_eq!(labels, [(0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 1)]);
        assert!(op.matrix.is_hermitian(1e-12));
        // eigenvalues of XX + XY + YX - YY are +-2 sqrt 2
        let e = hermitian_eigen(&op.matrix).unwrap();
        assert!((e.max() - 2.0 * 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn unsupported_dimension() {
        assert!(matches!(chsh_operator(dim(11)), Err(Error::UnsupportedDim(11))));
        assert!(matches!(classical_bound(dim(13)), Err(Error::UnsupportedDim(13))));
    }

    #[test]
    fn qutrit_labels() {
        let op = chsh_operator(dim(3)).unwrap();
        // (z1, z2, label) with x = (1, 1) throughout
        let got: Vec<(u32, u32, u32)> = op.terms.iter().map(|t| (t.pauli.z()[0], t.pauli.z()[1], t.label)).collect();
        // reference labels, stated with z negated
        let reference = [
            (0, 0, 0),
            (0, 1, 0),
            (0, 2, 1),
            (1, 0, 0),
            (1, 1, 1),
            (1, 2, 0),
            (2, 0, 1),
            (2, 1, 0),
            (2, 2, 0),
        ];
        let d = dim(3);
        let mut mapped: Vec<(u32, u32, u32)> = got.iter().map(|&(a, b, k)| (d.neg(a), d.neg(b), k)).collect();
        mapped.sort_unstable();
        assert_eq!(mapped, reference);
        assert!(op.terms.iter().all(|t| t.pauli.x() == [1, 1]));
    }

    #[test]
    fn scenarios_decompose() {
        for (d, deg) in [(2, 3), (3, 10), (5, 36)] {
            let s = chsh_scenario(dim(d)).unwrap();
            let n = (d * d * d) as usize;
            assert_eq!(s.scenario.projectors.len(), n);
            assert!(s.decomposition_deviation() < 1e-9);
            assert!(s.scenario.projector_defect() < 1e-9);
            let mut distinct = s.states.clone();
            distinct.sort_by(|a, b| a.elements().cmp(b.elements()));
            distinct.dedup();
            assert_eq!(distinct.len(), n);
            assert_eq!(s.scenario.graph.regular_degree(), Some(deg));
            assert!(regularity_conjecture_check(&s));
            assert!(s.local_structure_holds());
            assert!(s.scenario.graph.same_edges(&projector_graph(&s.scenario.projectors, 1e-10)));
        }
    }

    #[test]
    fn strategy_oracle_matches_search() {
        for (d, alpha) in [(2, 3), (3, 6)] {
            let s = chsh_scenario(dim(d)).unwrap();
            let opt = chsh_strategy_alpha(&s.operator);
            assert_eq!(opt.value, alpha);
            let set = s.strategy_vertices(&opt.f, &opt.g);
            assert_eq!(set.len(), alpha);
            assert!(s.scenario.graph.is_independent(&set));
            let r = independence_number(&s.scenario.graph, &CliqueOptions::default(), &mut Unlimited).unwrap();
            assert_eq!(r.value(), Some(alpha));
            let bound = (d * alpha as u32) as i64 - (d * d) as i64;
            assert_eq!(bound, s.operator.classical_bound as i64);
        }
    }

    #[test]
    fn qutrit_spectrum() {
        let s = chsh_scenario(dim(3)).unwrap();
        assert!((s.scenario.qm_value - 6.4115).abs() < 1e-3);
    }
}
