//! The single-qudit Clifford group in `(F|u)` form.
//!
//! `C_(F|u) = P_(u1|u2) U_F` with `F` in `SL(2, Z_d)` and `u` in `Z_d^2`,
//! modulo global phase. Elements are indexed `f * d^2 + u1 * d + u2` where
//! `f` is the position of `F` in lexicographic `(alpha, beta, gamma, delta)`
//! order.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::FiniteGroup;
use crate::linalg::{unit_root, DenseMatrix, C64};
use crate::modular::{legendre, PrimeDim};
use crate::pauli::SymplecticPauli;
use crate::{Error, Result};

/// `[[alpha, beta], [gamma, delta]]` with unit determinant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sl2 {
    pub alpha: u32,
    pub beta: u32,
    pub gamma: u32,
    pub delta: u32,
}

impl Sl2 {
    pub fn identity() -> Self {
        Sl2 {
            alpha: 1,
            beta: 0,
            gamma: 0,
            delta: 1,
        }
    }

    pub fn new(d: PrimeDim, alpha: u32, beta: u32, gamma: u32, delta: u32) -> Result<Self> {
        let m = Sl2 {
            alpha: alpha % d.get(),
            beta: beta % d.get(),
            gamma: gamma % d.get(),
            delta: delta % d.get(),
        };
        if m.det(d) != 1 {
            return Err(Error::NotSl2);
        }
        Ok(m)
    }

    pub fn det(&self, d: PrimeDim) -> u32 {
        d.sub(d.mul(self.alpha, self.delta), d.mul(self.beta, self.gamma))
    }

    pub fn trace(&self, d: PrimeDim) -> u32 {
        d.add(self.alpha, self.delta)
    }

    pub fn mul(&self, rhs: &Sl2, d: PrimeDim) -> Sl2 {
        let dot = |a: u32, b: u32, c: u32, e: u32| d.add(d.mul(a, b), d.mul(c, e));
        Sl2 {
            alpha: dot(self.alpha, rhs.alpha, self.beta, rhs.gamma),
            beta: dot(self.alpha, rhs.beta, self.beta, rhs.delta),
            gamma: dot(self.gamma, rhs.alpha, self.delta, rhs.gamma),
            delta: dot(self.gamma, rhs.beta, self.delta, rhs.delta),
        }
    }

    pub fn inverse(&self, d: PrimeDim) -> Sl2 {
        Sl2 {
            alpha: self.delta,
            beta: d.neg(self.beta),
            gamma: d.neg(self.gamma),
            delta: self.alpha,
        }
    }

    /// `F (x, z)^T`.
    pub fn apply(&self, d: PrimeDim, v: [u32; 2]) -> [u32; 2] {
        [
            d.add(d.mul(self.alpha, v[0]), d.mul(self.beta, v[1])),
            d.add(d.mul(self.gamma, v[0]), d.mul(self.delta, v[1])),
        ]
    }

    /// All of `SL(2, Z_d)` in lexicographic order.
    pub fn enumerate(d: PrimeDim) -> Vec<Sl2> {
        let p = d.get();
        let mut out = Vec::with_capacity((p * (p * p - 1)) as usize);
        for alpha in 0..p {
            for beta in 0..p {
                for gamma in 0..p {
                    for delta in 0..p {
                        let m = Sl2 {
                            alpha,
                            beta,
                            gamma,
                            delta,
                        };
                        if m.det(d) == 1 {
                            out.push(m);
                        }
                    }
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordElement {
    pub f: Sl2,
    pub u: [u32; 2],
}

impl CliffordElement {
    pub fn identity() -> Self {
        CliffordElement {
            f: Sl2::identity(),
            u: [0, 0],
        }
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "([{},{};{},{}]|{},{})",
            self.f.alpha, self.f.beta, self.f.gamma, self.f.delta, self.u[0], self.u[1]
        )
    }
}

/// `C_(F|u)` as a dense `d x d` unitary.
pub fn clifford_unitary(c: &CliffordElement, d: PrimeDim) -> DenseMatrix {
    let p = d.get() as usize;
    let f = c.f;
    // powers of tau as roots of unity: tau = -i for qubits, omega^{2^{-1}} otherwise
    let tau = |e: i64| -> C64 {
        if d.is_qubit() {
            unit_root(4, 3 * e)
        } else {
            let h = d.half().expect("odd") as i64;
            unit_root(d.get(), h * e)
        }
    };
    let uf = if f.beta != 0 {
        let binv = d.inv(f.beta).expect("nonzero") as i64;
        let (a, dl) = (f.alpha as i64, f.delta as i64);
        let norm = 1.0 / libm::sqrt(p as f64);
        DenseMatrix::from_fn(p, |j, k| {
            let (j, k) = (j as i64, k as i64);
            let e = binv * (a * k * k - 2 * j * k + dl * j * j);
            tau(e) * norm
        })
    } else {
        let mut m = DenseMatrix::zeros(p);
        for k in 0..p {
            let row = d.mul(f.alpha, k as u32) as usize;
            let e = f.alpha as i64 * f.gamma as i64 * (k * k) as i64;
            m[(row, k)] = tau(e);
        }
        m
    };
    let shift = SymplecticPauli::single(d, c.u[0], c.u[1])
        .matrix()
        .expect("single qudit fits");
    shift.mul(&uf)
}

/// `|Tr C_(F|u)|` from the closed-form case analysis on `beta`, `Tr F`,
/// `gamma` and `u`. Odd `d` only.
pub fn clifford_trace_abs(c: &CliffordElement, d: PrimeDim) -> Result<f64> {
    if d.is_qubit() {
        return Err(Error::EvenDim);
    }
    let f = c.f;
    let [u1, u2] = c.u;
    let tr = f.trace(d);
    let sqrt_d = libm::sqrt(d.get() as f64);
    let delta = |b: bool| if b { 1.0 } else { 0.0 };
    let ell = |x: u32| -> Result<f64> { Ok(legendre(d.elem(x as i64))?.unsigned_abs() as f64) };
    Ok(if f.beta == 0 {
        if tr != 2 {
            ell(f.alpha)?
        } else if f.gamma != 0 {
            ell(f.gamma)? * sqrt_d * delta(u1 == 0)
        } else {
            d.get() as f64 * delta(u1 == 0 && u2 == 0)
        }
    } else if tr != 2 {
        ell(d.sub(tr, 2))?
    } else {
        let binv = d.inv(f.beta)?;
        let want = d.mul(binv, d.mul(d.sub(1, f.alpha), u1));
        ell(d.neg(f.beta))? * sqrt_d * delta(u2 == want)
    })
}

/// The Clifford group of one qudit with an index-based multiplication.
#[derive(Clone, Debug)]
pub struct CliffordGroup {
    d: PrimeDim,
    sl2: Vec<Sl2>,
    sl2_index: Vec<u32>,
    /// Full product table; only built for qubits, where `(F|u)` labels do
    /// not compose as a semidirect product.
    table: Option<Vec<u32>>,
}

impl CliffordGroup {
    pub fn new(d: PrimeDim) -> Self {
        let p = d.get() as usize;
        let sl2 = Sl2::enumerate(d);
        let mut sl2_index = vec![u32::MAX; p.pow(4)];
        for (i, m) in sl2.iter().enumerate() {
            sl2_index[Self::sl2_key(p, m)] = i as u32;
        }
        let mut g = CliffordGroup {
            d,
            sl2,
            sl2_index,
            table: None,
        };
        if d.is_qubit() {
            g.table = Some(g.dense_table());
        }
        g
    }

    fn sl2_key(p: usize, m: &Sl2) -> usize {
        ((m.alpha as usize * p + m.beta as usize) * p + m.gamma as usize) * p + m.delta as usize
    }

    pub fn dim(&self) -> PrimeDim {
        self.d
    }

    pub fn len(&self) -> usize {
        self.sl2.len() * (self.d.get() as usize).pow(2)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn element(&self, i: usize) -> CliffordElement {
        let p = self.d.get() as usize;
        let f = self.sl2[i / (p * p)];
        let r = i % (p * p);
        CliffordElement {
            f,
            u: [(r / p) as u32, (r % p) as u32],
        }
    }

    pub fn index_of(&self, c: &CliffordElement) -> usize {
        let p = self.d.get() as usize;
        let f = self.sl2_index[Self::sl2_key(p, &c.f)] as usize;
        f * p * p + c.u[0] as usize * p + c.u[1] as usize
    }

    pub fn elements(&self) -> impl Iterator<Item = CliffordElement> + '_ {
        (0..self.len()).map(move |i| self.element(i))
    }

    pub fn identity_index(&self) -> usize {
        self.index_of(&CliffordElement::identity())
    }

    /// Index of `C_a C_b` (up to phase).
    pub fn compose(&self, a: usize, b: usize) -> usize {
        if let Some(t) = &self.table {
            return t[a * self.len() + b] as usize;
        }
        let d = self.d;
        let (x, y) = (self.element(a), self.element(b));
        let fv = x.f.apply(d, y.u);
        self.index_of(&CliffordElement {
            f: x.f.mul(&y.f, d),
            u: [d.add(x.u[0], fv[0]), d.add(x.u[1], fv[1])],
        })
    }

    pub fn inverse(&self, a: usize) -> usize {
        if self.table.is_some() {
            let id = self.identity_index();
            return (0..self.len())
                .find(|&b| self.compose(a, b) == id)
                .expect("group element has an inverse");
        }
        let d = self.d;
        let x = self.element(a);
        let finv = x.f.inverse(d);
        let v = finv.apply(d, x.u);
        self.index_of(&CliffordElement {
            f: finv,
            u: [d.neg(v[0]), d.neg(v[1])],
        })
    }

    /// Index of the element whose unitary is proportional to `m`.
    pub fn identify(&self, m: &DenseMatrix) -> Option<usize> {
        let p = self.d.get() as f64;
        (0..self.len()).find(|&i| {
            let c = clifford_unitary(&self.element(i), self.d);
            (c.trace_product_adjoint(m).norm() - p).abs() < 1e-8
        })
    }

    /// Product of `C_a C_b` identified from the dense product.
    pub fn compose_dense(&self, a: usize, b: usize) -> Option<usize> {
        let m = clifford_unitary(&self.element(a), self.d)
            .mul(&clifford_unitary(&self.element(b), self.d));
        self.identify(&m)
    }

    fn dense_table(&self) -> Vec<u32> {
        let n = self.len();
        let us: Vec<DenseMatrix> = self
            .elements()
            .map(|c| clifford_unitary(&c, self.d))
            .collect();
        let mut t = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let m = us[a].mul(&us[b]);
                let p = self.d.get() as f64;
                let hit = us
                    .iter()
                    .position(|c| (c.trace_product_adjoint(&m).norm() - p).abs() < 1e-8)
                    .expect("Clifford group is closed");
                t[a * n + b] = hit as u32;
            }
        }
        t
    }

    pub fn conjugate(&self, g: usize, t: usize) -> usize {
        self.compose(self.compose(g, t), self.inverse(g))
    }

    /// Conjugacy classes of the elements in `subset`, each class sorted,
    /// classes ordered by smallest member. Panics if `subset` is not a
    /// union of classes.
    pub fn conjugacy_classes(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut member = vec![false; self.len()];
        for &t in subset {
            member[t] = true;
        }
        let mut seen = vec![false; self.len()];
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        let mut classes = Vec::new();
        for &t in &sorted {
            if seen[t] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..self.len() {
                let c = self.conjugate(g, t);
                assert!(member[c], "subset is not closed under conjugation");
                if !seen[c] {
                    seen[c] = true;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }
}

impl FiniteGroup for CliffordGroup {
    fn order(&self) -> usize {
        self.len()
    }

    fn identity(&self) -> usize {
        self.identity_index()
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.compose(a, b)
    }

    fn inv(&self, a: usize) -> usize {
        self.inverse(a)
    }
}

/// `T = {C : Tr C = 0}` as group indices. Odd `d` only.
pub fn traceless_set(group: &CliffordGroup) -> Result<Vec<usize>> {
    let d = group.dim();
    if d.is_qubit() {
        return Err(Error::EvenDim);
    }
    let mut out = Vec::new();
    for (i, c) in group.elements().enumerate() {
        if clifford_trace_abs(&c, d)? < 0.5 {
            out.push(i);
        }
    }
    Ok(out)
}

/// `[d(d-1)+1](d^2-1)`.
pub fn traceless_count(d: PrimeDim) -> usize {
    let p = d.get() as usize;
    (p * (p - 1) + 1) * (p * p - 1)
}

#[derive(Clone, Debug)]
pub struct JamiolkowskiState {
    pub source: CliffordElement,
    pub vector: Vec<C64>,
}

/// `(I (x) C)|Phi>` with `|Phi> = d^{-1/2} sum_j |j>|j>`.
pub fn jamiolkowski_state(c: &CliffordElement, d: PrimeDim) -> JamiolkowskiState {
    let u = clifford_unitary(c, d);
    let p = d.get() as usize;
    let norm = 1.0 / libm::sqrt(p as f64);
    let mut vector = vec![C64::new(0.0, 0.0); p * p];
    for j in 0..p {
        for i in 0..p {
            vector[j * p + i] = u[(i, j)] * norm;
        }
    }
    JamiolkowskiState {
        source: *c,
        vector,
    }
}
