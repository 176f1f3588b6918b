//! n-qudit Pauli operators in symplectic form, their dense matrices and
//! eigenprojectors.
//!
//! A [`SymplecticPauli`] stores `zeta^phase * P_(x|z)` where `P_(x|z)` is
//! `X^x Z^z` for odd `d` and `i^{x.z} X^x Z^z` for qubits (so `P_(1|1) = Y`),
//! and `zeta` is `omega = exp(2 pi i / d)` for odd `d` and `i` for qubits.
//! Internally products are done in the "raw" form `zeta^raw X^x Z^z`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{unit_root, DenseMatrix, C64, DEFAULT_MATRIX_CAP};
use crate::modular::PrimeDim;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticPauli {
    d: PrimeDim,
    x: Vec<u32>,
    z: Vec<u32>,
    phase: u32,
}

impl SymplecticPauli {
    pub fn new(d: PrimeDim, x: Vec<u32>, z: Vec<u32>, phase: u32) -> Result<Self> {
        if x.len() != z.len() || x.is_empty() {
            return Err(Error::ShapeMismatch);
        }
        let x = x.into_iter().map(|v| v % d.get()).collect();
        let z = z.into_iter().map(|v| v % d.get()).collect();
        Ok(SymplecticPauli {
            d,
            x,
            z,
            phase: phase % d.phase_order(),
        })
    }

    pub fn single(d: PrimeDim, x: u32, z: u32) -> Self {
        Self::new(d, vec![x], vec![z], 0).expect("single-qudit shape")
    }

    pub fn identity(d: PrimeDim, n: usize) -> Self {
        Self::new(d, vec![0; n], vec![0; n], 0).expect("n >= 1")
    }

    /// `zeta^raw X^x Z^z`.
    pub fn from_raw(d: PrimeDim, x: Vec<u32>, z: Vec<u32>, raw: u32) -> Result<Self> {
        let mut p = Self::new(d, x, z, 0)?;
        let order = d.phase_order();
        p.phase = (raw % order + order - p.qubit_offset()) % order;
        Ok(p)
    }

    #[inline]
    pub fn dim(&self) -> PrimeDim {
        self.d
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn x(&self) -> &[u32] {
        &self.x
    }

    pub fn z(&self) -> &[u32] {
        &self.z
    }

    /// Exponent of `zeta` in front of `P_(x|z)`.
    pub fn phase(&self) -> u32 {
        self.phase
    }

    pub fn with_phase(mut self, phase: u32) -> Self {
        self.phase = phase % self.d.phase_order();
        self
    }

    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&v| v == 0)
    }

    fn qubit_offset(&self) -> u32 {
        if self.d.is_qubit() {
            (self.x.iter().zip(&self.z).map(|(a, b)| a * b).sum::<u32>()) % 4
        } else {
            0
        }
    }

    /// Exponent of `zeta` in the `zeta^raw X^x Z^z` form.
    pub fn raw_phase(&self) -> u32 {
        (self.phase + self.qubit_offset()) % self.d.phase_order()
    }

    /// `m` with `zeta^phase = omega^m`, if the phase is a power of omega.
    pub fn omega_power(&self) -> Option<u32> {
        let step = self.d.omega_step();
        (self.phase % step == 0).then(|| self.phase / step)
    }

    /// Index of `(x|z)` in base `d`, `x` digits first.
    pub fn key(&self) -> u32 {
        let d = self.d.get();
        self.x
            .iter()
            .chain(&self.z)
            .fold(0u32, |acc, &v| acc * d + v)
    }

    pub fn mul(&self, rhs: &SymplecticPauli) -> Result<SymplecticPauli> {
        if self.d != rhs.d || self.n() != rhs.n() {
            return Err(Error::ShapeMismatch);
        }
        let d = self.d;
        let order = d.phase_order();
        let twist: u64 = self
            .z
            .iter()
            .zip(&rhs.x)
            .map(|(&a, &b)| (a as u64) * (b as u64))
            .sum();
        let raw = (self.raw_phase() as u64
            + rhs.raw_phase() as u64
            + d.omega_step() as u64 * twist)
            % order as u64;
        let x = self.x.iter().zip(&rhs.x).map(|(&a, &b)| d.add(a, b)).collect();
        let z = self.z.iter().zip(&rhs.z).map(|(&a, &b)| d.add(a, b)).collect();
        SymplecticPauli::from_raw(d, x, z, raw as u32)
    }

    pub fn pow(&self, e: u32) -> SymplecticPauli {
        let mut acc = SymplecticPauli::identity(self.d, self.n());
        for _ in 0..e {
            acc = acc.mul(self).expect("same shape");
        }
        acc
    }

    /// `self (x) rhs`; phases add because `P_(x|z)` factorises site by site.
    pub fn tensor(&self, rhs: &SymplecticPauli) -> Result<SymplecticPauli> {
        if self.d != rhs.d {
            return Err(Error::ShapeMismatch);
        }
        let mut x = self.x.clone();
        x.extend_from_slice(&rhs.x);
        let mut z = self.z.clone();
        z.extend_from_slice(&rhs.z);
        SymplecticPauli::new(self.d, x, z, self.phase + rhs.phase)
    }

    /// Single-qudit factor at `site`, without the global phase.
    pub fn factor(&self, site: usize) -> SymplecticPauli {
        SymplecticPauli::single(self.d, self.x[site], self.z[site])
    }

    pub fn matrix(&self) -> Result<DenseMatrix> {
        pauli_matrix_with_cap(self, DEFAULT_MATRIX_CAP)
    }
}

impl fmt::Display for SymplecticPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.phase != 0 {
            let unit = if self.d.is_qubit() { "i" } else { "w" };
            write!(f, "{unit}^{} ", self.phase)?;
        }
        write!(f, "P{}", PauliLabel::fmt_xz(&self.x, &self.z))
    }
}

/// Dense `d^n x d^n` matrix of a Pauli operator.
pub fn pauli_matrix(p: &SymplecticPauli) -> Result<DenseMatrix> {
    pauli_matrix_with_cap(p, DEFAULT_MATRIX_CAP)
}

pub fn pauli_matrix_with_cap(p: &SymplecticPauli, cap: usize) -> Result<DenseMatrix> {
    let d = p.d.get() as usize;
    let n = p.n();
    let dim = d
        .checked_pow(n as u32)
        .filter(|&v| v <= cap)
        .ok_or(Error::DimensionOverflow {
            dim: d.saturating_pow(n as u32),
            cap,
        })?;
    let order = p.d.phase_order();
    let step = p.d.omega_step() as i64;
    let raw = p.raw_phase() as i64;
    let mut m = DenseMatrix::zeros(dim);
    let mut digits = vec![0usize; n];
    for col in 0..dim {
        // digits of col, most significant first
        let mut rem = col;
        for s in (0..n).rev() {
            digits[s] = rem % d;
            rem /= d;
        }
        let mut row = 0usize;
        let mut zexp = 0i64;
        for s in 0..n {
            row = row * d + (digits[s] + p.x[s] as usize) % d;
            zexp += p.z[s] as i64 * digits[s] as i64;
        }
        m[(row, col)] = unit_root(order, raw + step * zexp);
    }
    Ok(m)
}

pub fn symplectic_commutes(p: &SymplecticPauli, q: &SymplecticPauli) -> Result<bool> {
    Ok(symplectic_form(p, q)? == 0)
}

/// `sum_i (x_i z'_i - x'_i z_i) mod d`.
pub fn symplectic_form(p: &SymplecticPauli, q: &SymplecticPauli) -> Result<u32> {
    if p.d != q.d || p.n() != q.n() {
        return Err(Error::ShapeMismatch);
    }
    let d = p.d;
    let mut acc = 0i64;
    for i in 0..p.n() {
        acc += p.x[i] as i64 * q.z[i] as i64 - q.x[i] as i64 * p.z[i] as i64;
    }
    Ok(d.reduce(acc))
}

/// `(x|z)[k]`: the omega^k eigenspace label of `P_(x|z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliLabel {
    pub x: Vec<u32>,
    pub z: Vec<u32>,
    pub k: u32,
}

impl PauliLabel {
    fn fmt_xz(x: &[u32], z: &[u32]) -> String {
        use core::fmt::Write;
        let mut s = String::from("(");
        for (i, v) in x.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{v}");
        }
        s.push('|');
        for (i, v) in z.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{v}");
        }
        s.push(')');
        s
    }
}

impl fmt::Display for PauliLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", Self::fmt_xz(&self.x, &self.z), self.k)
    }
}

/// A Hermitian idempotent with a tensor-factor label.
#[derive(Clone, Debug)]
pub struct Projector {
    pub matrix: DenseMatrix,
    pub rank: usize,
    /// One entry per tensor factor; a single entry for an unsplit projector.
    pub label: Vec<PauliLabel>,
}

impl Projector {
    pub fn label_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::new();
        for (i, l) in self.label.iter().enumerate() {
            if i > 0 {
                s.push_str(" x ");
            }
            let _ = write!(s, "{l}");
        }
        s
    }

    /// `max(|P^2 - P|, |P - P^dagger|, |tr P - rank|)`.
    pub fn defect(&self) -> f64 {
        let m = &self.matrix;
        let idem = m.mul(m).max_abs_diff(m);
        let herm = m.hermitian_deviation();
        let tr = (m.trace() - C64::new(self.rank as f64, 0.0)).norm();
        idem.max(herm).max(tr)
    }

    pub fn tensor(&self, rhs: &Projector) -> Projector {
        let mut label = self.label.clone();
        label.extend(rhs.label.iter().cloned());
        Projector {
            matrix: self.matrix.kron(&rhs.matrix),
            rank: self.rank * rhs.rank,
            label,
        }
    }
}

/// `Pi_[k] = (1/d) sum_j omega^{-jk} p^j`, the projector onto the
/// `omega^k` eigenspace of `p`.
pub fn eigenprojector(p: &SymplecticPauli, k: u32) -> Result<Projector> {
    if p.is_identity() {
        return Err(Error::IdentityPauli);
    }
    let m = p.omega_power().ok_or(Error::NonObservablePhase)?;
    let d = p.d.get();
    let base = SymplecticPauli::new(p.d, p.x.clone(), p.z.clone(), 0)?;
    let pm = base.matrix()?;
    // omega^m P has its omega^k eigenspace where P has eigenvalue omega^{k-m}
    let shifted = (k % d + d - m % d) % d;
    let dim = pm.dim();
    let mut acc = DenseMatrix::zeros(dim);
    let mut power = DenseMatrix::identity(dim);
    for j in 0..d {
        let w = unit_root(d, -((j as i64) * shifted as i64));
        acc.add_assign(&power.scale(w));
        power = power.mul(&pm);
    }
    let matrix = acc.scale(C64::new(1.0 / d as f64, 0.0));
    Ok(Projector {
        matrix,
        rank: dim / d as usize,
        label: vec![PauliLabel {
            x: p.x.clone(),
            z: p.z.clone(),
            k: k % d,
        }],
    })
}

/// Splits the rank-`d` eigenprojector of a two-qudit product Pauli into
/// `d` rank-1 product projectors `Pi_(x1|z1)[a] (x) Pi_(x2|z2)[b]`, `a + b = k`.
pub fn rank1_decompose(p: &SymplecticPauli, k: u32) -> Result<Vec<Projector>> {
    if p.n() != 2 {
        return Err(Error::ShapeMismatch);
    }
    let f1 = p.factor(0);
    let f2 = p.factor(1);
    if f1.is_identity() || f2.is_identity() {
        return Err(Error::IdentityFactor);
    }
    let m = p.omega_power().ok_or(Error::NonObservablePhase)?;
    let d = p.d;
    let target = d.sub(k % d.get(), m % d.get());
    let firsts: Vec<Projector> = (0..d.get())
        .map(|a| eigenprojector(&f1, a))
        .collect::<Result<_>>()?;
    let seconds: Vec<Projector> = (0..d.get())
        .map(|b| eigenprojector(&f2, b))
        .collect::<Result<_>>()?;
    Ok((0..d.get())
        .map(|a| {
            let b = d.sub(target, a);
            firsts[a as usize].tensor(&seconds[b as usize])
        })
        .collect())
}

/// Unit vector spanning a rank-1 projector.
pub fn rank1_vector(p: &DenseMatrix) -> Vec<C64> {
    let n = p.dim();
    let best = (0..n)
        .max_by(|&a, &b| p[(a, a)].re.total_cmp(&p[(b, b)].re))
        .expect("non-empty");
    let mut v = p.column(best);
    crate::linalg::normalize(&mut v);
    v
}

/// Recognises `m` as `c * P` for a phased Pauli `P`, rounding the phase to
/// the nearest power of `zeta`. Returns `None` if `m` is not proportional to
/// a Pauli with a unit-modulus factor.
pub fn identify_pauli(m: &DenseMatrix, d: PrimeDim, n: usize) -> Option<SymplecticPauli> {
    let dd = d.get() as usize;
    let dim = dd.checked_pow(n as u32)?;
    if m.dim() != dim {
        return None;
    }
    let order = d.phase_order();
    for cand in all_paulis(d, n) {
        let pm = cand.matrix().ok()?;
        let c = pm.trace_product_adjoint(m) / dim as f64;
        if (c.norm() - 1.0).abs() > 1e-8 {
            continue;
        }
        let turns = libm::atan2(c.im, c.re) / (2.0 * core::f64::consts::PI) * order as f64;
        let k = (libm::round(turns) as i64).rem_euclid(order as i64) as u32;
        let p = cand.with_phase(k);
        let back = p.matrix().ok()?;
        return (back.max_abs_diff(m) < 1e-8).then_some(p);
    }
    None
}

/// All `d^{2n}` unsigned n-qudit Paulis, `key` order.
pub fn all_paulis(d: PrimeDim, n: usize) -> Vec<SymplecticPauli> {
    let dd = d.get();
    let total = (dd as usize).pow(2 * n as u32);
    (0..total)
        .map(|mut key| {
            let mut digits = vec![0u32; 2 * n];
            for s in (0..2 * n).rev() {
                digits[s] = (key % dd as usize) as u32;
                key /= dd as usize;
            }
            let z = digits.split_off(n);
            SymplecticPauli::new(d, digits, z, 0).expect("shape")
        })
        .collect()
}
