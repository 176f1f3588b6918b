//! Dense complex matrices over `C^{d^n}` and a Jacobi Hermitian eigensolver.
//!
//! Sizes here never exceed a few dozen rows (49 for two qudits at d = 7),
//! so everything is row-major `Vec<Complex64>` with no blocking.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::{Error, Result};

pub type C64 = Complex64;

/// Default cap on the side length of dense matrices built from Paulis.
pub const DEFAULT_MATRIX_CAP: usize = 1024;

/// `exp(2 pi i k / n)`, exact at quarter turns.
pub fn unit_root(n: u32, k: i64) -> C64 {
    let n = n as i64;
    let k = k.rem_euclid(n);
    if (4 * k) % n == 0 {
        return match (4 * k) / n {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        };
    }
    let t = 2.0 * PI * k as f64 / n as f64;
    C64::new(libm::cos(t), libm::sin(t))
}

#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<C64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        DenseMatrix { dim, data }
    }

    /// `|v><v|`.
    pub fn outer(v: &[C64]) -> Self {
        Self::from_fn(v.len(), |r, c| v[r] * v[c].conj())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn mul(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.data[r * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                let dst = &mut out.data[r * n..(r + 1) * n];
                for (o, b) in dst.iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        assert_eq!(self.dim, v.len());
        let n = self.dim;
        (0..n)
            .map(|r| {
                self.data[r * n..(r + 1) * n]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn adjoint(&self) -> DenseMatrix {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    pub fn kron(&self, rhs: &DenseMatrix) -> DenseMatrix {
        let (a, b) = (self.dim, rhs.dim);
        Self::from_fn(a * b, |r, c| self[(r / b, c / b)] * rhs[(r % b, c % b)])
    }

    pub fn add(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim);
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim);
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add_assign(&mut self, rhs: &DenseMatrix) {
        assert_eq!(self.dim, rhs.dim);
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }

    pub fn scale(&self, s: C64) -> DenseMatrix {
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    /// `Tr(self * rhs)` without forming the product.
    pub fn trace_product(&self, rhs: &DenseMatrix) -> C64 {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut acc = C64::new(0.0, 0.0);
        for r in 0..n {
            for k in 0..n {
                acc += self.data[r * n + k] * rhs.data[k * n + r];
            }
        }
        acc
    }

    /// `Tr(self^dagger * rhs)`, the Hilbert-Schmidt inner product.
    pub fn trace_product_adjoint(&self, rhs: &DenseMatrix) -> C64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, rhs: &DenseMatrix) -> f64 {
        assert_eq!(self.dim, rhs.dim);
        self.data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn hermitian_deviation(&self) -> f64 {
        let n = self.dim;
        let mut dev = 0.0f64;
        for r in 0..n {
            for c in r..n {
                dev = dev.max((self[(r, c)] - self[(c, r)].conj()).norm());
            }
        }
        dev
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_deviation() <= tol
    }

    pub fn unitarity_deviation(&self) -> f64 {
        self.mul(&self.adjoint())
            .max_abs_diff(&Self::identity(self.dim))
    }

    pub fn commutator(&self, rhs: &DenseMatrix) -> DenseMatrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn pow(&self, e: u32) -> DenseMatrix {
        let mut acc = Self::identity(self.dim);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Column `c` as a vector.
    pub fn column(&self, c: usize) -> Vec<C64> {
        (0..self.dim).map(|r| self[(r, c)]).collect()
    }
}

impl Index<(usize, usize)> for DenseMatrix {
    type Output = C64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &C64 {
        &self.data[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for DenseMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut C64 {
        &mut self.data[r * self.dim + c]
    }
}

pub fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn kron_vec(a: &[C64], b: &[C64]) -> Vec<C64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

pub fn normalize(v: &mut [C64]) {
    let norm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
    if norm > 0.0 {
        for z in v.iter_mut() {
            *z /= norm;
        }
    }
}

/// Spectrum of a Hermitian matrix: eigenvalues ascending, eigenvectors as
/// the matching columns of `vectors`.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: DenseMatrix,
}

impl HermitianEigen {
    pub fn max(&self) -> f64 {
        *self.values.last().expect("non-empty spectrum")
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn reconstruct(&self) -> DenseMatrix {
        let n = self.vectors.dim();
        DenseMatrix::from_fn(n, |r, c| {
            (0..n)
                .map(|k| self.vectors[(r, k)] * self.values[k] * self.vectors[(c, k)].conj())
                .sum()
        })
    }
}

/// Cyclic complex Jacobi diagonalisation.
pub fn hermitian_eigen(m: &DenseMatrix) -> Result<HermitianEigen> {
    let dev = m.hermitian_deviation();
    let scale = m.max_abs().max(1.0);
    if dev > 1e-10 * scale {
        return Err(Error::NotHermitian(dev));
    }
    let n = m.dim();
    let mut a = m.clone();
    // symmetrise exactly
    for r in 0..n {
        a[(r, r)] = C64::new(a[(r, r)].re, 0.0);
        for c in r + 1..n {
            let avg = (a[(r, c)] + a[(c, r)].conj()) * 0.5;
            a[(r, c)] = avg;
            a[(c, r)] = avg.conj();
        }
    }
    let mut v = DenseMatrix::identity(n);
    let frob: f64 = a.data.iter().map(|z| z.norm_sqr()).sum::<f64>();
    let target = 1e-30 * frob.max(1e-300);

    for _sweep in 0..100 {
        let mut off = 0.0;
        for r in 0..n {
            for c in r + 1..n {
                off += a[(r, c)].norm_sqr();
            }
        }
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r < 1e-300 {
                    continue;
                }
                let phase = apq / r; // e^{i phi}
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * r);
                let t = if theta.abs() > 1e150 {
                    1.0 / (2.0 * theta)
                } else {
                    let s = if theta >= 0.0 { 1.0 } else { -1.0 };
                    s / (theta.abs() + libm::sqrt(theta * theta + 1.0))
                };
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = t * c;
                let ph_conj = phase.conj();
                // A <- A G with G_pp = c, G_pq = s, G_qp = -s e^{-i phi}, G_qq = c e^{-i phi}
                for row in 0..n {
                    let ap = a[(row, p)];
                    let aq = a[(row, q)];
                    a[(row, p)] = ap * c - aq * ph_conj * s;
                    a[(row, q)] = ap * s + aq * ph_conj * c;
                }
                // A <- G^dagger A
                for col in 0..n {
                    let rp = a[(p, col)];
                    let rq = a[(q, col)];
                    a[(p, col)] = rp * c - rq * phase * s;
                    a[(q, col)] = rp * s + rq * phase * c;
                }
                a[(p, q)] = C64::new(0.0, 0.0);
                a[(q, p)] = C64::new(0.0, 0.0);
                a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
                for row in 0..n {
                    let vp = v[(row, p)];
                    let vq = v[(row, q)];
                    v[(row, p)] = vp * c - vq * ph_conj * s;
                    v[(row, q)] = vp * s + vq * ph_conj * c;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = DenseMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, seed: u64) -> DenseMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = DenseMatrix::zeros(n);
        for r in 0..n {
            m[(r, r)] = C64::new(rng.gen_range(-1.0..1.0), 0.0);
            for c in r + 1..n {
                let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m[(r, c)] = z;
                m[(c, r)] = z.conj();
            }
        }
        m
    }

    #[test]
    fn roots_are_exact_at_quarter_turns() {
        assert_eq!(unit_root(4, 1), C64::new(0.0, 1.0));
        assert_eq!(unit_root(2, 1), C64::new(-1.0, 0.0));
        assert_eq!(unit_root(4, -1), C64::new(0.0, -1.0));
        assert!((unit_root(3, 1) - C64::new(-0.5, libm::sqrt(3.0) / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn identity_spectrum() {
        let e = hermitian_eigen(&DenseMatrix::identity(6)).unwrap();
        assert!(e.values.iter().all(|&v| (v - 1.0).abs() < 1e-14));
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = DenseMatrix::zeros(2);
        m[(0, 1)] = C64::new(1.0, 0.0);
        assert!(matches!(hermitian_eigen(&m), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn reconstruction_and_orthonormality() {
        for (n, seed) in [(1, 1), (2, 2), (5, 3), (16, 4), (49, 5)] {
            let m = random_hermitian(n, seed);
            let e = hermitian_eigen(&m).unwrap();
            assert!(e.reconstruct().max_abs_diff(&m) < 1e-8, "n={n}");
            let vv = e.vectors.adjoint().mul(&e.vectors);
            assert!(vv.max_abs_diff(&DenseMatrix::identity(n)) < 1e-10);
            assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn kron_and_trace_product() {
        let a = random_hermitian(2, 7);
        let b = random_hermitian(3, 8);
        let k = a.kron(&b);
        assert!((k.trace() - a.trace() * b.trace()).norm() < 1e-12);
        let t1 = a.trace_product(&a);
        let t2 = a.mul(&a).trace();
        assert!((t1 - t2).norm() < 1e-12);
    }
}
