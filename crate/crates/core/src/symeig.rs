//! Real symmetric eigendecomposition: Householder tridiagonalisation
//! followed by implicit QL with shifts (the EISPACK `tred2`/`tql2` pair).
//!
//! Matrices are square, row-major `Vec<f64>`.

use alloc::vec;
use alloc::vec::Vec;

/// Eigenvalues ascending; `vectors[r * n + k]` is row `r` of eigenvector `k`.
#[derive(Clone, Debug)]
pub struct SymEigen {
    pub n: usize,
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
}

impl SymEigen {
    pub fn max(&self) -> f64 {
        self.values[self.n - 1]
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    /// `sum_k f(lambda_k) v_k v_k^T`.
    pub fn rebuild(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        let n = self.n;
        let w: Vec<f64> = self.values.iter().map(|&l| f(l)).collect();
        let mut out = vec![0.0; n * n];
        for k in 0..n {
            if w[k] == 0.0 {
                continue;
            }
            for r in 0..n {
                let vr = self.vectors[r * n + k] * w[k];
                if vr == 0.0 {
                    continue;
                }
                for c in r..n {
                    out[r * n + c] += vr * self.vectors[c * n + k];
                }
            }
        }
        for r in 0..n {
            for c in 0..r {
                out[r * n + c] = out[c * n + r];
            }
        }
        out
    }
}

pub fn sym_eigen(a: &[f64], n: usize) -> SymEigen {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        return SymEigen {
            n,
            values: Vec::new(),
            vectors: Vec::new(),
        };
    }
    let mut v: Vec<Vec<f64>> = (0..n).map(|r| a[r * n..(r + 1) * n].to_vec()).collect();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut v, &mut d, &mut e);
    tql2(&mut v, &mut d, &mut e);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].total_cmp(&d[j]));
    let values = order.iter().map(|&i| d[i]).collect();
    let mut vectors = vec![0.0; n * n];
    for r in 0..n {
        for (k, &src) in order.iter().enumerate() {
            vectors[r * n + k] = v[r][src];
        }
    }
    SymEigen { n, values, vectors }
}

/// Largest eigenvalue only (still a full decomposition).
pub fn sym_max_eigenvalue(a: &[f64], n: usize) -> f64 {
    sym_eigen(a, n).max()
}

fn tred2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for j in 0..n {
        d[j] = v[n - 1][j];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
                v[j][i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = libm::sqrt(h);
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[j][i] = f;
                g = e[j] + v[j][j] * f;
                for k in j + 1..i {
                    g += v[k][j] * d[k];
                    e[k] += v[k][j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k][j] -= f * e[k] + g * d[k];
                }
                d[j] = v[i - 1][j];
                v[i][j] = 0.0;
            }
        }
        d[i] = h;
    }
    for i in 0..n - 1 {
        v[n - 1][i] = v[i][i];
        v[i][i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k][i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k][i + 1] * v[k][j];
                }
                for k in 0..=i {
                    v[k][j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k][i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[n - 1][j];
        v[n - 1][j] = 0.0;
    }
    v[n - 1][n - 1] = 1.0;
    e[0] = 0.0;
}

fn tql2(v: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = libm::hypot(p, 1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().take(n).skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = libm::hypot(p, e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    for row in v.iter_mut() {
                        h = row[i + 1];
                        row[i + 1] = s * row[i] + c * h;
                        row[i] = c * row[i] - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 || iter > 200 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_sym(n: usize, seed: u64) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = vec![0.0; n * n];
        for r in 0..n {
            for c in r..n {
                let x = rng.gen_range(-1.0..1.0);
                a[r * n + c] = x;
                a[c * n + r] = x;
            }
        }
        a
    }

    #[test]
    fn reconstructs_random_matrices() {
        for (n, seed) in [(1, 0), (2, 1), (3, 2), (10, 3), (57, 4), (120, 5)] {
            let a = random_sym(n, seed);
            let e = sym_eigen(&a, n);
            let back = e.rebuild(|l| l);
            let err = a
                .iter()
                .zip(&back)
                .map(|(x, y)| (x - y).abs())
                .fold(0.0, f64::max);
            assert!(err < 1e-10, "n={n} err={err}");
            for k in 0..n {
                for l in 0..n {
                    let dot: f64 = (0..n)
                        .map(|r| e.vectors[r * n + k] * e.vectors[r * n + l])
                        .sum();
                    let want = if k == l { 1.0 } else { 0.0 };
                    assert!((dot - want).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn cycle_adjacency_spectrum() {
        // eigenvalues of C_n adjacency are 2 cos(2 pi k / n)
        let n = 7;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            a[i * n + (i + 1) % n] = 1.0;
            a[((i + 1) % n) * n + i] = 1.0;
        }
        let e = sym_eigen(&a, n);
        let mut want: Vec<f64> = (0..n)
            .map(|k| 2.0 * libm::cos(2.0 * core::f64::consts::PI * k as f64 / n as f64))
            .collect();
        want.sort_by(f64::total_cmp);
        for (x, y) in e.values.iter().zip(&want) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn repeated_eigenvalues() {
        // J_n has spectrum {n, 0, ..., 0}
        let n = 9;
        let a = vec![1.0; n * n];
        let e = sym_eigen(&a, n);
        assert!((e.max() - n as f64).abs() < 1e-12);
        assert!(e.values[..n - 1].iter().all(|x| x.abs() < 1e-12));
    }
}
