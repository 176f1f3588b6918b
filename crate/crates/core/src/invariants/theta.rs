//! Lovasz theta by an alternating-direction augmented Lagrangian method on
//! the dual SDP (Wen, Goldfarb and Yin), with rigorous bracketing.
//!
//! Primal: `min <C, X>` with `C = -J`, `Tr X = 1`, `X_ij = 0` on edges,
//! `X >= 0`. Every few iterations the iterates are turned into a feasible
//! primal point (lower bound) and a feasible dual point (upper bound).
//!
//! Graphs with few edges are first handed to a primal-dual interior-point
//! method, which keeps converging on degenerate instances where the
//! first-order method stalls.

use alloc::vec;
use alloc::vec::Vec;

use super::Status;
use crate::budget::Budget;
use crate::graph::Graph;
use crate::symeig::{sym_eigen, sym_max_eigenvalue};
use crate::{Error, Result};

pub const THETA_VERTEX_CAP: usize = 200;
/// Graphs with fewer edges than this go to the interior-point solver.
pub const IPM_CONSTRAINT_CAP: usize = 800;
const IPM_MAX_ITER: usize = 100;

#[derive(Clone, Debug)]
pub struct ThetaOptions {
    /// Stop once `upper - lower <= tol`.
    pub tol: f64,
    pub max_iter: usize,
    pub cap: usize,
    /// Iterations between certificate evaluations.
    pub check_every: usize,
    /// Edge count below which the interior-point method is tried first.
    pub ipm_max_constraints: usize,
}

impl Default for ThetaOptions {
    fn default() -> Self {
        ThetaOptions {
            tol: 1e-6,
            max_iter: 50_000,
            cap: THETA_VERTEX_CAP,
            check_every: 20,
            ipm_max_constraints: IPM_CONSTRAINT_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaResult {
    /// Midpoint of the certified bracket.
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
    pub gap: f64,
    pub status: Status,
    pub iterations: usize,
}

/// Upper bound `lambda_max(J + sum_e t_e (E_ij + E_ji))`, valid for any `t`.
fn dual_bound(n: usize, edges: &[(usize, usize)], t: &[f64]) -> f64 {
    let mut m = vec![1.0; n * n];
    for (&(i, j), &te) in edges.iter().zip(t) {
        m[i * n + j] += te;
        m[j * n + i] += te;
    }
    sym_max_eigenvalue(&m, n)
}

/// Lower bound from a near-feasible `X`: zero the edge entries, normalise
/// the trace and shift by the most negative eigenvalue.
fn primal_bound(n: usize, edges: &[(usize, usize)], x: &[f64]) -> Option<f64> {
    let mut y = x.to_vec();
    for &(i, j) in edges {
        y[i * n + j] = 0.0;
        y[j * n + i] = 0.0;
    }
    let tr: f64 = (0..n).map(|i| y[i * n + i]).sum();
    if !(tr > 0.0) {
        return None;
    }
    for v in y.iter_mut() {
        *v /= tr;
    }
    let shift = (-sym_eigen(&y, n).min()).max(0.0);
    let sum: f64 = y.iter().sum();
    let nf = n as f64;
    Some((sum + nf * shift) / (1.0 + nf * shift))
}

pub fn lovasz_theta<B: Budget + ?Sized>(g: &Graph, opts: &ThetaOptions, budget: &mut B) -> Result<ThetaResult> {
    let n = g.n();
    if n > opts.cap {
        return Err(Error::BudgetExceeded(alloc::format!(
            "theta: {n} vertices exceeds the SDP cap of {}",
            opts.cap
        )));
    }
    if n == 0 {
        return Ok(ThetaResult {
            value: 0.0,
            lower: 0.0,
            upper: 0.0,
            gap: 0.0,
            status: Status::Exact,
            iterations: 0,
        });
    }
    let edges = g.edges();
    let mut bracket = Bracket {
        lower: f64::NEG_INFINITY,
        upper: f64::INFINITY,
    };
    let mut iterations = 0;
    if edges.len() < opts.ipm_max_constraints {
        if let Some(r) = interior_point(n, &edges, opts, budget, &mut bracket, &mut iterations) {
            return r;
        }
    }
    admm(n, &edges, opts, budget, &mut bracket, iterations)
}

struct Bracket {
    lower: f64,
    upper: f64,
}

impl Bracket {
    fn update(&mut self, n: usize, edges: &[(usize, usize)], t: &[f64], x: &[f64]) {
        self.upper = self.upper.min(dual_bound(n, edges, t));
        if let Some(lb) = primal_bound(n, edges, x) {
            self.lower = self.lower.max(lb);
        }
    }

    fn result(&self, tol: f64, iterations: usize) -> Option<ThetaResult> {
        (self.upper - self.lower <= tol).then(|| ThetaResult {
            value: 0.5 * (self.lower + self.upper),
            lower: self.lower,
            upper: self.upper,
            gap: self.upper - self.lower,
            status: Status::Tolerance,
            iterations,
        })
    }

    fn failure(&self) -> Error {
        Error::NoConvergence {
            lower: self.lower,
            upper: self.upper,
        }
    }
}

fn admm<B: Budget + ?Sized>(
    n: usize,
    edges: &[(usize, usize)],
    opts: &ThetaOptions,
    budget: &mut B,
    bracket: &mut Bracket,
    done: usize,
) -> Result<ThetaResult> {
    let nf = n as f64;
    let s2 = core::f64::consts::SQRT_2;

    let mut x = vec![0.0; n * n];
    for i in 0..n {
        x[i * n + i] = 1.0 / nf;
    }
    let mut s = vec![0.0; n * n];
    let mut ye = vec![0.0; edges.len()];
    let mut mu = 5.0;
    let mut v = vec![0.0; n * n];

    for it in 1..=opts.max_iter {
        if budget.exhausted() {
            return Err(bracket.failure());
        }
        let trx: f64 = (0..n).map(|i| x[i * n + i]).sum();
        let trs: f64 = (0..n).map(|i| s[i * n + i]).sum();
        let y0 = -(mu * (trx - 1.0) + trs + nf) / nf;
        for (k, &(i, j)) in edges.iter().enumerate() {
            ye[k] = -s2 * (mu * x[i * n + j] + s[i * n + j] + 1.0);
        }
        // V = C - A*(y) - mu X
        for (vi, xi) in v.iter_mut().zip(&x) {
            *vi = -1.0 - mu * xi;
        }
        for i in 0..n {
            v[i * n + i] -= y0;
        }
        for (k, &(i, j)) in edges.iter().enumerate() {
            v[i * n + j] -= ye[k] / s2;
            v[j * n + i] -= ye[k] / s2;
        }
        let eig = sym_eigen(&v, n);
        s = eig.rebuild(|l| l.max(0.0));
        for ((xi, si), vi) in x.iter_mut().zip(&s).zip(&v) {
            *xi = (si - vi) / mu;
        }

        if it % 10 == 0 {
            let trx: f64 = (0..n).map(|i| x[i * n + i]).sum();
            let mut p = (trx - 1.0) * (trx - 1.0);
            for &(i, j) in edges {
                p += 2.0 * x[i * n + j] * x[i * n + j];
            }
            let pinf = libm::sqrt(p) / 2.0;
            // dual residual C - A*(y) - S = V + mu X - S
            let mut dsum = 0.0;
            for k in 0..n * n {
                let r = v[k] + mu * x[k] - s[k];
                dsum += r * r;
            }
            let dinf = libm::sqrt(dsum) / (1.0 + nf);
            let ratio = pinf / dinf.max(1e-300);
            if ratio < 0.5 {
                mu = (mu * 0.6).max(1e-4);
            } else if ratio > 2.0 {
                mu = (mu / 0.6).min(1e4);
            }
        }

        if it % opts.check_every == 0 || it == opts.max_iter {
            let t: Vec<f64> = ye.iter().map(|y| y / s2).collect();
            bracket.update(n, edges, &t, &x);
            if let Some(r) = bracket.result(opts.tol, done + it) {
                return Ok(r);
            }
        }
    }
    Err(bracket.failure())
}

/// In-place Cholesky `A = L L^T`, keeping `L` in the lower triangle.
fn cholesky(a: &mut [f64], n: usize) -> bool {
    for j in 0..n {
        let mut d = a[j * n + j];
        for k in 0..j {
            d -= a[j * n + k] * a[j * n + k];
        }
        if !(d > 0.0) {
            return false;
        }
        let d = libm::sqrt(d);
        a[j * n + j] = d;
        for i in j + 1..n {
            let mut s = a[i * n + j];
            for k in 0..j {
                s -= a[i * n + k] * a[j * n + k];
            }
            a[i * n + j] = s / d;
        }
    }
    true
}

/// Solves `L y = b` in place.
fn forward(l: &[f64], n: usize, b: &mut [f64]) {
    for i in 0..n {
        let mut s = b[i];
        for k in 0..i {
            s -= l[i * n + k] * b[k];
        }
        b[i] = s / l[i * n + i];
    }
}

/// Solves `L^T y = b` in place.
fn backward(l: &[f64], n: usize, b: &mut [f64]) {
    for i in (0..n).rev() {
        let mut s = b[i];
        for k in i + 1..n {
            s -= l[k * n + i] * b[k];
        }
        b[i] = s / l[i * n + i];
    }
}

fn matmul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    c
}

fn symmetrise(a: &mut [f64], n: usize) {
    for i in 0..n {
        for j in i + 1..n {
            let m = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = m;
            a[j * n + i] = m;
        }
    }
}

/// Inverse of a positive definite matrix, if the factorisation succeeds.
fn spd_inverse(a: &[f64], n: usize) -> Option<Vec<f64>> {
    let mut l = a.to_vec();
    if !cholesky(&mut l, n) {
        return None;
    }
    let mut inv = vec![0.0; n * n];
    let mut col = vec![0.0; n];
    for c in 0..n {
        col.iter_mut().for_each(|v| *v = 0.0);
        col[c] = 1.0;
        forward(&l, n, &mut col);
        backward(&l, n, &mut col);
        for r in 0..n {
            inv[r * n + c] = col[r];
        }
    }
    symmetrise(&mut inv, n);
    Some(inv)
}

/// Largest `a <= 1` with `X + a dX` positive semidefinite, scaled back by
/// 0.95; `None` if `X` is not positive definite.
fn step_length(x: &[f64], dx: &[f64], n: usize) -> Option<f64> {
    let mut l = x.to_vec();
    if !cholesky(&mut l, n) {
        return None;
    }
    // S = L^{-1} dX L^{-T}, built one column at a time
    let mut t = vec![0.0; n * n];
    let mut col = vec![0.0; n];
    for c in 0..n {
        for r in 0..n {
            col[r] = dx[r * n + c];
        }
        forward(&l, n, &mut col);
        for r in 0..n {
            t[c * n + r] = col[r];
        }
    }
    // t holds (L^{-1} dX)^T = dX L^{-T}; apply L^{-1} on the left again
    let mut s = vec![0.0; n * n];
    for c in 0..n {
        for r in 0..n {
            col[r] = t[r * n + c];
        }
        forward(&l, n, &mut col);
        for r in 0..n {
            s[r * n + c] = col[r];
        }
    }
    symmetrise(&mut s, n);
    let lmin = sym_eigen(&s, n).min();
    Some(if lmin >= 0.0 { 1.0 } else { (0.95 * -1.0 / lmin).min(1.0) })
}

/// `A(Y)`: `(Tr Y, Y_ij + Y_ji for each edge)`.
fn apply_a(y: &[f64], n: usize, edges: &[(usize, usize)]) -> Vec<f64> {
    let mut out = Vec::with_capacity(edges.len() + 1);
    out.push((0..n).map(|i| y[i * n + i]).sum());
    out.extend(edges.iter().map(|&(i, j)| y[i * n + j] + y[j * n + i]));
    out
}

/// `A*(y) = y_0 I + sum_e y_e (E_ij + E_ji)`.
fn apply_a_adjoint(y: &[f64], n: usize, edges: &[(usize, usize)]) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        out[i * n + i] = y[0];
    }
    for (k, &(i, j)) in edges.iter().enumerate() {
        out[i * n + j] += y[k + 1];
        out[j * n + i] += y[k + 1];
    }
    out
}

/// Infeasible primal-dual path following with the HKM direction and a
/// Mehrotra-style centring parameter, on
/// `min <-J, X>` s.t. `Tr X = 1`, `X_ij + X_ji = 0` on edges, `X >= 0`.
///
/// Returns `None` on numerical breakdown, leaving the bracket for the
/// caller's fallback.
fn interior_point<B: Budget + ?Sized>(
    n: usize,
    edges: &[(usize, usize)],
    opts: &ThetaOptions,
    budget: &mut B,
    bracket: &mut Bracket,
    iterations: &mut usize,
) -> Option<Result<ThetaResult>> {
    let k = edges.len() + 1;
    let nf = n as f64;
    let mut b = vec![0.0; k];
    b[0] = 1.0;
    let mut x = vec![0.0; n * n];
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        x[i * n + i] = 1.0 / nf;
        z[i * n + i] = nf;
    }
    let mut y = vec![0.0; k];

    for it in 1..=IPM_MAX_ITER {
        *iterations = it;
        if budget.exhausted() {
            return Some(Err(bracket.failure()));
        }
        let w = spd_inverse(&z, n)?;
        let aty = apply_a_adjoint(&y, n, edges);
        let rd: Vec<f64> = (0..n * n).map(|q| -1.0 - aty[q] - z[q]).collect();
        let mu = x.iter().zip(&z).map(|(a, b)| a * b).sum::<f64>() / nf;

        // Schur complement M_pq = Tr(A_p X A_q W)
        let xw = matmul(&x, &w, n);
        let mut m = vec![0.0; k * k];
        m[0] = x.iter().zip(&w).map(|(a, b)| a * b).sum();
        for (e, &(i, j)) in edges.iter().enumerate() {
            let v = xw[j * n + i] + xw[i * n + j];
            m[e + 1] = v;
            m[(e + 1) * k] = v;
        }
        for (p, &(i, j)) in edges.iter().enumerate() {
            for (q, &(a, c)) in edges.iter().enumerate().skip(p) {
                let v = x[j * n + a] * w[c * n + i]
                    + x[j * n + c] * w[a * n + i]
                    + x[i * n + a] * w[c * n + j]
                    + x[i * n + c] * w[a * n + j];
                m[(p + 1) * k + q + 1] = v;
                m[(q + 1) * k + p + 1] = v;
            }
        }
        if !cholesky(&mut m, k) {
            return None;
        }
        let aw = apply_a(&w, n, edges);
        let xrdw = matmul(&matmul(&x, &rd, n), &w, n);
        let axrdw = apply_a(&xrdw, n, edges);

        let direction = |sigma: f64| -> (Vec<f64>, Vec<f64>, Vec<f64>) {
            let mut dy: Vec<f64> = (0..k).map(|q| b[q] - sigma * mu * aw[q] + axrdw[q]).collect();
            forward(&m, k, &mut dy);
            backward(&m, k, &mut dy);
            let atdy = apply_a_adjoint(&dy, n, edges);
            let dz: Vec<f64> = (0..n * n).map(|q| rd[q] - atdy[q]).collect();
            let xdzw = matmul(&matmul(&x, &dz, n), &w, n);
            let mut dx: Vec<f64> = (0..n * n).map(|q| sigma * mu * w[q] - x[q]).collect();
            for r in 0..n {
                for c in 0..n {
                    dx[r * n + c] -= 0.5 * (xdzw[r * n + c] + xdzw[c * n + r]);
                }
            }
            (dx, dy, dz)
        };

        let (dx, _, dz) = direction(0.0);
        let ap = step_length(&x, &dx, n)?;
        let ad = step_length(&z, &dz, n)?;
        let mut gap_aff = 0.0;
        for q in 0..n * n {
            gap_aff += (x[q] + ap * dx[q]) * (z[q] + ad * dz[q]);
        }
        let r = ((gap_aff / nf) / mu).clamp(0.0, 1.0);
        let sigma = r * r * r;
        let (dx, dy, dz) = direction(sigma);
        let ap = step_length(&x, &dx, n)?;
        let ad = step_length(&z, &dz, n)?;
        for q in 0..n * n {
            x[q] += ap * dx[q];
            z[q] += ad * dz[q];
        }
        for q in 0..k {
            y[q] += ad * dy[q];
        }
        symmetrise(&mut x, n);
        symmetrise(&mut z, n);

        bracket.update(n, edges, &y[1..], &x);
        if let Some(r) = bracket.result(opts.tol, it) {
            return Some(Ok(r));
        }
        if !(mu > 1e-14) {
            return None;
        }
    }
    None
}

/// `theta(C_n)` for odd `n`.
pub fn odd_cycle_theta(n: usize) -> f64 {
    let c = libm::cos(core::f64::consts::PI / n as f64);
    n as f64 * c / (1.0 + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{NodeBudget, Unlimited};

    #[test]
    fn odd_cycles_match_closed_form() {
        for k in 2..=6 {
            let n = 2 * k + 1;
            let r = lovasz_theta(&Graph::cycle(n), &ThetaOptions::default(), &mut Unlimited).unwrap();
            let want = odd_cycle_theta(n);
            assert!(r.lower <= want + 1e-9 && want <= r.upper + 1e-9, "n={n} {r:?}");
            assert!((r.value - want).abs() < 1e-5);
        }
    }

    #[test]
    fn first_order_route_alone() {
        let opts = ThetaOptions {
            ipm_max_constraints: 0,
            ..Default::default()
        };
        for n in [5, 7, 9] {
            let r = lovasz_theta(&Graph::cycle(n), &opts, &mut Unlimited).unwrap();
            assert!((r.value - odd_cycle_theta(n)).abs() < 1e-5);
        }
    }

    #[test]
    fn routes_agree_on_or_product() {
        let g = Graph::or_product(&Graph::cycle(5), &Graph::complete(2));
        let ipm = lovasz_theta(&g, &ThetaOptions::default(), &mut Unlimited).unwrap();
        let opts = ThetaOptions {
            ipm_max_constraints: 0,
            ..Default::default()
        };
        let admm = lovasz_theta(&g, &opts, &mut Unlimited).unwrap();
        assert!((ipm.value - admm.value).abs() < 2e-6);
    }

    #[test]
    fn complete_and_edgeless() {
        let r = lovasz_theta(&Graph::complete(5), &ThetaOptions::default(), &mut Unlimited).unwrap();
        assert!((r.value - 1.0).abs() < 1e-5);
        let r = lovasz_theta(&Graph::empty(4), &ThetaOptions::default(), &mut Unlimited).unwrap();
        assert!((r.value - 4.0).abs() < 1e-5);
    }

    #[test]
    fn cap_and_budget() {
        let opts = ThetaOptions {
            cap: 4,
            ..Default::default()
        };
        assert!(matches!(
            lovasz_theta(&Graph::cycle(5), &opts, &mut Unlimited),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(matches!(
            lovasz_theta(&Graph::cycle(9), &ThetaOptions::default(), &mut NodeBudget::new(3)),
            Err(Error::NoConvergence { .. })
        ));
    }
}
