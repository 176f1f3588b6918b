//! Fractional packing number `alpha*`: maximal cliques by pivoting
//! Bron-Kerbosch, then an exact rational simplex.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::budget::Budget;
use crate::graph::{bits, Graph};
use crate::{Error, Result};

struct Bk<'a, B: Budget + ?Sized> {
    g: &'a Graph,
    out: Vec<Vec<usize>>,
    budget: &'a mut B,
}

impl<B: Budget + ?Sized> Bk<'_, B> {
    fn go(&mut self, r: &mut Vec<usize>, p: Vec<u64>, x: Vec<u64>) -> Result<()> {
        if self.budget.exhausted() {
            return Err(Error::BudgetExceeded(String::from("maximal clique enumeration")));
        }
        if bits::is_empty(&p) && bits::is_empty(&x) {
            let mut c = r.clone();
            c.sort_unstable();
            self.out.push(c);
            return Ok(());
        }
        // pivot maximising |P cap N(u)|
        let pivot = bits::iter(&p)
            .chain(bits::iter(&x))
            .max_by_key(|&u| {
                let nu = self.g.row(u);
                (
                    p.iter().zip(nu).map(|(a, b)| (a & b).count_ones()).sum::<u32>(),
                    core::cmp::Reverse(u),
                )
            })
            .expect("P or X non-empty");
        let nu = self.g.row(pivot).to_vec();
        let cands: Vec<usize> = bits::iter(&p).filter(|&v| !bits::test(&nu, v)).collect();
        let (mut p, mut x) = (p, x);
        for v in cands {
            let nv = self.g.row(v);
            let p2: Vec<u64> = p.iter().zip(nv).map(|(a, b)| a & b).collect();
            let x2: Vec<u64> = x.iter().zip(nv).map(|(a, b)| a & b).collect();
            r.push(v);
            self.go(r, p2, x2)?;
            r.pop();
            bits::clear(&mut p, v);
            bits::set(&mut x, v);
        }
        Ok(())
    }
}

/// All maximal cliques, each sorted, in lexicographic order.
pub fn maximal_cliques<B: Budget + ?Sized>(g: &Graph, budget: &mut B) -> Result<Vec<Vec<usize>>> {
    let mut bk = Bk {
        g,
        out: Vec::new(),
        budget,
    };
    let p = bits::full(g.n());
    let x = vec![0u64; g.words()];
    if g.n() > 0 {
        bk.go(&mut Vec::new(), p, x)?;
    }
    let mut out = bk.out;
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PackingResult {
    pub value: BigRational,
    /// Optimal vertex weights.
    pub weights: Vec<BigRational>,
    /// Optimal dual: a weight per maximal clique (a fractional clique cover).
    pub clique_weights: Vec<BigRational>,
    pub cliques: Vec<Vec<usize>>,
}

impl PackingResult {
    pub fn as_f64(&self) -> f64 {
        ratio_to_f64(&self.value)
    }

    /// Re-checks primal and dual feasibility and equal objectives.
    pub fn certify(&self, n: usize) -> bool {
        let zero = BigRational::zero();
        let one = BigRational::one();
        if self.weights.len() != n || self.weights.iter().any(|w| *w < zero) {
            return false;
        }
        if self.clique_weights.iter().any(|w| *w < zero) {
            return false;
        }
        for c in &self.cliques {
            let s: BigRational = c.iter().map(|&v| self.weights[v].clone()).sum();
            if s > one {
                return false;
            }
        }
        let mut cover = vec![zero.clone(); n];
        for (c, y) in self.cliques.iter().zip(&self.clique_weights) {
            for &v in c {
                cover[v] += y;
            }
        }
        if cover.iter().any(|s| *s < one) {
            return false;
        }
        let primal: BigRational = self.weights.iter().cloned().sum();
        let dual: BigRational = self.clique_weights.iter().cloned().sum();
        primal == self.value && dual == self.value
    }
}

pub fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `max sum x_v` subject to `sum_{v in Q} x_v <= 1` for every maximal
/// clique `Q` and `x >= 0`, in exact rational arithmetic.
pub fn fractional_packing<B: Budget + ?Sized>(g: &Graph, budget: &mut B) -> Result<PackingResult> {
    let n = g.n();
    let cliques = maximal_cliques(g, budget)?;
    let m = cliques.len();
    let cols = n + m;
    let zero = BigRational::zero();
    let one = BigRational::one();

    // tableau rows: clique constraints with slack; last column is the rhs
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, c) in cliques.iter().enumerate() {
        let mut row = vec![zero.clone(); cols + 1];
        for &v in c {
            row[v] = one.clone();
        }
        row[n + i] = one.clone();
        row[cols] = one.clone();
        t.push(row);
    }
    // reduced costs for maximisation: z_j - c_j
    let mut obj = vec![zero.clone(); cols + 1];
    for o in obj.iter_mut().take(n) {
        *o = -one.clone();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    loop {
        if budget.exhausted() {
            return Err(Error::BudgetExceeded(String::from("fractional packing simplex")));
        }
        // Bland: lowest-index improving column
        let Some(enter) = (0..cols).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for (i, row) in t.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[cols] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (r, _) = leave.expect("packing LP is bounded");
        let piv = t[r][enter].clone();
        for v in t[r].iter_mut() {
            *v /= &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (a, b) in row.iter_mut().zip(&prow) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
        }
        let f = obj[enter].clone();
        for (a, b) in obj.iter_mut().zip(&prow) {
            if !b.is_zero() {
                *a -= &f * b;
            }
        }
        basis[r] = enter;
    }

    let mut weights = vec![zero.clone(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            weights[b] = t[i][cols].clone();
        }
    }
    let clique_weights = obj[n..cols].to_vec();
    Ok(PackingResult {
        value: obj[cols].clone(),
        weights,
        clique_weights,
        cliques,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{NodeBudget, Unlimited};
    use num_bigint::BigInt;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn maximal_cliques_of_small_graphs() {
        assert_eq!(maximal_cliques(&Graph::cycle(5), &mut Unlimited).unwrap().len(), 5);
        assert_eq!(maximal_cliques(&Graph::complete(4), &mut Unlimited).unwrap(), [vec![0, 1, 2, 3]]);
        assert_eq!(maximal_cliques(&Graph::empty(3), &mut Unlimited).unwrap(), [vec![0], vec![1], vec![2]]);
        let pan = Graph::pan(5).complement();
        for c in maximal_cliques(&pan, &mut Unlimited).unwrap() {
            assert!(pan.is_clique(&c));
        }
    }

    #[test]
    fn odd_cycles() {
        for k in 2..6 {
            let n = 2 * k + 1;
            let r = fractional_packing(&Graph::cycle(n), &mut Unlimited).unwrap();
            assert_eq!(r.value, q(n as i64, 2));
            assert!(r.certify(n));
        }
    }

    #[test]
    fn complete_and_empty() {
        assert_eq!(fractional_packing(&Graph::complete(6), &mut Unlimited).unwrap().value, q(1, 1));
        assert_eq!(fractional_packing(&Graph::empty(4), &mut Unlimited).unwrap().value, q(4, 1));
        assert!((ratio_to_f64(&q(5, 2)) - 2.5).abs() < 1e-15);
    }

    #[test]
    fn budget_is_reported() {
        let r = fractional_packing(&Graph::cycle(9), &mut NodeBudget::new(2));
        assert!(matches!(r, Err(Error::BudgetExceeded(_))));
    }
}
