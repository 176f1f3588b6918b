//! Maximum clique by bit-parallel branch and bound with greedy colouring
//! bounds (the BBMC / MCS family).

use alloc::vec;
use alloc::vec::Vec;

use super::Status;
use crate::budget::Budget;
use crate::graph::{bits, Graph};
use crate::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct CliqueOptions {
    /// A known clique to start from; checked before use.
    pub initial: Option<Vec<usize>>,
    /// A proper colouring of the searched graph; its colour count bounds the
    /// clique number. Checked before use.
    pub colouring: Option<Vec<usize>>,
    /// An upper bound the caller vouches for, such as the Hilbert-space
    /// dimension for an orthogonality graph.
    pub upper_bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: Vec<usize>,
    pub upper: usize,
    pub status: Status,
    pub nodes: u64,
}

impl CliqueResult {
    pub fn value(&self) -> Option<usize> {
        (self.status == Status::Exact).then_some(self.size)
    }
}

/// Number of colours of a proper colouring, or an error if it is improper.
pub(crate) fn check_colouring(g: &Graph, colouring: &[usize]) -> Result<usize> {
    if colouring.len() != g.n() {
        return Err(Error::InvalidHint("colouring has the wrong length"));
    }
    for (a, b) in g.edges() {
        if colouring[a] == colouring[b] {
            return Err(Error::InvalidHint("colouring is not proper"));
        }
    }
    let mut used: Vec<usize> = colouring.to_vec();
    used.sort_unstable();
    used.dedup();
    Ok(used.len())
}

struct Bbmc<'a, B: Budget + ?Sized> {
    n: usize,
    w: usize,
    /// adjacency in search order
    adj: Vec<u64>,
    best: Vec<usize>,
    target: usize,
    budget: &'a mut B,
    aborted: bool,
    done: bool,
    nodes: u64,
}

impl<B: Budget + ?Sized> Bbmc<'_, B> {
    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.w..(v + 1) * self.w]
    }

    /// Greedy sequential colouring of `p`; returns vertices with colour at
    /// least `kmin` in increasing colour order, their colours, and the total
    /// number of colours.
    fn colour_sort(&self, p: &[u64], kmin: usize) -> (Vec<usize>, Vec<usize>, usize) {
        let mut uncoloured = p.to_vec();
        let mut q = vec![0u64; self.w];
        let mut order = Vec::new();
        let mut colour = Vec::new();
        let mut k = 0;
        while !bits::is_empty(&uncoloured) {
            k += 1;
            q.copy_from_slice(&uncoloured);
            while let Some(v) = bits::first(&q) {
                bits::clear(&mut uncoloured, v);
                bits::clear(&mut q, v);
                for (qw, &nw) in q.iter_mut().zip(self.row(v)) {
                    *qw &= !nw;
                }
                if k >= kmin {
                    order.push(v);
                    colour.push(k);
                }
            }
        }
        (order, colour, k)
    }

    fn expand(&mut self, clique: &mut Vec<usize>, mut p: Vec<u64>) {
        self.nodes += 1;
        if self.budget.exhausted() {
            self.aborted = true;
            return;
        }
        let kmin = (self.best.len() + 1).saturating_sub(clique.len());
        let (order, colour, _) = self.colour_sort(&p, kmin.max(1));
        let mut next = vec![0u64; self.w];
        for idx in (0..order.len()).rev() {
            if clique.len() + colour[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            clique.push(v);
            bits::and_into(&mut next, &p, self.row(v));
            if bits::is_empty(&next) {
                if clique.len() > self.best.len() {
                    self.best = clique.clone();
                    if self.best.len() >= self.target {
                        self.done = true;
                    }
                }
            } else {
                self.expand(clique, next.clone());
            }
            clique.pop();
            bits::clear(&mut p, v);
            if self.done || self.aborted {
                return;
            }
        }
    }
}

/// Maximum clique. Never fails on budget exhaustion: the best clique found
/// is returned with status `Bounded` and the best known upper bound.
pub fn max_clique<B: Budget + ?Sized>(g: &Graph, opts: &CliqueOptions, budget: &mut B) -> Result<CliqueResult> {
    let n = g.n();
    let mut upper = n;
    if let Some(c) = &opts.colouring {
        upper = upper.min(check_colouring(g, c)?);
    }
    if let Some(u) = opts.upper_bound {
        upper = upper.min(u);
    }
    let mut best: Vec<usize> = match &opts.initial {
        Some(c) => {
            if !g.is_clique(c) || c.iter().any(|&v| v >= n) {
                return Err(Error::InvalidHint("initial set is not a clique"));
            }
            c.clone()
        }
        None => Vec::new(),
    };
    if n == 0 {
        return Ok(CliqueResult {
            size: 0,
            witness: best,
            upper: 0,
            status: Status::Exact,
            nodes: 0,
        });
    }
    if best.is_empty() {
        best.push(0);
    }

    // search order: degree descending, lowest index on ties
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let w = bits::words(n);
    let mut adj = vec![0u64; n * w];
    for (i, &v) in order.iter().enumerate() {
        for u in g.neighbors(v) {
            bits::set(&mut adj[i * w..(i + 1) * w], pos[u]);
        }
    }

    let mut s = Bbmc {
        n,
        w,
        adj,
        best: best.iter().map(|&v| pos[v]).collect(),
        target: upper,
        budget,
        aborted: false,
        done: false,
        nodes: 0,
    };
    let all = bits::full(s.n);
    let (_, _, root_colours) = s.colour_sort(&all, usize::MAX);
    upper = upper.min(root_colours);
    s.target = upper;
    if s.best.len() < upper {
        let mut clique = Vec::new();
        s.expand(&mut clique, all);
    }
    let mut witness: Vec<usize> = s.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    let size = witness.len();
    let exact = !s.aborted || size >= upper;
    Ok(CliqueResult {
        size,
        upper: if exact { size } else { upper },
        witness,
        status: if exact { Status::Exact } else { Status::Bounded },
        nodes: s.nodes,
    })
}

/// `alpha(g)` as the clique number of the complement. Options refer to the
/// complement: `initial` is an independent set of `g`, `colouring` a
/// partition of `g` into cliques (given as a colour per vertex).
pub fn independence_number<B: Budget + ?Sized>(
    g: &Graph,
    opts: &CliqueOptions,
    budget: &mut B,
) -> Result<CliqueResult> {
    max_clique(&g.complement(), opts, budget)
}

/// Exhaustive clique number for tiny graphs; used as a test oracle.
pub fn brute_force_clique_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&mask| {
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            g.is_clique(&vs)
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
