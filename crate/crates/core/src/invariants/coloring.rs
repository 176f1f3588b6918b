//! Chromatic number: DSATUR greedy upper bounds and an exact DSATUR
//! branch and bound for small graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::clique::{check_colouring, max_clique, CliqueOptions};
use super::Status;
use crate::budget::Budget;
use crate::graph::Graph;
use crate::{Error, Result};

/// Default vertex cap for the exact colouring search.
pub const EXACT_COLOURING_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct ChromaticOptions {
    pub exact_cap: usize,
    /// A known clique, giving a lower bound. Checked before use.
    pub clique: Option<Vec<usize>>,
    /// A known proper colouring, giving an upper bound. Checked before use.
    pub colouring: Option<Vec<usize>>,
}

impl Default for ChromaticOptions {
    fn default() -> Self {
        ChromaticOptions {
            exact_cap: EXACT_COLOURING_CAP,
            clique: None,
            colouring: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringResult {
    pub lower: usize,
    pub upper: usize,
    /// A proper colouring with `upper` colours, numbered from 0.
    pub colouring: Vec<usize>,
    pub status: Status,
}

impl ColoringResult {
    pub fn value(&self) -> Option<usize> {
        (self.status == Status::Exact).then_some(self.upper)
    }
}

/// Greedy DSATUR colouring: most saturated vertex first, then highest
/// degree, then lowest index; smallest free colour.
pub fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colour = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], g.degree(v), core::cmp::Reverse(v)))
            .expect("uncoloured vertex");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        colour[v] = c;
        for u in g.neighbors(v) {
            if seen[u].len() <= c {
                seen[u].resize(c + 1, false);
            }
            if !seen[u][c] {
                seen[u][c] = true;
                sat[u] += 1;
            }
        }
    }
    colour
}

fn colours_used(c: &[usize]) -> usize {
    c.iter().map(|&x| x + 1).max().unwrap_or(0)
}

struct Exact<'a, B: Budget + ?Sized> {
    g: &'a Graph,
    colour: Vec<usize>,
    /// `counts[v * 64 + c]`: neighbours of v with colour c
    counts: Vec<u16>,
    sat: Vec<u64>,
    best: usize,
    best_colouring: Vec<usize>,
    lower: usize,
    budget: &'a mut B,
    aborted: bool,
}

impl<B: Budget + ?Sized> Exact<'_, B> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colour[v] = c;
        for u in self.g.neighbors(v) {
            let k = &mut self.counts[u * 64 + c];
            *k += 1;
            if *k == 1 {
                self.sat[u] |= 1 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colour[v] = usize::MAX;
        for u in self.g.neighbors(v) {
            let k = &mut self.counts[u * 64 + c];
            *k -= 1;
            if *k == 0 {
                self.sat[u] &= !(1 << c);
            }
        }
    }

    fn go(&mut self, coloured: usize, used: usize) -> bool {
        if self.budget.exhausted() {
            self.aborted = true;
            return true;
        }
        let n = self.g.n();
        if coloured == n {
            self.best = used;
            self.best_colouring = self.colour.clone();
            return self.best <= self.lower;
        }
        let v = (0..n)
            .filter(|&v| self.colour[v] == usize::MAX)
            .max_by_key(|&v| {
                let free = self
                    .g
                    .neighbors(v)
                    .filter(|&u| self.colour[u] == usize::MAX)
                    .count();
                (self.sat[v].count_ones(), free, core::cmp::Reverse(v))
            })
            .expect("uncoloured vertex");
        for c in 0..(used + 1).min(self.best.saturating_sub(1)) {
            if self.sat[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            let stop = self.go(coloured + 1, used.max(c + 1));
            self.unassign(v, c);
            if stop {
                return true;
            }
        }
        false
    }
}

pub fn chromatic_number<B: Budget + ?Sized>(
    g: &Graph,
    opts: &ChromaticOptions,
    budget: &mut B,
) -> Result<ColoringResult> {
    let n = g.n();
    let mut colouring = dsatur_greedy(g);
    let mut upper = colours_used(&colouring);
    if let Some(hint) = &opts.colouring {
        let k = check_colouring(g, hint)?;
        if k < upper {
            colouring = normalise(hint);
            upper = k;
        }
    }
    let lower = match &opts.clique {
        Some(c) => {
            if !g.is_clique(c) {
                return Err(Error::InvalidHint("clique hint is not a clique"));
            }
            c.len()
        }
        None => max_clique(g, &CliqueOptions::default(), budget)?.size,
    }
    .min(upper);
    if lower == upper {
        return Ok(ColoringResult {
            lower,
            upper,
            colouring,
            status: Status::Exact,
        });
    }
    if n > opts.exact_cap || n > 64 {
        return Ok(ColoringResult {
            lower,
            upper,
            colouring,
            status: Status::Bounded,
        });
    }
    let mut s = Exact {
        g,
        colour: vec![usize::MAX; n],
        counts: vec![0; n * 64],
        sat: vec![0; n],
        best: upper,
        best_colouring: colouring,
        lower,
        budget,
        aborted: false,
    };
    s.go(0, 0);
    let exact = !s.aborted || s.best == lower;
    Ok(ColoringResult {
        lower: if exact { s.best } else { lower },
        upper: s.best,
        colouring: s.best_colouring,
        status: if exact { Status::Exact } else { Status::Bounded },
    })
}

fn normalise(c: &[usize]) -> Vec<usize> {
    let mut ids: Vec<usize> = c.to_vec();
    ids.sort_unstable();
    ids.dedup();
    c.iter().map(|x| ids.binary_search(x).unwrap()).collect()
}

/// For a normal Cayley graph, `alpha * omega = |V|` forces `chi = omega`.
/// The caller is responsible for normality.
pub fn normal_cayley_chromatic(n: usize, alpha: usize, omega: usize) -> Option<usize> {
    (alpha * omega == n).then_some(omega)
}

/// Exhaustive chromatic number for tiny graphs; used as a test oracle.
pub fn brute_force_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 12);
    for k in 1..=n.max(1) {
        let mut c = vec![0usize; n];
        loop {
            if g.edges().iter().all(|&(a, b)| c[a] != c[b]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                c[i] += 1;
                if c[i] < k {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Unlimited;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn known_values() {
        let opts = ChromaticOptions::default();
        for n in 1..8 {
            let r = chromatic_number(&Graph::complete(n), &opts, &mut Unlimited).unwrap();
            assert_eq!(r.value(), Some(n));
        }
        let r = chromatic_number(&Graph::cycle(7), &opts, &mut Unlimited).unwrap();
        assert_eq!(r.value(), Some(3));
        assert!(check_colouring(&Graph::cycle(7), &r.colouring).is_ok());
        // Petersen graph
        let mut p = Graph::empty(10);
        for i in 0..5 {
            p.add_edge(i, (i + 1) % 5);
            p.add_edge(5 + i, 5 + (i + 2) % 5);
            p.add_edge(i, i + 5);
        }
        assert_eq!(chromatic_number(&p, &opts, &mut Unlimited).unwrap().value(), Some(3));
    }

    #[test]
    fn agrees_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(2..=10);
            let pr = rng.gen_range(0.2..0.8);
            let g = Graph::from_predicate(n, |_, _| rng.gen_bool(pr));
            let r = chromatic_number(&g, &ChromaticOptions::default(), &mut Unlimited).unwrap();
            assert_eq!(r.value(), Some(brute_force_chromatic_number(&g)));
            assert_eq!(check_colouring(&g, &r.colouring).unwrap(), r.upper);
        }
    }

    #[test]
    fn theorem_route() {
        assert_eq!(normal_cayley_chromatic(216, 24, 9), Some(9));
        assert_eq!(normal_cayley_chromatic(24, 5, 4), None);
    }
}
