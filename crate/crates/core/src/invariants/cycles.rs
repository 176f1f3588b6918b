//! Induced odd holes and antiholes.
//!
//! Exhaustive search grows induced paths `v0, v1, ...` with `v0` the
//! smallest vertex of the cycle and `v1 < v_last`, so each induced cycle is
//! met exactly once. When the node budget runs out the search falls back to
//! seeded randomised restarts, which can only ever find cycles.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::{Budget, NodeBudget};
use crate::graph::{bits, Graph};

#[derive(Clone, Debug)]
pub struct OddCycleOptions {
    /// Largest `k` searched, for cycles of length `2k + 1`.
    pub k_max: usize,
    /// Node budget of the exhaustive pass, per length.
    pub exhaustive_nodes: u64,
    pub restarts: usize,
    pub restart_nodes: u64,
    pub seed: u64,
}

impl Default for OddCycleOptions {
    fn default() -> Self {
        OddCycleOptions {
            k_max: 10,
            exhaustive_nodes: 20_000_000,
            restarts: 200,
            restart_nodes: 100_000,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleSearch {
    /// Vertices in cycle order.
    Found(Vec<usize>),
    /// The exhaustive pass completed without a hit.
    Absent,
    /// Neither found nor excluded within budget.
    Skipped,
}

impl CycleSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, CycleSearch::Found(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            CycleSearch::Found(_) => "found",
            CycleSearch::Absent => "absent",
            CycleSearch::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycleEntry {
    pub k: usize,
    pub hole: CycleSearch,
    pub antihole: CycleSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycleReport {
    pub entries: Vec<OddCycleEntry>,
}

impl OddCycleReport {
    /// The `k` for which a hole or an antihole was found.
    pub fn found_ks(&self) -> Vec<usize> {
        self.entries
            .iter()
            .filter(|e| e.hole.is_found() || e.antihole.is_found())
            .map(|e| e.k)
            .collect()
    }

    pub fn all_decided(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.hole != CycleSearch::Skipped && e.antihole != CycleSearch::Skipped)
    }
}

/// Whether `cycle` (in order) spans an induced cycle of `g`.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let m = cycle.len();
    if m < 4 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != m || sorted.iter().any(|&v| v >= g.n()) {
        return false;
    }
    for i in 0..m {
        for j in i + 1..m {
            let consecutive = j == i + 1 || (i == 0 && j == m - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

enum Outcome {
    Done,
    Stopped,
}

struct Dfs<'a, B: Budget + ?Sized, R: Rng> {
    g: &'a Graph,
    len: usize,
    path: Vec<usize>,
    budget: &'a mut B,
    /// count every cycle instead of stopping at the first
    count_all: bool,
    count: u64,
    found: Option<Vec<usize>>,
    rng: Option<R>,
}

impl<B: Budget + ?Sized, R: Rng> Dfs<'_, B, R> {
    /// `blocked`: closed neighbourhoods of `v1 .. v_{m-2}` plus the
    /// excluded start region.
    fn extend(&mut self, blocked: &[u64]) -> Outcome {
        if self.budget.exhausted() {
            return Outcome::Stopped;
        }
        let m = self.path.len();
        let v0 = self.path[0];
        let last = self.path[m - 1];
        let n0 = self.g.row(v0);
        let nl = self.g.row(last);
        let closing = m == self.len - 1;
        let mut cand: Vec<u64> = nl.iter().zip(blocked).map(|(a, b)| a & !b).collect();
        if closing {
            for (c, a) in cand.iter_mut().zip(n0) {
                *c &= a;
            }
            if m >= 2 {
                let v1 = self.path[1];
                for v in 0..=v1 {
                    bits::clear(&mut cand, v);
                }
            }
        } else if m >= 2 {
            for (c, a) in cand.iter_mut().zip(n0) {
                *c &= !a;
            }
        }
        let mut order: Vec<usize> = bits::iter(&cand).collect();
        if let Some(rng) = self.rng.as_mut() {
            order.shuffle(rng);
        }
        for v in order {
            self.path.push(v);
            if closing {
                self.count += 1;
                if !self.count_all {
                    self.found = Some(self.path.clone());
                    self.path.pop();
                    return Outcome::Stopped;
                }
            } else {
                let mut next = blocked.to_vec();
                if m >= 2 {
                    // v_{m-1} becomes non-adjacent to everything after v_m
                    let prev = self.path[m - 1];
                    for (a, b) in next.iter_mut().zip(self.g.row(prev)) {
                        *a |= b;
                    }
                    bits::set(&mut next, prev);
                }
                bits::set(&mut next, v);
                if let Outcome::Stopped = self.extend(&next) {
                    self.path.pop();
                    return Outcome::Stopped;
                }
            }
            self.path.pop();
        }
        Outcome::Done
    }
}

fn exhaustive<B: Budget + ?Sized>(
    g: &Graph,
    len: usize,
    count_all: bool,
    budget: &mut B,
) -> (bool, u64, Option<Vec<usize>>) {
    let n = g.n();
    let mut dfs: Dfs<'_, B, ChaCha8Rng> = Dfs {
        g,
        len,
        path: Vec::with_capacity(len),
        budget,
        count_all,
        count: 0,
        found: None,
        rng: None,
    };
    for v0 in 0..n {
        let mut blocked = vec![0u64; g.words()];
        for v in 0..=v0 {
            bits::set(&mut blocked, v);
        }
        dfs.path.push(v0);
        let out = dfs.extend(&blocked);
        dfs.path.pop();
        if let Outcome::Stopped = out {
            let completed = dfs.found.is_some() && !count_all;
            return (completed, dfs.count, dfs.found);
        }
    }
    (true, dfs.count, dfs.found)
}

fn randomised<B: Budget + ?Sized>(g: &Graph, len: usize, opts: &OddCycleOptions, outer: &mut B) -> Option<Vec<usize>> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (len as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    for _ in 0..opts.restarts {
        if outer.exhausted() {
            return None;
        }
        let v0 = rng.gen_range(0..n);
        let child = ChaCha8Rng::seed_from_u64(rng.gen());
        let mut nb = NodeBudget::new(opts.restart_nodes);
        let mut blocked = vec![0u64; g.words()];
        bits::set(&mut blocked, v0);
        let mut dfs = Dfs {
            g,
            len,
            path: vec![v0],
            budget: &mut nb,
            count_all: false,
            count: 0,
            found: None,
            rng: Some(child),
        };
        dfs.extend(&blocked);
        if let Some(c) = dfs.found {
            return Some(c);
        }
    }
    None
}

fn search<B: Budget + ?Sized>(g: &Graph, len: usize, opts: &OddCycleOptions, outer: &mut B) -> CycleSearch {
    if g.n() < len {
        return CycleSearch::Absent;
    }
    let mut nb = Both {
        a: NodeBudget::new(opts.exhaustive_nodes),
        b: &mut *outer,
    };
    let (completed, _, found) = exhaustive(g, len, false, &mut nb);
    if let Some(c) = found {
        return CycleSearch::Found(c);
    }
    if completed {
        return CycleSearch::Absent;
    }
    match randomised(g, len, opts, outer) {
        Some(c) => CycleSearch::Found(c),
        None => CycleSearch::Skipped,
    }
}

struct Both<'a, B: Budget + ?Sized> {
    a: NodeBudget,
    b: &'a mut B,
}

impl<B: Budget + ?Sized> Budget for Both<'_, B> {
    fn exhausted(&mut self) -> bool {
        self.a.exhausted() || self.b.exhausted()
    }
}

/// Induced `C_{2k+1}` and complements of `C_{2k+1}` for `2 <= k <= k_max`.
pub fn induced_odd_cycles<B: Budget + ?Sized>(g: &Graph, opts: &OddCycleOptions, budget: &mut B) -> OddCycleReport {
    let comp = g.complement();
    let mut entries = Vec::new();
    for k in 2..=opts.k_max {
        let len = 2 * k + 1;
        if len > g.n() {
            break;
        }
        let hole = search(g, len, opts, budget);
        let antihole = if k == 2 {
            // the pentagon is self-complementary
            match &hole {
                CycleSearch::Found(c) => CycleSearch::Found(vec![c[0], c[2], c[4], c[1], c[3]]),
                other => other.clone(),
            }
        } else {
            search(&comp, len, opts, budget)
        };
        entries.push(OddCycleEntry { k, hole, antihole });
    }
    OddCycleReport { entries }
}

/// Number of induced cycles of length `len`, or `None` if the budget ran out.
pub fn count_induced_cycles<B: Budget + ?Sized>(g: &Graph, len: usize, budget: &mut B) -> Option<u64> {
    if len < 4 {
        return None;
    }
    let (completed, count, _) = exhaustive(g, len, true, budget);
    completed.then_some(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Unlimited;

    fn brute_force_count(g: &Graph, len: usize) -> u64 {
        let n = g.n();
        let mut total = 0;
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != len {
                continue;
            }
            let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let h = g.induced(&vs);
            if h.degrees().iter().all(|&d| d == 2) && connected(&h) {
                total += 1;
            }
        }
        total
    }

    fn connected(g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    #[test]
    fn cycle_contains_itself() {
        let c7 = Graph::cycle(7);
        let r = induced_odd_cycles(&c7, &OddCycleOptions::default(), &mut Unlimited);
        assert_eq!(r.found_ks(), [3]);
        let CycleSearch::Found(w) = &r.entries[1].hole else {
            panic!("no C7 witness")
        };
        assert!(is_induced_cycle(&c7, w));
        assert_eq!(r.entries[0].hole, CycleSearch::Absent);
        assert!(r.all_decided());
        assert_eq!(count_induced_cycles(&c7, 7, &mut Unlimited), Some(1));
    }

    #[test]
    fn antihole_witness() {
        let g = Graph::cycle(7).complement();
        let r = induced_odd_cycles(&g, &OddCycleOptions::default(), &mut Unlimited);
        let CycleSearch::Found(w) = &r.entries[1].antihole else {
            panic!("no antihole")
        };
        assert!(is_induced_cycle(&g.complement(), w));
    }

    #[test]
    fn counts_agree_with_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..25 {
            let n = rng.gen_range(5..=11);
            let g = Graph::from_predicate(n, |_, _| rng.gen_bool(0.4));
            for len in [4, 5, 6, 7] {
                assert_eq!(count_induced_cycles(&g, len, &mut Unlimited), Some(brute_force_count(&g, len)));
            }
        }
    }

    #[test]
    fn randomised_fallback_finds_cycles() {
        let g = Graph::cycle(11);
        let opts = OddCycleOptions {
            exhaustive_nodes: 1,
            ..Default::default()
        };
        let r = induced_odd_cycles(&g, &opts, &mut Unlimited);
        assert!(r.entries[3].hole.is_found());
        assert_eq!(r.entries[0].hole, CycleSearch::Skipped);
    }
}
