//! Clique cover number, as the chromatic number of the complement or from
//! a checked structural partition.

use alloc::vec;
use alloc::vec::Vec;

use super::coloring::{chromatic_number, ChromaticOptions};
use super::Status;
use crate::budget::Budget;
use crate::graph::Graph;
use crate::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct CoverOptions {
    /// A partition of the vertices into cliques.
    pub hint: Option<Vec<Vec<usize>>>,
    /// An independent set, giving a lower bound.
    pub independent_set: Option<Vec<usize>>,
    /// An upper bound on the clique number the caller vouches for (such as
    /// the Hilbert-space dimension); gives the lower bound `ceil(n / w)`.
    pub max_clique_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub lower: usize,
    pub upper: usize,
    pub cover: Vec<Vec<usize>>,
    pub status: Status,
}

impl CoverResult {
    pub fn value(&self) -> Option<usize> {
        (self.status == Status::Exact).then_some(self.upper)
    }
}

/// Checks that `cover` partitions the vertex set into cliques.
pub fn verify_clique_cover(g: &Graph, cover: &[Vec<usize>]) -> Result<()> {
    let mut hit = vec![false; g.n()];
    for part in cover {
        for &v in part {
            if v >= g.n() || hit[v] {
                return Err(Error::InvalidHint("parts overlap or name unknown vertices"));
            }
            hit[v] = true;
        }
        if !g.is_clique(part) {
            return Err(Error::InvalidHint("a part is not a clique"));
        }
    }
    if hit.iter().any(|&h| !h) {
        return Err(Error::InvalidHint("some vertex is not covered"));
    }
    Ok(())
}

/// Colour per vertex from a partition.
pub fn partition_to_colouring(n: usize, parts: &[Vec<usize>]) -> Vec<usize> {
    let mut c = vec![0; n];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            c[v] = i;
        }
    }
    c
}

fn colouring_to_partition(c: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut parts = vec![Vec::new(); k];
    for (v, &x) in c.iter().enumerate() {
        parts[x].push(v);
    }
    parts
}

pub fn clique_cover<B: Budget + ?Sized>(
    g: &Graph,
    opts: &CoverOptions,
    budget: &mut B,
) -> Result<CoverResult> {
    let lower_hint = match &opts.independent_set {
        Some(s) => {
            if !g.is_independent(s) {
                return Err(Error::InvalidHint("independent-set hint has an edge"));
            }
            s.len()
        }
        None => 0,
    };
    let lower_hint = match opts.max_clique_size {
        Some(w) if w > 0 => lower_hint.max(g.n().div_ceil(w)),
        _ => lower_hint,
    };
    if let Some(hint) = &opts.hint {
        verify_clique_cover(g, hint)?;
        let upper = hint.len();
        let exact = lower_hint == upper;
        return Ok(CoverResult {
            lower: if exact { upper } else { lower_hint },
            upper,
            cover: hint.clone(),
            status: if exact { Status::Exact } else { Status::Bounded },
        });
    }
    let comp = g.complement();
    let copts = ChromaticOptions {
        clique: opts.independent_set.clone(),
        ..ChromaticOptions::default()
    };
    let r = chromatic_number(&comp, &copts, budget)?;
    let lower = r.lower.max(lower_hint);
    Ok(CoverResult {
        lower,
        upper: r.upper,
        cover: colouring_to_partition(&r.colouring, r.upper),
        status: if lower == r.upper { Status::Exact } else { r.status },
    })
}
