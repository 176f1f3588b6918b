//! Exact isomorphism for small graphs: colour refinement followed by
//! backtracking over refined classes.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::graph::Graph;

/// Largest graph handled by [`find_isomorphism`] by default.
pub const ISO_VERTEX_CAP: usize = 30;

/// Checks that `map` (a vertex of `g` to a vertex of `h`) is a bijection
/// preserving adjacency and non-adjacency.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.n() != h.n() || map.len() != g.n() {
        return false;
    }
    let mut hit = vec![false; h.n()];
    for &v in map {
        if v >= h.n() || hit[v] {
            return false;
        }
        hit[v] = true;
    }
    (0..g.n()).all(|a| (a + 1..g.n()).all(|b| g.has_edge(a, b) == h.has_edge(map[a], map[b])))
}

/// Stable colour refinement run on both graphs at once so colour ids agree.
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.n();
    let mut cg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut ch: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    loop {
        let sig = |gr: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = gr.neighbors(v).map(|u| c[u]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sg: Vec<_> = (0..n).map(|v| sig(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| sig(h, &ch, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| ids[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| ids[s]).collect();
        let classes_before = count_distinct(&cg, &ch);
        cg = ng;
        ch = nh;
        if count_distinct(&cg, &ch) == classes_before {
            return (cg, ch);
        }
    }
}

fn count_distinct(a: &[usize], b: &[usize]) -> usize {
    let mut v: Vec<usize> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v.dedup();
    v.len()
}

struct Search<'a, B: Budget> {
    g: &'a Graph,
    h: &'a Graph,
    cg: Vec<usize>,
    ch: Vec<usize>,
    order: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    budget: B,
    aborted: bool,
    count: u64,
    stop_at_first: bool,
}

impl<B: Budget> Search<'_, B> {
    fn go(&mut self, depth: usize) -> bool {
        if self.budget.exhausted() {
            self.aborted = true;
            return true;
        }
        if depth == self.order.len() {
            self.count += 1;
            return self.stop_at_first;
        }
        let v = self.order[depth];
        for w in 0..self.h.n() {
            if self.used[w] || self.cg[v] != self.ch[w] {
                continue;
            }
            let ok = self.order[..depth]
                .iter()
                .all(|&u| self.g.has_edge(u, v) == self.h.has_edge(self.map[u], w));
            if !ok {
                continue;
            }
            self.map[v] = w;
            self.used[w] = true;
            if self.go(depth + 1) {
                return true;
            }
            self.used[w] = false;
        }
        false
    }
}

fn search<'a, B: Budget>(g: &'a Graph, h: &'a Graph, budget: B, stop_at_first: bool) -> Option<Search<'a, B>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (cg, ch) = refine(g, h);
    let mut a = cg.clone();
    let mut b = ch.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }
    // smallest colour classes first, then connected order within
    let mut size = BTreeMap::new();
    for &c in &cg {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = Vec::with_capacity(g.n());
    let mut placed = vec![false; g.n()];
    while order.len() < g.n() {
        let next = (0..g.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                (linked > 0, core::cmp::Reverse(size[&cg[v]]), linked, core::cmp::Reverse(v))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    let n = g.n();
    let mut s = Search {
        g,
        h,
        cg,
        ch,
        order,
        map: vec![0; n],
        used: vec![false; n],
        budget,
        aborted: false,
        count: 0,
        stop_at_first,
    };
    s.go(0);
    Some(s)
}

/// An isomorphism `g -> h` if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find_isomorphism_with_budget(g, h, crate::budget::Unlimited).ok()?
}

/// `Err(())` when the budget ran out before a decision.
#[allow(clippy::result_unit_err)]
pub fn find_isomorphism_with_budget<B: Budget>(
    g: &Graph,
    h: &Graph,
    budget: B,
) -> Result<Option<Vec<usize>>, ()> {
    let Some(s) = search(g, h, budget, true) else {
        return Ok(None);
    };
    if s.aborted {
        return Err(());
    }
    Ok((s.count > 0).then(|| s.map.clone()))
}

/// `|Aut(g)|` by exhaustive enumeration, or `None` if the budget runs out.
pub fn count_automorphisms<B: Budget>(g: &Graph, budget: B) -> Option<u64> {
    let s = search(g, g, budget, false)?;
    (!s.aborted).then_some(s.count)
}
