//! Undirected simple graphs with bit-set adjacency rows.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::DenseMatrix;
use crate::stabilizer::{PhaseTable, StateFamily};
use crate::{Error, Result};

/// Bit-set helpers over `u64` words.
pub mod bits {
    #[inline]
    pub fn words(n: usize) -> usize {
        n.div_ceil(64)
    }

    #[inline]
    pub fn test(row: &[u64], i: usize) -> bool {
        row[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(row: &mut [u64], i: usize) {
        row[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn clear(row: &mut [u64], i: usize) {
        row[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn count(row: &[u64]) -> usize {
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(row: &[u64]) -> bool {
        row.iter().all(|&w| w == 0)
    }

    /// Set bits in increasing order.
    pub fn iter(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
        row.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn first(row: &[u64]) -> Option<usize> {
        row.iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(wi, &w)| wi * 64 + w.trailing_zeros() as usize)
    }

    pub fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
        for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
            *d = x & y;
        }
    }

    pub fn full(n: usize) -> alloc::vec::Vec<u64> {
        let mut v = alloc::vec![!0u64; words(n)];
        if n % 64 != 0 {
            *v.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    labels: Vec<String>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words(n);
        Graph {
            n,
            words,
            adj: vec![0; n * words],
            labels: (0..n).map(|i| format!("{i}")).collect(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Builds from per-vertex bit rows; rows must be symmetric and loop-free.
    pub fn from_rows(n: usize, rows: Vec<Vec<u64>>) -> Result<Self> {
        let words = bits::words(n);
        if rows.len() != n || rows.iter().any(|r| r.len() != words) {
            return Err(Error::ShapeMismatch);
        }
        let adj: Vec<u64> = rows.into_iter().flatten().collect();
        let g = Graph {
            n,
            words,
            adj,
            labels: (0..n).map(|i| format!("{i}")).collect(),
        };
        for i in 0..n {
            if g.has_edge(i, i) {
                return Err(Error::ShapeMismatch);
            }
            for j in g.neighbors(i) {
                if j >= n || !g.has_edge(j, i) {
                    return Err(Error::ShapeMismatch);
                }
            }
        }
        Ok(g)
    }

    pub fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Self::from_predicate(n, |_, _| true)
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// `C_n` plus a pendant vertex `n` attached to vertex 0.
    pub fn pan(n: usize) -> Self {
        let mut g = Self::empty(n + 1);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g.add_edge(0, n);
        g
    }

    /// `mK_n`: vertex `i` lies in copy `i / n`.
    pub fn disjoint_union(m: usize, n: usize) -> Self {
        Self::from_predicate(m * n, |a, b| a / n == b / n)
    }

    /// OR (co-normal) product: `(g, h) ~ (g', h')` iff `g ~ g'` or `h ~ h'`.
    /// Vertex `(a, b)` is `a * |h| + b`.
    pub fn or_product(g: &Graph, h: &Graph) -> Self {
        let m = h.n;
        let mut out = Self::from_predicate(g.n * m, |x, y| {
            g.has_edge(x / m, y / m) || h.has_edge(x % m, y % m)
        });
        out.labels = (0..g.n * m)
            .map(|x| format!("{} x {}", g.labels[x / m], h.labels[x % m]))
            .collect();
        out
    }

    pub fn complement(&self) -> Self {
        let mut out = Self::empty(self.n);
        for i in 0..self.n {
            let row = out.row_mut(i);
            for (w, &v) in row.iter_mut().zip(self.row(i)) {
                *w = !v;
            }
            // mask tail bits and the diagonal
            if self.n % 64 != 0 {
                let last = row.len() - 1;
                row[last] &= (1u64 << (self.n % 64)) - 1;
            }
            bits::clear(row, i);
        }
        out.labels = self.labels.clone();
        out
    }

    /// Induced subgraph on `vertices`, in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut out = Self::from_predicate(vertices.len(), |a, b| {
            self.has_edge(vertices[a], vertices[b])
        });
        out.labels = vertices.iter().map(|&v| self.labels[v].clone()).collect();
        out
    }

    /// Relabelled copy: old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut out = Self::empty(self.n);
        for (a, b) in self.edges() {
            out.add_edge(perm[a], perm[b]);
        }
        for v in 0..self.n {
            out.labels[perm[v]] = self.labels[v].clone();
        }
        out
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        bits::set(&mut self.adj[a * w..(a + 1) * w], b);
        bits::set(&mut self.adj[b * w..(b + 1) * w], a);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        bits::test(self.row(a), b)
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        let w = self.words;
        &mut self.adj[v * w..(v + 1) * w]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::iter(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        match d.first() {
            None => Some(0),
            Some(&k) => d.iter().all(|&x| x == k).then_some(k),
        }
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(a, b)` with `a < b`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            out.extend(self.neighbors(a).filter(|&b| b > a).map(|b| (a, b)));
        }
        out
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && self.has_edge(a, b)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &a)| vs[i + 1..].iter().all(|&b| a != b && !self.has_edge(a, b)))
    }

    /// Same vertex count and identical edge sets.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

/// Orthogonality graph of a state family: an edge per orthogonal pair.
pub fn orthogonality_graph(family: &StateFamily) -> Graph {
    let table = PhaseTable::new(family);
    Graph::from_predicate(family.len(), |i, j| table.orthogonal(i, j)).with_labels(family.labels())
}

/// Orthogonality graph of dense projectors: `|Tr(P_i P_j)| < tol`.
pub fn projector_graph(projectors: &[DenseMatrix], tol: f64) -> Graph {
    Graph::from_predicate(projectors.len(), |i, j| {
        projectors[i].trace_product(&projectors[j]).norm() < tol
    })
}

/// A finite group on indices `0..order`.
pub trait FiniteGroup {
    fn order(&self) -> usize;
    fn identity(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
}

/// Cayley graph: `g ~ h` iff `g^{-1} h` lies in `connection`.
pub fn cayley_graph<G: FiniteGroup + ?Sized>(group: &G, connection: &[usize]) -> Result<Graph> {
    let n = group.order();
    let mut in_set = vec![false; n];
    for &t in connection {
        in_set[t] = true;
    }
    if in_set[group.identity()] {
        return Err(Error::BadConnectionSet);
    }
    if connection.iter().any(|&t| !in_set[group.inv(t)]) {
        return Err(Error::BadConnectionSet);
    }
    let mut g = Graph::empty(n);
    for a in 0..n {
        for &t in connection {
            let b = group.mul(a, t);
            g.add_edge(a, b);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::PrimeDim;
    use crate::stabilizer::enumerate_single;

    /// Cyclic group `Z_n`.
    struct Cyclic(usize);

    impl FiniteGroup for Cyclic {
        fn order(&self) -> usize {
            self.0
        }
        fn identity(&self) -> usize {
            0
        }
        fn mul(&self, a: usize, b: usize) -> usize {
            (a + b) % self.0
        }
        fn inv(&self, a: usize) -> usize {
            (self.0 - a) % self.0
        }
    }

    #[test]
    fn basic_constructions() {
        let k5 = Graph::complete(5);
        assert_eq!(k5.edge_count(), 10);
        assert_eq!(k5.regular_degree(), Some(4));
        let u = Graph::disjoint_union(4, 3);
        assert_eq!((u.n(), u.edge_count()), (12, 12));
        let c = Graph::cycle(7);
        assert!(c.complement().complement().same_edges(&c));
        assert_eq!(c.complement().edge_count(), 21 - 7);
        let pan = Graph::pan(5);
        assert_eq!((pan.n(), pan.edge_count()), (6, 6));
        assert_eq!(pan.degrees(), [3, 2, 2, 2, 2, 1]);
        let k1 = Graph::complete(1);
        assert_eq!(Graph::or_product(&k1, &k1).n(), 1);
        let p = Graph::or_product(&u, &u);
        assert_eq!(p.n(), 144);
    }

    #[test]
    fn complement_masks_tail_bits() {
        for n in [1, 63, 64, 65, 130] {
            let e = Graph::empty(n);
            let c = e.complement();
            assert_eq!(c.edge_count(), n * (n - 1) / 2);
            assert_eq!(c.regular_degree(), Some(n - 1));
        }
    }

    #[test]
    fn cayley_examples() {
        let g = cayley_graph(&Cyclic(7), &[1, 6]).unwrap();
        assert!(g.same_edges(&Graph::cycle(7)));
        assert!(cayley_graph(&Cyclic(7), &[1]).is_err());
        assert!(cayley_graph(&Cyclic(7), &[0]).is_err());
        let e = cayley_graph(&Cyclic(5), &[]).unwrap();
        assert_eq!(e.edge_count(), 0);
    }

    #[test]
    fn single_family_graph_is_disjoint_cliques() {
        for p in [2u32, 3, 5, 7] {
            let d = PrimeDim::new(p).unwrap();
            let g = orthogonality_graph(&enumerate_single(d));
            let q = p as usize;
            assert!(g.same_edges(&Graph::disjoint_union(q + 1, q)));
        }
    }

    #[test]
    fn rows_round_trip() {
        let g = Graph::pan(5);
        let rows: Vec<Vec<u64>> = (0..g.n()).map(|v| g.row(v).to_vec()).collect();
        assert!(Graph::from_rows(6, rows).unwrap().same_edges(&g));
        assert!(Graph::from_rows(2, vec![vec![2], vec![0]]).is_err());
    }

    #[test]
    fn bit_iteration() {
        let mut row = vec![0u64; 3];
        for i in [0, 5, 63, 64, 130] {
            bits::set(&mut row, i);
        }
        let got: Vec<usize> = bits::iter(&row).collect();
        assert_eq!(got, [0, 5, 63, 64, 130]);
        assert_eq!(bits::first(&row), Some(0));
        assert_eq!(bits::count(&bits::full(130)), 130);
    }
}
