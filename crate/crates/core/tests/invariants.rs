//! Solvers against exhaustive oracles on random graphs with at most 12
//! vertices, and the sandwich `alpha <= theta <= alpha* <= chi_bar`.

use proptest::prelude::*;
use stabctx_core::budget::Unlimited;
use stabctx_core::graph::Graph;
use stabctx_core::invariants::{
    chromatic_number, clique_cover, count_induced_cycles, fractional_packing, independence_number, is_induced_cycle,
    lovasz_theta, max_clique, verify_clique_cover, ChromaticOptions, CliqueOptions, CoverOptions, ThetaOptions,
};

fn graph(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut it = bits.iter();
    for i in 0..n {
        for j in i + 1..n {
            if *it.next().unwrap() {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph(n, &bits))
    })
}

fn subset(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

fn oracle_alpha(g: &Graph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&m| g.is_independent(&subset(m, n)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

fn oracle_omega(g: &Graph) -> usize {
    oracle_alpha(&g.complement())
}

fn colourable(g: &Graph, k: usize, colour: &mut Vec<usize>, v: usize) -> bool {
    if v == g.n() {
        return true;
    }
    for c in 0..k {
        if (0..v).all(|u| !(g.has_edge(u, v) && colour[u] == c)) {
            colour[v] = c;
            if colourable(g, k, colour, v + 1) {
                return true;
            }
        }
    }
    false
}

fn oracle_chi(g: &Graph) -> usize {
    (1..=g.n().max(1)).find(|&k| colourable(g, k, &mut vec![0; g.n()], 0)).unwrap()
}

fn oracle_induced_cycles(g: &Graph, len: usize) -> u64 {
    let n = g.n();
    let mut count = 0u64;
    for m in 0u32..1 << n {
        if m.count_ones() as usize != len {
            continue;
        }
        let vs = subset(m, n);
        let h = g.induced(&vs);
        if (0..len).all(|v| h.degree(v) == 2) {
            // 2-regular and connected
            let mut seen = vec![false; len];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for w in h.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if seen.iter().all(|&s| s) {
                count += 1;
            }
        }
    }
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn alpha_and_omega_match_oracle(g in arb_graph()) {
        let a = independence_number(&g, &CliqueOptions::default(), &mut Unlimited).unwrap();
        prop_assert_eq!(a.value(), Some(oracle_alpha(&g)));
        prop_assert!(g.is_independent(&a.witness));
        let w = max_clique(&g, &CliqueOptions::default(), &mut Unlimited).unwrap();
        prop_assert_eq!(w.value(), Some(oracle_omega(&g)));
        prop_assert!(g.is_clique(&w.witness));
    }

    #[test]
    fn chi_and_cover_match_oracle(g in arb_graph()) {
        let c = chromatic_number(&g, &ChromaticOptions::default(), &mut Unlimited).unwrap();
        prop_assert_eq!(c.value(), Some(oracle_chi(&g)));
        for (a, b) in g.edges() {
            prop_assert_ne!(c.colouring[a], c.colouring[b]);
        }
        let cover = clique_cover(&g, &CoverOptions::default(), &mut Unlimited).unwrap();
        prop_assert_eq!(cover.value(), Some(oracle_chi(&g.complement())));
        prop_assert!(verify_clique_cover(&g, &cover.cover).is_ok());
    }

    #[test]
    fn sandwich(g in arb_graph()) {
        let alpha = oracle_alpha(&g) as f64;
        let cover = oracle_chi(&g.complement()) as f64;
        let t = lovasz_theta(&g, &ThetaOptions::default(), &mut Unlimited).unwrap();
        let p = fractional_packing(&g, &mut Unlimited).unwrap();
        prop_assert!(p.certify(g.n()));
        let tol = 1e-6;
        prop_assert!(t.lower <= t.upper + 1e-12);
        prop_assert!(alpha <= t.upper + tol);
        prop_assert!(t.lower <= p.as_f64() + tol);
        prop_assert!(p.as_f64() <= cover + tol);
        prop_assert!(alpha <= p.as_f64() + tol);
        // theta(G) theta(complement) >= n
        let tc = lovasz_theta(&g.complement(), &ThetaOptions::default(), &mut Unlimited).unwrap();
        prop_assert!(t.upper * tc.upper >= g.n() as f64 - 1e-4);
    }

    #[test]
    fn induced_cycle_counts(g in arb_graph(), len in 4usize..=7) {
        let c = count_induced_cycles(&g, len, &mut Unlimited);
        prop_assert_eq!(c, Some(oracle_induced_cycles(&g, len)));
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph()) {
        let c = g.complement();
        prop_assert!(c.complement().same_edges(&g));
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
    }
}

#[test]
fn cycle_helpers() {
    let g = Graph::cycle(7);
    assert!(is_induced_cycle(&g, &[0, 1, 2, 3, 4, 5, 6]));
    assert!(!is_induced_cycle(&g, &[0, 1, 2, 3, 4, 6, 5]));
    assert_eq!(count_induced_cycles(&g, 7, &mut Unlimited), Some(1));
}

#[test]
fn petersen() {
    let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
    let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
    let edges: Vec<_> = outer.into_iter().chain(inner).chain(spokes).collect();
    let g = Graph::from_edges(10, &edges);
    assert_eq!(oracle_alpha(&g), 4);
    let t = lovasz_theta(&g, &ThetaOptions::default(), &mut Unlimited).unwrap();
    assert!((t.value - 4.0).abs() < 1e-5);
    let p = fractional_packing(&g, &mut Unlimited).unwrap();
    assert!((p.as_f64() - 5.0).abs() < 1e-12);
    assert_eq!(oracle_chi(&g), 3);
}
