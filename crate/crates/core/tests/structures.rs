//! Structural invariants of Paulis, Clifford elements and stabilizer states.

use proptest::prelude::*;
use stabctx_core::clifford::{clifford_unitary, traceless_set, CliffordGroup};
use stabctx_core::graph::{cayley_graph, orthogonality_graph, FiniteGroup};
use stabctx_core::pauli::{symplectic_commutes, SymplecticPauli};
use stabctx_core::stabilizer::{enumerate_single, enumerate_two_qudit, FamilyKind};
use stabctx_core::PrimeDim;

fn dim(d: u32) -> PrimeDim {
    PrimeDim::new(d).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn clifford_products_close(d in prop::sample::select(vec![2u32, 3, 5]), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let g = CliffordGroup::new(dim(d));
        let (a, b) = (a.index(g.len()), b.index(g.len()));
        let c = g.compose(a, b);
        // the dense product is re-identified as the same element
        prop_assert_eq!(g.compose_dense(a, b), Some(c));
        let (ea, eb, ec) = (g.element(a), g.element(b), g.element(c));
        prop_assert_eq!(ec.f, ea.f.mul(&eb.f, dim(d)));
        prop_assert_eq!(ec.f.det(dim(d)), 1);
        let u = clifford_unitary(&ec, dim(d));
        prop_assert!(u.unitarity_deviation() < 1e-10);
        prop_assert_eq!(g.compose(c, g.inverse(c)), g.identity_index());
    }

    #[test]
    fn pauli_commutation_matches_matrices(
        d in prop::sample::select(vec![2u32, 3, 5]),
        v in prop::collection::vec(0u32..5, 8),
    ) {
        let dd = dim(d);
        let p = SymplecticPauli::new(dd, vec![v[0] % d, v[1] % d], vec![v[2] % d, v[3] % d], 0).unwrap();
        let q = SymplecticPauli::new(dd, vec![v[4] % d, v[5] % d], vec![v[6] % d, v[7] % d], 0).unwrap();
        let (mp, mq) = (p.matrix().unwrap(), q.matrix().unwrap());
        prop_assert!(mp.unitarity_deviation() < 1e-12);
        let dense = mp.commutator(&mq).max_abs() < 1e-10;
        prop_assert_eq!(symplectic_commutes(&p, &q).unwrap(), dense);
    }

    #[test]
    fn canonical_form_is_sound(d in prop::sample::select(vec![2u32, 3]), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let fam = enumerate_two_qudit(dim(d), FamilyKind::Total).unwrap();
        let (s, t) = (&fam.states[a.index(fam.len())], &fam.states[b.index(fam.len())]);
        let same = s.projector().unwrap().max_abs_diff(&t.projector().unwrap()) < 1e-10;
        prop_assert_eq!(s == t, same);
        prop_assert_eq!(s.elements() == t.elements(), same);
    }

    #[test]
    fn separable_overlaps_are_powers_of_d(d in prop::sample::select(vec![2u32, 3, 5]), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let fam = enumerate_two_qudit(dim(d), FamilyKind::Separable).unwrap();
        let (s, t) = (&fam.states[a.index(fam.len())], &fam.states[b.index(fam.len())]);
        let ov = s.overlap(t).unwrap();
        let df = d as f64;
        prop_assert!([0.0, 1.0 / df, 1.0 / (df * df), 1.0].iter().any(|v| (ov - v).abs() < 1e-12), "{}", ov);
        let dense = s.projector().unwrap().trace_product(&t.projector().unwrap()).re;
        prop_assert!((ov - dense).abs() < 1e-10);
    }
}

#[test]
fn traceless_set_is_a_connection_set() {
    for d in [3u32, 5] {
        let g = CliffordGroup::new(dim(d));
        let t = traceless_set(&g).unwrap();
        assert!(!t.contains(&g.identity_index()));
        let mut inv: Vec<usize> = t.iter().map(|&x| g.inverse(x)).collect();
        inv.sort_unstable();
        let mut sorted = t.clone();
        sorted.sort_unstable();
        assert_eq!(inv, sorted);
        let cay = cayley_graph(&g, &t).unwrap();
        assert_eq!(cay.regular_degree(), Some(t.len()));
        assert_eq!(FiniteGroup::order(&g), cay.n());
    }
}

#[test]
fn cayley_graph_is_the_entangled_orthogonality_graph() {
    let d = dim(3);
    let g = CliffordGroup::new(d);
    let t = traceless_set(&g).unwrap();
    let ent = orthogonality_graph(&enumerate_two_qudit(d, FamilyKind::Entangled).unwrap());
    assert!(cayley_graph(&g, &t).unwrap().same_edges(&ent));
}

#[test]
fn single_qudit_graph_is_disjoint_bases() {
    for d in [2u32, 3, 5, 7] {
        let fam = enumerate_single(dim(d));
        let g = orthogonality_graph(&fam);
        let du = d as usize;
        // explicit map: state i lies in basis i / d
        for i in 0..g.n() {
            for j in i + 1..g.n() {
                assert_eq!(g.has_edge(i, j), i / du == j / du, "d={d} {i} {j}");
            }
        }
    }
}
