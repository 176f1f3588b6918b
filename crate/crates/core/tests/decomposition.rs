//! Rank-1 splitting of two-qudit product Pauli eigenprojectors, checked
//! against the dense operator for every label.

use stabctx_core::linalg::{unit_root, DenseMatrix, C64};
use stabctx_core::pauli::{all_paulis, rank1_decompose};
use stabctx_core::PrimeDim;

fn check(d: u32) {
    let dim = PrimeDim::new(d).unwrap();
    let n = (d * d) as usize;
    let mut labels = 0;
    for p in all_paulis(dim, 2) {
        if p.factor(0).is_identity() || p.factor(1).is_identity() {
            continue;
        }
        labels += 1;
        let dense = p.matrix().unwrap();
        let mut all = Vec::new();
        let mut total = DenseMatrix::zeros(n);
        for k in 0..d {
            let parts = rank1_decompose(&p, k).unwrap();
            assert_eq!(parts.len(), d as usize);
            let eig = unit_root(d, k as i64);
            for part in parts {
                let m = &part.matrix;
                assert!(part.defect() < 1e-10, "{} not a projector", part.label_string());
                assert!((m.trace() - C64::new(1.0, 0.0)).norm() < 1e-10);
                // P Pi = lambda Pi
                assert!(dense.mul(m).max_abs_diff(&m.scale(eig)) < 1e-10, "{}", part.label_string());
                total.add_assign(m);
                all.push(part.matrix);
            }
        }
        assert!(total.max_abs_diff(&DenseMatrix::identity(n)) < 1e-10);
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                assert!(all[i].trace_product(&all[j]).norm() < 1e-10);
            }
        }
    }
    assert_eq!(labels, ((d * d - 1) * (d * d - 1)) as usize);
}

#[test]
fn every_two_local_label_qubit() {
    check(2);
}

#[test]
fn every_two_local_label_qutrit() {
    check(3);
}

#[test]
fn every_two_local_label_d5() {
    check(5);
}
