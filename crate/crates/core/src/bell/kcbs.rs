//! The KCBS pentagon: five qutrit projectors with orthogonality graph `C_5`.

use alloc::format;
use alloc::vec::Vec;

use super::ContextualityScenario;
use crate::budget::Unlimited;
use crate::invariants::{independence_number, CliqueOptions};
use crate::linalg::{DenseMatrix, C64};
use crate::Result;

/// `|psi_i> = (cos t, sin t cos(4 pi i / 5), sin t sin(4 pi i / 5))` with
/// `cos^2 t = cos(pi/5) / (1 + cos(pi/5))`; consecutive vectors are
/// orthogonal.
pub fn kcbs_vectors() -> Vec<[f64; 3]> {
    let c = libm::cos(core::f64::consts::PI / 5.0);
    let cos_t = libm::sqrt(c / (1.0 + c));
    let sin_t = libm::sqrt(1.0 / (1.0 + c));
    (0..5)
        .map(|i| {
            let phi = 4.0 * core::f64::consts::PI * i as f64 / 5.0;
            [cos_t, sin_t * libm::cos(phi), sin_t * libm::sin(phi)]
        })
        .collect()
}

pub fn kcbs_scenario() -> Result<ContextualityScenario> {
    let projectors: Vec<DenseMatrix> = kcbs_vectors()
        .iter()
        .map(|v| {
            let v: Vec<C64> = v.iter().map(|&x| C64::new(x, 0.0)).collect();
            DenseMatrix::outer(&v)
        })
        .collect();
    let labels = (0..5).map(|i| format!("psi{i}")).collect();
    let mut s = ContextualityScenario::from_projectors("kcbs", projectors, labels)?;
    let alpha = independence_number(&s.graph, &CliqueOptions::default(), &mut Unlimited)?;
    s.nchv_bound = alpha.value();
    Ok(s)
}
