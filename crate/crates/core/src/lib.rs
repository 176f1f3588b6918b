//! Qudit stabilizer structures and the graph invariants that witness
//! contextuality.
//!
//! The crate is `no_std` and only needs `alloc`. It covers:
//!
//! * exact arithmetic over `Z_d` for prime `d` ([`modular`]),
//! * dense complex matrices and Hermitian spectra ([`linalg`]),
//! * symplectic Pauli operators and their eigenprojectors ([`pauli`]),
//! * the single-qudit Clifford group in `(F|u)` form ([`clifford`]),
//! * exact one- and two-qudit stabilizer states ([`stabilizer`]),
//! * bit-set graphs and their constructions ([`graph`]),
//! * clique, colouring, packing, theta and odd-cycle solvers ([`invariants`]),
//! * CHSH, Peres–Mermin and KCBS scenarios ([`bell`]).
//!
//! IO, wall-clock deadlines and the command line live in the companion
//! `stabctx` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bell;
pub mod budget;
pub mod clifford;
mod error;
pub mod graph;
pub mod invariants;
pub mod iso;
pub mod linalg;
pub mod modular;
pub mod pauli;
pub mod stabilizer;
pub mod symeig;

pub use error::{Error, Result};
pub use modular::{PrimeDim, ZdElem};

/// Entry-wise tolerance for structural matrix identities.
pub const STRUCTURAL_TOL: f64 = 1e-10;
/// Tolerance for eigenvalue comparisons.
pub const EIGEN_TOL: f64 = 1e-8;
