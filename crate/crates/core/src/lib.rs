//! Finite quandles, their complex representations, and the decomposition of
//! the regular representation into irreducible subrepresentations.
//!
//! The crate has four layers:
//!
//! * [`linalg`] — dense complex matrices, subspaces, Hermitian eigensplitting
//!   and linear solving.
//! * [`quandle`] — finite quandle construction (dihedral, Alexander,
//!   conjugation, core), axiom checking, right translations, the inner
//!   automorphism group and its orbits.
//! * [`rep`] — quandle representations, the regular representation, invariant
//!   subspaces, commutants, intertwiners, and a seeded random-commutant
//!   splitting algorithm that decomposes any unitary representation.
//! * [`dihedral`] — the closed-form side for dihedral quandles: the
//!   irreducible catalog of the dihedral group, the explicit generating
//!   vectors, the expected decomposition, and labeling of numerically found
//!   components.
//!
//! [`report`] serializes decomposition results for the CLI.
//!
//! ```
//! use quandle_rep::dihedral::label_report;
//! use quandle_rep::quandle::dihedral;
//! use quandle_rep::rep::{decompose, regular_representation};
//! use quandle_rep::Tol;
//!
//! let tol = Tol::default();
//! let q = dihedral(6).unwrap();
//! let rep = regular_representation(&q);
//! let mut report = decompose(&rep, 0, &tol).unwrap();
//! label_report(&mut report, &tol).unwrap();
//! let dims: Vec<usize> = report.components.iter().map(|c| c.dimension).collect();
//! assert_eq!(dims, vec![2, 2, 1, 1]);
//! ```

pub mod dihedral;
pub mod linalg;
pub mod quandle;
pub mod rep;
pub mod report;

mod error;

pub use error::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Numerical tolerances used throughout the crate.
///
/// `eps` is the base tolerance for equality of complex quantities, `eig_gap`
/// is the absolute gap under which eigenvalues are grouped, and `snap` bounds
/// how far an eigenvalue may sit from a root of unity when labeling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tol {
    pub eps: f64,
    pub eig_gap: f64,
    pub snap: f64,
}

impl Default for Tol {
    fn default() -> Self {
        Tol {
            eps: 1e-9,
            eig_gap: 1e-7,
            snap: 1e-6,
        }
    }
}

impl Tol {
    /// Tolerances with a custom base epsilon, keeping the default eigenvalue
    /// gap and snapping thresholds.
    pub fn with_eps(eps: f64) -> Self {
        Tol {
            eps,
            ..Tol::default()
        }
    }
}
