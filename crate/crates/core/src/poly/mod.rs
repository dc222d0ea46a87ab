//! Monic three-term recurrences: evaluation, Jacobi matrices, spectra,
//! Gaussian quadrature and orthogonality diagnostics.

mod eigen;
mod lattice;
mod quadrature;
mod recurrence;

pub use eigen::{spectrum, symmetric_tridiagonal_eigen};
pub use lattice::{bilattice_check, interlaces, roots, BilatticeReport};
pub use quadrature::{gram_check, quadrature, SpectralData};
pub use recurrence::{jacobi_matrix, monic_eval, MonicRecurrence};
