//! Tridiagonal representations of the algebra `[Z, X] = Z² + Δ` and the
//! orthogonal polynomials diagonalizing `X`.
//!
//! The crate is organized as:
//!
//! * [`params`], [`algebra`], [`residual`], [`truncation`]: the general
//!   solution of the representation conditions, operator assembly, and
//!   verification of the defining relation.
//! * [`families`]: parameter maps and closed-form recurrence coefficients
//!   for the Jacobi, continuous Hahn, Hahn and para-Krawtchouk families.
//! * [`poly`]: monic recurrences, Jacobi matrices, spectra and Gaussian
//!   quadrature.
//!
//! ```
//! use tridirep::{build_representation, hahn_params, GaugeChoice};
//!
//! let params = hahn_params(0.0, 0.0, 3).unwrap();
//! let rep = build_representation(&params, 10, &GaugeChoice::SplitSqrt).unwrap();
//! assert!(rep.closed);
//! assert_eq!(rep.dim(), 4);
//! assert!(rep.residual() < 1e-12);
//! ```

pub mod algebra;
pub mod error;
pub mod extrapolate;
pub mod families;
pub mod operator;
pub mod params;
pub mod poly;
pub mod residual;
pub mod tol;
pub mod truncation;

pub use algebra::{
    build_representation, solve_b, solve_delta_seq, solve_kappa, solve_lambda, solve_phi, solve_v, GaugeChoice,
    RepCoefficients, Representation,
};
pub use error::{Error, Result};
pub use families::{
    chahn_monic_coeffs, chahn_params, family_compare, hahn_monic_coeffs, hahn_params, jacobi_monic_coeffs,
    jacobi_params, parakrawtchouk_monic_coeffs, parakrawtchouk_params, FamilyReport, FamilySpec, MonicCoeffs,
};
pub use operator::{Scalar, TridiagonalOperator};
pub use params::{pencil_shift, scale_params, AlgebraParams};
pub use poly::{
    bilattice_check, gram_check, jacobi_matrix, monic_eval, quadrature, spectrum, BilatticeReport, MonicRecurrence,
    SpectralData,
};
pub use residual::{condition_residuals, relation_residual, ConditionResiduals, ResidualWindow};
pub use truncation::{truncation_conditions, truncation_conditions_with, Truncation, TruncationKind, TruncationSearch};

impl Representation {
    /// Serializes to the `.rep.json` layout.
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
