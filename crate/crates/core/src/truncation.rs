//! Parameter conditions under which `κ_{N+1} = 0` and the representation
//! closes on `N + 1` basis vectors.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::params::AlgebraParams;
use crate::tol::{TRUNCATION_SEARCH_MAX, TRUNCATION_TOL};

/// Which factor of `κ_{N+1}` vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TruncationKind {
    /// `N = δ₀ − φ₀`; available for every `Δ`.
    Gap,
    /// `N + 1 = −½[φ₀ − δ₀ − 1 + (φ₀ − δ₀ + 1)v₀√(−1/Δ)]`.
    BranchPlus,
    /// Same with the opposite sign in front of the `v₀` term.
    BranchMinus,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Truncation {
    /// Highest retained index; the representation has dimension `n + 1`.
    pub n: usize,
    pub kind: TruncationKind,
}

impl Truncation {
    pub fn dimension(&self) -> usize {
        self.n + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TruncationSearch {
    pub n_max: usize,
    /// Accepted `|lhs − rhs| / (1 + N)`.
    pub tol: f64,
}

impl Default for TruncationSearch {
    fn default() -> Self {
        Self {
            n_max: TRUNCATION_SEARCH_MAX,
            tol: TRUNCATION_TOL,
        }
    }
}

/// Candidates with the default search bound and tolerance.
pub fn truncation_conditions(params: &AlgebraParams) -> Vec<Truncation> {
    truncation_conditions_with(params, &TruncationSearch::default())
}

pub fn truncation_conditions_with(params: &AlgebraParams, search: &TruncationSearch) -> Vec<Truncation> {
    let mut out = Vec::new();
    let mut accept = |value: Complex64, shift: f64, kind: TruncationKind| {
        // `value` estimates N + shift.
        let target = value.re - shift;
        let n = target.round();
        if n < 1.0 || n > search.n_max as f64 {
            return;
        }
        let scale = 1.0 + n;
        if (target - n).abs() <= search.tol * scale && value.im.abs() <= search.tol * scale {
            out.push(Truncation { n: n as usize, kind });
        }
    };

    accept(Complex64::new(params.gap(), 0.0), 0.0, TruncationKind::Gap);

    if params.delta != 0.0 {
        let root = Complex64::new(-1.0 / params.delta, 0.0).sqrt();
        let d = params.phi0 - params.delta0;
        let term = (d + 1.0) * params.v0 * root;
        accept(-0.5 * ((d - 1.0) + term), 1.0, TruncationKind::BranchPlus);
        accept(-0.5 * ((d - 1.0) - term), 1.0, TruncationKind::BranchMinus);
    }
    out.sort_by_key(|t| t.n);
    out
}
