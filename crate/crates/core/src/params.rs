//! Seed parameters of a tridiagonal representation and the two symmetries
//! acting on them (the linear pencil and the overall scaling).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Imaginary parts below this count as real when validating seeds.
const REAL_TOL: f64 = 1e-12;

/// The seed `(Δ, φ₀, δ₀, v₀, b₀)` from which every coefficient of the
/// representation is determined.
///
/// `v₀` and `b₀` are stored as complex numbers; they are required to be real
/// unless `Δ > 0`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraParams {
    /// Structure constant of `[Z, X] = Z² + Δ`.
    pub delta: f64,
    /// `φ₀`, with `φₙ = cₙ/uₙ = φ₀ + n`.
    pub phi0: f64,
    /// `δ₀`, with `δₙ = aₙ/wₙ = δ₀ − n`.
    pub delta0: f64,
    /// First diagonal entry of `Z`.
    pub v0: Complex64,
    /// First diagonal entry of `X`.
    pub b0: Complex64,
}

impl AlgebraParams {
    pub fn new(delta: f64, phi0: f64, delta0: f64, v0: f64, b0: f64) -> Self {
        Self {
            delta,
            phi0,
            delta0,
            v0: Complex64::new(v0, 0.0),
            b0: Complex64::new(b0, 0.0),
        }
    }

    pub fn new_complex(delta: f64, phi0: f64, delta0: f64, v0: Complex64, b0: Complex64) -> Self {
        Self {
            delta,
            phi0,
            delta0,
            v0,
            b0,
        }
    }

    /// Builds the seed from `b̃₀` instead of `b₀`.
    pub fn from_b0_tilde(delta: f64, phi0: f64, delta0: f64, v0: Complex64, b0_tilde: Complex64) -> Self {
        let b0 = b0_tilde + 0.5 * (delta0 + phi0 + 1.0) * v0;
        Self::new_complex(delta, phi0, delta0, v0, b0)
    }

    /// `b̃₀ = b₀ − ½(δ₀ + φ₀ + 1)v₀`, the constant part of every `bₙ`.
    pub fn b0_tilde(&self) -> Complex64 {
        self.b0 - 0.5 * (self.delta0 + self.phi0 + 1.0) * self.v0
    }

    /// `δ₀ − φ₀`; every denominator of the general solution is affine in it.
    ///
    /// A difference within rounding of an integer is returned as that
    /// integer, so seeds such as `φ₀ = 0.4, δ₀ = 1.4` land on the lattice.
    pub fn gap(&self) -> f64 {
        let s = self.delta0 - self.phi0;
        let r = s.round();
        let ulp = 4.0 * f64::EPSILON * self.delta0.abs().max(self.phi0.abs()).max(1.0);
        if (s - r).abs() <= ulp {
            r
        } else {
            s
        }
    }

    pub fn is_real(&self) -> bool {
        self.v0.im.abs() <= REAL_TOL && self.b0.im.abs() <= REAL_TOL
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [
            self.delta,
            self.phi0,
            self.delta0,
            self.v0.re,
            self.v0.im,
            self.b0.re,
            self.b0.im,
        ]
        .iter()
        .all(|x| x.is_finite());
        if !finite {
            return Err(Error::InvalidParameter("non-finite seed value".into()));
        }
        if self.delta <= 0.0 && !self.is_real() {
            return Err(Error::InvalidParameter(
                "complex v0/b0 are only admitted for delta > 0".into(),
            ));
        }
        Ok(())
    }
}

/// Seed of the representation carried by `X + μZ`.
///
/// Both `φₙ` and `δₙ` move by `+μ` and `b₀` by `+μv₀`; `Z` is untouched.
pub fn pencil_shift(params: &AlgebraParams, mu: f64) -> AlgebraParams {
    AlgebraParams {
        phi0: params.phi0 + mu,
        delta0: params.delta0 + mu,
        b0: params.b0 + mu * params.v0,
        ..*params
    }
}

/// Seed of the representation of `ΩX, ΩZ`, which satisfies
/// `[Z̃, X̃] = Z̃² + Ω²Δ`.
pub fn scale_params(params: &AlgebraParams, omega: f64) -> Result<AlgebraParams> {
    if omega == 0.0 || !omega.is_finite() {
        return Err(Error::ZeroScale);
    }
    Ok(AlgebraParams {
        delta: omega * omega * params.delta,
        v0: omega * params.v0,
        b0: omega * params.b0,
        ..*params
    })
}
