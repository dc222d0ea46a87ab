//! The four orthogonal-polynomial families realized by the representation:
//! parameter maps into [`AlgebraParams`] and closed-form monic recurrence
//! coefficients.

mod chahn;
mod compare;
mod hahn;
mod jacobi;
mod para_krawtchouk;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::AlgebraParams;

pub use chahn::{chahn_monic_coeffs, chahn_params};
pub use compare::{family_compare, general_coeffs, CompareRecord, FamilyReport, ReportValue, PK_EXTRAPOLATION_STEPS};
pub use hahn::{hahn_monic_coeffs, hahn_params};
pub use jacobi::{jacobi_monic_coeffs, jacobi_params};
pub use para_krawtchouk::{parakrawtchouk_monic_coeffs, parakrawtchouk_params, parity};

/// One step of a monic recurrence: `x pₙ = pₙ₊₁ + b pₙ + λ pₙ₋₁`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MonicCoeffs<T> {
    pub lambda: T,
    pub b: T,
}

impl MonicCoeffs<f64> {
    pub fn to_complex(self) -> MonicCoeffs<Complex64> {
        MonicCoeffs {
            lambda: Complex64::new(self.lambda, 0.0),
            b: Complex64::new(self.b, 0.0),
        }
    }
}

/// A family together with its natural parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", content = "params", rename_all = "snake_case")]
pub enum FamilySpec {
    Jacobi {
        alpha: f64,
        beta: f64,
    },
    ContinuousHahn {
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    },
    Hahn {
        alpha: f64,
        beta: f64,
        #[serde(rename = "N")]
        n: usize,
    },
    ParaKrawtchouk {
        #[serde(rename = "N")]
        n: usize,
        gamma: f64,
        /// Regularization parameter; zero means the `t → 0` limit.
        #[serde(default)]
        t: f64,
    },
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Jacobi { .. } => "jacobi",
            FamilySpec::ContinuousHahn { .. } => "continuous_hahn",
            FamilySpec::Hahn { .. } => "hahn",
            FamilySpec::ParaKrawtchouk { .. } => "para_krawtchouk",
        }
    }

    /// Highest index of a finite family.
    pub fn truncation(&self) -> Option<usize> {
        match *self {
            FamilySpec::Hahn { n, .. } | FamilySpec::ParaKrawtchouk { n, .. } => Some(n),
            _ => None,
        }
    }

    pub fn is_real(&self) -> bool {
        !matches!(self, FamilySpec::ContinuousHahn { .. })
    }

    /// Checks the parameter regime.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameter(msg.to_string()));
        match *self {
            FamilySpec::Jacobi { alpha, beta } => {
                if !(alpha > -1.0 && beta > -1.0) {
                    return bad("jacobi requires alpha > -1 and beta > -1");
                }
            }
            FamilySpec::ContinuousHahn { a, b, c, d } => {
                if [a, b, c, d].iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                    return bad("continuous hahn parameters must be finite");
                }
            }
            FamilySpec::Hahn { alpha, beta, n } => {
                if !(alpha > -1.0 && beta > -1.0) || n == 0 {
                    return bad("hahn requires alpha > -1, beta > -1 and N >= 1");
                }
            }
            FamilySpec::ParaKrawtchouk { n, gamma, t } => {
                if n == 0 || !gamma.is_finite() || t.is_nan() || t < 0.0 {
                    return bad("para-krawtchouk requires N >= 1, finite gamma and t >= 0");
                }
                if !(gamma > 0.0 && gamma < 2.0) {
                    log::warn!("gamma = {gamma} lies outside (0, 2); the spectrum is not a proper bilattice");
                }
            }
        }
        Ok(())
    }

    /// Seed of the general solution for this family. Para-Krawtchouk uses
    /// the stored `t`, which must then be positive.
    pub fn algebra_params(&self) -> Result<AlgebraParams> {
        match *self {
            FamilySpec::Jacobi { alpha, beta } => Ok(jacobi_params(alpha, beta)),
            FamilySpec::ContinuousHahn { a, b, c, d } => chahn_params(a, b, c, d),
            FamilySpec::Hahn { alpha, beta, n } => hahn_params(alpha, beta, n),
            FamilySpec::ParaKrawtchouk { n, gamma, t } => parakrawtchouk_params(n, gamma, t),
        }
    }

    /// Closed-form coefficients at index `n`.
    pub fn monic_coeffs(&self, n: usize) -> Result<MonicCoeffs<Complex64>> {
        match *self {
            FamilySpec::Jacobi { alpha, beta } => Ok(jacobi_monic_coeffs(alpha, beta, n).to_complex()),
            FamilySpec::ContinuousHahn { a, b, c, d } => chahn_monic_coeffs(a, b, c, d, n),
            FamilySpec::Hahn { alpha, beta, n: big_n } => Ok(hahn_monic_coeffs(alpha, beta, big_n, n)?.to_complex()),
            FamilySpec::ParaKrawtchouk { n: big_n, gamma, .. } => {
                Ok(parakrawtchouk_monic_coeffs(big_n, gamma, n)?.to_complex())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_schema() {
        let spec = FamilySpec::Hahn {
            alpha: 0.5,
            beta: 1.0,
            n: 4,
        };
        let s = serde_json::to_string(&spec).unwrap();
        assert_eq!(s, r#"{"family":"hahn","params":{"alpha":0.5,"beta":1.0,"N":4}}"#);
        let pk: FamilySpec =
            serde_json::from_str(r#"{"family":"para_krawtchouk","params":{"N":9,"gamma":0.4}}"#).unwrap();
        assert_eq!(
            pk,
            FamilySpec::ParaKrawtchouk {
                n: 9,
                gamma: 0.4,
                t: 0.0
            }
        );
        let ch: FamilySpec = serde_json::from_str(
            r#"{"family":"continuous_hahn","params":{"a":[1,0.5],"b":[1,0],"c":[1,-0.5],"d":[1,0]}}"#,
        )
        .unwrap();
        assert_eq!(ch.name(), "continuous_hahn");
    }

    #[test]
    fn regime_checks() {
        assert!(FamilySpec::Jacobi { alpha: -1.0, beta: 0.0 }.validate().is_err());
        assert!(FamilySpec::Hahn {
            alpha: 0.0,
            beta: 0.0,
            n: 0
        }
        .validate()
        .is_err());
        // Outside the bilattice regime only warns.
        assert!(FamilySpec::ParaKrawtchouk {
            n: 4,
            gamma: 2.5,
            t: 0.0
        }
        .validate()
        .is_ok());
        assert_eq!(
            FamilySpec::Hahn {
                alpha: 0.0,
                beta: 0.0,
                n: 7
            }
            .truncation(),
            Some(7)
        );
    }
}
