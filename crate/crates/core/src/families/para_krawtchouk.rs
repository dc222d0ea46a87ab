use num_complex::Complex64;

use super::MonicCoeffs;
use crate::error::{Error, Result};
use crate::params::AlgebraParams;

/// `N = 2j + p` with `p ∈ {0, 1}`.
pub fn parity(big_n: usize) -> (usize, usize) {
    (big_n / 2, big_n % 2)
}

/// `Δ = −1` seed approaching the gap truncation `δ₀ − φ₀ = N` as `t → 0`:
/// `φ₀ + 1 = −j + t`, `−δ₀ = −j + t + 1 − p`,
/// `v₀ = (γ + p − 1)/(−2j + 2t − p + 1)`, `b̃₀ = (N + γ − 1)/2`.
pub fn parakrawtchouk_params(big_n: usize, gamma: f64, t: f64) -> Result<AlgebraParams> {
    if big_n == 0 {
        return Err(Error::InvalidParameter("para-krawtchouk requires N >= 1".into()));
    }
    if t.is_nan() || t <= 0.0 {
        return Err(Error::InvalidParameter("para-krawtchouk seed requires t > 0".into()));
    }
    let (j, p) = parity(big_n);
    let (j, p) = (j as f64, p as f64);
    let phi0 = -j + t - 1.0;
    let delta0 = j - t - 1.0 + p;
    let v0 = (gamma + p - 1.0) / (-2.0 * j + 2.0 * t - p + 1.0);
    let b0_tilde = 0.5 * (big_n as f64 + gamma - 1.0);
    Ok(AlgebraParams::from_b0_tilde(
        -1.0,
        phi0,
        delta0,
        Complex64::new(v0, 0.0),
        Complex64::new(b0_tilde, 0.0),
    ))
}

fn nonzero(x: f64, n: usize) -> Result<f64> {
    if x == 0.0 {
        Err(Error::SingularDenominator { n })
    } else {
        Ok(x)
    }
}

/// The `t → 0` limit of the general coefficients, valid for both parities.
pub fn parakrawtchouk_monic_coeffs(big_n: usize, gamma: f64, n: usize) -> Result<MonicCoeffs<f64>> {
    if n > big_n + 1 {
        return Err(Error::IndexOutOfRange { n, max: big_n + 1 });
    }
    let (_, p) = parity(big_n);
    let (nn, nf, p) = (big_n as f64, n as f64, p as f64);
    let lambda = nf * (nn + 1.0 - nf) * (nn - 2.0 * nf + p + gamma) * (nn - 2.0 * nf - p + 2.0 - gamma)
        / (4.0 * nonzero(2.0 * nf - nn + p - 1.0, n)? * nonzero(2.0 * nf - nn - p - 1.0, n)?);
    let b = -(nn - nf) * (nn - 2.0 * nf - 2.0 + p + gamma) / (2.0 * nonzero(2.0 * nf - nn - p + 1.0, n)?)
        - nf * (nn - 2.0 * nf + 2.0 - p - gamma) / (2.0 * nonzero(2.0 * nf - nn + p - 1.0, n)?);
    Ok(MonicCoeffs { lambda, b })
}
