use num_complex::Complex64;

use super::MonicCoeffs;
use crate::error::{Error, Result};
use crate::params::AlgebraParams;

/// `Δ = −¼` seed closing on `N + 1` states through the branch truncation:
/// `φ₀ = β`, `−δ₀ = α + 1`, `v₀ = −(α + β + 2N + 2)/(2(α + β + 2))`,
/// `b̃₀ = (2N − α + β)/4`.
pub fn hahn_params(alpha: f64, beta: f64, n: usize) -> Result<AlgebraParams> {
    let ab2 = alpha + beta + 2.0;
    if ab2 == 0.0 {
        return Err(Error::SingularDenominator { n: 0 });
    }
    let nf = n as f64;
    let v0 = -(alpha + beta + 2.0 * nf + 2.0) / (2.0 * ab2);
    let b0_tilde = 0.25 * (2.0 * nf - alpha + beta);
    Ok(AlgebraParams::from_b0_tilde(
        -0.25,
        beta,
        -alpha - 1.0,
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

/// Monic Hahn coefficients on the lattice `{0, …, N}`. Index `N + 1` is
/// accepted and returns `λ_{N+1} = 0`.
pub fn hahn_monic_coeffs(alpha: f64, beta: f64, big_n: usize, n: usize) -> Result<MonicCoeffs<f64>> {
    if n > big_n + 1 {
        return Err(Error::IndexOutOfRange { n, max: big_n + 1 });
    }
    let ab = alpha + beta;
    let nf = n as f64;
    let bn = big_n as f64;
    let t = 2.0 * nf + ab;
    let lambda = match n {
        0 => 0.0,
        // (n + α + β) cancels against (2n + α + β − 1) at n = 1.
        1 => (1.0 + alpha) * bn * (1.0 + beta) * (2.0 + ab + bn) / (nonzero(ab + 2.0, n)? * (ab + 2.0) * (ab + 3.0)),
        _ => {
            nf * (nf + alpha) * (nf + beta) * (nf + ab) * (nf + ab + bn + 1.0) * (bn - nf + 1.0)
                / (nonzero(t - 1.0, n)? * nonzero(t, n)? * t * nonzero(t + 1.0, n)?)
        }
    };
    let up = if n == 0 {
        (alpha + 1.0) * bn / nonzero(ab + 2.0, n)?
    } else {
        (nf + ab + 1.0) * (nf + alpha + 1.0) * (bn - nf) / (nonzero(t + 1.0, n)? * nonzero(t + 2.0, n)?)
    };
    let down = if n == 0 {
        0.0
    } else {
        nf * (nf + ab + bn + 1.0) * (nf + beta) / (nonzero(t, n)? * (t + 1.0))
    };
    Ok(MonicCoeffs { lambda, b: up + down })
}
