use super::MonicCoeffs;
use crate::params::AlgebraParams;

/// `Δ = 0` seed whose `X` carries the monic Jacobi recurrence:
/// `β = φ₀`, `α = −δ₀ − 1`, `v₀ = 2/(α + β + 2)`, `b̃₀ = 0`.
pub fn jacobi_params(alpha: f64, beta: f64) -> AlgebraParams {
    let phi0 = beta;
    let delta0 = -alpha - 1.0;
    let v0 = 2.0 / (alpha + beta + 2.0);
    let b0 = 0.5 * (delta0 + phi0 + 1.0) * v0;
    AlgebraParams::new(0.0, phi0, delta0, v0, b0)
}

/// Monic Jacobi coefficients.
///
/// `λ₁` and `b₀` are evaluated in their cancelled forms so that
/// `α + β ∈ {0, −1}` stays finite.
pub fn jacobi_monic_coeffs(alpha: f64, beta: f64, n: usize) -> MonicCoeffs<f64> {
    let ab = alpha + beta;
    let nf = n as f64;
    let lambda = match n {
        0 => 0.0,
        1 => 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)),
        _ => {
            let t = 2.0 * nf + ab;
            4.0 * nf * (nf + alpha) * (nf + beta) * (nf + ab) / (t * t * (t + 1.0) * (t - 1.0))
        }
    };
    let b = if n == 0 {
        (beta - alpha) / (ab + 2.0)
    } else {
        let t = 2.0 * nf + ab;
        (beta * beta - alpha * alpha) / (t * (t + 2.0))
    };
    MonicCoeffs { lambda, b }
}
