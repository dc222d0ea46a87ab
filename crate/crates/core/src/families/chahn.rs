use num_complex::Complex64;

use super::MonicCoeffs;
use crate::error::{Error, Result};
use crate::params::AlgebraParams;
use crate::tol::ABS_FLOOR;

type C = Complex64;

const I: C = C::new(0.0, 1.0);

/// `Δ = ¼` seed for the continuous Hahn family:
/// `φ₀ + 1 = a + c`, `−δ₀ = b + d`, `v₀ = −i(a − b − c + d)/(2(a + b + c + d))`,
/// `b̃₀ = i(a + b − c − d)/4`.
///
/// `φ₀` and `δ₀` are real seeds, so `a + c` and `b + d` must be real.
pub fn chahn_params(a: C, b: C, c: C, d: C) -> Result<AlgebraParams> {
    let sum = a + b + c + d;
    if sum.norm() <= ABS_FLOOR {
        return Err(Error::ZeroParameterSum);
    }
    let ac = a + c;
    let bd = b + d;
    if ac.im.abs() > 1e-12 * (1.0 + ac.norm()) || bd.im.abs() > 1e-12 * (1.0 + bd.norm()) {
        return Err(Error::InvalidParameter("a + c and b + d must be real".into()));
    }
    let phi0 = ac.re - 1.0;
    let delta0 = -bd.re;
    let v0 = -I * (a - b - c + d) / (2.0 * sum);
    let b0_tilde = I * (a + b - c - d) / 4.0;
    Ok(AlgebraParams::from_b0_tilde(0.25, phi0, delta0, v0, b0_tilde))
}

fn nonzero(x: C, n: usize) -> Result<C> {
    if x.norm() <= ABS_FLOOR {
        Err(Error::SingularDenominator { n })
    } else {
        Ok(x)
    }
}

/// Monic continuous Hahn coefficients.
pub fn chahn_monic_coeffs(a: C, b: C, c: C, d: C, n: usize) -> Result<MonicCoeffs<C>> {
    let s = a + b + c + d;
    let nf = n as f64;
    let lambda = if n == 0 {
        C::new(0.0, 0.0)
    } else {
        let d1 = nonzero(2.0 * nf + s - 1.0, n)?;
        let d2 = nonzero(2.0 * nf + s - 2.0, n)?;
        let d3 = nonzero(2.0 * nf + s - 3.0, n)?;
        (nf + a + c - 1.0) * (nf + b + d - 1.0) * nf * (nf + s - 2.0) * (nf + a + d - 1.0) * (nf + b + c - 1.0)
            / (d1 * d2 * d2 * d3)
    };
    let up =
        -(nf + s - 1.0) * (nf + a + c) * (nf + a + d) / (nonzero(2.0 * nf + s - 1.0, n)? * nonzero(2.0 * nf + s, n)?);
    let down = if n == 0 {
        C::new(0.0, 0.0)
    } else {
        nf * (nf + b + c - 1.0) * (nf + b + d - 1.0) / (nonzero(2.0 * nf + s - 2.0, n)? * (2.0 * nf + s - 1.0))
    };
    Ok(MonicCoeffs {
        lambda,
        b: I * (up + down + a),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> C {
        C::new(x, 0.0)
    }

    #[test]
    fn symmetric_seed() {
        let h = r(0.5);
        let p = chahn_params(h, h, h, h).unwrap();
        assert_eq!((p.delta, p.phi0, p.delta0), (0.25, 0.0, -1.0));
        assert_eq!(p.v0.norm(), 0.0);
        assert_eq!(p.b0_tilde().norm(), 0.0);
        assert!(matches!(
            chahn_params(r(1.0), r(-1.0), r(0.5), r(-0.5)),
            Err(Error::ZeroParameterSum)
        ));
    }

    #[test]
    fn self_conjugate_seed_is_real() {
        let a = C::new(0.7, 0.4);
        let b = C::new(1.3, -0.9);
        let p = chahn_params(a, b, a.conj(), b.conj()).unwrap();
        assert!(p.v0.im.abs() < 1e-16);
        assert!(p.b0_tilde().im.abs() < 1e-16);
    }

    #[test]
    fn symmetric_values() {
        let h = r(0.5);
        assert_eq!(chahn_monic_coeffs(h, h, h, h, 0).unwrap().b.norm(), 0.0);
        let c1 = chahn_monic_coeffs(h, h, h, h, 1).unwrap();
        assert!((c1.lambda - r(1.0 / 12.0)).norm() < 1e-16);
        // a + b + c + d = 2: λₙ = n⁴/(4(4n² − 1)).
        for n in 1..20 {
            let nf = n as f64;
            let want = nf.powi(4) / (4.0 * (4.0 * nf * nf - 1.0));
            let got = chahn_monic_coeffs(h, h, h, h, n).unwrap().lambda;
            assert!((got - r(want)).norm() < 1e-14 * want);
        }
    }

    #[test]
    fn factorization_identity_example() {
        // a = b = c = d = 1, n = 1: ¼(2 + φ₀ − δ₀ − 1)² + v₀²(φ₀ − δ₀ + 1)² = 4.
        let one = r(1.0);
        let p = chahn_params(one, one, one, one).unwrap();
        let d = p.phi0 - p.delta0;
        let lhs = 0.25 * (1.0 + d) * (1.0 + d) + p.v0 * p.v0 * (d + 1.0) * (d + 1.0);
        assert!((lhs - r(4.0)).norm() < 1e-14);
    }

    #[test]
    fn singular_denominator() {
        // a + b + c + d = 1: 2n + s − 3 = 0 at n = 1.
        let q = r(0.25);
        assert!(matches!(
            chahn_monic_coeffs(q, q, q, q, 1),
            Err(Error::SingularDenominator { n: 1 })
        ));
    }
}
