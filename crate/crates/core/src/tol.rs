//! Shared tolerances and comparison helpers.

use num_complex::Complex64;

/// Differences below this are treated as agreement regardless of magnitude.
pub const ABS_FLOOR: f64 = 1e-14;

/// Default tolerance on the truncation equalities.
pub const TRUNCATION_TOL: f64 = 1e-9;

/// Default search bound for truncation candidates.
pub const TRUNCATION_SEARCH_MAX: usize = 1024;

/// Quadrature weights below this are flushed to zero.
pub const WEIGHT_FLUSH: f64 = 1e-300;

/// Relative error of `got` against `want` with the absolute floor applied.
pub fn rel_err(got: f64, want: f64) -> f64 {
    let diff = (got - want).abs();
    if diff <= ABS_FLOOR {
        0.0
    } else if !diff.is_finite() {
        f64::INFINITY
    } else {
        diff / want.abs().max(ABS_FLOOR)
    }
}

/// Componentwise relative error on (re, im).
pub fn rel_err_c(got: Complex64, want: Complex64) -> f64 {
    rel_err(got.re, want.re).max(rel_err(got.im, want.im))
}

/// `|x| <= tol * scale`, with the absolute floor.
pub fn negligible(x: f64, scale: f64, tol: f64) -> bool {
    x.abs() <= (tol * scale.abs()).max(ABS_FLOOR)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_absorbs_tiny_differences() {
        assert_eq!(rel_err(1e-17, 0.0), 0.0);
        assert_eq!(rel_err(1.0, 1.0 + 1e-15), 0.0);
        assert!((rel_err(1.1, 1.0) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn complex_is_componentwise() {
        let e = rel_err_c(Complex64::new(1.0, 2.2), Complex64::new(1.0, 2.0));
        assert!((e - 0.1).abs() < 1e-12);
        assert_eq!(rel_err(f64::NAN, 1.0), f64::INFINITY);
    }
}
