//! Richardson extrapolation of a quantity sampled at two step sizes.

use num_complex::Complex64;

/// Eliminates the `h^order` term from samples `(h1, f1)` and `(h2, f2)`.
pub fn richardson(h1: f64, f1: Complex64, h2: f64, f2: Complex64, order: i32) -> Complex64 {
    let (p1, p2) = (h1.powi(order), h2.powi(order));
    (p1 * f2 - p2 * f1) / (p1 - p2)
}
