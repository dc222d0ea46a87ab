//! Residuals of the defining relation `ZX − XZ = Z² + Δ` and of the five
//! entrywise conditions it imposes on the coefficient sequences.

use num_complex::Complex64;

use crate::algebra::RepCoefficients;
use crate::error::{Error, Result};
use crate::operator::{Scalar, TridiagonalOperator};

/// Which entries of the commutator residual are inspected.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResidualWindow {
    /// Rows and columns `0..=dim-3`, the block unaffected by cutting a
    /// semi-infinite representation.
    Interior,
    /// Every entry; correct only for a closed (finite) representation.
    Full,
}

fn product_entry<T: Scalar>(a: &TridiagonalOperator<T>, b: &TridiagonalOperator<T>, i: usize, k: usize) -> T {
    let n = a.dim();
    let lo = i.max(k).saturating_sub(1);
    let hi = (i.min(k) + 1).min(n - 1);
    let mut acc = T::zero();
    for j in lo..=hi {
        acc = acc + a.get(i, j) * b.get(j, k);
    }
    acc
}

/// Largest modulus of an entry of `ZX − XZ − Z² − ΔI` inside `window`.
pub fn relation_residual<T: Scalar>(
    x: &TridiagonalOperator<T>,
    z: &TridiagonalOperator<T>,
    delta: f64,
    window: ResidualWindow,
) -> Result<f64> {
    if x.dim() != z.dim() {
        return Err(Error::DimensionMismatch { x: x.dim(), z: z.dim() });
    }
    let n = x.dim();
    let limit = match window {
        ResidualWindow::Full => n,
        ResidualWindow::Interior => n.saturating_sub(2),
    };
    let mut worst = 0.0f64;
    for i in 0..limit {
        for k in i.saturating_sub(2)..(i + 3).min(limit) {
            let mut r = product_entry(z, x, i, k) - product_entry(x, z, i, k) - product_entry(z, z, i, k);
            if i == k {
                r = r - T::from_real(delta);
            }
            worst = worst.max(r.modulus());
        }
    }
    Ok(worst)
}

/// Per-condition residuals of the entrywise relations, in order:
///
/// 1. `cₙuₙ₋₁ − cₙ₋₁uₙ − uₙ₋₁uₙ`
/// 2. `bₙuₙ − bₙ₋₁uₙ + cₙvₙ₋₁ − uₙvₙ₋₁ − cₙvₙ − uₙvₙ`
/// 3. `−Δ − aₙ₋₁uₙ + aₙuₙ₊₁ − vₙ² + cₙwₙ₋₁ − uₙwₙ₋₁ − cₙ₊₁wₙ − uₙ₊₁wₙ`
/// 4. `aₙvₙ₊₁ − aₙvₙ + bₙwₙ − bₙ₊₁wₙ − vₙwₙ − vₙ₊₁wₙ`
/// 5. `aₙwₙ₊₁ − aₙ₊₁wₙ − wₙwₙ₊₁`
///
/// Each entry is the largest `|sum| / (1 + Σ|term|)` over the indices at
/// which the condition only involves retained coefficients.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct ConditionResiduals(pub [f64; 5]);

impl ConditionResiduals {
    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(0.0, f64::max)
    }
}

fn scaled(terms: &[Complex64]) -> f64 {
    let sum: Complex64 = terms.iter().sum();
    let mag: f64 = terms.iter().map(|t| t.norm()).sum();
    sum.norm() / (1.0 + mag)
}

pub fn condition_residuals(co: &RepCoefficients, delta: f64, closed: bool) -> ConditionResiduals {
    let d = co.size;
    let zero = Complex64::new(0.0, 0.0);
    let at = |s: &Vec<Complex64>, n: usize| s.get(n).copied().unwrap_or(zero);
    let (a, b, c, u, v, w) = (&co.a, &co.b, &co.c, &co.u, &co.v, &co.w);
    let mut out = [0.0f64; 5];

    for n in 1..d {
        let r5 = scaled(&[c[n] * u[n - 1], -c[n - 1] * u[n], -u[n - 1] * u[n]]);
        let r6 = scaled(&[
            b[n] * u[n],
            -b[n - 1] * u[n],
            c[n] * v[n - 1],
            -u[n] * v[n - 1],
            -c[n] * v[n],
            -u[n] * v[n],
        ]);
        out[0] = out[0].max(r5);
        out[1] = out[1].max(r6);
    }

    // Conditions reaching index n + 1 are only complete inside the window,
    // unless the ladder closes and every coefficient beyond it is zero.
    let upper = if closed { d } else { d.saturating_sub(1) };
    for n in 0..upper {
        let am1 = if n > 0 { a[n - 1] } else { zero };
        let wm1 = if n > 0 { w[n - 1] } else { zero };
        let r7 = scaled(&[
            Complex64::new(-delta, 0.0),
            -am1 * u[n],
            a[n] * at(u, n + 1),
            -v[n] * v[n],
            c[n] * wm1,
            -u[n] * wm1,
            -at(c, n + 1) * w[n],
            -at(u, n + 1) * w[n],
        ]);
        let r8 = scaled(&[
            a[n] * at(v, n + 1),
            -a[n] * v[n],
            b[n] * w[n],
            -at(b, n + 1) * w[n],
            -v[n] * w[n],
            -at(v, n + 1) * w[n],
        ]);
        let r9 = scaled(&[a[n] * at(w, n + 1), -at(a, n + 1) * w[n], -w[n] * at(w, n + 1)]);
        out[2] = out[2].max(r7);
        out[3] = out[3].max(r8);
        out[4] = out[4].max(r9);
    }
    ConditionResiduals(out)
}
