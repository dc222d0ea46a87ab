use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::eigen::symmetric_tridiagonal_eigen;
use super::recurrence::MonicRecurrence;
use crate::error::{Error, Result};
use crate::operator::TridiagonalOperator;
use crate::tol::WEIGHT_FLUSH;

/// Nodes and weights of a discrete measure.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralData {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl SpectralData {
    pub fn dim(&self) -> usize {
        self.nodes.len()
    }

    pub fn total_mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// `Σₛ weightₛ f(nodeₛ)`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Two columns with a header row; 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("node,weight\n");
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            writeln!(out, "{x:.16e},{w:.16e}").expect("writing to a String cannot fail");
        }
        out
    }
}

/// Gaussian quadrature from a symmetric Jacobi matrix: nodes are its
/// eigenvalues, weights are `total_mass` times the squared first components
/// of the normalized eigenvectors.
pub fn quadrature(j: &TridiagonalOperator<f64>, total_mass: f64) -> Result<SpectralData> {
    if !j.is_symmetric() {
        return Err(Error::InvalidParameter(
            "quadrature requires a symmetric operator".into(),
        ));
    }
    let (nodes, first) = symmetric_tridiagonal_eigen(j.diag(), j.sub())?;
    let weights = first
        .iter()
        .map(|z| {
            let w = total_mass * z * z;
            if w.abs() < WEIGHT_FLUSH {
                if w != 0.0 {
                    log::warn!("flushing quadrature weight {w:e} to zero");
                }
                0.0
            } else {
                w
            }
        })
        .collect();
    Ok(SpectralData { nodes, weights })
}

/// Eigenvector of the symmetric tridiagonal matrix `(diag, off)` for the
/// eigenvalue `x`, scaled so its largest entry is one.
///
/// Uses a twisted factorization: a top-down and a bottom-up LDLᵀ sweep meet
/// at the index where the eigenvector is largest. Forward recurrence alone
/// loses all accuracy once the components start to decay.
fn twisted_eigenvector(diag: &[f64], off: &[f64], x: f64) -> Vec<f64> {
    let n = diag.len();
    let scale = diag
        .iter()
        .chain(off)
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    let guard = |d: f64| if d == 0.0 { f64::EPSILON * scale } else { d };

    let mut lower = vec![0.0; n.saturating_sub(1)];
    let mut dp = vec![0.0; n];
    dp[0] = guard(diag[0] - x);
    for i in 0..n - 1 {
        lower[i] = off[i] / dp[i];
        dp[i + 1] = guard(diag[i + 1] - x - lower[i] * off[i]);
    }
    let mut upper = vec![0.0; n.saturating_sub(1)];
    let mut dm = vec![0.0; n];
    dm[n - 1] = guard(diag[n - 1] - x);
    for i in (0..n - 1).rev() {
        upper[i] = off[i] / dm[i + 1];
        dm[i] = guard(diag[i] - x - upper[i] * off[i]);
    }
    let twist = (0..n)
        .min_by(|&a, &b| {
            let g = |k: usize| (dp[k] + dm[k] - (diag[k] - x)).abs();
            g(a).total_cmp(&g(b))
        })
        .unwrap_or(0);

    let mut z = vec![0.0; n];
    z[twist] = 1.0;
    for i in (0..twist).rev() {
        z[i] = -lower[i] * z[i + 1];
    }
    for i in twist..n - 1 {
        z[i + 1] = -upper[i] * z[i];
    }
    let big = z.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    z.iter().map(|v| v / big).collect()
}

/// `max |Gₘₙ/√(GₘₘGₙₙ) − δₘₙ|` over `m, n ≤ n_max`, with
/// `Gₘₙ = Σₛ wₛ pₘ(xₛ) pₙ(xₛ)`.
///
/// `pₙ(xₛ)` is read off the eigenvector of the Jacobi matrix at `xₛ`, which
/// equals `(p₀, p₁/√λ₁, p₂/√(λ₁λ₂), …)(xₛ)` up to a factor; the normalized
/// Gram entries do not depend on that factor. `rec` must reach index
/// `quad.dim() − 1`.
pub fn gram_check(rec: &MonicRecurrence<f64>, quad: &SpectralData, n_max: usize) -> Result<f64> {
    let dim = quad.dim();
    if n_max >= dim {
        return Err(Error::ExactnessViolation { n_max, dim });
    }
    if rec.diag().len() < dim {
        return Err(Error::IndexOutOfRange {
            n: dim,
            max: rec.diag().len(),
        });
    }
    let mut off = Vec::with_capacity(dim - 1);
    for n in 1..dim {
        let lam = rec.lambda(n);
        if lam.is_nan() || lam <= 0.0 {
            return Err(Error::NonPositiveLambda { n, value: lam });
        }
        off.push(lam.sqrt());
    }
    let diag = &rec.diag()[..dim];
    // Row s holds qₙ(xₛ) = zₙ/z₀, the orthonormal polynomials at node s.
    let values: Vec<Vec<f64>> = quad
        .nodes
        .iter()
        .map(|&x| {
            let z = twisted_eigenvector(diag, &off, x);
            z[..=n_max].iter().map(|v| v / z[0]).collect()
        })
        .collect();
    let gram = |m: usize, n: usize| -> f64 { values.iter().zip(&quad.weights).map(|(q, &w)| w * q[m] * q[n]).sum() };
    let norms: Vec<f64> = (0..=n_max).map(|n| gram(n, n)).collect();
    let mut worst = 0.0f64;
    for m in 0..=n_max {
        for n in 0..=m {
            let g = gram(m, n) / (norms[m] * norms[n]).sqrt();
            let target = if m == n { 1.0 } else { 0.0 };
            worst = worst.max((g - target).abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;
    use crate::poly::jacobi_matrix;

    #[test]
    fn single_node() {
        let j = TridiagonalOperator::diagonal(vec![0.7]).unwrap();
        let q = quadrature(&j, 2.5).unwrap();
        assert_eq!(q.nodes, vec![0.7]);
        assert_eq!(q.weights, vec![2.5]);
    }

    #[test]
    fn two_point_rules() {
        let j = TridiagonalOperator::new(vec![0.5], vec![0.5, 0.5], vec![0.5]).unwrap();
        let q = quadrature(&j, 1.0).unwrap();
        assert!(q.nodes[0].abs() < 1e-15 && (q.nodes[1] - 1.0).abs() < 1e-15);
        assert!(q.weights.iter().all(|w| (w - 0.5).abs() < 1e-15));

        let rec = MonicRecurrence::real_family(&FamilySpec::Jacobi { alpha: 0.0, beta: 0.0 }, 2).unwrap();
        let q = quadrature(&jacobi_matrix(&rec, 2).unwrap(), 1.0).unwrap();
        let x = 1.0 / 3.0f64.sqrt();
        assert!((q.nodes[0] + x).abs() < 1e-15 && (q.nodes[1] - x).abs() < 1e-15);
        assert!(q.weights.iter().all(|w| (w - 0.5).abs() < 1e-15));
    }

    #[test]
    fn legendre_gram() {
        let rec = MonicRecurrence::real_family(&FamilySpec::Jacobi { alpha: 0.0, beta: 0.0 }, 30).unwrap();
        let q = quadrature(&jacobi_matrix(&rec, 30).unwrap(), 1.0).unwrap();
        assert!(gram_check(&rec, &q, 20).unwrap() <= 1e-10);
        assert!(gram_check(&rec, &q, 0).unwrap() == 0.0);
        assert!(matches!(
            gram_check(&rec, &q, 30),
            Err(Error::ExactnessViolation { .. })
        ));
    }

    #[test]
    fn hahn_discrete_orthogonality() {
        let spec = FamilySpec::Hahn {
            alpha: 0.3,
            beta: 0.7,
            n: 12,
        };
        let rec = MonicRecurrence::real_family(&spec, 12).unwrap();
        let q = quadrature(&jacobi_matrix(&rec, 13).unwrap(), 1.0).unwrap();
        assert!(gram_check(&rec, &q, 12).unwrap() <= 1e-10);
    }

    #[test]
    fn csv_has_header_and_full_precision() {
        let q = SpectralData {
            nodes: vec![0.1],
            weights: vec![1.0 / 3.0],
        };
        let csv = q.to_csv();
        assert!(csv.starts_with("node,weight\n"));
        let line = csv.lines().nth(1).unwrap();
        let w: f64 = line.split(',').nth(1).unwrap().parse().unwrap();
        assert_eq!(w, 1.0 / 3.0);
        assert_eq!(
            serde_json::to_string(&q).unwrap(),
            r#"{"nodes":[0.1],"weights":[0.3333333333333333]}"#
        );
    }
}
