//! Implicit QL iteration with Wilkinson-type shifts for symmetric
//! tridiagonal matrices. Only the first row of the eigenvector matrix is
//! accumulated, which is all Gaussian quadrature needs.

use crate::error::{Error, Result};
use crate::operator::TridiagonalOperator;

const MAX_SWEEPS_PER_EIGENVALUE: usize = 60;

/// Eigenvalues (ascending) of the symmetric tridiagonal matrix with
/// diagonal `diag` and off-diagonal `off`, together with the first
/// component of each normalized eigenvector.
pub fn symmetric_tridiagonal_eigen(diag: &[f64], off: &[f64]) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = diag.len();
    if n == 0 || off.len() + 1 != n {
        return Err(Error::InvalidParameter(
            "off-diagonal must be one shorter than the diagonal".into(),
        ));
    }
    let mut d = diag.to_vec();
    let mut e = off.to_vec();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;

    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_SWEEPS_PER_EIGENVALUE {
                return Err(Error::ConvergenceFailure { index: l });
            }

            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    // Underflow: split the matrix and restart this sweep.
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;

                let f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    Ok((
        order.iter().map(|&i| d[i]).collect(),
        order.iter().map(|&i| z[i]).collect(),
    ))
}

/// Sorted eigenvalues of a real symmetric tridiagonal operator.
pub fn spectrum(j: &TridiagonalOperator<f64>) -> Result<Vec<f64>> {
    if !j.is_symmetric() {
        return Err(Error::InvalidParameter("spectrum requires a symmetric operator".into()));
    }
    Ok(symmetric_tridiagonal_eigen(j.diag(), j.sub())?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let j = TridiagonalOperator::new(vec![0.5], vec![0.5, 0.5], vec![0.5]).unwrap();
        let ev = spectrum(&j).unwrap();
        assert!(ev[0].abs() < 1e-15 && (ev[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn diagonal_input_is_sorted() {
        let j = TridiagonalOperator::diagonal(vec![3.0, -1.0, 2.0, 0.5]).unwrap();
        assert_eq!(spectrum(&j).unwrap(), vec![-1.0, 0.5, 2.0, 3.0]);
    }

    #[test]
    fn first_components_are_normalized() {
        let d = [1.0, -2.0, 0.3, 4.0, 0.0];
        let e = [0.7, 1.1, -0.4, 2.0];
        let (_, z) = symmetric_tridiagonal_eigen(&d, &e).unwrap();
        let sum: f64 = z.iter().map(|x| x * x).sum();
        assert!((sum - 1.0).abs() < 1e-14);
    }

    #[test]
    fn split_blocks() {
        let d = [1.0, 2.0, 5.0, 3.0];
        let e = [0.0, 0.0, 0.0];
        let (ev, z) = symmetric_tridiagonal_eigen(&d, &e).unwrap();
        assert_eq!(ev, vec![1.0, 2.0, 3.0, 5.0]);
        assert_eq!(z, vec![1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn rejects_asymmetric() {
        let j = TridiagonalOperator::new(vec![1.0], vec![0.0, 0.0], vec![2.0]).unwrap();
        assert!(spectrum(&j).is_err());
    }
}
