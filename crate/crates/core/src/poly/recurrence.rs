use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::operator::{Scalar, TridiagonalOperator};

/// `x pₙ(x) = pₙ₊₁(x) + bₙ pₙ(x) + λₙ pₙ₋₁(x)` with `p₀ = 1`, `p₋₁ = 0`.
///
/// `lambdas[k]` holds `λ_{k+1}` and `diag[k]` holds `b_k`; there is one
/// more diagonal entry than there are `λ`s.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicRecurrence<T = f64> {
    lambdas: Vec<T>,
    diag: Vec<T>,
}

impl<T: Scalar> MonicRecurrence<T> {
    pub fn new(lambdas: Vec<T>, diag: Vec<T>) -> Result<Self> {
        if diag.is_empty() || lambdas.len() + 1 != diag.len() {
            return Err(Error::InvalidParameter(format!(
                "expected {} lambdas for {} diagonal entries",
                diag.len().saturating_sub(1),
                diag.len()
            )));
        }
        if lambdas.iter().chain(&diag).any(|x| !x.modulus().is_finite()) {
            return Err(Error::InvalidParameter("recurrence coefficients must be finite".into()));
        }
        Ok(Self { lambdas, diag })
    }

    /// Highest index `n` with stored `bₙ`.
    pub fn n_max(&self) -> usize {
        self.diag.len() - 1
    }

    /// `λₙ` for `1 ≤ n ≤ n_max`.
    pub fn lambda(&self, n: usize) -> T {
        self.lambdas[n - 1]
    }

    pub fn b(&self, n: usize) -> T {
        self.diag[n]
    }

    pub fn lambdas(&self) -> &[T] {
        &self.lambdas
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    /// `p₀(x), …, p_n(x)`.
    pub fn eval_all(&self, n: usize, x: T) -> Result<Vec<T>> {
        if n > self.diag.len() {
            return Err(Error::IndexOutOfRange {
                n,
                max: self.diag.len(),
            });
        }
        let mut out = Vec::with_capacity(n + 1);
        out.push(T::from_real(1.0));
        let mut prev = T::zero();
        let mut cur = T::from_real(1.0);
        for k in 0..n {
            let lam = if k == 0 { T::zero() } else { self.lambdas[k - 1] };
            let next = (x - self.diag[k]) * cur - lam * prev;
            prev = cur;
            cur = next;
            out.push(cur);
        }
        Ok(out)
    }
}

impl MonicRecurrence<Complex64> {
    /// Closed-form coefficients of a family for `0 ≤ n ≤ n_max`.
    pub fn from_family(spec: &FamilySpec, n_max: usize) -> Result<Self> {
        spec.validate()?;
        let mut lambdas = Vec::with_capacity(n_max);
        let mut diag = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let c = spec.monic_coeffs(n)?;
            if n > 0 {
                lambdas.push(c.lambda);
            }
            diag.push(c.b);
        }
        Self::new(lambdas, diag)
    }

    /// Real part, provided every imaginary part is below `tol`.
    pub fn to_real(&self, tol: f64) -> Option<MonicRecurrence<f64>> {
        let all = self.lambdas.iter().chain(&self.diag);
        if all.clone().any(|z| z.im.abs() > tol) {
            return None;
        }
        Some(MonicRecurrence {
            lambdas: self.lambdas.iter().map(|z| z.re).collect(),
            diag: self.diag.iter().map(|z| z.re).collect(),
        })
    }
}

impl MonicRecurrence<f64> {
    /// Closed-form coefficients of a family whose coefficients are real,
    /// up to imaginary parts of relative size 1e-12.
    pub fn real_family(spec: &FamilySpec, n_max: usize) -> Result<Self> {
        let rec = MonicRecurrence::<Complex64>::from_family(spec, n_max)?;
        let real = |z: &Complex64| z.im.abs() <= 1e-12 * (1.0 + z.re.abs());
        if !rec.lambdas.iter().chain(&rec.diag).all(real) {
            return Err(Error::InvalidParameter(format!(
                "{} coefficients are not real",
                spec.name()
            )));
        }
        Ok(MonicRecurrence {
            lambdas: rec.lambdas.iter().map(|z| z.re).collect(),
            diag: rec.diag.iter().map(|z| z.re).collect(),
        })
    }
}

/// Monic `pₙ(x)` by forward recurrence.
pub fn monic_eval<T: Scalar>(rec: &MonicRecurrence<T>, n: usize, x: T) -> Result<T> {
    Ok(*rec.eval_all(n, x)?.last().expect("p0 is always present"))
}

/// Symmetric tridiagonal matrix with diagonal `bₙ` and off-diagonal `√λₙ`.
pub fn jacobi_matrix(rec: &MonicRecurrence<f64>, dim: usize) -> Result<TridiagonalOperator<f64>> {
    if dim == 0 || dim > rec.diag.len() {
        return Err(Error::IndexOutOfRange {
            n: dim,
            max: rec.diag.len(),
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
    TridiagonalOperator::new(off.clone(), rec.diag[..dim].to_vec(), off)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn legendre(n_max: usize) -> MonicRecurrence {
        MonicRecurrence::real_family(&FamilySpec::Jacobi { alpha: 0.0, beta: 0.0 }, n_max).unwrap()
    }

    #[test]
    fn first_terms() {
        let rec = MonicRecurrence::new(vec![0.3, 0.7], vec![0.25, -1.0, 2.0]).unwrap();
        assert_eq!(monic_eval(&rec, 0, 3.7).unwrap(), 1.0);
        assert_eq!(monic_eval(&rec, 1, 3.7).unwrap(), 3.7 - 0.25);
        assert!(matches!(monic_eval(&rec, 4, 0.0), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn legendre_p2() {
        let rec = legendre(4);
        assert!((monic_eval(&rec, 2, 1.0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
        // p₃ = x³ − 3x/5.
        let x: f64 = 0.37;
        assert!((monic_eval(&rec, 3, x).unwrap() - (x.powi(3) - 0.6 * x)).abs() < 1e-15);
    }

    #[test]
    fn complex_argument() {
        let rec = legendre(3);
        let z = Complex64::new(0.0, 1.0);
        let crec = MonicRecurrence::new(
            rec.lambdas().iter().map(|&l| Complex64::new(l, 0.0)).collect(),
            rec.diag().iter().map(|&b| Complex64::new(b, 0.0)).collect(),
        )
        .unwrap();
        // p₂(i) = −1 − 1/3.
        assert!((monic_eval(&crec, 2, z).unwrap() - Complex64::new(-4.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn jacobi_matrices() {
        let rec = legendre(5);
        let j1 = jacobi_matrix(&rec, 1).unwrap();
        assert_eq!(j1.diag(), &[0.0]);
        let j3 = jacobi_matrix(&rec, 3).unwrap();
        assert!(j3.is_symmetric());
        assert!((j3.sub()[0] - (1.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!((j3.sub()[1] - (4.0f64 / 15.0).sqrt()).abs() < 1e-15);

        let hahn = MonicRecurrence::real_family(
            &FamilySpec::Hahn {
                alpha: 0.0,
                beta: 0.0,
                n: 1,
            },
            1,
        )
        .unwrap();
        assert_eq!(
            jacobi_matrix(&hahn, 2).unwrap().to_dense(),
            vec![vec![0.5, 0.5], vec![0.5, 0.5]]
        );
    }

    #[test]
    fn rejects_non_positive_lambda() {
        let rec = MonicRecurrence::new(vec![1.0, -0.5], vec![0.0, 0.0, 0.0]).unwrap();
        assert!(matches!(
            jacobi_matrix(&rec, 3),
            Err(Error::NonPositiveLambda { n: 2, .. })
        ));
        assert!(jacobi_matrix(&rec, 2).is_ok());
    }
}
