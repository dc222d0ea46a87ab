use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{FamilySpec, MonicCoeffs};
use crate::algebra::{solve_b, solve_lambda};
use crate::error::{Error, Result};
use crate::extrapolate::richardson;
use crate::params::AlgebraParams;
use crate::tol::ABS_FLOOR;

/// Regularization steps used for the para-Krawtchouk limit; the general
/// solution is linear in `t` to leading order.
pub const PK_EXTRAPOLATION_STEPS: [f64; 2] = [1e-4, 1e-5];

/// A value written as a plain number for real families and `[re, im]`
/// otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportValue {
    Real(f64),
    Complex(Complex64),
}

impl ReportValue {
    fn new(z: Complex64, real: bool) -> Self {
        if real {
            ReportValue::Real(z.re)
        } else {
            ReportValue::Complex(z)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompareRecord {
    pub n: usize,
    pub lambda_general: ReportValue,
    pub lambda_closed: ReportValue,
    pub b_general: ReportValue,
    pub b_closed: ReportValue,
    pub rel_err: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub n_max: usize,
    pub tol: f64,
    pub max_rel_err: f64,
    pub passed: bool,
    pub records: Vec<CompareRecord>,
}

fn general_at(params: &AlgebraParams, n: usize) -> Result<MonicCoeffs<Complex64>> {
    Ok(MonicCoeffs {
        lambda: solve_lambda(params, n)?,
        b: solve_b(params, n)?,
    })
}

/// Coefficients of the general solution under the family map. For
/// para-Krawtchouk with `t = 0` the limit is taken by extrapolating from
/// [`PK_EXTRAPOLATION_STEPS`].
pub fn general_coeffs(spec: &FamilySpec, n: usize) -> Result<MonicCoeffs<Complex64>> {
    match *spec {
        FamilySpec::ParaKrawtchouk {
            n: big_n,
            gamma,
            t: 0.0,
        } => {
            let [t1, t2] = PK_EXTRAPOLATION_STEPS;
            let c1 = general_at(&super::parakrawtchouk_params(big_n, gamma, t1)?, n)?;
            let c2 = general_at(&super::parakrawtchouk_params(big_n, gamma, t2)?, n)?;
            Ok(MonicCoeffs {
                lambda: richardson(t1, c1.lambda, t2, c2.lambda, 1),
                b: richardson(t1, c1.b, t2, c2.b, 1),
            })
        }
        _ => general_at(&spec.algebra_params()?, n),
    }
}

/// Relative error of `λₙ`, and of `bₙ` measured against the local scale
/// `max(|bₙ|, √|λₙ|, √|λₙ₊₁|)` of the Jacobi matrix row, so that a diagonal
/// entry that vanishes analytically is not compared against rounding noise.
fn coeff_err(got: &MonicCoeffs<Complex64>, want: &MonicCoeffs<Complex64>, lambda_next: Complex64) -> f64 {
    let lambda_err = (got.lambda - want.lambda).norm() / want.lambda.norm().max(ABS_FLOOR);
    let row = want
        .b
        .norm()
        .max(want.lambda.norm().sqrt())
        .max(lambda_next.norm().sqrt())
        .max(ABS_FLOOR);
    lambda_err.max((got.b - want.b).norm() / row)
}

/// Compares the general solution against the family's closed forms for
/// `0 ≤ n ≤ n_max`.
pub fn family_compare(spec: &FamilySpec, n_max: usize, tol: f64) -> Result<FamilyReport> {
    spec.validate()?;
    if let Some(big_n) = spec.truncation() {
        if n_max > big_n {
            return Err(Error::IndexOutOfRange { n: n_max, max: big_n });
        }
    }
    let real = spec.is_real();
    let mut records = Vec::with_capacity(n_max + 1);
    let mut worst = 0.0f64;
    let mut next = spec.monic_coeffs(0)?;
    for n in 0..=n_max {
        let g = general_coeffs(spec, n)?;
        let c = next;
        next = spec.monic_coeffs(n + 1)?;
        let err = coeff_err(&g, &c, next.lambda);
        worst = worst.max(err);
        records.push(CompareRecord {
            n,
            lambda_general: ReportValue::new(g.lambda, real),
            lambda_closed: ReportValue::new(c.lambda, real),
            b_general: ReportValue::new(g.b, real),
            b_closed: ReportValue::new(c.b, real),
            rel_err: err,
        });
    }
    Ok(FamilyReport {
        spec: spec.clone(),
        n_max,
        tol,
        max_rel_err: worst,
        passed: worst <= tol,
        records,
    })
}
