//! Banded (tridiagonal) operators over the real or complex numbers.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Field elements the operators are built over.
pub trait Scalar:
    Copy
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Mul<f64, Output = Self>
    + Send
    + Sync
{
    fn zero() -> Self;
    fn from_real(x: f64) -> Self;
    fn modulus(self) -> f64;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn from_real(x: f64) -> Self {
        x
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
}

/// Matrix with non-zero entries only on the three central diagonals.
///
/// `sub[i]` is entry `(i+1, i)`, `sup[i]` is entry `(i, i+1)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Serialize", deserialize = "T: Deserialize<'de>"))]
pub struct TridiagonalOperator<T = f64> {
    sub: Vec<T>,
    diag: Vec<T>,
    sup: Vec<T>,
}

impl<T: Scalar> TridiagonalOperator<T> {
    pub fn new(sub: Vec<T>, diag: Vec<T>, sup: Vec<T>) -> Result<Self> {
        let n = diag.len();
        if n == 0 {
            return Err(Error::InvalidParameter("operator dimension must be at least 1".into()));
        }
        if sub.len() != n - 1 || sup.len() != n - 1 {
            return Err(Error::InvalidParameter(format!(
                "off-diagonals must have length {} (got {} and {})",
                n - 1,
                sub.len(),
                sup.len()
            )));
        }
        Ok(Self { sub, diag, sup })
    }

    pub fn diagonal(diag: Vec<T>) -> Result<Self> {
        let n = diag.len().saturating_sub(1);
        Self::new(vec![T::zero(); n], diag, vec![T::zero(); n])
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn sub(&self) -> &[T] {
        &self.sub
    }

    pub fn diag(&self) -> &[T] {
        &self.diag
    }

    pub fn sup(&self) -> &[T] {
        &self.sup
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        if row == col {
            self.diag[row]
        } else if row == col + 1 {
            self.sub[col]
        } else if col == row + 1 {
            self.sup[row]
        } else {
            T::zero()
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.sub
            .iter()
            .chain(&self.diag)
            .chain(&self.sup)
            .map(|x| x.modulus())
            .fold(0.0, f64::max)
    }

    /// `self + mu * other`.
    pub fn add_scaled(&self, mu: f64, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                x: self.dim(),
                z: other.dim(),
            });
        }
        let zip = |a: &[T], b: &[T]| a.iter().zip(b).map(|(&x, &y)| x + y * mu).collect();
        Ok(Self {
            sub: zip(&self.sub, &other.sub),
            diag: zip(&self.diag, &other.diag),
            sup: zip(&self.sup, &other.sup),
        })
    }

    /// Leading principal `k × k` block.
    pub fn leading(&self, k: usize) -> Result<Self> {
        if k == 0 || k > self.dim() {
            return Err(Error::IndexOutOfRange { n: k, max: self.dim() });
        }
        Ok(Self {
            sub: self.sub[..k - 1].to_vec(),
            diag: self.diag[..k].to_vec(),
            sup: self.sup[..k - 1].to_vec(),
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.sub == self.sup
    }
}

impl TridiagonalOperator<Complex64> {
    /// Largest imaginary part over all stored entries.
    pub fn max_imag(&self) -> f64 {
        self.sub
            .iter()
            .chain(&self.diag)
            .chain(&self.sup)
            .map(|x| x.im.abs())
            .fold(0.0, f64::max)
    }

    /// Real part, provided every imaginary part is below `tol`.
    pub fn to_real(&self, tol: f64) -> Option<TridiagonalOperator<f64>> {
        if self.max_imag() > tol {
            return None;
        }
        let re = |v: &[Complex64]| v.iter().map(|x| x.re).collect();
        Some(TridiagonalOperator {
            sub: re(&self.sub),
            diag: re(&self.diag),
            sup: re(&self.sup),
        })
    }
}
