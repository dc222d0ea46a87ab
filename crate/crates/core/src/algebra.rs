//! General solution of the representation conditions and assembly of the
//! operators `X` and `Z` on the ladder basis `|0⟩, |1⟩, …`.
//!
//! The products `κₙ = uₙwₙ₋₁` and `aₙ₋₁cₙ = δₙ₋₁φₙκₙ` are fixed by the seed;
//! how `κₙ` is split between `uₙ` and `wₙ₋₁` is a gauge choice.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operator::TridiagonalOperator;
use crate::params::AlgebraParams;
use crate::tol::{negligible, ABS_FLOOR, TRUNCATION_TOL};

type C = Complex64;

fn re(x: f64) -> C {
    C::new(x, 0.0)
}

/// `φₙ = φ₀ + n`.
pub fn solve_phi(params: &AlgebraParams, n: usize) -> f64 {
    params.phi0 + n as f64
}

/// `δₙ = δ₀ − n`.
pub fn solve_delta_seq(params: &AlgebraParams, n: usize) -> f64 {
    params.delta0 - n as f64
}

/// True when `δ₀ − φ₀` sits on one of the integer points that zero a
/// denominator of the closed forms up to index `n`.
fn on_lattice(gap: f64, n: usize) -> bool {
    gap.fract() == 0.0 && gap >= 0.0 && gap <= (2 * n + 1) as f64
}

/// Diagonal of `Z`.
///
/// Uses the closed form off the singular lattice, and otherwise the forward
/// recurrence `μₖ₊₂vₖ₊₁ = μₖvₖ` with `μₖ = δ₀ − φ₀ − 2k + 1`. A vanishing
/// `μₖ₊₂` with vanishing right side leaves `vₖ₊₁` free; it is set to zero.
pub fn solve_v(params: &AlgebraParams, n: usize) -> Result<C> {
    let v0 = params.v0;
    if n == 0 {
        return Ok(v0);
    }
    let s = params.gap();
    if !on_lattice(s, n) {
        let nf = n as f64;
        let num = (s - 1.0) * (s + 1.0);
        let den = (s - 2.0 * nf + 1.0) * (s - 2.0 * nf - 1.0);
        return Ok(v0 * (num / den));
    }
    let mu = |k: usize| s - 2.0 * k as f64 + 1.0;
    let mut v = v0;
    for k in 0..n {
        let rhs = v * mu(k);
        let coef = mu(k + 2);
        v = if coef != 0.0 {
            rhs / coef
        } else if rhs == re(0.0) {
            re(0.0)
        } else {
            return Err(Error::DegenerateParameters {
                n: k + 1,
                reason: "v recurrence has a vanishing coefficient with non-zero right side",
            });
        };
    }
    Ok(v)
}

/// Diagonal of `X`: `bₙ = ½(δ₀ + φ₀ + 1)(vₙ − v₀) + b₀`.
pub fn solve_b(params: &AlgebraParams, n: usize) -> Result<C> {
    let vn = solve_v(params, n)?;
    Ok(0.5 * (params.delta0 + params.phi0 + 1.0) * (vn - params.v0) + params.b0)
}

/// Internal result of the `κ` solve, carrying how the value was obtained.
#[derive(Clone, Copy, Debug)]
pub(crate) struct KappaSolve {
    pub value: C,
    /// A numerator factor of the closed form vanishes: the ladder closes here.
    pub closes: bool,
    /// The forward relation left this value undetermined (set to zero).
    pub free: bool,
}

/// Factors of the closed-form numerator that can vanish, each paired with
/// the magnitude it should be compared against.
fn closure_factors(params: &AlgebraParams, n: usize) -> [(f64, f64); 2] {
    let s = params.gap();
    let nf = n as f64;
    let mu = s - 2.0 * nf + 1.0;
    let linear = s - nf + 1.0;
    let d_term = params.delta * mu * mu;
    let v_term = params.v0 * params.v0 * (s - 1.0) * (s - 1.0);
    [
        (linear, 1.0 + s.abs() + nf),
        ((d_term + v_term).norm(), d_term.abs() + v_term.norm()),
    ]
}

/// True when `κₙ` vanishes through one of its numerator factors, within the
/// truncation tolerance.
pub(crate) fn kappa_closes(params: &AlgebraParams, n: usize, tol: f64) -> bool {
    if n == 0 {
        return false;
    }
    let [(linear, linear_scale), (branch, branch_scale)] = closure_factors(params, n);
    // Both branch terms carry a factor that can be tiny near the lattice, so
    // no absolute floor applies there.
    negligible(linear, linear_scale, tol) || branch <= tol * branch_scale
}

pub(crate) fn kappa_solve(params: &AlgebraParams, n: usize) -> Result<KappaSolve> {
    if n == 0 {
        return Ok(KappaSolve {
            value: re(0.0),
            closes: false,
            free: false,
        });
    }
    let s = params.gap();
    let delta = params.delta;
    if !on_lattice(s, n) {
        if kappa_closes(params, n, TRUNCATION_TOL) {
            return Ok(KappaSolve {
                value: re(0.0),
                closes: true,
                free: false,
            });
        }
        let nf = n as f64;
        let mu = s - 2.0 * nf + 1.0;
        let num = nf * (s - nf + 1.0) * (delta * mu * mu + params.v0 * params.v0 * (s - 1.0) * (s - 1.0));
        let den = mu * mu * (s - 2.0 * nf) * (s - 2.0 * nf + 2.0);
        return Ok(KappaSolve {
            value: num / den,
            closes: false,
            free: false,
        });
    }

    // Forward relation: Δ + vₖ² = νₖ₊₁κₖ₊₁ − νₖ₋₁κₖ, with νₘ = δ₀ − φ₀ − 2m.
    let nu = |m: f64| s - 2.0 * m;
    let mut kappa = re(0.0);
    let mut free = false;
    for k in 0..n {
        let vk = solve_v(params, k)?;
        let carried = nu(k as f64 - 1.0) * kappa;
        let rhs = delta + vk * vk + carried;
        let coef = nu(k as f64 + 1.0);
        let scale = delta.abs() + vk.norm_sqr() + carried.norm();
        if coef != 0.0 {
            kappa = rhs / coef;
            free = false;
        } else if negligible(rhs.norm(), scale, 1e-12) {
            kappa = re(0.0);
            free = true;
        } else {
            return Err(Error::DegenerateParameters {
                n: k + 1,
                reason: "kappa relation has a vanishing coefficient with non-zero right side",
            });
        }
    }
    let closes = !free && kappa.norm() <= ABS_FLOOR;
    Ok(KappaSolve {
        value: if closes { re(0.0) } else { kappa },
        closes,
        free,
    })
}

/// `κₙ = uₙwₙ₋₁`; zero at `n = 0` and at any truncation point.
pub fn solve_kappa(params: &AlgebraParams, n: usize) -> Result<C> {
    kappa_solve(params, n).map(|k| k.value)
}

/// The monic recurrence product `aₙ₋₁cₙ = δₙ₋₁φₙκₙ` (zero for `n = 0`).
pub fn solve_lambda(params: &AlgebraParams, n: usize) -> Result<C> {
    if n == 0 {
        return Ok(re(0.0));
    }
    let kappa = solve_kappa(params, n)?;
    Ok(kappa * (solve_delta_seq(params, n - 1) * solve_phi(params, n)))
}

/// How each `κₙ` is split between `uₙ` and `wₙ₋₁`.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GaugeChoice {
    /// `wₙ₋₁ = √|κₙ|`; `uₙ` carries the phase.
    #[default]
    SplitSqrt,
    /// `wₙ = 1`.
    UnitW,
    /// Prescribed `w₀, w₁, …` (one per retained index).
    Custom(Vec<f64>),
}

impl GaugeChoice {
    fn split(&self, n: usize, kappa: C) -> Result<(C, C)> {
        // Returns (u_n, w_{n-1}).
        if kappa == re(0.0) {
            return Ok((re(0.0), re(0.0)));
        }
        let w = match self {
            GaugeChoice::SplitSqrt => kappa.norm().sqrt(),
            GaugeChoice::UnitW => 1.0,
            GaugeChoice::Custom(seeds) => {
                let w = *seeds
                    .get(n - 1)
                    .ok_or_else(|| Error::InvalidParameter(format!("custom gauge needs a seed for w_{}", n - 1)))?;
                if w == 0.0 || !w.is_finite() {
                    return Err(Error::InvalidParameter(format!(
                        "custom gauge seed w_{} must be non-zero",
                        n - 1
                    )));
                }
                w
            }
        };
        Ok((kappa / w, re(w)))
    }
}

/// Coefficient sequences of `X` and `Z` on the retained window `0..dim`.
///
/// `a` and `w` carry one entry past the last retained off-diagonal
/// (`a_{dim-1}`, `w_{dim-1}`); they are zero when the ladder closes.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepCoefficients {
    pub size: usize,
    pub a: Vec<C>,
    pub b: Vec<C>,
    pub c: Vec<C>,
    pub u: Vec<C>,
    pub v: Vec<C>,
    pub w: Vec<C>,
    pub kappa: Vec<C>,
    pub gauge: GaugeChoice,
}

impl RepCoefficients {
    /// `aₙ₋₁cₙ` for `1 ≤ n < size`.
    pub fn lambda(&self, n: usize) -> C {
        if n == 0 {
            re(0.0)
        } else {
            self.a[n - 1] * self.c[n]
        }
    }

    pub fn lambdas(&self) -> Vec<C> {
        (1..self.size).map(|n| self.lambda(n)).collect()
    }
}

/// A built representation: the seed, its coefficients, and both operators.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Representation {
    #[serde(flatten)]
    pub params: AlgebraParams,
    /// True when `w_{dim-1} = a_{dim-1} = 0`: the window is the whole
    /// (finite-dimensional) representation.
    pub closed: bool,
    pub coefficients: RepCoefficients,
    pub x: TridiagonalOperator<C>,
    pub z: TridiagonalOperator<C>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.coefficients.size
    }

    /// Window appropriate for this representation.
    pub fn residual_window(&self) -> crate::residual::ResidualWindow {
        if self.closed {
            crate::residual::ResidualWindow::Full
        } else {
            crate::residual::ResidualWindow::Interior
        }
    }

    /// `relation_residual` on [`Self::residual_window`].
    pub fn residual(&self) -> f64 {
        crate::residual::relation_residual(&self.x, &self.z, self.params.delta, self.residual_window())
            .expect("operators of one representation share a dimension")
    }

    /// Residual divided by `1 + (largest entry)²`.
    pub fn relative_residual(&self) -> f64 {
        let m = self.x.max_abs().max(self.z.max_abs());
        self.residual() / (1.0 + m * m)
    }
}

/// Builds `X` and `Z` on the first `size` basis vectors.
///
/// If `κₙ` vanishes for some `n < size` the ladder closes and the result has
/// dimension `n`. Coefficients up to index `size` (one past the window) must
/// be solvable, since `a_{size-1}` and `w_{size-1}` depend on `κ_size`.
pub fn build_representation(params: &AlgebraParams, size: usize, gauge: &GaugeChoice) -> Result<Representation> {
    params.validate()?;
    if size == 0 {
        return Err(Error::InvalidParameter("size must be at least 1".into()));
    }

    let mut kappa = vec![re(0.0)];
    let mut u = vec![re(0.0)];
    let mut w = Vec::with_capacity(size);
    let mut closed = false;
    let mut dim = size;

    for n in 1..=size {
        let k = kappa_solve(params, n)?;
        if k.closes {
            closed = true;
            dim = n;
            w.push(re(0.0));
            break;
        }
        if k.free && n < size {
            return Err(Error::ZeroKappaInterior { n });
        }
        let (un, wprev) = gauge.split(n, k.value)?;
        w.push(wprev);
        if n < size {
            kappa.push(k.value);
            u.push(un);
        }
    }

    let mut v = Vec::with_capacity(dim);
    let mut b = Vec::with_capacity(dim);
    for n in 0..dim {
        v.push(solve_v(params, n)?);
        b.push(solve_b(params, n)?);
    }
    let c: Vec<C> = (0..dim).map(|n| u[n] * solve_phi(params, n)).collect();
    let a: Vec<C> = (0..dim).map(|n| w[n] * solve_delta_seq(params, n)).collect();

    // ⟨m|X|n⟩: cₙ sits above the diagonal, aₙ below it.
    let x = TridiagonalOperator::new(a[..dim - 1].to_vec(), b.clone(), c[1..].to_vec())?;
    let z = TridiagonalOperator::new(w[..dim - 1].to_vec(), v.clone(), u[1..].to_vec())?;

    Ok(Representation {
        params: *params,
        closed,
        coefficients: RepCoefficients {
            size: dim,
            a,
            b,
            c,
            u,
            v,
            w,
            kappa,
            gauge: gauge.clone(),
        },
        x,
        z,
    })
}
