#![allow(dead_code)]

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tridirep::{AlgebraParams, TridiagonalOperator};

pub const DELTAS: [f64; 4] = [0.0, 0.25, -0.25, -1.0];

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Real seed away from the degenerate lattice, with `|v₀|` bounded below.
pub fn random_params(rng: &mut StdRng, delta: f64) -> AlgebraParams {
    let phi0 = rng.gen_range(-2.0..2.0);
    let delta0 = rng.gen_range(-2.0..2.0);
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    let v0 = sign * rng.gen_range(0.1..1.5);
    let b0 = rng.gen_range(-1.0..1.0);
    AlgebraParams::new(delta, phi0, delta0, v0, b0)
}

pub fn rel(got: Complex64, want: Complex64) -> f64 {
    (got - want).norm() / want.norm().max(1e-14)
}

/// Largest entrywise difference, relative to the larger operator's scale.
pub fn op_distance(x: &TridiagonalOperator<Complex64>, y: &TridiagonalOperator<Complex64>) -> f64 {
    assert_eq!(x.dim(), y.dim());
    let scale = x.max_abs().max(y.max_abs()).max(1.0);
    let d = x.dim();
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in i.saturating_sub(1)..(i + 2).min(d) {
            worst = worst.max((x.get(i, j) - y.get(i, j)).norm());
        }
    }
    worst / scale
}

/// `vₙ` by stepping `(s − 2n − 3)vₙ₊₁ = (s − 2n + 1)vₙ` forward.
pub fn v_forward(p: &AlgebraParams, n_max: usize) -> Vec<Complex64> {
    let s = p.gap();
    let mut v = vec![p.v0];
    for n in 0..n_max {
        let k = n as f64;
        let next = v[n] * (s - 2.0 * k + 1.0) / (s - 2.0 * k - 3.0);
        v.push(next);
    }
    v
}

/// Away from the sets where the closed forms are singular or cancel: the gap
/// stays 1e-2 clear of every integer pole up to `n_max`, and the branch factor
/// `Δμ² + v₀²(s − 1)²` never cancels by more than two digits.
pub fn is_generic(p: &AlgebraParams, n_max: usize) -> bool {
    let s = p.gap();
    let top = 2.0 * n_max as f64 + 2.0;
    if s > -2.0 && s < top && (s - s.round()).abs() < 1e-2 {
        return false;
    }
    let v2 = p.v0.norm_sqr() * (s - 1.0).powi(2);
    (1..=n_max + 1).all(|n| {
        let mu = s - 2.0 * n as f64 + 1.0;
        let d = p.delta * mu * mu;
        (d + v2).abs() >= 1e-2 * (d.abs() + v2)
    })
}

/// Rejection-samples a generic seed.
pub fn random_generic(rng: &mut StdRng, delta: f64, n_max: usize) -> AlgebraParams {
    loop {
        let p = random_params(rng, delta);
        if is_generic(&p, n_max) {
            return p;
        }
    }
}
