//! Fixtures shared by the criterion benchmarks.

use tridirep::{AlgebraParams, FamilySpec};

/// Generic (non-truncating) seeds, one per sign of `Δ`.
pub fn generic_seeds() -> [(&'static str, AlgebraParams); 3] {
    [
        ("delta_zero", AlgebraParams::new(0.0, 0.37, -2.11, 0.8, 0.2)),
        ("delta_neg", AlgebraParams::new(-0.25, 0.61, -1.43, 0.35, -0.4)),
        ("delta_neg_one", AlgebraParams::new(-1.0, 1.25, -0.58, 0.9, 0.1)),
    ]
}

pub fn finite_families() -> [FamilySpec; 2] {
    [
        FamilySpec::Hahn {
            alpha: 0.3,
            beta: 0.7,
            n: 25,
        },
        FamilySpec::ParaKrawtchouk {
            n: 25,
            gamma: 0.4,
            t: 0.0,
        },
    ]
}
