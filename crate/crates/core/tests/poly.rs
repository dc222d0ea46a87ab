use nalgebra::DMatrix;
use proptest::prelude::*;
use tridirep::poly::{interlaces, roots, symmetric_tridiagonal_eigen};
use tridirep::{
    bilattice_check, gram_check, jacobi_matrix, monic_eval, quadrature, spectrum, FamilySpec, MonicRecurrence,
};

fn real(spec: FamilySpec, n_max: usize) -> MonicRecurrence {
    MonicRecurrence::real_family(&spec, n_max).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn eigen_matches_dense_oracle(
        diag in prop::collection::vec(-5.0..5.0f64, 1..40),
        off_seed in prop::collection::vec(0.01..3.0f64, 40),
    ) {
        let d = diag.len();
        let off = &off_seed[..d - 1];
        let (values, first) = symmetric_tridiagonal_eigen(&diag, off).unwrap();
        let mut m = DMatrix::<f64>::zeros(d, d);
        for i in 0..d {
            m[(i, i)] = diag[i];
            if i + 1 < d {
                m[(i, i + 1)] = off[i];
                m[(i + 1, i)] = off[i];
            }
        }
        let eig = m.symmetric_eigen();
        let mut pairs: Vec<(f64, f64)> = (0..d)
            .map(|k| (eig.eigenvalues[k], eig.eigenvectors[(0, k)].powi(2)))
            .collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        let scale = 1.0 + diag.iter().chain(off).map(|x| x.abs()).fold(0.0, f64::max);
        for (k, (val, w)) in pairs.iter().enumerate() {
            prop_assert!((values[k] - val).abs() <= 1e-12 * scale, "{} vs {}", values[k], val);
            prop_assert!((first[k] * first[k] - w).abs() <= 1e-9);
        }
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn roots_annihilate_polynomial(alpha in -0.9..3.0f64, beta in -0.9..3.0f64, n in 1usize..=20) {
        let rec = real(FamilySpec::Jacobi { alpha, beta }, n);
        for x in roots(&rec, n).unwrap() {
            let deriv_scale: f64 = (0..=n).map(|k| monic_eval(&rec, k, x).unwrap().abs()).sum();
            prop_assert!(monic_eval(&rec, n, x).unwrap().abs() <= 1e-10 * (1.0 + deriv_scale));
        }
    }

    #[test]
    fn gauss_rule_is_exact(alpha in -0.9..3.0f64, beta in -0.9..3.0f64, dim in 2usize..=30) {
        let rec = real(FamilySpec::Jacobi { alpha, beta }, dim);
        let q = quadrature(&jacobi_matrix(&rec, dim).unwrap(), 1.0).unwrap();
        prop_assert!((q.total_mass() - 1.0).abs() < 1e-12);
        prop_assert!(gram_check(&rec, &q, dim - 1).unwrap() <= 1e-9);
    }

    #[test]
    fn roots_interlace(alpha in -0.9..3.0f64, beta in -0.9..3.0f64) {
        let rec = real(FamilySpec::Jacobi { alpha, beta }, 21);
        for n in 1..20 {
            prop_assert!(interlaces(&roots(&rec, n + 1).unwrap(), &roots(&rec, n).unwrap()));
        }
    }

    #[test]
    fn node_order_ignores_mass(alpha in 0.0..2.0f64, beta in 0.0..2.0f64, big_n in 3usize..=15, mass in 0.01..100.0f64) {
        let rec = real(FamilySpec::Hahn { alpha, beta, n: big_n }, big_n);
        let j = jacobi_matrix(&rec, big_n + 1).unwrap();
        let unit = quadrature(&j, 1.0).unwrap();
        let scaled = quadrature(&j, mass).unwrap();
        prop_assert_eq!(&unit.nodes, &scaled.nodes);
        let argsort = |w: &[f64]| {
            let mut idx: Vec<usize> = (0..w.len()).collect();
            idx.sort_by(|&i, &k| w[i].total_cmp(&w[k]));
            idx
        };
        prop_assert_eq!(argsort(&unit.weights), argsort(&scaled.weights));
        prop_assert!((scaled.total_mass() - mass).abs() <= 1e-12 * mass);
    }
}

#[test]
fn hahn_spectrum_is_integer_lattice() {
    for big_n in [1usize, 4, 13, 25] {
        let rec = real(
            FamilySpec::Hahn {
                alpha: 0.3,
                beta: 1.2,
                n: big_n,
            },
            big_n,
        );
        let nodes = spectrum(&jacobi_matrix(&rec, big_n + 1).unwrap()).unwrap();
        for (s, x) in nodes.iter().enumerate() {
            assert!((x - s as f64).abs() < 1e-8, "N {big_n}: node {s} = {x}");
        }
        if big_n >= 3 {
            let r = bilattice_check(&nodes).unwrap();
            assert!(r.is_bilattice);
        }
    }
}

#[test]
fn para_krawtchouk_spectrum_is_bilattice() {
    // Each sublattice has step 2 here: at γ = 1 the rule is Krawtchouk on {0, …, N}.
    let gammas = [0.05, 0.4, 0.77, 0.95, 1.05, 1.5, 1.95];
    for big_n in 3..=25 {
        for gamma in gammas {
            let rec = real(
                FamilySpec::ParaKrawtchouk {
                    n: big_n,
                    gamma,
                    t: 0.0,
                },
                big_n,
            );
            let nodes = spectrum(&jacobi_matrix(&rec, big_n + 1).unwrap()).unwrap();
            let r = bilattice_check(&nodes).unwrap();
            assert!(r.is_bilattice, "N {big_n}, gamma {gamma}: {nodes:?}");
            assert!((r.spacing - 2.0).abs() < 1e-8);
            let gap = r.offsets.1 - r.offsets.0;
            assert!(
                (gap - gamma).abs() < 1e-8 || (gap - (2.0 - gamma)).abs() < 1e-8,
                "{gap}"
            );
        }
    }
}

#[test]
fn legendre_two_point_rule() {
    let rec = real(FamilySpec::Jacobi { alpha: 0.0, beta: 0.0 }, 2);
    let q = quadrature(&jacobi_matrix(&rec, 2).unwrap(), 1.0).unwrap();
    let x = 1.0 / 3f64.sqrt();
    assert!((q.nodes[0] + x).abs() < 1e-15 && (q.nodes[1] - x).abs() < 1e-15);
    assert!(q.weights.iter().all(|w| (w - 0.5).abs() < 1e-15));
    assert_eq!(q.to_csv().lines().next(), Some("node,weight"));
}

#[test]
fn gram_check_at_large_dimension() {
    let rec = real(FamilySpec::Jacobi { alpha: 0.5, beta: -0.3 }, 200);
    let q = quadrature(&jacobi_matrix(&rec, 200).unwrap(), 1.0).unwrap();
    assert!(gram_check(&rec, &q, 199).unwrap() <= 1e-10);
}

#[test]
fn gram_check_detects_wrong_rule() {
    let rec = real(
        FamilySpec::Hahn {
            alpha: 0.3,
            beta: 0.7,
            n: 10,
        },
        10,
    );
    let mut q = quadrature(&jacobi_matrix(&rec, 11).unwrap(), 1.0).unwrap();
    q.weights[3] *= 1.01;
    assert!(gram_check(&rec, &q, 10).unwrap() > 1e-4);

    let other = real(
        FamilySpec::Hahn {
            alpha: 0.4,
            beta: 0.7,
            n: 10,
        },
        10,
    );
    let q = quadrature(&jacobi_matrix(&rec, 11).unwrap(), 1.0).unwrap();
    assert!(gram_check(&other, &q, 10).unwrap() > 1e-4);
}
