use proptest::prelude::*;
use selberg_closed_forms::*;

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn anderson_recurrence(n in 1usize..=4, alpha in 0.1f64..5.0, beta in 0.1f64..5.0, gamma in 0.05f64..2.0) {
        let lhs = selberg_product(n + 1, alpha, beta, gamma).unwrap();
        let rhs = anderson_factor(n, alpha, beta, gamma).unwrap()
            .mul(selberg_product(n, alpha + gamma, beta + gamma, gamma).unwrap());
        prop_assert!(lhs.rel_diff(rhs) < 1e-10, "residual {}", lhs.rel_diff(rhs));
    }

    #[test]
    fn functional_equation(n in 1usize..=4, alpha in 0.05f64..0.4, beta in 0.05f64..0.4, gamma in 0.01f64..0.1) {
        let alpha2 = df_transform_alpha(n, alpha, beta, gamma);
        let lhs = selberg_product(n, alpha, beta, gamma).unwrap();
        let rhs = selberg_product(n, alpha2, beta, gamma).unwrap()
            .times(functional_equation_factor(n, alpha, beta, gamma).unwrap());
        prop_assert!(lhs.rel_diff(rhs) < 1e-10, "residual {}", lhs.rel_diff(rhs));
    }

    #[test]
    fn small_alpha_limit(n in 1usize..=4, beta in 0.2f64..3.0, gamma in 0.55f64..2.0) {
        let alpha = 1e-12;
        let lhs = selberg_product(n, alpha, beta, gamma).unwrap().times(alpha).value();
        let rhs = n as f64 * selberg_product(n - 1, 2.0 * gamma, beta, gamma).unwrap().value();
        prop_assert!(rel(lhs, rhs) < 1e-10, "residual {}", rel(lhs, rhs));
        let alpha = 1e-6;
        let lhs = selberg_product(n, alpha, beta, gamma).unwrap().times(alpha).value();
        prop_assert!(rel(lhs, rhs) < 100.0 * alpha);
    }

    #[test]
    fn selberg_morris_bridge(n in 1usize..=4, a in 0.05f64..2.0, b in 0.05f64..0.95, gamma in 1u32..=3) {
        let g = f64::from(gamma);
        let lhs = selberg_product(n, -b - (n as f64 - 1.0) * g, a + b + 1.0, g).unwrap();
        let rhs = morris_to_selberg(n, a, b, gamma).unwrap();
        prop_assert!(lhs.rel_diff(rhs) < 1e-10, "residual {}", lhs.rel_diff(rhs));
    }

    #[test]
    fn dotsenko_fateev_transformation(n in 1usize..=4, alpha in 0.05f64..0.4, beta in 0.05f64..0.4, gamma in 0.01f64..0.1) {
        let alpha2 = df_transform_alpha(n, alpha, beta, gamma);
        for p in 0..=n {
            let lhs = dotsenko_fateev_chain(n, p, alpha, beta, gamma).unwrap();
            let rhs = dotsenko_fateev_chain(n, n - p, alpha2, beta, gamma).unwrap();
            prop_assert!(lhs.rel_diff(rhs) < 1e-10, "p={} residual {}", p, lhs.rel_diff(rhs));
        }
    }

    #[test]
    fn frobenius_structure(n in 1usize..=5, p in 0usize..=5, alpha in 0.1f64..0.9, tau in 0.1f64..0.45, gamma in 0.01f64..0.07) {
        prop_assume!(p <= n);
        let c = frobenius_coeffs(n, p, alpha, tau, gamma).unwrap();
        prop_assert_eq!(c.len(), n + 1);
        prop_assert!(c[..p].iter().all(|&v| v == 0.0));
        prop_assert_eq!(c[p], 1.0);
    }

    #[test]
    fn coulomb_variance_nonnegative(n in 1usize..=6, beta_idx in 0usize..3) {
        let beta = [1.0, 2.0, 4.0][beta_idx];
        let (_, var) = coulomb_stats(n, beta).unwrap();
        prop_assert!(var >= 0.0);
    }
}

#[test]
fn mehta_limit_within_two_percent() {
    for n in 1..=3 {
        for gamma in [0.5, 1.0, 2.0] {
            let seq = mehta_limit_sequence(n, gamma, 20.0).unwrap();
            let target = mehta_rhs(n, gamma).unwrap();
            let err = (seq.log_abs - target.log_abs).abs();
            if gamma <= 1.0 {
                assert!(err < 0.02, "n={n} gamma={gamma} log error {err}");
            }
            // The error decays like 1/L^2.
            let err2 = (mehta_limit_sequence(n, gamma, 40.0).unwrap().log_abs - target.log_abs).abs();
            assert!(err2 < 0.3 * err.max(1e-12) + 1e-12, "n={n} gamma={gamma}: {err} -> {err2}");
            assert!(err2 < 0.02);
        }
    }
}

#[test]
fn dixon_well_poised_sums() {
    let mut cases = 0;
    for (i, terms) in (1..=20).enumerate() {
        let a = 0.37 + 0.29 * i as f64;
        let b = 0.13 + 0.17 * (i % 7) as f64;
        let c = -(terms as f64);
        let lhs = dixon_3f2_series(a, b, c, 64);
        let rhs = dixon_3f2_rhs(a, b, c).unwrap().value();
        assert!(rel(lhs, rhs) < 1e-10, "a={a} b={b} c={c}: {lhs} vs {rhs}");
        cases += 1;
    }
    assert_eq!(cases, 20);
}
