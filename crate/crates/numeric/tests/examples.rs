use num_complex::Complex64;
use selberg_algebra::{rat, to_f64, LaurentPoly, Rational};
use selberg_closed_forms::{
    askey_wilson_rhs, aux_rhs, dixon_anderson_rhs, dotsenko_fateev_chain, elliptic_beta_rhs, group_product_rhs,
    hua_kadell_rhs, kadell_rhs, laguerre_rhs, morris_rhs, q_selberg_rhs, selberg_rhs, AuxKind, EllipticParams,
    EvalParams,
};
use selberg_jack::{hyper_series, JackParams, Partition};
use selberg_numeric::*;

fn part(p: &[u32]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn selberg(n: usize, a: f64, b: f64, g: f64) -> f64 {
    selberg_rhs(&EvalParams::new(n, a, b, g)).unwrap().value()
}

fn close(got: f64, want: f64, rel: f64) {
    assert!((got - want).abs() <= rel * want.abs(), "got {got}, want {want}, rel {}", (got - want).abs() / want.abs());
}

#[test]
fn quad_selberg_polynomial_case() {
    let r = quad_integrate(&DensitySpec::Selberg { n: 2, alpha: 1.0, beta: 1.0, gamma: 1.0 }, 1e-10).unwrap();
    assert!((r.value - 1.0 / 6.0).abs() < 1e-8);
    assert_eq!(r.method, Method::Quad);
    assert!(r.err_estimate >= 0.0);
}

#[test]
fn quad_selberg_three_variables_singular() {
    let r = quad_integrate(&DensitySpec::Selberg { n: 3, alpha: 0.6, beta: 1.3, gamma: 0.4 }, 1e-8).unwrap();
    close(r.value, selberg(3, 0.6, 1.3, 0.4), 1e-6);
}

#[test]
fn quad_rejects_non_integrable_exponent() {
    let r = quad_integrate(&DensitySpec::Selberg { n: 1, alpha: -0.5, beta: 1.0, gamma: 0.0 }, 1e-8);
    assert!(matches!(r, Err(NumericError::Domain(_))), "{r:?}");
}

#[test]
fn dixon_anderson_one_variable() {
    let spec = DensitySpec::DixonAnderson { a: vec![1.0, 0.0], s: vec![2.0, 2.0] };
    let r = quad_integrate(&spec, 1e-12).unwrap();
    assert!((r.value - 1.0 / 6.0).abs() < 1e-12);
}

#[test]
fn dixon_anderson_quadrature_and_determinant() {
    let a = [3.0, 1.5, 0.5, 0.0];
    let s = [1.5, 0.7, 2.0, 1.2];
    let want = dixon_anderson_rhs(&a, &s).unwrap().value();
    let r = quad_integrate(&DensitySpec::DixonAnderson { a: a.to_vec(), s: s.to_vec() }, 1e-9).unwrap();
    close(r.value, want, 1e-6);
    close(dixon_anderson_determinant(&a, &s, 1e-12).unwrap(), want, 1e-9);
}

#[test]
fn euler_at_zero_is_one() {
    let spec = DensitySpec::Euler2F1 { n: 1, a: 0.7, b: 1.5, c: 3.2, gamma: 1.0, z: 0.0 };
    let r = quad_integrate(&spec, 1e-12).unwrap();
    assert!((r.value - 1.0).abs() < 1e-10);
}

#[test]
fn euler_matches_series_and_gauss_sum() {
    let (a, b, c, g) = (0.5, 1.5, 3.0, 0.5);
    let params = JackParams::new(rat(1, 2), 2).unwrap();
    let z = rat(1, 10);
    let series = hyper_series(&[rat(1, 2), rat(3, 2)], &[rat(3, 1)], &params, &[z.clone(), z], 6).unwrap();
    let r = quad_integrate(&DensitySpec::Euler2F1 { n: 2, a, b, c, gamma: g, z: 0.1 }, 1e-10).unwrap();
    assert!((r.value - to_f64(&series.value)).abs() < 1e-6, "{} vs {}", r.value, to_f64(&series.value));

    let gauss = aux_rhs(AuxKind::Gauss2F1 { n: 2, a, b, c, gamma: g }).unwrap().value();
    let r1 = quad_integrate(&DensitySpec::Euler2F1 { n: 2, a, b, c, gamma: g, z: 1.0 }, 1e-10).unwrap();
    close(r1.value, gauss, 1e-7);
}

#[test]
fn kadell_two_variables() {
    for gamma in [1.0, 0.5] {
        for lambda in [part(&[1]), part(&[2]), part(&[1, 1])] {
            let spec = DensitySpec::Kadell { n: 2, alpha: 1.5, beta: 2.0, gamma, lambda: lambda.clone() };
            let r = quad_integrate(&spec, 1e-10).unwrap();
            let want = kadell_rhs(2, 1.5, 2.0, gamma, lambda.parts()).unwrap().value();
            close(r.value, want, 1e-6);
        }
    }
}

#[test]
fn aomoto_style_kadell_in_three_variables() {
    let lambda = part(&[1, 1]);
    let spec = DensitySpec::Kadell { n: 3, alpha: 1.0, beta: 1.0, gamma: 2.0, lambda: lambda.clone() };
    let r = quad_integrate(&spec, 1e-8).unwrap();
    close(r.value, kadell_rhs(3, 1.0, 1.0, 2.0, lambda.parts()).unwrap().value(), 1e-4);
}

#[test]
fn hua_kadell_two_variables() {
    for (l, m) in [(vec![1], vec![1]), (vec![2], vec![]), (vec![2, 1], vec![1])] {
        let spec = DensitySpec::HuaKadell { n: 2, alpha: 1.5, gamma: 1.0, lambda: part(&l), mu: part(&m) };
        let r = quad_integrate(&spec, 1e-10).unwrap();
        let want = hua_kadell_rhs(2, 1.5, 1.0, &l, &m).unwrap().value();
        close(r.value, want, 1e-5);
    }
}

#[test]
fn dotsenko_fateev_mixed_domain() {
    let (alpha, beta, gamma) = (0.3, 0.2, 0.1);
    let spec = DensitySpec::DotsenkoFateev { n: 2, p: 1, alpha, beta, gamma };
    let r = quad_integrate(&spec, 1e-9).unwrap();
    let want = dotsenko_fateev_chain(2, 1, alpha, beta, gamma).unwrap().value();
    close(r.value, want, 1e-4);
}

#[test]
fn mehta_laguerre_cauchy_askey_richards_by_quadrature() {
    let r = quad_integrate(&DensitySpec::Mehta { n: 2, gamma: 0.5 }, 1e-10).unwrap();
    close(r.value, group_product_rhs(&[1, 2], 0.5).unwrap().value(), 1e-8);

    let r = quad_integrate(&DensitySpec::Laguerre { n: 2, alpha: 1.5, gamma: 1.0 }, 1e-10).unwrap();
    close(r.value, 2.0 * laguerre_rhs(2, 1.5, 1.0).unwrap().value(), 1e-8);

    for (n, alpha, beta, gamma) in [(1, 1.5, 2.0, 0.0), (2, 2.0, 2.0, 0.5)] {
        let r = quad_integrate(&DensitySpec::CauchySc { n, alpha, beta, gamma }, 1e-9).unwrap();
        close(r.value, aux_rhs(AuxKind::CauchySc { n, alpha, beta, gamma }).unwrap().value(), 1e-6);
    }

    let r = quad_integrate(&DensitySpec::AskeyRichards { n: 2, alpha: 2.0, beta: 2.0, gamma: 1.0 }, 1e-10).unwrap();
    let want = aux_rhs(AuxKind::AskeyRichards { n: 2, alpha: 2.0, beta: 2.0, gamma: 1.0 }).unwrap().value();
    close(r.value, want, 1e-8);
}

#[test]
fn complex_selberg_one_variable() {
    let r = complex_selberg_n1(0.4, 0.35, 1e-10).unwrap();
    let want = aux_rhs(AuxKind::ComplexSelberg { n: 1, alpha: 0.4, beta: 0.35, gamma: 0.25 }).unwrap().value();
    close(r.value, want, 1e-6);
}

#[test]
fn monte_carlo_within_three_sigma() {
    let r = mc_integrate(&DensitySpec::Mehta { n: 3, gamma: 1.0 }, 1_000_000, 11).unwrap();
    let want = group_product_rhs(&[1, 2, 3], 1.0).unwrap().value();
    assert!(r.z_score(want) < 3.0, "z = {}", r.z_score(want));
    assert_eq!(r.method, Method::Mc);

    let r = mc_integrate(&DensitySpec::Selberg { n: 4, alpha: 2.0, beta: 2.0, gamma: 1.0 }, 1_000_000, 12).unwrap();
    let want = selberg(4, 2.0, 2.0, 1.0);
    assert!(r.z_score(want) < 3.0, "z = {}", r.z_score(want));

    let spec = DensitySpec::AskeyRichards { n: 2, alpha: 2.0, beta: 2.0, gamma: 1.0 };
    let r = mc_integrate(&spec, 1_000_000, 13).unwrap();
    let want = aux_rhs(AuxKind::AskeyRichards { n: 2, alpha: 2.0, beta: 2.0, gamma: 1.0 }).unwrap().value();
    assert!(r.z_score(want) < 3.0, "z = {}", r.z_score(want));
}

#[test]
fn monte_carlo_unsupported_family() {
    let spec = DensitySpec::CauchySc { n: 1, alpha: 1.5, beta: 1.5, gamma: 0.0 };
    assert!(matches!(mc_integrate(&spec, 1000, 1), Err(NumericError::Unsupported { .. })));
}

#[test]
fn jackson_one_variable() {
    for k in 0..=3 {
        let r = jackson_sum(1, 1.0, 1.0, k, 0.5, 1e-16).unwrap();
        let want = q_selberg_rhs(1, 1.0, 1.0, k, 0.5).unwrap().value();
        assert!((r.value - want).abs() < 1e-13, "k={k}: {} vs {want}", r.value);
    }
}

#[test]
fn jackson_two_variables_matches_q_selberg() {
    for q in [0.5, 0.9] {
        for k in 1..=2 {
            for (alpha, beta) in [(1.0, 1.0), (1.5, 2.5)] {
                let r = jackson_sum(2, alpha, beta, k, q, 1e-16).unwrap();
                let want = q_selberg_rhs(2, alpha, beta, k, q).unwrap().value();
                assert!(
                    (r.value - want).abs() < 1e-10 * want.abs().max(1.0),
                    "q={q} k={k} a={alpha} b={beta}: {} vs {want}",
                    r.value
                );
                assert_eq!(r.method, Method::QSum);
            }
        }
    }
}

#[test]
fn jackson_three_variables() {
    let r = jackson_sum(3, 1.0, 1.0, 1, 0.5, 1e-16).unwrap();
    let want = q_selberg_rhs(3, 1.0, 1.0, 1, 0.5).unwrap().value();
    assert!((r.value - want).abs() < 1e-12, "{} vs {want}", r.value);
}

#[test]
fn jackson_classical_limit() {
    let r = jackson_sum(2, 1.0, 1.0, 1, 0.99, 1e-14).unwrap();
    assert!((r.value - selberg(2, 1.0, 1.0, 1.0)).abs() < 1e-2, "{}", r.value);
}

#[test]
fn jackson_domain() {
    assert!(jackson_sum(2, 1.0, 1.0, 1, 1.0, 1e-10).is_err());
    assert!(jackson_sum(2, -1.0, 1.0, 1, 0.5, 1e-10).is_err());
}

#[test]
fn torus_morris_and_moments() {
    let r = torus_quadrature(&TorusIntegrand::Morris { n: 1, a: 1.0, b: 1.0, gamma: 0.3 }, 64).unwrap();
    assert!((r.value - 2.0).abs() < 1e-12);
    assert_eq!(r.method, Method::Torus);

    let r = torus_quadrature(&TorusIntegrand::Morris { n: 2, a: 2.0, b: 1.0, gamma: 1.0 }, 64).unwrap();
    let want = morris_rhs(2, 2.0, 1.0, 1.0).unwrap().value();
    assert!((r.value - want).abs() < 1e-10, "{} vs {want}", r.value);
    assert!(r.warning.is_none());

    let r = torus_quadrature(&TorusIntegrand::CueMoment { n: 1, x: 1.0, gamma: 1.0 }, 64).unwrap();
    let want = morris_rhs(1, 1.0, 1.0, 1.0).unwrap().value() / morris_rhs(1, 0.0, 0.0, 1.0).unwrap().value();
    assert!((r.value - 2.0).abs() < 1e-12 && (want - 2.0).abs() < 1e-12);

    let r = torus_quadrature(&TorusIntegrand::CueMoment { n: 2, x: 1.0, gamma: 1.0 }, 64).unwrap();
    let want = morris_rhs(2, 1.0, 1.0, 1.0).unwrap().value() / morris_rhs(2, 0.0, 0.0, 1.0).unwrap().value();
    assert!((r.value - want).abs() < 1e-10, "{} vs {want}", r.value);
}

#[test]
fn torus_coarse_grid_is_flagged() {
    let r = torus_quadrature(&TorusIntegrand::Morris { n: 1, a: 0.3, b: 0.3, gamma: 1.0 }, 16).unwrap();
    assert!(r.warning.is_some());
}

#[test]
fn torus_elliptic_beta() {
    let p = 0.1f64;
    let t = (p * p).powf(1.0 / 6.0);
    let params = EllipticParams::balanced(p, p, 0.5, [t; 5], 1);
    let r = torus_quadrature(&TorusIntegrand::EllipticBeta(params.clone()), 128).unwrap();
    let want = elliptic_beta_rhs(&params, 1).unwrap();
    let got = Complex64::new(r.value, r.imag);
    assert!((got - want).norm() < 1e-6 * want.norm(), "{got} vs {want}");

    let mixed = EllipticParams::balanced(0.2, 0.3, 0.5, [0.5, 0.6, 0.7, 0.8, -0.9], 1);
    let r = torus_quadrature(&TorusIntegrand::EllipticBeta(mixed.clone()), 256).unwrap();
    let want = elliptic_beta_rhs(&mixed, 1).unwrap();
    assert!((Complex64::new(r.value, r.imag) - want).norm() < 1e-6 * want.norm());
}

#[test]
fn torus_gustafson_one_variable() {
    let (t, q) = ([0.3, -0.5, 0.4, 0.2], 0.6);
    let r = torus_quadrature(&TorusIntegrand::GustafsonN1 { t, q }, 128).unwrap();
    let want = askey_wilson_rhs(t, q).unwrap();
    assert!((r.value - want).abs() < 1e-10 * want, "{} vs {want}", r.value);
}

#[test]
fn hyperdeterminant_examples() {
    for k in 1..=3 {
        assert_eq!(hankel_hyperdet(1, k, 2, 3).unwrap(), rat(1, 12));
    }
    assert_eq!(hankel_hyperdet(2, 1, 1, 1).unwrap(), rat(1, 12));
    let s = selberg_exact(2, 1, 1, 2).unwrap();
    assert_eq!(hankel_hyperdet(2, 2, 1, 1).unwrap(), s / Rational::from_integer(2.into()));
}

#[test]
fn hyperdeterminant_size_guard() {
    assert!(matches!(hankel_hyperdet_with_ceiling(4, 2, 1, 1, 1000), Err(NumericError::Size(_))));
}

#[test]
fn stanley_examples() {
    let r = stanley_probability(2, 1, 1, 2, StanleyMode::Exhaustive).unwrap();
    assert_eq!(r.exact, Some(rat(1, 6)));
    for two_gamma in 1..=4 {
        let r = stanley_probability(1, 2, 2, two_gamma, StanleyMode::Exhaustive).unwrap();
        assert_eq!(r.exact, Some(rat(1, 6)));
    }
    let r = stanley_probability(2, 1, 1, 3, StanleyMode::Mc { samples: 1_000_000, seed: 5 }).unwrap();
    let want = selberg(2, 1.0, 1.0, 1.5);
    assert!((r.probability - want).abs() < 3.0 * r.std_err, "{} vs {want} se {}", r.probability, r.std_err);
}

#[test]
fn stanley_odd_two_gamma_exhaustive() {
    let r = stanley_probability(2, 1, 1, 3, StanleyMode::Exhaustive).unwrap();
    assert!((r.probability - selberg(2, 1.0, 1.0, 1.5)).abs() < 1e-14);
}

#[test]
fn gelfond_bounds() {
    let m1 = gelfond_min(1, 5, 1).unwrap();
    assert!((m1.value - 2.0).abs() < 1e-12);
    let m2 = gelfond_min(2, 20, 2).unwrap();
    assert!(m2.exceeds_bound() && m2.value > 2.59, "{m2:?}");
    let m3 = gelfond_min(3, 100, 3).unwrap();
    assert!(m3.exceeds_bound(), "{m3:?}");
    let p: f64 = m3.minimizer.iter().product();
    assert!((p - (-2f64).exp()).abs() < 1e-10);
}

#[test]
fn pde_residuals() {
    let r = pde_residual_2f1(&rat(1, 2), &rat(3, 4), &rat(5, 2), &rat(1, 1), &[0.05], 12).unwrap();
    assert!(r.residual < 1e-8, "{r:?}");

    let r = pde_residual_2f1(&rat(1, 2), &rat(3, 4), &rat(5, 2), &rat(1, 2), &[0.05, 0.03], 8).unwrap();
    assert!(r.residual <= r.tail_estimate, "{r:?}");

    let r0 = pde_residual_2f1(&rat(1, 2), &rat(3, 4), &rat(5, 2), &rat(1, 2), &[0.05, 0.03], 0).unwrap();
    assert!((r0.residual - 0.375).abs() < 1e-12);
}

#[test]
fn okounkov_olshanski_examples() {
    assert!(okounkov_olshanski_check(&Partition::empty(), 0.7, [0.1, 0.9], 1e-12).unwrap() < 1e-10);
    assert!(okounkov_olshanski_check(&part(&[1]), 1.0, [0.0, 1.0], 1e-12).unwrap() < 1e-8);
    assert!(okounkov_olshanski_check(&part(&[2]), 1.0 / 3.0, [0.2, 1.5], 1e-10).unwrap() < 1e-6);
}

#[test]
fn si_identity_examples() {
    let one = LaurentPoly::one(1, false);
    let r = si_identity_check(&one, 2.5, 1e-12).unwrap();
    assert!((r.lhs - 0.4).abs() < 1e-12 && r.residual < 1e-8);

    let x = LaurentPoly::variable(1, false, 0).unwrap();
    let xi = x.invert_x();
    let f = x.add(&xi).unwrap();
    let r = si_identity_check(&f, 3.5, 1e-12).unwrap();
    assert!((r.lhs - (1.0 / 4.5 + 1.0 / 2.5)).abs() < 1e-10);
    assert!(r.residual < 1e-8, "{r:?}");

    let x1 = LaurentPoly::variable(2, false, 0).unwrap();
    let x2 = LaurentPoly::variable(2, false, 1).unwrap();
    let one2 = LaurentPoly::one(2, false);
    let a = one2.sub(&x1.mul(&x2.invert_x()).unwrap()).unwrap();
    let b = one2.sub(&x2.mul(&x1.invert_x()).unwrap()).unwrap();
    let dyson = a.mul(&b).unwrap();
    let r = si_identity_check(&dyson, 2.5, 1e-10).unwrap();
    assert!(r.residual < 1e-6, "{r:?}");

    assert!(si_identity_check(&one, 3.0, 1e-10).is_err());
}
