use selberg_algebra::{int, rat, Rational};
use selberg_jack::*;

fn p(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn params(g: Rational, n: usize) -> JackParams {
    JackParams::new(g, n).unwrap()
}

fn m(v: &[u32], n: usize) -> SymmetricPoly {
    SymmetricPoly::monomial_sym(&p(v), n).unwrap()
}

#[test]
fn jack_small_cases() {
    for g in [rat(3, 7), rat(5, 3), int(2)] {
        assert_eq!(jack(&p(&[1]), &params(g.clone(), 3)).unwrap(), m(&[1], 3));
        for r in 1..=3u32 {
            let ones = vec![1; r as usize];
            assert_eq!(jack(&p(&ones), &params(g.clone(), 3)).unwrap(), m(&ones, 3));
        }
        let p2 = jack(&p(&[2]), &params(g.clone(), 2)).unwrap();
        let expect = m(&[2], 2).add(&m(&[1, 1], 2).scale(&(int(2) * &g / (&g + int(1))))).unwrap();
        assert_eq!(p2, expect);
    }
}

#[test]
fn eigenvalue_collision_is_reported() {
    // E_(2) = 4 + 2 gamma meets E_(1,1) = 2 at gamma = -1.
    let err = jack(&p(&[2]), &params(int(-1), 2)).unwrap_err();
    match err {
        JackError::NonGeneric { lambda, mu, .. } => {
            assert_eq!(lambda, "(2)");
            assert_eq!(mu, "(1,1)");
        }
        other => panic!("unexpected {other}"),
    }
    assert!(matches!(JackParams::new(int(0), 2), Err(JackError::ZeroGamma)));
}

#[test]
fn operator_examples() {
    let g = rat(3, 7);
    assert!(cs_apply(&SymmetricPoly::one(3), &params(g.clone(), 3)).unwrap().is_zero());
    let out = cs_apply(&m(&[1], 2), &params(g.clone(), 2)).unwrap();
    assert_eq!(out, m(&[1], 2).scale(&(int(1) + g)));
}

#[test]
fn evaluation_examples() {
    let g = rat(5, 3);
    assert_eq!(jack_eval_ones(&p(&[1]), &params(g.clone(), 4)), int(4));
    assert_eq!(jack_eval_ones(&p(&[1, 1]), &params(g.clone(), 2)), int(1));
    assert_eq!(jack_eval_ones(&p(&[2]), &params(int(1), 2)), int(3));
    let direct = jack_eval(&p(&[2]), &params(int(1), 2), &[int(1), int(1)]).unwrap();
    assert_eq!(direct, int(3));
}

#[test]
fn inner_product_examples() {
    let one = SymmetricPoly::one(2);
    assert_eq!(ct_inner_product(&one, &one, 1).unwrap(), int(2));
    assert_eq!(ct_inner_product(&m(&[1], 2), &one, 1).unwrap(), int(0));
    let pr = params(int(1), 2);
    let p1 = jack(&p(&[1]), &pr).unwrap();
    let ct = ct_inner_product(&p1, &p1, 1).unwrap();
    assert_eq!(ct, jack_norm_exact(&p(&[1]), &pr).unwrap());
    assert!((jack_norm_rhs(&p(&[1]), &pr).unwrap().value() - selberg_algebra::to_f64(&ct)).abs() < 1e-12);
}

#[test]
fn norm_examples() {
    // Empty partition: the Dyson value Gamma(1 + n gamma)/Gamma(1 + gamma)^n.
    let v = jack_norm_rhs(&Partition::empty(), &params(rat(1, 2), 3)).unwrap().value();
    let g = selberg_closed_forms::gamma;
    let expect = g(2.5).unwrap() / g(1.5).unwrap().powi(3);
    assert!((v - expect).abs() < 1e-13 * expect);
    let pr = params(int(2), 3);
    let lam = p(&[2, 1]);
    let pl = jack(&lam, &pr).unwrap();
    let ct = ct_inner_product(&pl, &pl, 2).unwrap();
    assert_eq!(ct, jack_norm_exact(&lam, &pr).unwrap());
    let rel = (jack_norm_rhs(&lam, &pr).unwrap().value() / selberg_algebra::to_f64(&ct) - 1.0).abs();
    assert!(rel < 1e-12);
    assert!(matches!(jack_norm_exact(&lam, &params(rat(1, 2), 3)), Err(JackError::NonIntegerGamma(_))));
}

#[test]
fn hyper_trivial_truncation() {
    let pr = params(rat(3, 7), 2);
    let s = hyper_series(&[rat(1, 3), rat(2, 5)], &[rat(7, 4)], &pr, &[rat(1, 10), rat(1, 5)], 0).unwrap();
    assert_eq!(s.value, int(1));
    let err = hyper_series(&[int(1)], &[int(0)], &pr, &[rat(1, 10), rat(1, 5)], 2).unwrap_err();
    assert!(matches!(err, JackError::PochhammerPole { .. }));
}

#[test]
fn binomial_theorem_through_weight_four() {
    for g in [rat(3, 7), rat(5, 3), int(2)] {
        let pr = params(g.clone(), 2);
        let a = rat(2, 9);
        let series = hyper_series_poly(std::slice::from_ref(&a), &[], &pr, 4).unwrap();
        // prod_i (1 - x_i)^{-a} has coefficient prod_i (a)_{l_i} / l_i! on m_lambda.
        for lam in partitions_up_to(4, 2) {
            let mut expect = int(1);
            for &l in lam.parts() {
                for k in 0..l {
                    expect *= (&a + int(i64::from(k))) / int(i64::from(k) + 1);
                }
            }
            assert_eq!(series.coeff(&lam), expect, "gamma={g} lambda={lam}");
        }
    }
}
