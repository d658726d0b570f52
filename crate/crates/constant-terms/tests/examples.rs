use selberg_algebra::int;
use selberg_constant_terms::{verify_bcs, verify_ct, CtIdentitySpec, CtValue, RootSystem};

fn number(v: &CtValue) -> selberg_algebra::Rational {
    match v {
        CtValue::Number(r) => r.clone(),
        other => panic!("expected a number, got {other}"),
    }
}

#[test]
fn dyson_three_ones() {
    let r = verify_ct(&CtIdentitySpec::Dyson { a: vec![1, 1, 1] }).unwrap();
    assert!(r.equal);
    assert_eq!(number(&r.lhs), int(6));
}

#[test]
fn macdonald_a2_k2() {
    let r = verify_ct(&CtIdentitySpec::Macdonald { system: RootSystem::a(2), k: 2 }).unwrap();
    assert!(r.equal);
    assert_eq!(number(&r.lhs), int(90));
}

#[test]
fn q_morris_single_variable() {
    let r = verify_ct(&CtIdentitySpec::QMorris { n: 1, a: 1, b: 1, k: 0 }).unwrap();
    assert!(r.equal, "{} vs {}", r.lhs, r.rhs);
    assert_eq!(r.lhs.to_string(), "1 + q");
}

#[test]
fn bcs_small_cases() {
    let r = verify_bcs(1, 1, 0, 0).unwrap();
    assert!(r.equal);
    assert_eq!(number(&r.lhs), int(2));
    let r = verify_bcs(1, 0, 0, 1).unwrap();
    assert!(r.equal);
    assert_eq!(number(&r.lhs), int(2));
    let r = verify_bcs(2, 1, 1, 1).unwrap();
    assert!(r.equal, "{} vs {}", r.lhs, r.rhs);
}

#[test]
fn bc1_macdonald_is_four() {
    let r = verify_ct(&CtIdentitySpec::Macdonald { system: RootSystem::bc(1), k: 1 }).unwrap();
    assert!(r.equal);
    assert_eq!(number(&r.lhs), int(4));
}

#[test]
fn invalid_specs_are_rejected() {
    assert!(verify_ct(&CtIdentitySpec::Dyson { a: vec![] }).is_err());
    assert!(verify_ct(&CtIdentitySpec::Morris { n: 0, a: 1, b: 1, k: 1 }).is_err());
    assert!("E8".parse::<RootSystem>().is_err());
}
