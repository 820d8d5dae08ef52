use fpure_core::adjunction::{check_colon_containment, check_height_containment};
use fpure_core::fedder::{fedder_fpure_at_q, fpt_lower_bounds, nu_value, verify_certificate};
use fpure_core::frobenius::{bracket_power, colon_bracket};
use fpure_core::{
    parse_polynomial, Convention, ExactRational, FrobExponent, Ideal, Monomial, PairSpec, RationalExponent,
    Ring, Threshold,
};
use proptest::prelude::*;
use std::sync::Arc;

fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap())).unwrap()
}

#[test]
fn triangle_colon_bracket_matches_prime_components() {
    let r = Ring::grevlex(2, ["x", "y", "z"]).unwrap();
    let q = FrobExponent::new(2, 1).unwrap();
    let triangle = ideal(&r, &["x*y", "x*z", "y*z"]);
    let colon = colon_bracket(&triangle, q).unwrap();
    let mut meet = Ideal::unit(&r);
    for p in [&["x", "y"], &["x", "z"], &["y", "z"]] {
        meet = meet.intersect(&colon_bracket(&ideal(&r, p), q).unwrap()).unwrap();
    }
    assert!(colon.same_ideal(&meet).unwrap());
}

#[test]
fn general_path_agrees_with_monomial_path() {
    // (x + y, y) = (x, y), but the first presentation forces Gröbner computations
    let r = Ring::grevlex(3, ["x", "y"]).unwrap();
    let mono = ideal(&r, &["x", "y"]);
    let mixed = ideal(&r, &["x + y", "y"]);
    for e in 1..=2 {
        let q = FrobExponent::new(3, e).unwrap();
        let a = colon_bracket(&mono, q).unwrap();
        let b = colon_bracket(&mixed, q).unwrap();
        assert!(a.same_ideal(&b).unwrap());
        assert!(bracket_power(&mono, q).unwrap().same_ideal(&bracket_power(&mixed, q).unwrap()).unwrap());
        assert!(check_colon_containment(&mixed, q).unwrap());
        assert!(check_height_containment(&mixed, 2, q).unwrap());
    }
}

#[test]
fn e8_end_to_end() {
    let r = Ring::grevlex(7, ["x", "y", "z"]).unwrap();
    let i = ideal(&r, &["x^2 + y^3 + z^5"]);
    let spec = PairSpec::new(
        i.clone(),
        vec![(Ideal::maximal(&r), RationalExponent::new(1, 6).unwrap())],
        Convention::Floor,
    )
    .unwrap();
    let cert = fedder_fpure_at_q(&spec, FrobExponent::new(7, 1).unwrap()).unwrap();
    assert_eq!(cert.witness.as_ref().unwrap().monomial, Monomial::new(vec![6, 6, 6]));
    assert!(verify_certificate(&spec, None, &cert).unwrap());
    // t = 1/3 gives N = 2 > ν(7) = 1
    let spec3 = PairSpec::new(
        i.clone(),
        vec![(Ideal::maximal(&r), RationalExponent::new(1, 3).unwrap())],
        Convention::Floor,
    )
    .unwrap();
    assert!(!fedder_fpure_at_q(&spec3, FrobExponent::new(7, 1).unwrap()).unwrap().holds);
    assert_eq!(nu_value(&i, &Ideal::maximal(&r), FrobExponent::new(7, 1).unwrap()).unwrap().r, Some(1));
}

#[test]
fn hyperplane_complement_bounds_approach_threshold() {
    let r = Ring::grevlex(2, ["x", "y", "z"]).unwrap();
    let a = ideal(&r, &["y*z", "x*z", "x*y"]);
    let rep = fpt_lower_bounds(&Ideal::zero(&r), &a, 4).unwrap();
    let exact = ExactRational::new(3, 2);
    assert_eq!(rep.exact, Some(Threshold::Finite(exact.clone())));
    let best = rep.best_lower_bound.unwrap();
    assert!(best <= exact);
    assert!(best >= ExactRational::new(5, 4));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn ambient_lower_bounds_nondecreasing(
        gens in proptest::collection::vec(proptest::collection::vec(0u32..4, 2), 1..4)
            .prop_filter("inside m", |g| g.iter().all(|v| v.iter().any(|&e| e > 0))),
        p in prop_oneof![Just(2u64), Just(3)],
    ) {
        let r = Ring::grevlex(p, ["x", "y"]).unwrap();
        let a = Ideal::from_monomials(&r, gens.into_iter().map(Monomial::new));
        let rep = fpt_lower_bounds(&Ideal::zero(&r), &a, 3).unwrap();
        let bounds: Vec<_> = rep.levels.iter().map(|l| l.nu.as_ref().unwrap().lower_bound().unwrap()).collect();
        for w in bounds.windows(2) {
            prop_assert!(w[0] <= w[1]);
        }
        prop_assert!(rep.best_lower_bound.unwrap() <= rep.exact.unwrap().finite().unwrap().clone());
    }
}
