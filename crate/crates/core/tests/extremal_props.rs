use mhs_core::extremal::{brute_force_extremes, classify, cubic_bound_check, Classification, Triple};
use mhs_core::spectrum::Lcg64;
use mhs_core::ExactScalar;

fn triple(a: ExactScalar, b: ExactScalar) -> Triple {
    let c = -(&a + &b);
    Triple::new(a, b, c).unwrap()
}

#[test]
fn cubic_bound_on_random_triples() {
    let mut rng = Lcg64::new(2024);
    for _ in 0..100_000 {
        let t = triple(rng.rational(5), rng.rational(5));
        let bound = cubic_bound_check(&t);
        assert!(!bound.margin.is_negative(), "{t:?}");
        let class = classify(&t).unwrap();
        let equality = matches!(
            class,
            Classification::LowerEquality | Classification::UpperEquality | Classification::Zero
        );
        assert_eq!(bound.margin.is_zero(), equality, "{t:?}");
    }
}

#[test]
fn equality_triples() {
    let mut rng = Lcg64::new(5);
    for _ in 0..1000 {
        let a = rng.rational(5);
        if a.is_zero() {
            continue;
        }
        let t = triple(a.clone(), a.clone());
        assert!(cubic_bound_check(&t).margin.is_zero());
        let expected =
            if a.is_positive() { Classification::LowerEquality } else { Classification::UpperEquality };
        assert_eq!(classify(&t).unwrap(), expected);
        let [x, y, z] = t.entries();
        let neg = Triple::new(-x, -y, -z).unwrap();
        let swapped = match expected {
            Classification::UpperEquality => Classification::LowerEquality,
            _ => Classification::UpperEquality,
        };
        assert_eq!(classify(&neg).unwrap(), swapped);
        assert_eq!(neg.cubic_sum(), -t.cubic_sum());
    }
}

#[test]
fn rhs_is_exact_for_rational_norms() {
    let t = Triple::from_integers(-1, -1, 2).unwrap();
    let bound = cubic_bound_check(&t);
    assert_eq!(bound.lhs, ExactScalar::integer(6));
    assert_eq!(bound.rhs.unwrap(), ExactScalar::integer(6));
}

#[test]
fn brute_force_converges() {
    for s2 in [1.0f64, 6.0, 13.5] {
        let exact = s2 * (s2 / 6.0).sqrt();
        let mut last = f64::INFINITY;
        for res in [1_000u32, 10_000, 100_000, 1_000_000] {
            let e = brute_force_extremes(s2, res).unwrap();
            let err = (e.max - exact).abs().max((e.min + exact).abs());
            assert!(err <= last + 1e-12);
            // quadratic in the angular step
            assert!(err <= exact * 10.0 * (core::f64::consts::PI / f64::from(res)).powi(2));
            last = err;
        }
    }
}
