use mhs_core::jet::{
    commutator, double_spectrum, gradient_system, lemma5_coefficient_check, multiset_index, quadratic_forms,
    ThirdFF, MULTISETS,
};
use mhs_core::spectrum::{random_minimal_spectrum_from, Lcg64};
use mhs_core::{ExactScalar, Spectrum};

fn random_ff(rng: &mut Lcg64) -> ThirdFF {
    ThirdFF::from_entries(core::array::from_fn(|_| rng.rational(3)))
}

#[test]
fn multiset_storage_is_symmetric() {
    let mut rng = Lcg64::new(17);
    for _ in 0..100 {
        let h = random_ff(&mut rng);
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let v = h.get(i, j, k);
                    assert_eq!(v, h.get(j, i, k));
                    assert_eq!(v, h.get(k, j, i));
                    assert_eq!(v, h.get(i, k, j));
                }
            }
        }
    }
    assert_eq!(MULTISETS.len(), 20);
    for (n, m) in MULTISETS.iter().enumerate() {
        assert_eq!(multiset_index(m[2], m[0], m[1]), n);
    }
}

#[test]
fn quadratic_forms_match_ordered_sums() {
    let mut rng = Lcg64::new(23);
    for _ in 0..120 {
        let s = random_minimal_spectrum_from(&mut rng, 2).unwrap();
        let h = random_ff(&mut rng);
        let l = s.values();
        let (mut g, mut a, mut b, mut c) =
            (ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero());
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let sq = h.get(i, j, k).square();
                    g = g + &sq;
                    a = a + &sq * l[i].square();
                    b = b + &sq * (&l[i] * &l[j]);
                    c = c + &sq * &l[i];
                }
            }
        }
        let q = quadratic_forms(&s, &h).unwrap();
        assert_eq!(q.grad_norm_squared, g);
        assert_eq!(q.a, a);
        assert_eq!(q.b, b);
        assert_eq!(q.c, c);
    }
}

#[test]
fn commutator_symmetries() {
    let mut rng = Lcg64::new(31);
    for _ in 0..50 {
        let s = random_minimal_spectrum_from(&mut rng, 3).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for l in 0..4 {
                        let v = commutator(&s, i, j, k, l).unwrap();
                        assert_eq!(v, -commutator(&s, i, j, l, k).unwrap());
                        assert_eq!(v, commutator(&s, j, i, k, l).unwrap());
                        if i == j || k == l {
                            assert!(v.is_zero());
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn gradient_kernels() {
    // Vandermonde rows: distinct curvatures leave nothing free
    let distinct = Spectrum::from_integers(&[-3, -1, 0, 4]);
    for k in 0..4 {
        assert!(gradient_system(&distinct, k).unwrap().kernel.is_empty());
    }
    let doubled = double_spectrum(&ExactScalar::one()).unwrap();
    for k in 0..4 {
        assert_eq!(gradient_system(&doubled, k).unwrap().kernel.len(), 1);
    }
    let clifford = Spectrum::from_integers(&[-1, -1, 1, 1]);
    assert_eq!(gradient_system(&clifford, 0).unwrap().kernel.len(), 2);
}

#[test]
fn coefficient_check_is_scale_free() {
    for (n, d) in [(1, 1), (1, 2), (3, 1), (7, 5)] {
        let check = lemma5_coefficient_check(&ExactScalar::ratio(n, d)).unwrap();
        assert_eq!(check.multiplier, ExactScalar::integer(3));
        assert_eq!(check.vanishing, [2, 4, 6, 7]);
    }
}
