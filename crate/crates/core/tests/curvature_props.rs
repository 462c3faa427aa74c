use mhs_core::curvature::{
    closed_form_check, gbc_integrand, riemann_from_spectrum, special_structure_predicates,
};
use mhs_core::spectrum::{random_minimal_spectrum_from, Lcg64};
use mhs_core::{ExactScalar, Spectrum};

fn int(n: i64) -> ExactScalar {
    ExactScalar::integer(n)
}

/// Gauss equation written out directly.
fn gauss(l: &[ExactScalar], i: usize, j: usize, k: usize, m: usize) -> ExactScalar {
    let delta = i64::from(i == k && j == m) - i64::from(i == m && j == k);
    (ExactScalar::one() + &l[i] * &l[j]) * int(delta)
}

fn samples(seed: u64, count: usize) -> Vec<Spectrum> {
    let mut rng = Lcg64::new(seed);
    (0..count).map(|_| random_minimal_spectrum_from(&mut rng, 3).unwrap()).collect()
}

#[test]
fn closed_forms_on_random_spectra() {
    for s in samples(1, 1000) {
        let r = closed_form_check(&s).unwrap();
        assert!(r.all_zero(), "{s:?}: {r:?}");
    }
}

#[test]
fn components_match_gauss_equation() {
    for s in samples(2, 100) {
        let p = riemann_from_spectrum(&s).unwrap();
        let l = s.values();
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    for m in 0..4 {
                        assert_eq!(p.riemann.get(i, j, k, m), &gauss(l, i, j, k, m));
                    }
                }
            }
        }
        // Ric_ii = 3 − λᵢ² once the trace vanishes
        for i in 0..4 {
            assert_eq!(p.ricci.get(i, i), &(int(3) - l[i].square()));
        }
        assert_eq!(p.scalar, int(12) - s.power_sum(2));
    }
}

#[test]
fn norms_match_independent_formulas() {
    for s in samples(3, 300) {
        let p = riemann_from_spectrum(&s).unwrap();
        let l = s.values();
        let mut rm = ExactScalar::zero();
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    rm = rm + (ExactScalar::one() + &l[i] * &l[j]).square() * int(2);
                }
            }
        }
        let ric: ExactScalar = l.iter().map(|x| (int(3) - x.square()).square()).sum();
        assert_eq!(p.ricci_squared, ric);
        // four-dimensional Weyl decomposition
        let weyl = &rm - &ric * int(2) + p.scalar.square() * ExactScalar::ratio(1, 3);
        assert_eq!(p.weyl_squared, weyl);
        assert_eq!(p.traceless_ricci_squared, &ric - p.scalar.square() * ExactScalar::ratio(1, 4));
    }
}

#[test]
fn tensor_symmetries() {
    for s in samples(4, 200) {
        let p = riemann_from_spectrum(&s).unwrap();
        assert!(p.symmetries_hold());
        assert!(p.weyl_is_trace_free());
        assert!(p.ricci_consistent());
    }
}

#[test]
fn traceless_ricci_is_nonnegative() {
    for s in samples(5, 1000) {
        let p = riemann_from_spectrum(&s).unwrap();
        assert!(!p.traceless_ricci_squared.is_negative());
        let preds = special_structure_predicates(&s).unwrap();
        assert_eq!(preds.einstein, p.traceless_ricci_squared.is_zero());
    }
}

#[test]
fn gbc_integrand_agrees_with_density() {
    for s in samples(6, 500) {
        let p = riemann_from_spectrum(&s).unwrap();
        assert_eq!(gbc_integrand(&s).unwrap(), p.gbc_density());
    }
}

#[test]
fn structured_spectra() {
    let flat = Spectrum::from_integers(&[0, 0, 0, 0]);
    let p = riemann_from_spectrum(&flat).unwrap();
    assert!(p.weyl.is_zero());
    assert!(p.is_einstein());
    assert_eq!(gbc_integrand(&flat).unwrap(), int(12));
    let preds = special_structure_predicates(&Spectrum::from_integers(&[1, 1, -1, -1])).unwrap();
    assert!(preds.einstein && preds.willmore);
    let preds = special_structure_predicates(&Spectrum::from_integers(&[-1, -1, 0, 2])).unwrap();
    assert!(!preds.einstein && !preds.willmore);
}
