use mhs_core::isoparametric::{clifford_data, isoparametric_k0_conclusion, munzner_a2, CaseConfig, IsoparametricData};
use mhs_core::spectrum::Lcg64;
use mhs_core::ExactScalar;

fn random_data(rng: &mut Lcg64) -> IsoparametricData {
    let g = 2 + rng.below(3) as usize;
    let mut mu: Vec<ExactScalar> = Vec::new();
    while mu.len() < g {
        let v = rng.rational(4);
        if !mu.contains(&v) {
            mu.push(v);
        }
    }
    mu.sort_by(|a, b| a.compare(b).certified().unwrap());
    let m = (0..g).map(|_| 1 + rng.below(3) as u32).collect();
    IsoparametricData::new(mu, m).unwrap()
}

#[test]
fn cartan_residual_flips_under_negate_reverse() {
    let mut rng = Lcg64::new(8);
    for _ in 0..300 {
        let d = random_data(&mut rng);
        let r = d.negate_reverse();
        let g = d.g();
        for i in 0..g {
            assert_eq!(r.cartan_residual(g - 1 - i).unwrap(), -d.cartan_residual(i).unwrap());
        }
        assert_eq!(r.negate_reverse(), d);
    }
}

#[test]
fn clifford_family_is_minimal_and_balanced() {
    for k in 1..=3 {
        let d = clifford_data(k).unwrap();
        assert_eq!(d.n(), 4);
        assert!(d.cartan_residual(0).unwrap().is_zero());
        assert!(d.cartan_residual(1).unwrap().is_zero());
        let s = d.spectrum().unwrap();
        assert!(s.is_minimal());
        assert_eq!(s.power_sum(2), ExactScalar::integer(4));
        assert!(munzner_a2(2, 4).unwrap().allows(&s.power_sum(2)));
    }
    assert!(clifford_data(0).is_err());
    assert!(clifford_data(4).is_err());
}

#[test]
fn k0_conclusion_holds() {
    assert!(isoparametric_k0_conclusion(&CaseConfig::default()).is_ok());
}
