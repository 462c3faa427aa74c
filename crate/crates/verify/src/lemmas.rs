//! One report per lemma, built from the core operations.

use std::f64::consts::PI;

use mhs_core::certificate::{Certificate, CertificateKind};
use mhs_core::curvature::gbc_integrand;
use mhs_core::extremal::{brute_force_extremes, classify, cubic_bound_check, f3_maximality_check, Classification, Triple};
use mhs_core::isoparametric::{case_analysis_k0, clifford_data, isoparametric_k0_conclusion, CaseConfig, FlatGaussCase};
use mhs_core::jet::{
    double_spectrum, free_labels, gradient_system, lemma5_coefficient_check, multiplicity_two_contradiction,
    second_order_system, commutator, JetConfig, VANISHING,
};
use mhs_core::proof::{gbc_step, ProofConfig, Report, Step, StepStatus, Summary};
use mhs_core::{ExactScalar, Spectrum};

fn step(id: &'static str, description: &str) -> Step {
    Step {
        id,
        description: description.into(),
        status: StepStatus::Pass,
        residuals: Vec::new(),
        certificate: None,
    }
}

fn failed(mut s: Step, why: impl std::fmt::Display) -> Step {
    s.status = StepStatus::Fail;
    s.certificate = Some(Certificate::new(CertificateKind::Consistent, why.to_string()));
    s
}

fn summarize(steps: Vec<Step>) -> Report {
    let summary = if steps.iter().any(|s| s.status == StepStatus::Fail) {
        Summary::Fail
    } else if steps.iter().any(|s| s.status == StepStatus::Skipped) {
        Summary::Inconclusive
    } else {
        Summary::Pass
    };
    Report { steps, summary }
}

fn pass_if(mut s: Step, ok: bool) -> Step {
    if !ok {
        s.status = StepStatus::Fail;
    }
    s
}

pub fn cartan_report(munzner: bool) -> Report {
    let config = CaseConfig { munzner, ..CaseConfig::default() };
    let mut steps = Vec::new();
    for case in FlatGaussCase::ALL {
        let s = step(case.label(), "Cartan's formula on the K = 0 case");
        steps.push(match case_analysis_k0(case, &config) {
            Ok(cert) => {
                let mut s = pass_if(s, cert.kind.is_contradiction());
                s.residuals = cert.details.clone();
                s.certificate = Some(cert);
                s
            }
            Err(e) => failed(s, e),
        });
    }

    let mut clifford = step("clifford", "Clifford hypersurfaces: Cartan residuals vanish, |A|^2 = 4, K != 0");
    let mut ok = true;
    for k in 1..=3 {
        match clifford_data(k).and_then(|d| {
            let residuals = (0..d.g()).map(|i| d.cartan_residual(i)).collect::<Result<Vec<_>, _>>()?;
            Ok((residuals, d.spectrum()?))
        }) {
            Ok((residuals, s)) => {
                for (i, r) in residuals.into_iter().enumerate() {
                    ok &= r.is_zero();
                    clifford.residuals.push((format!("k={k} cartan_residual_{}", i + 1), r));
                }
                let a2 = s.power_sum(2);
                let gauss = s.gauss_kronecker();
                ok &= a2 == ExactScalar::integer(4) && (gauss.is_positive() || gauss.is_negative());
                clifford.residuals.push((format!("k={k} norm_squared"), a2));
                clifford.residuals.push((format!("k={k} gauss_kronecker"), gauss));
            }
            Err(e) => return summarize({
                steps.push(failed(clifford, e));
                steps
            }),
        }
    }
    steps.push(pass_if(clifford, ok));

    let s = step("conclusion", "every case is refuted, so the hypersurface is totally geodesic");
    steps.push(match isoparametric_k0_conclusion(&config) {
        Ok(cert) => {
            let mut s = pass_if(s, cert.kind == CertificateKind::TotallyGeodesic);
            s.certificate = Some(Certificate { children: Vec::new(), ..cert });
            s
        }
        Err(e) => failed(s, e),
    });
    summarize(steps)
}

pub fn jet_report(lambda: &ExactScalar, config: JetConfig) -> Report {
    let mut steps = Vec::new();
    let spectrum = match double_spectrum(lambda) {
        Ok(s) => s,
        Err(e) => return summarize(vec![failed(step("spectrum", "spectrum (-l, -l, 0, 2l)"), e)]),
    };

    let mut grad = step("gradient_system", "kernel of the power matrix is spanned by (1, -1, 0, 0)");
    let mut ok = true;
    for k in 0..4 {
        match gradient_system(&spectrum, k) {
            Ok(g) => {
                grad.residuals.push((format!("k={} kernel_dimension", k + 1), ExactScalar::integer(g.kernel.len() as i64)));
                for v in &g.kernel {
                    ok &= v[0] == -&v[1] && v[2].is_zero() && v[3].is_zero() && !v[0].is_zero();
                    for (label, x) in g.system.labels.iter().zip(v) {
                        grad.residuals.push((format!("k={} kernel {label}", k + 1), x.clone()));
                    }
                }
                ok &= g.kernel.len() == 1;
            }
            Err(e) => {
                steps.push(failed(grad, e));
                return summarize(steps);
            }
        }
    }
    steps.push(pass_if(grad, ok));

    let check = match lemma5_coefficient_check(lambda) {
        Ok(c) => c,
        Err(e) => {
            steps.push(failed(step("coefficient_check", "quadratic form comparison"), e));
            return summarize(steps);
        }
    };
    let mut coeff = step(
        "coefficient_check",
        "3|grad A|^2 - (2A + B)/l^2 = 8(h113^2 + h123^2) + 2(h134^2 + h234^2)",
    );
    coeff.residuals.push(("multiplier".into(), check.multiplier.clone()));
    for (label, d) in free_labels().iter().zip(check.residual_diagonal()) {
        coeff.residuals.push((format!("coefficient {label}^2"), d));
    }
    let off_diagonal_zero =
        (0..8).all(|i| (0..8).all(|j| i == j || check.residual_form[i][j].is_zero()));
    steps.push(pass_if(coeff, off_diagonal_zero && check.vanishing == VANISHING));

    // a generic jet obeying every first-order conclusion
    let y: Vec<ExactScalar> = [1, 2, 0, 3, 0, 5, 0, 0].map(ExactScalar::integer).to_vec();
    let h = check.third_ff(&y);
    for (id, k, target, description) in [
        ("second_order_33", 2, (3, 3), "the (3,3) system forces h4433 = 0"),
        ("second_order_44", 3, (2, 2), "the (4,4) system forces h3344 = 0"),
    ] {
        let s = step(id, description);
        steps.push(match second_order_system(lambda, k, &h, config) {
            Ok(sys) => {
                let mut s = s;
                let labels: &[&str] =
                    if config.include_middle { &["rhs_trace", "rhs_middle", "rhs_cubic"] } else { &["rhs_trace", "rhs_cubic"] };
                for (label, b) in labels.iter().zip(&sys.system.rhs) {
                    s.residuals.push((label.to_string(), b.clone()));
                }
                s.residuals.push(("kernel_dimension".into(), ExactScalar::integer(sys.solution.kernel_dimension() as i64)));
                let forced = sys.forced_value(target.0, target.1).cloned();
                let name = sys.system.labels[sys.index_of(target.0, target.1)].clone();
                match forced {
                    Some(v) => {
                        let ok = v.is_zero();
                        s.residuals.push((name, v));
                        pass_if(s, ok)
                    }
                    None => failed(s, format!("{name} is not determined by the system")),
                }
            }
            Err(e) => failed(s, e),
        });
    }

    let mut comm = step("commutator", "h3344 - h4433 = (l3 - l4)(1 + l3 l4) = -2l");
    match commutator(&spectrum, 2, 3, 2, 3) {
        Ok(gap) => {
            let ok = gap == lambda * ExactScalar::integer(-2);
            comm.residuals.push(("h3344_minus_h4433".into(), gap));
            steps.push(pass_if(comm, ok));
        }
        Err(e) => steps.push(failed(comm, e)),
    }

    let s = step("contradiction", "both values of h3344 - h4433 cannot hold");
    steps.push(match multiplicity_two_contradiction(lambda, config) {
        Ok(cert) => {
            let mut s = pass_if(s, cert.kind == CertificateKind::SignImpossibility);
            s.residuals = cert.details.clone();
            s.certificate = Some(cert);
            s
        }
        Err(e) => failed(s, e),
    });
    summarize(steps)
}

/// Relative error allowed for the brute-force scan at `resolution` samples.
pub fn scan_tolerance(resolution: u32) -> f64 {
    10.0 * (PI / f64::from(resolution)).powi(2)
}

pub fn extremal_report(s2: &ExactScalar, resolution: u32) -> Report {
    let mut steps = Vec::new();
    let mut eq = step("equality_cases", "exact squared margins and classification");
    let mut ok = true;
    for (t, expected) in [
        ((-1, -1, 2), Classification::UpperEquality),
        ((-2, 1, 1), Classification::LowerEquality),
        ((-1, 0, 1), Classification::ZeroSum),
        ((-3, 1, 2), Classification::Interior),
    ] {
        let triple = Triple::from_integers(t.0, t.1, t.2).expect("zero-sum");
        let bound = cubic_bound_check(&triple);
        let class = classify(&triple).expect("rational");
        let at_equality = matches!(class, Classification::UpperEquality | Classification::LowerEquality);
        ok &= class == expected && bound.margin.is_zero() == at_equality && !bound.margin.is_negative();
        eq.residuals.push((format!("margin{t:?} [{}]", class.name()), bound.margin));
    }
    steps.push(pass_if(eq, ok));

    let mut scan = step("brute_force", "the scanned extremes match +-s2^(3/2)/sqrt(6)");
    let analytic = match s2.as_rational().filter(|_| s2.is_positive()) {
        Some(_) => match (s2 * ExactScalar::ratio(1, 6)).sqrt() {
            Ok(root) => s2 * root,
            Err(e) => {
                steps.push(failed(scan, e));
                return summarize(steps);
            }
        },
        None => {
            steps.push(failed(scan, "s2 must be a positive rational"));
            return summarize(steps);
        }
    };
    match brute_force_extremes(s2.to_f64(), resolution) {
        Ok(e) => {
            let bound = analytic.to_f64();
            let tol = scan_tolerance(resolution) * bound;
            let exact = |x: f64| ExactScalar::from_f64(x).unwrap_or_else(ExactScalar::zero);
            scan.residuals.push(("bound".into(), analytic.clone()));
            scan.residuals.push(("max_minus_bound".into(), exact(e.max - bound)));
            scan.residuals.push(("min_plus_bound".into(), exact(e.min + bound)));
            scan.residuals.push(("resolution".into(), ExactScalar::integer(resolution.into())));
            let ok = (e.max - bound).abs() <= tol && (e.min + bound).abs() <= tol && e.max <= bound + 1e-12 * bound.max(1.0);
            steps.push(pass_if(scan, ok));
        }
        Err(e) => steps.push(failed(scan, e)),
    }

    let mut max = step("f3_maximality", "f3 is maximal on (-1,-1,0,2) and not on (-2,-1,0,3)");
    let yes = f3_maximality_check(&Spectrum::from_integers(&[-1, -1, 0, 2]));
    let no = f3_maximality_check(&Spectrum::from_integers(&[-2, -1, 0, 3]));
    max.residuals.push(("maximal(-1,-1,0,2)".into(), ExactScalar::integer(i64::from(yes == Ok(true)))));
    max.residuals.push(("maximal(-2,-1,0,3)".into(), ExactScalar::integer(i64::from(no == Ok(true)))));
    steps.push(pass_if(max, yes == Ok(true) && no == Ok(false)));
    summarize(steps)
}

/// Volume of `S²(1/√2) × S²(1/√2)`.
pub fn clifford_volume() -> f64 {
    let sphere = 4.0 * PI * 0.5;
    sphere * sphere
}

pub fn gbc_report(config: &ProofConfig) -> Report {
    let (gbc, _) = gbc_step(config);
    let mut steps = vec![gbc];
    let mut clifford = step("clifford_integral", "integrand 16 on S^2 x S^2 integrates to 16 pi^2 chi with chi = 4");
    match gbc_integrand(&Spectrum::from_integers(&[1, 1, -1, -1])) {
        Ok(value) => {
            let total = value.to_f64() * clifford_volume();
            let expected = 16.0 * PI * PI * 4.0;
            clifford.residuals.push(("integrand".into(), value));
            clifford.residuals.push((
                "total_minus_expected".into(),
                ExactScalar::from_f64(total - expected).unwrap_or_else(ExactScalar::zero),
            ));
            steps.push(pass_if(clifford, (total - expected).abs() <= 1e-9 * expected));
        }
        Err(e) => steps.push(failed(clifford, e)),
    }
    summarize(steps)
}
