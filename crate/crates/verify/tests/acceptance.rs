//! One line per acceptance criterion; exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use mhs_core::curvature::{closed_form_check, gbc_integrand, riemann_from_spectrum};
use mhs_core::extremal::{brute_force_extremes, classify, cubic_bound_check, Classification, Triple};
use mhs_core::forms::{ClosedForms, Coefficient};
use mhs_core::isoparametric::clifford_data;
use mhs_core::jet::{
    commutator, double_spectrum, gradient_system, lemma5_coefficient_check, multiplicity_two_contradiction,
    quadratic_forms, second_order_system, JetConfig, ThirdFF,
};
use mhs_core::proof::{cheng_yang_bound, flat_gauss_slice};
use mhs_core::spectrum::{random_minimal_spectrum_from, Lcg64};
use mhs_core::{ExactOrdering, ExactScalar, Spectrum};
use mhs_verify::lemmas::clifford_volume;
use serde_json::Value;

const LEMMA_BUDGET: Duration = Duration::from_secs(1);
const CURVATURE_BUDGET: Duration = Duration::from_secs(10);
const EXTREMAL_BUDGET: Duration = Duration::from_secs(30);
const GBC_INTEGRAL_REL_TOL: f64 = 1e-9;
const SCAN_TOL: f64 = 1e-4;
const SPECTRA: usize = 1000;
const TRIPLES: usize = 100_000;
const SCAN_RESOLUTION: u32 = 1_000_000;
const THIRD_FFS: usize = 100;

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok { Ok(()) } else { Err(what()) }
}

fn int(n: i64) -> ExactScalar {
    ExactScalar::integer(n)
}

fn verifier(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_mhs-verify"))
        .args(args)
        .arg("--json")
        .arg(&path)
        .output()
        .expect("binary runs")
        .status;
    let json = std::fs::read(&path).ok().and_then(|b| serde_json::from_slice(&b).ok()).unwrap_or(Value::Null);
    (status.code().unwrap_or(-1), json)
}

fn detail<'a>(report: &'a Value, step: &str, name: &str) -> Option<&'a str> {
    let step = report["steps"].as_array()?.iter().find(|s| s["id"] == step)?;
    step["certificate"]["details"][name].as_str()
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    f()?;
    let elapsed = start.elapsed();
    ensure(elapsed < budget, || format!("took {elapsed:?}, budget {budget:?}"))
}

fn cartan() -> Outcome {
    timed(LEMMA_BUDGET, || {
        let (code, r) = verifier(&["lemma", "cartan"]);
        ensure(code == 0 && r["summary"] == "PASS", || format!("exit {code}, summary {}", r["summary"]))?;
        let root = detail(&r, "lambda3_zero", "lambda1");
        ensure(root == Some("-sqrt(5)"), || format!("lambda1 = {root:?}"))?;
        ensure(detail(&r, "lambda3_zero", "norm_squared") == Some("10"), || "|A|^2 != 10".into())?;
        ensure(detail(&r, "lambda3_zero", "munzner_expected") == Some("8"), || "Münzner value != 8".into())?;
        ensure(detail(&r, "lambda3_eq_lambda4", "residual_times_lambda1") == Some("3"), || "3/λ₁ missing".into())?;
        ensure(detail(&r, "lambda3_lt_lambda4", "form_discriminant") == Some("-3"), || "form not definite".into())?;
        ensure(detail(&r, "lambda3_zero", "cartan_residual_at_root") == Some("0"), || "root not exact".into())
    })
}

fn curvature_identities() -> Outcome {
    timed(CURVATURE_BUDGET, || {
        let mut rng = Lcg64::new(1);
        for _ in 0..SPECTRA {
            let s = random_minimal_spectrum_from(&mut rng, 3).map_err(|e| e.to_string())?;
            let r = closed_form_check(&s).map_err(|e| e.to_string())?;
            ensure(r.all_zero(), || format!("{s:?}: {r:?}"))?;
            let p = riemann_from_spectrum(&s).map_err(|e| e.to_string())?;
            ensure(p.symmetries_hold() && p.weyl_is_trace_free(), || format!("{s:?}: symmetry"))?;
        }
        Ok(())
    })
}

fn gbc_consistency() -> Outcome {
    let mut rng = Lcg64::new(1);
    for _ in 0..SPECTRA {
        let s = random_minimal_spectrum_from(&mut rng, 3).map_err(|e| e.to_string())?;
        let p = riemann_from_spectrum(&s).map_err(|e| e.to_string())?;
        let closed = gbc_integrand(&s).map_err(|e| e.to_string())?;
        ensure(closed == p.gbc_density(), || format!("{s:?}"))?;
    }
    let slice = flat_gauss_slice(&ClosedForms::default());
    ensure(slice == [int(12), int(-2), int(0)], || format!("slice {slice:?}"))?;
    for _ in 0..200 {
        let (a, b) = (rng.rational(3), rng.rational(3));
        let c = -(&a + &b);
        let s = Spectrum::new(vec![a, b, c, ExactScalar::zero()]).map_err(|e| e.to_string())?;
        let a2 = s.power_sum(2);
        let value = gbc_integrand(&s).map_err(|e| e.to_string())?;
        ensure(value == int(12) - &a2 * int(2), || format!("{s:?}"))?;
        ensure(value.is_zero() == (a2 == int(6)), || format!("{s:?}"))?;
    }
    let six = Spectrum::from_integers(&[-1, -1, 0, 2]);
    ensure(gbc_integrand(&six).map_err(|e| e.to_string())?.is_zero(), || "|A|^2 = 6 does not vanish".into())
}

fn clifford() -> Outcome {
    for k in 1..=3 {
        let d = clifford_data(k).map_err(|e| e.to_string())?;
        for i in 0..2 {
            let r = d.cartan_residual(i).map_err(|e| e.to_string())?;
            ensure(r.is_zero(), || format!("k={k} residual {r}"))?;
        }
        let s = d.spectrum().map_err(|e| e.to_string())?;
        ensure(s.power_sum(2) == int(4), || format!("k={k} |A|^2"))?;
        let gk = s.gauss_kronecker();
        ensure(matches!(gk.signum(), ExactOrdering::Less | ExactOrdering::Greater), || format!("k={k} K = {gk}"))?;
    }
    let integrand = gbc_integrand(&Spectrum::from_integers(&[1, 1, -1, -1])).map_err(|e| e.to_string())?;
    ensure(integrand == int(16), || format!("integrand {integrand}"))?;
    let total = integrand.to_f64() * clifford_volume();
    let expected = 16.0 * PI * PI * 4.0;
    ensure((total - expected).abs() <= GBC_INTEGRAL_REL_TOL * expected, || format!("{total} vs {expected}"))
}

fn extremal() -> Outcome {
    timed(EXTREMAL_BUDGET, || {
        let mut rng = Lcg64::new(2024);
        for _ in 0..TRIPLES {
            let (a, b) = (rng.rational(5), rng.rational(5));
            let c = -(&a + &b);
            let t = Triple::new(a, b, c).map_err(|e| e.to_string())?;
            let bound = cubic_bound_check(&t);
            ensure(!bound.margin.is_negative(), || format!("{t:?}"))?;
            let class = classify(&t).map_err(|e| e.to_string())?;
            let equality = matches!(
                class,
                Classification::LowerEquality | Classification::UpperEquality | Classification::Zero
            );
            ensure(bound.margin.is_zero() == equality, || format!("{t:?}: {class:?}"))?;
        }
        for s2 in [1.0f64, 6.0] {
            let exact = s2.powf(1.5) / 6f64.sqrt();
            let e = brute_force_extremes(s2, SCAN_RESOLUTION).map_err(|e| e.to_string())?;
            ensure((e.max - exact).abs() <= SCAN_TOL && (e.min + exact).abs() <= SCAN_TOL, || {
                format!("s2={s2}: [{}, {}] vs ±{exact}", e.min, e.max)
            })?;
        }
        Ok(())
    })
}

fn jet() -> Outcome {
    timed(LEMMA_BUDGET, || {
        let config = JetConfig::default();
        for lambda in [ExactScalar::one(), ExactScalar::ratio(1, 2), int(3)] {
            let s = double_spectrum(&lambda).map_err(|e| e.to_string())?;
            for k in 0..4 {
                let g = gradient_system(&s, k).map_err(|e| e.to_string())?;
                ensure(g.kernel.len() == 1, || format!("k={k}: kernel dimension {}", g.kernel.len()))?;
                let v = &g.kernel[0];
                ensure(v[0] == -&v[1] && !v[0].is_zero() && v[2].is_zero() && v[3].is_zero(), || {
                    format!("k={k}: kernel {v:?}")
                })?;
            }
            let check = lemma5_coefficient_check(&lambda).map_err(|e| e.to_string())?;
            let expected = [0, 0, 8, 0, 8, 0, 2, 2];
            for (i, row) in check.residual_form.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    let want = if i == j { int(expected[i]) } else { ExactScalar::zero() };
                    ensure(*x == want, || format!("λ={lambda}: form[{i}][{j}] = {x}"))?;
                }
            }
            let h = ThirdFF::default();
            let s33 = second_order_system(&lambda, 2, &h, config).map_err(|e| e.to_string())?;
            let s44 = second_order_system(&lambda, 3, &h, config).map_err(|e| e.to_string())?;
            ensure(s33.forced_value(3, 3).is_some_and(ExactScalar::is_zero), || "h4433 not forced".into())?;
            ensure(s44.forced_value(2, 2).is_some_and(ExactScalar::is_zero), || "h3344 not forced".into())?;
            let gap = commutator(&s, 2, 3, 2, 3).map_err(|e| e.to_string())?;
            ensure(gap == &lambda * int(-2), || format!("λ={lambda}: gap {gap}"))?;
            let cert = multiplicity_two_contradiction(&lambda, config).map_err(|e| e.to_string())?;
            ensure(cert.kind.is_contradiction(), || format!("λ={lambda}: {}", cert.summary))?;
        }
        Ok(())
    })
}

fn theorem() -> Outcome {
    let (code, r) = verifier(&["all"]);
    ensure(code == 0 && r["summary"] == "PASS", || format!("exit {code}, summary {}", r["summary"]))?;
    let axioms: Vec<&str> = r["steps"]
        .as_array()
        .into_iter()
        .flatten()
        .filter(|s| s["status"] == "AXIOM")
        .filter_map(|s| s["id"].as_str())
        .collect();
    ensure(axioms == ["poincare_hopf", "munzner", "cheng_yang"], || format!("axioms {axioms:?}"))?;
    let six = int(6);
    ensure(
        int(4).compare(&six) == ExactOrdering::Less && six.compare(&cheng_yang_bound()) == ExactOrdering::Less,
        || "4 < 6 < 20/3 not certified".into(),
    )?;
    ensure(detail(&r, "pinching_contradiction", "cheng_yang_bound") == Some("20/3"), || "bound missing".into())?;
    let defaults = ClosedForms::default();
    for c in Coefficient::ALL {
        let bumped = defaults.get(c) + ExactScalar::one();
        let inject = format!("{}={bumped}", c.name());
        let (code, r) = verifier(&["all", "--trials", "50", "--inject", &inject]);
        ensure(code == 1 && r["summary"] == "FAIL", || format!("mutation {inject} survived"))?;
    }
    Ok(())
}

fn multiset_oracle() -> Outcome {
    let mut rng = Lcg64::new(23);
    for _ in 0..THIRD_FFS {
        let s = random_minimal_spectrum_from(&mut rng, 2).map_err(|e| e.to_string())?;
        let h = ThirdFF::from_entries(core::array::from_fn(|_| rng.rational(3)));
        let l = s.values();
        let mut sums = [ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero(), ExactScalar::zero()];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    let sq = h.get(i, j, k).square();
                    sums[0] = &sums[0] + &sq;
                    sums[1] = &sums[1] + &sq * l[i].square();
                    sums[2] = &sums[2] + &sq * (&l[i] * &l[j]);
                    sums[3] = &sums[3] + &sq * &l[i];
                }
            }
        }
        let q = quadratic_forms(&s, &h).map_err(|e| e.to_string())?;
        ensure([q.grad_norm_squared, q.a, q.b, q.c] == sums, || format!("{s:?}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("cartan case analysis", cartan),
        ("closed-form curvature identities", curvature_identities),
        ("gbc consistency", gbc_consistency),
        ("clifford checks", clifford),
        ("cubic extremal lemma", extremal),
        ("jet-analysis contradiction", jet),
        ("theorem pipeline and mutation suite", theorem),
        ("multiset oracle equivalence", multiset_oracle),
    ];
    let mut failed = 0;
    for (n, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let elapsed = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {} PASS {name} ({elapsed:.2?})", n + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({elapsed:.2?}): {why}", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
