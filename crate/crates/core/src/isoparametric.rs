//! Cartan's fundamental formula, Münzner's restriction on `|A|²`, and the
//! case analysis showing that a minimal isoparametric hypersurface of `S⁵`
//! with vanishing Gauss-Kronecker curvature is totally geodesic.
//!
//! The case analysis assumes the normalization `λ₂ = 0` for the sorted
//! spectrum `λ₁ ≤ λ₂ ≤ λ₃ ≤ λ₄` of a non-totally-geodesic point. It is taken
//! as a hypothesis and not derived from `σ₁ = σ₄ = 0`.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::certificate::{Certificate, CertificateKind};
use crate::scalar::{ExactOrdering, ExactScalar, ScalarError};
use crate::spectrum::{Spectrum, SpectrumError};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum IsoError {
    #[error("principal curvatures must be strictly increasing")]
    NotIncreasing,
    #[error("need one positive multiplicity per distinct principal curvature")]
    BadMultiplicities,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("Münzner's theorem allows g ∈ {{1, 2, 3, 4, 6}}, got {0}")]
    InvalidG(u32),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("polynomial coefficients must be rational")]
    IrrationalCoefficients,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
}

/// Distinct principal curvatures `μ₁ < … < μ_g` with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct IsoparametricData {
    mu: Vec<ExactScalar>,
    m: Vec<u32>,
}

impl IsoparametricData {
    pub fn new(mu: Vec<ExactScalar>, m: Vec<u32>) -> Result<Self, IsoError> {
        if mu.is_empty() || mu.len() != m.len() || m.contains(&0) {
            return Err(IsoError::BadMultiplicities);
        }
        if mu.windows(2).any(|w| w[0].compare(&w[1]) != ExactOrdering::Less) {
            return Err(IsoError::NotIncreasing);
        }
        Ok(IsoparametricData { mu, m })
    }

    pub fn g(&self) -> usize {
        self.mu.len()
    }

    pub fn n(&self) -> u32 {
        self.m.iter().sum()
    }

    pub fn curvatures(&self) -> &[ExactScalar] {
        &self.mu
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.m
    }

    /// `Σ_{j≠i} m_j (1 + μ_i μ_j)/(μ_i − μ_j)` (0-based `i`).
    pub fn cartan_residual(&self, i: usize) -> Result<ExactScalar, IsoError> {
        let mu_i = self.mu.get(i).ok_or(IsoError::IndexOutOfRange(i))?;
        let mut total = ExactScalar::zero();
        for (j, (mu_j, &m_j)) in self.mu.iter().zip(&self.m).enumerate() {
            if j == i {
                continue;
            }
            let num = ExactScalar::one() + mu_i * mu_j;
            total = total + ExactScalar::integer(i64::from(m_j)) * num.try_div(&(mu_i - mu_j))?;
        }
        Ok(total)
    }

    /// Principal curvatures with multiplicity.
    pub fn spectrum(&self) -> Result<Spectrum, SpectrumError> {
        let values = self
            .mu
            .iter()
            .zip(&self.m)
            .flat_map(|(v, &m)| core::iter::repeat_n(v.clone(), m as usize))
            .collect();
        Spectrum::new(values)
    }

    /// Global sign flip with the order reversed.
    pub fn negate_reverse(&self) -> Self {
        IsoparametricData {
            mu: self.mu.iter().rev().map(|v| -v).collect(),
            m: self.m.iter().rev().copied().collect(),
        }
    }
}

/// `|A|² = (g − 1)n` and the admissible set `{0, n, 2n, 3n, 5n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MunznerValue {
    pub norm_squared: ExactScalar,
    pub allowed: [ExactScalar; 5],
}

impl MunznerValue {
    pub fn allows(&self, a2: &ExactScalar) -> bool {
        self.allowed.iter().any(|v| v == a2)
    }
}

pub fn munzner_a2(g: u32, n: u32) -> Result<MunznerValue, IsoError> {
    if !matches!(g, 1 | 2 | 3 | 4 | 6) {
        return Err(IsoError::InvalidG(g));
    }
    let n = i64::from(n);
    Ok(MunznerValue {
        norm_squared: ExactScalar::integer((i64::from(g) - 1) * n),
        allowed: [0, 1, 2, 3, 5].map(|k| ExactScalar::integer(k * n)),
    })
}

/// `c₀ + c₁x + c₂x²` with rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticPoly {
    pub c0: ExactScalar,
    pub c1: ExactScalar,
    pub c2: ExactScalar,
}

impl QuadraticPoly {
    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        &self.c0 + &self.c1 * x + &self.c2 * &x.square()
    }

    pub fn discriminant(&self) -> ExactScalar {
        self.c1.square() - ExactScalar::integer(4) * &self.c0 * &self.c2
    }

    /// Real roots in ascending order, exact in `ℚ(√disc)`. `None` for the zero
    /// polynomial.
    pub fn real_roots(&self) -> Result<Option<Vec<ExactScalar>>, IsoError> {
        let rational = |x: &ExactScalar| x.as_rational().cloned().ok_or(IsoError::IrrationalCoefficients);
        let (c0, c1, c2) = (rational(&self.c0)?, rational(&self.c1)?, rational(&self.c2)?);
        use num_traits::Zero;
        if c2.is_zero() {
            if c1.is_zero() {
                return Ok(if c0.is_zero() { None } else { Some(Vec::new()) });
            }
            return Ok(Some(vec![ExactScalar::from(-c0 / c1)]));
        }
        let disc: BigRational = &c1 * &c1 - BigRational::from_integer(4.into()) * &c0 * &c2;
        if disc < BigRational::zero() {
            return Ok(Some(Vec::new()));
        }
        let root = ExactScalar::sqrt_of(&disc)?;
        let two_a = ExactScalar::from(BigRational::from_integer(2.into()) * &c2);
        let minus_b = ExactScalar::from(-c1);
        let mut roots = vec![(&minus_b - &root) / two_a.clone(), (&minus_b + &root) / two_a];
        if root.is_zero() {
            roots.pop();
        }
        roots.sort_by(|a, b| a.compare(b).certified().unwrap_or(core::cmp::Ordering::Equal));
        Ok(Some(roots))
    }
}

/// The three shapes of a sorted spectrum `λ₁ < λ₂ = 0 ≤ λ₃ ≤ λ₄`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlatGaussCase {
    /// `λ₃ = 0`
    ThirdZero,
    /// `λ₃ = λ₄ > 0`
    TopPairEqual,
    /// `0 < λ₃ < λ₄`
    TopPairDistinct,
}

impl FlatGaussCase {
    pub const ALL: [FlatGaussCase; 3] =
        [FlatGaussCase::ThirdZero, FlatGaussCase::TopPairEqual, FlatGaussCase::TopPairDistinct];

    pub fn label(self) -> &'static str {
        match self {
            FlatGaussCase::ThirdZero => "lambda3_zero",
            FlatGaussCase::TopPairEqual => "lambda3_eq_lambda4",
            FlatGaussCase::TopPairDistinct => "lambda3_lt_lambda4",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CaseConfig {
    /// Apply Münzner's restriction `|A|² = (g − 1)n`.
    pub munzner: bool,
    /// Assumed Gauss-Kronecker curvature; the analysis requires zero.
    pub gauss_kronecker: ExactScalar,
}

impl Default for CaseConfig {
    fn default() -> Self {
        CaseConfig { munzner: true, gauss_kronecker: ExactScalar::zero() }
    }
}

/// Distinct curvatures proportional to one parameter: `μ_j = c_j t`.
struct ScaledFamily {
    slopes: Vec<ExactScalar>,
    m: Vec<u32>,
}

impl ScaledFamily {
    fn at(&self, t: &ExactScalar) -> Result<IsoparametricData, IsoError> {
        IsoparametricData::new(self.slopes.iter().map(|c| c * t).collect(), self.m.clone())
    }

    /// `t · (Cartan residual at i)` as a polynomial in `t`:
    /// `Σ m_j/(c_i − c_j) + t² Σ m_j c_i c_j/(c_i − c_j)`.
    fn cleared(&self, i: usize) -> Result<QuadraticPoly, IsoError> {
        let ci = &self.slopes[i];
        let mut c0 = ExactScalar::zero();
        let mut c2 = ExactScalar::zero();
        for (j, (cj, &mj)) in self.slopes.iter().zip(&self.m).enumerate() {
            if j == i {
                continue;
            }
            let w = ExactScalar::integer(i64::from(mj)).try_div(&(ci - cj))?;
            c2 = c2 + &w * ci * cj;
            c0 = c0 + w;
        }
        Ok(QuadraticPoly { c0, c1: ExactScalar::zero(), c2 })
    }

    /// Re-derives the cleared polynomial from direct residual evaluations.
    fn confirm(&self, i: usize, poly: &QuadraticPoly, samples: &[i64]) -> Result<bool, IsoError> {
        for &t in samples {
            let t = ExactScalar::integer(t);
            let direct = self.at(&t)?.cartan_residual(i)? * &t;
            if direct != poly.eval(&t) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn flat_gauss_spectrum(values: [ExactScalar; 4]) -> Result<Spectrum, IsoError> {
    let s = Spectrum::new(values.into())?;
    if !s.trace().is_zero() || !s.gauss_kronecker().is_zero() {
        return Err(IsoError::Precondition("case spectrum must satisfy σ₁ = σ₄ = 0"));
    }
    Ok(s)
}

/// Refutes (or, with Münzner disabled, fails to refute) one case.
pub fn case_analysis_k0(case: FlatGaussCase, config: &CaseConfig) -> Result<Certificate, IsoError> {
    if !config.gauss_kronecker.is_zero() {
        return Err(IsoError::Precondition("Gauss-Kronecker curvature must vanish"));
    }
    let int = ExactScalar::integer;
    match case {
        FlatGaussCase::ThirdZero => {
            // μ = (λ₁, 0, −λ₁), m = (1, 2, 1), residual at μ₁
            let family = ScaledFamily { slopes: vec![int(1), int(0), int(-1)], m: vec![1, 2, 1] };
            let poly = family.cleared(0)?;
            if !family.confirm(0, &poly, &[-1, -2, -3])? {
                return Err(IsoError::Precondition("cleared Cartan polynomial disagrees with residual"));
            }
            let roots = poly.real_roots()?.unwrap_or_default();
            let lambda1 = roots
                .into_iter()
                .find(|r| r.is_negative())
                .ok_or(IsoError::Precondition("no negative root for λ₁"))?;
            let data = family.at(&lambda1)?;
            let check = data.cartan_residual(0)?;
            let spectrum = flat_gauss_spectrum([lambda1.clone(), int(0), int(0), -&lambda1])?;
            let a2 = spectrum.power_sum(2);
            let expected = munzner_a2(data.g() as u32, data.n())?.norm_squared;
            let base = |kind, summary: &str| {
                Certificate::new(kind, summary)
                    .detail("cartan_c0", poly.c0.clone())
                    .detail("cartan_c2", poly.c2.clone())
                    .detail("lambda1", lambda1.clone())
                    .detail("cartan_residual_at_root", check.clone())
                    .detail("norm_squared", a2.clone())
            };
            if config.munzner && a2 != expected {
                Ok(base(
                    CertificateKind::MunznerMismatch,
                    "Cartan forces λ₁ = −√5, so |A|² = 10, but Münzner requires (g−1)n = 8",
                )
                .detail("munzner_expected", expected)
                .detail("found", a2))
            } else {
                Ok(base(CertificateKind::Consistent, "Cartan's formula alone admits λ₁ = −√5"))
            }
        }
        FlatGaussCase::TopPairEqual => {
            // μ = (λ₁, 0, −λ₁/2), m = (1, 1, 2), residual at μ₂ = 0
            let family = ScaledFamily {
                slopes: vec![int(1), int(0), ExactScalar::ratio(-1, 2)],
                m: vec![1, 1, 2],
            };
            let poly = family.cleared(1)?;
            if !family.confirm(1, &poly, &[-1, -2, -3])? {
                return Err(IsoError::Precondition("cleared Cartan polynomial disagrees with residual"));
            }
            let roots = poly.real_roots()?;
            let cert = Certificate::new(
                CertificateKind::NoRealSolution,
                "Cartan residual at the zero curvature equals 3/λ₁, which never vanishes",
            )
            .detail("residual_times_lambda1", poly.c0.clone())
            .detail("cartan_c2", poly.c2.clone());
            match roots {
                Some(r) if r.is_empty() => Ok(cert),
                _ => Ok(Certificate::new(CertificateKind::Consistent, "residual has a root")
                    .detail("cartan_c0", poly.c0)
                    .detail("cartan_c2", poly.c2)),
            }
        }
        FlatGaussCase::TopPairDistinct => {
            // μ = (−λ₃−λ₄, 0, λ₃, λ₄), all simple, residual at μ₂ = 0.
            // numerator(λ₃, λ₄) = Σ_{j≠i} m_j (1 + μ_i μ_j) Π_{l≠i,j} (μ_i − μ_l)
            let numerator = |x: &ExactScalar, y: &ExactScalar| {
                let mu = [-(x + y), int(0), x.clone(), y.clone()];
                let i = 1;
                let mut total = ExactScalar::zero();
                for j in 0..4 {
                    if j == i {
                        continue;
                    }
                    let mut term = ExactScalar::one() + &mu[i] * &mu[j];
                    for l in 0..4 {
                        if l != i && l != j {
                            term = term * (&mu[i] - &mu[l]);
                        }
                    }
                    total = total + term;
                }
                total
            };
            // numerator is homogeneous quadratic; read off a x² + b xy + c y²
            let a = numerator(&int(1), &int(0));
            let c = numerator(&int(0), &int(1));
            let b = numerator(&int(1), &int(1)) - &a - &c;
            for (x, y) in [(2, 1), (1, 3), (-2, 5)] {
                let (x, y) = (int(x), int(y));
                let form = &a * &x.square() + &b * &x * &y + &c * &y.square();
                if numerator(&x, &y) != form {
                    return Err(IsoError::Precondition("Cartan numerator is not a quadratic form"));
                }
            }
            // cross-check against the residual itself at λ₃ = 1, λ₄ = 2
            let sample = IsoparametricData::new(vec![int(-3), int(0), int(1), int(2)], vec![1, 1, 1, 1])?;
            let denominator: ExactScalar = [int(3), int(-1), int(-2)].iter().product();
            if sample.cartan_residual(1)? * denominator != numerator(&int(1), &int(2)) {
                return Err(IsoError::Precondition("Cartan numerator disagrees with residual"));
            }
            // q = −numerator = λ₃² + λ₃λ₄ + λ₄²
            let (qa, qb, qc) = (-&a, -&b, -&c);
            let disc = qb.square() - int(4) * &qa * &qc;
            let definite = qa.is_positive() && disc.is_negative();
            let cert = Certificate::new(
                if definite { CertificateKind::SignImpossibility } else { CertificateKind::Consistent },
                "Cartan forces λ₃² + λ₃λ₄ + λ₄² = 0, a positive definite form on λ₄ > λ₃ > 0",
            )
            .detail("form_a", qa)
            .detail("form_b", qb)
            .detail("form_c", qc)
            .detail("form_discriminant", disc);
            Ok(cert)
        }
    }
}

/// Runs all three cases; `TotallyGeodesic` iff each is refuted.
pub fn isoparametric_k0_conclusion(config: &CaseConfig) -> Result<Certificate, IsoError> {
    let children = FlatGaussCase::ALL
        .iter()
        .map(|&case| case_analysis_k0(case, config))
        .collect::<Result<Vec<_>, _>>()?;
    let refuted = children.iter().all(|c| c.kind.is_contradiction());
    let mut cert = if refuted {
        Certificate::new(
            CertificateKind::TotallyGeodesic,
            "every non-totally-geodesic case contradicts Cartan's formula or Münzner's restriction",
        )
    } else {
        Certificate::new(CertificateKind::Consistent, "at least one case is not refuted")
    };
    cert.children = children;
    Ok(cert)
}

/// The minimal Clifford hypersurface `S^k(√(k/4)) × S^{4−k}(√((4−k)/4))` in
/// `S⁵`: curvature `√((4−k)/k)` with multiplicity `k` and `−√(k/(4−k))` with
/// multiplicity `4−k`.
pub fn clifford_data(k: u32) -> Result<IsoparametricData, IsoError> {
    if !(1..=3).contains(&k) {
        return Err(IsoError::Precondition("Clifford factor dimension must be 1, 2 or 3"));
    }
    let k_i = i64::from(k);
    let positive = ExactScalar::sqrt_of(&BigRational::new((4 - k_i).into(), k_i.into()))?;
    let negative = -ExactScalar::sqrt_of(&BigRational::new(k_i.into(), (4 - k_i).into()))?;
    IsoparametricData::new(vec![negative, positive], vec![4 - k, k])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> ExactScalar {
        ExactScalar::integer(n)
    }

    #[test]
    fn clifford_residual_vanishes() {
        let d = IsoparametricData::new(vec![int(-1), int(1)], vec![2, 2]).unwrap();
        assert_eq!(d.cartan_residual(0).unwrap(), int(0));
        assert_eq!(d.cartan_residual(1).unwrap(), int(0));
    }

    #[test]
    fn residual_formulas_from_case_analysis() {
        // μ = (λ, 0, −λ), m = (1, 2, 1): 2/λ + (1 − λ²)/(2λ)
        let lam = ExactScalar::ratio(-3, 2);
        let d = IsoparametricData::new(vec![lam.clone(), int(0), -&lam], vec![1, 2, 1]).unwrap();
        let expected = int(2) / lam.clone() + (int(1) - lam.square()) / (int(2) * &lam);
        assert_eq!(d.cartan_residual(0).unwrap(), expected);
        // μ = (λ, 0, −λ/2), m = (1, 1, 2): 3/λ at the middle curvature
        let d = IsoparametricData::new(vec![lam.clone(), int(0), &lam * &ExactScalar::ratio(-1, 2)], vec![1, 1, 2])
            .unwrap();
        assert_eq!(d.cartan_residual(1).unwrap(), int(3) / lam);
    }

    #[test]
    fn validation() {
        assert_eq!(IsoparametricData::new(vec![int(1), int(1)], vec![2, 2]), Err(IsoError::NotIncreasing));
        assert_eq!(IsoparametricData::new(vec![int(1)], vec![]), Err(IsoError::BadMultiplicities));
        let d = IsoparametricData::new(vec![int(0)], vec![4]).unwrap();
        assert_eq!(d.cartan_residual(3), Err(IsoError::IndexOutOfRange(3)));
    }

    #[test]
    fn munzner_values() {
        assert_eq!(munzner_a2(3, 4).unwrap().norm_squared, int(8));
        assert_eq!(munzner_a2(1, 4).unwrap().norm_squared, int(0));
        let v = munzner_a2(4, 4).unwrap();
        assert_eq!(v.norm_squared, int(12));
        assert!(v.allows(&int(12)));
        assert_eq!(v.allowed, [int(0), int(4), int(8), int(12), int(20)]);
        assert!(!v.allows(&int(10)));
        assert_eq!(munzner_a2(5, 4), Err(IsoError::InvalidG(5)));
    }

    #[test]
    fn quadratic_roots() {
        let p = QuadraticPoly { c0: int(5), c1: int(0), c2: int(-1) };
        let roots = p.real_roots().unwrap().unwrap();
        assert_eq!(roots, vec!["-sqrt(5)".parse().unwrap(), "sqrt(5)".parse::<ExactScalar>().unwrap()]);
        let p = QuadraticPoly { c0: int(1), c1: int(0), c2: int(1) };
        assert!(p.real_roots().unwrap().unwrap().is_empty());
        let p = QuadraticPoly { c0: int(1), c1: int(-2), c2: int(1) };
        assert_eq!(p.real_roots().unwrap().unwrap(), vec![int(1)]);
        let p = QuadraticPoly { c0: int(0), c1: int(0), c2: int(0) };
        assert_eq!(p.real_roots().unwrap(), None);
    }

    #[test]
    fn third_zero_case() {
        let cert = case_analysis_k0(FlatGaussCase::ThirdZero, &CaseConfig::default()).unwrap();
        assert_eq!(cert.kind, CertificateKind::MunznerMismatch);
        assert_eq!(cert.get("lambda1").unwrap(), &"-sqrt(5)".parse::<ExactScalar>().unwrap());
        assert_eq!(cert.get("munzner_expected").unwrap(), &int(8));
        assert_eq!(cert.get("found").unwrap(), &int(10));
        assert_eq!(cert.get("cartan_residual_at_root").unwrap(), &int(0));
    }

    #[test]
    fn third_zero_without_munzner_is_consistent() {
        let config = CaseConfig { munzner: false, ..CaseConfig::default() };
        let cert = case_analysis_k0(FlatGaussCase::ThirdZero, &config).unwrap();
        assert_eq!(cert.kind, CertificateKind::Consistent);
        assert_eq!(cert.get("lambda1").unwrap(), &"-sqrt(5)".parse::<ExactScalar>().unwrap());
        let all = isoparametric_k0_conclusion(&config).unwrap();
        assert_eq!(all.kind, CertificateKind::Consistent);
    }

    #[test]
    fn top_pair_equal_case() {
        let cert = case_analysis_k0(FlatGaussCase::TopPairEqual, &CaseConfig::default()).unwrap();
        assert_eq!(cert.kind, CertificateKind::NoRealSolution);
        assert_eq!(cert.get("residual_times_lambda1").unwrap(), &int(3));
    }

    #[test]
    fn top_pair_distinct_case() {
        let cert = case_analysis_k0(FlatGaussCase::TopPairDistinct, &CaseConfig::default()).unwrap();
        assert_eq!(cert.kind, CertificateKind::SignImpossibility);
        assert_eq!(cert.get("form_a").unwrap(), &int(1));
        assert_eq!(cert.get("form_b").unwrap(), &int(1));
        assert_eq!(cert.get("form_c").unwrap(), &int(1));
        assert_eq!(cert.get("form_discriminant").unwrap(), &int(-3));
    }

    #[test]
    fn conclusion_is_totally_geodesic() {
        let cert = isoparametric_k0_conclusion(&CaseConfig::default()).unwrap();
        assert_eq!(cert.kind, CertificateKind::TotallyGeodesic);
        assert_eq!(cert.children.len(), 3);
    }

    #[test]
    fn nonzero_gauss_curvature_is_rejected() {
        let config = CaseConfig { gauss_kronecker: int(1), ..CaseConfig::default() };
        assert!(matches!(isoparametric_k0_conclusion(&config), Err(IsoError::Precondition(_))));
    }

    #[test]
    fn clifford_family() {
        for k in 1..=3 {
            let d = clifford_data(k).unwrap();
            for i in 0..d.g() {
                assert!(d.cartan_residual(i).unwrap().is_zero(), "k = {k}");
            }
            let s = d.spectrum().unwrap();
            assert_eq!(s.power_sum(2), int(4));
            assert!(s.trace().is_zero());
            assert_eq!(munzner_a2(d.g() as u32, d.n()).unwrap().norm_squared, int(4));
            assert!(!s.gauss_kronecker().is_zero());
        }
        assert_eq!(clifford_data(2).unwrap().spectrum().unwrap().gauss_kronecker(), int(1));
        assert_eq!(clifford_data(1).unwrap().spectrum().unwrap().gauss_kronecker(), ExactScalar::ratio(-1, 3));
    }
}
