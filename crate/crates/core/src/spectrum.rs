//! Principal-curvature spectra and the scalar invariants built from them.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::scalar::{ExactOrdering, ExactScalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SpectrumError {
    #[error("a spectrum needs at least two principal curvatures, got {0}")]
    TooShort(usize),
    #[error("expected dimension 4, got {0}")]
    NotFourDimensional(usize),
    #[error("principal curvatures cannot be ordered exactly")]
    Unorderable,
    #[error("spectrum is not minimal (trace is {0})")]
    NotMinimal(alloc::string::String),
    #[error("identity `{0}` failed")]
    IdentityFailed(&'static str),
    #[error("bound must be positive")]
    ZeroBound,
}

/// Principal curvatures `λ₁ ≤ … ≤ λₙ` at a point, stored ascending with
/// multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    values: Vec<ExactScalar>,
}

impl Spectrum {
    pub fn new(mut values: Vec<ExactScalar>) -> Result<Self, SpectrumError> {
        if values.len() < 2 {
            return Err(SpectrumError::TooShort(values.len()));
        }
        // Certify every pairwise order before sorting so the sort is total.
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                if values[i].compare(&values[j]) == ExactOrdering::Uncertified {
                    return Err(SpectrumError::Unorderable);
                }
            }
        }
        values.sort_by(|a, b| a.compare(b).certified().unwrap_or(Ordering::Equal));
        Ok(Spectrum { values })
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| ExactScalar::integer(v)).collect())
            .expect("integer spectra are orderable")
    }

    pub fn values(&self) -> &[ExactScalar] {
        &self.values
    }

    pub fn dimension(&self) -> usize {
        self.values.len()
    }

    /// `f_k = Σ λᵢᵏ`.
    pub fn power_sum(&self, k: u32) -> ExactScalar {
        self.values.iter().map(|v| v.pow(k)).sum()
    }

    /// `σ_k`, the degree-`k` elementary symmetric polynomial. Zero for `k > n`.
    pub fn elementary_symmetric(&self, k: usize) -> ExactScalar {
        // e[j] accumulates σ_j of the prefix processed so far.
        let mut e: Vec<ExactScalar> = (0..=k).map(|_| ExactScalar::zero()).collect();
        e[0] = ExactScalar::one();
        for v in &self.values {
            for j in (1..=k).rev() {
                e[j] = &e[j] + &(&e[j - 1] * v);
            }
        }
        e.swap_remove(k)
    }

    pub fn trace(&self) -> ExactScalar {
        self.values.iter().sum()
    }

    /// `H = σ₁ / n`.
    pub fn mean_curvature(&self) -> ExactScalar {
        self.trace() / ExactScalar::integer(self.dimension() as i64)
    }

    pub fn is_minimal(&self) -> bool {
        self.trace().is_zero()
    }

    pub fn require_minimal(&self) -> Result<(), SpectrumError> {
        let trace = self.trace();
        if trace.is_zero() {
            Ok(())
        } else {
            Err(SpectrumError::NotMinimal(alloc::format!("{trace}")))
        }
    }

    pub fn require_four(&self) -> Result<(), SpectrumError> {
        if self.dimension() == 4 {
            Ok(())
        } else {
            Err(SpectrumError::NotFourDimensional(self.dimension()))
        }
    }

    /// Gauss-Kronecker curvature `σₙ = Π λᵢ`.
    pub fn gauss_kronecker(&self) -> ExactScalar {
        self.values.iter().product()
    }

    /// The involution `λ ↦ −λ` followed by reversal, which turns the largest
    /// principal curvature into the smallest.
    pub fn negate_reverse(&self) -> Spectrum {
        Spectrum { values: self.values.iter().rev().map(|v| -v).collect() }
    }

    /// Multiplicity of the value at `index`.
    pub fn multiplicity_at(&self, index: usize) -> usize {
        let v = &self.values[index];
        self.values.iter().filter(|w| *w == v).count()
    }

    /// Number of distinct values.
    pub fn distinct_count(&self) -> usize {
        let mut count = 0;
        for (i, v) in self.values.iter().enumerate() {
            if i == 0 || self.values[i - 1] != *v {
                count += 1;
            }
        }
        count
    }

    /// Newton's identities for `n = 4`, as residuals that must vanish:
    /// `f₁ − σ₁`, `f₂ − (σ₁² − 2σ₂)`, `f₃ − (σ₁³ − 3σ₁σ₂ + 3σ₃)`,
    /// `f₄ − (σ₁⁴ − 4σ₁²σ₂ + 4σ₁σ₃ + 2σ₂² − 4σ₄)`.
    pub fn newton_residuals(&self) -> Result<[ExactScalar; 4], SpectrumError> {
        self.require_four()?;
        let s1 = self.elementary_symmetric(1);
        let s2 = self.elementary_symmetric(2);
        let s3 = self.elementary_symmetric(3);
        let s4 = self.elementary_symmetric(4);
        let c = ExactScalar::integer;
        let f2_rhs = s1.square() - c(2) * &s2;
        let f3_rhs = s1.pow(3) - c(3) * &s1 * &s2 + c(3) * &s3;
        let f4_rhs = s1.pow(4) - c(4) * s1.square() * &s2 + c(4) * &s1 * &s3 + c(2) * s2.square()
            - c(4) * &s4;
        Ok([
            self.power_sum(1) - &s1,
            self.power_sum(2) - f2_rhs,
            self.power_sum(3) - f3_rhs,
            self.power_sum(4) - f4_rhs,
        ])
    }

    /// Scalar invariants of a point on a hypersurface in `S⁵`.
    pub fn invariants(&self) -> Result<InvariantSet, SpectrumError> {
        self.require_four()?;
        let set = InvariantSet {
            mean_curvature: self.mean_curvature(),
            norm_squared: self.power_sum(2),
            scalar_curvature: ExactScalar::integer(12) - self.power_sum(2)
                + self.trace().square(),
            f3: self.power_sum(3),
            f4: self.power_sum(4),
            gauss_kronecker: self.gauss_kronecker(),
        };
        set.check()?;
        Ok(set)
    }
}

/// `H`, `|A|²`, `R_M`, `f₃`, `f₄`, `𝒦` at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSet {
    pub mean_curvature: ExactScalar,
    pub norm_squared: ExactScalar,
    pub scalar_curvature: ExactScalar,
    pub f3: ExactScalar,
    pub f4: ExactScalar,
    pub gauss_kronecker: ExactScalar,
}

impl InvariantSet {
    /// `½|A|⁴ − f₄`; zero exactly when `𝒦 = 0` on a minimal point.
    pub fn flatness_gap(&self) -> ExactScalar {
        ExactScalar::ratio(1, 2) * self.norm_squared.square() - &self.f4
    }

    fn check(&self) -> Result<(), SpectrumError> {
        if self.norm_squared.is_negative() {
            return Err(SpectrumError::IdentityFailed("|A|² ≥ 0"));
        }
        if self.mean_curvature.is_zero() {
            if !(&self.scalar_curvature - (ExactScalar::integer(12) - &self.norm_squared)).is_zero() {
                return Err(SpectrumError::IdentityFailed("R_M = 12 − |A|²"));
            }
            let f4 = ExactScalar::ratio(1, 2) * self.norm_squared.square()
                - ExactScalar::integer(4) * &self.gauss_kronecker;
            if !(&self.f4 - f4).is_zero() {
                return Err(SpectrumError::IdentityFailed("f₄ = ½|A|⁴ − 4𝒦"));
            }
            if self.gauss_kronecker.is_zero() != self.flatness_gap().is_zero() {
                return Err(SpectrumError::IdentityFailed("𝒦 = 0 ⟺ f₄ = ½|A|⁴"));
            }
        }
        Ok(())
    }
}

/// Knuth's MMIX linear congruential generator:
/// `state ← 6364136223846793005·state + 1442695040888963407 (mod 2⁶⁴)`,
/// output is the high 32 bits of the new state.
#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub const MULTIPLIER: u64 = 6364136223846793005;
    pub const INCREMENT: u64 = 1442695040888963407;
    /// Denominators of generated rationals are drawn from `1..=MAX_DENOMINATOR`.
    pub const MAX_DENOMINATOR: u64 = 1000;

    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(Self::MULTIPLIER).wrapping_add(Self::INCREMENT);
        (self.state >> 32) as u32
    }

    pub fn next_u64(&mut self) -> u64 {
        (u64::from(self.next_u32()) << 32) | u64::from(self.next_u32())
    }

    /// Uniform in `0..n` by rejection.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % n;
            }
        }
    }

    /// Rational `p/q` with `1 ≤ q ≤ 1000` and `|p/q| ≤ bound`.
    pub fn rational(&mut self, bound: u32) -> ExactScalar {
        let q = 1 + self.below(Self::MAX_DENOMINATOR);
        let span = u64::from(bound) * q;
        let p = self.below(2 * span + 1) as i128 - span as i128;
        ExactScalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }
}

/// Deterministic rational 4-spectrum with `σ₁ = 0` and entries in
/// `[−bound, bound]`. Three entries are drawn; the fourth closes the trace and
/// the draw is rejected if it leaves the box.
pub fn random_minimal_spectrum(seed: u64, bound: u32) -> Result<Spectrum, SpectrumError> {
    let mut rng = Lcg64::new(seed);
    random_minimal_spectrum_from(&mut rng, bound)
}

pub fn random_minimal_spectrum_from(rng: &mut Lcg64, bound: u32) -> Result<Spectrum, SpectrumError> {
    if bound == 0 {
        return Err(SpectrumError::ZeroBound);
    }
    let limit = ExactScalar::integer(i64::from(bound));
    loop {
        let mut values: Vec<ExactScalar> = (0..3).map(|_| rng.rational(bound)).collect();
        let last = -values.iter().sum::<ExactScalar>();
        if last.abs().compare(&limit) != ExactOrdering::Greater {
            values.push(last);
            return Spectrum::new(values);
        }
    }
}
