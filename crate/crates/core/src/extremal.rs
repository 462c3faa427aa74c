//! The cubic bound `|a³ + b³ + c³| ≤ (a² + b² + c²)^{3/2} / √6` on the plane
//! `a + b + c = 0`, its equality cases, and a floating-point scan used as an
//! oracle.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;

use crate::scalar::{ExactOrdering, ExactScalar, ScalarError};
use crate::spectrum::{Spectrum, SpectrumError};

#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum ExtremalError {
    #[error("entries do not sum to zero")]
    NotZeroSum,
    #[error("entries cannot be compared exactly")]
    Uncertified,
    #[error("resolution must be at least 1000, got {0}")]
    ResolutionTooSmall(u32),
    #[error("s2 must be positive and finite")]
    BadNorm,
    #[error("spectrum has no zero principal curvature")]
    NoZeroEigenvalue,
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `a ≤ b ≤ c` with `a + b + c = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Triple {
    a: ExactScalar,
    b: ExactScalar,
    c: ExactScalar,
}

fn certified_eq(x: &ExactScalar, y: &ExactScalar) -> Result<bool, ExtremalError> {
    match x.compare(y) {
        ExactOrdering::Uncertified => Err(ExtremalError::Uncertified),
        o => Ok(o == ExactOrdering::Equal),
    }
}

impl Triple {
    /// Sorts the entries; rejects a nonzero sum.
    pub fn new(a: ExactScalar, b: ExactScalar, c: ExactScalar) -> Result<Self, ExtremalError> {
        let mut v = [a, b, c];
        for i in 0..3 {
            for j in i + 1..3 {
                if v[i].compare(&v[j]) == ExactOrdering::Uncertified {
                    return Err(ExtremalError::Uncertified);
                }
            }
        }
        v.sort_by(|x, y| x.compare(y).certified().unwrap_or(Ordering::Equal));
        match (&v[0] + &v[1] + &v[2]).signum() {
            ExactOrdering::Equal => {}
            ExactOrdering::Uncertified => return Err(ExtremalError::Uncertified),
            _ => return Err(ExtremalError::NotZeroSum),
        }
        let [a, b, c] = v;
        Ok(Triple { a, b, c })
    }

    pub fn from_integers(a: i64, b: i64, c: i64) -> Result<Self, ExtremalError> {
        Self::new(ExactScalar::integer(a), ExactScalar::integer(b), ExactScalar::integer(c))
    }

    pub fn entries(&self) -> [&ExactScalar; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn norm_squared(&self) -> ExactScalar {
        self.a.square() + self.b.square() + self.c.square()
    }

    pub fn cubic_sum(&self) -> ExactScalar {
        self.a.pow(3) + self.b.pow(3) + self.c.pow(3)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CubicBound {
    /// `a³ + b³ + c³`
    pub lhs: ExactScalar,
    /// `s₂^{3/2}/√6`, when `s₂` is rational.
    pub rhs: Option<ExactScalar>,
    /// `s₂³/6 − (a³ + b³ + c³)²`
    pub margin: ExactScalar,
}

pub fn cubic_bound_check(t: &Triple) -> CubicBound {
    let s2 = t.norm_squared();
    let lhs = t.cubic_sum();
    let margin = s2.pow(3) * ExactScalar::ratio(1, 6) - lhs.square();
    // s₂^{3/2}/√6 = s₂·√(s₂/6)
    let rhs = s2
        .as_rational()
        .and_then(|r| ExactScalar::sqrt_of(&(r / BigRational::from_integer(6.into()))).ok())
        .map(|root| &s2 * &root);
    CubicBound { lhs, rhs, margin }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// `a = b = c = 0`
    Zero,
    /// `b = c = −a/2`: the cubic sum attains its minimum.
    LowerEquality,
    /// `a = b = −c/2`: the cubic sum attains its maximum.
    UpperEquality,
    /// `b = 0`, `a = −c`
    ZeroSum,
    Interior,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::Zero => "Zero",
            Classification::LowerEquality => "LowerEquality",
            Classification::UpperEquality => "UpperEquality",
            Classification::ZeroSum => "ZeroSum",
            Classification::Interior => "Interior",
        }
    }
}

pub fn classify(t: &Triple) -> Result<Classification, ExtremalError> {
    let zero = ExactScalar::zero();
    let half = ExactScalar::ratio(-1, 2);
    let Triple { a, b, c } = t;
    if certified_eq(a, &zero)? && certified_eq(c, &zero)? {
        return Ok(Classification::Zero);
    }
    if certified_eq(b, c)? && certified_eq(b, &(a * &half))? {
        return Ok(Classification::LowerEquality);
    }
    if certified_eq(a, b)? && certified_eq(a, &(c * &half))? {
        return Ok(Classification::UpperEquality);
    }
    if certified_eq(b, &zero)? && certified_eq(a, &-c)? {
        return Ok(Classification::ZeroSum);
    }
    Ok(Classification::Interior)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extremes {
    pub min: f64,
    pub max: f64,
    pub argmin: [f64; 3],
    pub argmax: [f64; 3],
}

/// Scans the circle `a + b + c = 0`, `a² + b² + c² = s2` at `resolution`
/// equally spaced angles.
pub fn brute_force_extremes(s2: f64, resolution: u32) -> Result<Extremes, ExtremalError> {
    if resolution < 1000 {
        return Err(ExtremalError::ResolutionTooSmall(resolution));
    }
    if !(s2.is_finite() && s2 > 0.0) {
        return Err(ExtremalError::BadNorm);
    }
    let r = libm::sqrt(s2);
    let (s2r, s6r) = (libm::sqrt(2.0), libm::sqrt(6.0));
    let u = [1.0 / s2r, -1.0 / s2r, 0.0];
    let w = [1.0 / s6r, 1.0 / s6r, -2.0 / s6r];
    let mut out = Extremes { min: f64::INFINITY, max: f64::NEG_INFINITY, argmin: [0.0; 3], argmax: [0.0; 3] };
    for step in 0..resolution {
        let theta = 2.0 * core::f64::consts::PI * f64::from(step) / f64::from(resolution);
        let (sin, cos) = (libm::sin(theta), libm::cos(theta));
        let p: [f64; 3] = core::array::from_fn(|i| r * (cos * u[i] + sin * w[i]));
        let value: f64 = p.iter().map(|x| x * x * x).sum();
        if value > out.max {
            out.max = value;
            out.argmax = p;
        }
        if value < out.min {
            out.min = value;
            out.argmin = p;
        }
    }
    Ok(out)
}

/// Whether `f₃² = |A|⁶/6` with `f₃ ≥ 0`, for a minimal 4-spectrum with a zero
/// principal curvature.
pub fn f3_maximality_check(s: &Spectrum) -> Result<bool, ExtremalError> {
    s.require_four()?;
    s.require_minimal()?;
    let mut rest: Vec<ExactScalar> = s.values().to_vec();
    let zero = rest.iter().position(ExactScalar::is_zero).ok_or(ExtremalError::NoZeroEigenvalue)?;
    rest.remove(zero);
    let [a, b, c]: [ExactScalar; 3] = rest.try_into().expect("three remain");
    let t = Triple::new(a, b, c)?;
    let bound = cubic_bound_check(&t);
    Ok(bound.margin.is_zero() && !bound.lhs.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: i64, b: i64, c: i64) -> Triple {
        Triple::from_integers(a, b, c).unwrap()
    }

    #[test]
    fn bound_examples() {
        let up = cubic_bound_check(&t(-1, -1, 2));
        assert_eq!(up.lhs, ExactScalar::integer(6));
        assert_eq!(up.rhs, Some(ExactScalar::integer(6)));
        assert!(up.margin.is_zero());

        let low = cubic_bound_check(&t(-2, 1, 1));
        assert_eq!(low.lhs, ExactScalar::integer(-6));
        assert!(low.margin.is_zero());

        let mid = cubic_bound_check(&t(-1, 0, 1));
        assert_eq!(mid.lhs, ExactScalar::zero());
        assert_eq!(mid.margin, ExactScalar::ratio(4, 3));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&t(-2, 1, 1)).unwrap(), Classification::LowerEquality);
        assert_eq!(classify(&t(2, -1, -1)).unwrap(), Classification::UpperEquality);
        assert_eq!(classify(&t(-3, 0, 3)).unwrap(), Classification::ZeroSum);
        assert_eq!(classify(&t(-3, 1, 2)).unwrap(), Classification::Interior);
        assert_eq!(classify(&t(0, 0, 0)).unwrap(), Classification::Zero);
        let m = cubic_bound_check(&t(-3, 1, 2)).margin;
        assert_eq!(m, ExactScalar::ratio(2744, 6) - ExactScalar::integer(324));
    }

    #[test]
    fn rejects_nonzero_sum() {
        assert_eq!(Triple::from_integers(1, 1, 1), Err(ExtremalError::NotZeroSum));
    }

    #[test]
    fn scan_brackets_the_bound() {
        let e = brute_force_extremes(6.0, 1_000_000).unwrap();
        assert!((e.max - 6.0).abs() < 1e-4);
        assert!((e.min + 6.0).abs() < 1e-4);
        let e = brute_force_extremes(1.0, 1_000_000).unwrap();
        assert!((e.max - 1.0 / libm::sqrt(6.0)).abs() < 1e-4);
        assert!(brute_force_extremes(1.0, 10).is_err());
    }

    #[test]
    fn maximality() {
        assert!(f3_maximality_check(&Spectrum::from_integers(&[-1, -1, 0, 2])).unwrap());
        assert!(!f3_maximality_check(&Spectrum::from_integers(&[-2, 0, -1, 3])).unwrap());
        assert!(!f3_maximality_check(&Spectrum::from_integers(&[-2, 0, 1, 1])).unwrap());
        assert_eq!(
            f3_maximality_check(&Spectrum::from_integers(&[-3, -1, 1, 3])),
            Err(ExtremalError::NoZeroEigenvalue)
        );
    }
}
