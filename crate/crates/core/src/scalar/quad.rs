//! Elements `a + b√d` of a single real quadratic field.

use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ScalarError;

/// Largest radicand accepted when extracting square factors by trial division.
const MAX_RADICAND: u64 = 1 << 40;

/// A quadratic surd `a + b√d` with `b != 0` and `d > 1` square-free.
///
/// Values with `b = 0` are never stored here; [`QuadSurd::normalize`] hands
/// them back as plain rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    pub(crate) a: BigRational,
    pub(crate) b: BigRational,
    pub(crate) d: BigInt,
}

/// Result of building a surd: either it collapsed to a rational or it did not.
pub(crate) enum Normalized {
    Rational(BigRational),
    Quad(QuadSurd),
}

impl QuadSurd {
    /// Rational part.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient of the radical.
    pub fn radical_coefficient(&self) -> &BigRational {
        &self.b
    }

    /// The square-free radicand.
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub(crate) fn normalize(a: BigRational, b: BigRational, d: BigInt) -> Normalized {
        if b.is_zero() {
            Normalized::Rational(a)
        } else {
            Normalized::Quad(QuadSurd { a, b, d })
        }
    }

    /// `√r` for a non-negative rational `r`, split as `(s, d)` with `√r = s·√d`
    /// and `d` square-free. `d = 1` means the root is rational.
    pub(crate) fn sqrt_parts(r: &BigRational) -> Result<(BigRational, BigInt), ScalarError> {
        if r.is_negative() {
            return Err(ScalarError::NegativeRadicand);
        }
        if r.is_zero() {
            return Ok((BigRational::zero(), BigInt::one()));
        }
        // √(p/q) = √(pq)/q
        let p = r.numer();
        let q = r.denom();
        let pq = p * q;
        let (square, free) = split_square_free(&pq)?;
        Ok((BigRational::new(square, q.clone()), free))
    }

    pub(crate) fn add(&self, other: &QuadSurd) -> Normalized {
        debug_assert_eq!(self.d, other.d);
        Self::normalize(&self.a + &other.a, &self.b + &other.b, self.d.clone())
    }

    pub(crate) fn sub(&self, other: &QuadSurd) -> Normalized {
        debug_assert_eq!(self.d, other.d);
        Self::normalize(&self.a - &other.a, &self.b - &other.b, self.d.clone())
    }

    pub(crate) fn mul(&self, other: &QuadSurd) -> Normalized {
        debug_assert_eq!(self.d, other.d);
        let d = BigRational::from_integer(self.d.clone());
        let a = &self.a * &other.a + &self.b * &other.b * d;
        let b = &self.a * &other.b + &other.a * &self.b;
        Self::normalize(a, b, self.d.clone())
    }

    pub(crate) fn add_rational(&self, r: &BigRational) -> QuadSurd {
        QuadSurd { a: &self.a + r, b: self.b.clone(), d: self.d.clone() }
    }

    pub(crate) fn scale(&self, r: &BigRational) -> Normalized {
        Self::normalize(&self.a * r, &self.b * r, self.d.clone())
    }

    pub(crate) fn neg(&self) -> QuadSurd {
        QuadSurd { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }

    /// Norm `a² − b²d`; never zero because `√d` is irrational.
    pub(crate) fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    pub(crate) fn recip(&self) -> QuadSurd {
        let n = self.norm();
        QuadSurd { a: &self.a / &n, b: -&self.b / &n, d: self.d.clone() }
    }

    /// Exact sign of `a + b√d`.
    pub(crate) fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // Opposite signs: the larger magnitude of a² and b²d wins.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => unreachable!("√d is irrational for square-free d > 1"),
        }
    }

    pub(crate) fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        a + b * libm::sqrt(d)
    }
}

/// Writes `n = s²·f` with `f` square-free; returns `(s, f)`.
fn split_square_free(n: &BigInt) -> Result<(BigInt, BigInt), ScalarError> {
    debug_assert!(n.sign() == Sign::Plus);
    let mut rest = n.to_u64().filter(|v| *v <= MAX_RADICAND).ok_or(ScalarError::RadicandTooLarge)?;
    let mut square = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut count = 0u32;
        while rest % p == 0 {
            rest /= p;
            count += 1;
        }
        square *= p.pow(count / 2);
        if count.is_odd() {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    free *= rest;
    Ok((BigInt::from(square), BigInt::from(free)))
}
