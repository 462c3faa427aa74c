//! Exact scalars: rationals, one quadratic extension at a time, and
//! certified intervals for everything else.

mod interval;
mod parse;
mod quad;

use alloc::sync::Arc;
use core::cmp::Ordering;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use interval::{
    set_working_precision, working_precision, Interval, RealNumber, DEFAULT_PRECISION_BITS,
    MAX_PRECISION_BITS,
};
pub use parse::ParseScalarError;
pub use quad::QuadSurd;

use interval::Expr;
use quad::Normalized;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot certify that the divisor is nonzero")]
    CannotCertifyNonzero,
    #[error("square root of a negative number")]
    NegativeRadicand,
    #[error("radicand too large for square-free factorization")]
    RadicandTooLarge,
    #[error("square root is only defined for rational arguments")]
    IrrationalRadicand,
}

/// Outcome of an exact comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExactOrdering {
    Less,
    Equal,
    Greater,
    /// Interval enclosures still overlap at the maximum precision.
    Uncertified,
}

impl ExactOrdering {
    pub fn certified(self) -> Option<Ordering> {
        match self {
            ExactOrdering::Less => Some(Ordering::Less),
            ExactOrdering::Equal => Some(Ordering::Equal),
            ExactOrdering::Greater => Some(Ordering::Greater),
            ExactOrdering::Uncertified => None,
        }
    }

    fn from_ordering(o: Ordering) -> Self {
        match o {
            Ordering::Less => ExactOrdering::Less,
            Ordering::Equal => ExactOrdering::Equal,
            Ordering::Greater => ExactOrdering::Greater,
        }
    }
}

/// A real number held exactly whenever possible.
#[derive(Clone, Debug)]
pub enum ExactScalar {
    Rational(BigRational),
    Quad(QuadSurd),
    Real(RealNumber),
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar::Rational(BigRational::one())
    }

    pub fn integer(n: i64) -> Self {
        ExactScalar::Rational(BigRational::from_integer(n.into()))
    }

    /// `numer / denom`. Panics if `denom == 0`.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExactScalar::Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_rational(r: BigRational) -> Self {
        ExactScalar::Rational(r)
    }

    /// `a + b√d`, normalizing `d` to its square-free part.
    pub fn quad(a: BigRational, b: BigRational, d: BigInt) -> Result<Self, ScalarError> {
        let root = ExactScalar::sqrt_of(&BigRational::from_integer(d))?;
        Ok(ExactScalar::Rational(a) + ExactScalar::Rational(b) * root)
    }

    /// Exact square root of a non-negative rational.
    pub fn sqrt_of(r: &BigRational) -> Result<Self, ScalarError> {
        let (s, d) = QuadSurd::sqrt_parts(r)?;
        if d.is_one() {
            return Ok(ExactScalar::Rational(s));
        }
        Ok(from_normalized(QuadSurd::normalize(BigRational::zero(), s, d)))
    }

    /// Square root of a rational-valued scalar.
    pub fn sqrt(&self) -> Result<Self, ScalarError> {
        match self {
            ExactScalar::Rational(r) => Self::sqrt_of(r),
            _ => Err(ScalarError::IrrationalRadicand),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_quad(&self) -> Option<&QuadSurd> {
        match self {
            ExactScalar::Quad(q) => Some(q),
            _ => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, ExactScalar::Real(_))
    }

    /// True only for a certified exact zero.
    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero(),
            // b != 0 and √d irrational
            ExactScalar::Quad(_) => false,
            // An enclosure can exclude zero but never prove it.
            ExactScalar::Real(_) => false,
        }
    }

    pub fn signum(&self) -> ExactOrdering {
        match self {
            ExactScalar::Rational(r) => ExactOrdering::from_ordering(r.cmp(&BigRational::zero())),
            ExactScalar::Quad(q) => ExactOrdering::from_ordering(q.signum()),
            ExactScalar::Real(x) => {
                x.certified_sign().map_or(ExactOrdering::Uncertified, ExactOrdering::from_ordering)
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == ExactOrdering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == ExactOrdering::Less
    }

    pub fn compare(&self, other: &Self) -> ExactOrdering {
        (self - other).signum()
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = ExactScalar::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        ExactScalar::one().try_div(self)
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        use ExactScalar::*;
        match (self, rhs) {
            (_, Rational(r)) if r.is_zero() => Err(ScalarError::DivisionByZero),
            (Rational(a), Rational(b)) => Ok(Rational(a / b)),
            (_, Rational(b)) => Ok(self * &Rational(b.recip())),
            (Rational(_) | Quad(_), Quad(q)) if self.same_field(rhs) => {
                Ok(self * &Quad(q.recip()))
            }
            (_, _) => {
                if rhs.signum() == ExactOrdering::Uncertified {
                    return Err(ScalarError::CannotCertifyNonzero);
                }
                RealNumber::from_expr(Arc::new(Expr::Div(self.to_expr(), rhs.to_expr())))
                    .map(Real)
                    .ok_or(ScalarError::CannotCertifyNonzero)
            }
        }
    }

    /// Enclosure at `bits` of precision; exact values are demoted on demand.
    pub fn enclosure(&self, bits: u32) -> Interval {
        match self {
            ExactScalar::Rational(r) => interval::enclose_rational(r, bits),
            ExactScalar::Quad(q) => interval::enclose_quad(q, bits),
            ExactScalar::Real(x) => x
                .enclosure_at(bits)
                .unwrap_or_else(|| x.enclosure().clone()),
        }
    }

    /// The exact value of a finite float.
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(ExactScalar::from_rational)
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactScalar::Rational(r) => r.to_f64().unwrap_or(f64::NAN),
            ExactScalar::Quad(q) => q.to_f64(),
            ExactScalar::Real(x) => x.to_f64(),
        }
    }

    fn same_field(&self, other: &Self) -> bool {
        match (self, other) {
            (ExactScalar::Quad(p), ExactScalar::Quad(q)) => p.d == q.d,
            (ExactScalar::Real(_), _) | (_, ExactScalar::Real(_)) => false,
            _ => true,
        }
    }

    fn to_expr(&self) -> Arc<Expr> {
        match self {
            ExactScalar::Rational(r) => Arc::new(Expr::Rational(r.clone())),
            ExactScalar::Quad(q) => Arc::new(Expr::Quad(q.clone())),
            ExactScalar::Real(x) => x.expr.clone(),
        }
    }

    fn demoted(expr: Expr) -> Self {
        // Only division can fail to enclose, and divisors are certified first.
        ExactScalar::Real(RealNumber::from_expr(Arc::new(expr)).expect("enclosure without division"))
    }
}

fn from_normalized(n: Normalized) -> ExactScalar {
    match n {
        Normalized::Rational(r) => ExactScalar::Rational(r),
        Normalized::Quad(q) => ExactScalar::Quad(q),
    }
}

fn add_ref(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    use ExactScalar::*;
    match (x, y) {
        (Rational(a), Rational(b)) => Rational(a + b),
        (Rational(r), Quad(q)) | (Quad(q), Rational(r)) => Quad(q.add_rational(r)),
        (Quad(p), Quad(q)) if p.d == q.d => from_normalized(p.add(q)),
        _ => ExactScalar::demoted(Expr::Add(x.to_expr(), y.to_expr())),
    }
}

fn sub_ref(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    use ExactScalar::*;
    match (x, y) {
        (Rational(a), Rational(b)) => Rational(a - b),
        (Quad(q), Rational(r)) => Quad(q.add_rational(&-r)),
        (Rational(r), Quad(q)) => Quad(q.neg().add_rational(r)),
        (Quad(p), Quad(q)) if p.d == q.d => from_normalized(p.sub(q)),
        _ => ExactScalar::demoted(Expr::Sub(x.to_expr(), y.to_expr())),
    }
}

fn mul_ref(x: &ExactScalar, y: &ExactScalar) -> ExactScalar {
    use ExactScalar::*;
    match (x, y) {
        (Rational(a), Rational(b)) => Rational(a * b),
        (Rational(r), Quad(q)) | (Quad(q), Rational(r)) => from_normalized(q.scale(r)),
        (Quad(p), Quad(q)) if p.d == q.d => from_normalized(p.mul(q)),
        _ => ExactScalar::demoted(Expr::Mul(x.to_expr(), y.to_expr())),
    }
}

fn neg_ref(x: &ExactScalar) -> ExactScalar {
    match x {
        ExactScalar::Rational(r) => ExactScalar::Rational(-r),
        ExactScalar::Quad(q) => ExactScalar::Quad(q.neg()),
        ExactScalar::Real(_) => ExactScalar::demoted(Expr::Neg(x.to_expr())),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $f:ident) => {
        impl $trait<&ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                $f(self, rhs)
            }
        }
        impl $trait<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                $f(&self, &rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                $f(&self, rhs)
            }
        }
        impl $trait<ExactScalar> for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl core::ops::Div<&ExactScalar> for &ExactScalar {
    type Output = ExactScalar;

    /// Panics on division by zero; use [`ExactScalar::try_div`] to handle it.
    fn div(self, rhs: &ExactScalar) -> ExactScalar {
        self.try_div(rhs).expect("division by zero")
    }
}

impl core::ops::Div<ExactScalar> for ExactScalar {
    type Output = ExactScalar;

    fn div(self, rhs: ExactScalar) -> ExactScalar {
        &self / &rhs
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        neg_ref(&self)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        neg_ref(self)
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a ExactScalar> for ExactScalar {
    fn sum<I: Iterator<Item = &'a ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |acc, x| acc + x)
    }
}

impl Product for ExactScalar {
    fn product<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::one(), |acc, x| acc * x)
    }
}

impl<'a> Product<&'a ExactScalar> for ExactScalar {
    fn product<I: Iterator<Item = &'a ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::one(), |acc, x| acc * x)
    }
}

/// Certified equality: interval values never compare equal.
impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExactScalar::Rational(a), ExactScalar::Rational(b)) => a == b,
            (ExactScalar::Quad(a), ExactScalar::Quad(b)) => a == b,
            _ => false,
        }
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::integer(n)
    }
}

impl From<BigRational> for ExactScalar {
    fn from(r: BigRational) -> Self {
        ExactScalar::Rational(r)
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        ExactScalar::zero()
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        parse::write_scalar(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn s(text: &str) -> ExactScalar {
        text.parse().unwrap()
    }

    #[test]
    fn rational_addition() {
        assert_eq!(s("1/2") + s("1/3"), s("5/6"));
    }

    #[test]
    fn sqrt5_squared_is_rational() {
        let r5 = ExactScalar::sqrt_of(&BigRational::from_integer(5.into())).unwrap();
        let sq = &r5 * &r5;
        assert_eq!(sq, ExactScalar::integer(5));
        assert!(sq.as_rational().is_some());
    }

    #[test]
    fn one_plus_sqrt5_enclosure() {
        let x = s("1+sqrt(5)");
        let iv = x.enclosure(DEFAULT_PRECISION_BITS);
        let lo_bound = BigRational::new(32360.into(), 10000.into());
        let hi_bound = BigRational::new(32361.into(), 10000.into());
        assert!(lo_bound < *iv.lo() && *iv.hi() < hi_bound);
        let tol = BigRational::new(1.into(), BigInt::from(10).pow(30));
        assert!(iv.width() <= tol);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(s("-sqrt(5)").compare(&s("-2")), ExactOrdering::Less);
        assert_eq!(s("20/3").compare(&s("6")), ExactOrdering::Greater);
        assert_eq!(s("0").compare(&s("0")), ExactOrdering::Equal);
    }

    #[test]
    fn division_errors_are_distinct() {
        assert_eq!(s("1").try_div(&s("0")), Err(ScalarError::DivisionByZero));
        // (√2 + √3)² − (5 + 2√6) is exactly zero but only known through intervals.
        let lhs = (s("sqrt(2)") + s("sqrt(3)")).square();
        let zero_in_disguise = lhs - s("5+2*sqrt(6)");
        assert!(!zero_in_disguise.is_exact());
        assert_eq!(zero_in_disguise.signum(), ExactOrdering::Uncertified);
        assert_eq!(s("1").try_div(&zero_in_disguise), Err(ScalarError::CannotCertifyNonzero));
    }

    #[test]
    fn mixed_radicals_demote() {
        let x = s("sqrt(2)") + s("sqrt(3)");
        assert!(matches!(x, ExactScalar::Real(_)));
        assert_eq!(x.compare(&s("3")), ExactOrdering::Greater);
        assert_eq!(x.compare(&s("16/5")), ExactOrdering::Less);
        let inv = x.recip().unwrap();
        assert_eq!(inv.compare(&s("3/10")), ExactOrdering::Greater);
    }

    #[test]
    fn quad_collapses_when_radical_cancels() {
        let x = s("1+sqrt(5)") - s("sqrt(5)");
        assert_eq!(x, ExactScalar::one());
        assert!(x.as_rational().is_some());
    }

    #[test]
    fn sqrt_of_perfect_square_is_rational() {
        assert_eq!(s("sqrt(9/4)"), s("3/2"));
        assert_eq!(s("sqrt(8)").to_string(), "2*sqrt(2)");
        assert_eq!(ExactScalar::sqrt_of(&BigRational::from_integer((-1).into())), Err(ScalarError::NegativeRadicand));
    }
}
