//! Certified enclosures for values that leave a single quadratic field.
//!
//! A [`RealNumber`] keeps the expression it was built from, so an enclosure
//! can be recomputed at any precision. Endpoints live on the dyadic grid
//! `2^-bits` and every operation rounds outward.

use alloc::sync::Arc;
use core::cmp::Ordering;
use core::sync::atomic::{AtomicU32, Ordering as AtomicOrdering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::quad::QuadSurd;

/// Default working precision in bits.
pub const DEFAULT_PRECISION_BITS: u32 = 256;
/// Refinement stops here and the comparison is reported as uncertified.
pub const MAX_PRECISION_BITS: u32 = 4096;

static WORKING_BITS: AtomicU32 = AtomicU32::new(DEFAULT_PRECISION_BITS);

/// Sets the starting precision for interval evaluation. Clamped to
/// `[2, MAX_PRECISION_BITS]`.
pub fn set_working_precision(bits: u32) {
    WORKING_BITS.store(bits.clamp(2, MAX_PRECISION_BITS), AtomicOrdering::Relaxed);
}

pub fn working_precision() -> u32 {
    WORKING_BITS.load(AtomicOrdering::Relaxed)
}

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Interval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign if the interval excludes zero.
    pub fn strict_sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().unwrap_or(f64::NAN)
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().unwrap_or(f64::NAN)
    }

    fn rounded(lo: BigRational, hi: BigRational, bits: u32) -> Self {
        Interval { lo: round_down(&lo, bits), hi: round_up(&hi, bits) }
    }

    fn add(&self, o: &Interval, bits: u32) -> Self {
        Self::rounded(&self.lo + &o.lo, &self.hi + &o.hi, bits)
    }

    fn sub(&self, o: &Interval, bits: u32) -> Self {
        Self::rounded(&self.lo - &o.hi, &self.hi - &o.lo, bits)
    }

    fn neg(&self) -> Self {
        Interval { lo: -&self.hi, hi: -&self.lo }
    }

    fn mul(&self, o: &Interval, bits: u32) -> Self {
        let products = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if *p < lo {
                lo = p.clone();
            }
            if *p > hi {
                hi = p.clone();
            }
        }
        Self::rounded(lo, hi, bits)
    }

    fn recip(&self, bits: u32) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        Some(Self::rounded(self.hi.recip(), self.lo.recip(), bits))
    }
}

fn grid(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

fn round_down(x: &BigRational, bits: u32) -> BigRational {
    let scale = grid(bits);
    let n = (x * BigRational::from_integer(scale.clone())).floor().to_integer();
    BigRational::new(n, scale)
}

fn round_up(x: &BigRational, bits: u32) -> BigRational {
    let scale = grid(bits);
    let n = (x * BigRational::from_integer(scale.clone())).ceil().to_integer();
    BigRational::new(n, scale)
}

/// Enclosure of `√d` for a positive integer `d`.
fn sqrt_enclosure(d: &BigInt, bits: u32) -> Interval {
    let scaled = d << (2 * bits as usize);
    let s = scaled.sqrt();
    let scale = grid(bits);
    let lo = BigRational::new(s.clone(), scale.clone());
    let hi = if &s * &s == scaled { lo.clone() } else { BigRational::new(s + 1, scale) };
    Interval { lo, hi }
}

/// Expression tree of an interval-valued real.
#[derive(Debug)]
pub(crate) enum Expr {
    Rational(BigRational),
    Quad(QuadSurd),
    Neg(Arc<Expr>),
    Add(Arc<Expr>, Arc<Expr>),
    Sub(Arc<Expr>, Arc<Expr>),
    Mul(Arc<Expr>, Arc<Expr>),
    Div(Arc<Expr>, Arc<Expr>),
}

impl Expr {
    /// `None` when a divisor's enclosure still contains zero at this precision.
    fn eval(&self, bits: u32) -> Option<Interval> {
        Some(match self {
            Expr::Rational(r) => Interval::rounded(r.clone(), r.clone(), bits),
            Expr::Quad(q) => {
                let root = sqrt_enclosure(&q.d, bits + 2);
                let b = Interval::point(q.b.clone());
                let a = Interval::point(q.a.clone());
                a.add(&b.mul(&root, bits + 2), bits)
            }
            Expr::Neg(x) => x.eval(bits)?.neg(),
            Expr::Add(x, y) => x.eval(bits)?.add(&y.eval(bits)?, bits),
            Expr::Sub(x, y) => x.eval(bits)?.sub(&y.eval(bits)?, bits),
            Expr::Mul(x, y) => x.eval(bits)?.mul(&y.eval(bits)?, bits),
            Expr::Div(x, y) => x.eval(bits)?.mul(&y.eval(bits)?.recip(bits)?, bits),
        })
    }
}

/// A real number known only through certified enclosures.
#[derive(Clone, Debug)]
pub struct RealNumber {
    pub(crate) expr: Arc<Expr>,
    enclosure: Interval,
}

impl RealNumber {
    pub(crate) fn from_expr(expr: Arc<Expr>) -> Option<Self> {
        let mut bits = working_precision();
        loop {
            if let Some(enclosure) = expr.eval(bits) {
                return Some(RealNumber { expr, enclosure });
            }
            if bits >= MAX_PRECISION_BITS {
                return None;
            }
            bits = (bits * 2).min(MAX_PRECISION_BITS);
        }
    }

    /// Enclosure at the working precision it was built with.
    pub fn enclosure(&self) -> &Interval {
        &self.enclosure
    }

    /// Recomputes the enclosure at `bits` of precision.
    pub fn enclosure_at(&self, bits: u32) -> Option<Interval> {
        self.expr.eval(bits)
    }

    /// Sign with precision doubling; `None` if still straddling zero at
    /// [`MAX_PRECISION_BITS`].
    pub fn certified_sign(&self) -> Option<Ordering> {
        if let Some(s) = self.enclosure.strict_sign() {
            return Some(s);
        }
        let mut bits = working_precision();
        while bits < MAX_PRECISION_BITS {
            bits = (bits * 2).min(MAX_PRECISION_BITS);
            if let Some(s) = self.expr.eval(bits).and_then(|iv| iv.strict_sign()) {
                return Some(s);
            }
        }
        None
    }

    pub fn to_f64(&self) -> f64 {
        let mid = (self.enclosure.lo() + self.enclosure.hi()) / BigRational::from_integer(2.into());
        mid.to_f64().unwrap_or(f64::NAN)
    }
}

pub(crate) fn enclose_rational(r: &BigRational, bits: u32) -> Interval {
    Expr::Rational(r.clone()).eval(bits).expect("no division")
}

pub(crate) fn enclose_quad(q: &QuadSurd, bits: u32) -> Interval {
    Expr::Quad(q.clone()).eval(bits).expect("no division")
}
