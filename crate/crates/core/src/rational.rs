//! Exact rational numbers with an inline fast path.
//!
//! Values whose reduced numerator and denominator fit in `i64` are stored
//! inline and combined through `i128` intermediates; anything larger falls
//! back to a heap-allocated [`BigRational`]. The representation is canonical,
//! so structural equality and hashing coincide with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::scalar::{self, Scalar};

#[derive(Clone)]
pub struct Rational(Repr);

#[derive(Clone)]
enum Repr {
    /// Reduced, denominator > 0.
    Small(i64, i64),
    /// Never representable as `Small`.
    Big(Box<BigRational>),
}

impl Rational {
    pub fn from_integer(value: i64) -> Self {
        Rational(Repr::Small(value, 1))
    }

    /// `numer / denom`; panics when `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        Self::from_i128(numer as i128, denom as i128)
    }

    fn from_i128(numer: i128, denom: i128) -> Self {
        assert!(denom != 0, "rational with zero denominator");
        let (mut n, mut d) = if denom < 0 { (-numer, -denom) } else { (numer, denom) };
        if d != 1 {
            let g = n.gcd(&d);
            if g > 1 {
                n /= g;
                d /= g;
            }
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))),
        }
    }

    pub fn from_big(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(Box::new(value))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    fn big_op(&self, other: &Self, op: impl FnOnce(BigRational, BigRational) -> BigRational) -> Self {
        Self::from_big(op(self.to_big(), other.to_big()))
    }

    fn add_ref(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => Self::from_i128(*a as i128 + *b as i128, 1),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a + c, b)
                } else {
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => self.big_op(other, |x, y| x + y),
        }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, 1), Repr::Small(b, 1)) => Self::from_i128(*a as i128 - *b as i128, 1),
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Self::from_i128(a - c, b)
                } else {
                    Self::from_i128(a * d - c * b, b * d)
                }
            }
            _ => self.big_op(other, |x, y| x - y),
        }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => self.big_op(other, |x, y| x * y),
        }
    }

    fn div_ref(&self, other: &Self) -> Self {
        assert!(!other.is_zero(), "division by zero rational");
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => self.big_op(other, |x, y| x / y),
        }
    }

    fn cmp_ref(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }

    fn signum_i8(&self) -> i8 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i8,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(b) => b.hash(state),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_ref(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_ref(other)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$imp(&rhs)
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                self.$imp(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Div, div, div_ref);

impl Rem for Rational {
    type Output = Rational;
    fn rem(self, rhs: Rational) -> Rational {
        let quotient = (&self / &rhs).to_big().trunc();
        &self - &(&rhs * &Rational::from_big(quotient))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) => Self::from_i128(-(n as i128), d as i128),
            Repr::Big(b) => Self::from_big(-*b),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
}

impl Num for Rational {
    type FromStrRadixErr = ParseRationalError;

    fn from_str_radix(text: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        if radix != 10 {
            return Err(ParseRationalError);
        }
        text.parse()
    }
}

impl Signed for Rational {
    fn abs(&self) -> Self {
        if self.signum_i8() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn abs_sub(&self, other: &Self) -> Self {
        if self <= other {
            Self::zero()
        } else {
            self - other
        }
    }

    fn signum(&self) -> Self {
        Self::from_integer(self.signum_i8() as i64)
    }

    fn is_positive(&self) -> bool {
        self.signum_i8() > 0
    }

    fn is_negative(&self) -> bool {
        self.signum_i8() < 0
    }
}

impl FromPrimitive for Rational {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Self::from_integer(n))
    }

    fn from_u64(n: u64) -> Option<Self> {
        Some(Self::from_i128(n as i128, 1))
    }

    fn from_f64(n: f64) -> Option<Self> {
        BigRational::from_float(n).map(Self::from_big)
    }
}

impl ToPrimitive for Rational {
    fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, d) => Some(n / d),
            Repr::Big(b) => b.to_integer().to_i64(),
        }
    }

    fn to_u64(&self) -> Option<u64> {
        self.to_i64().and_then(|v| u64::try_from(v).ok())
    }

    fn to_f64(&self) -> Option<f64> {
        Some(match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(b) => scalar::big_to_f64(b),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError;

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("invalid rational literal")
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        scalar::parse_big_rational(text).map(Self::from_big).ok_or(ParseRationalError)
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn parse_decimal(text: &str) -> Option<Self> {
        text.parse().ok()
    }

    fn exact_decimal(&self) -> Option<String> {
        match &self.0 {
            Repr::Small(n, 1) => Some(n.to_string()),
            _ => scalar::big_exact_decimal(&self.to_big()),
        }
    }

    fn exact_text(&self) -> String {
        scalar::big_exact_text(&self.to_big())
    }

    fn sqrt_bounds(&self, bits: u32) -> (Self, Self) {
        let (lo, hi) = scalar::big_sqrt_bounds(&self.to_big(), bits);
        (Self::from_big(lo), Self::from_big(hi))
    }

    fn from_int(value: i64) -> Self {
        Self::from_integer(value)
    }

    fn half() -> Self {
        Rational(Repr::Small(1, 2))
    }

    fn total_cmp(&self, other: &Self) -> Ordering {
        self.cmp_ref(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn canonical_form() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(-3, -6), r(1, 2));
        assert_eq!(r(3, -6), r(-1, 2));
        assert_eq!(r(0, 5), Rational::zero());
        assert_eq!(format!("{}", r(6, 4)), "3/2");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_integer(i64::MAX) + Rational::from_integer(i64::MAX);
        assert!(matches!(big.0, Repr::Big(_)));
        let back = big.clone() - Rational::from_integer(i64::MAX);
        assert!(matches!(back.0, Repr::Small(..)));
        assert_eq!(back, Rational::from_integer(i64::MAX));
        assert_eq!(-Rational::from_integer(i64::MIN), big.clone() - Rational::from_integer(i64::MAX) + Rational::one());
    }

    #[test]
    fn remainder_truncates_toward_zero() {
        assert_eq!(r(7, 2) % r(1, 1), r(1, 2));
        assert_eq!(r(-7, 2) % r(1, 1), r(-1, 2));
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-1_000_000_000_000i64..1_000_000_000_000, 1i64..1_000_000_000_000).prop_map(|(n, d)| r(n, d))
    }

    proptest! {
        #[test]
        fn agrees_with_big_rational(a in small(), b in small()) {
            let (x, y) = (a.to_big(), b.to_big());
            prop_assert_eq!((a.clone() + b.clone()).to_big(), &x + &y);
            prop_assert_eq!((a.clone() - b.clone()).to_big(), &x - &y);
            prop_assert_eq!((a.clone() * b.clone()).to_big(), &x * &y);
            if !b.is_zero() {
                prop_assert_eq!((a.clone() / b.clone()).to_big(), &x / &y);
            }
            prop_assert_eq!(a.cmp(&b), x.cmp(&y));
        }
    }
}
