//! Scalar abstraction shared by every geometric routine.
//!
//! The algorithms are written once over [`Scalar`]. Exactness is a property of
//! the instantiation: [`crate::Rational`] and [`BigRational`] give exact
//! predicates and constructions, `f64`/`f32` give the same code paths with
//! ordinary floating-point rounding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

/// Number type usable as a planar coordinate.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + fmt::Debug + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Whether arithmetic on this type is exact.
    const EXACT: bool;

    /// Parses an optionally signed decimal (`-12.5`, `3e-2`) or a fraction `p/q`.
    fn parse_decimal(text: &str) -> Option<Self>;

    /// Exact decimal rendering, or `None` if the value has no terminating
    /// decimal expansion.
    fn exact_decimal(&self) -> Option<String>;

    /// Lossless text form: a terminating decimal when one exists, `p/q`
    /// otherwise. Accepted back by [`Scalar::parse_decimal`].
    fn exact_text(&self) -> String;

    /// Bounds `lo <= sqrt(self) <= hi` for a nonnegative value, tightened with
    /// `bits` of relative precision where the type allows it.
    fn sqrt_bounds(&self, bits: u32) -> (Self, Self);

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_f64_lossy(value: f64) -> Self {
        Self::from_f64(value).unwrap_or_else(Self::zero)
    }

    fn from_int(value: i64) -> Self {
        Self::from_i64(value).expect("integer fits every scalar")
    }

    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }

    /// Total order used by sorting; incomparable floats sort as equal.
    fn total_cmp(&self, other: &Self) -> Ordering {
        self.partial_cmp(other).unwrap_or(Ordering::Equal)
    }
}

/// Human-readable rendering for reports: exact decimal when it terminates,
/// otherwise 12 significant digits followed by `~`.
pub fn display<T: Scalar>(value: &T) -> String {
    match value.exact_decimal() {
        Some(text) => text,
        None => {
            let approx = value.to_f64_lossy();
            format!("{}~", significant(approx, 12))
        }
    }
}

fn significant(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value}");
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let text = format!("{value:.decimals$}");
    if text.contains('.') {
        text.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        text
    }
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn parse_decimal(text: &str) -> Option<Self> {
                let text = text.trim();
                if let Some((num, den)) = text.split_once('/') {
                    let num: $t = num.trim().parse().ok()?;
                    let den: $t = den.trim().parse().ok()?;
                    return (den != 0.0).then(|| num / den);
                }
                text.parse().ok().filter(|v: &$t| v.is_finite())
            }

            fn exact_decimal(&self) -> Option<String> {
                Some(format!("{}", self))
            }

            fn exact_text(&self) -> String {
                format!("{}", self)
            }

            fn sqrt_bounds(&self, _bits: u32) -> (Self, Self) {
                let root = self.max(0.0).sqrt();
                let slack = root * <$t>::EPSILON * 2.0 + <$t>::MIN_POSITIVE;
                ((root - slack).max(0.0), root + slack)
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn parse_decimal(text: &str) -> Option<Self> {
        parse_big_rational(text)
    }

    fn exact_decimal(&self) -> Option<String> {
        big_exact_decimal(self)
    }

    fn exact_text(&self) -> String {
        big_exact_text(self)
    }

    fn sqrt_bounds(&self, bits: u32) -> (Self, Self) {
        big_sqrt_bounds(self, bits)
    }

    fn to_f64_lossy(&self) -> f64 {
        big_to_f64(self)
    }

    fn from_f64_lossy(value: f64) -> Self {
        BigRational::from_float(value).unwrap_or_else(BigRational::zero)
    }
}

/// Parses decimals, scientific notation and `p/q` fractions exactly.
pub(crate) fn parse_big_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_big_rational(num)?;
        let den = parse_big_rational(den)?;
        if den.is_zero() {
            return None;
        }
        return Some(num / den);
    }
    let (negative, body) = match text.as_bytes()[0] {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(pos) => (&body[..pos], body[pos + 1..].parse::<i32>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

pub(crate) fn big_exact_decimal(value: &BigRational) -> Option<String> {
    let denom = value.denom();
    let mut rest = denom.clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let mut twos = 0usize;
    let mut fives = 0usize;
    while rest.is_even() {
        rest /= &two;
        twos += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return None;
    }
    let places = twos.max(fives);
    let scaled = value * BigRational::from_integer(num_traits::pow(BigInt::from(10u32), places));
    let digits = scaled.to_integer();
    if places == 0 {
        return Some(digits.to_string());
    }
    let negative = digits.sign() == Sign::Minus;
    let mut text = digits.abs().to_string();
    if text.len() <= places {
        text = format!("{}{}", "0".repeat(places + 1 - text.len()), text);
    }
    let split = text.len() - places;
    let rendered = format!("{}{}.{}", if negative { "-" } else { "" }, &text[..split], &text[split..]);
    Some(rendered)
}

pub(crate) fn big_exact_text(value: &BigRational) -> String {
    big_exact_decimal(value).unwrap_or_else(|| format!("{}/{}", value.numer(), value.denom()))
}

pub(crate) fn big_to_f64(value: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (value.numer().to_f64(), value.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    value.to_f64().unwrap_or(f64::NAN)
}

/// Integer square-root bracketing: with `s = floor(sqrt(n * d * 4^bits))`,
/// `s / (d * 2^bits) <= sqrt(n/d) <= (s + 1) / (d * 2^bits)`.
pub(crate) fn big_sqrt_bounds(value: &BigRational, bits: u32) -> (BigRational, BigRational) {
    if !value.is_positive() {
        return (BigRational::zero(), BigRational::zero());
    }
    let scale = BigInt::one() << bits;
    let radicand = value.numer() * value.denom() * &scale * &scale;
    let root = radicand.sqrt();
    let denom = value.denom() * &scale;
    let lo = BigRational::new(root.clone(), denom.clone());
    let hi = if &root * &root == radicand { lo.clone() } else { BigRational::new(root + 1, denom) };
    (lo, hi)
}

/// Compares `sum(sqrt(a_i))` with `sum(sqrt(b_i))` for nonnegative terms.
///
/// A floating-point estimate with an explicit error bound settles most
/// queries; the rest are refined with exact interval bounds until the sums
/// separate. Values indistinguishable at 1024 bits compare equal.
pub fn compare_root_sums<T: Scalar>(a: &[T], b: &[T]) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let approx = |terms: &[T]| -> (f64, f64) {
        terms.iter().fold((0.0, 0.0), |(sum, mag), t| {
            let r = t.to_f64_lossy().max(0.0).sqrt();
            (sum + r, mag + r)
        })
    };
    let (sa, ma) = approx(a);
    let (sb, mb) = approx(b);
    if sa.is_finite() && sb.is_finite() {
        let n = (a.len() + b.len()) as f64 + 4.0;
        let bound = (ma + mb) * n * 8.0 * f64::EPSILON + 1e-300;
        if sa - sb > bound {
            return Ordering::Greater;
        }
        if sb - sa > bound {
            return Ordering::Less;
        }
    }
    if !T::EXACT {
        return Ordering::Equal;
    }
    let mut bits = 64;
    while bits <= 1024 {
        let bound = |terms: &[T]| {
            terms.iter().fold((T::zero(), T::zero()), |(lo, hi), t| {
                let (l, h) = t.sqrt_bounds(bits);
                (lo + l, hi + h)
            })
        };
        let (alo, ahi) = bound(a);
        let (blo, bhi) = bound(b);
        if alo > bhi {
            return Ordering::Greater;
        }
        if blo > ahi {
            return Ordering::Less;
        }
        bits *= 2;
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> BigRational {
        parse_big_rational(text).unwrap()
    }

    #[test]
    fn parses_decimals_exactly() {
        assert_eq!(q("0.1"), BigRational::new(1.into(), 10.into()));
        assert_eq!(q("-2.50"), BigRational::new((-5).into(), 2.into()));
        assert_eq!(q("3e2"), BigRational::from_integer(300.into()));
        assert_eq!(q("1.5e-1"), BigRational::new(3.into(), 20.into()));
        assert_eq!(q("1/3"), BigRational::new(1.into(), 3.into()));
        assert_eq!(q(".5"), BigRational::new(1.into(), 2.into()));
        assert!(parse_big_rational("abc").is_none());
        assert!(parse_big_rational("1/0").is_none());
        assert!(parse_big_rational("").is_none());
        assert!(parse_big_rational("-").is_none());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(big_exact_decimal(&q("0.05")).as_deref(), Some("0.05"));
        assert_eq!(big_exact_decimal(&q("-0.05")).as_deref(), Some("-0.05"));
        assert_eq!(big_exact_decimal(&q("12")).as_deref(), Some("12"));
        assert_eq!(big_exact_decimal(&q("1/3")), None);
        assert_eq!(display(&q("1/3")), "0.333333333333~");
        assert_eq!(display(&q("200/3")), "66.6666666667~");
        assert_eq!(big_exact_text(&q("2/3")), "2/3");
    }

    #[test]
    fn sqrt_bounds_bracket() {
        let (lo, hi) = big_sqrt_bounds(&q("2"), 64);
        assert!(&lo * &lo <= q("2") && &hi * &hi >= q("2"));
        let (lo, hi) = big_sqrt_bounds(&q("9/4"), 8);
        assert_eq!(lo, q("3/2"));
        assert_eq!(hi, q("3/2"));
    }

    #[test]
    fn root_sums() {
        // sqrt(2) + sqrt(8) = sqrt(18)
        assert_eq!(compare_root_sums(&[q("2"), q("8")], &[q("18")]), Ordering::Equal);
        assert_eq!(compare_root_sums(&[q("2"), q("3")], &[q("10")]), Ordering::Less);
        assert_eq!(compare_root_sums(&[q("1"), q("1")], &[q("3")]), Ordering::Greater);
        assert_eq!(compare_root_sums::<BigRational>(&[], &[]), Ordering::Equal);
    }
}
