//! Scalar abstraction shared by every computation in the crate.
//!
//! All measures here are built from sums, products, quotients and order
//! comparisons, so they run unchanged over binary floats and over exact
//! rationals. Exact arithmetic is useful for reproducing textbook instances
//! without rounding residue.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

pub trait Scalar:
    Clone + Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// `true` when arithmetic is exact (no rounding).
    const EXACT: bool;

    /// Default tolerance for probability comparisons against a level.
    fn default_prob_eps() -> Self;

    /// Default tolerance for coordinate comparisons in the Pareto filter.
    fn default_coord_tol() -> Self;

    fn is_finite_value(&self) -> bool;

    /// Parses decimal text such as `0.2`, `-3`, or `1.5e-3`.
    ///
    /// Exact types keep the decimal value exactly (`0.2` becomes `1/5`).
    fn parse_decimal(text: &str) -> Option<Self>;

    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("usize is representable")
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    /// Shortest decimal text, suitable for JSON and LP output.
    ///
    /// Floats use the shortest round-trip representation. Exact values print
    /// as a terminating decimal when one exists, otherwise as the nearest
    /// `f64`.
    fn to_decimal_text(&self) -> String {
        format_f64(self.to_f64_lossy())
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn default_prob_eps() -> Self {
        1e-12
    }

    fn default_coord_tol() -> Self {
        1e-9
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }

    fn parse_decimal(text: &str) -> Option<Self> {
        parse_float_text(text)
    }
}

impl Scalar for f32 {
    const EXACT: bool = false;

    fn default_prob_eps() -> Self {
        1e-6
    }

    fn default_coord_tol() -> Self {
        1e-5
    }

    fn is_finite_value(&self) -> bool {
        self.is_finite()
    }

    fn parse_decimal(text: &str) -> Option<Self> {
        parse_float_text::<f64>(text).map(|v| v as f32)
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn default_prob_eps() -> Self {
        BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
    }

    fn default_coord_tol() -> Self {
        BigRational::zero()
    }

    fn is_finite_value(&self) -> bool {
        true
    }

    fn parse_decimal(text: &str) -> Option<Self> {
        parse_decimal_rational(text)
    }

    fn to_decimal_text(&self) -> String {
        exact_decimal_text(self).unwrap_or_else(|| format_f64(self.to_f64_lossy()))
    }
}

// Rust's float parser also accepts `inf`, `NaN` and friends; data files may not.
fn parse_float_text<F: std::str::FromStr>(text: &str) -> Option<F> {
    let t = text.trim();
    if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit() || b".+-eE".contains(&b)) {
        return None;
    }
    t.parse().ok()
}

fn parse_decimal_rational(text: &str) -> Option<BigRational> {
    let t = text.trim();
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = match digits.find('.') {
        Some(pos) => (&digits[..pos], &digits[pos + 1..]),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all_digits = format!("{int_part}{frac_part}");
    let numer = BigInt::from_str_radix(&all_digits, 10).ok()?;
    let scale = exponent - i32::try_from(frac_part.len()).ok()?;
    let ten = BigInt::from(10u32);
    let mut value = if scale >= 0 {
        BigRational::from_integer(numer * ten.pow(scale.unsigned_abs()))
    } else {
        BigRational::new(numer, ten.pow(scale.unsigned_abs()))
    };
    if negative {
        value = -value;
    }
    Some(value)
}

/// Larger of two values; the first wins ties.
pub fn max_of<T: Scalar>(a: &T, b: &T) -> T {
    if b > a {
        b.clone()
    } else {
        a.clone()
    }
}

/// `max(0, v)`.
pub fn positive_part<T: Scalar>(v: T) -> T {
    if v > T::zero() {
        v
    } else {
        T::zero()
    }
}

/// Sum of a sequence of owned scalars.
pub fn sum<T: Scalar, I: IntoIterator<Item = T>>(items: I) -> T {
    items.into_iter().fold(T::zero(), |acc, v| acc + v)
}

pub fn format_f64(v: f64) -> String {
    if v == 0.0 {
        // normalizes -0
        return "0".to_string();
    }
    let text = format!("{v}");
    if text.len() > 24 {
        format!("{v:e}")
    } else {
        text
    }
}

fn exact_decimal_text(r: &BigRational) -> Option<String> {
    let mut denom = r.denom().clone();
    let (two, five) = (BigInt::from(2u32), BigInt::from(5u32));
    let mut twos = 0u32;
    let mut fives = 0u32;
    while (&denom % &two).is_zero() {
        denom /= &two;
        twos += 1;
    }
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return None;
    }
    let places = twos.max(fives);
    let scaled = r * BigRational::from_integer(BigInt::from(10u32).pow(places));
    let digits = scaled.to_integer();
    let negative = digits.is_negative();
    let mut text = digits.abs().to_string();
    if places > 0 {
        let places = places as usize;
        if text.len() <= places {
            text = format!("{}{}", "0".repeat(places - text.len() + 1), text);
        }
        text.insert(text.len() - places, '.');
    }
    if negative {
        text.insert(0, '-');
    }
    Some(text)
}
