//! Exact rationals and rational-endpoint intervals.
//!
//! Rationals are `num_rational::BigRational`, which already keeps the
//! canonical form (reduced, positive denominator, zero as `0/1`). Intervals
//! carry exact endpoints, so every operation is outward-sound without any
//! rounding mode; precision is controlled explicitly where square roots are
//! taken.

use alloc::format;
use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("negative radicand")]
    NegativeRadicand,
    #[error("precision must be positive")]
    NonPositiveEps,
    #[error("interval endpoints out of order")]
    InvertedInterval,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rat_arith(a: &BigRational, b: &BigRational, op: ArithOp) -> Result<BigRational, ExactError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => {
            if b.is_zero() {
                return Err(ExactError::DivisionByZero);
            }
            a / b
        }
    })
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `10^-k` as an exact rational.
pub fn ten_pow_neg(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize))
}

/// Parses `p/q`, integers, decimals (`0.4402418528`) and scientific
/// notation (`1e-10`, `2.5E3`).
pub fn parse_rational(s: &str) -> Result<BigRational, ExactError> {
    let err = || ExactError::Parse(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let num = parse_decimal(p.trim()).ok_or_else(err)?;
        let den = parse_decimal(q.trim()).ok_or_else(err)?;
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        return Ok(num / den);
    }
    parse_decimal(t).ok_or_else(err)
}

fn parse_decimal(t: &str) -> Option<BigRational> {
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.as_bytes().first()? {
        b'-' => (true, &mantissa[1..]),
        b'+' => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() {
        return None;
    }
    if !ip.bytes().chain(fp.bytes()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut digits = String::with_capacity(ip.len() + fp.len());
    digits.push_str(ip);
    digits.push_str(fp);
    let n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().ok()? };
    let scale = exponent - fp.len() as i32;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(n);
    if scale >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -r } else { r })
}

/// Exact `p/q` form (`p` alone for integers).
pub fn format_exact(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal rendering rounded half away from zero to `digits` places.
pub fn format_decimal(x: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let r = (scaled + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    let (ip, fp) = r.div_rem(&scale);
    let sign = if x.is_negative() && !r.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{ip}");
    }
    let mut frac = fp.to_string();
    while frac.len() < digits {
        frac.insert(0, '0');
    }
    format!("{sign}{ip}.{frac}")
}

/// Nearest-ish `f64`, for diagnostics only.
pub fn to_f64(x: &BigRational) -> f64 {
    format_decimal(x, 20).parse().unwrap_or(f64::NAN)
}

/// Floor of the square root of a nonnegative integer, by bisection.
pub fn isqrt_floor(n: &BigInt) -> BigInt {
    debug_assert!(!n.is_negative());
    if n.is_zero() {
        return BigInt::zero();
    }
    // 2^(ceil(bits/2)) squared exceeds n
    let mut lo = BigInt::zero();
    let mut hi = BigInt::one() << ((n.bits() as usize).div_ceil(2));
    // invariant: lo^2 <= n < hi^2
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if &mid * &mid <= *n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn exact_sqrt_int(n: &BigInt) -> Option<BigInt> {
    let s = isqrt_floor(n);
    (&s * &s == *n).then_some(s)
}

/// Square root enclosure of width `<= eps`; degenerate when `x` is the square
/// of a rational.
pub fn sqrt_enclosure(x: &BigRational, eps: &BigRational) -> Result<RationalInterval, ExactError> {
    if x.is_negative() {
        return Err(ExactError::NegativeRadicand);
    }
    if !eps.is_positive() {
        return Err(ExactError::NonPositiveEps);
    }
    if let (Some(p), Some(q)) = (exact_sqrt_int(x.numer()), exact_sqrt_int(x.denom())) {
        return Ok(RationalInterval::point(BigRational::new(p, q)));
    }
    // smallest k with 2^-k <= eps
    let mut k = 0usize;
    let mut step = BigRational::one();
    while step > *eps {
        step /= BigRational::from_integer(BigInt::from(2));
        k += 1;
    }
    let scaled = (x.numer() << (2 * k)).div_floor(x.denom());
    let a = isqrt_floor(&scaled);
    let den = BigInt::one() << k;
    let lo = BigRational::new(a.clone(), den.clone());
    let hi = BigRational::new(a + BigInt::one(), den);
    Ok(RationalInterval { lo, hi })
}

/// Enclosure of `{sqrt(t) : t in x}`.
pub fn sqrt_interval(x: &RationalInterval, eps: &BigRational) -> Result<RationalInterval, ExactError> {
    if x.lo.is_negative() {
        return Err(ExactError::NegativeRadicand);
    }
    let lo = sqrt_enclosure(&x.lo, eps)?.lo;
    let hi = sqrt_enclosure(&x.hi, eps)?.hi;
    Ok(RationalInterval { lo, hi })
}

/// Closed interval `[lo, hi]` with exact rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self, ExactError> {
        if lo > hi {
            return Err(ExactError::InvertedInterval);
        }
        Ok(RationalInterval { lo, hi })
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero())
    }

    /// Interval `[c - r, c + r]`.
    pub fn around(c: &BigRational, r: &BigRational) -> Self {
        let r = r.abs();
        RationalInterval { lo: c - &r, hi: c + &r }
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

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    pub fn contains_interval(&self, other: &RationalInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Sign of every element, if it is uniform and nonzero.
    pub fn strict_sign(&self) -> Option<Ordering> {
        if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.hi.is_negative() {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    pub fn is_disjoint(&self, other: &RationalInterval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// Largest absolute value of an element.
    pub fn magnitude(&self) -> BigRational {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    /// Distance from `x` to the interval (zero if contained).
    pub fn distance_to(&self, x: &BigRational) -> BigRational {
        if *x < self.lo {
            &self.lo - x
        } else if *x > self.hi {
            x - &self.hi
        } else {
            BigRational::zero()
        }
    }

    pub fn hull(&self, other: &RationalInterval) -> RationalInterval {
        RationalInterval {
            lo: if self.lo < other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi > other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn neg(&self) -> RationalInterval {
        RationalInterval { lo: -&self.hi, hi: -&self.lo }
    }

    pub fn add(&self, other: &RationalInterval) -> RationalInterval {
        RationalInterval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &RationalInterval) -> RationalInterval {
        RationalInterval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn mul(&self, other: &RationalInterval) -> RationalInterval {
        let cands = [&self.lo * &other.lo, &self.lo * &other.hi, &self.hi * &other.lo, &self.hi * &other.hi];
        min_max(cands)
    }

    pub fn scale(&self, c: &BigRational) -> RationalInterval {
        let a = &self.lo * c;
        let b = &self.hi * c;
        if a <= b {
            RationalInterval { lo: a, hi: b }
        } else {
            RationalInterval { lo: b, hi: a }
        }
    }

    pub fn add_scalar(&self, c: &BigRational) -> RationalInterval {
        RationalInterval { lo: &self.lo + c, hi: &self.hi + c }
    }

    pub fn recip(&self) -> Result<RationalInterval, ExactError> {
        if self.contains_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RationalInterval { lo: self.hi.recip(), hi: self.lo.recip() })
    }

    pub fn div(&self, other: &RationalInterval) -> Result<RationalInterval, ExactError> {
        Ok(self.mul(&other.recip()?))
    }

    /// Integer power; even powers use the tight envelope.
    pub fn pow(&self, e: u32) -> RationalInterval {
        if e == 0 {
            return Self::point(BigRational::one());
        }
        let a = num_traits::pow(self.lo.clone(), e as usize);
        let b = num_traits::pow(self.hi.clone(), e as usize);
        if e % 2 == 1 {
            return RationalInterval { lo: a, hi: b };
        }
        if self.contains_zero() {
            RationalInterval { lo: BigRational::zero(), hi: if a > b { a } else { b } }
        } else if a <= b {
            RationalInterval { lo: a, hi: b }
        } else {
            RationalInterval { lo: b, hi: a }
        }
    }
}

fn min_max(vals: [BigRational; 4]) -> RationalInterval {
    let mut lo = vals[0].clone();
    let mut hi = vals[0].clone();
    for v in &vals[1..] {
        if *v < lo {
            lo = v.clone();
        }
        if *v > hi {
            hi = v.clone();
        }
    }
    RationalInterval { lo, hi }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", format_exact(&self.lo), format_exact(&self.hi))
    }
}

pub fn interval_arith(a: &RationalInterval, b: &RationalInterval, op: ArithOp) -> Result<RationalInterval, ExactError> {
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn canonical_arithmetic() {
        assert_eq!(rat_arith(&rat(1, 3), &rat(1, 6), ArithOp::Add).unwrap(), rat(1, 2));
        let half = rat(2, 4);
        assert_eq!(half.numer(), &BigInt::from(1));
        assert_eq!(half.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7).denom(), &BigInt::one());
        assert_eq!(rat_arith(&rat(1, 2), &rat(0, 1), ArithOp::Div), Err(ExactError::DivisionByZero));
        assert_eq!(rat(3, -6), rat(-1, 2));
    }

    #[test]
    fn parsing_and_printing() {
        assert_eq!(q("0.4402418528"), BigRational::new(BigInt::from(4402418528u64), num_traits::pow(BigInt::from(10), 10)));
        assert_eq!(q("-3/6"), rat(-1, 2));
        assert_eq!(q("1e-10"), ten_pow_neg(10));
        assert_eq!(q("2.5E3"), int(2500));
        assert_eq!(q(".5"), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_exact(&rat(-6, 4)), "-3/2");
        assert_eq!(format_exact(&int(7)), "7");
        assert_eq!(format_decimal(&rat(2, 3), 4), "0.6667");
        assert_eq!(format_decimal(&rat(-1, 8), 2), "-0.13");
        assert_eq!(format_decimal(&rat(-1, 1000), 2), "0.00");
        assert_eq!(q(&format_exact(&rat(-355, 113))), rat(-355, 113));
    }

    #[test]
    fn interval_basics() {
        let a = RationalInterval::new(int(1), int(2)).unwrap();
        let b = RationalInterval::new(int(-1), int(1)).unwrap();
        assert_eq!(a.mul(&b), RationalInterval::new(int(-2), int(2)).unwrap());
        assert_eq!(RationalInterval::zero().add(&a), a);
        assert_eq!(b.pow(2), RationalInterval::new(int(0), int(1)).unwrap());
        assert_eq!(b.neg().pow(3), RationalInterval::new(int(-1), int(1)).unwrap());
        assert!(b.recip().is_err());
        assert_eq!(a.recip().unwrap(), RationalInterval::new(rat(1, 2), int(1)).unwrap());
        assert!(RationalInterval::new(int(2), int(1)).is_err());
        assert_eq!(a.strict_sign(), Some(Ordering::Greater));
        assert_eq!(b.strict_sign(), None);
    }

    #[test]
    fn sqrt_cases() {
        assert_eq!(sqrt_enclosure(&int(4), &rat(1, 10)).unwrap(), RationalInterval::point(int(2)));
        assert_eq!(sqrt_enclosure(&rat(9, 49), &rat(1, 10)).unwrap(), RationalInterval::point(rat(3, 7)));
        let eps = ten_pow_neg(6);
        let s2 = sqrt_enclosure(&int(2), &eps).unwrap();
        assert!(s2.width() <= eps);
        assert!(s2.lo() * s2.lo() <= int(2) && int(2) <= s2.hi() * s2.hi());
        assert!(s2.contains(&q("1.414213")) || s2.contains(&q("1.414214")));
        assert_eq!(sqrt_enclosure(&int(-1), &eps), Err(ExactError::NegativeRadicand));
        assert_eq!(sqrt_enclosure(&int(2), &int(0)), Err(ExactError::NonPositiveEps));
        assert_eq!(isqrt_floor(&BigInt::from(99)), BigInt::from(9));
        assert_eq!(isqrt_floor(&BigInt::from(100)), BigInt::from(10));
    }

    #[test]
    fn sqrt_of_interval_brackets_endpoint_roots() {
        let x = RationalInterval::new(q("1.3"), q("1.31")).unwrap();
        let eps = ten_pow_neg(6);
        let s = sqrt_interval(&x, &eps).unwrap();
        // endpoint oracle: independent bisection on y^2 - t
        for t in [q("1.3"), q("1.31")] {
            let (mut lo, mut hi) = (int(1), int(2));
            for _ in 0..40 {
                let m = (&lo + &hi) / int(2);
                if &m * &m <= t {
                    lo = m;
                } else {
                    hi = m;
                }
            }
            assert!(s.lo() <= &hi && &lo <= s.hi());
        }
        assert!(s.lo() * s.lo() <= q("1.3"));
        assert!(s.hi() * s.hi() >= q("1.31"));
        assert!(s.width() <= eps.clone() + eps + q("0.0044"));
    }
}
