//! Scalar fields the engine is generic over.
//!
//! Everything that does linear algebra or carries coefficients (the enveloping
//! algebra, q-series, projector models) is written against [`Scalar`]. The
//! exact instantiations are the ones the library ships aliases for; the float
//! impls exist for quick numerical experiments and use a tolerance for zero.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field usable as a coefficient ring.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// `None` when `q` does not fit.
    fn from_big_rational(q: &BigRational) -> Option<Self> {
        Some(Self::from_ratio(q.numer().to_i64()?, q.denom().to_i64()?))
    }

    /// Exact fields answer `is_zero`; floats compare against a tolerance.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_big_rational(q: &BigRational) -> Option<Self> {
        Some(q.clone())
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
}

impl Scalar for Ratio<i128> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v as i128)
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_big_rational(q: &BigRational) -> Option<Self> {
        q.to_f64()
    }
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-9
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-4
    }
}

/// `re + im·i` over a real field `T`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

impl<T: Scalar> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: T) -> Self {
        Gaussian { re, im: T::zero() }
    }

    pub fn i() -> Self {
        Gaussian {
            re: T::zero(),
            im: T::one(),
        }
    }

    pub fn conj(&self) -> Self {
        Gaussian {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn norm_sqr(&self) -> T {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }
}

impl<T: Scalar> Add for Gaussian<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Gaussian::new(self.re + o.re, self.im + o.im)
    }
}

impl<T: Scalar> Sub for Gaussian<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Gaussian::new(self.re - o.re, self.im - o.im)
    }
}

impl<T: Scalar> Mul for Gaussian<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Gaussian::new(
            self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            self.re * o.im + self.im * o.re,
        )
    }
}

impl<T: Scalar> Div for Gaussian<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        let d = o.norm_sqr();
        let p = self * o.conj();
        Gaussian::new(p.re / d.clone(), p.im / d)
    }
}

// Gaussian rationals form a field but have no Euclidean remainder worth
// exposing; `Num` still requires one, so division is exact and the remainder
// is always zero.
impl<T: Scalar> Rem for Gaussian<T> {
    type Output = Self;
    fn rem(self, _o: Self) -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Neg for Gaussian<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian::new(-self.re, -self.im)
    }
}

impl<T: Scalar> Zero for Gaussian<T> {
    fn zero() -> Self {
        Gaussian::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<T: Scalar> One for Gaussian<T> {
    fn one() -> Self {
        Gaussian::new(T::one(), T::zero())
    }
}

impl<T: Scalar> Num for Gaussian<T> {
    type FromStrRadixErr = ();
    fn from_str_radix(_s: &str, _radix: u32) -> std::result::Result<Self, ()> {
        Err(())
    }
}

impl<T: Scalar> Scalar for Gaussian<T> {
    fn from_i64(v: i64) -> Self {
        Gaussian::real(T::from_i64(v))
    }
    fn from_big_rational(q: &BigRational) -> Option<Self> {
        T::from_big_rational(q).map(Gaussian::real)
    }
    fn is_negligible(&self) -> bool {
        self.re.is_negligible() && self.im.is_negligible()
    }
}

impl fmt::Display for Gaussian<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_gaussian(self))
    }
}

/// Canonical rational string: `"3"`, `"-7/2"`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let err = || Error::Parse {
        what: "rational",
        input: s.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

/// Canonical Gaussian string `"a+bi"` with both parts always present.
pub fn format_gaussian(z: &Gaussian<BigRational>) -> String {
    let im = &z.im;
    let sign = if im.is_negative() { "-" } else { "+" };
    format!(
        "{}{}{}i",
        format_rational(&z.re),
        sign,
        format_rational(&im.abs())
    )
}

pub fn parse_gaussian(s: &str) -> Result<Gaussian<BigRational>> {
    let err = || Error::Parse {
        what: "gaussian rational",
        input: s.to_string(),
    };
    let t = s.trim();
    let Some(body) = t.strip_suffix('i') else {
        return Ok(Gaussian::real(parse_rational(t)?));
    };
    // split at the last sign that is not the leading one
    let split = body
        .char_indices()
        .skip(1)
        .filter(|(_, c)| *c == '+' || *c == '-')
        .map(|(i, _)| i)
        .last();
    match split {
        Some(i) => {
            let re = parse_rational(&body[..i])?;
            let im_str = &body[i..];
            let im = match im_str {
                "+" => BigRational::one(),
                "-" => -BigRational::one(),
                s => parse_rational(s.trim_start_matches('+'))?,
            };
            Ok(Gaussian::new(re, im))
        }
        None => {
            let im = match body {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                s => parse_rational(s).map_err(|_| err())?,
            };
            Ok(Gaussian::new(BigRational::zero(), im))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::from_ratio(a, b)
    }

    #[test]
    fn gaussian_field_ops() {
        let a = Gaussian::new(q(1, 2), q(-3, 1));
        let b = Gaussian::new(q(2, 1), q(1, 3));
        assert_eq!((a.clone() * b.clone()) / b.clone(), a);
        assert_eq!(Gaussian::<BigRational>::i() * Gaussian::i(), -Gaussian::one());
    }

    #[test]
    fn gaussian_strings_round_trip() {
        for s in ["0+0i", "3+0i", "-1/2+7/3i", "0-6i", "5/4-1/8i"] {
            let z = parse_gaussian(s).unwrap();
            assert_eq!(format_gaussian(&z), s);
        }
        assert_eq!(parse_gaussian("-6i").unwrap(), Gaussian::new(q(0, 1), q(-6, 1)));
        assert_eq!(parse_gaussian("4").unwrap(), Gaussian::real(q(4, 1)));
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&q(6, 4)), "3/2");
        assert_eq!(format_rational(&q(-4, 2)), "-2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
