//! Arbitrary precision rational scalars.
//!
//! Every decision made by this crate is exact, so all coefficient and
//! witness arithmetic runs over `Rational`, a thin wrapper around
//! `num_rational::BigRational`. The wrapper fixes the conventions used
//! throughout: canonical reduced form, `"p"` / `"p/q"` string form for
//! parsing and serialization, and integer powers with 0^0 = 1.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Exact rational number, always in reduced form with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`. Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Sign as an integer: -1, 0 or +1.
    pub fn signum(&self) -> i32 {
        if self.0.is_positive() {
            1
        } else if self.0.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        Rational(self.0.recip())
    }

    /// Integer power with the convention `x.pow(0) == 1` for every x,
    /// including zero. Negative exponents invert (and panic on zero base).
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        let e = exp.unsigned_abs();
        assert!(e <= u32::MAX as u64, "exponent too large");
        let num = self.0.numer().pow(e as u32);
        let den = self.0.denom().pow(e as u32);
        let pos = Rational(BigRational::new(num, den));
        if exp < 0 {
            pos.recip()
        } else {
            pos
        }
    }

    /// Exact square root if `self` is the square of a rational.
    pub fn sqrt_exact(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Rational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with optional surrounding whitespace.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidNumber(s.to_string());
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let (num_str, den_str) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num = BigInt::from_str(num_str).map_err(|_| bad())?;
        let den = BigInt::from_str(den_str).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e: Error| de::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "1", "-3", "1/2", "-7/3", "22/7"] {
            assert_eq!(q(s).to_string(), s);
        }
    }

    #[test]
    fn parse_reduces_to_canonical_form() {
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("3/-6").to_string(), "-1/2");
        assert_eq!(q(" 5 / 10 "), q("1/2"));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "a", "1.5", "1/2/3"] {
            assert!(s.parse::<Rational>().is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn zero_to_the_zero_is_one() {
        assert_eq!(Rational::zero().pow(0), Rational::one());
        assert_eq!(q("2/3").pow(0), Rational::one());
    }

    #[test]
    fn powers_and_reciprocals() {
        assert_eq!(q("2/3").pow(2), q("4/9"));
        assert_eq!(q("2/3").pow(-2), q("9/4"));
        assert_eq!(q("-2").pow(3), q("-8"));
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(q("4/9").sqrt_exact(), Some(q("2/3")));
        assert_eq!(q("1").sqrt_exact(), Some(q("1")));
        assert_eq!(q("0").sqrt_exact(), Some(q("0")));
        assert_eq!(q("2").sqrt_exact(), None);
        assert_eq!(q("-4").sqrt_exact(), None);
    }

    #[test]
    fn ordering_is_numeric() {
        assert!(q("1/3") < q("1/2"));
        assert!(q("-1") < q("0"));
        assert_eq!(q("1/2").max(q("1/3")), q("1/2"));
    }

    #[test]
    fn serde_uses_strings() {
        let v: Vec<Rational> = serde_json::from_str(r#"["1","-2","1/3"]"#).unwrap();
        assert_eq!(v, vec![q("1"), q("-2"), q("1/3")]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1","-2","1/3"]"#);
    }
}
