//! Univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored densely, entry n holding the coefficient of z^n.
//! The zero polynomial is the empty list; every nonzero polynomial keeps a
//! nonzero last coefficient, so the degree is always well defined.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::Error;
use crate::scalar::Rational;

/// Dense univariate polynomial over [`Rational`].
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing
    /// zeros so the representation is canonical.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    /// Parses a list of `"p"` / `"p/q"` literals, index 0 first.
    pub fn from_strs(coeffs: &[&str]) -> Result<Self, Error> {
        let parsed: Result<Vec<Rational>, Error> =
            coeffs.iter().map(|s| Rational::from_str(s)).collect();
        Ok(Polynomial::new(parsed?))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of z^n, zero beyond the stored length.
    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Indices of the nonzero coefficients, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(n, _)| n)
            .collect()
    }

    /// Exact evaluation by Horner's rule. Evaluating at 0 yields the
    /// constant term, matching the 0^0 = 1 convention.
    pub fn evaluate(&self, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient-wise absolute value. Degree is preserved.
    pub fn abs_coefficients(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(Rational::abs).collect(),
        }
    }

    /// Flips coefficient signs according to the pattern, which must have one
    /// entry per stored coefficient.
    pub fn apply_signs(&self, pattern: &SignPattern) -> Result<Polynomial, Error> {
        if pattern.len() != self.coeffs.len() {
            return Err(Error::LengthMismatch {
                expected: self.coeffs.len(),
                got: pattern.len(),
            });
        }
        let coeffs = self
            .coeffs
            .iter()
            .zip(pattern.signs())
            .map(|(c, &s)| if s < 0 { -c } else { c.clone() })
            .collect();
        // Signs never create or destroy a leading coefficient.
        Ok(Polynomial { coeffs })
    }

    pub fn derivative(&self) -> Polynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, c)| Rational::from_int(n as i64) * c)
            .collect();
        Polynomial::new(coeffs)
    }

    /// The constant multiple `c * f`.
    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// The dilation `f(c z)`, which multiplies coefficient n by c^n.
    pub fn dilate(&self, c: &Rational) -> Polynomial {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let out = a * &power;
                power *= c;
                out
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// Rescales a nonzero polynomial so its leading coefficient is 1.
    pub fn monic(&self) -> Option<Polynomial> {
        let lead = self.leading()?;
        Some(self.scale(&lead.recip()))
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Polynomial::new(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Polynomial::new(coeffs)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Polynomial::new(coeffs)
    }

    /// Exact Euclidean division: returns (quotient, remainder) with
    /// deg r < deg divisor. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            let q = &top / &lead;
            for i in 0..dd {
                let t = &q * &divisor.coeffs[i];
                rem[shift + i] -= &t;
            }
            rem.pop();
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
            quot[shift] = q;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// The all-ones polynomial 1 + z + ... + z^d.
    pub fn geometric(d: usize) -> Polynomial {
        Polynomial {
            coeffs: vec![Rational::one(); d + 1],
        }
    }

    /// The trinomial z^(m-1) + 2 z^m + z^(m+1), defined for m >= 1.
    pub fn trinomial(m: usize) -> Result<Polynomial, Error> {
        if m < 1 {
            return Err(Error::IndexOutOfRange { index: m, degree: 0 });
        }
        let mut coeffs = vec![Rational::zero(); m + 2];
        coeffs[m - 1] = Rational::one();
        coeffs[m] = Rational::from_int(2);
        coeffs[m + 1] = Rational::one();
        Ok(Polynomial { coeffs })
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match n {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag} ")?;
                    }
                    if n == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{n}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        // Accepts the object form {"coeffs": [...]}; trailing zeros are
        // trimmed so deserialized values satisfy the representation invariant.
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<Rational>,
        }
        Ok(Polynomial::new(Raw::deserialize(deserializer)?.coeffs))
    }
}

/// A list of +1 / -1 signs, one per coefficient of a target polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignPattern {
    signs: Vec<i8>,
}

impl SignPattern {
    pub fn new(signs: Vec<i8>) -> Result<Self, Error> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidSignPattern);
        }
        Ok(SignPattern { signs })
    }

    pub fn all_plus(len: usize) -> Self {
        SignPattern { signs: vec![1; len] }
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Flips one entry in place.
    pub fn flip(&mut self, n: usize) {
        self.signs[n] = -self.signs[n];
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let f = Polynomial::from_ints(&[1, 2, 0, 0]);
        assert_eq!(f.degree(), Some(1));
        assert_eq!(f.coeffs().len(), 2);
        assert!(Polynomial::from_ints(&[0, 0]).is_zero());
        assert_eq!(Polynomial::zero().degree(), None);
    }

    #[test]
    fn evaluate_sums_coefficients_at_one() {
        let f = Polynomial::from_ints(&[1, 2, 1]);
        assert_eq!(f.evaluate(&q("1")), q("4"));
    }

    #[test]
    fn evaluate_at_zero_returns_constant_term() {
        let f = Polynomial::from_ints(&[1, 2, 1]);
        assert_eq!(f.evaluate(&q("0")), q("1"));
    }

    #[test]
    fn evaluate_exact_rational_point() {
        let f = Polynomial::from_ints(&[1, 1, 1]);
        assert_eq!(f.evaluate(&q("1/2")), q("7/4"));
    }

    #[test]
    fn abs_coefficients_examples() {
        assert_eq!(
            Polynomial::from_ints(&[1, -2, 1]).abs_coefficients(),
            Polynomial::from_ints(&[1, 2, 1])
        );
        assert!(Polynomial::zero().abs_coefficients().is_zero());
        assert_eq!(
            Polynomial::from_ints(&[-3, 1]).abs_coefficients(),
            Polynomial::from_ints(&[3, 1])
        );
    }

    #[test]
    fn abs_coefficients_is_idempotent() {
        let f = Polynomial::from_ints(&[-2, 0, 5, -1]);
        let a = f.abs_coefficients();
        assert_eq!(a.abs_coefficients(), a);
    }

    #[test]
    fn apply_signs_examples() {
        let f = Polynomial::from_ints(&[1, 2, 1]);
        let s = SignPattern::new(vec![1, -1, 1]).unwrap();
        assert_eq!(f.apply_signs(&s).unwrap(), Polynomial::from_ints(&[1, -2, 1]));
        let all = SignPattern::all_plus(3);
        assert_eq!(f.apply_signs(&all).unwrap(), f);
        let g = Polynomial::from_ints(&[1, 1]);
        let neg = SignPattern::new(vec![-1, -1]).unwrap();
        assert_eq!(g.apply_signs(&neg).unwrap(), Polynomial::from_ints(&[-1, -1]));
    }

    #[test]
    fn apply_signs_is_an_involution() {
        let f = Polynomial::from_strs(&["1/2", "-3", "0", "7"]).unwrap();
        let s = SignPattern::new(vec![1, -1, -1, 1]).unwrap();
        assert_eq!(f.apply_signs(&s).unwrap().apply_signs(&s).unwrap(), f);
    }

    #[test]
    fn apply_signs_checks_length() {
        let f = Polynomial::from_ints(&[1, 2, 1]);
        let s = SignPattern::all_plus(2);
        assert_eq!(
            f.apply_signs(&s),
            Err(Error::LengthMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(Polynomial::geometric(0), Polynomial::from_ints(&[1]));
        assert_eq!(Polynomial::geometric(2), Polynomial::from_ints(&[1, 1, 1]));
        assert_eq!(
            Polynomial::geometric(4),
            Polynomial::from_ints(&[1, 1, 1, 1, 1])
        );
    }

    #[test]
    fn trinomial_examples() {
        assert_eq!(
            Polynomial::trinomial(1).unwrap(),
            Polynomial::from_ints(&[1, 2, 1])
        );
        assert_eq!(
            Polynomial::trinomial(2).unwrap(),
            Polynomial::from_ints(&[0, 1, 2, 1])
        );
        assert!(Polynomial::trinomial(0).is_err());
    }

    #[test]
    fn trinomial_at_one_is_a_perfect_square() {
        // 1 + 2z + z^2 = (1 + z)^2
        let t = Polynomial::trinomial(1).unwrap();
        let lin = Polynomial::from_ints(&[1, 1]);
        assert_eq!(t, lin.mul(&lin));
    }

    #[test]
    fn division_recovers_factors() {
        let f = Polynomial::from_ints(&[-2, 1]).mul(&Polynomial::from_ints(&[3, 1]));
        let (q1, r) = f.div_rem(&Polynomial::from_ints(&[-2, 1]));
        assert!(r.is_zero());
        assert_eq!(q1, Polynomial::from_ints(&[3, 1]));
        let (_, r2) = f.div_rem(&Polynomial::from_ints(&[1, 1]));
        assert!(!r2.is_zero());
    }

    #[test]
    fn derivative_and_dilation() {
        let f = Polynomial::from_ints(&[5, 3, 1]);
        assert_eq!(f.derivative(), Polynomial::from_ints(&[3, 2]));
        // f(2z) multiplies coefficient n by 2^n
        assert_eq!(f.dilate(&q("2")), Polynomial::from_ints(&[5, 6, 4]));
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(Polynomial::from_ints(&[1, 2, 1]).to_string(), "1 + 2 z + z^2");
        assert_eq!(Polynomial::from_ints(&[0, -1, 0, 3]).to_string(), "-z + 3 z^3");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn serde_object_form_round_trips() {
        let f = Polynomial::from_strs(&["1", "-2", "1/3"]).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"coeffs":["1","-2","1/3"]}"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        // trailing zeros in the wire form are trimmed on the way in
        let padded: Polynomial = serde_json::from_str(r#"{"coeffs":["1","0"]}"#).unwrap();
        assert_eq!(padded.degree(), Some(0));
    }
}
