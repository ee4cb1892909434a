//! Deciders, witnesses, and reports for tropical and central indices.
//!
//! Both notions look only at the coefficient moduli b_n = |a_n| of
//! f(z) = sum a_n z^n of degree d. For an index 0 <= m <= d:
//!
//! * m is a *tropical index* when b_m z^m >= b_n z^n for all n != m at
//!   some z >= 0, and
//! * m is a *central index* when b_m z^m >= sum over n != m of b_n z^n at
//!   some z >= 0.
//!
//! Index 0 always qualifies for both with witness z = 0. For m >= 1 with
//! b_m > 0 a witness must be strictly positive, and the tropical decision
//! reduces to the cross-power test: for all n < m < k in the support,
//! b_n^(k-m) * b_k^(m-n) <= b_m^(k-n), i.e. the feasible set [L, U] with
//! L = max over n < m of (b_n/b_m)^(1/(m-n)) and
//! U = min over k > m of (b_m/b_k)^(1/(k-m)) is nonempty. The central
//! decision asks whether g(z) = b_m z^m - sum_{n != m} b_n z^n takes a
//! nonnegative value, which for interior m reduces to g having a positive
//! real root. An index m >= 1 with b_m = 0 qualifies only in the
//! degenerate case that every b_n with n < m also vanishes (then z = 0
//! balances everything); this is the one place where a convention beyond
//! the positive-coefficient setting is needed.
//!
//! Every positive verdict comes with a checkable [`Witness`]: an exact
//! rational point where the defining inequality is verified, or an
//! isolating interval around the unique algebraic point where it holds
//! with equality (a double root of g, or the boundary case L = U).

use std::cmp::Ordering;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::poly::{Polynomial, SignPattern};
use crate::realroot::{self, Interval, RootCounter};
use crate::scalar::Rational;

/// Default cap on the number of swept sign positions in the brute-force
/// real-rootedness sweeps (2^12 = 4096 patterns).
pub const DEFAULT_SWEEP_LIMIT: usize = 12;

/// Certificate that an index inequality holds somewhere on z >= 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// The inequality holds at z = 0 (index 0, or no surviving lower terms).
    PointAtZero,
    /// The inequality is verified exactly at a positive rational point.
    Point(Rational),
    /// The inequality holds with equality at the unique algebraic point
    /// inside this interval.
    Interval(Interval),
}

impl fmt::Display for Witness {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::PointAtZero => write!(fm, "z = 0"),
            Witness::Point(z) => write!(fm, "z = {z}"),
            Witness::Interval(iv) => write!(fm, "z in [{}, {}]", iv.lo(), iv.hi()),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            Witness::PointAtZero => {
                let mut st = serializer.serialize_struct("Witness", 2)?;
                st.serialize_field("kind", "point")?;
                st.serialize_field("z", &Rational::zero())?;
                st.end()
            }
            Witness::Point(z) => {
                let mut st = serializer.serialize_struct("Witness", 2)?;
                st.serialize_field("kind", "point")?;
                st.serialize_field("z", z)?;
                st.end()
            }
            Witness::Interval(iv) => {
                let mut st = serializer.serialize_struct("Witness", 3)?;
                st.serialize_field("kind", "interval")?;
                st.serialize_field("lo", iv.lo())?;
                st.serialize_field("hi", iv.hi())?;
                st.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Witness {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            kind: String,
            #[serde(default)]
            z: Option<Rational>,
            #[serde(default)]
            lo: Option<Rational>,
            #[serde(default)]
            hi: Option<Rational>,
        }
        let raw = Raw::deserialize(deserializer)?;
        match raw.kind.as_str() {
            "point" => {
                let z = raw.z.ok_or_else(|| D::Error::missing_field("z"))?;
                if z.is_zero() {
                    Ok(Witness::PointAtZero)
                } else {
                    Ok(Witness::Point(z))
                }
            }
            "interval" => {
                let lo = raw.lo.ok_or_else(|| D::Error::missing_field("lo"))?;
                let hi = raw.hi.ok_or_else(|| D::Error::missing_field("hi"))?;
                let iv = Interval::new(lo, hi).map_err(D::Error::custom)?;
                Ok(Witness::Interval(iv))
            }
            other => Err(D::Error::custom(format!("unknown witness kind {other:?}"))),
        }
    }
}

/// Verdicts and witnesses for a single index of one polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IndexEntry {
    pub m: usize,
    pub tropical: bool,
    pub central: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tropical_witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_witness: Option<Witness>,
}

/// Per-index verdicts for every m = 0..d of one polynomial.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IndexReport {
    pub degree: usize,
    pub indices: Vec<IndexEntry>,
    /// Some coefficient below the degree is zero, so the zero-coefficient
    /// convention (not part of the positive setting) was exercised.
    pub zero_coefficient_warning: bool,
}

fn checked_degree(f: &Polynomial) -> Result<usize, Error> {
    f.degree().ok_or(Error::ZeroPolynomial)
}

pub(crate) fn check_index(f: &Polynomial, m: usize) -> Result<usize, Error> {
    let d = checked_degree(f)?;
    if m > d {
        return Err(Error::IndexOutOfRange { index: m, degree: d });
    }
    Ok(d)
}

pub(crate) fn abs_coeffs(f: &Polynomial) -> Vec<Rational> {
    f.coeffs().iter().map(Rational::abs).collect()
}

pub(crate) fn lower_support_empty(b: &[Rational], m: usize) -> bool {
    b[..m].iter().all(Rational::is_zero)
}

/// The balance polynomial g(z) = b_m z^m - sum over n != m of b_n z^n.
pub(crate) fn central_balance(f: &Polynomial, m: usize) -> Polynomial {
    let coeffs = abs_coeffs(f)
        .into_iter()
        .enumerate()
        .map(|(n, bn)| if n == m { bn } else { -bn })
        .collect();
    Polynomial::new(coeffs)
}

/// Decides whether m is a tropical index of f by the cross-power test.
pub fn is_tropical_index(f: &Polynomial, m: usize) -> Result<bool, Error> {
    let d = check_index(f, m)?;
    if m == 0 {
        return Ok(true);
    }
    let b = abs_coeffs(f);
    if b[m].is_zero() {
        return Ok(lower_support_empty(&b, m));
    }
    for n in 0..m {
        if b[n].is_zero() {
            continue;
        }
        for k in m + 1..=d {
            if b[k].is_zero() {
                continue;
            }
            let lhs = b[n].pow((k - m) as i64) * b[k].pow((m - n) as i64);
            let rhs = b[m].pow((k - n) as i64);
            if lhs > rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Decides whether m is a central index of f by counting positive roots of
/// the balance polynomial.
pub fn is_central_index(f: &Polynomial, m: usize) -> Result<bool, Error> {
    let d = check_index(f, m)?;
    if m == 0 {
        return Ok(true);
    }
    let b = abs_coeffs(f);
    if b[m].is_zero() {
        return Ok(lower_support_empty(&b, m));
    }
    if m == d {
        return Ok(true);
    }
    let g = central_balance(f, m);
    Ok(realroot::count_positive_roots(&g)? >= 1)
}

/// Indices m with the tropical property, in increasing order.
pub fn tropical_indices(f: &Polynomial) -> Result<Vec<usize>, Error> {
    let d = checked_degree(f)?;
    (0..=d).filter_map(|m| match is_tropical_index(f, m) {
        Ok(true) => Some(Ok(m)),
        Ok(false) => None,
        Err(e) => Some(Err(e)),
    }).collect()
}

/// Indices m with the central property, in increasing order.
pub fn central_indices(f: &Polynomial) -> Result<Vec<usize>, Error> {
    let d = checked_degree(f)?;
    (0..=d).filter_map(|m| match is_central_index(f, m) {
        Ok(true) => Some(Ok(m)),
        Ok(false) => None,
        Err(e) => Some(Err(e)),
    }).collect()
}

/// True when every index 0..d is tropical.
pub fn is_tropically_real_rooted(f: &Polynomial) -> Result<bool, Error> {
    let d = checked_degree(f)?;
    for m in 0..=d {
        if !is_tropical_index(f, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Classification of a candidate witness value against the tropical
/// constraints at index m.
enum Position {
    Feasible,
    /// Some lower constraint fails: z is below L.
    TooLow,
    /// Some upper constraint fails: z is above U.
    TooHigh,
}

fn classify(b: &[Rational], m: usize, z: &Rational) -> Position {
    let target = &b[m] * z.pow(m as i64);
    let beats = |n: usize| !b[n].is_zero() && &b[n] * z.pow(n as i64) > target;
    let too_low = (0..m).any(beats);
    let too_high = (m + 1..b.len()).any(beats);
    debug_assert!(!(too_low && too_high), "empty feasible set for a tropical index");
    if too_low {
        Position::TooLow
    } else if too_high {
        Position::TooHigh
    } else {
        Position::Feasible
    }
}

/// A positive real written as base^(1/root) with rational base > 0.
#[derive(Clone, Debug)]
pub(crate) struct Radical {
    base: Rational,
    root: u32,
}

fn nth_root_exact(x: &Rational, e: u32) -> Option<Rational> {
    debug_assert!(x.is_positive());
    let num = x.numer().nth_root(e);
    let den = x.denom().nth_root(e);
    if &num.pow(e) == x.numer() && &den.pow(e) == x.denom() {
        Some(Rational::from_bigint(num) / Rational::from_bigint(den))
    } else {
        None
    }
}

impl Radical {
    pub(crate) fn new(base: Rational, root: u32) -> Self {
        debug_assert!(base.is_positive() && root >= 1);
        Radical { base, root }
    }

    pub(crate) fn base(&self) -> &Rational {
        &self.base
    }

    pub(crate) fn root(&self) -> u32 {
        self.root
    }

    /// Orders two radicals by cross-powering:
    /// p^(1/i) vs q^(1/j) is p^j vs q^i.
    pub(crate) fn cmp(&self, other: &Radical) -> Ordering {
        let lhs = self.base.pow(other.root as i64);
        let rhs = other.base.pow(self.root as i64);
        lhs.cmp(&rhs)
    }

    /// Orders the radical against a rational by powering the rational.
    pub(crate) fn cmp_rational(&self, q: &Rational) -> Ordering {
        if !q.is_positive() {
            return Ordering::Greater;
        }
        self.base.cmp(&q.pow(self.root as i64))
    }

    /// The exact rational value, when the radical is a perfect power.
    pub(crate) fn to_rational(&self) -> Option<Rational> {
        nth_root_exact(&self.base, self.root)
    }

    /// A bracket lo < value < hi of at most the requested width, with
    /// lo >= 0, found by bisection. Intended for irrational radicals; a
    /// rational value would be returned by [`Radical::to_rational`] first.
    pub(crate) fn bracket(&self, width: &Rational) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = self.base.clone().max(Rational::one()) + Rational::one();
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) * Rational::new(1, 2);
            match self.cmp_rational(&mid) {
                Ordering::Greater => lo = mid,
                Ordering::Less => hi = mid,
                Ordering::Equal => {
                    // rational value hit exactly; bracket it symmetrically
                    let half = width * Rational::new(1, 2);
                    let lo = (&mid - &half).max(Rational::zero());
                    return (lo, mid + half);
                }
            }
        }
        (lo, hi)
    }
}

/// The feasibility bounds L and U for index m, absent when no constraint
/// on that side has a nonzero coefficient.
fn tropical_bounds(b: &[Rational], m: usize) -> (Option<Radical>, Option<Radical>) {
    let mut lower: Option<Radical> = None;
    for n in (0..m).rev() {
        if b[n].is_zero() {
            continue;
        }
        let r = Radical::new(&b[n] / &b[m], (m - n) as u32);
        if lower.as_ref().is_none_or(|best| r.cmp(best) == Ordering::Greater) {
            lower = Some(r);
        }
    }
    let mut upper: Option<Radical> = None;
    for k in m + 1..b.len() {
        if b[k].is_zero() {
            continue;
        }
        let r = Radical::new(&b[m] / &b[k], (k - m) as u32);
        if upper.as_ref().is_none_or(|best| r.cmp(best) == Ordering::Less) {
            upper = Some(r);
        }
    }
    (lower, upper)
}

/// Finds a feasible positive rational by doubling or halving from 1, then
/// bisecting the bracket. Terminates whenever the feasible set [L, U] is
/// nonempty with L < U or unbounded on one side.
fn search_feasible(b: &[Rational], m: usize) -> Rational {
    let two = Rational::from_int(2);
    let half = Rational::new(1, 2);
    let mut z = Rational::one();
    let (mut lo, mut hi);
    match classify(b, m, &z) {
        Position::Feasible => return z,
        Position::TooLow => {
            loop {
                lo = z.clone();
                z = &z * &two;
                match classify(b, m, &z) {
                    Position::Feasible => return z,
                    Position::TooLow => {}
                    Position::TooHigh => {
                        hi = z;
                        break;
                    }
                }
            }
        }
        Position::TooHigh => {
            loop {
                hi = z.clone();
                z = &z * &half;
                match classify(b, m, &z) {
                    Position::Feasible => return z,
                    Position::TooHigh => {}
                    Position::TooLow => {
                        lo = z;
                        break;
                    }
                }
            }
        }
    }
    loop {
        let mid = (&lo + &hi) * &half;
        match classify(b, m, &mid) {
            Position::Feasible => return mid,
            Position::TooLow => lo = mid,
            Position::TooHigh => hi = mid,
        }
    }
}

/// Produces a witness for a tropical index m of f.
pub fn tropical_witness(f: &Polynomial, m: usize) -> Result<Witness, Error> {
    if !is_tropical_index(f, m)? {
        return Err(Error::NotAnIndex { index: m });
    }
    if m == 0 {
        return Ok(Witness::PointAtZero);
    }
    let b = abs_coeffs(f);
    if b[m].is_zero() {
        // every lower coefficient vanishes, so z = 0 balances everything
        return Ok(Witness::PointAtZero);
    }
    let (lower, upper) = tropical_bounds(&b, m);
    if let (Some(l), Some(u)) = (&lower, &upper) {
        if l.cmp(u) == Ordering::Equal {
            return Ok(match l.to_rational() {
                Some(z) => Witness::Point(z),
                None => {
                    let (lo, hi) = l.bracket(&Rational::new(1, 4));
                    Witness::Interval(Interval::new(lo, hi).expect("bracket is ordered"))
                }
            });
        }
    }
    if lower.is_none() && upper.is_none() {
        // the support is just {m}; any positive value works
        return Ok(Witness::Point(Rational::one()));
    }
    Ok(Witness::Point(search_feasible(&b, m)))
}

/// Checks the tropical inequality b_m z^m >= b_n z^n for all n at an exact
/// rational point z >= 0.
fn tropical_holds_at(b: &[Rational], m: usize, z: &Rational) -> bool {
    let lhs = &b[m] * z.pow(m as i64);
    b.iter()
        .enumerate()
        .all(|(n, bn)| n == m || bn * z.pow(n as i64) <= lhs)
}

/// Verifies a tropical witness against the defining inequality.
///
/// Points are checked by exact evaluation. An interval certificate asserts
/// the boundary case L = U: both feasibility bounds exist, they agree, and
/// their common (equality) point lies strictly inside the interval.
pub fn verify_tropical_witness(f: &Polynomial, m: usize, w: &Witness) -> Result<bool, Error> {
    check_index(f, m)?;
    let b = abs_coeffs(f);
    match w {
        Witness::PointAtZero => Ok(tropical_holds_at(&b, m, &Rational::zero())),
        Witness::Point(z) => Ok(!z.is_negative() && tropical_holds_at(&b, m, z)),
        Witness::Interval(iv) => {
            if m == 0 || b[m].is_zero() || iv.is_point() || iv.lo().is_negative() {
                return Ok(false);
            }
            let (lower, upper) = tropical_bounds(&b, m);
            let (Some(l), Some(u)) = (lower, upper) else {
                return Ok(false);
            };
            Ok(l.cmp(&u) == Ordering::Equal
                && l.cmp_rational(iv.lo()) == Ordering::Greater
                && l.cmp_rational(iv.hi()) == Ordering::Less)
        }
    }
}

/// Produces a witness for a central index m of f.
pub fn central_witness(f: &Polynomial, m: usize) -> Result<Witness, Error> {
    if !is_central_index(f, m)? {
        return Err(Error::NotAnIndex { index: m });
    }
    let d = checked_degree(f)?;
    if m == 0 {
        return Ok(Witness::PointAtZero);
    }
    let b = abs_coeffs(f);
    if b[m].is_zero() {
        return Ok(Witness::PointAtZero);
    }
    let g = central_balance(f, m);
    if m == d {
        // g is eventually positive; start at the root bound and double
        let two = Rational::from_int(2);
        let mut z = realroot::cauchy_root_bound(&g)?;
        while !g.evaluate(&z).is_positive() {
            z = &z * &two;
        }
        return Ok(Witness::Point(z));
    }
    let counter = RootCounter::new(&g)?;
    let bound = realroot::cauchy_root_bound(&g)?;
    let roots = counter.isolate_in(&Rational::zero(), &bound);
    if lower_support_empty(&b, m) {
        // g > 0 on (0, r) up to its unique simple positive root r, and the
        // isolating interval's left endpoint is a positive nonroot below r
        // (or r itself when rational, where g = 0 holds with equality)
        return Ok(Witness::Point(roots[0].lo().clone()));
    }
    match roots.as_slice() {
        [double] => {
            // two sign changes and one distinct root: a tangency of g at 0
            Ok(Witness::Interval(proper_interval_around(&counter, double)))
        }
        [first, second] => {
            // open positivity region between two simple roots: midpoint of
            // the interval midpoints, refined until g is nonnegative there
            let mut width = Rational::one();
            let mut a = counter.refine_isolating(first, &width)?;
            let mut c = counter.refine_isolating(second, &width)?;
            let half = Rational::new(1, 2);
            loop {
                let z = (a.midpoint() + c.midpoint()) * &half;
                if !g.evaluate(&z).is_negative() {
                    return Ok(Witness::Point(z));
                }
                width = &width * &half;
                a = counter.refine_isolating(&a, &width)?;
                c = counter.refine_isolating(&c, &width)?;
            }
        }
        _ => unreachable!("a central balance has at most two positive roots"),
    }
}

/// Widens or shrinks an isolating interval to a proper one with positive
/// nonroot endpoints around the single root inside.
fn proper_interval_around(counter: &RootCounter, iv: &Interval) -> Interval {
    let target = iv.clone();
    let target = if target.is_point() {
        target
    } else {
        // tidy wide brackets first; refinement may collapse to a point
        counter
            .refine_isolating(&target, &Rational::one())
            .expect("input interval is isolating")
    };
    if !target.is_point() {
        return target;
    }
    let p = target.lo().clone();
    let mut radius = Rational::new(1, 4).min(&p * Rational::new(1, 2));
    loop {
        let lo = &p - &radius;
        let hi = &p + &radius;
        let iv = Interval::new(lo, hi).expect("radius is positive");
        if !counter.is_root(iv.lo())
            && !counter.is_root(iv.hi())
            && counter.count(&iv, true, true) == 1
        {
            return iv;
        }
        radius = radius * Rational::new(1, 2);
    }
}

/// Verifies a central witness against the defining inequality.
///
/// Points are checked by exact evaluation of the balance polynomial g. An
/// interval certificate asserts that g has exactly one root inside (by
/// Sturm count) and the interval sits in z >= 0; at that root the central
/// inequality holds with equality.
pub fn verify_central_witness(f: &Polynomial, m: usize, w: &Witness) -> Result<bool, Error> {
    check_index(f, m)?;
    let g = central_balance(f, m);
    match w {
        Witness::PointAtZero => Ok(!g.evaluate(&Rational::zero()).is_negative()),
        Witness::Point(z) => Ok(!z.is_negative() && !g.evaluate(z).is_negative()),
        Witness::Interval(iv) => {
            if iv.is_point() || iv.lo().is_negative() {
                return Ok(false);
            }
            Ok(realroot::count_distinct_roots(&g, iv, true, true)? == 1)
        }
    }
}

/// True when every index 0..d is central, requiring all coefficients
/// nonzero (the fast route to sign-independent real-rootedness).
pub fn is_sign_independently_real_rooted(f: &Polynomial) -> Result<bool, Error> {
    let d = checked_degree(f)?;
    require_nonzero_coeffs(f)?;
    for m in 0..=d {
        if !is_central_index(f, m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_nonzero_coeffs(f: &Polynomial) -> Result<(), Error> {
    for (n, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            return Err(Error::ZeroCoefficient { index: n });
        }
    }
    Ok(())
}

/// Definitional sign sweep: true when every polynomial obtained from f by
/// flipping coefficient signs is real-rooted. Requires all coefficients
/// nonzero and degree at most [`DEFAULT_SWEEP_LIMIT`].
pub fn sirr_bruteforce(f: &Polynomial) -> Result<bool, Error> {
    sirr_bruteforce_capped(f, DEFAULT_SWEEP_LIMIT)
}

/// [`sirr_bruteforce`] with an explicit cap on the degree.
pub fn sirr_bruteforce_capped(f: &Polynomial, max_degree: usize) -> Result<bool, Error> {
    let d = checked_degree(f)?;
    require_nonzero_coeffs(f)?;
    if d > max_degree {
        return Err(Error::SweepTooLarge { size: d, max: max_degree });
    }
    // fixing the constant coefficient's sign halves the sweep: f and -f
    // have the same roots
    for mask in 0u64..(1 << d) {
        let mut signs = vec![1i8; d + 1];
        for (i, s) in signs.iter_mut().enumerate().skip(1) {
            if mask >> (i - 1) & 1 == 1 {
                *s = -1;
            }
        }
        let flipped = f.apply_signs(&SignPattern::new(signs)?)?;
        if !realroot::is_real_rooted(&flipped)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sign sweep over the support only, so polynomials with zero coefficients
/// are allowed; flips at zero coefficients change nothing and are skipped.
pub fn all_sign_flips_real_rooted(f: &Polynomial) -> Result<bool, Error> {
    checked_degree(f)?;
    let support = f.support();
    let flips = support.len() - 1;
    if flips > DEFAULT_SWEEP_LIMIT {
        return Err(Error::SweepTooLarge { size: flips, max: DEFAULT_SWEEP_LIMIT });
    }
    for mask in 0u64..(1 << flips) {
        let mut signs = vec![1i8; f.coeffs().len()];
        for (bit, &pos) in support.iter().skip(1).enumerate() {
            if mask >> bit & 1 == 1 {
                signs[pos] = -1;
            }
        }
        let flipped = f.apply_signs(&SignPattern::new(signs)?)?;
        if !realroot::is_real_rooted(&flipped)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Full per-index verdicts with witnesses for every positive verdict.
pub fn index_report(f: &Polynomial) -> Result<IndexReport, Error> {
    let d = checked_degree(f)?;
    let mut indices = Vec::with_capacity(d + 1);
    for m in 0..=d {
        let tropical = is_tropical_index(f, m)?;
        let central = is_central_index(f, m)?;
        indices.push(IndexEntry {
            m,
            tropical,
            central,
            tropical_witness: if tropical { Some(tropical_witness(f, m)?) } else { None },
            central_witness: if central { Some(central_witness(f, m)?) } else { None },
        });
    }
    Ok(IndexReport {
        degree: d,
        indices,
        zero_coefficient_warning: f.coeffs().iter().any(Rational::is_zero),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn tropical_decider_examples() {
        assert!(is_tropical_index(&p(&[1, 1, 1]), 1).unwrap());
        assert!(!is_tropical_index(&p(&[1, 1, 3]), 1).unwrap());
        let geo = Polynomial::geometric(4);
        for m in 0..=4 {
            assert!(is_tropical_index(&geo, m).unwrap());
        }
    }

    #[test]
    fn index_out_of_range_is_rejected() {
        let f = p(&[1, 1]);
        assert!(matches!(
            is_tropical_index(&f, 2),
            Err(Error::IndexOutOfRange { index: 2, degree: 1 })
        ));
        assert!(matches!(is_central_index(&f, 5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn zero_coefficient_convention() {
        // b_1 = 0 with b_0 = 1 surviving: index 1 is neither
        let f = p(&[1, 0, 0, 1]);
        assert!(!is_tropical_index(&f, 1).unwrap());
        assert!(!is_central_index(&f, 1).unwrap());
        // monomial: every index below the degree has all lower terms zero
        let g = p(&[0, 0, 0, 1]);
        assert_eq!(tropical_indices(&g).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(central_indices(&g).unwrap(), vec![0, 1, 2, 3]);
        // b_0 = 0 alone does not rescue an interior index that fails the
        // cross-power test
        let h = p(&[0, 1, 1, 3]);
        assert!(!is_tropical_index(&h, 2).unwrap());
        assert!(!is_central_index(&h, 2).unwrap());
    }

    #[test]
    fn central_decider_examples() {
        assert!(is_central_index(&p(&[1, 2, 1]), 1).unwrap());
        assert!(!is_central_index(&p(&[1, 1, 1]), 1).unwrap());
        assert!(is_central_index(&p(&[1, 3, 1]), 1).unwrap());
    }

    #[test]
    fn index_sets() {
        assert_eq!(tropical_indices(&p(&[1, 1, 1])).unwrap(), vec![0, 1, 2]);
        assert_eq!(central_indices(&p(&[1, 1, 1])).unwrap(), vec![0, 2]);
        assert_eq!(central_indices(&p(&[1, 2, 1])).unwrap(), vec![0, 1, 2]);
        assert_eq!(tropical_indices(&Polynomial::geometric(3)).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn tropically_real_rooted_examples() {
        assert!(is_tropically_real_rooted(&Polynomial::geometric(5)).unwrap());
        assert!(!is_tropically_real_rooted(&p(&[1, 1, 3])).unwrap());
        assert!(is_tropically_real_rooted(&p(&[1, 2, 2])).unwrap());
    }

    #[test]
    fn tropical_witness_examples() {
        assert_eq!(tropical_witness(&p(&[1, 1, 1]), 1).unwrap(), Witness::Point(q("1")));
        assert_eq!(tropical_witness(&p(&[1, 3, 1]), 1).unwrap(), Witness::Point(q("1")));
        assert_eq!(tropical_witness(&p(&[1, 1, 1]), 0).unwrap(), Witness::PointAtZero);
        assert!(matches!(
            tropical_witness(&p(&[1, 1, 3]), 1),
            Err(Error::NotAnIndex { index: 1 })
        ));
    }

    #[test]
    fn tropical_witness_search_moves_off_one() {
        // L = 10 forces doubling: feasible set is [10, infinity)
        let f = p(&[10, 1]);
        let w = tropical_witness(&f, 1).unwrap();
        assert!(verify_tropical_witness(&f, 1, &w).unwrap());
        // U = 1/10 forces halving
        let g = p(&[0, 1, 10]);
        let w = tropical_witness(&g, 1).unwrap();
        assert!(verify_tropical_witness(&g, 1, &w).unwrap());
    }

    #[test]
    fn boundary_tie_with_rational_balance_point() {
        // L = U = 2: b_0 / b_2 = 4 and b_2 / b_4 = 4
        let f = Polynomial::from_strs(&["4", "0", "1", "0", "1/4"]).unwrap();
        let w = tropical_witness(&f, 2).unwrap();
        assert_eq!(w, Witness::Point(q("2")));
        assert!(verify_tropical_witness(&f, 2, &w).unwrap());
    }

    #[test]
    fn boundary_tie_with_irrational_balance_point() {
        // L = U = sqrt(2): b_0 / b_2 = 2 and b_2 / b_4 = 2
        let f = Polynomial::from_strs(&["2", "0", "1", "0", "1/2"]).unwrap();
        assert!(is_tropical_index(&f, 2).unwrap());
        let w = tropical_witness(&f, 2).unwrap();
        let Witness::Interval(iv) = &w else {
            panic!("expected an interval certificate, got {w}");
        };
        assert!(iv.lo().pow(2) < q("2") && q("2") < iv.hi().pow(2), "must straddle sqrt(2)");
        assert!(verify_tropical_witness(&f, 2, &w).unwrap());
        // the certificate is specific: shifting it must fail
        let shifted = Witness::Interval(Interval::new(q("2"), q("3")).unwrap());
        assert!(!verify_tropical_witness(&f, 2, &shifted).unwrap());
    }

    #[test]
    fn central_witness_examples() {
        assert_eq!(central_witness(&p(&[1, 3, 1]), 1).unwrap(), Witness::Point(q("3/2")));
        assert_eq!(central_witness(&p(&[1, 1]), 1).unwrap(), Witness::Point(q("2")));
        assert_eq!(central_witness(&p(&[1, 1, 1]), 0).unwrap(), Witness::PointAtZero);
        let w = central_witness(&p(&[1, 2, 1]), 1).unwrap();
        let Witness::Interval(iv) = &w else {
            panic!("double root must yield an interval, got {w}");
        };
        assert!(iv.contains(&q("1")) && !iv.is_point());
        assert!(matches!(
            central_witness(&p(&[1, 1, 1]), 1),
            Err(Error::NotAnIndex { index: 1 })
        ));
    }

    #[test]
    fn central_witnesses_verify_across_a_family() {
        let polys = [
            p(&[1, 1, 1]),
            p(&[1, 2, 1]),
            p(&[1, 3, 1]),
            p(&[2, -3, 0, 1]),
            p(&[0, 1, 1]),
            p(&[5]),
            p(&[0, 0, 7]),
            Polynomial::geometric(4),
            Polynomial::from_strs(&["1/3", "2", "1/2", "1"]).unwrap(),
        ];
        for f in &polys {
            let d = f.degree().unwrap();
            for m in 0..=d {
                if is_tropical_index(f, m).unwrap() {
                    let w = tropical_witness(f, m).unwrap();
                    assert!(
                        verify_tropical_witness(f, m, &w).unwrap(),
                        "tropical witness {w} fails for {f} at {m}"
                    );
                }
                if is_central_index(f, m).unwrap() {
                    let w = central_witness(f, m).unwrap();
                    assert!(
                        verify_central_witness(f, m, &w).unwrap(),
                        "central witness {w} fails for {f} at {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn central_subset_of_tropical_on_small_cases() {
        let polys = [
            p(&[1, 1, 1]),
            p(&[1, 2, 1]),
            p(&[0, 1, 1, 3]),
            p(&[1, 0, 0, 1]),
            p(&[3, -1, 4, -1, 5]),
        ];
        for f in &polys {
            let central = central_indices(f).unwrap();
            let tropical = tropical_indices(f).unwrap();
            for m in &central {
                assert!(tropical.contains(m), "central {m} not tropical for {f}");
            }
        }
    }

    #[test]
    fn sirr_examples() {
        assert!(is_sign_independently_real_rooted(&p(&[1, 2, 1])).unwrap());
        assert!(!is_sign_independently_real_rooted(&p(&[1, 1, 1])).unwrap());
        assert!(is_sign_independently_real_rooted(&p(&[3, 7])).unwrap());
        assert!(matches!(
            is_sign_independently_real_rooted(&p(&[1, 0, 1])),
            Err(Error::ZeroCoefficient { index: 1 })
        ));
    }

    #[test]
    fn bruteforce_examples() {
        assert!(sirr_bruteforce(&p(&[1, 2, 1])).unwrap());
        assert!(!sirr_bruteforce(&p(&[1, 1, 1])).unwrap());
        assert!(sirr_bruteforce(&p(&[1, 10, 1])).unwrap());
        assert!(matches!(
            sirr_bruteforce_capped(&p(&[1, 2, 1]), 1),
            Err(Error::SweepTooLarge { size: 2, max: 1 })
        ));
    }

    #[test]
    fn bruteforce_agrees_with_the_central_route() {
        let polys = [
            p(&[1, 2, 1]),
            p(&[1, 1, 1]),
            p(&[1, 3, 3, 1]),
            p(&[1, -4, 5, -2]),
            p(&[2, 9, 11, 3]),
            Polynomial::from_strs(&["1", "5/2", "2", "1/2"]).unwrap(),
        ];
        for f in &polys {
            assert_eq!(
                is_sign_independently_real_rooted(f).unwrap(),
                sirr_bruteforce(f).unwrap(),
                "disagreement on {f}"
            );
        }
    }

    #[test]
    fn support_sweep_allows_zero_coefficients() {
        // z + z^3: flips over the support only
        let f = p(&[0, 1, 0, 1]);
        assert!(!all_sign_flips_real_rooted(&f).unwrap());
        let g = p(&[0, 1]);
        assert!(all_sign_flips_real_rooted(&g).unwrap());
        // agreement with the gated sweep on full-support input
        let h = p(&[1, 2, 1]);
        assert_eq!(all_sign_flips_real_rooted(&h).unwrap(), sirr_bruteforce(&h).unwrap());
    }

    #[test]
    fn report_flags_and_witnesses() {
        let report = index_report(&p(&[1, 1, 1])).unwrap();
        assert_eq!(report.degree, 2);
        assert!(!report.zero_coefficient_warning);
        let flags: Vec<(bool, bool)> =
            report.indices.iter().map(|e| (e.tropical, e.central)).collect();
        assert_eq!(flags, vec![(true, true), (true, false), (true, true)]);
        for entry in &report.indices {
            assert_eq!(entry.tropical, entry.tropical_witness.is_some());
            assert_eq!(entry.central, entry.central_witness.is_some());
            assert!(entry.tropical || !entry.central, "central implies tropical");
        }

        let all = index_report(&p(&[1, 2, 1])).unwrap();
        assert!(all.indices.iter().all(|e| e.tropical && e.central));

        let constant = index_report(&p(&[5])).unwrap();
        assert_eq!(constant.degree, 0);
        assert_eq!(constant.indices.len(), 1);
        assert_eq!(constant.indices[0].tropical_witness, Some(Witness::PointAtZero));
        assert_eq!(constant.indices[0].central_witness, Some(Witness::PointAtZero));

        assert!(index_report(&p(&[1, 0, 0, 1])).unwrap().zero_coefficient_warning);
    }

    #[test]
    fn witness_json_round_trip() {
        let cases = [
            (Witness::PointAtZero, r#"{"kind":"point","z":"0"}"#),
            (Witness::Point(q("3/2")), r#"{"kind":"point","z":"3/2"}"#),
            (
                Witness::Interval(Interval::new(q("1"), q("2")).unwrap()),
                r#"{"kind":"interval","lo":"1","hi":"2"}"#,
            ),
        ];
        for (w, json) in &cases {
            assert_eq!(&serde_json::to_string(w).unwrap(), json);
            let back: Witness = serde_json::from_str(json).unwrap();
            assert_eq!(&back, w);
        }
    }

    #[test]
    fn report_json_shape() {
        let report = index_report(&p(&[5])).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            concat!(
                r#"{"degree":0,"indices":[{"m":0,"tropical":true,"central":true,"#,
                r#""tropical_witness":{"kind":"point","z":"0"},"#,
                r#""central_witness":{"kind":"point","z":"0"}}],"#,
                r#""zero_coefficient_warning":false}"#
            )
        );
    }
}
