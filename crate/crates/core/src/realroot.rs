//! Exact real root machinery: Sturm chains, root counting and isolation,
//! Descartes' rule of signs, and real-rootedness tests.
//!
//! All counting goes through a Sturm chain built on the square-free part s
//! of the input. Writing V(x) for the number of sign changes along the
//! chain at x (zeros skipped), V is right-continuous and V(a) - V(b) equals
//! the number of distinct roots of s in the half-open interval (a, b].
//! Closed and open interval counts follow by exact endpoint tests.
//!
//! Internally the chain is kept as primitive integer coefficient vectors
//! (each element a positive rational multiple of the textbook chain, which
//! leaves all sign variations unchanged), so the many evaluations done
//! during isolation never touch rational arithmetic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::poly::Polynomial;
use crate::scalar::Rational;

/// Closed rational interval with lo <= hi. A point interval has lo == hi.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::InvalidInterval);
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(p: Rational) -> Self {
        Interval { lo: p.clone(), hi: p }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) * Rational::new(1, 2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Textbook Sturm chain (s, s', then negated Euclidean remainders) of the
/// square-free part s of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Polynomial>,
}

impl SturmChain {
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.chain
    }

    /// Number of sign changes along the chain at x, zeros skipped.
    pub fn variations_at(&self, x: &Rational) -> usize {
        let signs = self.chain.iter().map(|p| p.evaluate(x).signum());
        count_changes(signs)
    }
}

fn count_changes<I: Iterator<Item = i32>>(signs: I) -> usize {
    let mut changes = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Builds the Sturm chain of the square-free part of f.
pub fn sturm_chain(f: &Polynomial) -> Result<SturmChain, Error> {
    let s = squarefree_part(f)?;
    let mut chain = vec![s.clone()];
    if s.degree() == Some(0) {
        return Ok(SturmChain { chain });
    }
    chain.push(s.derivative());
    loop {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    Ok(SturmChain { chain })
}

/// Number of sign changes in a coefficient list, zeros deleted.
pub fn descartes_sign_changes(coeffs: &[Rational]) -> usize {
    count_changes(coeffs.iter().map(Rational::signum))
}

/// Monic greatest common divisor by exact Euclidean remainders.
/// The inputs may not both be zero.
pub fn gcd(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, Error> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic().expect("nonzero by the loop invariant"))
}

/// f divided by gcd(f, f'): same roots as f, each exactly once.
pub fn squarefree_part(f: &Polynomial) -> Result<Polynomial, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd(f, &f.derivative())?;
    let (q, r) = f.div_rem(&g);
    debug_assert!(r.is_zero(), "gcd must divide f");
    Ok(q)
}

/// A bound B with every real root of f strictly inside (-B, B):
/// B = 1 + max over n < d of |a_n| / |a_d|.
pub fn cauchy_root_bound(f: &Polynomial) -> Result<Rational, Error> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let lead = f.leading().unwrap().abs();
    let mut m = Rational::zero();
    for c in &f.coeffs()[..d] {
        m = m.max(c.abs());
    }
    Ok(Rational::one() + m / lead)
}

/// Shared counting machinery: the square-free part together with its
/// integer Sturm chain.
pub(crate) struct RootCounter {
    sf: Polynomial,
    rows: Vec<Vec<BigInt>>,
}

/// Scales a nonzero rational-coefficient polynomial by the positive
/// rational that makes it a primitive integer vector (content 1), keeping
/// its sign.
fn primitive_int(f: &Polynomial) -> Vec<BigInt> {
    let mut lcm = BigInt::from(1);
    for c in f.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    strip_content(ints)
}

fn strip_content(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() && content != BigInt::from(1) {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

fn int_derivative(v: &[BigInt]) -> Vec<BigInt> {
    v.iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| c * BigInt::from(n))
        .collect()
}

/// Primitive part of the negated pseudo-remainder of a by b, scaled so it
/// is a positive rational multiple of the textbook negated remainder.
fn neg_prim_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = b.last().unwrap();
    let mut e = (a.len() - 1 - db + 1) as u32;
    // an even power keeps the multiplier positive
    if lb.is_negative() && e % 2 == 1 {
        e += 1;
    }
    let mult = lb.pow(e);
    let mut rem: Vec<BigInt> = a.iter().map(|c| c * &mult).collect();
    while rem.len() > db {
        let top = rem.last().unwrap().clone();
        if top.is_zero() {
            rem.pop();
            continue;
        }
        let shift = rem.len() - 1 - db;
        // exact by the pseudo-division property
        let q = &top / lb;
        debug_assert_eq!(&q * lb, top);
        for i in 0..db {
            let t = &q * &b[i];
            let r = &rem[shift + i] - t;
            rem[shift + i] = r;
        }
        rem.pop();
    }
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    for c in &mut rem {
        *c = -&*c;
    }
    strip_content(rem)
}

/// Sign of a primitive integer polynomial at the rational p/q, computed by
/// homogenizing with the positive denominator: sign of sum c_i p^i q^(k-i).
fn sign_at(row: &[BigInt], p: &BigInt, q: &BigInt) -> i32 {
    let k = row.len() - 1;
    let mut qpow = vec![BigInt::from(1)];
    for _ in 0..k {
        let next = qpow.last().unwrap() * q;
        qpow.push(next);
    }
    let mut acc = BigInt::zero();
    let mut ppow = BigInt::from(1);
    for (i, c) in row.iter().enumerate() {
        acc += c * &ppow * &qpow[k - i];
        ppow *= p;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

impl RootCounter {
    pub fn new(f: &Polynomial) -> Result<Self, Error> {
        let sf = squarefree_part(f)?;
        let p0 = primitive_int(&sf);
        let mut rows = vec![p0];
        if sf.degree() != Some(0) {
            rows.push(strip_content(int_derivative(&rows[0])));
            loop {
                let n = rows.len();
                if rows[n - 1].len() == 1 {
                    break;
                }
                let r = neg_prim_pseudo_rem(&rows[n - 2], &rows[n - 1]);
                if r.is_empty() {
                    break;
                }
                rows.push(r);
            }
        }
        Ok(RootCounter { sf, rows })
    }

    pub fn squarefree(&self) -> &Polynomial {
        &self.sf
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        sign_at(&self.rows[0], x.numer(), x.denom()) == 0
    }

    fn variations_at(&self, x: &Rational) -> usize {
        let p = x.numer();
        let q = x.denom();
        count_changes(self.rows.iter().map(|row| sign_at(row, p, q)))
    }

    /// Distinct roots in (a, b].
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        debug_assert!(a <= b);
        if a == b {
            return 0;
        }
        let va = self.variations_at(a);
        let vb = self.variations_at(b);
        debug_assert!(va >= vb);
        va - vb
    }

    /// Distinct roots in the interval with the given endpoint inclusions.
    pub fn count(&self, iv: &Interval, include_lo: bool, include_hi: bool) -> usize {
        let mut n = self.count_half_open(iv.lo(), iv.hi()) as i64;
        if include_lo && self.is_root(iv.lo()) {
            n += 1;
        }
        if !include_hi && self.is_root(iv.hi()) {
            n -= 1;
        }
        debug_assert!(n >= 0);
        n as usize
    }

    /// Pairwise-disjoint isolating intervals for the distinct roots in
    /// (lo, hi], in increasing order. Every non-point interval contains its
    /// root strictly inside and has nonroot endpoints; point intervals are
    /// exact rational roots.
    pub fn isolate_in(&self, lo: &Rational, hi: &Rational) -> Vec<Interval> {
        let total = self.count_half_open(lo, hi);
        let mut out = Vec::with_capacity(total);
        self.isolate_rec(lo, hi, total, &mut out);
        self.separate(&mut out);
        out
    }

    fn isolate_rec(&self, lo: &Rational, hi: &Rational, count: usize, out: &mut Vec<Interval>) {
        match count {
            0 => {}
            1 => out.push(self.tighten(lo.clone(), hi.clone())),
            _ => {
                let mid = (lo + hi) * Rational::new(1, 2);
                let left = self.count_half_open(lo, &mid);
                self.isolate_rec(lo, &mid, left, out);
                self.isolate_rec(&mid, hi, count - left, out);
            }
        }
    }

    /// Turns a half-open piece (lo, hi] holding exactly one root into an
    /// isolating interval with nonroot endpoints, or an exact point.
    fn tighten(&self, mut lo: Rational, mut hi: Rational) -> Interval {
        if self.is_root(&hi) {
            return Interval::point(hi);
        }
        while self.is_root(&lo) {
            let mid = (&lo + &hi) * Rational::new(1, 2);
            if self.is_root(&mid) {
                return Interval::point(mid);
            }
            if self.count_half_open(&mid, &hi) == 1 {
                lo = mid;
            } else {
                // the root lies in (lo, mid); shrink from the right
                hi = mid;
            }
        }
        Interval { lo, hi }
    }

    /// Shrinks intervals that share an endpoint so the list is pairwise
    /// disjoint. Only proper intervals with nonroot endpoints can touch.
    fn separate(&self, out: &mut [Interval]) {
        for i in 1..out.len() {
            if out[i - 1].hi() != out[i].lo() {
                continue;
            }
            let a = out[i - 1].lo().clone();
            let b = out[i - 1].hi().clone();
            let mut w = (&b - &a) * Rational::new(1, 2);
            loop {
                let c = &b - &w;
                if self.is_root(&c) {
                    out[i - 1] = Interval::point(c);
                    break;
                }
                if self.count_half_open(&a, &c) == 1 {
                    out[i - 1] = Interval { lo: a, hi: c };
                    break;
                }
                w = w * Rational::new(1, 2);
            }
        }
    }

    /// Bisects an isolating interval until it is narrower than `width`,
    /// collapsing to an exact point whenever a rational root is hit.
    pub fn refine_isolating(&self, iv: &Interval, width: &Rational) -> Result<Interval, Error> {
        if self.count(iv, true, true) != 1 {
            return Err(Error::NotIsolating);
        }
        if iv.is_point() {
            return Ok(iv.clone());
        }
        if self.is_root(iv.lo()) {
            return Ok(Interval::point(iv.lo().clone()));
        }
        if self.is_root(iv.hi()) {
            return Ok(Interval::point(iv.hi().clone()));
        }
        let mut lo = iv.lo().clone();
        let mut hi = iv.hi().clone();
        while &(&hi - &lo) > width {
            let mid = (&lo + &hi) * Rational::new(1, 2);
            if self.is_root(&mid) {
                return Ok(Interval::point(mid));
            }
            if self.count_half_open(&lo, &mid) == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(Interval { lo, hi })
    }
}

/// Distinct real roots of f in the given interval.
pub fn count_distinct_roots(
    f: &Polynomial,
    iv: &Interval,
    include_lo: bool,
    include_hi: bool,
) -> Result<usize, Error> {
    Ok(RootCounter::new(f)?.count(iv, include_lo, include_hi))
}

/// Distinct real roots of f in [0, oo), located inside [0, B] for the
/// Cauchy bound B.
pub fn count_nonneg_roots(f: &Polynomial) -> Result<usize, Error> {
    let b = cauchy_root_bound(f)?;
    let counter = RootCounter::new(f)?;
    Ok(counter.count(&Interval::new(Rational::zero(), b)?, true, true))
}

/// Distinct real roots of f in (0, oo).
pub(crate) fn count_positive_roots(f: &Polynomial) -> Result<usize, Error> {
    let b = cauchy_root_bound(f)?;
    let counter = RootCounter::new(f)?;
    Ok(counter.count_half_open(&Rational::zero(), &b))
}

/// Pairwise-disjoint rational intervals, each holding exactly one distinct
/// real root of f, together covering all of them.
pub fn isolate_roots(f: &Polynomial) -> Result<Vec<Interval>, Error> {
    let b = cauchy_root_bound(f)?;
    let counter = RootCounter::new(f)?;
    Ok(counter.isolate_in(&-&b, &b))
}

/// Like [`isolate_roots`] but restricted to the strictly positive roots.
pub fn isolate_positive_roots(f: &Polynomial) -> Result<Vec<Interval>, Error> {
    let b = cauchy_root_bound(f)?;
    let counter = RootCounter::new(f)?;
    Ok(counter.isolate_in(&Rational::zero(), &b))
}

/// Bisects an isolating interval of f until it is narrower than `width`.
pub fn refine(f: &Polynomial, iv: &Interval, width: &Rational) -> Result<Interval, Error> {
    RootCounter::new(f)?.refine_isolating(iv, width)
}

/// True when every root of f is real, i.e. the number of real roots counted
/// with multiplicity equals the degree. Equivalently the square-free part
/// has as many distinct real roots as its degree.
pub fn is_real_rooted(f: &Polynomial) -> Result<bool, Error> {
    let counter = RootCounter::new(f)?;
    let d = counter.squarefree().degree().unwrap();
    if d == 0 {
        return Ok(true);
    }
    let b = cauchy_root_bound(counter.squarefree())?;
    Ok(counter.count_half_open(&-&b, &b) == d)
}
