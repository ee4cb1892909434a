//! Independent decision routes for index membership, used to cross-check
//! the primary deciders.
//!
//! Tropical membership is re-decided two ways: by testing whether the
//! point (m, log b_m) survives an upper-convex-hull scan of the support
//! (collinear points kept, orientation tests done with exact cross-power
//! comparisons instead of logarithms), and by a definitional sampler that
//! evaluates the max inequality at every pairwise balance point, i.e. each
//! positive real where two terms b_n z^n = b_k z^k agree. Such a point is
//! a radical (b_n/b_k)^(1/(k-n)), and the inequality at it is decided by
//! raising both sides to the (k-n)-th power. Central membership is
//! re-decided by maximizing the balance polynomial g over (0, B]: its
//! maximum sits at the bound B or at a critical point, so it suffices to
//! test g at B, look for common roots of g and g' (tangencies), and read
//! the sign of g on root-free brackets around each critical point.
//!
//! The special cases (index 0, a vanishing b_m, the leading index for the
//! central test) follow the same conventions as the primary deciders.

use crate::error::Error;
use crate::indices::{abs_coeffs, central_balance, check_index, lower_support_empty, Radical};
use crate::poly::Polynomial;
use crate::realroot::{self, RootCounter};
use crate::scalar::Rational;

/// True when (t, log bt) lies strictly below the chord from (s, log bs) to
/// (u, log bu), decided by bt^(u-s) < bs^(u-t) * bu^(t-s).
fn strictly_below(s: (usize, &Rational), t: (usize, &Rational), u: (usize, &Rational)) -> bool {
    let lhs = t.1.pow((u.0 - s.0) as i64);
    let rhs = s.1.pow((u.0 - t.0) as i64) * u.1.pow((t.0 - s.0) as i64);
    lhs < rhs
}

/// Decides tropical membership by scanning the upper convex hull of the
/// support points (n, log b_n), keeping collinear points.
pub fn tropical_by_hull(f: &Polynomial, m: usize) -> Result<bool, Error> {
    check_index(f, m)?;
    if m == 0 {
        return Ok(true);
    }
    let b = abs_coeffs(f);
    if b[m].is_zero() {
        return Ok(lower_support_empty(&b, m));
    }
    let pts: Vec<(usize, &Rational)> = b
        .iter()
        .enumerate()
        .filter(|(_, bn)| !bn.is_zero())
        .collect();
    let mut hull: Vec<(usize, &Rational)> = Vec::with_capacity(pts.len());
    for &p in &pts {
        while hull.len() >= 2 && strictly_below(hull[hull.len() - 2], hull[hull.len() - 1], p) {
            hull.pop();
        }
        hull.push(p);
    }
    Ok(hull.iter().any(|&(n, _)| n == m))
}

/// Checks the max inequality at the radical point r^(1/e) by raising both
/// sides of every comparison to the e-th power.
fn feasible_at_radical(b: &[Rational], m: usize, point: &Radical) -> bool {
    let (r, e) = (point.base(), point.root() as i64);
    let lhs = b[m].pow(e) * r.pow(m as i64);
    b.iter().enumerate().all(|(n, bn)| {
        n == m || bn.is_zero() || bn.pow(e) * r.pow(n as i64) <= lhs
    })
}

/// Decides tropical membership by sampling the defining inequality at
/// every pairwise balance point of the support (plus z = 1). When m is
/// tropical the binding bound L or U is itself such a balance point.
pub fn tropical_by_balance_points(f: &Polynomial, m: usize) -> Result<bool, Error> {
    check_index(f, m)?;
    if m == 0 {
        return Ok(true);
    }
    let b = abs_coeffs(f);
    if b[m].is_zero() {
        return Ok(lower_support_empty(&b, m));
    }
    let support: Vec<usize> = f.support();
    for (i, &n) in support.iter().enumerate() {
        for &k in &support[i + 1..] {
            let balance = Radical::new(&b[n] / &b[k], (k - n) as u32);
            if feasible_at_radical(&b, m, &balance) {
                return Ok(true);
            }
        }
    }
    Ok(feasible_at_radical(&b, m, &Radical::new(Rational::one(), 1)))
}

/// Decides central membership by maximizing the balance polynomial g over
/// (0, B]: true iff g(B) >= 0, or g and g' share a root in (0, B], or g is
/// positive at some critical point.
pub fn central_by_maximizer(f: &Polynomial, m: usize) -> Result<bool, Error> {
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
    let g1 = g.derivative();
    let zero = Rational::zero();
    let bound = realroot::cauchy_root_bound(&g)?;
    if !g.evaluate(&bound).is_negative() {
        return Ok(true);
    }
    // tangency: a common root of g and g' is a point where g = 0 exactly
    let common = realroot::gcd(&g, &g1)?;
    if common.degree().unwrap() >= 1
        && RootCounter::new(&common)?.count_half_open(&zero, &bound) >= 1
    {
        return Ok(true);
    }
    let g_counter = RootCounter::new(&g)?;
    let crit_counter = RootCounter::new(&g1)?;
    for crit in crit_counter.isolate_in(&zero, &bound) {
        // shrink the bracket until g has no root inside, so its sign there
        // is constant; the critical point itself is never a root of g here
        let mut iv = crit;
        while g_counter.count(&iv, true, true) > 0 {
            let narrower = iv.width() * Rational::new(1, 2);
            iv = crit_counter.refine_isolating(&iv, &narrower)?;
        }
        if g.evaluate(&iv.midpoint()).is_positive() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{is_central_index, is_tropical_index};

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    fn family() -> Vec<Polynomial> {
        vec![
            p(&[1, 1, 1]),
            p(&[1, 2, 1]),
            p(&[1, 3, 1]),
            p(&[1, 1, 3]),
            p(&[1, 2, 2]),
            p(&[0, 1, 1, 3]),
            p(&[1, 0, 0, 1]),
            p(&[0, 0, 0, 1]),
            p(&[5]),
            p(&[2, -3, 0, 1]),
            p(&[3, -1, 4, -1, 5]),
            Polynomial::geometric(4),
            Polynomial::from_strs(&["4", "0", "1", "0", "1/4"]).unwrap(),
            Polynomial::from_strs(&["2", "0", "1", "0", "1/2"]).unwrap(),
            Polynomial::from_strs(&["1/3", "2", "1/2", "1"]).unwrap(),
        ]
    }

    #[test]
    fn hull_route_matches_the_cross_power_decider() {
        for f in family() {
            for m in 0..=f.degree().unwrap() {
                assert_eq!(
                    tropical_by_hull(&f, m).unwrap(),
                    is_tropical_index(&f, m).unwrap(),
                    "hull disagrees for {f} at {m}"
                );
            }
        }
    }

    #[test]
    fn balance_point_route_matches_the_cross_power_decider() {
        for f in family() {
            for m in 0..=f.degree().unwrap() {
                assert_eq!(
                    tropical_by_balance_points(&f, m).unwrap(),
                    is_tropical_index(&f, m).unwrap(),
                    "sampler disagrees for {f} at {m}"
                );
            }
        }
    }

    #[test]
    fn maximizer_route_matches_the_root_count_decider() {
        for f in family() {
            for m in 0..=f.degree().unwrap() {
                assert_eq!(
                    central_by_maximizer(&f, m).unwrap(),
                    is_central_index(&f, m).unwrap(),
                    "maximizer disagrees for {f} at {m}"
                );
            }
        }
    }

    #[test]
    fn maximizer_detects_tangency() {
        // g = 2z - 1 - z^2 touches zero at the double root 1
        assert!(central_by_maximizer(&p(&[1, 2, 1]), 1).unwrap());
        // discriminant -3: the maximum of g is strictly negative
        assert!(!central_by_maximizer(&p(&[1, 1, 1]), 1).unwrap());
    }

    #[test]
    fn hull_keeps_collinear_points() {
        // log-coefficients are collinear: every index is on the hull
        let f = p(&[1, 2, 4, 8]);
        for m in 0..=3 {
            assert!(tropical_by_hull(&f, m).unwrap());
        }
    }
}
