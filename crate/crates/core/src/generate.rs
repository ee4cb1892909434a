//! Seeded random generators for polynomials and multiplier sequences.
//!
//! All randomized verification uses the ChaCha8 stream cipher generator:
//! seedable, platform-independent, and splittable into independent streams.
//! Each (claim lane, trial index) pair gets its own stream derived from
//! the user seed, so trials are reproducible in isolation and identical
//! whether run serially or in parallel.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::indices;
use crate::multiplier::Multipliers;
use crate::poly::Polynomial;
use crate::scalar::Rational;

/// The generator for one trial: seeded by the user seed, streamed by lane
/// (one per claim) and trial index.
pub fn trial_rng(seed: u64, lane: u64, trial: u64) -> ChaCha8Rng {
    debug_assert!(trial < 1 << 56, "trial index must leave room for the lane tag");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((lane << 56) ^ trial);
    rng
}

/// A rational with numerator in -9..=9 (zero allowed) and denominator in 1..=4.
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

/// A nonzero rational with numerator magnitude in 1..=9.
pub fn random_nonzero_rational(rng: &mut impl Rng) -> Rational {
    let mag = rng.gen_range(1..=9);
    let numer = if rng.gen::<bool>() { mag } else { -mag };
    Rational::new(numer, rng.gen_range(1..=4))
}

/// A positive rational with numerator in 1..=9 and denominator in 1..=4.
pub fn random_positive_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(1..=9), rng.gen_range(1..=4))
}

/// A polynomial of exactly the requested degree; interior coefficients may
/// be zero or negative.
pub fn random_polynomial(rng: &mut impl Rng, degree: usize) -> Polynomial {
    let mut coeffs: Vec<Rational> = (0..degree).map(|_| random_rational(rng)).collect();
    coeffs.push(random_nonzero_rational(rng));
    Polynomial::new(coeffs)
}

/// A polynomial of exactly the requested degree with positive coefficients.
pub fn random_positive_polynomial(rng: &mut impl Rng, degree: usize) -> Polynomial {
    Polynomial::new((0..=degree).map(|_| random_positive_rational(rng)).collect())
}

/// A polynomial of exactly the requested degree with every coefficient
/// nonzero.
pub fn random_full_support_polynomial(rng: &mut impl Rng, degree: usize) -> Polynomial {
    Polynomial::new((0..=degree).map(|_| random_nonzero_rational(rng)).collect())
}

/// A log-concave positive sequence of the requested length, built from a
/// descending chain of consecutive ratios: with gamma_{n+1} = gamma_n *
/// r_{n+1} and r_1 >= r_2 >= ..., log-concavity holds by construction.
/// Ratios are drawn from a small pool so equality cases occur.
pub fn random_log_concave(rng: &mut impl Rng, len: usize) -> Multipliers {
    assert!(len >= 1);
    let mut ratios: Vec<Rational> = (1..len)
        .map(|_| Rational::new(rng.gen_range(1..=4), rng.gen_range(1..=3)))
        .collect();
    ratios.sort_by(|a, b| b.cmp(a));
    let mut gamma = Vec::with_capacity(len);
    gamma.push(random_positive_rational(rng));
    for r in &ratios {
        let next = gamma.last().unwrap() * r;
        gamma.push(next);
    }
    let gamma = Multipliers::new(gamma).expect("entries are positive by construction");
    debug_assert!(gamma.is_log_concave());
    gamma
}

/// A sequence of the requested length (at least 3) that is not log-concave:
/// one interior entry of a log-concave sequence is pushed down past the
/// slack, so the first violation lands exactly there.
pub fn random_non_log_concave(rng: &mut impl Rng, len: usize) -> Multipliers {
    assert!(len >= 3);
    let base = random_log_concave(rng, len);
    let j = rng.gen_range(1..=len - 2);
    let mut gamma = base.entries().to_vec();
    // q = gamma_{j-1} gamma_{j+1} / gamma_j^2 <= 1; scaling gamma_j by q/2
    // makes the comparison at j fail while neighbors only get easier
    let q = &gamma[j - 1] * &gamma[j + 1] / gamma[j].pow(2);
    gamma[j] = &gamma[j] * &(q * Rational::new(1, 2));
    let gamma = Multipliers::new(gamma).expect("entries stay positive");
    debug_assert_eq!(gamma.first_violation(), Some(j));
    gamma
}

/// A sign-independently real-rooted polynomial of degree 1..=max_degree:
/// random full-support draws gated by the brute-force sweep, falling back
/// to the strongly log-concave family a_n = 4^(d^2 - n^2), whose terms are
/// so separated that every index is central.
pub fn random_sirr_polynomial(rng: &mut impl Rng, max_degree: usize) -> Polynomial {
    let d = rng.gen_range(1..=max_degree);
    for _ in 0..40 {
        let f = random_full_support_polynomial(rng, d);
        if indices::sirr_bruteforce(&f) == Ok(true) {
            return f;
        }
    }
    let coeffs = (0..=d)
        .map(|n| Rational::from_int(4).pow((d * d - n * n) as i64))
        .collect();
    let f = Polynomial::new(coeffs);
    debug_assert_eq!(indices::is_sign_independently_real_rooted(&f), Ok(true));
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_independent() {
        let a: Vec<u64> = (0..4).map(|t| trial_rng(42, 1, t).gen()).collect();
        let b: Vec<u64> = (0..4).map(|t| trial_rng(42, 1, t).gen()).collect();
        assert_eq!(a, b);
        let other_lane: Vec<u64> = (0..4).map(|t| trial_rng(42, 2, t).gen()).collect();
        assert_ne!(a, other_lane);
        let other_seed: Vec<u64> = (0..4).map(|t| trial_rng(43, 1, t).gen()).collect();
        assert_ne!(a, other_seed);
    }

    #[test]
    fn polynomial_generators_hit_their_contracts() {
        let mut rng = trial_rng(7, 90, 0);
        for d in 1..=8 {
            assert_eq!(random_polynomial(&mut rng, d).degree(), Some(d));
            let pos = random_positive_polynomial(&mut rng, d);
            assert!(pos.coeffs().iter().all(Rational::is_positive));
            let full = random_full_support_polynomial(&mut rng, d);
            assert!(full.coeffs().iter().all(|c| !c.is_zero()));
        }
    }

    #[test]
    fn sequence_generators_hit_their_contracts() {
        let mut rng = trial_rng(7, 91, 0);
        for len in 1..=13 {
            assert!(random_log_concave(&mut rng, len).is_log_concave());
        }
        for len in 3..=13 {
            let gamma = random_non_log_concave(&mut rng, len);
            assert!(!gamma.is_log_concave());
            assert_eq!(gamma.len(), len);
        }
    }

    #[test]
    fn sirr_generator_output_is_sirr() {
        let mut rng = trial_rng(7, 92, 0);
        for _ in 0..10 {
            let f = random_sirr_polynomial(&mut rng, 4);
            assert_eq!(indices::sirr_bruteforce(&f), Ok(true), "not SIRR: {f}");
        }
    }
}
