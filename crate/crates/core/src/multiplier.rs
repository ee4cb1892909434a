//! Positive multiplier sequences acting diagonally on polynomials, the
//! log-concavity test, and the machinery connecting it to index
//! preservation.
//!
//! A sequence gamma = (gamma_0, ..., gamma_N) of positive rationals acts
//! on polynomials by z^n -> gamma_n z^n. The library verifies, instance by
//! instance, the characterization this crate is built around:
//!
//! * gamma log-concave (gamma_n^2 >= gamma_{n-1} gamma_{n+1} for all
//!   interior n) implies every tropical and every central index of f stays
//!   an index of the image T_gamma f, with an explicit combined witness
//!   z_m * zeta_m where z_m is f's witness and zeta_m =
//!   sqrt(gamma_{m-1}/gamma_{m+1}) is the witness at which the symbol
//!   P_gamma(z) = sum gamma_n z^n attains its max at index m;
//! * gamma not log-concave yields concrete counterexamples: the geometric
//!   polynomial 1 + z + ... + z^{m+1} loses tropical index m, and the
//!   trinomial z^{m-1} + 2 z^m + z^{m+1} loses central index m, where m is
//!   the least violation.
//!
//! All square-root comparisons are resolved by squaring positive
//! quantities; nothing here leaves exact arithmetic.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::Error;
use crate::indices::{
    self, central_balance, is_central_index, is_sign_independently_real_rooted,
    is_tropical_index, is_tropically_real_rooted, Witness,
};
use crate::poly::Polynomial;
use crate::realroot;
use crate::scalar::Rational;

/// The square root of a nonnegative rational, kept symbolic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SqrtRational {
    radicand: Rational,
}

impl SqrtRational {
    pub fn new(radicand: Rational) -> Result<Self, Error> {
        if radicand.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        Ok(SqrtRational { radicand })
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    /// The exact rational value when the radicand is a perfect square.
    pub fn to_rational(&self) -> Option<Rational> {
        self.radicand.sqrt_exact()
    }

    /// Compares sqrt(r) with a rational by squaring.
    pub fn cmp_rational(&self, q: &Rational) -> Ordering {
        if q.is_negative() {
            return Ordering::Greater;
        }
        self.radicand.cmp(&q.pow(2))
    }
}

/// Square roots compare like their radicands.
impl Ord for SqrtRational {
    fn cmp(&self, other: &SqrtRational) -> Ordering {
        self.radicand.cmp(&other.radicand)
    }
}

impl PartialOrd for SqrtRational {
    fn partial_cmp(&self, other: &SqrtRational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SqrtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_rational() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "sqrt({})", self.radicand),
        }
    }
}

/// Compares a * sqrt(r)^i with b * sqrt(r)^j for nonnegative rationals
/// a, b, r, by pulling out even powers and squaring once if needed.
fn cmp_sqrt_power_products(
    a: &Rational,
    i: usize,
    b: &Rational,
    j: usize,
    r: &Rational,
) -> Ordering {
    debug_assert!(!a.is_negative() && !b.is_negative() && !r.is_negative());
    let ar = a * r.pow((i / 2) as i64);
    let br = b * r.pow((j / 2) as i64);
    match (i % 2, j % 2) {
        (0, 0) | (1, 1) => ar.cmp(&br),
        (1, 0) => (ar.pow(2) * r).cmp(&br.pow(2)),
        (0, 1) => ar.pow(2).cmp(&(br.pow(2) * r)),
        _ => unreachable!(),
    }
}

/// Which index notion a preservation question is about.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexKind {
    Tropical,
    Central,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexKind::Tropical => write!(f, "tropical"),
            IndexKind::Central => write!(f, "central"),
        }
    }
}

/// Outcome of checking that the indices of f survive into T_gamma f.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PreservationVerdict {
    pub holds: bool,
    pub violating_index: Option<usize>,
    pub before: Vec<usize>,
    pub after: Vec<usize>,
}

impl PreservationVerdict {
    fn from_sets(before: Vec<usize>, after: Vec<usize>) -> Self {
        let violating_index = before.iter().copied().find(|m| !after.contains(m));
        PreservationVerdict { holds: violating_index.is_none(), violating_index, before, after }
    }
}

/// Classification of a positive sequence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceClass {
    /// Log-concave, hence an index preserver.
    TropicalMultiplier,
    /// Not log-concave; the least index with gamma_m^2 < gamma_{m-1} gamma_{m+1}.
    NotLogConcave { violating_index: usize },
}

impl fmt::Display for SequenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceClass::TropicalMultiplier => {
                write!(f, "tropical multiplier sequence (log-concave)")
            }
            SequenceClass::NotLogConcave { violating_index } => {
                write!(f, "not log-concave (first violation at index {violating_index})")
            }
        }
    }
}

/// A finite prefix of a positive multiplier sequence.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Multipliers {
    gamma: Vec<Rational>,
}

impl<'de> Deserialize<'de> for Multipliers {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            gamma: Vec<Rational>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Multipliers::new(raw.gamma).map_err(serde::de::Error::custom)
    }
}

impl Multipliers {
    /// Validates positivity of every entry.
    pub fn new(gamma: Vec<Rational>) -> Result<Self, Error> {
        if gamma.is_empty() {
            return Err(Error::SequenceTooShort { needed: 1, got: 0 });
        }
        for (index, g) in gamma.iter().enumerate() {
            if !g.is_positive() {
                return Err(Error::NonPositiveEntry { index });
            }
        }
        Ok(Multipliers { gamma })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self, Error> {
        Self::new(entries.iter().map(|&n| Rational::from_int(n)).collect())
    }

    pub fn from_strs(entries: &[&str]) -> Result<Self, Error> {
        let gamma = entries
            .iter()
            .map(|s| s.parse())
            .collect::<Result<Vec<Rational>, Error>>()?;
        Self::new(gamma)
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.gamma
    }

    pub fn entry(&self, n: usize) -> &Rational {
        &self.gamma[n]
    }

    /// The least interior index violating gamma_n^2 >= gamma_{n-1} gamma_{n+1}.
    pub fn first_violation(&self) -> Option<usize> {
        (1..self.gamma.len().saturating_sub(1))
            .find(|&n| self.gamma[n].pow(2) < &self.gamma[n - 1] * &self.gamma[n + 1])
    }

    pub fn is_log_concave(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn classify(&self) -> SequenceClass {
        match self.first_violation() {
            None => SequenceClass::TropicalMultiplier,
            Some(violating_index) => SequenceClass::NotLogConcave { violating_index },
        }
    }

    /// The diagonal action T_gamma f: coefficient a_n becomes gamma_n a_n.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, Error> {
        let Some(d) = f.degree() else {
            return Ok(Polynomial::zero());
        };
        if self.gamma.len() < d + 1 {
            return Err(Error::SequenceTooShort { needed: d + 1, got: self.gamma.len() });
        }
        let coeffs = f
            .coeffs()
            .iter()
            .zip(&self.gamma)
            .map(|(a, g)| a * g)
            .collect();
        Ok(Polynomial::new(coeffs))
    }

    /// The symbol P_gamma(z) = sum of gamma_n z^n up to degree d.
    pub fn symbol(&self, d: usize) -> Result<Polynomial, Error> {
        if self.gamma.len() < d + 1 {
            return Err(Error::SequenceTooShort { needed: d + 1, got: self.gamma.len() });
        }
        Ok(Polynomial::new(self.gamma[..=d].to_vec()))
    }

    /// Whether the degree-d symbol has every index tropical. Equivalent to
    /// log-concavity of the prefix; verified against it in the test suites.
    pub fn is_symbol_tropically_real_rooted(&self, d: usize) -> Result<bool, Error> {
        is_tropically_real_rooted(&self.symbol(d)?)
    }

    /// The symbol's witness at interior index m:
    /// zeta_m = sqrt(gamma_{m-1}/gamma_{m+1}).
    pub fn symbol_witness(&self, m: usize) -> Result<SqrtRational, Error> {
        if m == 0 || m + 1 >= self.gamma.len() {
            return Err(Error::IndexOutOfRange { index: m, degree: self.gamma.len() - 1 });
        }
        if let Some(violating_index) = self.first_violation() {
            return Err(Error::NotLogConcave { violating_index });
        }
        SqrtRational::new(&self.gamma[m - 1] / &self.gamma[m + 1])
    }
}

/// Verifies the symbol witness zeta_m by exact squared comparisons: the
/// max inequality gamma_m zeta_m^m >= gamma_n zeta_m^n for every n <= d,
/// and the non-decreasing chain zeta_1 <= zeta_2 <= ... across the prefix.
pub fn verify_symbol_witness(gamma: &Multipliers, m: usize, d: usize) -> Result<bool, Error> {
    if gamma.len() < d + 1 {
        return Err(Error::SequenceTooShort { needed: d + 1, got: gamma.len() });
    }
    if m == 0 || m > d {
        return Err(Error::IndexOutOfRange { index: m, degree: d });
    }
    let zeta = gamma.symbol_witness(m)?;
    let r = zeta.radicand();
    for n in 0..=d {
        if n == m {
            continue;
        }
        if cmp_sqrt_power_products(gamma.entry(m), m, gamma.entry(n), n, r) == Ordering::Less {
            return Ok(false);
        }
    }
    for j in 1..gamma.len().saturating_sub(2) {
        let here = gamma.symbol_witness(j)?;
        let next = gamma.symbol_witness(j + 1)?;
        if here.cmp(&next) == Ordering::Greater {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks that the tropical indices of f all remain tropical indices of
/// T_gamma f, reporting the first loss if any.
pub fn preserves_tropical_on(
    gamma: &Multipliers,
    f: &Polynomial,
) -> Result<PreservationVerdict, Error> {
    let image = gamma.apply(f)?;
    let before = indices::tropical_indices(f)?;
    let after = indices::tropical_indices(&image)?;
    Ok(PreservationVerdict::from_sets(before, after))
}

/// Checks that the central indices of f all remain central indices of
/// T_gamma f, reporting the first loss if any.
pub fn preserves_central_on(
    gamma: &Multipliers,
    f: &Polynomial,
) -> Result<PreservationVerdict, Error> {
    let image = gamma.apply(f)?;
    let before = indices::central_indices(f)?;
    let after = indices::central_indices(&image)?;
    Ok(PreservationVerdict::from_sets(before, after))
}

/// Recovers the rational tangency point of the balance polynomial, when
/// there is one: the positive root of gcd(g, g'), ignoring factors of z.
fn rational_tangency_root(f: &Polynomial, m: usize) -> Option<Rational> {
    let g = central_balance(f, m);
    let h = realroot::gcd(&g, &g.derivative()).ok()?;
    let coeffs = h.coeffs();
    let v = coeffs.iter().position(|c| !c.is_zero())?;
    let shifted = &coeffs[v..];
    if shifted.len() != 2 {
        return None;
    }
    // h is monic, so the shifted part is z + c and the root is -c
    let root = -&shifted[0];
    root.is_positive().then_some(root)
}

/// A witness that index m of f survives into T_gamma f, for log-concave
/// gamma.
///
/// Prefers the product z_m * zeta_m of f's witness with the symbol
/// witness, which certifies the image whenever both factors are exact
/// rationals (a tangency witness for f is first collapsed to its rational
/// double root when possible). When the product is irrational the image's
/// own witness is computed instead; the preservation theorem guarantees it
/// exists, and ties surface as certified isolating intervals.
pub fn preservation_witness(
    gamma: &Multipliers,
    f: &Polynomial,
    m: usize,
    kind: IndexKind,
) -> Result<Witness, Error> {
    if let Some(violating_index) = gamma.first_violation() {
        return Err(Error::NotLogConcave { violating_index });
    }
    let is_index = match kind {
        IndexKind::Tropical => is_tropical_index(f, m)?,
        IndexKind::Central => is_central_index(f, m)?,
    };
    if !is_index {
        return Err(Error::NotAnIndex { index: m });
    }
    let image = gamma.apply(f)?;
    if m == 0 {
        return Ok(Witness::PointAtZero);
    }
    let base = match kind {
        IndexKind::Tropical => indices::tropical_witness(f, m)?,
        IndexKind::Central => indices::central_witness(f, m)?,
    };
    let z_m = match base {
        // a zero pattern is untouched by the positive diagonal action
        Witness::PointAtZero => return Ok(Witness::PointAtZero),
        Witness::Point(z) => Some(z),
        Witness::Interval(_) => match kind {
            IndexKind::Central => rational_tangency_root(f, m),
            IndexKind::Tropical => None,
        },
    };
    if let Some(z) = z_m {
        if m + 1 < gamma.len() {
            if let Some(zeta) = gamma.symbol_witness(m)?.to_rational() {
                let product = z * zeta;
                let w = Witness::Point(product);
                let ok = match kind {
                    IndexKind::Tropical => indices::verify_tropical_witness(&image, m, &w)?,
                    IndexKind::Central => indices::verify_central_witness(&image, m, &w)?,
                };
                debug_assert!(ok, "product witness must certify the image");
                if ok {
                    return Ok(w);
                }
            }
        }
    }
    match kind {
        IndexKind::Tropical => indices::tropical_witness(&image, m),
        IndexKind::Central => indices::central_witness(&image, m),
    }
}

/// The converse construction for tropical indices: for non-log-concave
/// gamma with least violation m, index m of 1 + z + ... + z^{m+1} does not
/// survive the action.
pub fn counterexample_tropical(gamma: &Multipliers) -> Result<(Polynomial, usize), Error> {
    let m = gamma.first_violation().ok_or(Error::IsLogConcave)?;
    Ok((Polynomial::geometric(m + 1), m))
}

/// The converse construction for central indices: for non-log-concave
/// gamma with least violation m, index m of z^{m-1} + 2 z^m + z^{m+1} does
/// not survive the action (the transformed balance has negative
/// discriminant).
pub fn counterexample_central(gamma: &Multipliers) -> Result<(Polynomial, usize), Error> {
    let m = gamma.first_violation().ok_or(Error::IsLogConcave)?;
    Ok((Polynomial::trinomial(m)?, m))
}

/// Whether the diagonal action preserves sign-independent real-rootedness
/// on this input: vacuously true when f lacks the property, otherwise true
/// iff the image has it too.
pub fn preserves_sirr_on(gamma: &Multipliers, f: &Polynomial) -> Result<bool, Error> {
    let image = gamma.apply(f)?;
    if !is_sign_independently_real_rooted(f)? {
        return Ok(true);
    }
    is_sign_independently_real_rooted(&image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{verify_central_witness, verify_tropical_witness};

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn seq(entries: &[i64]) -> Multipliers {
        Multipliers::from_ints(entries).unwrap()
    }

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_ints(coeffs)
    }

    #[test]
    fn log_concavity_examples() {
        assert!(seq(&[1, 1, 1, 1]).is_log_concave());
        assert!(seq(&[1, 2, 4, 8]).is_log_concave());
        assert!(!seq(&[1, 1, 2]).is_log_concave());
        assert_eq!(seq(&[1, 1, 2]).first_violation(), Some(1));
        assert_eq!(seq(&[1, 1, 1, 9]).first_violation(), Some(2));
    }

    #[test]
    fn construction_validates_entries() {
        assert!(matches!(
            Multipliers::from_ints(&[1, 0, 2]),
            Err(Error::NonPositiveEntry { index: 1 })
        ));
        assert!(matches!(
            Multipliers::from_ints(&[1, -3]),
            Err(Error::NonPositiveEntry { index: 1 })
        ));
        assert!(matches!(
            Multipliers::new(vec![]),
            Err(Error::SequenceTooShort { needed: 1, got: 0 })
        ));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(seq(&[1, 2, 4, 8]).classify(), SequenceClass::TropicalMultiplier);
        assert_eq!(
            seq(&[1, 1, 2]).classify(),
            SequenceClass::NotLogConcave { violating_index: 1 }
        );
        assert_eq!(seq(&[6, 3, 1]).classify(), SequenceClass::TropicalMultiplier);
    }

    #[test]
    fn diagonal_action() {
        let gamma = seq(&[1, 2, 4]);
        assert_eq!(gamma.apply(&p(&[1, 2, 1])).unwrap(), p(&[1, 4, 4]));
        assert!(matches!(
            gamma.apply(&p(&[1, 0, 0, 1])),
            Err(Error::SequenceTooShort { needed: 4, got: 3 })
        ));
        assert_eq!(gamma.apply(&Polynomial::zero()).unwrap(), Polynomial::zero());
    }

    #[test]
    fn symbol_and_its_tropical_test() {
        let gamma = seq(&[1, 2, 2]);
        assert_eq!(gamma.symbol(2).unwrap(), p(&[1, 2, 2]));
        assert!(gamma.is_symbol_tropically_real_rooted(2).unwrap());
        assert!(seq(&[1, 1, 1]).is_symbol_tropically_real_rooted(2).unwrap());
        assert!(!seq(&[1, 1, 2]).is_symbol_tropically_real_rooted(2).unwrap());
    }

    #[test]
    fn symbol_witness_examples() {
        assert_eq!(seq(&[1, 1, 1]).symbol_witness(1).unwrap().to_rational(), Some(q("1")));
        assert_eq!(seq(&[1, 2, 4]).symbol_witness(1).unwrap().to_rational(), Some(q("1/2")));
        assert_eq!(seq(&[4, 2, 1]).symbol_witness(1).unwrap().to_rational(), Some(q("2")));
        let irrational = seq(&[2, 2, 1]).symbol_witness(1).unwrap();
        assert_eq!(irrational.to_rational(), None);
        assert_eq!(irrational.radicand(), &q("2"));
        assert!(matches!(
            seq(&[1, 1, 2]).symbol_witness(1),
            Err(Error::NotLogConcave { violating_index: 1 })
        ));
        assert!(matches!(seq(&[1, 1, 1]).symbol_witness(0), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(seq(&[1, 1, 1]).symbol_witness(2), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn sqrt_comparisons_square_exactly() {
        let root_two = SqrtRational::new(q("2")).unwrap();
        assert_eq!(root_two.cmp_rational(&q("7/5")), Ordering::Greater);
        assert_eq!(root_two.cmp_rational(&q("3/2")), Ordering::Less);
        assert_eq!(root_two.cmp_rational(&q("-1")), Ordering::Greater);
        let root_half = SqrtRational::new(q("1/2")).unwrap();
        assert_eq!(root_two.cmp(&root_half), Ordering::Greater);
        assert!(SqrtRational::new(q("-1")).is_err());
    }

    #[test]
    fn symbol_witness_verifies() {
        assert!(verify_symbol_witness(&seq(&[1, 1, 1, 1]), 1, 3).unwrap());
        assert!(verify_symbol_witness(&seq(&[1, 1, 1, 1]), 2, 3).unwrap());
        assert!(verify_symbol_witness(&seq(&[1, 2, 4, 8]), 2, 3).unwrap());
        assert!(verify_symbol_witness(&seq(&[1, 3, 4, 3]), 1, 3).unwrap());
        assert!(verify_symbol_witness(&seq(&[2, 2, 1]), 1, 2).unwrap());
    }

    #[test]
    fn tropical_preservation_verdicts() {
        let verdict = preserves_tropical_on(&seq(&[1, 1, 2]), &Polynomial::geometric(2)).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.violating_index, Some(1));
        assert_eq!(verdict.before, vec![0, 1, 2]);
        assert_eq!(verdict.after, vec![0, 2]);

        let identity = preserves_tropical_on(&seq(&[1, 1, 1]), &p(&[1, 1, 1])).unwrap();
        assert!(identity.holds && identity.violating_index.is_none());

        let concave = preserves_tropical_on(&seq(&[1, 2, 2]), &p(&[1, 3, 1])).unwrap();
        assert!(concave.holds);
    }

    #[test]
    fn central_preservation_verdicts() {
        let verdict = preserves_central_on(&seq(&[1, 1, 2]), &p(&[1, 2, 1])).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.violating_index, Some(1));

        let identity = preserves_central_on(&seq(&[1, 1, 1]), &p(&[1, 2, 1])).unwrap();
        assert!(identity.holds);
    }

    #[test]
    fn preservation_witness_examples() {
        let w = preservation_witness(&seq(&[1, 1, 1]), &p(&[1, 1, 1]), 1, IndexKind::Tropical)
            .unwrap();
        assert_eq!(w, Witness::Point(q("1")));

        // tangency of f collapses to its rational double root, and the
        // symbol witness sqrt(1/4) scales it to 1/2 on the image
        let w = preservation_witness(&seq(&[1, 2, 4]), &p(&[1, 2, 1]), 1, IndexKind::Central)
            .unwrap();
        assert_eq!(w, Witness::Point(q("1/2")));

        let w = preservation_witness(&seq(&[4, 2, 1]), &p(&[1, 1]), 1, IndexKind::Central)
            .unwrap();
        assert_eq!(w, Witness::Point(q("4")));
    }

    #[test]
    fn preservation_witness_requires_log_concavity_and_an_index() {
        assert!(matches!(
            preservation_witness(&seq(&[1, 1, 2]), &p(&[1, 1, 1]), 1, IndexKind::Tropical),
            Err(Error::NotLogConcave { violating_index: 1 })
        ));
        assert!(matches!(
            preservation_witness(&seq(&[1, 1, 1]), &p(&[1, 1, 1]), 1, IndexKind::Central),
            Err(Error::NotAnIndex { index: 1 })
        ));
    }

    #[test]
    fn preservation_witnesses_verify_on_the_image() {
        let gammas = [
            seq(&[1, 1, 1, 1, 1]),
            seq(&[1, 2, 4, 8, 16]),
            seq(&[16, 8, 4, 2, 1]),
            seq(&[1, 3, 4, 3, 1]),
            Multipliers::from_strs(&["2", "2", "1", "1/3", "1/10"]).unwrap(),
        ];
        let polys = [
            p(&[1, 1, 1]),
            p(&[1, 2, 1]),
            p(&[1, 3, 1]),
            p(&[2, -3, 0, 1]),
            p(&[0, 1, 1]),
            Polynomial::geometric(4),
        ];
        for gamma in &gammas {
            for f in &polys {
                let image = gamma.apply(f).unwrap();
                for m in 0..=f.degree().unwrap() {
                    if is_tropical_index(f, m).unwrap() {
                        let w =
                            preservation_witness(gamma, f, m, IndexKind::Tropical).unwrap();
                        assert!(
                            verify_tropical_witness(&image, m, &w).unwrap(),
                            "tropical witness {w} fails on {image} at {m}"
                        );
                    }
                    if is_central_index(f, m).unwrap() {
                        let w = preservation_witness(gamma, f, m, IndexKind::Central).unwrap();
                        assert!(
                            verify_central_witness(&image, m, &w).unwrap(),
                            "central witness {w} fails on {image} at {m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn counterexample_constructions() {
        let (f, m) = counterexample_tropical(&seq(&[1, 1, 2])).unwrap();
        assert_eq!((f, m), (p(&[1, 1, 1]), 1));
        let (f, m) = counterexample_tropical(&seq(&[1, 2, 5])).unwrap();
        assert_eq!((f, m), (p(&[1, 1, 1]), 1));
        let (f, m) = counterexample_tropical(&seq(&[1, 1, 1, 2])).unwrap();
        assert_eq!((f, m), (Polynomial::geometric(3), 2));

        let (f, m) = counterexample_central(&seq(&[1, 1, 2])).unwrap();
        assert_eq!((f, m), (p(&[1, 2, 1]), 1));
        let (f, m) = counterexample_central(&seq(&[1, 1, 1, 9])).unwrap();
        assert_eq!((f, m), (p(&[0, 1, 2, 1]), 2));
        let (f, m) = counterexample_central(&seq(&[4, 2, 2])).unwrap();
        assert_eq!((f, m), (p(&[1, 2, 1]), 1));

        assert!(matches!(counterexample_tropical(&seq(&[1, 2, 4, 8])), Err(Error::IsLogConcave)));
        assert!(matches!(counterexample_central(&seq(&[1, 1, 1])), Err(Error::IsLogConcave)));
    }

    #[test]
    fn counterexamples_fail_end_to_end() {
        for gamma in [seq(&[1, 1, 2]), seq(&[1, 1, 1, 9]), seq(&[4, 2, 2]), seq(&[3, 1, 1])] {
            let (f, m) = counterexample_tropical(&gamma).unwrap();
            assert!(is_tropical_index(&f, m).unwrap());
            assert!(!is_tropical_index(&gamma.apply(&f).unwrap(), m).unwrap());

            let (f, m) = counterexample_central(&gamma).unwrap();
            assert!(is_central_index(&f, m).unwrap());
            assert!(!is_central_index(&gamma.apply(&f).unwrap(), m).unwrap());
        }
    }

    #[test]
    fn sirr_preservation_examples() {
        assert!(preserves_sirr_on(&seq(&[1, 2, 2]), &p(&[1, 2, 1])).unwrap());
        assert!(!preserves_sirr_on(&seq(&[1, 1, 2]), &p(&[1, 2, 1])).unwrap());
        assert!(preserves_sirr_on(&seq(&[1, 1, 1]), &p(&[1, 2, 1])).unwrap());
        // vacuous when f is not sign-independently real-rooted
        assert!(preserves_sirr_on(&seq(&[1, 1, 2]), &p(&[1, 1, 1])).unwrap());
        assert!(matches!(
            preserves_sirr_on(&seq(&[1, 1, 1]), &p(&[1, 0, 1])),
            Err(Error::ZeroCoefficient { index: 1 })
        ));
    }

    #[test]
    fn multipliers_json_round_trip() {
        let gamma = Multipliers::from_strs(&["1", "2", "4/3"]).unwrap();
        let json = serde_json::to_string(&gamma).unwrap();
        assert_eq!(json, r#"{"gamma":["1","2","4/3"]}"#);
        let back: Multipliers = serde_json::from_str(&json).unwrap();
        assert_eq!(back, gamma);
        assert!(serde_json::from_str::<Multipliers>(r#"{"gamma":["1","-2"]}"#).is_err());
    }

    #[test]
    fn verdict_json_shape() {
        let verdict = PreservationVerdict {
            holds: false,
            violating_index: Some(1),
            before: vec![0, 1, 2],
            after: vec![0, 2],
        };
        assert_eq!(
            serde_json::to_string(&verdict).unwrap(),
            r#"{"holds":false,"violating_index":1,"before":[0,1,2],"after":[0,2]}"#
        );
    }
}
