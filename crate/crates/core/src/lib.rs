//! Exact deciders for tropical and central indices of univariate
//! polynomials, and verification of the multiplier sequences that
//! preserve them.
//!
//! For a polynomial f(z) = sum a_n z^n with coefficient moduli b_n = |a_n|,
//! an index m is
//!
//! * a *tropical index* if b_m z^m >= max over n != m of b_n z^n for some
//!   z >= 0 (equivalently, m lies on the upper convex hull of the points
//!   (n, log b_n)), and
//! * a *central index* if b_m z^m >= sum over n != m of b_n z^n for some
//!   z >= 0 (the lopsidedness condition).
//!
//! A positive sequence gamma acts diagonally by z^n -> gamma_n z^n. The
//! library decides index membership exactly over the rationals, produces
//! checkable witnesses, and mechanically verifies the characterization of
//! the diagonal operators that preserve these indices: exactly the
//! log-concave sequences, which are also the operators that preserve
//! sign-independently real-rooted polynomials.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod error;
pub mod generate;
pub mod indices;
pub mod multiplier;
pub mod oracle;
pub mod poly;
pub mod realroot;
pub mod scalar;
pub mod verify;

pub use error::Error;
pub use indices::{
    all_sign_flips_real_rooted, central_indices, central_witness, index_report,
    is_central_index, is_sign_independently_real_rooted, is_tropical_index,
    is_tropically_real_rooted, sirr_bruteforce, sirr_bruteforce_capped, tropical_indices,
    tropical_witness, verify_central_witness, verify_tropical_witness, IndexEntry,
    IndexReport, Witness,
};
pub use multiplier::{
    counterexample_central, counterexample_tropical, preservation_witness,
    preserves_central_on, preserves_sirr_on, preserves_tropical_on, verify_symbol_witness,
    IndexKind, Multipliers, PreservationVerdict, SequenceClass, SqrtRational,
};
pub use poly::{Polynomial, SignPattern};
pub use realroot::{
    cauchy_root_bound, count_distinct_roots, count_nonneg_roots, descartes_sign_changes,
    gcd, is_real_rooted, isolate_positive_roots, isolate_roots, refine, squarefree_part,
    sturm_chain, Interval, SturmChain,
};
pub use scalar::Rational;
pub use verify::{run_all, run_claim, Claim, ClaimOutcome, RunConfig, VerifyReport};
