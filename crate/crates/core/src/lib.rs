//! Exact verification of sign identities for quadratic-residue permutations.
//!
//! For an odd prime `p` write `n = (p-1)/2` and let `ā` denote the unique
//! representative of `a` mod `p` lying strictly between `-p/2` and `p/2`.
//! Three length-`n` sequences enumerate the centered quadratic residues:
//!
//! * `A0`: `1̄², 2̄², …, n̄²` — squares in order of their roots,
//! * `A1`: `ā₁, …, ā_n` — the residues `a₁ < … < a_n` in ascending order,
//! * `A2`: `ḡ², ḡ⁴, …, ḡ^(p-1)` — even powers of a primitive root `g`.
//!
//! Each pair is related by a permutation `σ_{i,j}`. This crate builds the
//! sequences ([`perm`]), computes permutation signs both by inversion
//! counting and by the modular Vandermonde-ratio definition, evaluates the
//! closed-form sign formulas in terms of the fundamental unit and class
//! numbers of `Q(√p)` and `Q(√-p)` ([`invariants`], [`identities`]), and
//! checks the cyclotomic Vandermonde product and Dirichlet-character matrix
//! determinant relations ([`cyclotomic`]). Everything that can be checked in
//! exact arithmetic is; floating point appears only in log-magnitudes and
//! the complex determinant oracle.

// Formula exponents like (p+3)/4 and ranges like 1 <= k <= p-1 are written
// exactly as the identities state them; divisibility is asserted separately.
#![allow(
    clippy::manual_div_ceil,
    clippy::int_plus_one,
    clippy::manual_is_multiple_of
)]

pub mod arith;
mod check;
pub mod cyclotomic;
pub mod identities;
pub mod invariants;
pub mod perm;

pub use arith::{is_prime, primes_up_to, PrimeCtx};
pub use check::CheckResult;
pub use invariants::{FundamentalUnit, QuadInvariants};
pub use perm::{CenteredSeq, PermutationMap, SeqKind, Sign};

/// Errors for operations with violated preconditions.
///
/// Internal consistency violations (a modular sign ratio outside `{±1}`, a
/// non-integral formula exponent, a continued-fraction period of the wrong
/// parity) are bugs, not inputs, and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("p = {p} must be {expected} mod {modulus} for this operation")]
    WrongResidueClass { p: u64, expected: u64, modulus: u64 },
    #[error("p = {p} must be at least {min} for this operation")]
    PrimeTooSmall { p: u64, min: u64 },
    #[error("{a} has no inverse modulo {p}")]
    NotInvertible { a: u64, p: u64 },
    #[error("{g} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { g: u64, p: u64 },
    #[error("sequence A2 requires a primitive root")]
    PrimitiveRootRequired,
    #[error("sequences do not share a prime and a value set")]
    SequenceMismatch,
    #[error("{0} is not a negative discriminant congruent to 0 or 1 mod 4")]
    InvalidDiscriminant(i64),
    #[error("matrix size n = {n} exceeds the floating determinant bound {bound}")]
    MatrixTooLarge { n: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
