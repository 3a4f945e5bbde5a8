//! Exact computation of psi-class intersection numbers on moduli spaces of
//! stable curves, their pairing against combinatorial boundary cycles, and
//! the exact rank of the resulting pairing matrices.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in this crate. The main entry points are:
//!
//! - [`intersection::psi_integral`]: correlators `<tau_{a_1} ... tau_{a_n}>_g`
//!   via closed forms (genus 0 and 1) and the memoized DVV recursion.
//! - [`combinatorics`]: integer partitions, the refinement order, the Faber
//!   kappa/psi basis change, vertex profiles, and stable weighted graphs.
//! - [`pairing`]: the pairing of psi classes against boundary cycles, the
//!   matrix `R(d;g,n)`, and its exact rank over the rationals.
//! - [`verify`]: executable reproductions of the reference rank tables,
//!   closed-form integral tables, and determinant identities.

#![forbid(unsafe_code)]

pub mod combinatorics;
pub mod intersection;
mod linalg;
pub mod pairing;
pub mod poly;
pub mod rational;
pub mod verify;

pub use poly::UniPoly;
pub use rational::Rational;

/// Errors reported by operations with violated preconditions or
/// inconsistent inputs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unstable moduli space: (g, n) = ({genus}, {points})")]
    UnstableModuli { genus: u32, points: usize },
    #[error("empty exponent list")]
    EmptyExponents,
    #[error("partition degree mismatch: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("{0}")]
    OutOfRange(String),
    #[error("disconnected")]
    Disconnected,
    #[error("unstable vertex {0}")]
    UnstableVertex(usize),
    #[error("no witness exists under Lemma hypotheses")]
    NoWitness,
    #[error("expected 11 qualifying profiles, found {0} (degree too small?)")]
    ProfileCount(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
