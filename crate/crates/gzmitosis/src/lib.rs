//! Geometric mitosis on Gelfand-Zetlin polytopes.
//!
//! The crate has five layers: Weyl-group combinatorics ([`weyl`]), pipe-dream
//! mitosis in types A and C ([`pipedream`]), an exact-rational polyhedral
//! kernel with Cayley sums and geometric mitosis ([`polykernel`]), the
//! Gelfand-Zetlin polytope machinery tying the two together ([`gz`]), and
//! Schubert-polynomial oracles with chain generation ([`schubert`]).

pub mod gz;
pub mod pipedream;
pub mod polykernel;
pub mod schubert;
pub mod weyl;

/// Exact rational scalar used throughout the polyhedral kernel.
pub type Rat = num::BigRational;

/// Arbitrary-precision integer backing [`Rat`].
pub type Int = num::BigInt;

/// Errors shared across the library modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Input violates a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// Input exceeds an exhaustive-enumeration guard.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    /// Malformed textual input.
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a verification sweep: cases examined and human-readable mismatch descriptions.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Report {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Builds an exact rational from an integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}
