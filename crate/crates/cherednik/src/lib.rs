//! Exact-arithmetic criteria for rational Cherednik algebras of complex
//! reflection groups: necessary conditions for nonzero maps between standard
//! modules and for finite-dimensionality of irreducible lowest-weight modules,
//! together with the multipartition/tableau combinatorics, the coarsest
//! highest-weight ordering, and the two-parameter region analysis that drive
//! them.
//!
//! Groups are modeled either combinatorially (the monomial groups `G(r,1,n)`,
//! including the symmetric groups `S_n = G(1,1,n)`) or by character-table data
//! loaded from a file; the Weyl group `W(B_2) = G(2,1,2)` ships as a builtin
//! table. All arithmetic is exact rational — there is no floating point
//! anywhere in this crate.

pub mod cfun;
pub mod combinatorics;
pub mod criteria;
pub mod groupdata;
pub mod ordering;
pub mod params;
pub mod regions;

use thiserror::Error;

/// Exact rational scalar used throughout.
pub type Rat = num_rational::Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("box {0} lies outside the shape")]
    InvalidBox(String),
    #[error("shape is empty")]
    EmptyShape,
    #[error("shapes have mismatched sizes or component counts: {0}")]
    SizeMismatch(String),
    #[error("parameter `{0}` is not bound by the assignment")]
    UnboundParameter(String),
    #[error("mixed parameter spaces: {0} vs {1}")]
    SpaceMismatch(String, String),
    #[error("unknown irreducible `{0}`")]
    UnknownIrrep(String),
    #[error("unknown parabolic `{0}`")]
    UnknownParabolic(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("invalid chain tableau: {0}")]
    InvalidChainTableau(String),
    #[error("symbolic expansion exceeded the cap of {0} tableau pairs")]
    CapExceeded(usize),
    #[error("relation has a cycle through distinct labels: {0}")]
    CycleDetected(String),
    #[error("group data is missing normalizer data (n_S / m-values)")]
    MissingNormalizerData,
    #[error("operation requires a group with exactly two parameters, found {0}")]
    WrongParameterCount(usize),
    #[error("not a constituent: `{0}` does not occur in the restriction of `{1}`")]
    NotAConstituent(String, String),
    #[error("failed to parse group data: {0}")]
    DataParse(String),
    #[error("group data failed validation:\n{}", .0.join("\n"))]
    DataInvalid(Vec<String>),
    #[error("invalid parameter value `{0}`: expected an exact fraction like 3/4")]
    BadFraction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// The denominator used for "generic" parameter points in scans. A large
/// prime keeps small-coefficient integer forms away from unintended
/// integrality.
pub const GENERIC_DENOMINATOR: i64 = 1009;
