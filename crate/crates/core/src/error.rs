//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("multiplication table is not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("multiplication table is not associative: ({0} {1}) {2} != {0} ({1} {2})")]
    NotAssociative(String, String, String),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(String),
    #[error("unknown catalog group '{0}'")]
    UnknownCatalog(String),
    #[error("invalid Cayley data: {0}")]
    InvalidCayleyData(String),
    #[error("invalid permutation input: {0}")]
    InvalidPermutation(String),
    #[error("subgroup is not normal (conjugate of {0} escapes)")]
    NotNormal(String),
    #[error("input group is not abelian ({0} and {1} do not commute)")]
    NotAbelian(String, String),
    #[error("input group is not nilpotent")]
    NotNilpotent,
    #[error("size cap exceeded in {op}: {actual} > {cap}")]
    SizeCap {
        op: &'static str,
        cap: usize,
        actual: usize,
    },
    #[error("coset enumeration overflow: more than {0} cosets required")]
    CosetOverflow(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),
    #[error("map is not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("cone does not commute with the system maps at ({0}, {1})")]
    ConeMismatch(usize, usize),
    #[error("directed system invalid: {0}")]
    InvalidSystem(String),
    #[error("multiplier for this variety must be supplied externally: {0}")]
    MultiplierNotComputable(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
