use thiserror::Error;

/// Errors raised by constructors and checked operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("multiplication table is not square or has out-of-range entries")]
    MalformedTable,
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("generator {0} is not a permutation of 0..{1}")]
    NotAPermutation(usize, usize),
    #[error("group closure exceeds the cap of {0} elements")]
    CapExceeded(usize),
    #[error("size cap exceeded: {what} is {size}, cap is {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("subgroups or elements belong to different groups")]
    GroupMismatch,
    #[error("coefficient groups differ")]
    CoefficientMismatch,
    #[error("{0} is not a subgroup of the given group")]
    NotASubgroup(String),
    #[error("subgroup is not contained in the domain of the character")]
    NotContained,
    #[error("point {0} out of range")]
    PointOutOfRange(usize),
    #[error("invalid group action: {0}")]
    InvalidAction(String),
    #[error("the C-action is not free at point {0}")]
    NotCFree(usize),
    #[error("element belongs to a different subcharacter table")]
    ForeignTable,
    #[error("subcharacter is not in the table")]
    UnknownSubcharacter,
    #[error("poset is not discrete")]
    NotDiscrete,
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("cocycle violation: {0}")]
    CocycleViolation(String),
    #[error("invalid map of monomial posets: {0}")]
    InvalidMap(String),
    #[error("biset is not left free")]
    NotLeftFree,
    #[error("inconsistent connecting element while composing bisets")]
    InconsistentComposition,
    #[error("fixed-point values are not the marks of a ring element")]
    NonIntegralMarks,
    #[error("tensor induction does not send the point to a point")]
    PointNotPreserved,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
