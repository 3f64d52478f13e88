use thiserror::Error;

use crate::space::PointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a space needs at least one point")]
    EmptyGround,
    #[error("{size} points exceeds the supported maximum of {max}")]
    TooManyPoints { size: usize, max: usize },
    #[error("point {point} is out of range for a space with {size} points")]
    PointOutOfRange { point: usize, size: usize },
    #[error("the open sets must include both the empty set and the full set")]
    MissingEmptyOrFull,
    #[error("not closed under union: {left} ∪ {right} is not open")]
    NotClosedUnderUnion { left: PointSet, right: PointSet },
    #[error("not closed under intersection: {left} ∩ {right} is not open")]
    NotClosedUnderIntersection { left: PointSet, right: PointSet },
    #[error("subset lives over {found} points but the space has {expected}")]
    GroundMismatch { expected: usize, found: usize },
    #[error("{operator} of {subset} is {result}, which is not in its own family")]
    ClosureDefect {
        operator: &'static str,
        subset: PointSet,
        result: PointSet,
    },
    #[error("map assignment has {found} entries but the domain has {expected} points")]
    AssignmentLength { expected: usize, found: usize },
    #[error("size {size} exceeds the enumeration bound of {max}")]
    SizeTooLarge { size: usize, max: usize },
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
