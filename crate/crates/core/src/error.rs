use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group order exceeds the enumeration cap of {0} elements")]
    CapExceeded(usize),
    #[error("no generators supplied")]
    EmptyGenerators,
    #[error("generators act on different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("field order {0} is even; an odd prime power is required")]
    EvenFieldOrder(u32),
    #[error("determinant is not a square in GF({0})")]
    DeterminantNotSquare(u32),
    #[error("element not found in group table: {0}")]
    ElementNotFound(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("{uncovered} universe target(s) are covered by no candidate")]
    InfeasibleUniverse { uncovered: usize },
    #[error("group is solvable; the solvabilizer number is undefined")]
    GroupSolvable,
    #[error("no pair of elements generates the group")]
    NotTwoGenerated,
    #[error("element {0} is not a member of the group")]
    ElementNotInGroup(String),
    #[error("element {0} lies in the solvable radical")]
    ElementInRadical(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
