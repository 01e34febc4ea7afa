use thiserror::Error;

use crate::monomial::Monomial;
use crate::tuple::{ReductionType, TetTuple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("reduction {ty:?} is not applicable to {tuple}")]
    NotApplicable { tuple: TetTuple, ty: ReductionType },
    #[error("{0} is minimal: no reduction applies")]
    IsMinimal(TetTuple),
    #[error("the trivial curve admits no reduction")]
    IsTrivial,
    #[error("operation is undefined for the trivial curve")]
    TrivialCurve,
    #[error("{0} is not a minimal curve")]
    NotMinimal(TetTuple),
    #[error("{0} is arithmetically Cohen-Macaulay")]
    IsAcm(TetTuple),
    #[error("{0} is not arithmetically Cohen-Macaulay")]
    NotAcm(TetTuple),
    #[error("{0} is not a member of the ideal")]
    FNotInIdeal(Monomial),
    #[error("the linear form divides {0}")]
    GDividesF(Monomial),
    #[error("Hilbert function has not stabilized by degree {0}")]
    BoundTooSmall(u32),
    #[error("ideal is not strongly stable: {0} fails the exchange test")]
    NotStable(Monomial),
    #[error("generic initial ideal runs disagree: {0:?}")]
    Disagreement(Vec<String>),
    #[error("initial ideal is not Borel-fixed (degenerate coordinates?): {0}")]
    NotBorelFixed(String),
    #[error("linear-resolution ascent did not terminate within {0} levels")]
    EnumerationCap(usize),
    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
