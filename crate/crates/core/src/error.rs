use thiserror::Error;

use crate::universal::LinearForm;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series division: divisor valuation exceeds dividend valuation")]
    DivisionByZeroSeries,

    #[error("sinh ratio with vanishing denominator form")]
    ZeroDenominatorForm,

    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("no positive root is orthogonal to the highest root")]
    EmptyOrthogonalSubsystem,

    #[error("weight is not dominant integral: pairing with simple coroot {index} is {pairing}")]
    NotDominant { index: usize, pairing: String },

    #[error("expected {expected} Dynkin labels, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("invalid Vogel parameters: {0}")]
    InvalidParams(String),

    #[error("pole at parameters: linear form {form} vanishes at (α, β, γ) = ({at})")]
    PoleAtParameters { form: LinearForm, at: String },

    #[error("pole at x = {x}: a sinh denominator vanishes")]
    PoleAtX { x: f64 },

    #[error("series evaluation at x = {x} did not converge by order {order}")]
    NotConverged { x: f64, order: usize },

    #[error("invalid instanton parameters: {0}")]
    InvalidInstanton(String),
}
