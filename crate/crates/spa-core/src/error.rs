//! Error and diagnostic types shared across the crate.

use std::fmt;

/// Errors raised by arithmetic, validation and the engines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("coefficients belong to different fields")]
    FieldMismatch,
    #[error("exponent vector has length {got}, expected {expected}")]
    ArityError { expected: usize, got: usize },
    #[error("product normalization exceeded its rewrite budget; the relation table does not respect the ordering")]
    NormalizationDiverged,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("module elements do not fit the ambient free module")]
    ModuleMismatch,
    #[error("the zero element has no leading monomial")]
    ZeroElement,
    #[error("homogeneity required: {0}")]
    HomogeneityError(String),
    #[error("no logged reduction trace for the S-pair ({i}, {j})")]
    MissingTrace { i: usize, j: usize },
    #[error("inconsistent matrix shapes: {0}")]
    ShapeError(String),
    #[error("resolution length exceeded the generator count; this indicates an internal bug")]
    IterationOverrun,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of a structural check such as `check_solvable` or `verify_resolution`.
///
/// Failures are collected rather than raised, so a single run reports every
/// violated condition.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn new() -> Self {
        ValidationReport { failures: Vec::new() }
    }

    pub fn fail(&mut self, message: impl Into<String>) {
        self.failures.push(message.into());
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
    }

    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            write!(f, "ok")
        } else {
            for (k, failure) in self.failures.iter().enumerate() {
                if k > 0 {
                    writeln!(f)?;
                }
                write!(f, "{failure}")?;
            }
            Ok(())
        }
    }
}
