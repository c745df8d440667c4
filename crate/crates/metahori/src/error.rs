use thiserror::Error;

/// Errors raised by the engine. Verification failures are reported as data,
/// not as errors.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("inadmissible specialization: {0}")]
    Inadmissible(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("grading violation: {0}")]
    GradingViolation(String),
    #[error("not almost dominant: {0}")]
    NotAlmostDominant(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use std::sync::atomic::{AtomicU64, Ordering};

static POLYNOMIALITY_EVENTS: AtomicU64 = AtomicU64::new(0);

impl Error {
    /// A failed exact division; counted as a polynomiality event.
    pub fn not_divisible(msg: impl Into<String>) -> Self {
        POLYNOMIALITY_EVENTS.fetch_add(1, Ordering::Relaxed);
        Error::NotDivisible(msg.into())
    }

    /// A grading precondition breach; counted as a polynomiality event.
    pub fn grading_violation(msg: impl Into<String>) -> Self {
        POLYNOMIALITY_EVENTS.fetch_add(1, Ordering::Relaxed);
        Error::GradingViolation(msg.into())
    }
}

/// Number of `NotDivisible` / `GradingViolation` errors raised so far in this
/// process.
pub fn polynomiality_events() -> u64 {
    POLYNOMIALITY_EVENTS.load(Ordering::Relaxed)
}
