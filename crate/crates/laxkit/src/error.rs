//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by the numeric kernels and the verification layers.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("series did not converge: {0}")]
    NonConvergent(String),
    #[error("overflow guard tripped: {0}")]
    Overflow(String),
    #[error("argument within {tol:e} of a lattice pole: {arg}")]
    PoleAtArgument { arg: String, tol: f64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix numerically singular: {0}")]
    Singular(String),
    #[error("matrix is not rank deficient (smallest singular value {smin:e})")]
    NotRankDeficient { smin: f64 },
    #[error("numerical kernel has dimension {dim} > 1")]
    KernelDimensionTooLarge { dim: usize },
    #[error("leading polynomial coefficient is degenerate")]
    DegenerateLeadingCoefficient,
    #[error("zero too close to the search boundary after {attempts} re-offsets")]
    BoundaryTooClose { attempts: usize },
    #[error("argument-principle count {expected} != {found} polished roots")]
    CountMismatch { expected: i64, found: usize },
    #[error("evaluation at a pole: {0}")]
    EvaluationAtPole(String),
    #[error("residue at {0} is not rank one")]
    ResidueRankNotOne(String),
    #[error("determinant numerator degenerate (degree < d)")]
    DegenerateDeterminant,
    #[error("not in general position: {0}")]
    NotGeneralPosition(String),
    #[error("zero-to-pole pairing inconsistent: {0}")]
    PairingInconsistent(String),
    #[error("r-matrix pole at z = 0")]
    PoleAtZero,
    #[error("evaluation point hits a pole of the bracket data: {0}")]
    PoleHit(String),
    #[error("L0 degenerate: {0}")]
    DegenerateL0(String),
    #[error("gauge matrix singular at {0}")]
    GaugeSingular(String),
    #[error("unexpected root count: {0}")]
    RootCountUnexpected(String),
    #[error("root is degenerate (|dL12/dz| = {deriv:e})")]
    DegenerateRoot { deriv: f64 },
    #[error("tangent violates leaf constraint {name} by {violation:e}")]
    NotOnLeaf { name: String, violation: f64 },
    #[error("leaf constraint gradients are degenerate")]
    DegenerateConstraints,
    #[error("all compared entries vanish; state too degenerate to fit a constant")]
    AllEntriesZero,
    #[error("expected {expected} det zeros in the cell, found {found}")]
    ZeroCountMismatch { expected: usize, found: usize },
    #[error("pairing closure failed: sum of Delta_m = {sum} is not an integer within {tol:e}")]
    PairingClosureFailure { sum: String, tol: f64 },
    #[error("kernel system for factor coefficients is singular: {0}")]
    KernelSolveSingular(String),
    #[error("Delta_m = {0} is degenerate for the chain factor formula")]
    DegenerateDelta(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("invariant violation at {path}: {message}")]
    InvariantViolation { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
