use thiserror::Error;

use crate::poly::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("quiver has an oriented cycle through {}", .vertices.join(" -> "))]
    CyclicQuiver { vertices: Vec<String> },
    #[error("duplicate {kind} identifier `{id}`")]
    DuplicateIdentifier { kind: &'static str, id: String },
    #[error("arrow `{arrow}` refers to unknown vertex index {vertex}")]
    UnknownVertex { arrow: String, vertex: usize },
    #[error("size limit exceeded: {what} needs {needed}, bound is {bound}")]
    SizeLimit {
        what: &'static str,
        needed: u64,
        bound: u64,
    },
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("vector is not in the cone: {0}")]
    NotInCone(crate::lattice::ConeViolation),
    #[error("zero vector has no dominating cycle")]
    ZeroVector,
    #[error("vector violates the balance condition at vertex {vertex}")]
    NotInKernel { vertex: usize },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("index space mismatch: {left} vs {right} variables")]
    IndexSpaceMismatch { left: usize, right: usize },
    #[error("the zero polynomial has no initial monomial")]
    ZeroPolynomial,
    #[error("negative exponent of S{var} cannot be substituted by a non-monomial")]
    NegativeExponentInSSpace { var: usize },
    #[error("division by zero while evaluating")]
    DivisionByZero,
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("leading monomial {0:?} is not a product of basis initial monomials")]
    LeadingTermNotInInitialAlgebra(Monomial),
    #[error("subduction did not strictly decrease the leading monomial {0:?}")]
    NonDecreasingLoop(Monomial),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameters must satisfy 0 <= p <= q <= r <= s <= t, got ({p},{q},{r},{s},{t})")]
    InvalidParams {
        p: usize,
        q: usize,
        r: usize,
        s: usize,
        t: usize,
    },
    #[error("operation requires strict parameters 0 < p < q < r < s < t")]
    NotStrict,
    #[error("point is outside U: {0}")]
    NotInU(String),
    #[error("cycle vectors do not match: {missing} missing, {extra} extra")]
    Mismatch {
        missing: usize,
        extra: usize,
        report: String,
    },
    #[error("certificate failure at `{check}`: {detail}")]
    CertificateFailure { check: String, detail: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Umbrella error for callers that mix modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
