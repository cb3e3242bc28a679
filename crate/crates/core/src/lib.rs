//! Exact computer algebra for 2-equipped posets and their corepresentations
//! over a quadratic field extension F ⊂ G = F(ξ).
//!
//! The library covers: exact arithmetic in the tower F ⊂ G over prime fields
//! and the rationals, 2-equipped posets with the strong/weak closure law,
//! the Tits quadratic form with reflections and root enumeration, the exact
//! calculus of F-subspaces of a G-space (hull, cohull, orthogonal complement),
//! matrix corepresentations with decomposition and duality, the catalog of
//! canonical matrices, series and dimension tables, and verification suites
//! that cross-check all of the above by brute force at small sizes.

pub mod catalog;
pub mod corep;
pub mod fields;
pub mod homalg;
pub mod poset;
pub mod subspace;
pub mod textio;
pub mod tits;
pub mod verify;

use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The minimal polynomial t² + pt + q is reducible over the base field.
    ReduciblePolynomial { root: String },
    /// Division by zero or inversion of zero.
    DivisionByZero,
    /// Mixed base fields or mismatched moduli in one operation.
    FieldMismatch,
    /// An operation requiring a finite base field was called on the rationals.
    InfiniteField,
    /// Malformed input (parse errors carry a line number where available).
    Parse { line: usize, msg: String },
    /// Relation generators contain a cycle.
    PosetCycle { witness: String },
    /// A relation declared weak is forced strong by the closure law.
    WeakForcedStrong { witness: String },
    /// Unknown point id.
    UnknownPoint(String),
    /// The given point set is not an antichain.
    NotAntichain,
    /// Size bound for brute-force isomorphism exceeded.
    SizeBound { size: usize, bound: usize },
    /// Dimension vector does not match the poset.
    DimVectorMismatch { expected: usize, got: usize },
    /// A reflection produced a non-integer coordinate.
    NonIntegerReflection,
    /// No unique componentwise-minimal imaginary root inside the box.
    AmbiguousMinimalRoot { candidates: String },
    /// No imaginary root found inside the search box.
    NoImaginaryRoot,
    /// Ambient dimensions disagree.
    AmbientMismatch { left: usize, right: usize },
    /// Operation requires matching posets.
    PosetMismatch,
    /// The tower does not satisfy p = 0 or char F = 2.
    DualityUnavailable,
    /// Matrix shape or entry domain violates a precondition.
    BadMatrix(String),
    /// An illegal admissible transformation was requested.
    IllegalMove(String),
    /// Adjoin-point precondition failed.
    AdjoinPrecondition(String),
    /// The anchors do not induce the required subposet.
    BadAnchors(String),
    /// The subposet is not full in the ambient poset.
    NotFullSubposet,
    /// Unknown catalog identifier.
    UnknownCatalogId(String),
    /// The requested id has no parametric dimension family.
    FamilyAbsent(String),
    /// Search budget exceeded.
    BudgetExceeded { needed: u64, budget: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ReduciblePolynomial { root } => {
                write!(f, "minimal polynomial is reducible: root {root}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::FieldMismatch => write!(f, "elements belong to different base fields"),
            Error::InfiniteField => write!(f, "operation requires a finite base field"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::PosetCycle { witness } => write!(f, "relation cycle: {witness}"),
            Error::WeakForcedStrong { witness } => {
                write!(f, "relation declared weak is forced strong: {witness}")
            }
            Error::UnknownPoint(p) => write!(f, "unknown point: {p}"),
            Error::NotAntichain => write!(f, "point set is not an antichain"),
            Error::SizeBound { size, bound } => {
                write!(f, "poset size {size} exceeds brute-force bound {bound}")
            }
            Error::DimVectorMismatch { expected, got } => {
                write!(f, "dimension vector has {got} point coordinates, poset has {expected}")
            }
            Error::NonIntegerReflection => write!(f, "reflection produced a non-integer vector"),
            Error::AmbiguousMinimalRoot { candidates } => {
                write!(f, "no unique minimal imaginary root; candidates: {candidates}")
            }
            Error::NoImaginaryRoot => write!(f, "no imaginary root inside the search box"),
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient dimensions disagree: {left} vs {right}")
            }
            Error::PosetMismatch => write!(f, "operation requires matching posets"),
            Error::DualityUnavailable => {
                write!(f, "duality requires p = 0 or characteristic 2")
            }
            Error::BadMatrix(msg) => write!(f, "bad matrix: {msg}"),
            Error::IllegalMove(msg) => write!(f, "illegal transformation: {msg}"),
            Error::AdjoinPrecondition(msg) => write!(f, "adjoin precondition failed: {msg}"),
            Error::BadAnchors(msg) => write!(f, "bad anchors: {msg}"),
            Error::NotFullSubposet => write!(f, "subposet is not full"),
            Error::UnknownCatalogId(id) => write!(f, "unknown catalog id: {id}"),
            Error::FamilyAbsent(id) => write!(f, "no parametric dimension family for {id}"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "search space {needed} exceeds budget {budget}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
