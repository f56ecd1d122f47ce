//! Exact computation with finite-dimensional Lie superalgebras over the
//! rationals: structure validation, central series, the Schur multiplier
//! via degree-2 homology of the super Chevalley-Eilenberg complex, stem
//! covers, and the t/s defect invariants, plus a catalog of small nilpotent
//! algebras with independently checked expected values.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there are no
//! floating-point tolerances anywhere.

pub mod catalog;
pub mod format;
pub mod linalg;
pub mod multiplier;
pub mod superalgebra;
pub mod verify;

pub use linalg::{parse_rational, Rational, RationalMatrix};
pub use superalgebra::{
    AlgebraBuilder, AlgebraError, BasisVector, GradedDim, LieSuperAlgebra, Parity, Subspace,
    SuperVector, ValidationReport, Violation, ViolationKind,
};
