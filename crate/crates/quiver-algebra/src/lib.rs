//! Exact computational algebra for bound quiver algebras.
//!
//! The crate builds finite-dimensional path algebras of quivers with monomial
//! relations over `F_p` or `Q`, represents right modules as quiver
//! representations, and provides the homological toolkit on top of them:
//! Hom spaces, endomorphism algebras with exact Jacobson radicals,
//! certified direct-sum decomposition, brick tests, and the
//! Auslander-Reiten translate via minimal projective presentations.
//!
//! # Conventions
//!
//! * Modules are **right** modules. A representation assigns to each arrow
//!   `a: u -> v` a matrix acting on row vectors, `m |-> m * M_a`, sending the
//!   fibre at `u` into the fibre at `v`.
//! * A path `[a, b]` traverses `a` first and then `b`; its action is the
//!   matrix product `M_a * M_b`. Relations are paths written in the same
//!   order.
//! * All arithmetic is exact: `F_p` with `u64` residues, `Q` with
//!   arbitrary-precision rationals. No floating point anywhere.
//! * Every routine is deterministic: bases come from reduced row echelon
//!   forms, searches scan candidates in a fixed order, and no randomness is
//!   used.

mod algebra;
mod decomp;
mod endo;
mod field;
mod hom;
mod matrix;
mod poly;
mod presentation;
mod projres;
mod rep;

pub use algebra::{AlgElem, BuildOptions, PathAlgebra};
pub use decomp::{decompose, fingerprint, indec_isomorphic, is_isomorphic, Fingerprint};
pub use endo::{
    brick_quotient, division_or_idempotent, fd_radical_bruteforce, fd_radical_rows, is_brick,
    lift_idempotent, radical_basis, DivisionStatus, EndoAlgebra, FdAlgebra, QuotientAlgebra,
};
pub use field::{FieldSpec, Scalar};
pub use hom::{hom_dim, hom_space, in_fac, torsion_radical_rows, HomBasis};
pub use matrix::Mat;
pub use poly::Poly;
pub use presentation::{Arrow, BoundQuiverPresentation};
pub use projres::{
    is_tau_rigid, minimal_projective_presentation, tau, transpose, ProjectivePresentation,
};
pub use rep::{
    cokernel_rep, injectives, kernel_rep, projectives, quotient_rep, simples, sub_rep, RepMap,
    Representation, VertexInjective, VertexProjective,
};

/// Errors surfaced by the algebra layer.
///
/// `Internal` marks a violated invariant and always indicates a bug; the
/// other variants are legitimate outcomes on user input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    /// The presentation fails a well-formedness check (duplicate names,
    /// dangling arrow endpoints, non-composable relation, ...).
    #[error("invalid presentation: {reason}")]
    InvalidPresentation { reason: String },

    /// Path enumeration exceeded the length bound, so the algebra is either
    /// infinite-dimensional or unreasonably large.
    #[error("path algebra is not finite-dimensional: no relation truncates paths of length {bound}")]
    InfiniteDimensional { bound: usize },

    /// The zero module was passed where a nonzero module is required.
    #[error("the zero module is not admitted here")]
    ZeroModule,

    /// Direct-sum decomposition could not be certified (idempotent lifting
    /// did not converge, or no splitting idempotent could be constructed).
    #[error("decomposition failure: {reason}")]
    DecompositionFailure { reason: String },

    /// Deciding whether the endomorphism ring is a division ring is out of
    /// scope for this field (noncommutative division algebras over `Q`).
    #[error("endomorphism structure undecidable here: {reason}")]
    EndUndecidable { reason: String },

    /// An internal invariant was violated; this is a bug, never user error.
    #[error("internal invariant violated: {reason}")]
    Internal { reason: String },
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

pub(crate) fn internal(reason: impl Into<String>) -> AlgebraError {
    AlgebraError::Internal {
        reason: reason.into(),
    }
}
