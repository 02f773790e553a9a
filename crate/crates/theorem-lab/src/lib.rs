//! Decision procedures for the equivalent characterizations of a
//! finite-dimensional bound quiver algebra whose torsion classes form a
//! Boolean lattice:
//!
//! * (a)/(b) — the lattice of all torsion classes is upper/lower
//!   semimodular,
//! * (a')/(b') — the poset of functorially finite torsion classes forms
//!   an upper/lower semimodular lattice,
//! * (c) — the torsion classes form the Boolean lattice of subsets of
//!   the simples,
//! * (d) — every brick is simple,
//! * (e) — the regular module is the only basic tau-tilting module,
//! * (f) — the algebra is a product of local algebras.
//!
//! All eight are decided independently and cross-checked against each
//! other, against an exhaustive brute-force torsion-class oracle on
//! small fixtures, and against the opposite algebra's lattice. Because
//! the decided conditions are provably equivalent, a mixed report is a
//! bug detector, not a mathematical possibility.
//!
//! The conditions about all torsion classes are decided on the
//! enumerated (functorially finite) ones; the identification is valid
//! exactly when the enumeration completed, because torsion classes are
//! all functorially finite precisely in that finite case. Incomplete
//! enumerations therefore yield `Inconclusive`, never a guess.

mod conditions;
mod fixtures;
mod oracle;
mod validate;
mod verdict;

pub use conditions::{check_conditions, check_f_structural, check_simple_generated};
pub use fixtures::{
    boolean_family, disjoint_union, known_indecomposables, linear_a, truncated_poly,
};
pub use oracle::{bruteforce_torsion_classes, OracleBounds};
pub use validate::{cross_validate, CheckOutcome, CrossValidation};
pub use verdict::{ConditionReport, Verdict};

use thiserror::Error;

#[derive(Error, Debug)]
pub enum TheoremError {
    #[error(transparent)]
    Algebra(#[from] quiver_algebra::AlgebraError),
    #[error(transparent)]
    TauTilting(#[from] tau_tilting::TauTiltingError),
    #[error("lattice construction failed: {0}")]
    Lattice(#[from] lattice_core::LatticeError),
    #[error("brute-force oracle exceeded its bounds: {reason}")]
    OracleTooLarge { reason: String },
}

pub type Result<T> = std::result::Result<T, TheoremError>;
