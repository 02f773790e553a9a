//! Finite posets and finite lattices, with exhaustive checks for the
//! structural properties that matter when studying lattices of torsion
//! classes: semimodularity, distributivity, Booleanness, semidistributivity,
//! join-irreducibility, Hasse regularity and (anti-)isomorphism.
//!
//! Everything here is exact and deterministic. Property checks scan elements
//! in a fixed order and report the first witness found, so failures are
//! reproducible byte for byte. All types are immutable after construction and
//! safe to share across threads; with the `parallel` feature (default) the
//! quadratic and cubic scans run on rayon with a deterministic
//! minimum-witness reduction, and the sequential implementations stay
//! available for comparison.

mod checks;
mod iso;
mod lattice;
mod poset;

pub mod fixtures;
pub mod scan;

pub use checks::{BooleanCheck, BooleanIso, PropertyReport};
pub use iso::{is_antiisomorphic, is_isomorphic};
pub use lattice::{FiniteLattice, LatticeOp};
pub use poset::FinitePoset;

use thiserror::Error;

/// Identifies an element of a [`FinitePoset`] by its index.
pub type ElementId = usize;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    /// The relation table failed a poset axiom.
    #[error("not a poset: {reason} (witness {witness:?})")]
    NotAPoset {
        reason: &'static str,
        witness: Vec<ElementId>,
    },
    /// A pair of elements has no meet or no join.
    #[error("not a lattice: elements {a} and {b} have no {op}")]
    NotALattice {
        a: ElementId,
        b: ElementId,
        op: LatticeOp,
    },
    /// The poset is empty, so it cannot be a (bounded) lattice.
    #[error("not a lattice: empty poset")]
    Empty,
    /// Two posets cannot be compared because their sizes differ.
    #[error("size mismatch: {left} vs {right} elements")]
    SizeMismatch { left: usize, right: usize },
    /// An element index was out of range.
    #[error("element id {id} out of range (size {size})")]
    BadElement { id: ElementId, size: usize },
}

pub type Result<T> = std::result::Result<T, LatticeError>;
