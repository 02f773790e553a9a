//! Support tau-tilting combinatorics over a bound quiver algebra.
//!
//! The crate enumerates all basic support tau-tilting pairs by repeated
//! left mutation from the maximal pair (the regular module with empty
//! projective part), records the exchange graph -- which is the Hasse
//! quiver of the poset of functorially finite torsion classes -- labels
//! its arrows with bricks, and exports the torsion poset to
//! `lattice-core` for lattice-theoretic analysis.
//!
//! Conventions:
//! - pairs are basic: module summands are indecomposable and pairwise
//!   non-isomorphic, the projective part is a set of vertices;
//! - every Hasse arrow points downward (from the larger torsion class to
//!   the smaller); mutation at a position either descends (left mutation,
//!   which drives the enumeration) or ascends (right mutation, computed
//!   as left mutation over the opposite algebra and recovered during
//!   enumeration as the reverse arrow);
//! - all outputs are deterministic: nodes are numbered in breadth-first
//!   discovery order, which is independent of the thread count because
//!   each frontier's results are merged in task order.

pub mod approx;
pub mod bricks;
pub mod dual;
pub mod enumerate;
pub mod mutate;
pub mod pair;
pub mod torsion;

pub use approx::minimal_left_approximation;
pub use dual::{dual_pair, mutate, mutate_up};
pub use bricks::{enumerate_bricks, enumerate_semibricks, stau_to_semibrick};
pub use enumerate::{enumerate, EnumerationOptions, ExchangeGraph, HasseEdge};
pub use mutate::mutate_down;
pub use pair::STauPair;
pub use torsion::{brick_label, label_hasse_quiver, torsion_poset, LabeledHasseQuiver};

use thiserror::Error;

#[derive(Error, Debug)]
pub enum TauTiltingError {
    #[error(transparent)]
    Algebra(#[from] quiver_algebra::AlgebraError),

    #[error("position {position} does not select a summand of the pair ({summands} positions)")]
    NotASummand { position: usize, summands: usize },

    #[error("approximation failure: {reason}")]
    ApproximationFailure { reason: String },

    #[error("mutation failure: {reason}")]
    MutationFailure { reason: String },

    #[error("pair verification failed: {reason}")]
    InvalidPair { reason: String },

    #[error("enumeration incomplete: {reason}")]
    IncompleteEnumeration { reason: String },

    #[error("the Hasse quiver does not generate a partial order: {reason}")]
    InconsistentOrder { reason: String },

    #[error("edge {from} -> {to}: computed label is zero")]
    LabelMissing { from: usize, to: usize },

    #[error("node {node}: arrows to {to_a} and {to_b} carry isomorphic labels")]
    LabelNotUnique { node: usize, to_a: usize, to_b: usize },

    #[error("not a brick: {reason}")]
    NotABrick { reason: String },

    #[error("not a semibrick: {reason}")]
    NotASemibrick { reason: String },
}

pub type Result<T> = std::result::Result<T, TauTiltingError>;
