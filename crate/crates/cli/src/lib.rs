//! Library behind the `taut` binary.
//!
//! `taut` reads a plain-text description of a bound quiver algebra,
//! enumerates its basic support tau-tilting pairs by mutation, builds the
//! brick-labeled Hasse quiver of functorially finite torsion classes, and
//! decides the eight equivalent Boolean-lattice conditions, cross-validating
//! everything against independent checks.
//!
//! The pieces are reusable on their own:
//!
//! * [`parse`] — the line-oriented input format and its inverse serializer,
//! * [`dot`] — deterministic DOT rendering of the labeled Hasse quiver,
//! * [`report`] — the schema-versioned machine-readable run report,
//! * [`run`] — the pipeline that ties parsing, enumeration, labeling,
//!   lattice checks, condition verdicts, and cross-validation together.
//!
//! Verdicts are data: a run that concludes "this algebra is *not* a product
//! of local algebras" exits with status 0. Nonzero exit codes are reserved
//! for process failures (unreadable files, parse errors, algebras that are
//! not finite-dimensional, internal invariant violations).

pub mod dot;
pub mod parse;
pub mod report;
pub mod run;

pub use dot::render_dot;
pub use parse::{format_algebra_spec, parse_algebra_spec, FileBounds, ParseError, ParseErrorKind};
pub use report::{
    BoundsEcho, CheckJson, ConditionsJson, Counts, LatticeVerdicts, PropJson, RunReport, Timings,
    VerdictJson, SCHEMA_VERSION,
};
pub use run::{run_text, RunConfig, RunError, RunOutcome};
