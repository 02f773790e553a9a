//! The end-to-end pipeline behind the binary: parse, build, enumerate,
//! label, check the lattice, decide the conditions, cross-validate.

use std::time::Instant;

use quiver_algebra::{AlgebraError, BuildOptions, FieldSpec, PathAlgebra};
use tau_tilting::{
    enumerate, enumerate_bricks, enumerate_semibricks, label_hasse_quiver, torsion_poset,
    EnumerationOptions, TauTiltingError,
};
use theorem_lab::{cross_validate, TheoremError};

use crate::dot::render_dot;
use crate::parse::{parse_algebra_spec, ParseError};
use crate::report::{
    BoundsEcho, Counts, LatticeVerdicts, RunReport, Timings, SCHEMA_VERSION,
};

/// Knobs from the command line. `field_override = Some(0)` selects the
/// rationals; `Some(p)` a prime field. Bounds given here win over `bound`
/// lines in the file.
#[derive(Debug, Clone, Default)]
pub struct RunConfig {
    pub field_override: Option<u64>,
    pub node_bound: Option<usize>,
    pub dim_bound: Option<usize>,
    pub force_oracle: bool,
}

/// Process failures, with the exit code they map to. Mathematical
/// outcomes — including "all conditions false" and "bound exceeded,
/// inconclusive" — are report content, not errors.
#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid flag: {0}")]
    Flag(String),
    #[error("cannot build the algebra: {0}")]
    Build(AlgebraError),
    #[error("internal failure: {0}")]
    Internal(#[from] TheoremError),
}

impl From<TauTiltingError> for RunError {
    fn from(e: TauTiltingError) -> Self {
        RunError::Internal(e.into())
    }
}

impl RunError {
    /// 2 = input problems, 3 = the algebra itself is unusable,
    /// 4 = internal invariant violation (a bug, not user error).
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Parse(_) | RunError::Flag(_) => 2,
            RunError::Build(_) => 3,
            RunError::Internal(_) => 4,
        }
    }
}

/// A finished run: the report plus the DOT rendering when the
/// enumeration completed.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub report: RunReport,
    pub dot: Option<String>,
}

/// Runs the whole pipeline on the text of a description file.
pub fn run_text(text: &str, cfg: &RunConfig) -> Result<RunOutcome, RunError> {
    let t_total = Instant::now();
    let mut timings = Timings::default();

    let t = Instant::now();
    let (mut pres, fbounds) = parse_algebra_spec(text)?;
    timings.parse_ms = t.elapsed().as_millis();

    match cfg.field_override {
        None => {}
        Some(0) => pres.field = FieldSpec::Rationals,
        Some(p) => {
            pres.field = FieldSpec::prime(p).map_err(|e| RunError::Flag(e.to_string()))?
        }
    }

    let t = Instant::now();
    let alg = PathAlgebra::build(pres, BuildOptions::default()).map_err(RunError::Build)?;
    timings.build_ms = t.elapsed().as_millis();

    let defaults = EnumerationOptions::default();
    let opts = EnumerationOptions {
        node_bound: cfg.node_bound.or(fbounds.node_bound).unwrap_or(defaults.node_bound),
        dim_bound: cfg.dim_bound.or(fbounds.dim_bound).unwrap_or(defaults.dim_bound),
        ..defaults
    };

    let t = Instant::now();
    let graph = enumerate(&alg, &opts)?;
    timings.enumerate_ms = t.elapsed().as_millis();
    let discovered_nodes = graph.nodes.len();
    let n = alg.vertex_count();

    let t = Instant::now();
    let mut counts = None;
    let mut lattice = None;
    let mut dot = None;
    if graph.complete {
        let labeled = label_hasse_quiver(&alg, graph)?;
        let poset = torsion_poset(&labeled.graph)?;
        let bricks = enumerate_bricks(&alg, &labeled)?;
        let mut semibricks = enumerate_semibricks(&alg, &labeled)?;
        semibricks.sort();
        semibricks.dedup();
        counts = Some(Counts {
            torsion_classes: labeled.graph.nodes.len(),
            hasse_arrows: labeled.graph.edges.len(),
            bricks: bricks.len(),
            semibricks: semibricks.len(),
            tau_tilting_modules: labeled
                .graph
                .nodes
                .iter()
                .filter(|p| p.projectives.is_empty())
                .count(),
        });
        let hasse_regular = poset.is_hasse_regular(n).into();
        lattice = Some(match poset.as_lattice() {
            Ok(lat) => LatticeVerdicts {
                is_lattice: true,
                hasse_regular,
                upper_semimodular: Some(lat.is_upper_semimodular().into()),
                lower_semimodular: Some(lat.is_lower_semimodular().into()),
                distributive: Some(lat.is_distributive().into()),
                boolean: Some(lat.is_boolean().report.into()),
                join_semidistributive: Some(lat.is_join_semidistributive().into()),
                meet_semidistributive: Some(lat.is_meet_semidistributive().into()),
                boolean_atoms: lat.boolean_subset_isomorphism().map(|b| b.atom_count),
            },
            Err(_) => LatticeVerdicts {
                is_lattice: false,
                hasse_regular,
                upper_semimodular: None,
                lower_semimodular: None,
                distributive: None,
                boolean: None,
                join_semidistributive: None,
                meet_semidistributive: None,
                boolean_atoms: None,
            },
        });
        dot = Some(render_dot(&alg, &labeled));
    }
    timings.label_ms = t.elapsed().as_millis();

    let t = Instant::now();
    let cv = cross_validate(&alg, &opts, cfg.force_oracle)?;
    timings.validate_ms = t.elapsed().as_millis();
    timings.total_ms = t_total.elapsed().as_millis();

    let field = match alg.field() {
        FieldSpec::Prime(p) => format!("F_{p}"),
        FieldSpec::Rationals => "Q".to_string(),
    };
    let report = RunReport {
        schema_version: SCHEMA_VERSION,
        algebra: cv.report.algebra.clone(),
        field,
        vertex_count: n,
        bounds: BoundsEcho {
            node_bound: opts.node_bound,
            dim_bound: opts.dim_bound,
        },
        complete: counts.is_some(),
        discovered_nodes,
        counts,
        lattice,
        conditions: (&cv.report).into(),
        checks: cv.checks.iter().map(Into::into).collect(),
        timings,
    };
    Ok(RunOutcome { report, dot })
}

#[cfg(test)]
mod tests {
    use super::*;

    const A2: &str = "field 2\nvertex 1\nvertex 2\narrow a: 1 -> 2\n";

    #[test]
    fn a2_runs_to_a_false_but_successful_verdict() {
        let out = run_text(A2, &RunConfig::default()).unwrap();
        let r = &out.report;
        assert!(r.complete);
        let c = r.counts.as_ref().unwrap();
        assert_eq!(
            (c.torsion_classes, c.hasse_arrows, c.bricks, c.semibricks, c.tau_tilting_modules),
            (5, 5, 3, 5, 2)
        );
        assert_eq!(r.conditions.unanimous, Some(false));
        assert!(r.conditions.consistent_with_theorem);
        assert!(r.checks.iter().all(|c| c.passed));
        let l = r.lattice.as_ref().unwrap();
        assert!(l.is_lattice && l.hasse_regular.holds);
        assert!(!l.upper_semimodular.as_ref().unwrap().holds);
        assert!(l.join_semidistributive.as_ref().unwrap().holds);
        assert!(out.dot.is_some());
    }

    #[test]
    fn json_round_trips_and_is_stable() {
        let out = run_text(A2, &RunConfig::default()).unwrap();
        let json = out.report.to_json();
        let back = RunReport::from_json(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back.counts, out.report.counts);
        let again = run_text(A2, &RunConfig::default()).unwrap();
        assert_eq!(again.report.to_json(), json, "byte-identical across runs");
    }

    #[test]
    fn bound_cut_off_is_not_an_error() {
        let cfg = RunConfig {
            node_bound: Some(2),
            ..RunConfig::default()
        };
        let out = run_text(A2, &cfg).unwrap();
        assert!(!out.report.complete);
        assert!(out.report.counts.is_none());
        assert!(out.dot.is_none());
        assert_eq!(out.report.conditions.a.verdict, "inconclusive");
        assert_eq!(out.report.conditions.f.verdict, "false", "structural check still decides");
    }

    #[test]
    fn flag_and_build_errors_map_to_exit_codes() {
        let bad_field = RunConfig {
            field_override: Some(9),
            ..RunConfig::default()
        };
        let e = run_text(A2, &bad_field).unwrap_err();
        assert_eq!(e.exit_code(), 2);

        let unbounded_loop = "vertex 1\narrow x: 1 -> 1\n";
        let e = run_text(unbounded_loop, &RunConfig::default()).unwrap_err();
        assert_eq!(e.exit_code(), 3);
        assert!(e.to_string().contains("not finite-dimensional"), "{e}");
    }
}
