//! End-to-end consistency harness: every internal invariant the theory
//! forces is re-checked on a concrete algebra, and failures are
//! returned as data rather than panics.

use lattice_core::is_antiisomorphic;
use quiver_algebra::{BuildOptions, PathAlgebra};
use tau_tilting::{
    enumerate, enumerate_bricks, enumerate_semibricks, label_hasse_quiver, torsion_poset,
    EnumerationOptions,
};

use crate::conditions::{check_conditions, check_simple_generated};
use crate::fixtures::known_indecomposables;
use crate::oracle::{bruteforce_torsion_classes, OracleBounds};
use crate::verdict::ConditionReport;
use crate::{Result, TheoremError};

/// One named consistency check.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CheckOutcome {
    fn pass(name: &'static str, details: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            passed: true,
            details: details.into(),
        }
    }

    fn fail(name: &'static str, details: impl Into<String>) -> Self {
        CheckOutcome {
            name,
            passed: false,
            details: details.into(),
        }
    }
}

/// The condition report plus every cross-check that ran.
#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub report: ConditionReport,
    pub checks: Vec<CheckOutcome>,
}

impl CrossValidation {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Runs the full battery: condition consistency, Hasse regularity,
/// semidistributivity, the brick/join-irreducible and pair/semibrick
/// bijections, lattice duality against the opposite algebra, the
/// brute-force oracle where an indecomposable generator exists, and
/// the simple-generation criterion against condition (c).
///
/// With `force_oracle` a missing or oversized oracle is a failure
/// instead of a skip.
pub fn cross_validate(
    alg: &PathAlgebra,
    opts: &EnumerationOptions,
    force_oracle: bool,
) -> Result<CrossValidation> {
    let report = check_conditions(alg, opts)?;
    let mut checks: Vec<CheckOutcome> = Vec::new();

    checks.push(if report.inconsistent_with_theorem() {
        CheckOutcome::fail(
            "conditions-consistent",
            "decided conditions disagree, contradicting their equivalence",
        )
    } else {
        CheckOutcome::pass(
            "conditions-consistent",
            match report.unanimous() {
                Some(true) => "all eight conditions hold",
                Some(false) => "all eight conditions fail",
                None => "undecided conditions present, no contradiction",
            },
        )
    });

    let graph = enumerate(alg, opts)?;
    if !graph.complete {
        checks.push(CheckOutcome::pass(
            "enumeration",
            "skipped the structural checks: enumeration hit a bound",
        ));
        return Ok(CrossValidation { report, checks });
    }

    let n = alg.vertex_count();
    let lhq = label_hasse_quiver(alg, graph)?;
    let poset = torsion_poset(&lhq.graph)?;

    let reg = poset.is_hasse_regular(n);
    checks.push(if reg.holds {
        CheckOutcome::pass("hasse-regular", format!("every class has degree {n}"))
    } else {
        CheckOutcome::fail(
            "hasse-regular",
            format!("degree mismatch witness {:?}", reg.witness.unwrap_or_default()),
        )
    });

    match poset.as_lattice() {
        Err(e) => checks.push(CheckOutcome::fail("lattice", e.to_string())),
        Ok(lat) => {
            let js = lat.is_join_semidistributive();
            let ms = lat.is_meet_semidistributive();
            checks.push(if js.holds && ms.holds {
                CheckOutcome::pass("semidistributive", "join and meet forms both hold")
            } else {
                CheckOutcome::fail(
                    "semidistributive",
                    format!(
                        "join: {:?}, meet: {:?}",
                        js.witness.unwrap_or_default(),
                        ms.witness.unwrap_or_default()
                    ),
                )
            });

            let bricks = enumerate_bricks(alg, &lhq)?;
            let ji = lat.join_irreducibles();
            checks.push(if bricks.len() == ji.len() {
                CheckOutcome::pass(
                    "brick-join-irreducible-bijection",
                    format!("{} bricks = {} join-irreducible classes", bricks.len(), ji.len()),
                )
            } else {
                CheckOutcome::fail(
                    "brick-join-irreducible-bijection",
                    format!("{} bricks vs {} join-irreducibles", bricks.len(), ji.len()),
                )
            });
        }
    }

    let sbs = enumerate_semibricks(alg, &lhq)?;
    let mut distinct = sbs.clone();
    distinct.sort();
    distinct.dedup();
    checks.push(if distinct.len() == lhq.graph.nodes.len() {
        CheckOutcome::pass(
            "semibrick-injective",
            format!("{} pairs map to {} distinct semibricks", sbs.len(), distinct.len()),
        )
    } else {
        CheckOutcome::fail(
            "semibrick-injective",
            format!("{} pairs but only {} distinct semibricks", sbs.len(), distinct.len()),
        )
    });

    // Lattice duality against the opposite algebra.
    let op = PathAlgebra::build(alg.presentation().opposite(), BuildOptions::default())?;
    let op_graph = enumerate(&op, opts)?;
    if !op_graph.complete {
        checks.push(CheckOutcome::fail(
            "duality",
            "opposite-algebra enumeration hit a bound although the original completed",
        ));
    } else {
        let op_poset = torsion_poset(&op_graph)?;
        let anti = is_antiisomorphic(&poset, &op_poset)?;
        checks.push(match anti {
            Some(_) => CheckOutcome::pass(
                "duality",
                "torsion order is anti-isomorphic to the opposite algebra's",
            ),
            None => CheckOutcome::fail(
                "duality",
                format!(
                    "no anti-isomorphism between {} and {} classes",
                    poset.len(),
                    op_poset.len()
                ),
            ),
        });
    }

    // Brute-force oracle, where a complete indecomposable list exists.
    match known_indecomposables(alg) {
        None => checks.push(if force_oracle {
            CheckOutcome::fail("oracle", "no indecomposable generator for this shape")
        } else {
            CheckOutcome::pass("oracle", "skipped: no indecomposable generator")
        }),
        Some(indecs) => {
            match bruteforce_torsion_classes(alg, &indecs, &OracleBounds::default()) {
                Err(TheoremError::OracleTooLarge { reason }) => {
                    checks.push(if force_oracle {
                        CheckOutcome::fail("oracle", reason)
                    } else {
                        CheckOutcome::pass("oracle", format!("skipped: {reason}"))
                    });
                }
                Err(e) => return Err(e),
                Ok(oracle_poset) => {
                    let iso = lattice_core::is_isomorphic(&poset, &oracle_poset)?;
                    checks.push(match iso {
                        Some(_) => CheckOutcome::pass(
                            "oracle",
                            format!(
                                "mutation lattice matches the brute-force lattice on {} classes",
                                poset.len()
                            ),
                        ),
                        None => CheckOutcome::fail(
                            "oracle",
                            format!(
                                "mutation found {} classes, brute force {}",
                                poset.len(),
                                oracle_poset.len()
                            ),
                        ),
                    });
                }
            }
        }
    }

    // Simple-generation holds exactly when the lattice is Boolean.
    let sg = check_simple_generated(alg, &lhq.graph)?;
    let agree = sg.is_true() == report.c.is_true() && sg.is_false() == report.c.is_false();
    checks.push(if agree {
        CheckOutcome::pass(
            "simple-generated-iff-boolean",
            format!("simple-generation: {sg}; condition (c): {}", report.c),
        )
    } else {
        CheckOutcome::fail(
            "simple-generated-iff-boolean",
            format!("simple-generation: {sg}; condition (c): {}", report.c),
        )
    });

    Ok(CrossValidation { report, checks })
}
