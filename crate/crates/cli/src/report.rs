//! The machine-readable run report.
//!
//! Schema (version 1), field by field:
//!
//! * `schema_version` — always `1` for this layout.
//! * `algebra` — deterministic one-line fingerprint of the input
//!   presentation (field, vertices, arrows, relations).
//! * `field` — `"F_p"` or `"Q"`.
//! * `vertex_count` — number of simple modules.
//! * `bounds` — the enumeration caps the run used.
//! * `complete` — whether enumeration finished within the bounds. When
//!   `false`, `counts` and `lattice` are absent and every lattice-dependent
//!   condition verdict is `"inconclusive"`.
//! * `discovered_nodes` — pairs found before stopping (equals
//!   `counts.torsion_classes` on a complete run).
//! * `counts` — torsion classes, Hasse arrows, bricks appearing as labels,
//!   distinct semibricks, and tau-tilting modules (pairs with full support).
//! * `lattice` — property verdicts, each with an element-index witness on
//!   failure; `boolean_atoms` is the atom count when the lattice is the
//!   Boolean lattice on the simples.
//! * `conditions` — the eight condition verdicts `a, a', b, b', c, d, e, f`,
//!   whether the decided ones are mutually consistent, and the unanimous
//!   answer when all eight agree.
//! * `checks` — every cross-validation that ran, with pass/fail and detail.
//!
//! Wall-clock timings are kept out of the serialized report on purpose:
//! the artifact is byte-identical across runs and thread counts, so it can
//! be diffed and committed. Timings go to stderr instead.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use lattice_core::PropertyReport;
use theorem_lab::{CheckOutcome, ConditionReport, Verdict};

/// Version of the JSON layout documented in this module.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsEcho {
    pub node_bound: usize,
    pub dim_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub torsion_classes: usize,
    pub hasse_arrows: usize,
    pub bricks: usize,
    pub semibricks: usize,
    /// Pairs with empty projective part, i.e. honest tau-tilting modules.
    pub tau_tilting_modules: usize,
}

/// One lattice property with its witness (element indices into the
/// torsion-class list, smallest counterexample found).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropJson {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
}

impl From<PropertyReport> for PropJson {
    fn from(r: PropertyReport) -> Self {
        PropJson {
            holds: r.holds,
            witness: r.witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeVerdicts {
    /// Whether meets and joins exist at all (they always do for a complete
    /// enumeration; recorded as data, not assumed).
    pub is_lattice: bool,
    pub hasse_regular: PropJson,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub upper_semimodular: Option<PropJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lower_semimodular: Option<PropJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub distributive: Option<PropJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub boolean: Option<PropJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub join_semidistributive: Option<PropJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meet_semidistributive: Option<PropJson>,
    /// Atom count of the Boolean realization, when one exists.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub boolean_atoms: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    /// `"true"`, `"false"`, or `"inconclusive"`.
    pub verdict: String,
    /// Evidence for decided verdicts, the reason for inconclusive ones.
    pub detail: String,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        let verdict = match v {
            Verdict::True { .. } => "true",
            Verdict::False { .. } => "false",
            Verdict::Inconclusive { .. } => "inconclusive",
        };
        VerdictJson {
            verdict: verdict.into(),
            detail: v.detail().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionsJson {
    pub a: VerdictJson,
    pub a_prime: VerdictJson,
    pub b: VerdictJson,
    pub b_prime: VerdictJson,
    pub c: VerdictJson,
    pub d: VerdictJson,
    pub e: VerdictJson,
    pub f: VerdictJson,
    /// False exactly when one decided verdict is true and another false,
    /// which would contradict the equivalence of the conditions.
    pub consistent_with_theorem: bool,
    /// The common answer when all eight verdicts agree.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub unanimous: Option<bool>,
}

impl From<&ConditionReport> for ConditionsJson {
    fn from(r: &ConditionReport) -> Self {
        ConditionsJson {
            a: (&r.a).into(),
            a_prime: (&r.a_prime).into(),
            b: (&r.b).into(),
            b_prime: (&r.b_prime).into(),
            c: (&r.c).into(),
            d: (&r.d).into(),
            e: (&r.e).into(),
            f: (&r.f).into(),
            consistent_with_theorem: !r.inconsistent_with_theorem(),
            unanimous: r.unanimous(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

impl From<&CheckOutcome> for CheckJson {
    fn from(c: &CheckOutcome) -> Self {
        CheckJson {
            name: c.name.to_string(),
            passed: c.passed,
            details: c.details.clone(),
        }
    }
}

/// Wall-clock milliseconds per pipeline stage. Excluded from the JSON
/// artifact so that reports stay byte-identical across runs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Timings {
    pub parse_ms: u128,
    pub build_ms: u128,
    pub enumerate_ms: u128,
    pub label_ms: u128,
    pub validate_ms: u128,
    pub total_ms: u128,
}

/// Everything one run produces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub algebra: String,
    pub field: String,
    pub vertex_count: usize,
    pub bounds: BoundsEcho,
    pub complete: bool,
    pub discovered_nodes: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counts: Option<Counts>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lattice: Option<LatticeVerdicts>,
    pub conditions: ConditionsJson,
    pub checks: Vec<CheckJson>,
    #[serde(skip, default)]
    pub timings: Timings,
}

impl RunReport {
    /// The canonical serialization: pretty JSON plus a trailing newline.
    /// Field order is fixed by the struct, so equal reports serialize to
    /// equal bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<RunReport> {
        serde_json::from_str(text)
    }

    /// Human-readable summary for stdout.
    pub fn human_summary(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "algebra: {}", self.algebra);
        if self.complete {
            let _ = writeln!(s, "enumeration: complete");
        } else {
            let _ = writeln!(
                s,
                "enumeration: stopped at the bound after {} pairs (verdicts inconclusive)",
                self.discovered_nodes
            );
        }
        if let Some(c) = &self.counts {
            let _ = writeln!(
                s,
                "counts: {} torsion classes, {} Hasse arrows, {} bricks, {} semibricks, {} tau-tilting modules",
                c.torsion_classes, c.hasse_arrows, c.bricks, c.semibricks, c.tau_tilting_modules
            );
        }
        if let Some(l) = &self.lattice {
            let yn = |p: &Option<PropJson>| match p {
                Some(p) if p.holds => "yes",
                Some(_) => "no",
                None => "-",
            };
            let _ = writeln!(
                s,
                "lattice: is_lattice={} hasse_regular={} upper_semimodular={} lower_semimodular={} distributive={} boolean={} join_semidistributive={} meet_semidistributive={}",
                if l.is_lattice { "yes" } else { "no" },
                if l.hasse_regular.holds { "yes" } else { "no" },
                yn(&l.upper_semimodular),
                yn(&l.lower_semimodular),
                yn(&l.distributive),
                yn(&l.boolean),
                yn(&l.join_semidistributive),
                yn(&l.meet_semidistributive),
            );
        }
        let _ = writeln!(s, "conditions:");
        for (name, v) in [
            ("a", &self.conditions.a),
            ("a'", &self.conditions.a_prime),
            ("b", &self.conditions.b),
            ("b'", &self.conditions.b_prime),
            ("c", &self.conditions.c),
            ("d", &self.conditions.d),
            ("e", &self.conditions.e),
            ("f", &self.conditions.f),
        ] {
            let _ = writeln!(s, "  ({name}) {} ({})", v.verdict, v.detail);
        }
        if !self.conditions.consistent_with_theorem {
            let _ = writeln!(s, "  ** decided verdicts disagree: INCONSISTENT **");
        }
        if let Some(ans) = self.conditions.unanimous {
            let _ = writeln!(s, "  unanimous: {ans}");
        }
        let failed: Vec<&CheckJson> = self.checks.iter().filter(|c| !c.passed).collect();
        let _ = writeln!(
            s,
            "cross-checks: {} passed, {} failed",
            self.checks.len() - failed.len(),
            failed.len()
        );
        for c in failed {
            let _ = writeln!(s, "  FAILED {}: {}", c.name, c.details);
        }
        s
    }
}
