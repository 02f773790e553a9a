//! Verdicts and the eight-condition report.

use std::fmt;

/// Outcome of deciding one condition. `Inconclusive` only ever arises
/// from an enumeration that was cut off by a bound; decided verdicts
/// always carry human-checkable evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    True { evidence: String },
    False { evidence: String },
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn is_true(&self) -> bool {
        matches!(self, Verdict::True { .. })
    }

    pub fn is_false(&self) -> bool {
        matches!(self, Verdict::False { .. })
    }

    pub fn is_inconclusive(&self) -> bool {
        matches!(self, Verdict::Inconclusive { .. })
    }

    /// The evidence or reason text.
    pub fn detail(&self) -> &str {
        match self {
            Verdict::True { evidence } | Verdict::False { evidence } => evidence,
            Verdict::Inconclusive { reason } => reason,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::True { evidence } => write!(f, "true ({evidence})"),
            Verdict::False { evidence } => write!(f, "false ({evidence})"),
            Verdict::Inconclusive { reason } => write!(f, "inconclusive ({reason})"),
        }
    }
}

/// Verdicts for the eight equivalent conditions, plus the input
/// fingerprint and the bounds the decision ran under.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    /// Deterministic one-line description of the algebra.
    pub algebra: String,
    /// Echo of the enumeration bounds used.
    pub node_bound: usize,
    pub dim_bound: usize,
    /// (a) the lattice of all torsion classes is upper semimodular.
    pub a: Verdict,
    /// (a') the functorially finite torsion classes form an upper
    /// semimodular lattice.
    pub a_prime: Verdict,
    /// (b) the lattice of all torsion classes is lower semimodular.
    pub b: Verdict,
    /// (b') the functorially finite torsion classes form a lower
    /// semimodular lattice.
    pub b_prime: Verdict,
    /// (c) the torsion classes form the Boolean lattice on the simples.
    pub c: Verdict,
    /// (d) every brick is isomorphic to a simple module.
    pub d: Verdict,
    /// (e) the regular module is the unique basic tau-tilting module.
    pub e: Verdict,
    /// (f) the algebra is a product of local algebras.
    pub f: Verdict,
}

impl ConditionReport {
    /// The verdicts with their condition names, in order.
    pub fn verdicts(&self) -> [(&'static str, &Verdict); 8] {
        [
            ("a", &self.a),
            ("a'", &self.a_prime),
            ("b", &self.b),
            ("b'", &self.b_prime),
            ("c", &self.c),
            ("d", &self.d),
            ("e", &self.e),
            ("f", &self.f),
        ]
    }

    /// The conditions are equivalent, so one `True` next to one `False`
    /// (both decided) means the toolchain disagrees with the theorem.
    pub fn inconsistent_with_theorem(&self) -> bool {
        let vs = self.verdicts();
        vs.iter().any(|(_, v)| v.is_true()) && vs.iter().any(|(_, v)| v.is_false())
    }

    /// `Some(answer)` when every condition was decided and they agree.
    pub fn unanimous(&self) -> Option<bool> {
        let vs = self.verdicts();
        if vs.iter().all(|(_, v)| v.is_true()) {
            Some(true)
        } else if vs.iter().all(|(_, v)| v.is_false()) {
            Some(false)
        } else {
            None
        }
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra: {}", self.algebra)?;
        for (name, v) in self.verdicts() {
            writeln!(f, "  ({name}) {v}")?;
        }
        if self.inconsistent_with_theorem() {
            writeln!(f, "  ** INCONSISTENT WITH THE THEOREM **")?;
        }
        Ok(())
    }
}
