use crate::{ElementId, LatticeError, Result};

/// A finite partially ordered set over elements `0..n`, stored as a dense
/// `n x n` boolean table of the relation `i <= j`.
///
/// The poset axioms (reflexivity, antisymmetry, transitivity) are checked at
/// construction; all later operations may assume a valid order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    /// Row-major table; `leq[i * n + j]` holds iff element `i <= j`.
    leq: Vec<bool>,
    n: usize,
}

impl FinitePoset {
    /// Builds a poset from element labels and the full `<=` table.
    pub fn new(labels: Vec<String>, table: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(LatticeError::NotAPoset {
                reason: "relation table shape does not match element count",
                witness: vec![],
            });
        }
        let mut leq = vec![false; n * n];
        for (i, row) in table.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                leq[i * n + j] = v;
            }
        }
        let poset = FinitePoset { labels, leq, n };
        poset.validate()?;
        Ok(poset)
    }

    /// Builds a poset as the reflexive-transitive closure of the given
    /// strictly-ordered pairs `(upper, lower)` (meaning `lower < upper`).
    ///
    /// Fails with [`LatticeError::NotAPoset`] if the pairs contain a cycle.
    pub fn from_covers(labels: Vec<String>, pairs: &[(ElementId, ElementId)]) -> Result<Self> {
        let n = labels.len();
        for &(u, l) in pairs {
            for id in [u, l] {
                if id >= n {
                    return Err(LatticeError::BadElement { id, size: n });
                }
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(upper, lower) in pairs {
            leq[lower * n + upper] = true;
        }
        // Floyd-Warshall style closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let poset = FinitePoset { labels, leq, n };
        poset.validate()?;
        Ok(poset)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            if !self.leq[i * n + i] {
                return Err(LatticeError::NotAPoset {
                    reason: "relation is not reflexive",
                    witness: vec![i],
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq[i * n + j] && self.leq[j * n + i] {
                    return Err(LatticeError::NotAPoset {
                        reason: "relation is not antisymmetric",
                        witness: vec![i, j],
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !self.leq[i * n + j] {
                    continue;
                }
                for k in 0..n {
                    if self.leq[j * n + k] && !self.leq[i * n + k] {
                        return Err(LatticeError::NotAPoset {
                            reason: "relation is not transitive",
                            witness: vec![i, j, k],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn label(&self, id: ElementId) -> &str {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `a <= b` in the order.
    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.leq[a * self.n + b]
    }

    /// `a < b` in the order.
    #[inline]
    pub fn lt(&self, a: ElementId, b: ElementId) -> bool {
        a != b && self.leq(a, b)
    }

    /// `upper` covers `lower`: `lower < upper` with nothing strictly between.
    pub fn covers_pair(&self, upper: ElementId, lower: ElementId) -> bool {
        self.lt(lower, upper)
            && (0..self.n).all(|m| !(self.lt(lower, m) && self.lt(m, upper)))
    }

    /// All cover relations as `(upper, lower)` pairs, in lexicographic order.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for upper in 0..self.n {
            for lower in 0..self.n {
                if self.covers_pair(upper, lower) {
                    out.push((upper, lower));
                }
            }
        }
        out
    }

    /// The same elements with the order reversed.
    pub fn dual(&self) -> FinitePoset {
        let n = self.n;
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = self.leq[j * n + i];
            }
        }
        FinitePoset {
            labels: self.labels.clone(),
            leq,
            n,
        }
    }

    /// The unique minimum element, if the poset has one.
    pub fn bottom(&self) -> Option<ElementId> {
        (0..self.n).find(|&b| (0..self.n).all(|x| self.leq(b, x)))
    }

    /// The unique maximum element, if the poset has one.
    pub fn top(&self) -> Option<ElementId> {
        (0..self.n).find(|&t| (0..self.n).all(|x| self.leq(x, t)))
    }

    /// Number of elements `<= x`.
    pub fn down_count(&self, x: ElementId) -> usize {
        (0..self.n).filter(|&y| self.leq(y, x)).count()
    }

    /// Number of elements `>= x`.
    pub fn up_count(&self, x: ElementId) -> usize {
        (0..self.n).filter(|&y| self.leq(x, y)).count()
    }
}
