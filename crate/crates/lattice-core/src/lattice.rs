use crate::{ElementId, FinitePoset, LatticeError, Result};

/// Which lattice operation failed to exist for a pair of elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeOp {
    Meet,
    Join,
}

impl std::fmt::Display for LatticeOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeOp::Meet => write!(f, "meet"),
            LatticeOp::Join => write!(f, "join"),
        }
    }
}

/// A finite lattice: a [`FinitePoset`] together with total meet and join
/// tables and the two bounds, all computed and verified at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    /// Row-major `n x n` tables of element ids.
    meet: Vec<ElementId>,
    join: Vec<ElementId>,
    bottom: ElementId,
    top: ElementId,
}

impl FinitePoset {
    /// Upgrades the poset to a lattice by computing meets and joins of all
    /// pairs. Fails with [`LatticeError::NotALattice`] carrying the first
    /// offending pair if some pair lacks a greatest lower or least upper
    /// bound.
    pub fn as_lattice(&self) -> Result<FiniteLattice> {
        let n = self.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = self.bound_of_pair(a, b, LatticeOp::Meet)?;
                join[a * n + b] = self.bound_of_pair(a, b, LatticeOp::Join)?;
            }
        }
        // A finite lattice is bounded; the bounds exist once all pairs do.
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x]);
        let top = (0..n).fold(0, |acc, x| join[acc * n + x]);
        Ok(FiniteLattice {
            poset: self.clone(),
            meet,
            join,
            bottom,
            top,
        })
    }

    /// Greatest lower bound (or least upper bound) of `{a, b}`, if it exists.
    fn bound_of_pair(&self, a: ElementId, b: ElementId, op: LatticeOp) -> Result<ElementId> {
        let n = self.len();
        let below = |x: ElementId, y: ElementId| match op {
            LatticeOp::Meet => self.leq(x, y),
            LatticeOp::Join => self.leq(y, x),
        };
        // Candidates: common lower (resp. upper) bounds of a and b.
        let mut best: Option<ElementId> = None;
        for c in 0..n {
            if below(c, a) && below(c, b) {
                match best {
                    None => best = Some(c),
                    Some(cur) => {
                        if below(cur, c) {
                            best = Some(c);
                        }
                    }
                }
            }
        }
        let cand = best.ok_or(LatticeError::NotALattice { a, b, op })?;
        // The candidate is maximal among bounds scanned so far only in scan
        // order; verify it dominates every common bound.
        for c in 0..n {
            if below(c, a) && below(c, b) && !below(c, cand) {
                return Err(LatticeError::NotALattice { a, b, op });
            }
        }
        Ok(cand)
    }
}

impl FiniteLattice {
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn meet(&self, a: ElementId, b: ElementId) -> ElementId {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: ElementId, b: ElementId) -> ElementId {
        self.join[a * self.len() + b]
    }

    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    pub fn top(&self) -> ElementId {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: ElementId, b: ElementId) -> bool {
        self.poset.leq(a, b)
    }

    /// Meet of a nonempty set of elements.
    pub fn meet_all(&self, elems: impl IntoIterator<Item = ElementId>) -> ElementId {
        let mut it = elems.into_iter();
        let first = it.next().expect("meet of empty set");
        it.fold(first, |acc, x| self.meet(acc, x))
    }

    /// Join of a nonempty set of elements.
    pub fn join_all(&self, elems: impl IntoIterator<Item = ElementId>) -> ElementId {
        let mut it = elems.into_iter();
        let first = it.next().expect("join of empty set");
        it.fold(first, |acc, x| self.join(acc, x))
    }

    /// The dual lattice (order reversed, meet and join exchanged).
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            poset: self.poset.dual(),
            meet: self.join.clone(),
            join: self.meet.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }
}
