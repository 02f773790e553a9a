use crate::scan::first_hit;
use crate::{ElementId, FiniteLattice, FinitePoset};

/// Outcome of a structural property check.
///
/// `witness` is `None` when the property holds. On failure it carries the
/// first counterexample found under the fixed element ordering; its meaning
/// per property:
///
/// * semimodularity: `[a, b]` — `a, b` cover `a ∧ b` but `a ∨ b` does not
///   cover both,
/// * distributivity: `[x, y, z]` with `x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)`,
/// * Booleanness: a distributivity witness, or `[a]` for an element without
///   a complement,
/// * semidistributivity: `[x, z]` — the set `{y : x ∨ y = z}` (resp. meet
///   form) is nonempty but its bound fails to reproduce `z`,
/// * Hasse regularity: `[x, d]` — element `x` has undirected cover degree
///   `d` instead of the requested one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: &'static str,
    pub holds: bool,
    pub witness: Option<Vec<ElementId>>,
}

impl PropertyReport {
    pub fn passed(property: &'static str) -> Self {
        PropertyReport {
            property,
            holds: true,
            witness: None,
        }
    }

    pub fn failed(property: &'static str, witness: Vec<ElementId>) -> Self {
        PropertyReport {
            property,
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Result of the Boolean check: the base report plus, when the lattice is
/// Boolean, the (necessarily unique) complement of each element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanCheck {
    pub report: PropertyReport,
    pub complement: Option<Vec<ElementId>>,
}

/// Witness that a lattice is isomorphic to the Boolean lattice of subsets of
/// an `atom_count`-element set: each element is mapped to the set of atoms
/// below it, encoded as a bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanIso {
    pub atom_count: usize,
    pub atom_sets: Vec<u64>,
}

impl FiniteLattice {
    /// Upper semimodularity in cover form: whenever `a` and `b` both cover
    /// `a ∧ b`, the join `a ∨ b` covers both `a` and `b`.
    pub fn is_upper_semimodular(&self) -> PropertyReport {
        let n = self.len();
        let hit = first_hit(n * n, |idx| {
            let (a, b) = (idx / n, idx % n);
            if a >= b {
                return false;
            }
            let m = self.meet(a, b);
            if !(self.poset().covers_pair(a, m) && self.poset().covers_pair(b, m)) {
                return false;
            }
            let j = self.join(a, b);
            !(self.poset().covers_pair(j, a) && self.poset().covers_pair(j, b))
        });
        match hit {
            None => PropertyReport::passed("upper-semimodular"),
            Some(idx) => PropertyReport::failed("upper-semimodular", vec![idx / n, idx % n]),
        }
    }

    /// Lower semimodularity: the dual condition.
    pub fn is_lower_semimodular(&self) -> PropertyReport {
        let n = self.len();
        let hit = first_hit(n * n, |idx| {
            let (a, b) = (idx / n, idx % n);
            if a >= b {
                return false;
            }
            let j = self.join(a, b);
            if !(self.poset().covers_pair(j, a) && self.poset().covers_pair(j, b)) {
                return false;
            }
            let m = self.meet(a, b);
            !(self.poset().covers_pair(a, m) && self.poset().covers_pair(b, m))
        });
        match hit {
            None => PropertyReport::passed("lower-semimodular"),
            Some(idx) => PropertyReport::failed("lower-semimodular", vec![idx / n, idx % n]),
        }
    }

    /// Distributivity, by scanning all triples.
    pub fn is_distributive(&self) -> PropertyReport {
        let n = self.len();
        let hit = first_hit(n * n * n, |idx| {
            let x = idx / (n * n);
            let y = (idx / n) % n;
            let z = idx % n;
            self.meet(x, self.join(y, z)) != self.join(self.meet(x, y), self.meet(x, z))
        });
        match hit {
            None => PropertyReport::passed("distributive"),
            Some(idx) => {
                PropertyReport::failed("distributive", vec![idx / (n * n), (idx / n) % n, idx % n])
            }
        }
    }

    /// Boolean = distributive and complemented. On success the complement map
    /// is returned; complements are unique in a distributive lattice.
    pub fn is_boolean(&self) -> BooleanCheck {
        let distributive = self.is_distributive();
        if !distributive.holds {
            return BooleanCheck {
                report: PropertyReport {
                    property: "boolean",
                    holds: false,
                    witness: distributive.witness,
                },
                complement: None,
            };
        }
        let n = self.len();
        let mut complement = Vec::with_capacity(n);
        for a in 0..n {
            let c = (0..n)
                .find(|&b| self.meet(a, b) == self.bottom() && self.join(a, b) == self.top());
            match c {
                Some(b) => complement.push(b),
                None => {
                    return BooleanCheck {
                        report: PropertyReport::failed("boolean", vec![a]),
                        complement: None,
                    }
                }
            }
        }
        BooleanCheck {
            report: PropertyReport::passed("boolean"),
            complement: Some(complement),
        }
    }

    /// Searches for an isomorphism onto the lattice of subsets of the atom
    /// set, i.e. a direct certificate that the lattice is Boolean. Returns
    /// `None` when no such isomorphism exists.
    pub fn boolean_subset_isomorphism(&self) -> Option<BooleanIso> {
        let n = self.len();
        let atoms: Vec<ElementId> = (0..n)
            .filter(|&x| self.poset().covers_pair(x, self.bottom()))
            .collect();
        let k = atoms.len();
        if k > 63 || n != 1usize << k {
            return None;
        }
        let mut atom_sets = Vec::with_capacity(n);
        for x in 0..n {
            let mut mask = 0u64;
            for (bit, &a) in atoms.iter().enumerate() {
                if self.leq(a, x) {
                    mask |= 1 << bit;
                }
            }
            atom_sets.push(mask);
        }
        // The map must be injective (hence bijective by the size count) and
        // an order isomorphism in both directions.
        let mut seen = vec![false; n];
        for &m in &atom_sets {
            let slot = &mut seen[m as usize];
            if *slot {
                return None;
            }
            *slot = true;
        }
        for x in 0..n {
            for y in 0..n {
                let set_leq = atom_sets[x] & !atom_sets[y] == 0;
                if self.leq(x, y) != set_leq {
                    return None;
                }
            }
        }
        Some(BooleanIso {
            atom_count: k,
            atom_sets,
        })
    }

    /// Join semidistributivity in the finite form: for every `x` and every
    /// achievable join value `z`, the set `S = {y : x ∨ y = z}` must satisfy
    /// `x ∨ (⋀ S) = z`.
    pub fn is_join_semidistributive(&self) -> PropertyReport {
        let n = self.len();
        let hit = first_hit(n * n, |idx| {
            let (x, z) = (idx / n, idx % n);
            let mut members = (0..n).filter(|&y| self.join(x, y) == z);
            match members.next() {
                None => false,
                Some(first) => {
                    let m = members.fold(first, |acc, y| self.meet(acc, y));
                    self.join(x, m) != z
                }
            }
        });
        match hit {
            None => PropertyReport::passed("join-semidistributive"),
            Some(idx) => PropertyReport::failed("join-semidistributive", vec![idx / n, idx % n]),
        }
    }

    /// Meet semidistributivity: the dual condition.
    pub fn is_meet_semidistributive(&self) -> PropertyReport {
        let n = self.len();
        let hit = first_hit(n * n, |idx| {
            let (x, z) = (idx / n, idx % n);
            let mut members = (0..n).filter(|&y| self.meet(x, y) == z);
            match members.next() {
                None => false,
                Some(first) => {
                    let j = members.fold(first, |acc, y| self.join(acc, y));
                    self.meet(x, j) != z
                }
            }
        });
        match hit {
            None => PropertyReport::passed("meet-semidistributive"),
            Some(idx) => PropertyReport::failed("meet-semidistributive", vec![idx / n, idx % n]),
        }
    }

    /// Elements with exactly one lower cover (equivalently, in a finite
    /// lattice: the completely join-irreducible elements), ascending.
    pub fn join_irreducibles(&self) -> Vec<ElementId> {
        let n = self.len();
        (0..n)
            .filter(|&x| (0..n).filter(|&y| self.poset().covers_pair(x, y)).count() == 1)
            .collect()
    }
}

impl FinitePoset {
    /// Every element has undirected cover degree exactly `n`.
    pub fn is_hasse_regular(&self, n: usize) -> PropertyReport {
        let covers = self.covers();
        for x in 0..self.len() {
            let d = covers.iter().filter(|&&(u, l)| u == x || l == x).count();
            if d != n {
                return PropertyReport::failed("hasse-regular", vec![x, d]);
            }
        }
        PropertyReport::passed("hasse-regular")
    }
}
