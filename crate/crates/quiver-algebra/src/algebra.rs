//! Finite-dimensional path algebras of bound quivers.
//!
//! The basis consists of the paths that avoid every relation: trivial paths
//! first (one per vertex, in vertex order), then longer paths level by
//! level. A product of basis paths is either another basis path or zero,
//! so multiplication is a partial table.

use crate::field::FieldSpec;
use crate::presentation::BoundQuiverPresentation;
use crate::{AlgebraError, Result, Scalar};
use std::collections::HashMap;

/// A path: a start vertex plus a (possibly empty) composable arrow list,
/// in traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Paths longer than `max_length_factor * max(1, #arrows)` abort the
    /// build with [`AlgebraError::InfiniteDimensional`].
    pub max_length_factor: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_length_factor: 64,
        }
    }
}

#[derive(Debug, Clone)]
pub struct PathAlgebra {
    pres: BoundQuiverPresentation,
    paths: Vec<Path>,
    targets: Vec<usize>,
    mult: Vec<Vec<Option<usize>>>,
    from_to: Vec<Vec<Vec<usize>>>,
    trivial: Vec<usize>,
    arrow_path: Vec<usize>,
}

impl PathAlgebra {
    pub fn build(pres: BoundQuiverPresentation, opts: BuildOptions) -> Result<PathAlgebra> {
        pres.validate()?;
        let n = pres.vertex_count();
        let bound = opts.max_length_factor * pres.arrows.len().max(1);

        let mut paths: Vec<Path> = (0..n)
            .map(|v| Path {
                source: v,
                arrows: Vec::new(),
            })
            .collect();
        let mut targets: Vec<usize> = (0..n).collect();
        let mut level_start = 0;
        loop {
            let level_end = paths.len();
            if level_start == level_end {
                break;
            }
            let cur_len = paths[level_start].arrows.len();
            if cur_len >= bound {
                return Err(AlgebraError::InfiniteDimensional { bound });
            }
            for i in level_start..level_end {
                let at = targets[i];
                for (aid, arrow) in pres.arrows.iter().enumerate() {
                    if arrow.source != at {
                        continue;
                    }
                    let mut arrows = paths[i].arrows.clone();
                    arrows.push(aid);
                    if has_relation_suffix(&arrows, &pres.relations) {
                        continue;
                    }
                    paths.push(Path {
                        source: paths[i].source,
                        arrows,
                    });
                    targets.push(arrow.target);
                }
            }
            level_start = level_end;
        }

        let index: HashMap<Path, usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        let dim = paths.len();
        let mut mult = vec![vec![None; dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                if targets[i] != paths[j].source {
                    continue;
                }
                let mut arrows = paths[i].arrows.clone();
                arrows.extend_from_slice(&paths[j].arrows);
                let key = Path {
                    source: paths[i].source,
                    arrows,
                };
                mult[i][j] = index.get(&key).copied();
            }
        }

        let mut from_to = vec![vec![Vec::new(); n]; n];
        for (i, p) in paths.iter().enumerate() {
            from_to[p.source][targets[i]].push(i);
        }

        let trivial = (0..n).collect();
        let arrow_path = pres
            .arrows
            .iter()
            .enumerate()
            .map(|(aid, a)| {
                index
                    .get(&Path {
                        source: a.source,
                        arrows: vec![aid],
                    })
                    .copied()
                    .ok_or_else(|| crate::internal(format!("arrow `{}` missing from basis", a.name)))
            })
            .collect::<Result<Vec<usize>>>()?;

        Ok(PathAlgebra {
            pres,
            paths,
            targets,
            mult,
            from_to,
            trivial,
            arrow_path,
        })
    }

    pub fn presentation(&self) -> &BoundQuiverPresentation {
        &self.pres
    }

    pub fn field(&self) -> FieldSpec {
        self.pres.field
    }

    pub fn vertex_count(&self) -> usize {
        self.pres.vertex_count()
    }

    pub fn dimension(&self) -> usize {
        self.paths.len()
    }

    pub fn path(&self, id: usize) -> &Path {
        &self.paths[id]
    }

    pub fn path_source(&self, id: usize) -> usize {
        self.paths[id].source
    }

    pub fn path_target(&self, id: usize) -> usize {
        self.targets[id]
    }

    /// Basis id of the trivial path at `v`.
    pub fn trivial_path(&self, v: usize) -> usize {
        self.trivial[v]
    }

    /// Basis id of the length-one path of an arrow.
    pub fn arrow_as_path(&self, arrow: usize) -> usize {
        self.arrow_path[arrow]
    }

    /// Product of two basis paths: `Some(id)` or zero (`None`).
    pub fn mult(&self, i: usize, j: usize) -> Option<usize> {
        self.mult[i][j]
    }

    /// Basis path ids running from `u` to `v`, ascending.
    pub fn paths_from_to(&self, u: usize, v: usize) -> &[usize] {
        &self.from_to[u][v]
    }

    /// Human-readable path label, e.g. `e_1` or `a*b`.
    pub fn path_label(&self, id: usize) -> String {
        let p = &self.paths[id];
        if p.arrows.is_empty() {
            format!("e_{}", self.pres.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.pres.arrows[a].name.clone())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

fn has_relation_suffix(arrows: &[usize], relations: &[Vec<usize>]) -> bool {
    relations.iter().any(|rel| {
        rel.len() <= arrows.len() && arrows[arrows.len() - rel.len()..] == rel[..]
    })
}

/// A sparse element of the path algebra: sorted `(basis id, coefficient)`
/// pairs with nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElem(pub Vec<(usize, Scalar)>);

impl AlgElem {
    pub fn zero() -> AlgElem {
        AlgElem(Vec::new())
    }

    pub fn basis(id: usize, field: FieldSpec) -> AlgElem {
        AlgElem(vec![(id, field.one())])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &AlgElem, field: FieldSpec) -> AlgElem {
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            let pick_left = match (self.0.get(i), other.0.get(j)) {
                (Some((a, _)), Some((b, _))) => {
                    if a == b {
                        let s = field.add(&self.0[i].1, &other.0[j].1);
                        if !field.is_zero(&s) {
                            acc.push((*a, s));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                    a < b
                }
                (Some(_), None) => true,
                (None, Some(_)) => false,
                (None, None) => break,
            };
            if pick_left {
                acc.push(self.0[i].clone());
                i += 1;
            } else {
                acc.push(other.0[j].clone());
                j += 1;
            }
        }
        AlgElem(acc)
    }

    pub fn scale(&self, c: &Scalar, field: FieldSpec) -> AlgElem {
        if field.is_zero(c) {
            return AlgElem::zero();
        }
        AlgElem(
            self.0
                .iter()
                .map(|(id, v)| (*id, field.mul(c, v)))
                .collect(),
        )
    }

    pub fn mul(&self, other: &AlgElem, alg: &PathAlgebra) -> AlgElem {
        let field = alg.field();
        let mut terms: HashMap<usize, Scalar> = HashMap::new();
        for (i, ci) in &self.0 {
            for (j, cj) in &other.0 {
                if let Some(k) = alg.mult(*i, *j) {
                    let add = field.mul(ci, cj);
                    let entry = terms.entry(k).or_insert_with(|| field.zero());
                    *entry = field.add(entry, &add);
                }
            }
        }
        let mut out: Vec<(usize, Scalar)> = terms
            .into_iter()
            .filter(|(_, v)| !field.is_zero(v))
            .collect();
        out.sort_by_key(|(id, _)| *id);
        AlgElem(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Arrow;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn build(
        vertices: &[&str],
        arrows: &[(&str, usize, usize)],
        relations: &[&[usize]],
    ) -> Result<PathAlgebra> {
        let pres = BoundQuiverPresentation::new(
            f2(),
            vertices.iter().map(|s| s.to_string()).collect(),
            arrows
                .iter()
                .map(|(n, s, t)| Arrow {
                    name: n.to_string(),
                    source: *s,
                    target: *t,
                })
                .collect(),
            relations.iter().map(|r| r.to_vec()).collect(),
        )?;
        PathAlgebra::build(pres, BuildOptions::default())
    }

    #[test]
    fn a2_has_dimension_three() {
        let alg = build(&["1", "2"], &[("a", 0, 1)], &[]).unwrap();
        assert_eq!(alg.dimension(), 3);
        assert_eq!(alg.path_label(0), "e_1");
        assert_eq!(alg.path_label(2), "a");
        // e_1 * a = a, a * e_2 = a, a * e_1 = 0, e_1 * e_2 = 0.
        assert_eq!(alg.mult(0, 2), Some(2));
        assert_eq!(alg.mult(2, 1), Some(2));
        assert_eq!(alg.mult(2, 0), None);
        assert_eq!(alg.mult(0, 1), None);
    }

    #[test]
    fn a3_with_zero_relation_has_dimension_five() {
        let alg = build(&["1", "2", "3"], &[("a", 0, 1), ("b", 1, 2)], &[&[0, 1]]).unwrap();
        assert_eq!(alg.dimension(), 5);
        let a = alg.arrow_as_path(0);
        let b = alg.arrow_as_path(1);
        assert_eq!(alg.mult(a, b), None);
        assert!(alg.paths_from_to(0, 2).is_empty());
    }

    #[test]
    fn truncated_polynomial_ring() {
        // One loop x with relation x^3: basis e, x, x^2.
        let alg = build(&["1"], &[("x", 0, 0)], &[&[0, 0, 0]]).unwrap();
        assert_eq!(alg.dimension(), 3);
        let x = alg.arrow_as_path(0);
        let x2 = alg.mult(x, x).unwrap();
        assert_eq!(alg.mult(x, x2), None);
        assert_eq!(alg.mult(alg.trivial_path(0), x), Some(x));
    }

    #[test]
    fn unbounded_loop_is_rejected() {
        let err = build(&["1"], &[("x", 0, 0)], &[]).unwrap_err();
        assert!(matches!(err, AlgebraError::InfiniteDimensional { bound: 64 }));
    }

    #[test]
    fn commutative_square_with_both_relations() {
        let alg = build(
            &["1", "2", "3", "4"],
            &[("a", 0, 1), ("b", 0, 2), ("c", 1, 3), ("d", 2, 3)],
            &[&[0, 2], &[1, 3]],
        )
        .unwrap();
        // 4 trivial + 4 arrows, both length-two paths killed.
        assert_eq!(alg.dimension(), 8);
    }

    #[test]
    fn algelem_arithmetic() {
        let alg = build(&["1", "2"], &[("a", 0, 1)], &[]).unwrap();
        let f = alg.field();
        let e1 = AlgElem::basis(alg.trivial_path(0), f);
        let a = AlgElem::basis(alg.arrow_as_path(0), f);
        let s = e1.add(&a, f);
        assert_eq!(s.0.len(), 2);
        // (e1 + a)(e1 + a) = e1 + a over F_2 because a*a = 0 and e1*a = a.
        let sq = s.mul(&s, &alg);
        assert_eq!(sq, s);
        let doubled = a.add(&a, f);
        assert!(doubled.is_zero());
    }
}
