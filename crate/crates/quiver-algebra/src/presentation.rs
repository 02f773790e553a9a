//! Bound quiver presentations: a quiver plus monomial relations.

use crate::field::FieldSpec;
use crate::{AlgebraError, Result};
use std::collections::HashSet;

/// An arrow of the quiver. Source and target are vertex indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A quiver with monomial relations over a fixed coefficient field.
///
/// A relation is a composable sequence of at least two arrow indices,
/// written in traversal order: `[a, b]` means "first `a`, then `b`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundQuiverPresentation {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Vec<usize>>,
}

impl BoundQuiverPresentation {
    pub fn new(
        field: FieldSpec,
        vertices: Vec<String>,
        arrows: Vec<Arrow>,
        relations: Vec<Vec<usize>>,
    ) -> Result<BoundQuiverPresentation> {
        let p = BoundQuiverPresentation {
            field,
            vertices,
            arrows,
            relations,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(invalid("the quiver needs at least one vertex"));
        }
        let mut seen = HashSet::new();
        for v in &self.vertices {
            if v.is_empty() {
                return Err(invalid("empty vertex name"));
            }
            if !seen.insert(v.as_str()) {
                return Err(invalid(format!("duplicate vertex name `{v}`")));
            }
        }
        let mut seen = HashSet::new();
        for a in &self.arrows {
            if a.name.is_empty() {
                return Err(invalid("empty arrow name"));
            }
            if !seen.insert(a.name.as_str()) {
                return Err(invalid(format!("duplicate arrow name `{}`", a.name)));
            }
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(invalid(format!(
                    "arrow `{}` references a vertex outside 0..{}",
                    a.name,
                    self.vertices.len()
                )));
            }
        }
        for (i, rel) in self.relations.iter().enumerate() {
            if rel.len() < 2 {
                return Err(invalid(format!(
                    "relation {i} has length {}; monomial relations need at least two arrows",
                    rel.len()
                )));
            }
            for &a in rel {
                if a >= self.arrows.len() {
                    return Err(invalid(format!(
                        "relation {i} references arrow index {a} outside 0..{}",
                        self.arrows.len()
                    )));
                }
            }
            for w in rel.windows(2) {
                let (x, y) = (&self.arrows[w[0]], &self.arrows[w[1]]);
                if x.target != y.source {
                    return Err(invalid(format!(
                        "relation {i} is not composable: `{}` ends at `{}` but `{}` starts at `{}`",
                        x.name,
                        self.vertices[x.target],
                        y.name,
                        self.vertices[y.source],
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// The opposite presentation: arrows reversed, relations read backwards.
    pub fn opposite(&self) -> BoundQuiverPresentation {
        BoundQuiverPresentation {
            field: self.field,
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| r.iter().rev().copied().collect())
                .collect(),
        }
    }

    /// Deletes the vertices where `keep` is false, together with all arrows
    /// touching them and all relations using such arrows. Returns the new
    /// presentation plus old-to-new index maps for vertices and arrows.
    ///
    /// For monomial relations this is exactly the quotient by the idempotent
    /// ideal of the deleted vertices: any path through a deleted vertex dies,
    /// and the surviving relations are the original ones supported on kept
    /// arrows.
    pub fn delete_vertices(
        &self,
        keep: &[bool],
    ) -> Result<(BoundQuiverPresentation, Vec<Option<usize>>, Vec<Option<usize>>)> {
        if keep.len() != self.vertices.len() {
            return Err(crate::internal("keep mask has wrong length"));
        }
        if !keep.iter().any(|&k| k) {
            return Err(invalid("cannot delete every vertex"));
        }
        let mut vmap = vec![None; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if keep[i] {
                vmap[i] = Some(vertices.len());
                vertices.push(v.clone());
            }
        }
        let mut amap = vec![None; self.arrows.len()];
        let mut arrows = Vec::new();
        for (i, a) in self.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (vmap[a.source], vmap[a.target]) {
                amap[i] = Some(arrows.len());
                arrows.push(Arrow {
                    name: a.name.clone(),
                    source: s,
                    target: t,
                });
            }
        }
        let relations = self
            .relations
            .iter()
            .filter_map(|rel| {
                rel.iter()
                    .map(|&a| amap[a])
                    .collect::<Option<Vec<usize>>>()
            })
            .collect();
        let pres = BoundQuiverPresentation {
            field: self.field,
            vertices,
            arrows,
            relations,
        };
        pres.validate()?;
        Ok((pres, vmap, amap))
    }
}

fn invalid(reason: impl Into<String>) -> AlgebraError {
    AlgebraError::InvalidPresentation {
        reason: reason.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn a3_with_relation() -> BoundQuiverPresentation {
        // 1 --a--> 2 --b--> 3 with relation a b = 0.
        BoundQuiverPresentation::new(
            f2(),
            vec!["1".into(), "2".into(), "3".into()],
            vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 1,
                    target: 2,
                },
            ],
            vec![vec![0, 1]],
        )
        .unwrap()
    }

    #[test]
    fn rejects_malformed_presentations() {
        let dup = BoundQuiverPresentation::new(
            f2(),
            vec!["1".into(), "1".into()],
            vec![],
            vec![],
        );
        assert!(matches!(dup, Err(AlgebraError::InvalidPresentation { .. })));

        let bad_rel = BoundQuiverPresentation::new(
            f2(),
            vec!["1".into(), "2".into()],
            vec![Arrow {
                name: "a".into(),
                source: 0,
                target: 1,
            }],
            vec![vec![0, 0]],
        );
        assert!(matches!(bad_rel, Err(AlgebraError::InvalidPresentation { .. })));

        let short_rel = BoundQuiverPresentation::new(
            f2(),
            vec!["1".into()],
            vec![Arrow {
                name: "x".into(),
                source: 0,
                target: 0,
            }],
            vec![vec![0]],
        );
        assert!(matches!(short_rel, Err(AlgebraError::InvalidPresentation { .. })));
    }

    #[test]
    fn opposite_reverses_arrows_and_relations() {
        let p = a3_with_relation();
        let op = p.opposite();
        assert_eq!(op.arrows[0].source, 1);
        assert_eq!(op.arrows[0].target, 0);
        assert_eq!(op.relations, vec![vec![1, 0]]);
        op.validate().unwrap();
        assert_eq!(op.opposite(), p);
    }

    #[test]
    fn vertex_deletion_drops_arrows_and_relations() {
        let p = a3_with_relation();
        let (q, vmap, amap) = p.delete_vertices(&[true, false, true]).unwrap();
        assert_eq!(q.vertices, vec!["1".to_string(), "3".to_string()]);
        assert!(q.arrows.is_empty());
        assert!(q.relations.is_empty());
        assert_eq!(vmap, vec![Some(0), None, Some(1)]);
        assert_eq!(amap, vec![None, None]);

        let (q2, _, amap2) = p.delete_vertices(&[false, true, true]).unwrap();
        assert_eq!(q2.arrows.len(), 1);
        assert_eq!(q2.arrows[0].name, "b");
        assert_eq!(amap2, vec![None, Some(0)]);
        assert!(q2.relations.is_empty());
    }
}
