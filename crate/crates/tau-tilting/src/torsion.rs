//! The generation order on support tau-tilting pairs and the brick
//! labels of its Hasse arrows.
//!
//! Each pair generates a torsion class; arrows of the exchange quiver
//! are exactly the cover relations of these torsion classes under
//! inclusion. The label of the arrow leaving `(M, P)` at the exchanged
//! summand `X` is the head of `X` over the rest of the pair:
//! `X / (trace of M/X in X + rad End(X) X)`. It is simultaneously the
//! simple quotient of `X` in the category of modules generated by `M`
//! and the unique brick in the torsion class gap the arrow spans.

use lattice_core::FinitePoset;
use quiver_algebra::{
    hom_space, indec_isomorphic, is_brick, quotient_rep, radical_basis, Mat, PathAlgebra,
    Representation,
};

use crate::enumerate::ExchangeGraph;
use crate::{Result, TauTiltingError};

/// The inclusion order of the torsion classes attached to the pairs of
/// a complete exchange graph, as a finite poset. Element ids equal node
/// ids of the graph.
pub fn torsion_poset(graph: &ExchangeGraph) -> Result<FinitePoset> {
    if !graph.complete {
        return Err(TauTiltingError::IncompleteEnumeration {
            reason: "exchange graph was cut off by a search bound".into(),
        });
    }
    let labels: Vec<String> = graph
        .nodes
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let dims: Vec<String> = p
                .summands
                .iter()
                .map(|s| {
                    let d: Vec<String> = s.dims.iter().map(|d| d.to_string()).collect();
                    format!("({})", d.join(","))
                })
                .collect();
            let ps: Vec<String> = p.projectives.iter().map(|v| v.to_string()).collect();
            format!("n{i} {}|{}", dims.join("+"), ps.join(","))
        })
        .collect();
    let covers: Vec<(usize, usize)> = graph.edges.iter().map(|e| (e.from, e.to)).collect();
    FinitePoset::from_covers(labels, &covers).map_err(|e| TauTiltingError::InconsistentOrder {
        reason: e.to_string(),
    })
}

/// The brick labeling the arrow `graph.edges[edge_index]`.
pub fn brick_label(
    alg: &PathAlgebra,
    graph: &ExchangeGraph,
    edge_index: usize,
) -> Result<Representation> {
    let edge = &graph.edges[edge_index];
    let node = &graph.nodes[edge.from];
    let x = &node.summands[edge.exchanged];
    let f = alg.field();
    let n = alg.vertex_count();

    // Image rows at each vertex of every map from the other summands
    // into X, plus every radical endomorphism of X.
    let mut image_rows: Vec<Vec<Mat>> = vec![Vec::new(); n];
    for (i, u) in node.summands.iter().enumerate() {
        if i == edge.exchanged {
            continue;
        }
        for phi in hom_space(alg, u, x).maps {
            for v in 0..n {
                image_rows[v].push(phi.mats[v].clone());
            }
        }
    }
    for rho in radical_basis(alg, x)? {
        for v in 0..n {
            image_rows[v].push(rho.mats[v].clone());
        }
    }
    let rows: Vec<Mat> = (0..n)
        .map(|v| {
            let parts: Vec<&Mat> = image_rows[v].iter().collect();
            if parts.is_empty() {
                Mat::zeros(f, 0, x.dims[v])
            } else {
                Mat::vstack(f, &parts).row_basis()
            }
        })
        .collect();
    let label = quotient_rep(alg, x, &rows)?.0;
    if label.is_zero() {
        return Err(TauTiltingError::LabelMissing {
            from: edge.from,
            to: edge.to,
        });
    }
    if !is_brick(alg, &label)? {
        return Err(TauTiltingError::NotABrick {
            reason: format!(
                "label of the arrow {} -> {} has a non-invertible nonzero endomorphism",
                edge.from, edge.to
            ),
        });
    }
    Ok(label)
}

/// The exchange quiver together with the brick label of every arrow
/// (`labels[i]` belongs to `graph.edges[i]`).
#[derive(Debug, Clone)]
pub struct LabeledHasseQuiver {
    pub graph: ExchangeGraph,
    pub labels: Vec<Representation>,
}

/// Labels every arrow of a complete exchange graph and checks that the
/// arrows leaving any one node carry pairwise non-isomorphic bricks.
pub fn label_hasse_quiver(alg: &PathAlgebra, graph: ExchangeGraph) -> Result<LabeledHasseQuiver> {
    if !graph.complete {
        return Err(TauTiltingError::IncompleteEnumeration {
            reason: "cannot label a truncated exchange graph".into(),
        });
    }
    let mut labels = Vec::with_capacity(graph.edges.len());
    for i in 0..graph.edges.len() {
        labels.push(brick_label(alg, &graph, i)?);
    }
    // Arrows out of one node must be distinguishable by their labels.
    for a in 0..graph.edges.len() {
        for b in a + 1..graph.edges.len() {
            if graph.edges[a].from != graph.edges[b].from {
                continue;
            }
            if indec_isomorphic(alg, &labels[a], &labels[b]) {
                return Err(TauTiltingError::LabelNotUnique {
                    node: graph.edges[a].from,
                    to_a: graph.edges[a].to,
                    to_b: graph.edges[b].to,
                });
            }
        }
    }
    Ok(LabeledHasseQuiver { graph, labels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate, EnumerationOptions};
    use quiver_algebra::{Arrow, BoundQuiverPresentation, BuildOptions, FieldSpec};

    fn a2() -> PathAlgebra {
        let pres = BoundQuiverPresentation::new(
            FieldSpec::prime(2).unwrap(),
            vec!["1".into(), "2".into()],
            vec![Arrow {
                name: "a".into(),
                source: 0,
                target: 1,
            }],
            vec![],
        )
        .unwrap();
        PathAlgebra::build(pres, BuildOptions::default()).unwrap()
    }

    fn jordan2() -> PathAlgebra {
        let pres = BoundQuiverPresentation::new(
            FieldSpec::prime(2).unwrap(),
            vec!["1".into()],
            vec![Arrow {
                name: "x".into(),
                source: 0,
                target: 0,
            }],
            vec![vec![0, 0]],
        )
        .unwrap();
        PathAlgebra::build(pres, BuildOptions::default()).unwrap()
    }

    #[test]
    fn local_algebra_label_is_the_simple_not_the_projective() {
        // A quotient by the trace ideal alone would return the
        // projective here; the radical term is what makes the label the
        // simple module.
        let alg = jordan2();
        let g = enumerate(&alg, &EnumerationOptions::default()).unwrap();
        assert_eq!(g.edges.len(), 1);
        let label = brick_label(&alg, &g, 0).unwrap();
        assert_eq!(label.dims, vec![1]);
    }

    #[test]
    fn poset_has_unique_top_and_bottom() {
        let alg = a2();
        let g = enumerate(&alg, &EnumerationOptions::default()).unwrap();
        let poset = torsion_poset(&g).unwrap();
        assert_eq!(poset.len(), 5);
        assert_eq!(poset.top(), Some(0));
        assert!(poset.bottom().is_some());
    }

    #[test]
    fn labels_out_of_a_node_are_distinct() {
        let alg = a2();
        let g = enumerate(&alg, &EnumerationOptions::default()).unwrap();
        let lhq = label_hasse_quiver(&alg, g).unwrap();
        assert_eq!(lhq.labels.len(), 5);
        for l in &lhq.labels {
            assert_eq!(l.total_dim(), l.dims.iter().sum::<usize>());
            assert!(!l.is_zero());
        }
    }
}
