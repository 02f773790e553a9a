//! Shipped algebra presentations and, where the module category is
//! classifiable by elementary means, complete indecomposable lists for
//! the brute-force oracle.

use quiver_algebra::{
    Arrow, BoundQuiverPresentation, FieldSpec, Mat, PathAlgebra, Representation,
};

/// The path algebra of the linearly ordered quiver `1 -> 2 -> ... -> n`
/// (no relations).
pub fn linear_a(n: usize, field: FieldSpec) -> BoundQuiverPresentation {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let arrows: Vec<Arrow> = (0..n.saturating_sub(1))
        .map(|i| Arrow {
            name: format!("a{}", i + 1),
            source: i,
            target: i + 1,
        })
        .collect();
    BoundQuiverPresentation::new(field, vertices, arrows, vec![]).expect("valid chain")
}

/// The local algebra `K[x]/(x^m)`: one vertex, and for `m >= 2` one
/// loop with the power relation. `m = 1` is the field itself.
pub fn truncated_poly(m: usize, field: FieldSpec) -> BoundQuiverPresentation {
    assert!(m >= 1, "nilpotency degree must be positive");
    let (arrows, relations) = if m == 1 {
        (vec![], vec![])
    } else {
        (
            vec![Arrow {
                name: "x".into(),
                source: 0,
                target: 0,
            }],
            vec![vec![0; m]],
        )
    };
    BoundQuiverPresentation::new(field, vec!["1".into()], arrows, relations)
        .expect("valid local algebra")
}

/// The product algebra: disjoint union of the quivers. Vertex and
/// arrow names are prefixed with the factor index to keep them unique.
pub fn disjoint_union(parts: &[BoundQuiverPresentation]) -> BoundQuiverPresentation {
    assert!(!parts.is_empty(), "empty product");
    let field = parts[0].field;
    assert!(
        parts.iter().all(|p| p.field == field),
        "factors must share the coefficient field"
    );
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    let mut vertex_off = 0;
    let mut arrow_off = 0;
    for (k, p) in parts.iter().enumerate() {
        for v in &p.vertices {
            vertices.push(format!("{}.{v}", k + 1));
        }
        for a in &p.arrows {
            arrows.push(Arrow {
                name: format!("{}.{}", k + 1, a.name),
                source: a.source + vertex_off,
                target: a.target + vertex_off,
            });
        }
        for r in &p.relations {
            relations.push(r.iter().map(|&i| i + arrow_off).collect());
        }
        vertex_off += p.vertices.len();
        arrow_off += p.arrows.len();
    }
    BoundQuiverPresentation::new(field, vertices, arrows, relations).expect("valid union")
}

/// The corpus of algebras that must land on the Boolean side of the
/// characterization: products of local algebras, up to three factors.
pub fn boolean_family(field: FieldSpec) -> Vec<(String, BoundQuiverPresentation)> {
    let t = |m| truncated_poly(m, field);
    vec![
        ("K".into(), t(1)),
        ("K[x]/(x^2)".into(), t(2)),
        ("K[x]/(x^3)".into(), t(3)),
        ("K[x]/(x^2) x K".into(), disjoint_union(&[t(2), t(1)])),
        (
            "K[x]/(x^2) x K[y]/(y^3)".into(),
            disjoint_union(&[t(2), t(3)]),
        ),
        ("K x K x K".into(), disjoint_union(&[t(1), t(1), t(1)])),
        (
            "K[x]/(x^2) x K[y]/(y^2) x K[z]/(z^4)".into(),
            disjoint_union(&[t(2), t(2), t(4)]),
        ),
    ]
}

/// A complete list of indecomposable modules, when the quiver shape
/// admits an elementary classification: every weakly connected
/// component must be a single vertex (simple), a single vertex with one
/// loop (Jordan blocks up to the nilpotency degree), or a linearly
/// ordered chain with monomial relations (interval modules killed by no
/// relation). Returns `None` for any other shape.
pub fn known_indecomposables(alg: &PathAlgebra) -> Option<Vec<Representation>> {
    let pres = alg.presentation();
    let n = pres.vertex_count();

    // Weakly connected components of the quiver.
    let mut comp: Vec<usize> = (0..n).collect();
    fn root(comp: &mut [usize], mut v: usize) -> usize {
        while comp[v] != v {
            comp[v] = comp[comp[v]];
            v = comp[v];
        }
        v
    }
    for a in &pres.arrows {
        let (x, y) = (root(&mut comp, a.source), root(&mut comp, a.target));
        if x != y {
            comp[x] = y;
        }
    }
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        let r = root(&mut comp, v);
        members[r].push(v);
    }

    let mut out: Vec<Representation> = Vec::new();
    for verts in members.iter().filter(|m| !m.is_empty()) {
        let arrows_here: Vec<usize> = (0..pres.arrows.len())
            .filter(|&i| verts.contains(&pres.arrows[i].source))
            .collect();
        if verts.len() == 1 {
            let v = verts[0];
            match arrows_here.len() {
                0 => out.push(simple_at(alg, v)),
                1 => {
                    let loop_arrow = arrows_here[0];
                    // Largest nonzero power of the loop.
                    let lp = alg.arrow_as_path(loop_arrow);
                    let mut power = lp;
                    let mut len = 1usize;
                    while let Some(next) = alg.mult(power, lp) {
                        power = next;
                        len += 1;
                    }
                    for size in 1..=len + 1 {
                        out.push(jordan_block(alg, v, loop_arrow, size));
                    }
                }
                _ => return None,
            }
        } else {
            // Must be a chain v_1 -> v_2 -> ... -> v_k.
            let mut order = Vec::new();
            let starts: Vec<usize> = verts
                .iter()
                .copied()
                .filter(|&v| pres.arrows.iter().all(|a| a.target != v))
                .collect();
            if starts.len() != 1 || arrows_here.len() != verts.len() - 1 {
                return None;
            }
            let mut cur = starts[0];
            loop {
                if order.len() > verts.len() {
                    return None;
                }
                order.push(cur);
                let nexts: Vec<&Arrow> = pres
                    .arrows
                    .iter()
                    .filter(|a| a.source == cur)
                    .collect();
                match nexts.len() {
                    0 => break,
                    1 if nexts[0].target != cur => cur = nexts[0].target,
                    _ => return None,
                }
            }
            if order.len() != verts.len() {
                return None;
            }
            for i in 0..order.len() {
                for j in i..order.len() {
                    if let Some(rep) = interval(alg, &order, i, j) {
                        out.push(rep);
                    }
                }
            }
        }
    }
    Some(out)
}

fn simple_at(alg: &PathAlgebra, v: usize) -> Representation {
    let f = alg.field();
    let pres = alg.presentation();
    let mut dims = vec![0; pres.vertex_count()];
    dims[v] = 1;
    let maps = pres
        .arrows
        .iter()
        .map(|a| Mat::zeros(f, dims[a.source], dims[a.target]))
        .collect();
    let rep = Representation { dims, maps };
    rep.validate(alg).expect("simple module is valid");
    rep
}

fn jordan_block(alg: &PathAlgebra, v: usize, loop_arrow: usize, size: usize) -> Representation {
    let f = alg.field();
    let pres = alg.presentation();
    let mut dims = vec![0; pres.vertex_count()];
    dims[v] = size;
    let maps = pres
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if i == loop_arrow {
                // Nilpotent shift: basis vector e_r maps to e_{r+1}.
                Mat::from_fn(f, size, size, |r, c| {
                    if c == r + 1 {
                        f.one()
                    } else {
                        f.zero()
                    }
                })
            } else {
                Mat::zeros(f, dims[a.source], dims[a.target])
            }
        })
        .collect();
    let rep = Representation { dims, maps };
    rep.validate(alg).expect("Jordan block respects the power relation");
    rep
}

/// The interval module supported on `order[i..=j]`, or `None` when a
/// relation kills it.
fn interval(
    alg: &PathAlgebra,
    order: &[usize],
    i: usize,
    j: usize,
) -> Option<Representation> {
    let f = alg.field();
    let pres = alg.presentation();
    let mut dims = vec![0; pres.vertex_count()];
    for &v in &order[i..=j] {
        dims[v] = 1;
    }
    let inside: Vec<usize> = order[i..=j].to_vec();
    let maps = pres
        .arrows
        .iter()
        .map(|a| {
            let active = inside.contains(&a.source) && inside.contains(&a.target);
            if active {
                Mat::identity(f, 1)
            } else {
                Mat::zeros(f, dims[a.source], dims[a.target])
            }
        })
        .collect();
    let rep = Representation { dims, maps };
    rep.validate(alg).ok().map(|()| rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiver_algebra::{BuildOptions, PathAlgebra};

    fn build(p: BoundQuiverPresentation) -> PathAlgebra {
        PathAlgebra::build(p, BuildOptions::default()).unwrap()
    }

    #[test]
    fn chain_intervals_enumerate_all_six() {
        let alg = build(linear_a(3, FieldSpec::prime(2).unwrap()));
        let inds = known_indecomposables(&alg).unwrap();
        assert_eq!(inds.len(), 6);
        let mut dims: Vec<Vec<usize>> = inds.iter().map(|r| r.dims.clone()).collect();
        dims.sort();
        assert_eq!(
            dims,
            vec![
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![1, 0, 0],
                vec![1, 1, 0],
                vec![1, 1, 1],
            ]
        );
    }

    #[test]
    fn truncation_kills_the_long_interval() {
        let mut pres = linear_a(3, FieldSpec::prime(2).unwrap());
        pres.relations.push(vec![0, 1]);
        let alg = build(pres);
        let inds = known_indecomposables(&alg).unwrap();
        // The full interval [1..3] is not a module any more.
        assert_eq!(inds.len(), 5);
        assert!(inds.iter().all(|r| r.dims != vec![1, 1, 1]));
    }

    #[test]
    fn jordan_blocks_up_to_the_nilpotency_degree() {
        let alg = build(truncated_poly(4, FieldSpec::prime(2).unwrap()));
        let inds = known_indecomposables(&alg).unwrap();
        let dims: Vec<usize> = inds.iter().map(Representation::total_dim).collect();
        assert_eq!(dims, vec![1, 2, 3, 4]);
    }

    #[test]
    fn products_concatenate_factor_lists() {
        let field = FieldSpec::prime(2).unwrap();
        let pres = disjoint_union(&[truncated_poly(2, field), linear_a(2, field)]);
        let alg = build(pres);
        let inds = known_indecomposables(&alg).unwrap();
        // J_1, J_2 from the loop factor; three intervals from the chain.
        assert_eq!(inds.len(), 5);
        for r in &inds {
            r.validate(&alg).unwrap();
        }
    }

    #[test]
    fn commutative_square_shape_is_not_classifiable_here() {
        let field = FieldSpec::prime(2).unwrap();
        // Two parallel arrows between two vertices: not a chain.
        let pres = BoundQuiverPresentation::new(
            field,
            vec!["1".into(), "2".into()],
            vec![
                Arrow {
                    name: "a".into(),
                    source: 0,
                    target: 1,
                },
                Arrow {
                    name: "b".into(),
                    source: 0,
                    target: 1,
                },
            ],
            vec![],
        )
        .unwrap();
        let alg = build(pres);
        assert!(known_indecomposables(&alg).is_none());
    }
}
