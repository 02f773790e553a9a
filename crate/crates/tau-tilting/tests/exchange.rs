//! Exchange-graph cross-validation of total mutation: on every complete
//! graph in the corpus, mutating any node at any position must land on a
//! graph neighbour, the downward positions must reproduce exactly the
//! children, the upward positions exactly the parents, and following an
//! edge back must return to the start. This pits the upward Bongartz
//! construction against the downward approximation construction edge by
//! edge.

use std::collections::BTreeMap;

use quiver_algebra::{
    Arrow, BoundQuiverPresentation, BuildOptions, FieldSpec, PathAlgebra,
};
use tau_tilting::{dual_pair, enumerate, mutate, mutate_down, EnumerationOptions};

fn build(field: FieldSpec, n: usize, arrows: Vec<Arrow>, relations: Vec<Vec<usize>>) -> PathAlgebra {
    let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let pres = BoundQuiverPresentation::new(field, vertices, arrows, relations).unwrap();
    PathAlgebra::build(pres, BuildOptions::default()).unwrap()
}

fn linear(n: usize, relations: Vec<Vec<usize>>) -> PathAlgebra {
    let arrows = (0..n - 1)
        .map(|i| Arrow {
            name: format!("a{}", i + 1),
            source: i,
            target: i + 1,
        })
        .collect();
    build(FieldSpec::prime(2).unwrap(), n, arrows, relations)
}

fn corpus() -> Vec<(&'static str, PathAlgebra)> {
    let loop_arrow = |name: &str, v: usize| Arrow {
        name: name.into(),
        source: v,
        target: v,
    };
    vec![
        ("linear-a2", linear(2, vec![])),
        ("linear-a3", linear(3, vec![])),
        ("linear-a3-nilpotent", linear(3, vec![vec![0, 1]])),
        (
            "truncated-polynomials-4",
            build(
                FieldSpec::prime(2).unwrap(),
                1,
                vec![loop_arrow("x", 0)],
                vec![vec![0; 4]],
            ),
        ),
        (
            "two-isolated-points",
            build(FieldSpec::prime(2).unwrap(), 2, vec![], vec![]),
        ),
        (
            "two-loops-product",
            build(
                FieldSpec::prime(2).unwrap(),
                2,
                vec![loop_arrow("x", 0), loop_arrow("y", 1)],
                vec![vec![0, 0], vec![1, 1, 1]],
            ),
        ),
        (
            "linear-a2-over-f5",
            linear_over(FieldSpec::prime(5).unwrap()),
        ),
    ]
}

fn linear_over(field: FieldSpec) -> PathAlgebra {
    build(
        field,
        2,
        vec![Arrow {
            name: "a".into(),
            source: 0,
            target: 1,
        }],
        vec![],
    )
}

#[test]
fn every_position_of_every_node_exchanges_to_the_right_neighbour() {
    for (name, alg) in corpus() {
        let graph = enumerate(&alg, &EnumerationOptions::default()).unwrap();
        assert!(graph.complete, "{name}: corpus graph must be complete");

        let index: BTreeMap<_, usize> = graph
            .nodes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.key(&alg), i))
            .collect();
        let mut children = vec![Vec::new(); graph.nodes.len()];
        let mut parents = vec![Vec::new(); graph.nodes.len()];
        for e in &graph.edges {
            children[e.from].push(e.to);
            parents[e.to].push(e.from);
        }

        for (u, pair) in graph.nodes.iter().enumerate() {
            let mut down_hits = Vec::new();
            let mut up_hits = Vec::new();
            for position in 0..pair.rank() {
                let partner = mutate(&alg, pair, position)
                    .unwrap_or_else(|e| panic!("{name}: node {u} position {position}: {e}"));
                partner.verify(&alg).unwrap();
                let &v = index
                    .get(&partner.key(&alg))
                    .unwrap_or_else(|| panic!("{name}: node {u} position {position}: partner is not a graph node"));
                let went_down = position < pair.summands.len()
                    && mutate_down(&alg, pair, position).unwrap().is_some();
                if went_down {
                    down_hits.push(v);
                } else {
                    up_hits.push(v);
                }
            }
            down_hits.sort_unstable();
            up_hits.sort_unstable();
            let mut expect_down = children[u].clone();
            let mut expect_up = parents[u].clone();
            expect_down.sort_unstable();
            expect_up.sort_unstable();
            assert_eq!(down_hits, expect_down, "{name}: children of node {u}");
            assert_eq!(up_hits, expect_up, "{name}: parents of node {u}");
        }
    }
}

#[test]
fn mutation_is_an_involution_along_every_edge() {
    for (name, alg) in corpus() {
        let graph = enumerate(&alg, &EnumerationOptions::default()).unwrap();
        let index: BTreeMap<_, usize> = graph
            .nodes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.key(&alg), i))
            .collect();
        for e in &graph.edges {
            let child = &graph.nodes[e.to];
            // Exactly one position of the child returns to the parent.
            let returning: Vec<usize> = (0..child.rank())
                .filter(|&q| {
                    let partner = mutate(&alg, child, q).unwrap();
                    index[&partner.key(&alg)] == e.from
                })
                .collect();
            assert_eq!(
                returning.len(),
                1,
                "{name}: edge {} -> {} has {} return positions",
                e.from,
                e.to,
                returning.len()
            );
        }
    }
}

#[test]
fn duality_is_a_bijection_onto_the_opposite_graph() {
    // Dualizing every pair must give exactly the pairs of the opposite
    // algebra, with the maximal and minimal pairs exchanged, and undoing
    // the duality must return each original node.
    for (name, alg) in corpus() {
        let op = PathAlgebra::build(alg.presentation().opposite(), BuildOptions::default())
            .unwrap();
        let graph = enumerate(&alg, &EnumerationOptions::default()).unwrap();
        let op_graph = enumerate(&op, &EnumerationOptions::default()).unwrap();
        assert_eq!(
            graph.nodes.len(),
            op_graph.nodes.len(),
            "{name}: node counts over the algebra and its opposite differ"
        );
        let op_index: BTreeMap<_, usize> = op_graph
            .nodes
            .iter()
            .enumerate()
            .map(|(i, p)| (p.key(&op), i))
            .collect();
        let mut images = Vec::new();
        for (u, pair) in graph.nodes.iter().enumerate() {
            let dual = dual_pair(&alg, &op, pair).unwrap();
            dual.verify(&op).unwrap();
            let &v = op_index
                .get(&dual.key(&op))
                .unwrap_or_else(|| panic!("{name}: dual of node {u} is not an opposite node"));
            images.push(v);
            let back = dual_pair(&op, &alg, &dual).unwrap();
            assert_eq!(back.key(&alg), pair.key(&alg), "{name}: node {u} round trip");
        }
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), graph.nodes.len(), "{name}: duality not injective");
        // Node 0 is the maximal pair of each graph; its dual is minimal.
        let dual_top = dual_pair(&alg, &op, &graph.nodes[0]).unwrap();
        assert!(dual_top.summands.is_empty(), "{name}: dual of (A, 0)");
        assert_eq!(
            dual_top.projectives,
            (0..alg.vertex_count()).collect::<Vec<_>>()
        );
    }
}
