//! Deterministic DOT rendering of the brick-labeled Hasse quiver.

use quiver_algebra::{PathAlgebra, Representation};
use tau_tilting::LabeledHasseQuiver;

/// Canonical display name of a torsion class: the dimension vectors of the
/// summands of its support tau-tilting pair, then the projective part.
fn class_name(alg: &PathAlgebra, pair: &tau_tilting::STauPair) -> String {
    let mut s = if pair.summands.is_empty() {
        "0".to_string()
    } else {
        pair.summands
            .iter()
            .map(dim_tuple)
            .collect::<Vec<_>>()
            .join(" + ")
    };
    if !pair.projectives.is_empty() {
        s.push_str(" | ");
        s.push_str(
            &pair
                .projectives
                .iter()
                .map(|&v| format!("P({})", alg.presentation().vertices[v]))
                .collect::<Vec<_>>()
                .join(" "),
        );
    }
    s
}

fn dim_tuple(m: &Representation) -> String {
    let body = m
        .dims
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(",");
    format!("({body})")
}

/// Renders one DOT digraph. Nodes appear in discovery order, arrows point
/// from the larger torsion class to the smaller, and every arrow carries
/// the dimension vector of its brick label. The output depends only on the
/// input algebra, never on thread count or environment.
pub fn render_dot(alg: &PathAlgebra, q: &LabeledHasseQuiver) -> String {
    let mut out = String::from("digraph torsion_classes {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (i, pair) in q.graph.nodes.iter().enumerate() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, class_name(alg, pair)));
    }
    for (e, label) in q.graph.edges.iter().zip(&q.labels) {
        out.push_str(&format!(
            "  n{} -> n{} [label=\"{}\"];\n",
            e.from,
            e.to,
            dim_tuple(label)
        ));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiver_algebra::{BoundQuiverPresentation, BuildOptions, FieldSpec};
    use tau_tilting::{enumerate, label_hasse_quiver, EnumerationOptions};

    fn build(pres: BoundQuiverPresentation) -> PathAlgebra {
        PathAlgebra::build(pres, BuildOptions::default()).unwrap()
    }

    fn labeled(alg: &PathAlgebra) -> LabeledHasseQuiver {
        let g = enumerate(alg, &EnumerationOptions::default()).unwrap();
        label_hasse_quiver(alg, g).unwrap()
    }

    #[test]
    fn two_element_chain_renders_one_labeled_edge() {
        // K[x]/(x^2): two torsion classes, one cover, labeled by the simple.
        let pres = theorem_lab::truncated_poly(2, FieldSpec::Prime(2));
        let alg = build(pres);
        let dot = render_dot(&alg, &labeled(&alg));
        assert_eq!(dot.matches(" -> ").count(), 1, "exactly one cover: {dot}");
        assert!(dot.contains("n0 -> n1 [label=\"(1)\"]"), "{dot}");
        assert!(dot.contains("[label=\"(2)\"]"), "top node is the regular module: {dot}");
        assert!(dot.contains("[label=\"0 | P(1)\"]"), "bottom node: {dot}");
    }

    #[test]
    fn product_of_two_fields_renders_the_square_with_paired_labels() {
        // K x K: the Boolean lattice on two atoms; each simple labels the
        // two parallel sides of the square.
        let pres = theorem_lab::disjoint_union(&[
            theorem_lab::truncated_poly(1, FieldSpec::Prime(2)),
            theorem_lab::truncated_poly(1, FieldSpec::Prime(2)),
        ]);
        let alg = build(pres);
        let dot = render_dot(&alg, &labeled(&alg));
        assert_eq!(dot.matches("[label=\"(1,0)\"]").count(), 2, "{dot}");
        assert_eq!(dot.matches("[label=\"(0,1)\"]").count(), 2, "{dot}");
        assert_eq!(dot.lines().filter(|l| l.contains("[label=") && !l.contains("->")).count(), 4);
        assert_eq!(dot.lines().filter(|l| l.contains("->") && l.contains("label")).count(), 4);
    }

    #[test]
    fn rendering_is_reproducible() {
        let pres = theorem_lab::linear_a(3, FieldSpec::Prime(2));
        let alg = build(pres);
        let a = render_dot(&alg, &labeled(&alg));
        let b = render_dot(&alg, &labeled(&alg));
        assert_eq!(a, b);
        assert_eq!(a.lines().filter(|l| l.contains("->") && l.contains("label")).count(), 21);
    }
}
