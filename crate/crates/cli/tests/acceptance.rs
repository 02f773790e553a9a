//! Acceptance suite: the eleven project-level criteria, one test per
//! criterion. Each test prints a single `ACCEPTANCE nn PASS` line on
//! success (run with `--nocapture` to see them); a failing criterion
//! fails its test with a specific assertion message.
//!
//! The corpus is every algebra this repository ships a fixture for:
//! the Boolean family (products of local algebras, up to three factors)
//! plus the non-Boolean controls (linear quivers with and without a zero
//! relation, and the deeper truncated polynomial ring).

use std::path::{Path, PathBuf};
use std::process::Command;

use lattice_core::{fixtures as shapes, is_antiisomorphic, is_isomorphic, LatticeError};
use quiver_algebra::{BoundQuiverPresentation, BuildOptions, FieldSpec, PathAlgebra};
use tau_tilting::{
    enumerate, enumerate_bricks, enumerate_semibricks, label_hasse_quiver, torsion_poset,
    EnumerationOptions, STauPair, TauTiltingError,
};
use theorem_lab::{
    boolean_family, bruteforce_torsion_classes, check_conditions, known_indecomposables, linear_a,
    truncated_poly, OracleBounds, Verdict,
};

fn f2() -> FieldSpec {
    FieldSpec::prime(2).unwrap()
}

fn build(pres: BoundQuiverPresentation) -> PathAlgebra {
    PathAlgebra::build(pres, BuildOptions::default()).unwrap()
}

fn a3_with_relation(field: FieldSpec) -> BoundQuiverPresentation {
    let mut pres = linear_a(3, field);
    pres.relations.push(vec![0, 1]);
    pres
}

/// Every corpus presentation, named.
fn corpus_presentations(field: FieldSpec) -> Vec<(String, BoundQuiverPresentation)> {
    let mut out = boolean_family(field);
    out.push(("A2 path algebra".into(), linear_a(2, field)));
    out.push(("A3 path algebra".into(), linear_a(3, field)));
    out.push(("A3 with zero relation".into(), a3_with_relation(field)));
    out.push(("K[x]/(x^4)".into(), truncated_poly(4, field)));
    out
}

fn corpus(field: FieldSpec) -> Vec<(String, PathAlgebra)> {
    corpus_presentations(field)
        .into_iter()
        .map(|(n, p)| (n, build(p)))
        .collect()
}

fn complete_graph(alg: &PathAlgebra) -> tau_tilting::ExchangeGraph {
    let g = enumerate(alg, &EnumerationOptions::default()).unwrap();
    assert!(g.complete, "corpus enumerations must finish");
    g
}

fn sig(pair: &STauPair) -> (Vec<Vec<usize>>, Vec<usize>) {
    (
        pair.summands.iter().map(|s| s.dims.clone()).collect(),
        pair.projectives.clone(),
    )
}

#[test]
fn acceptance_01_boolean_family_is_boolean_with_all_conditions_true() {
    let family = boolean_family(f2());
    assert_eq!(family.len(), 7);
    for (name, pres) in family {
        let alg = build(pres);
        let n = alg.vertex_count();
        let graph = complete_graph(&alg);
        let poset = torsion_poset(&graph).unwrap();
        assert_eq!(poset.len(), 1 << n, "{name}: expected exactly 2^{n} classes");
        let lat = poset.as_lattice().unwrap();
        let iso = lat
            .boolean_subset_isomorphism()
            .unwrap_or_else(|| panic!("{name}: no Boolean realization"));
        assert_eq!(iso.atom_count, n, "{name}: atoms must be the simples");
        let report = check_conditions(&alg, &EnumerationOptions::default()).unwrap();
        assert_eq!(report.unanimous(), Some(true), "{name}: {report}");
    }
    println!("ACCEPTANCE 01 PASS — Boolean family: 7/7 algebras give 2^n classes, Boolean on n atoms, all eight conditions true");
}

#[test]
fn acceptance_02_controls_give_pentagon_and_14_with_all_conditions_false() {
    // A2: exactly five classes forming the pentagon, failing both
    // semimodularity laws with explicit witnesses.
    let a2 = build(linear_a(2, f2()));
    let graph = complete_graph(&a2);
    assert_eq!(graph.nodes.len(), 5);
    let poset = torsion_poset(&graph).unwrap();
    assert!(is_isomorphic(&poset, &shapes::pentagon()).unwrap().is_some());
    let lat = poset.as_lattice().unwrap();
    let upper = lat.is_upper_semimodular();
    let lower = lat.is_lower_semimodular();
    assert!(!upper.holds && upper.witness.as_ref().is_some_and(|w| !w.is_empty()));
    assert!(!lower.holds && lower.witness.as_ref().is_some_and(|w| !w.is_empty()));
    let report = check_conditions(&a2, &EnumerationOptions::default()).unwrap();
    assert_eq!(report.unanimous(), Some(false), "{report}");

    // A3: exactly fourteen classes, not Boolean, all conditions false.
    let a3 = build(linear_a(3, f2()));
    let graph3 = complete_graph(&a3);
    assert_eq!(graph3.nodes.len(), 14);
    let poset3 = torsion_poset(&graph3).unwrap();
    let lat3 = poset3.as_lattice().unwrap();
    assert!(lat3.boolean_subset_isomorphism().is_none());
    let report3 = check_conditions(&a3, &EnumerationOptions::default()).unwrap();
    assert_eq!(report3.unanimous(), Some(false), "{report3}");

    // Both counts confirmed by the independent brute-force construction.
    for (alg, poset, n) in [(&a2, &poset, 5usize), (&a3, &poset3, 14usize)] {
        let indecs = known_indecomposables(alg).unwrap();
        let oracle =
            bruteforce_torsion_classes(alg, &indecs, &OracleBounds::default()).unwrap();
        assert_eq!(oracle.len(), n);
        assert!(is_isomorphic(poset, &oracle).unwrap().is_some());
    }
    println!("ACCEPTANCE 02 PASS — controls: A2 gives the pentagon on 5 classes, A3 gives 14 non-Boolean classes, all conditions false, counts oracle-confirmed");
}

#[test]
fn acceptance_03_mutation_lattice_matches_the_brute_force_oracle() {
    let mut compared = 0usize;
    for (name, alg) in corpus(f2()) {
        let indecs = known_indecomposables(&alg)
            .unwrap_or_else(|| panic!("{name}: corpus algebras all have classifiable shapes"));
        let oracle = bruteforce_torsion_classes(&alg, &indecs, &OracleBounds::default())
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        let poset = torsion_poset(&complete_graph(&alg)).unwrap();
        assert!(
            is_isomorphic(&poset, &oracle).unwrap().is_some(),
            "{name}: mutation and brute force disagree ({} vs {} classes)",
            poset.len(),
            oracle.len()
        );
        compared += 1;
    }
    assert_eq!(compared, 11);
    println!("ACCEPTANCE 03 PASS — oracle: mutation-enumerated lattice order-isomorphic to the brute-force lattice on all 11 corpus algebras");
}

#[test]
fn acceptance_04_every_hasse_quiver_is_n_regular() {
    for (name, alg) in corpus(f2()) {
        let poset = torsion_poset(&complete_graph(&alg)).unwrap();
        let reg = poset.is_hasse_regular(alg.vertex_count());
        assert!(reg.holds, "{name}: {:?}", reg.witness);
    }
    println!("ACCEPTANCE 04 PASS — Hasse regularity: every corpus exchange quiver is n-regular (n = number of simples)");
}

#[test]
fn acceptance_05_every_torsion_lattice_is_semidistributive() {
    for (name, alg) in corpus(f2()) {
        let lat = torsion_poset(&complete_graph(&alg))
            .unwrap()
            .as_lattice()
            .unwrap();
        assert!(lat.is_join_semidistributive().holds, "{name}");
        assert!(lat.is_meet_semidistributive().holds, "{name}");
    }
    println!("ACCEPTANCE 05 PASS — semidistributivity: both laws hold on every corpus torsion lattice");
}

#[test]
fn acceptance_06_bricks_biject_with_join_irreducibles() {
    for (name, alg) in corpus(f2()) {
        let graph = complete_graph(&alg);
        let poset = torsion_poset(&graph).unwrap();
        let lhq = label_hasse_quiver(&alg, graph).unwrap();
        let bricks = enumerate_bricks(&alg, &lhq).unwrap();
        let ji = poset.as_lattice().unwrap().join_irreducibles();
        assert_eq!(bricks.len(), ji.len(), "{name}");
        if name == "A2 path algebra" {
            assert_eq!(bricks.len(), 3, "A2 has exactly three bricks");
        }
    }
    println!("ACCEPTANCE 06 PASS — bricks: brick count equals join-irreducible count on every corpus lattice (A2: both 3)");
}

#[test]
fn acceptance_07_semibricks_biject_with_torsion_classes() {
    for (name, alg) in corpus(f2()) {
        let graph = complete_graph(&alg);
        let nodes = graph.nodes.len();
        let lhq = label_hasse_quiver(&alg, graph).unwrap();
        let per_node = enumerate_semibricks(&alg, &lhq).unwrap();
        assert_eq!(per_node.len(), nodes);
        let mut distinct = per_node.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(
            distinct.len(),
            nodes,
            "{name}: the pair -> semibrick map must be injective"
        );
        if name == "A2 path algebra" {
            assert_eq!(nodes, 5, "A2 has exactly five semibricks");
        }
    }
    println!("ACCEPTANCE 07 PASS — semibricks: node -> semibrick is injective with semibrick count = class count on every corpus graph (A2: both 5)");
}

#[test]
fn acceptance_08_torsion_lattice_is_antiisomorphic_to_the_opposite_algebras() {
    for (name, alg) in corpus(f2()) {
        let poset = torsion_poset(&complete_graph(&alg)).unwrap();
        let op = build(alg.presentation().opposite());
        let op_poset = torsion_poset(&complete_graph(&op)).unwrap();
        assert!(
            is_antiisomorphic(&poset, &op_poset).unwrap().is_some(),
            "{name}: duality with the opposite algebra failed"
        );
    }
    println!("ACCEPTANCE 08 PASS — duality: torsion lattice anti-isomorphic to that of the opposite algebra for every corpus algebra");
}

#[test]
fn acceptance_09_brick_labels_exist_are_unique_and_match_the_a2_table() {
    for (name, alg) in corpus(f2()) {
        let graph = complete_graph(&alg);
        let edge_count = graph.edges.len();
        let lhq = label_hasse_quiver(&alg, graph)
            .unwrap_or_else(|e| panic!("{name}: labeling failed: {e}"));
        assert_eq!(lhq.labels.len(), edge_count, "{name}: every cover labeled");
    }

    // The hand-computed label table of the two-vertex path algebra.
    let alg = build(linear_a(2, f2()));
    let lhq = label_hasse_quiver(&alg, complete_graph(&alg)).unwrap();
    type Sig = (Vec<Vec<usize>>, Vec<usize>);
    let expect: Vec<(Sig, Sig, Vec<usize>)> = vec![
        (
            (vec![vec![0, 1], vec![1, 1]], vec![]),
            (vec![vec![1, 0], vec![1, 1]], vec![]),
            vec![0, 1],
        ),
        (
            (vec![vec![0, 1], vec![1, 1]], vec![]),
            (vec![vec![0, 1]], vec![0]),
            vec![1, 0],
        ),
        (
            (vec![vec![1, 0], vec![1, 1]], vec![]),
            (vec![vec![1, 0]], vec![1]),
            vec![1, 1],
        ),
        (
            (vec![vec![1, 0]], vec![1]),
            (vec![], vec![0, 1]),
            vec![1, 0],
        ),
        (
            (vec![vec![0, 1]], vec![0]),
            (vec![], vec![0, 1]),
            vec![0, 1],
        ),
    ];
    assert_eq!(lhq.graph.edges.len(), expect.len());
    for (edge, label) in lhq.graph.edges.iter().zip(&lhq.labels) {
        let from = sig(&lhq.graph.nodes[edge.from]);
        let to = sig(&lhq.graph.nodes[edge.to]);
        let row = expect
            .iter()
            .find(|(f, t, _)| *f == from && *t == to)
            .unwrap_or_else(|| panic!("unexpected arrow {from:?} -> {to:?}"));
        assert_eq!(label.dims, row.2, "label of {from:?} -> {to:?}");
    }
    println!("ACCEPTANCE 09 PASS — labeling: every cover of every corpus lattice carries a unique brick; the A2 table matches the hand computation");
}

#[test]
fn acceptance_10_runs_are_deterministic_and_field_stable() {
    // Byte-identical binary output across repeated runs and thread counts.
    let fixture: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join("a3.alg");
    let scratch_dir =
        std::env::temp_dir().join(format!("taut-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&scratch_dir).unwrap();
    let mut artifacts: Vec<(String, String, String)> = Vec::new();
    for (tag, threads) in [("r1", "1"), ("r2", "1"), ("r3", "4"), ("r4", "7")] {
        let json_path = scratch_dir.join(format!("{tag}.json"));
        let dot_path = scratch_dir.join(format!("{tag}.dot"));
        let out = Command::new(env!("CARGO_BIN_EXE_taut"))
            .arg(&fixture)
            .arg("--json")
            .arg(&json_path)
            .arg("--dot")
            .arg(&dot_path)
            .env("RAYON_NUM_THREADS", threads)
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        artifacts.push((
            String::from_utf8(out.stdout).unwrap(),
            std::fs::read_to_string(&json_path).unwrap(),
            std::fs::read_to_string(&dot_path).unwrap(),
        ));
    }
    for other in &artifacts[1..] {
        assert_eq!(artifacts[0], *other, "output must not depend on run or thread count");
    }

    // Identical verdicts across coefficient characteristics 2, 3, 5.
    let mut by_prime: Vec<Vec<(String, Option<bool>)>> = Vec::new();
    for p in [2u64, 3, 5] {
        let field = FieldSpec::prime(p).unwrap();
        let verdicts = corpus(field)
            .into_iter()
            .map(|(name, alg)| {
                let report = check_conditions(&alg, &EnumerationOptions::default()).unwrap();
                let u = report.unanimous();
                assert!(u.is_some(), "{name} at p={p}: not unanimously decided");
                (name, u)
            })
            .collect();
        by_prime.push(verdicts);
    }
    assert_eq!(by_prime[0], by_prime[1], "p=2 vs p=3");
    assert_eq!(by_prime[0], by_prime[2], "p=2 vs p=5");
    println!("ACCEPTANCE 10 PASS — determinism: byte-identical artifacts across runs and thread counts; verdicts agree at p = 2, 3, 5 on all 11 corpus algebras");
}

#[test]
fn acceptance_11_negative_controls_fire() {
    // A corrupted exchange graph must be caught as a label collision.
    let alg = build(linear_a(2, f2()));
    let mut g = complete_graph(&alg);
    let culprit = g
        .edges
        .iter()
        .position(|e| e.from == 0 && e.exchanged == 1)
        .expect("top node has two outgoing arrows");
    g.edges[culprit].exchanged = 0;
    let err = label_hasse_quiver(&alg, g).unwrap_err();
    assert!(
        matches!(err, TauTiltingError::LabelNotUnique { node: 0, .. }),
        "got {err}"
    );

    // A doctored condition report must raise the inconsistency flag.
    let local = build(truncated_poly(2, f2()));
    let mut report = check_conditions(&local, &EnumerationOptions::default()).unwrap();
    assert!(!report.inconsistent_with_theorem());
    report.d = Verdict::False {
        evidence: "doctored for the negative control".into(),
    };
    assert!(report.inconsistent_with_theorem());

    // A poset without joins must be rejected, not silently accepted.
    let err = shapes::two_by_two().as_lattice().unwrap_err();
    assert!(matches!(err, LatticeError::NotALattice { .. }), "got {err}");

    println!("ACCEPTANCE 11 PASS — negative controls: label collision, doctored verdicts, and non-lattice posets all detected");
}
