//! Minimal projective presentations and the Auslander-Reiten translate.
//!
//! For a module `M`, the minimal projective presentation `P_1 -> P_0 -> M`
//! is built from top generators (Nakayama), its kernel, and the kernel's
//! top generators. The translate `tau M` is the kernel of the induced map
//! `nu P_1 -> nu P_0`, where the Nakayama functor `nu` replaces the
//! projective at a vertex by the injective at the same vertex and a
//! component map given by `x` (a combination of paths `j -> i`) becomes
//! the block `entry[r][s] = sum of c over terms (pid, c) of x with
//! s * pid = r`, with `r` running over the paths `v -> i` and `s` over the
//! paths `v -> j` at each vertex `v`.

use crate::algebra::{AlgElem, PathAlgebra};
use crate::field::Scalar;
use crate::hom::hom_dim;
use crate::matrix::Mat;
use crate::rep::{
    cokernel_rep, injectives, kernel_rep, projectives, RepMap, Representation, VertexProjective,
};
use crate::{internal, Result};

/// A minimal projective presentation `P_1 -> P_0 -> M -> 0`.
#[derive(Debug, Clone)]
pub struct ProjectivePresentation {
    /// Vertices of the summands of `P_0`.
    pub p0_vertices: Vec<usize>,
    /// Vertices of the summands of `P_1`.
    pub p1_vertices: Vec<usize>,
    pub p0: Representation,
    pub p1: Representation,
    /// The cover `P_0 -> M`.
    pub cover: RepMap,
    /// The presentation map `P_1 -> P_0`.
    pub map: RepMap,
    /// `entries[k][l]` is the component `P(i_k) -> P(j_l)` as a combination
    /// of paths from `j_l` to `i_k`.
    pub entries: Vec<Vec<AlgElem>>,
}

/// Builds `+ P(v_k) -> target` sending the generator of the `k`-th summand
/// to the given row at its vertex; this is the projective cover when the
/// rows lift a basis of the top of `target`.
fn cover_map(
    alg: &PathAlgebra,
    projs: &[VertexProjective],
    summands: &[(usize, Vec<Scalar>)],
    target: &Representation,
) -> Result<(Representation, RepMap)> {
    let f = alg.field();
    let n = alg.vertex_count();
    let parts: Vec<&Representation> = summands.iter().map(|&(v, _)| &projs[v].rep).collect();
    let p = Representation::direct_sum(alg, &parts);
    let mut mats = Vec::with_capacity(n);
    for w in 0..n {
        let mut mat = Mat::zeros(f, p.dims[w], target.dims[w]);
        let mut row_off = 0;
        for (v, gen) in summands {
            let gen_mat = Mat::from_rows(f, vec![gen.clone()]);
            for &pid in &projs[*v].basis_paths[w] {
                let img = gen_mat.mul(&target.eval_path(alg, pid));
                for c in 0..target.dims[w] {
                    mat.set(row_off, c, img.get(0, c).clone());
                }
                row_off += 1;
            }
        }
        mats.push(mat);
    }
    let map = RepMap { mats };
    if !map.is_morphism(alg, &p, target) {
        return Err(internal("projective cover map is not a morphism"));
    }
    Ok((p, map))
}

pub fn minimal_projective_presentation(
    alg: &PathAlgebra,
    m: &Representation,
) -> Result<ProjectivePresentation> {
    let f = alg.field();
    let n = alg.vertex_count();
    let projs = projectives(alg);

    // P_0 from a basis of the top of M.
    let top = m.top_lift_rows(alg);
    let mut p0_summands: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for (v, rows) in top.iter().enumerate() {
        for r in 0..rows.rows() {
            p0_summands.push((v, rows.row(r).to_vec()));
        }
    }
    let (p0, cover) = cover_map(alg, &projs, &p0_summands, m)?;
    for v in 0..n {
        if cover.mats[v].rank() != m.dims[v] {
            return Err(internal("top generators do not cover the module"));
        }
    }

    // P_1 from a basis of the top of the kernel.
    let (k, incl) = kernel_rep(alg, &p0, &cover)?;
    let ktop = k.top_lift_rows(alg);
    let mut p1_summands: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for (v, rows) in ktop.iter().enumerate() {
        for r in 0..rows.rows() {
            p1_summands.push((v, rows.row(r).to_vec()));
        }
    }
    let (p1, to_k) = cover_map(alg, &projs, &p1_summands, &k)?;
    for v in 0..n {
        if to_k.mats[v].rank() != k.dims[v] {
            return Err(internal("kernel top generators do not cover the kernel"));
        }
    }
    let map = to_k.then(&incl);

    // Component elements: the image row of the k-th generator, read off in
    // the path bases of the P_0 summands.
    let p0_vertices: Vec<usize> = p0_summands.iter().map(|&(v, _)| v).collect();
    let p1_vertices: Vec<usize> = p1_summands.iter().map(|&(v, _)| v).collect();
    let mut entries = vec![vec![AlgElem::zero(); p0_vertices.len()]; p1_vertices.len()];
    for (ki, &ik) in p1_vertices.iter().enumerate() {
        // Row index of the k-th generator inside P_1's fibre at its vertex.
        let mut gen_row = 0;
        for &iv in p1_vertices.iter().take(ki) {
            gen_row += projs[iv].basis_paths[ik].len();
        }
        let trivial = alg.trivial_path(ik);
        gen_row += projs[ik].basis_paths[ik]
            .iter()
            .position(|&p| p == trivial)
            .ok_or_else(|| internal("trivial path missing from its own fibre"))?;
        let image = map.mats[ik].row(gen_row);
        let mut col = 0;
        for (l, &jl) in p0_vertices.iter().enumerate() {
            let mut terms: Vec<(usize, Scalar)> = Vec::new();
            for &pid in &projs[jl].basis_paths[ik] {
                let c = image[col].clone();
                col += 1;
                if !f.is_zero(&c) {
                    terms.push((pid, c));
                }
            }
            entries[ki][l] = AlgElem(terms);
        }
        if col != p0.dims[ik] {
            return Err(internal("presentation entry extraction misaligned"));
        }
    }

    Ok(ProjectivePresentation {
        p0_vertices,
        p1_vertices,
        p0,
        p1,
        cover,
        map,
        entries,
    })
}

/// The Auslander-Reiten translate `tau M`.
pub fn tau(alg: &PathAlgebra, m: &Representation) -> Result<Representation> {
    if m.is_zero() {
        return Ok(Representation::zero(alg));
    }
    let pp = minimal_projective_presentation(alg, m)?;
    if pp.p1_vertices.is_empty() {
        return Ok(Representation::zero(alg));
    }
    let f = alg.field();
    let n = alg.vertex_count();
    let injs = injectives(alg);
    let nu_p1_parts: Vec<&Representation> =
        pp.p1_vertices.iter().map(|&v| &injs[v].rep).collect();
    let nu_p0_parts: Vec<&Representation> =
        pp.p0_vertices.iter().map(|&v| &injs[v].rep).collect();
    let nu_p1 = Representation::direct_sum(alg, &nu_p1_parts);
    let nu_p0 = Representation::direct_sum(alg, &nu_p0_parts);
    let mut mats = Vec::with_capacity(n);
    for v in 0..n {
        let mut mat = Mat::zeros(f, nu_p1.dims[v], nu_p0.dims[v]);
        let mut row_off = 0;
        for (ki, &ik) in pp.p1_vertices.iter().enumerate() {
            let src_paths = &injs[ik].basis_paths[v];
            let mut col_off = 0;
            for (l, &jl) in pp.p0_vertices.iter().enumerate() {
                let tgt_paths = &injs[jl].basis_paths[v];
                let x = &pp.entries[ki][l];
                for (r, &rp) in src_paths.iter().enumerate() {
                    for (s, &sp) in tgt_paths.iter().enumerate() {
                        let mut acc = f.zero();
                        for (pid, c) in &x.0 {
                            if alg.mult(sp, *pid) == Some(rp) {
                                acc = f.add(&acc, c);
                            }
                        }
                        if !f.is_zero(&acc) {
                            mat.set(row_off + r, col_off + s, acc);
                        }
                    }
                }
                col_off += tgt_paths.len();
            }
            row_off += src_paths.len();
        }
        mats.push(mat);
    }
    let nu_map = RepMap { mats };
    if !nu_map.is_morphism(alg, &nu_p1, &nu_p0) {
        return Err(internal("induced Nakayama map is not a morphism"));
    }
    Ok(kernel_rep(alg, &nu_p1, &nu_map)?.0)
}

/// The id of the reversed path in the opposite algebra. Arrows of the
/// opposite presentation carry the same indices, so the reversal is the
/// path from the old target to the old source along the reversed arrow
/// sequence.
fn opposite_path_id(alg: &PathAlgebra, op: &PathAlgebra, pid: usize) -> Result<usize> {
    let p = alg.path(pid);
    let rev: Vec<usize> = p.arrows.iter().rev().copied().collect();
    op.paths_from_to(alg.path_target(pid), p.source)
        .iter()
        .copied()
        .find(|&q| op.path(q).arrows == rev)
        .ok_or_else(|| internal("path has no opposite-algebra counterpart"))
}

/// The transpose `Tr M` as a module over the opposite algebra, which must
/// be `op` (built from `presentation().opposite()`).
///
/// Dualizing the minimal projective presentation `P_1 -> P_0 -> M` with
/// `Hom(-, A)` turns the component `P(i) -> P(j)` given by a combination
/// of paths `j -> i` into the component `P_op(j) -> P_op(i)` given by the
/// reversed combination, and `Tr M` is the cokernel of the dualized map.
/// The transpose kills projectives, swaps no vertices, and applied twice
/// recovers `M` up to projective summands; the Auslander-Reiten
/// translate is its composition with the standard vector-space duality.
pub fn transpose(
    alg: &PathAlgebra,
    op: &PathAlgebra,
    m: &Representation,
) -> Result<Representation> {
    if *op.presentation() != alg.presentation().opposite() {
        return Err(internal("transpose target is not the opposite algebra"));
    }
    if m.is_zero() {
        return Ok(Representation::zero(op));
    }
    let pp = minimal_projective_presentation(alg, m)?;
    if pp.p1_vertices.is_empty() {
        return Ok(Representation::zero(op));
    }
    let f = alg.field();
    let nv = alg.vertex_count();
    let op_projs = projectives(op);
    let dom_parts: Vec<&Representation> =
        pp.p0_vertices.iter().map(|&v| &op_projs[v].rep).collect();
    let cod_parts: Vec<&Representation> =
        pp.p1_vertices.iter().map(|&v| &op_projs[v].rep).collect();
    let dom = Representation::direct_sum(op, &dom_parts);
    let cod = Representation::direct_sum(op, &cod_parts);
    let mut mats = Vec::with_capacity(nv);
    for v in 0..nv {
        let mut mat = Mat::zeros(f, dom.dims[v], cod.dims[v]);
        let mut row_off = 0;
        for (l, &jl) in pp.p0_vertices.iter().enumerate() {
            let dom_paths = &op_projs[jl].basis_paths[v];
            for (r, &q) in dom_paths.iter().enumerate() {
                let mut col_off = 0;
                for (k, &ik) in pp.p1_vertices.iter().enumerate() {
                    let cod_paths = &op_projs[ik].basis_paths[v];
                    for (pid, c) in &pp.entries[k][l].0 {
                        let rev = opposite_path_id(alg, op, *pid)?;
                        if let Some(prod) = op.mult(rev, q) {
                            let s = cod_paths.iter().position(|&cp| cp == prod).ok_or_else(
                                || internal("transposed product missing from its fibre"),
                            )?;
                            mat.set(row_off + r, col_off + s, c.clone());
                        }
                    }
                    col_off += cod_paths.len();
                }
            }
            row_off += dom_paths.len();
        }
        mats.push(mat);
    }
    let map = RepMap { mats };
    if !map.is_morphism(op, &dom, &cod) {
        return Err(internal("dualized presentation map is not a morphism"));
    }
    Ok(cokernel_rep(op, &cod, &map)?.0)
}

/// Is `Hom(M, tau M) = 0`?
pub fn is_tau_rigid(alg: &PathAlgebra, m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let t = tau(alg, m)?;
    if t.is_zero() {
        return Ok(true);
    }
    Ok(hom_dim(alg, m, &t) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BuildOptions, PathAlgebra};
    use crate::decomp::is_isomorphic;
    use crate::field::FieldSpec;
    use crate::presentation::{Arrow, BoundQuiverPresentation};
    use crate::rep::{projectives, simples};

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn a2() -> PathAlgebra {
        let pres = BoundQuiverPresentation::new(
            f2(),
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

    fn a3() -> PathAlgebra {
        let pres = BoundQuiverPresentation::new(
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
            vec![],
        )
        .unwrap();
        PathAlgebra::build(pres, BuildOptions::default()).unwrap()
    }

    fn jordan2() -> PathAlgebra {
        let pres = BoundQuiverPresentation::new(
            f2(),
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
    fn presentation_of_a_simple_over_a2() {
        let alg = a2();
        let ss = simples(&alg);
        let pp = minimal_projective_presentation(&alg, &ss[0]).unwrap();
        assert_eq!(pp.p0_vertices, vec![0]);
        assert_eq!(pp.p1_vertices, vec![1]);
        assert_eq!(pp.entries.len(), 1);
        let e = &pp.entries[0][0];
        assert_eq!(e.0.len(), 1);
        assert_eq!(alg.path_label(e.0[0].0), "a");
    }

    #[test]
    fn presentation_of_a_projective_has_no_relations() {
        let alg = a2();
        let ps = projectives(&alg);
        let pp = minimal_projective_presentation(&alg, &ps[0].rep).unwrap();
        assert_eq!(pp.p0_vertices, vec![0]);
        assert!(pp.p1_vertices.is_empty());
        assert!(tau(&alg, &ps[0].rep).unwrap().is_zero());
    }

    #[test]
    fn translates_over_a2() {
        let alg = a2();
        let ss = simples(&alg);
        let t1 = tau(&alg, &ss[0]).unwrap();
        assert!(is_isomorphic(&alg, &t1, &ss[1]).unwrap());
        assert!(tau(&alg, &ss[1]).unwrap().is_zero());
    }

    #[test]
    fn translates_over_a3_shift_interval_modules() {
        let alg = a3();
        let ss = simples(&alg);
        let ps = projectives(&alg);
        // tau S_1 = S_2 and tau S_2 = S_3.
        assert!(is_isomorphic(&alg, &tau(&alg, &ss[0]).unwrap(), &ss[1]).unwrap());
        assert!(is_isomorphic(&alg, &tau(&alg, &ss[1]).unwrap(), &ss[2]).unwrap());
        // The interval with support {1, 2} translates to P_2 = [0, 1, 1].
        let m12 = Representation {
            dims: vec![1, 1, 0],
            maps: vec![
                Mat::identity(f2(), 1),
                Mat::zeros(f2(), 1, 0),
            ],
        };
        m12.validate(&alg).unwrap();
        let t = tau(&alg, &m12).unwrap();
        assert_eq!(t.dims, vec![0, 1, 1]);
        assert!(is_isomorphic(&alg, &t, &ps[1].rep).unwrap());
    }

    #[test]
    fn translate_kills_projective_summands() {
        let alg = a2();
        let ss = simples(&alg);
        let ps = projectives(&alg);
        let m = Representation::direct_sum(&alg, &[&ss[0], &ps[0].rep]);
        let t = tau(&alg, &m).unwrap();
        assert!(is_isomorphic(&alg, &t, &tau(&alg, &ss[0]).unwrap()).unwrap());
    }

    #[test]
    fn translate_is_additive() {
        let alg = a3();
        let ss = simples(&alg);
        let m = Representation::direct_sum(&alg, &[&ss[0], &ss[1]]);
        let t = tau(&alg, &m).unwrap();
        let expected = Representation::direct_sum(
            &alg,
            &[&tau(&alg, &ss[0]).unwrap(), &tau(&alg, &ss[1]).unwrap()],
        );
        assert!(is_isomorphic(&alg, &t, &expected).unwrap());
        // Same dimension vector as P_2 but not isomorphic to it.
        assert_eq!(t.dims, vec![0, 1, 1]);
        let ps = projectives(&alg);
        assert!(!is_isomorphic(&alg, &t, &ps[1].rep).unwrap());
    }

    #[test]
    fn self_injective_translate_fixes_the_simple() {
        let alg = jordan2();
        let ss = simples(&alg);
        let t = tau(&alg, &ss[0]).unwrap();
        assert!(is_isomorphic(&alg, &t, &ss[0]).unwrap());
        assert!(!is_tau_rigid(&alg, &ss[0]).unwrap());
    }

    #[test]
    fn rigidity_over_a2() {
        let alg = a2();
        let ss = simples(&alg);
        let ps = projectives(&alg);
        assert!(is_tau_rigid(&alg, &ss[0]).unwrap());
        assert!(is_tau_rigid(&alg, &ss[1]).unwrap());
        assert!(is_tau_rigid(&alg, &ps[0].rep).unwrap());
        let both = Representation::direct_sum(&alg, &[&ss[0], &ss[1]]);
        assert!(!is_tau_rigid(&alg, &both).unwrap());
        assert!(is_tau_rigid(&alg, &Representation::zero(&alg)).unwrap());
    }

    fn opposite_of(alg: &PathAlgebra) -> PathAlgebra {
        PathAlgebra::build(alg.presentation().opposite(), BuildOptions::default()).unwrap()
    }

    #[test]
    fn transpose_kills_projectives() {
        let alg = a2();
        let op = opposite_of(&alg);
        for p in projectives(&alg) {
            assert!(transpose(&alg, &op, &p.rep).unwrap().is_zero());
        }
        assert!(transpose(&alg, &op, &Representation::zero(&alg))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn transpose_of_simples_and_double_transpose() {
        let alg = a2();
        let op = opposite_of(&alg);
        let ss = simples(&alg);
        // S_1 has presentation P_2 -> P_1, so Tr S_1 is the cokernel of
        // the reversed inclusion: the simple socle of the opposite
        // projective at vertex 2.
        let tr = transpose(&alg, &op, &ss[0]).unwrap();
        tr.validate(&op).unwrap();
        assert_eq!(tr.dims, vec![0, 1]);
        let back = transpose(&op, &alg, &tr).unwrap();
        assert!(is_isomorphic(&alg, &back, &ss[0]).unwrap());
    }

    #[test]
    fn transpose_roundtrips_on_the_local_algebra() {
        let alg = jordan2();
        let op = opposite_of(&alg);
        let s = &simples(&alg)[0];
        let tr = transpose(&alg, &op, s).unwrap();
        assert_eq!(tr.dims, vec![1]);
        let back = transpose(&op, &alg, &tr).unwrap();
        assert!(is_isomorphic(&alg, &back, s).unwrap());
    }

    #[test]
    fn transpose_matches_tau_dimensions_on_a3() {
        // tau = D Tr, and the duality D only transposes fibres, so the
        // dimension vector of Tr M over the opposite algebra equals that
        // of tau M.
        let alg = a3();
        let op = opposite_of(&alg);
        let ss = simples(&alg);
        for s in &ss {
            let t = tau(&alg, s).unwrap();
            let tr = transpose(&alg, &op, s).unwrap();
            tr.validate(&op).unwrap();
            assert_eq!(tr.dims, t.dims, "Tr and tau dimension vectors differ");
        }
    }

    #[test]
    fn transpose_rejects_a_non_opposite_target() {
        let alg = a2();
        let ss = simples(&alg);
        assert!(transpose(&alg, &alg, &ss[0]).is_err());
    }
}
