//! Minimal left approximations into an additive subcategory `add U`.
//!
//! The universal approximation stacks every Hom-basis map from `X` into
//! every summand of `U`. A component `f_j: X -> V_j` is redundant exactly
//! when it lies in the span of the other components composed with
//! arbitrary maps plus itself composed with radical endomorphisms of
//! `V_j`; deleting redundant components until none remain yields a left
//! minimal approximation (killing a component through `1 - r` with `r`
//! radical is an automorphism of the target).

use std::collections::HashMap;

use quiver_algebra::{
    hom_space, radical_basis, FieldSpec, Mat, PathAlgebra, RepMap, Representation,
};

use crate::Result;

/// One component of an approximation: the index of its target in the
/// summand list and the map from `X` into that target.
pub type Component = (usize, RepMap);

fn flatten_map(f: &RepMap) -> Vec<quiver_algebra::Scalar> {
    f.mats.iter().flat_map(Mat::flatten).collect()
}

/// The minimal left `add(targets)`-approximation of `x`, as a list of
/// components. An empty list means `Hom(x, targets) = 0` and the minimal
/// approximation is `x -> 0`.
pub fn minimal_left_approximation(
    alg: &PathAlgebra,
    x: &Representation,
    targets: &[&Representation],
) -> Result<Vec<Component>> {
    let f = alg.field();
    let mut components: Vec<Component> = Vec::new();
    for (i, t) in targets.iter().enumerate() {
        for map in hom_space(alg, x, t).maps {
            components.push((i, map));
        }
    }
    // Caches keyed by target indices.
    let mut homs: HashMap<(usize, usize), Vec<RepMap>> = HashMap::new();
    let mut radicals: HashMap<usize, Vec<RepMap>> = HashMap::new();

    'minimize: loop {
        for j in 0..components.len() {
            if deletable(alg, f, x, targets, &components, j, &mut homs, &mut radicals)? {
                components.remove(j);
                continue 'minimize;
            }
        }
        break;
    }
    Ok(components)
}

#[allow(clippy::too_many_arguments)]
fn deletable(
    alg: &PathAlgebra,
    f: FieldSpec,
    _x: &Representation,
    targets: &[&Representation],
    components: &[Component],
    j: usize,
    homs: &mut HashMap<(usize, usize), Vec<RepMap>>,
    radicals: &mut HashMap<usize, Vec<RepMap>>,
) -> Result<bool> {
    let (tj, fj) = &components[j];
    if fj.is_zero() {
        return Ok(true);
    }
    let mut rows: Vec<Vec<quiver_algebra::Scalar>> = Vec::new();
    for (l, (tl, fl)) in components.iter().enumerate() {
        if l == j {
            continue;
        }
        let gs = homs
            .entry((*tl, *tj))
            .or_insert_with(|| hom_space(alg, targets[*tl], targets[*tj]).maps);
        for g in gs.iter() {
            rows.push(flatten_map(&fl.then(g)));
        }
    }
    if !radicals.contains_key(tj) {
        radicals.insert(*tj, radical_basis(alg, targets[*tj])?);
    }
    for r in &radicals[tj] {
        rows.push(flatten_map(&fj.then(r)));
    }
    if rows.is_empty() {
        return Ok(false);
    }
    let span = Mat::from_rows(f, rows);
    let target_vec = Mat::from_rows(f, vec![flatten_map(fj)]);
    Ok(span.solve_left(&target_vec).is_some())
}

/// Assembles components into the actual approximation map `x -> W`.
pub fn assemble(
    alg: &PathAlgebra,
    x: &Representation,
    targets: &[&Representation],
    components: &[Component],
) -> (Representation, RepMap) {
    let f = alg.field();
    let parts: Vec<&Representation> = components.iter().map(|&(i, _)| targets[i]).collect();
    let w = Representation::direct_sum(alg, &parts);
    let n = alg.vertex_count();
    let mats = (0..n)
        .map(|v| {
            let blocks: Vec<&Mat> = components.iter().map(|(_, m)| &m.mats[v]).collect();
            if blocks.is_empty() {
                Mat::zeros(f, x.dims[v], 0)
            } else {
                Mat::hstack(f, &blocks)
            }
        })
        .collect();
    (w, RepMap { mats })
}
