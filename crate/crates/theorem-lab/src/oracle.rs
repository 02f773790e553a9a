//! An independent brute-force enumeration of all torsion classes.
//!
//! Given a complete list of indecomposable modules, a torsion class is
//! determined by the indecomposables it contains, and the subsets that
//! occur are exactly the fixed points of the closure `S -> T(S) cap
//! indec`, where `T(S)` consists of the modules filtered by quotients
//! of sums of members of `S`. Membership in `T(S)` is decided from
//! first principles: enumerate every submodule, then propagate
//! "reachable by a filtration with layers in Fac(S)" bottom-up through
//! the submodule lattice. Nothing here shares code with the mutation
//! engine, which is the point: the two must agree or one is wrong.

use std::collections::{BTreeSet, HashMap, HashSet};

use lattice_core::FinitePoset;
use quiver_algebra::{
    in_fac, quotient_rep, sub_rep, Mat, PathAlgebra, Representation, Scalar,
};

use crate::{Result, TheoremError};

/// Size limits for the exhaustive search.
#[derive(Debug, Clone)]
pub struct OracleBounds {
    /// Cap on `p^d` when enumerating the vectors of one vertex space.
    pub max_vectors: usize,
    /// Cap on the number of submodules of one indecomposable.
    pub max_submodules: usize,
    /// Cap on `2^k` for `k` supplied indecomposables.
    pub max_subsets: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        OracleBounds {
            max_vectors: 4096,
            max_submodules: 4096,
            max_subsets: 1 << 16,
        }
    }
}

fn too_large(reason: String) -> TheoremError {
    TheoremError::OracleTooLarge { reason }
}

type SubSig = Vec<(usize, Vec<Scalar>)>;

fn sig_of(mats: &[Mat]) -> SubSig {
    mats.iter().map(|m| (m.rows(), m.flatten())).collect()
}

fn total_rows(mats: &[Mat]) -> usize {
    mats.iter().map(Mat::rows).sum()
}

/// All submodules of `x`, as canonical per-vertex row bases, sorted by
/// total dimension (the zero submodule first, `x` itself last).
fn submodules(
    alg: &PathAlgebra,
    x: &Representation,
    bounds: &OracleBounds,
) -> Result<Vec<Vec<Mat>>> {
    let f = alg.field();
    let p = f.characteristic();
    if p == 0 && x.total_dim() > 0 {
        return Err(too_large(
            "submodule enumeration needs a finite coefficient field".into(),
        ));
    }
    let n = alg.vertex_count();

    let mut seen: HashSet<SubSig> = HashSet::new();
    let mut subs: Vec<Vec<Mat>> = Vec::new();
    let push = |mats: Vec<Mat>, seen: &mut HashSet<SubSig>, subs: &mut Vec<Vec<Mat>>| {
        if seen.insert(sig_of(&mats)) {
            subs.push(mats);
        }
    };
    push(
        (0..n).map(|v| Mat::zeros(f, 0, x.dims[v])).collect(),
        &mut seen,
        &mut subs,
    );

    // Cyclic submodules of every homogeneous vector.
    for v in 0..n {
        let d = x.dims[v];
        if d == 0 {
            continue;
        }
        let count = (p as usize)
            .checked_pow(d as u32)
            .filter(|&c| c <= bounds.max_vectors)
            .ok_or_else(|| {
                too_large(format!("vertex space has more than {} vectors", bounds.max_vectors))
            })?;
        for idx in 1..count {
            let mut digs = Vec::with_capacity(d);
            let mut t = idx;
            for _ in 0..d {
                digs.push((t % p as usize) as u64);
                t /= p as usize;
            }
            let vec = Mat::from_fn(f, 1, d, |_, j| Scalar::Fp(digs[j]));
            let mut rows: Vec<Vec<Mat>> = vec![Vec::new(); n];
            for w in 0..n {
                for &pid in alg.paths_from_to(v, w) {
                    rows[w].push(vec.mul(&x.eval_path(alg, pid)));
                }
            }
            let mats: Vec<Mat> = (0..n)
                .map(|w| {
                    if rows[w].is_empty() {
                        Mat::zeros(f, 0, x.dims[w])
                    } else {
                        let parts: Vec<&Mat> = rows[w].iter().collect();
                        Mat::vstack(f, &parts).row_basis()
                    }
                })
                .collect();
            push(mats, &mut seen, &mut subs);
        }
    }

    // Close under sums.
    let mut changed = true;
    while changed {
        changed = false;
        let len = subs.len();
        for i in 0..len {
            for j in i + 1..len {
                let sum: Vec<Mat> = (0..n)
                    .map(|v| {
                        Mat::vstack(f, &[&subs[i][v], &subs[j][v]]).row_basis()
                    })
                    .collect();
                if seen.insert(sig_of(&sum)) {
                    subs.push(sum);
                    changed = true;
                }
                if subs.len() > bounds.max_submodules {
                    return Err(too_large(format!(
                        "more than {} submodules",
                        bounds.max_submodules
                    )));
                }
            }
        }
    }
    subs.sort_by_key(|mats| total_rows(mats));
    Ok(subs)
}

fn contained(a: &[Mat], b: &[Mat]) -> bool {
    a.iter().zip(b).all(|(x, y)| y.solve_left(x).is_some())
}

/// For each proper containment `K < N` among the submodules of `x`, the
/// quotient `N/K` as an abstract module. Indexed by the position of `N`
/// in the sorted submodule list.
fn layer_quotients(
    alg: &PathAlgebra,
    x: &Representation,
    subs: &[Vec<Mat>],
) -> Result<Vec<Vec<(usize, Representation)>>> {
    let mut out: Vec<Vec<(usize, Representation)>> = vec![Vec::new(); subs.len()];
    for (ni, nmats) in subs.iter().enumerate() {
        if total_rows(nmats) == 0 {
            continue;
        }
        let (nrep, incl) = sub_rep(alg, x, nmats)?;
        for (ki, kmats) in subs.iter().enumerate() {
            if ki == ni || total_rows(kmats) >= total_rows(nmats) {
                continue;
            }
            if !contained(kmats, nmats) {
                continue;
            }
            let coords: Vec<Mat> = incl
                .mats
                .iter()
                .zip(kmats)
                .map(|(basis, k)| {
                    basis
                        .solve_left(k)
                        .expect("contained rows must be expressible in the basis")
                })
                .collect();
            let q = quotient_rep(alg, &nrep, &coords)?.0;
            out[ni].push((ki, q));
        }
    }
    Ok(out)
}

/// All torsion classes, as a poset under inclusion. Elements are
/// labeled by the sorted indices (into `indecs`) of the
/// indecomposables they contain. Correct only when `indecs` is a
/// complete, pairwise non-isomorphic list for the algebra.
pub fn bruteforce_torsion_classes(
    alg: &PathAlgebra,
    indecs: &[Representation],
    bounds: &OracleBounds,
) -> Result<FinitePoset> {
    let k = indecs.len();
    if k >= 63 || (1usize << k) > bounds.max_subsets {
        return Err(too_large(format!("2^{k} candidate subsets")));
    }
    for r in indecs {
        r.validate(alg)?;
        if r.is_zero() {
            return Err(too_large("the zero module is not indecomposable".into()));
        }
    }

    let mut subs_all = Vec::with_capacity(k);
    let mut layers_all = Vec::with_capacity(k);
    let mut full_idx = Vec::with_capacity(k);
    for x in indecs {
        let subs = submodules(alg, x, bounds)?;
        let full = subs
            .iter()
            .position(|m| total_rows(m) == x.total_dim())
            .expect("the module is a submodule of itself");
        layers_all.push(layer_quotients(alg, x, &subs)?);
        subs_all.push(subs);
        full_idx.push(full);
    }

    let mut closures: BTreeSet<u64> = BTreeSet::new();
    let mut closure_of: HashMap<u64, u64> = HashMap::new();
    for mask in 0u64..(1u64 << k) {
        let gens: Vec<&Representation> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| &indecs[i])
            .collect();
        let gen = Representation::direct_sum(alg, &gens);
        let mut closure = 0u64;
        for i in 0..k {
            let subs = &subs_all[i];
            let mut member = vec![false; subs.len()];
            for ni in 0..subs.len() {
                if total_rows(&subs[ni]) == 0 {
                    member[ni] = true;
                    continue;
                }
                member[ni] = layers_all[i][ni]
                    .iter()
                    .any(|(ki, q)| member[*ki] && in_fac(alg, &gen, q));
            }
            if member[full_idx[i]] {
                closure |= 1 << i;
            }
        }
        debug_assert_eq!(closure & mask, mask, "closure must contain its seed");
        closures.insert(closure);
        closure_of.insert(mask, closure);
    }

    let elements: Vec<u64> = {
        let mut v: Vec<u64> = closures.into_iter().collect();
        v.sort_by_key(|m| (m.count_ones(), *m));
        v
    };
    let labels: Vec<String> = elements
        .iter()
        .map(|m| {
            let ids: Vec<String> = (0..k)
                .filter(|&i| m >> i & 1 == 1)
                .map(|i| i.to_string())
                .collect();
            format!("{{{}}}", ids.join(","))
        })
        .collect();
    let n = elements.len();
    let mut table = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = elements[a] & !elements[b] == 0;
        }
    }
    Ok(FinitePoset::new(labels, table)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{disjoint_union, known_indecomposables, linear_a, truncated_poly};
    use lattice_core::{fixtures as lat_fixtures, is_isomorphic};
    use quiver_algebra::{BuildOptions, FieldSpec};

    fn build(p: quiver_algebra::BoundQuiverPresentation) -> PathAlgebra {
        PathAlgebra::build(p, BuildOptions::default()).unwrap()
    }

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn two_vertex_chain_gives_the_pentagon() {
        let alg = build(linear_a(2, f2()));
        let inds = known_indecomposables(&alg).unwrap();
        assert_eq!(inds.len(), 3);
        let poset =
            bruteforce_torsion_classes(&alg, &inds, &OracleBounds::default()).unwrap();
        assert_eq!(poset.len(), 5);
        assert!(is_isomorphic(&poset, &lat_fixtures::pentagon())
            .unwrap()
            .is_some());
    }

    #[test]
    fn field_gives_a_chain_and_square_gives_a_square() {
        let alg = build(truncated_poly(1, f2()));
        let inds = known_indecomposables(&alg).unwrap();
        let poset =
            bruteforce_torsion_classes(&alg, &inds, &OracleBounds::default()).unwrap();
        assert!(is_isomorphic(&poset, &lat_fixtures::chain(2)).unwrap().is_some());

        let alg = build(disjoint_union(&[truncated_poly(1, f2()), truncated_poly(1, f2())]));
        let inds = known_indecomposables(&alg).unwrap();
        let poset =
            bruteforce_torsion_classes(&alg, &inds, &OracleBounds::default()).unwrap();
        assert!(is_isomorphic(&poset, &lat_fixtures::boolean(2))
            .unwrap()
            .is_some());
    }

    #[test]
    fn dual_numbers_have_two_classes_because_of_self_extensions() {
        // add(S) is quotient-closed but not extension-closed: the
        // regular module is an extension of S by S, so the only torsion
        // classes are 0 and everything.
        let alg = build(truncated_poly(2, f2()));
        let inds = known_indecomposables(&alg).unwrap();
        assert_eq!(inds.len(), 2);
        let poset =
            bruteforce_torsion_classes(&alg, &inds, &OracleBounds::default()).unwrap();
        assert_eq!(poset.len(), 2);
    }

    #[test]
    fn rationals_are_rejected() {
        let alg = build(truncated_poly(2, FieldSpec::Rationals));
        let inds = known_indecomposables(&alg).unwrap();
        let err =
            bruteforce_torsion_classes(&alg, &inds, &OracleBounds::default()).unwrap_err();
        assert!(matches!(err, TheoremError::OracleTooLarge { .. }));
    }
}
