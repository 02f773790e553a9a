//! Direct-sum decomposition into indecomposables and isomorphism testing.
//!
//! Splitting tries a cheap Fitting-lemma pass over the endomorphism basis
//! first; when every basis endomorphism is either nilpotent or invertible,
//! it falls back to the certified route: quotient the endomorphism algebra
//! by its radical, decide whether the semisimple quotient is a division
//! algebra, and otherwise lift a splitting idempotent by Newton iteration.

use crate::algebra::PathAlgebra;
use crate::endo::{division_or_idempotent, lift_idempotent, DivisionStatus, EndoAlgebra};
use crate::hom::hom_space;
use crate::matrix::Mat;
use crate::rep::{sub_rep, Representation};
use crate::{internal, AlgebraError, Result};

/// Cheap isomorphism invariants used to pre-filter comparisons. The
/// derived ordering gives registries a canonical bucket order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub dims: Vec<usize>,
    pub arrow_ranks: Vec<usize>,
    pub top_dims: Vec<usize>,
    pub socle_dims: Vec<usize>,
    pub end_dim: usize,
}

pub fn fingerprint(alg: &PathAlgebra, m: &Representation) -> Fingerprint {
    let rad = m.radical_rows(alg);
    let soc = m.socle_rows(alg);
    Fingerprint {
        dims: m.dims.clone(),
        arrow_ranks: m.maps.iter().map(Mat::rank).collect(),
        top_dims: m
            .dims
            .iter()
            .zip(&rad)
            .map(|(d, r)| d - r.rows())
            .collect(),
        socle_dims: soc.iter().map(Mat::rows).collect(),
        end_dim: hom_space(alg, m, m).dim(),
    }
}

/// Splits off one direct-sum decomposition `M = A + B`, or certifies `M`
/// indecomposable by showing its endomorphism algebra is local.
fn split_once(
    alg: &PathAlgebra,
    m: &Representation,
) -> Result<Option<(Representation, Representation)>> {
    if m.total_dim() <= 1 {
        return Ok(None);
    }
    let endo = EndoAlgebra::of(alg, m)?;
    if endo.dim() == 1 {
        return Ok(None);
    }
    // Fitting pass: for an endomorphism f, a high enough power splits M
    // into its kernel and image; any basis element that is neither
    // nilpotent nor invertible yields a nontrivial split.
    let fit = *m.dims.iter().max().expect("nonzero module");
    for phi in &endo.basis {
        let powers: Vec<Mat> = phi.mats.iter().map(|mv| mv.pow(fit)).collect();
        let ker_rows: Vec<Mat> = powers.iter().map(Mat::left_null_basis).collect();
        let im_rows: Vec<Mat> = powers.iter().map(Mat::row_basis).collect();
        let k_total: usize = ker_rows.iter().map(Mat::rows).sum();
        let i_total: usize = im_rows.iter().map(Mat::rows).sum();
        if k_total == 0 || i_total == 0 {
            continue;
        }
        let (a, _) = sub_rep(alg, m, &ker_rows)?;
        let (b, _) = sub_rep(alg, m, &im_rows)?;
        if a.total_dim() + b.total_dim() != m.total_dim() {
            return Err(internal("Fitting split dimensions do not add up"));
        }
        return Ok(Some((a, b)));
    }
    // Certified route via the semisimple quotient of End(M).
    let quot = endo.semisimple_quotient()?;
    match division_or_idempotent(&quot.fd)? {
        DivisionStatus::Division => Ok(None),
        DivisionStatus::NotDivision(Some(e_bar)) => {
            let approx = endo.to_repmap(&quot.lift(&e_bar));
            let e = lift_idempotent(&endo, &approx)?;
            let im_rows: Vec<Mat> = e.mats.iter().map(Mat::row_basis).collect();
            let ker_rows: Vec<Mat> = e.mats.iter().map(Mat::left_null_basis).collect();
            let (a, _) = sub_rep(alg, m, &im_rows)?;
            let (b, _) = sub_rep(alg, m, &ker_rows)?;
            if a.total_dim() == 0
                || b.total_dim() == 0
                || a.total_dim() + b.total_dim() != m.total_dim()
            {
                return Err(internal("lifted idempotent split is degenerate"));
            }
            Ok(Some((a, b)))
        }
        DivisionStatus::NotDivision(None) => Err(AlgebraError::DecompositionFailure {
            reason: "semisimple quotient splits but no idempotent was constructed \
                     within the deterministic search caps"
                .into(),
        }),
        DivisionStatus::Unknown(reason) => {
            Err(AlgebraError::DecompositionFailure { reason })
        }
    }
}

/// Decomposes into indecomposable summands with multiplicities, grouped up
/// to isomorphism and sorted by (total dimension, dimension vector).
pub fn decompose(
    alg: &PathAlgebra,
    m: &Representation,
) -> Result<Vec<(Representation, usize)>> {
    let mut work = vec![m.clone()];
    let mut indecs: Vec<Representation> = Vec::new();
    while let Some(x) = work.pop() {
        if x.is_zero() {
            continue;
        }
        match split_once(alg, &x)? {
            None => indecs.push(x),
            Some((a, b)) => {
                work.push(a);
                work.push(b);
            }
        }
    }
    let mut groups: Vec<(Representation, Fingerprint, usize)> = Vec::new();
    for x in indecs {
        let fp = fingerprint(alg, &x);
        let mut placed = false;
        for (rep, gfp, count) in groups.iter_mut() {
            if *gfp == fp && indec_iso(alg, rep, &x) {
                *count += 1;
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push((x, fp, 1));
        }
    }
    let mut out: Vec<(Representation, usize)> =
        groups.into_iter().map(|(r, _, c)| (r, c)).collect();
    out.sort_by(|(a, _), (b, _)| {
        a.total_dim()
            .cmp(&b.total_dim())
            .then_with(|| a.dims.cmp(&b.dims))
    });
    Ok(out)
}

/// Isomorphism test for two indecomposables: since the non-isomorphisms in
/// `Hom(X, Y)` form a proper subspace when `X` and `Y` are isomorphic
/// indecomposables, it suffices to scan a basis for an invertible element.
/// Both inputs must be indecomposable; for general modules use
/// [`is_isomorphic`].
pub fn indec_isomorphic(alg: &PathAlgebra, x: &Representation, y: &Representation) -> bool {
    if x.dims != y.dims {
        return false;
    }
    hom_space(alg, x, y).maps.iter().any(|f| f.is_iso())
}

fn indec_iso(alg: &PathAlgebra, x: &Representation, y: &Representation) -> bool {
    indec_isomorphic(alg, x, y)
}

/// Isomorphism test for arbitrary finite-dimensional modules, by the
/// Krull-Schmidt theorem: decompose both sides and match multiplicities.
pub fn is_isomorphic(
    alg: &PathAlgebra,
    m: &Representation,
    n: &Representation,
) -> Result<bool> {
    if m.dims != n.dims {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    if fingerprint(alg, m) != fingerprint(alg, n) {
        return Ok(false);
    }
    let dm = decompose(alg, m)?;
    let dn = decompose(alg, n)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for (rep, count) in &dm {
        let mut found = false;
        for (j, (other, ocount)) in dn.iter().enumerate() {
            if used[j] || count != ocount {
                continue;
            }
            if indec_iso(alg, rep, other) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}
