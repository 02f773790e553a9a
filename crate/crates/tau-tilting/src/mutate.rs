//! Left (downward) mutation of support tau-tilting pairs.
//!
//! Mutation at a summand `X` of the pair `(M, P)` replaces `X` by the
//! other completion of the almost complete pair `(M/X, P)`. The new pair
//! sits below the old one in the generation order exactly when `X` is
//! not generated by the remaining summands; the replacement is then read
//! off a minimal left `add(M/X)`-approximation `f: X -> U'`:
//! a nonzero cokernel is the incoming indecomposable summand, while a
//! zero cokernel means the module part shrinks and the support loses the
//! one vertex no longer covered, which joins the projective half of the
//! pair.
//!
//! Only module summands are addressable here. Positions in the
//! projective half always mutate upward; [`crate::dual::mutate_up`]
//! handles them, and [`crate::dual::mutate`] combines both directions.

use quiver_algebra::{cokernel_rep, decompose, in_fac, PathAlgebra, Representation};

use crate::approx::{assemble, minimal_left_approximation};
use crate::pair::{sort_summands, STauPair};
use crate::{Result, TauTiltingError};

/// Mutates `pair` downward at `position` (an index into
/// `pair.summands`). Returns `Ok(None)` when the mutation at that
/// summand goes upward instead.
pub fn mutate_down(
    alg: &PathAlgebra,
    pair: &STauPair,
    position: usize,
) -> Result<Option<STauPair>> {
    if position >= pair.summands.len() {
        return Err(TauTiltingError::NotASummand {
            position,
            summands: pair.summands.len(),
        });
    }
    let x = &pair.summands[position];
    let rest: Vec<&Representation> = pair
        .summands
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != position)
        .map(|(_, s)| s)
        .collect();
    let u_total = Representation::direct_sum(alg, &rest);
    if in_fac(alg, &u_total, x) {
        // `(M/X, P)` already generates `X`, so the current pair is the
        // lower completion and the exchange partner sits above it.
        return Ok(None);
    }

    let comps = minimal_left_approximation(alg, x, &rest)?;
    let rest_owned: Vec<Representation> = rest.iter().map(|r| (*r).clone()).collect();
    if comps.is_empty() {
        return support_type_child(alg, pair, &u_total, rest_owned).map(Some);
    }
    let (w, f) = assemble(alg, x, &rest, &comps);
    debug_assert!(f.is_morphism(alg, x, &w));
    let coker = cokernel_rep(alg, &w, &f)?.0;
    if coker.is_zero() {
        return support_type_child(alg, pair, &u_total, rest_owned).map(Some);
    }

    let classes = decompose(alg, &coker)?;
    if classes.len() != 1 || classes[0].1 != 1 {
        return Err(TauTiltingError::MutationFailure {
            reason: format!(
                "exchange cokernel is not indecomposable: {} classes with multiplicities {:?}",
                classes.len(),
                classes.iter().map(|c| c.1).collect::<Vec<_>>()
            ),
        });
    }
    let z = classes.into_iter().next().expect("one class").0;
    let mut summands = rest_owned;
    summands.push(z);
    sort_summands(&mut summands);
    Ok(Some(STauPair {
        summands,
        projectives: pair.projectives.clone(),
    }))
}

fn support_type_child(
    alg: &PathAlgebra,
    pair: &STauPair,
    u_total: &Representation,
    summands: Vec<Representation>,
) -> Result<STauPair> {
    let entering: Vec<usize> = (0..alg.vertex_count())
        .filter(|v| !pair.projectives.contains(v) && u_total.dims[*v] == 0)
        .collect();
    if entering.len() != 1 {
        return Err(TauTiltingError::MutationFailure {
            reason: format!(
                "support-type mutation expects exactly one entering vertex, found {entering:?}"
            ),
        });
    }
    let mut projectives = pair.projectives.clone();
    projectives.push(entering[0]);
    projectives.sort_unstable();
    let mut summands = summands;
    sort_summands(&mut summands);
    Ok(STauPair {
        summands,
        projectives,
    })
}
