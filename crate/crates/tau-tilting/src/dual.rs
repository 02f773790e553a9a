//! Right (upward) mutation through the opposite algebra.
//!
//! Support tau-tilting pairs over an algebra and over its opposite are in
//! an order-reversing bijection: non-projective module summands transpose,
//! projective module summands `P(v)` trade places with the members `v` of
//! the projective half. Since the bijection reverses the generation
//! order, the upward exchange partner of a pair is the dual of the
//! downward partner of its dual -- so [`mutate_up`] runs the left
//! mutation engine over the opposite algebra and transports the result
//! back. The two completions of an almost complete pair are unique, which
//! makes the transported pair the exchange partner on the nose.
//!
//! [`mutate`] combines both directions into the total exchange: every
//! position of a valid pair has exactly one partner. Positions index the
//! module summands first, then the projective half in order.

use quiver_algebra::{
    indec_isomorphic, projectives, transpose, BuildOptions, PathAlgebra, Representation,
};

use crate::mutate::mutate_down;
use crate::pair::{sort_summands, STauPair};
use crate::{Result, TauTiltingError};

fn mutation_failure<T>(reason: String) -> Result<T> {
    Err(TauTiltingError::MutationFailure { reason })
}

/// The dual of `pair` over the opposite algebra `op` (which must be built
/// from `presentation().opposite()`): transposes the non-projective
/// module summands, turns each projective module summand `P(v)` into the
/// member `v` of the dual projective half, and each member `v` of the
/// projective half into the dual projective module summand at `v`.
/// Applying the map twice gives back the original pair.
pub fn dual_pair(alg: &PathAlgebra, op: &PathAlgebra, pair: &STauPair) -> Result<STauPair> {
    let projs = projectives(alg);
    let op_projs = projectives(op);
    let mut summands: Vec<Representation> = Vec::new();
    let mut projective_half: Vec<usize> = Vec::new();
    for s in &pair.summands {
        match (0..alg.vertex_count()).find(|&v| indec_isomorphic(alg, s, &projs[v].rep)) {
            Some(v) => projective_half.push(v),
            None => summands.push(transpose(alg, op, s)?),
        }
    }
    for &v in &pair.projectives {
        summands.push(op_projs[v].rep.clone());
    }
    sort_summands(&mut summands);
    projective_half.sort_unstable();
    Ok(STauPair {
        summands,
        projectives: projective_half,
    })
}

/// Mutates `pair` upward at `position`. Positions `0..summands.len()`
/// select module summands and return `Ok(None)` when the exchange at
/// that summand goes downward instead; later positions select members of
/// the projective half in order and always go up, re-entering the
/// support at their vertex.
pub fn mutate_up(alg: &PathAlgebra, pair: &STauPair, position: usize) -> Result<Option<STauPair>> {
    let module_len = pair.summands.len();
    if position >= pair.rank() {
        return Err(TauTiltingError::NotASummand {
            position,
            summands: pair.rank(),
        });
    }
    let projs = projectives(alg);
    if position < module_len {
        let x = &pair.summands[position];
        if (0..alg.vertex_count()).any(|v| indec_isomorphic(alg, x, &projs[v].rep)) {
            // A projective summand is never generated by its complement,
            // so its exchange always goes down.
            return Ok(None);
        }
    }
    let op = PathAlgebra::build(alg.presentation().opposite(), BuildOptions::default())?;
    let dual = dual_pair(alg, &op, pair)?;
    // The selected position over the opposite algebra: the transpose of a
    // non-projective summand, or the dual projective at a re-entering
    // vertex. Both land in the dual module part.
    let target = if position < module_len {
        transpose(alg, &op, &pair.summands[position])?
    } else {
        projectives(&op)[pair.projectives[position - module_len]]
            .rep
            .clone()
    };
    let dual_position = dual
        .summands
        .iter()
        .position(|s| indec_isomorphic(&op, s, &target))
        .ok_or(TauTiltingError::MutationFailure {
            reason: "the dual pair does not contain the dualized summand".into(),
        })?;
    match mutate_down(&op, &dual, dual_position)? {
        // Downward over the opposite algebra is upward here; no child
        // means the chosen direction is downward after all.
        None => Ok(None),
        Some(child) => {
            let partner = dual_pair(&op, alg, &child)?;
            if partner.rank() != pair.rank() {
                return mutation_failure(format!(
                    "upward exchange changed the rank from {} to {}",
                    pair.rank(),
                    partner.rank()
                ));
            }
            Ok(Some(partner))
        }
    }
}

/// The unique exchange partner of `pair` at `position`: downward via the
/// minimal left approximation when the selected summand is not generated
/// by the rest, upward through the opposite algebra otherwise.
pub fn mutate(alg: &PathAlgebra, pair: &STauPair, position: usize) -> Result<STauPair> {
    if position < pair.summands.len() {
        if let Some(child) = mutate_down(alg, pair, position)? {
            return Ok(child);
        }
    }
    match mutate_up(alg, pair, position)? {
        Some(parent) => Ok(parent),
        None => mutation_failure(format!(
            "position {position} mutates in neither direction; the pair is not valid"
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiver_algebra::{Arrow, BoundQuiverPresentation, FieldSpec};

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

    fn opposite_of(alg: &PathAlgebra) -> PathAlgebra {
        PathAlgebra::build(alg.presentation().opposite(), BuildOptions::default()).unwrap()
    }

    fn sig(pair: &STauPair) -> (Vec<Vec<usize>>, Vec<usize>) {
        (
            pair.summands.iter().map(|s| s.dims.clone()).collect(),
            pair.projectives.clone(),
        )
    }

    #[test]
    fn duality_swaps_top_and_bottom() {
        let alg = a2();
        let op = opposite_of(&alg);
        let top = STauPair::initial(&alg);
        let dual = dual_pair(&alg, &op, &top).unwrap();
        assert_eq!(sig(&dual), (vec![], vec![0, 1]));
        let bottom = STauPair {
            summands: vec![],
            projectives: vec![0, 1],
        };
        let dual = dual_pair(&alg, &op, &bottom).unwrap();
        dual.verify(&op).unwrap();
        assert_eq!(dual.key(&op), STauPair::initial(&op).key(&op));
    }

    #[test]
    fn duality_is_an_involution() {
        let alg = a2();
        let op = opposite_of(&alg);
        let top = STauPair::initial(&alg);
        let mid = mutate_down(&alg, &top, 0).unwrap().expect("down");
        for pair in [&top, &mid] {
            let there = dual_pair(&alg, &op, pair).unwrap();
            there.verify(&op).unwrap();
            let back = dual_pair(&op, &alg, &there).unwrap();
            assert_eq!(back.key(&alg), pair.key(&alg));
        }
    }

    #[test]
    fn module_position_mutates_back_up() {
        let alg = a2();
        let top = STauPair::initial(&alg);
        let mid = mutate_down(&alg, &top, 0).unwrap().expect("down");
        // The top of P_1 sits at position 0 of mid and is a factor of
        // P_1: its exchange goes up, back to the top pair.
        let back = mutate_up(&alg, &mid, 0).unwrap().expect("up");
        back.verify(&alg).unwrap();
        assert_eq!(sig(&back), sig(&top));
        // P_1 at position 1 is not generated by the rest: down, no parent.
        assert!(mutate_up(&alg, &mid, 1).unwrap().is_none());
    }

    #[test]
    fn projective_positions_reenter_the_support() {
        let alg = a2();
        let bottom = STauPair {
            summands: vec![],
            projectives: vec![0, 1],
        };
        bottom.verify(&alg).unwrap();
        let left = mutate_up(&alg, &bottom, 0).unwrap().expect("up");
        left.verify(&alg).unwrap();
        assert_eq!(sig(&left), (vec![vec![1, 0]], vec![1]));
        let right = mutate_up(&alg, &bottom, 1).unwrap().expect("up");
        right.verify(&alg).unwrap();
        assert_eq!(sig(&right), (vec![vec![0, 1]], vec![0]));
    }

    #[test]
    fn local_algebra_bottom_mutates_up_to_the_free_module() {
        let alg = jordan2();
        let bottom = STauPair {
            summands: vec![],
            projectives: vec![0],
        };
        let top = mutate_up(&alg, &bottom, 0).unwrap().expect("up");
        top.verify(&alg).unwrap();
        assert_eq!(sig(&top), (vec![vec![2]], vec![]));
    }

    #[test]
    fn total_mutation_is_an_involution_on_a2() {
        let alg = a2();
        let top = STauPair::initial(&alg);
        for position in 0..top.rank() {
            let partner = mutate(&alg, &top, position).unwrap();
            partner.verify(&alg).unwrap();
            let back_position = (0..partner.rank())
                .find(|&q| {
                    mutate(&alg, &partner, q)
                        .map(|p| sig(&p) == sig(&top))
                        .unwrap_or(false)
                })
                .expect("some position returns to the top");
            let back = mutate(&alg, &partner, back_position).unwrap();
            assert_eq!(sig(&back), sig(&top));
        }
    }

    #[test]
    fn out_of_range_position_is_rejected() {
        let alg = a2();
        let top = STauPair::initial(&alg);
        let err = mutate_up(&alg, &top, 2).unwrap_err();
        assert!(matches!(
            err,
            TauTiltingError::NotASummand {
                position: 2,
                summands: 2
            }
        ));
    }
}
