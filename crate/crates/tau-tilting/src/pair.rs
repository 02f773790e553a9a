//! Basic support tau-tilting pairs and their axioms.

use quiver_algebra::{
    decompose, fingerprint, hom_dim, indec_isomorphic, is_tau_rigid, projectives, Fingerprint,
    PathAlgebra, Representation,
};

use crate::{Result, TauTiltingError};

/// A basic support tau-tilting pair `(M, P)`: the indecomposable summands
/// of `M` and the vertex set of the projective part `P`.
#[derive(Debug, Clone)]
pub struct STauPair {
    pub summands: Vec<Representation>,
    /// Sorted vertices `v` with `P(v)` in the projective part.
    pub projectives: Vec<usize>,
}

impl STauPair {
    /// The maximal pair `(A, 0)`: all indecomposable projectives, nothing
    /// in the support part. Its torsion class is all of `mod A`.
    pub fn initial(alg: &PathAlgebra) -> STauPair {
        let mut summands: Vec<Representation> =
            projectives(alg).into_iter().map(|p| p.rep).collect();
        sort_summands(&mut summands);
        STauPair {
            summands,
            projectives: Vec::new(),
        }
    }

    /// Number of summands plus projective-part members; always the vertex
    /// count for a genuine pair.
    pub fn rank(&self) -> usize {
        self.summands.len() + self.projectives.len()
    }

    /// The module part as a single representation.
    pub fn module(&self, alg: &PathAlgebra) -> Representation {
        let parts: Vec<&Representation> = self.summands.iter().collect();
        Representation::direct_sum(alg, &parts)
    }

    /// Registry key: sorted summand fingerprints plus the support part.
    pub fn key(&self, alg: &PathAlgebra) -> (Vec<Fingerprint>, Vec<usize>) {
        let mut fps: Vec<Fingerprint> = self
            .summands
            .iter()
            .map(|s| fingerprint(alg, s))
            .collect();
        fps.sort();
        (fps, self.projectives.clone())
    }

    /// Checks every axiom of a basic support tau-tilting pair; violations
    /// indicate a mutation bug upstream.
    pub fn verify(&self, alg: &PathAlgebra) -> Result<()> {
        let n = alg.vertex_count();
        let fail = |reason: String| Err(TauTiltingError::InvalidPair { reason });
        if self.rank() != n {
            return fail(format!("rank {} differs from vertex count {n}", self.rank()));
        }
        let mut sorted = self.projectives.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted != self.projectives || self.projectives.iter().any(|&v| v >= n) {
            return fail("projective part is not a sorted set of vertices".into());
        }
        for (i, s) in self.summands.iter().enumerate() {
            if s.is_zero() {
                return fail(format!("summand {i} is zero"));
            }
            let parts = decompose(alg, s)?;
            if parts.len() != 1 || parts[0].1 != 1 {
                return fail(format!("summand {i} is not indecomposable"));
            }
        }
        for i in 0..self.summands.len() {
            for j in i + 1..self.summands.len() {
                if indec_isomorphic(alg, &self.summands[i], &self.summands[j]) {
                    return fail(format!("summands {i} and {j} are isomorphic"));
                }
            }
        }
        let m = self.module(alg);
        // Support condition: Hom(P(v), M) = 0 means M vanishes at v.
        for &v in &self.projectives {
            if m.dims[v] != 0 {
                return fail(format!("module part is supported on projective vertex {v}"));
            }
        }
        if !is_tau_rigid(alg, &m)? {
            return fail("module part is not tau-rigid".into());
        }
        Ok(())
    }
}

/// Deterministic presentation order: ascending total dimension, then
/// dimension vector.
pub fn sort_summands(summands: &mut [Representation]) {
    summands.sort_by(|a, b| {
        a.total_dim()
            .cmp(&b.total_dim())
            .then_with(|| a.dims.cmp(&b.dims))
    });
}

/// Are two pairs isomorphic (same projective part, summands matching up
/// to isomorphism)?
pub fn pairs_isomorphic(alg: &PathAlgebra, a: &STauPair, b: &STauPair) -> bool {
    if a.projectives != b.projectives || a.summands.len() != b.summands.len() {
        return false;
    }
    let mut used = vec![false; b.summands.len()];
    for s in &a.summands {
        let mut found = false;
        for (j, t) in b.summands.iter().enumerate() {
            if !used[j] && indec_isomorphic(alg, s, t) {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return false;
        }
    }
    true
}

/// `dim Hom(P(v), M)` is the fibre dimension of `M` at `v`; exposed for
/// tests that cross-check the support condition the slow way.
pub fn support_hom_dim(alg: &PathAlgebra, v: usize, m: &Representation) -> usize {
    let p = projectives(alg);
    hom_dim(alg, &p[v].rep, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiver_algebra::{
        simples, Arrow, BoundQuiverPresentation, BuildOptions, FieldSpec,
    };

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

    #[test]
    fn initial_pair_is_valid_and_maximal() {
        let alg = a2();
        let top = STauPair::initial(&alg);
        assert_eq!(top.rank(), 2);
        assert!(top.projectives.is_empty());
        top.verify(&alg).unwrap();
        // Summands sorted by total dimension: P_2 (dim 1) then P_1 (dim 2).
        assert_eq!(top.summands[0].dims, vec![0, 1]);
        assert_eq!(top.summands[1].dims, vec![1, 1]);
    }

    #[test]
    fn verification_rejects_bad_pairs() {
        let alg = a2();
        let ss = simples(&alg);
        // S_1 + S_2 is not tau-rigid over A_2.
        let bad = STauPair {
            summands: vec![ss[0].clone(), ss[1].clone()],
            projectives: vec![],
        };
        assert!(matches!(
            bad.verify(&alg),
            Err(TauTiltingError::InvalidPair { .. })
        ));
        // Support clash: S_1 with P(1) in the projective part.
        let clash = STauPair {
            summands: vec![ss[0].clone()],
            projectives: vec![0],
        };
        assert!(matches!(
            clash.verify(&alg),
            Err(TauTiltingError::InvalidPair { .. })
        ));
        // Wrong rank.
        let short = STauPair {
            summands: vec![ss[0].clone()],
            projectives: vec![],
        };
        assert!(matches!(
            short.verify(&alg),
            Err(TauTiltingError::InvalidPair { .. })
        ));
    }

    #[test]
    fn pair_isomorphism_ignores_summand_order() {
        let alg = a2();
        let top = STauPair::initial(&alg);
        let swapped = STauPair {
            summands: vec![top.summands[1].clone(), top.summands[0].clone()],
            projectives: vec![],
        };
        assert!(pairs_isomorphic(&alg, &top, &swapped));
        let other = STauPair {
            summands: vec![top.summands[1].clone()],
            projectives: vec![1],
        };
        assert!(!pairs_isomorphic(&alg, &top, &other));
    }

    #[test]
    fn support_hom_dims_match_fibres() {
        let alg = a2();
        let top = STauPair::initial(&alg);
        let m = top.module(&alg);
        assert_eq!(support_hom_dim(&alg, 0, &m), m.dims[0]);
        assert_eq!(support_hom_dim(&alg, 1, &m), m.dims[1]);
    }
}
