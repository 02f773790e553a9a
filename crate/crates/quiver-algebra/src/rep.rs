//! Right modules as quiver representations, morphisms between them, and the
//! standard constructions: simples, indecomposable projectives and
//! injectives, sub- and quotient representations, kernels and cokernels.

use crate::algebra::PathAlgebra;
use crate::field::FieldSpec;
use crate::matrix::Mat;
use crate::{internal, Result};

/// A representation: one fibre dimension per vertex and one matrix per
/// arrow. The matrix of `a: u -> v` has shape `dims[u] x dims[v]` and acts
/// on row vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Mat>,
}

impl Representation {
    pub fn zero(alg: &PathAlgebra) -> Representation {
        let n = alg.vertex_count();
        Representation {
            dims: vec![0; n],
            maps: alg
                .presentation()
                .arrows
                .iter()
                .map(|_| Mat::zeros(alg.field(), 0, 0))
                .collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn validate(&self, alg: &PathAlgebra) -> Result<()> {
        let pres = alg.presentation();
        if self.dims.len() != pres.vertex_count() || self.maps.len() != pres.arrows.len() {
            return Err(internal("representation has wrong vertex or arrow count"));
        }
        for (i, a) in pres.arrows.iter().enumerate() {
            let m = &self.maps[i];
            if m.rows() != self.dims[a.source] || m.cols() != self.dims[a.target] {
                return Err(internal(format!(
                    "matrix of arrow `{}` has shape {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    self.dims[a.source],
                    self.dims[a.target]
                )));
            }
        }
        for (ri, rel) in pres.relations.iter().enumerate() {
            let src = pres.arrows[rel[0]].source;
            let mut acc = Mat::identity(alg.field(), self.dims[src]);
            for &a in rel {
                acc = acc.mul(&self.maps[a]);
            }
            if !acc.is_zero() {
                return Err(internal(format!("relation {ri} does not vanish")));
            }
        }
        Ok(())
    }

    /// The matrix of a basis path acting fibre-to-fibre.
    pub fn eval_path(&self, alg: &PathAlgebra, path_id: usize) -> Mat {
        let p = alg.path(path_id);
        let mut acc = Mat::identity(alg.field(), self.dims[p.source]);
        for &a in &p.arrows {
            acc = acc.mul(&self.maps[a]);
        }
        acc
    }

    pub fn direct_sum(alg: &PathAlgebra, parts: &[&Representation]) -> Representation {
        let n = alg.vertex_count();
        let f = alg.field();
        let dims: Vec<usize> = (0..n)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let maps = alg
            .presentation()
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let mut m = Mat::zeros(f, dims[a.source], dims[a.target]);
                let mut ro = 0;
                let mut co = 0;
                for p in parts {
                    let block = &p.maps[i];
                    for r in 0..block.rows() {
                        for c in 0..block.cols() {
                            m.set(ro + r, co + c, block.get(r, c).clone());
                        }
                    }
                    ro += p.dims[a.source];
                    co += p.dims[a.target];
                }
                m
            })
            .collect();
        Representation { dims, maps }
    }

    /// Inclusions of the summands into the direct sum built by
    /// [`Representation::direct_sum`] over the same parts, in order.
    pub fn summand_inclusions(alg: &PathAlgebra, parts: &[&Representation]) -> Vec<RepMap> {
        let n = alg.vertex_count();
        let f = alg.field();
        let dims: Vec<usize> = (0..n)
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let mut offset = vec![0usize; n];
        let mut out = Vec::with_capacity(parts.len());
        for p in parts {
            let mats = (0..n)
                .map(|v| {
                    let mut m = Mat::zeros(f, p.dims[v], dims[v]);
                    for r in 0..p.dims[v] {
                        m.set(r, offset[v] + r, f.one());
                    }
                    m
                })
                .collect();
            out.push(RepMap { mats });
            for v in 0..n {
                offset[v] += p.dims[v];
            }
        }
        out
    }

    /// Row bases of the radical `M J` (sum of the images of all arrows).
    pub fn radical_rows(&self, alg: &PathAlgebra) -> Vec<Mat> {
        let f = alg.field();
        (0..self.dims.len())
            .map(|v| {
                let incoming: Vec<&Mat> = alg
                    .presentation()
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.target == v)
                    .map(|(i, _)| &self.maps[i])
                    .collect();
                if incoming.is_empty() {
                    Mat::zeros(f, 0, self.dims[v])
                } else {
                    Mat::vstack(f, &incoming).row_basis()
                }
            })
            .collect()
    }

    /// Canonical lifts of a basis of the top `M / M J`: for each vertex the
    /// standard unit rows at the non-pivot columns of the radical rows.
    pub fn top_lift_rows(&self, alg: &PathAlgebra) -> Vec<Mat> {
        let f = alg.field();
        self.radical_rows(alg)
            .iter()
            .enumerate()
            .map(|(v, rad)| complement_rows(f, rad, self.dims[v]))
            .collect()
    }

    /// Row bases of the socle (vectors killed by every outgoing arrow).
    pub fn socle_rows(&self, alg: &PathAlgebra) -> Vec<Mat> {
        let f = alg.field();
        (0..self.dims.len())
            .map(|u| {
                let outgoing: Vec<&Mat> = alg
                    .presentation()
                    .arrows
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.source == u)
                    .map(|(i, _)| &self.maps[i])
                    .collect();
                if outgoing.is_empty() {
                    Mat::identity(f, self.dims[u])
                } else {
                    Mat::hstack(f, &outgoing).left_null_basis()
                }
            })
            .collect()
    }
}

/// Standard unit rows at the non-pivot columns of `rows` (which must come
/// from an RREF, as `row_basis` guarantees): a canonical complement.
pub(crate) fn complement_rows(f: FieldSpec, rows: &Mat, dim: usize) -> Mat {
    let (_, pivots) = rows.rref();
    let mut is_pivot = vec![false; dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..dim).filter(|&c| !is_pivot[c]).collect();
    let mut m = Mat::zeros(f, free.len(), dim);
    for (r, &c) in free.iter().enumerate() {
        m.set(r, c, f.one());
    }
    m
}

/// A morphism of representations: one matrix per vertex, `F_v` of shape
/// `dims_M[v] x dims_N[v]`, acting on row vectors as `x |-> x * F_v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMap {
    pub mats: Vec<Mat>,
}

impl RepMap {
    pub fn identity(field: FieldSpec, rep: &Representation) -> RepMap {
        RepMap {
            mats: rep.dims.iter().map(|&d| Mat::identity(field, d)).collect(),
        }
    }

    pub fn zero(field: FieldSpec, from: &Representation, to: &Representation) -> RepMap {
        RepMap {
            mats: from
                .dims
                .iter()
                .zip(&to.dims)
                .map(|(&a, &b)| Mat::zeros(field, a, b))
                .collect(),
        }
    }

    /// Composition in diagram order: first `self`, then `next`.
    pub fn then(&self, next: &RepMap) -> RepMap {
        RepMap {
            mats: self
                .mats
                .iter()
                .zip(&next.mats)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        RepMap {
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &RepMap) -> RepMap {
        RepMap {
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &crate::Scalar) -> RepMap {
        RepMap {
            mats: self.mats.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Mat::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.mats.iter().all(Mat::is_invertible)
    }

    /// Does this matrix family intertwine the two representations?
    pub fn is_morphism(&self, alg: &PathAlgebra, from: &Representation, to: &Representation) -> bool {
        alg.presentation().arrows.iter().enumerate().all(|(i, a)| {
            from.maps[i].mul(&self.mats[a.target]) == self.mats[a.source].mul(&to.maps[i])
        })
    }
}

/// The simple module at each vertex.
pub fn simples(alg: &PathAlgebra) -> Vec<Representation> {
    let n = alg.vertex_count();
    let f = alg.field();
    (0..n)
        .map(|v| Representation {
            dims: (0..n).map(|u| usize::from(u == v)).collect(),
            maps: alg
                .presentation()
                .arrows
                .iter()
                .map(|a| {
                    Mat::zeros(
                        f,
                        usize::from(a.source == v),
                        usize::from(a.target == v),
                    )
                })
                .collect(),
        })
        .collect()
}

/// The indecomposable projective at a vertex, with its path-labeled basis:
/// the fibre at `w` is spanned by the basis paths from `vertex` to `w`, in
/// ascending basis-id order.
#[derive(Debug, Clone)]
pub struct VertexProjective {
    pub vertex: usize,
    pub rep: Representation,
    pub basis_paths: Vec<Vec<usize>>,
}

pub fn projectives(alg: &PathAlgebra) -> Vec<VertexProjective> {
    let n = alg.vertex_count();
    let f = alg.field();
    (0..n)
        .map(|vertex| {
            let basis_paths: Vec<Vec<usize>> = (0..n)
                .map(|w| alg.paths_from_to(vertex, w).to_vec())
                .collect();
            let dims: Vec<usize> = basis_paths.iter().map(Vec::len).collect();
            let maps = alg
                .presentation()
                .arrows
                .iter()
                .enumerate()
                .map(|(aid, a)| {
                    let mut m = Mat::zeros(f, dims[a.source], dims[a.target]);
                    for (i, &p) in basis_paths[a.source].iter().enumerate() {
                        if let Some(q) = alg.mult(p, alg.arrow_as_path(aid)) {
                            let j = basis_paths[a.target]
                                .iter()
                                .position(|&x| x == q)
                                .expect("extended path stays in the fibre basis");
                            m.set(i, j, f.one());
                        }
                    }
                    m
                })
                .collect();
            VertexProjective {
                vertex,
                rep: Representation { dims, maps },
                basis_paths,
            }
        })
        .collect()
}

/// The indecomposable injective at a vertex: the fibre at `u` is spanned by
/// the basis paths from `u` into `vertex`, and an arrow `b: u -> v` acts by
/// `b`-precomposition on such paths.
#[derive(Debug, Clone)]
pub struct VertexInjective {
    pub vertex: usize,
    pub rep: Representation,
    pub basis_paths: Vec<Vec<usize>>,
}

pub fn injectives(alg: &PathAlgebra) -> Vec<VertexInjective> {
    let n = alg.vertex_count();
    let f = alg.field();
    (0..n)
        .map(|vertex| {
            let basis_paths: Vec<Vec<usize>> = (0..n)
                .map(|u| alg.paths_from_to(u, vertex).to_vec())
                .collect();
            let dims: Vec<usize> = basis_paths.iter().map(Vec::len).collect();
            let maps = alg
                .presentation()
                .arrows
                .iter()
                .enumerate()
                .map(|(aid, b)| {
                    let mut m = Mat::zeros(f, dims[b.source], dims[b.target]);
                    for (r, &pr) in basis_paths[b.source].iter().enumerate() {
                        for (q, &pq) in basis_paths[b.target].iter().enumerate() {
                            if alg.mult(alg.arrow_as_path(aid), pq) == Some(pr) {
                                m.set(r, q, f.one());
                            }
                        }
                    }
                    m
                })
                .collect();
            VertexInjective {
                vertex,
                rep: Representation { dims, maps },
                basis_paths,
            }
        })
        .collect()
}

/// The subrepresentation spanned by the given row spaces, which must be
/// stable under all arrows. Returns the subrepresentation and its inclusion.
pub fn sub_rep(
    alg: &PathAlgebra,
    ambient: &Representation,
    rows: &[Mat],
) -> Result<(Representation, RepMap)> {
    let bases: Vec<Mat> = rows.iter().map(Mat::row_basis).collect();
    let dims: Vec<usize> = bases.iter().map(Mat::rows).collect();
    let mut maps = Vec::with_capacity(ambient.maps.len());
    for (i, a) in alg.presentation().arrows.iter().enumerate() {
        let mapped = bases[a.source].mul(&ambient.maps[i]);
        let induced = bases[a.target].solve_left(&mapped).ok_or_else(|| {
            internal(format!(
                "rows are not stable under arrow `{}`",
                alg.presentation().arrows[i].name
            ))
        })?;
        maps.push(induced);
        let _ = a;
    }
    let rep = Representation { dims, maps };
    let incl = RepMap { mats: bases };
    Ok((rep, incl))
}

/// The quotient by the subspace rows (which must be arrow-stable). Returns
/// the quotient representation and the projection map.
pub fn quotient_rep(
    alg: &PathAlgebra,
    ambient: &Representation,
    rows: &[Mat],
) -> Result<(Representation, RepMap)> {
    let f = alg.field();
    let n = alg.vertex_count();
    let bases: Vec<Mat> = rows.iter().map(Mat::row_basis).collect();
    let complements: Vec<Mat> = (0..n)
        .map(|v| complement_rows(f, &bases[v], ambient.dims[v]))
        .collect();
    // Projection: express a vector in the basis (sub rows, complement rows)
    // and keep the complement coordinates.
    let mut projections = Vec::with_capacity(n);
    for v in 0..n {
        let t = Mat::vstack(f, &[&bases[v], &complements[v]]);
        let tinv = t
            .inverse()
            .ok_or_else(|| internal("sub basis plus complement is not a basis"))?;
        let k = bases[v].rows();
        let q = complements[v].rows();
        let mut sel = Mat::zeros(f, ambient.dims[v], q);
        for j in 0..q {
            sel.set(k + j, j, f.one());
        }
        projections.push(tinv.mul(&sel));
    }
    let dims: Vec<usize> = complements.iter().map(Mat::rows).collect();
    let mut maps = Vec::with_capacity(ambient.maps.len());
    for (i, a) in alg.presentation().arrows.iter().enumerate() {
        let stable = bases[a.source].mul(&ambient.maps[i]).mul(&projections[a.target]);
        if !stable.is_zero() {
            return Err(internal(format!(
                "rows are not stable under arrow `{}`",
                a.name
            )));
        }
        maps.push(
            complements[a.source]
                .mul(&ambient.maps[i])
                .mul(&projections[a.target]),
        );
    }
    let rep = Representation { dims, maps };
    let proj = RepMap { mats: projections };
    Ok((rep, proj))
}

/// Kernel of a morphism, as a subrepresentation of the domain.
pub fn kernel_rep(
    alg: &PathAlgebra,
    domain: &Representation,
    f: &RepMap,
) -> Result<(Representation, RepMap)> {
    let rows: Vec<Mat> = f.mats.iter().map(Mat::left_null_basis).collect();
    sub_rep(alg, domain, &rows)
}

/// Cokernel of a morphism, as a quotient of the codomain.
pub fn cokernel_rep(
    alg: &PathAlgebra,
    codomain: &Representation,
    f: &RepMap,
) -> Result<(Representation, RepMap)> {
    let rows: Vec<Mat> = f.mats.iter().map(Mat::row_basis).collect();
    quotient_rep(alg, codomain, &rows)
}
