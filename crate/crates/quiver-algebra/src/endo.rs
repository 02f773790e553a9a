//! Endomorphism algebras and their structure: exact Jacobson radicals,
//! division-ring certification, and splitting idempotents.
//!
//! The radical is computed exactly in both characteristics. Over `Q` the
//! radical is the kernel of the trace form of any faithful representation.
//! Over `F_p` plain traces are blind to `p`-fold phenomena, so we run the
//! staged test with integral lifts: starting from the whole algebra, stage
//! `i` keeps the elements `x` with `Tr((x~ y~)^(p^i)) = 0 mod p^(i+1)` for
//! all `y` in the previous stage, where `x~`, `y~` are integer lifts of the
//! faithful matrices; the stages run while `p^i` does not exceed the size
//! of the faithful representation, and the last stage is the radical.

use crate::algebra::PathAlgebra;
use crate::field::{FieldSpec, Scalar};
use crate::hom::hom_space;
use crate::matrix::Mat;
use crate::poly::{factor_squarefree_fp, factor_squarefree_rationals, Poly};
use crate::rep::{complement_rows, quotient_rep, RepMap, Representation};
use crate::{internal, AlgebraError, Result};

/// Largest prime for which linear-factor root scans are attempted.
const ROOT_SCAN_CAP: u64 = 1 << 20;
/// Largest element count for exhaustive idempotent searches over `F_p`.
const ENUM_CAP: u128 = 1 << 16;

/// A finite-dimensional associative unital algebra given by structure
/// constants: `mult[i][j]` holds the coordinates of `b_i * b_j`.
#[derive(Debug, Clone)]
pub struct FdAlgebra {
    pub field: FieldSpec,
    pub dim: usize,
    mult: Vec<Vec<Vec<Scalar>>>,
    one: Vec<Scalar>,
}

impl FdAlgebra {
    pub fn new(
        field: FieldSpec,
        mult: Vec<Vec<Vec<Scalar>>>,
        one: Vec<Scalar>,
    ) -> Result<FdAlgebra> {
        let dim = mult.len();
        if one.len() != dim || mult.iter().any(|r| r.len() != dim)
            || mult.iter().flatten().any(|c| c.len() != dim)
        {
            return Err(internal("structure constants have inconsistent shapes"));
        }
        let fd = FdAlgebra {
            field,
            dim,
            mult,
            one,
        };
        // The identity must really be two-sided.
        for i in 0..dim {
            let b = fd.unit(i);
            if fd.mul(&fd.one, &b) != b || fd.mul(&b, &fd.one) != b {
                return Err(internal("claimed identity is not an identity"));
            }
        }
        Ok(fd)
    }

    /// The quotient ring `F_p[t]/(m)` or `Q[t]/(m)` with basis `1, t, ...`.
    pub fn poly_quotient(modulus: &Poly) -> Result<FdAlgebra> {
        let field = modulus.field();
        let d = modulus
            .degree()
            .ok_or_else(|| internal("zero modulus"))?;
        let mut mult = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                let mut coeffs = vec![field.zero(); i + j + 1];
                coeffs[i + j] = field.one();
                let r = Poly::from_coeffs(field, coeffs).rem(modulus);
                mult[i][j] = (0..d).map(|k| r.coeff(k)).collect();
            }
        }
        let mut one = vec![field.zero(); d];
        one[0] = field.one();
        FdAlgebra::new(field, mult, one)
    }

    pub fn one(&self) -> Vec<Scalar> {
        self.one.clone()
    }

    pub fn zero_elem(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.dim]
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = self.zero_elem();
        v[i] = self.field.one();
        v
    }

    pub fn is_zero_elem(&self, x: &[Scalar]) -> bool {
        x.iter().all(|c| self.field.is_zero(c))
    }

    pub fn add(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter()
            .zip(y)
            .map(|(a, b)| self.field.add(a, b))
            .collect()
    }

    pub fn sub(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        x.iter()
            .zip(y)
            .map(|(a, b)| self.field.sub(a, b))
            .collect()
    }

    pub fn scale(&self, c: &Scalar, x: &[Scalar]) -> Vec<Scalar> {
        x.iter().map(|a| self.field.mul(c, a)).collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = self.zero_elem();
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if f.is_zero(yj) {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (k, m) in self.mult[i][j].iter().enumerate() {
                    if !f.is_zero(m) {
                        out[k] = f.add(&out[k], &f.mul(&c, m));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &[Scalar], e: u64) -> Vec<Scalar> {
        let mut acc = self.one();
        let mut base = x.to_vec();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn is_nilpotent(&self, x: &[Scalar]) -> bool {
        // x nilpotent implies x^dim = 0 (its minimal polynomial is t^a with
        // a at most dim); square up past dim.
        let mut y = x.to_vec();
        let mut e = 1usize;
        while e < self.dim {
            y = self.mul(&y, &y);
            e *= 2;
        }
        self.is_zero_elem(&y)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (i + 1..self.dim).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// Minimal polynomial via the first linear dependence among powers.
    pub fn minpoly(&self, x: &[Scalar]) -> Poly {
        let f = self.field;
        let mut rows: Vec<Vec<Scalar>> = vec![self.one()];
        let mut cur = x.to_vec();
        loop {
            let basis = Mat::from_rows(f, rows.clone());
            let target = Mat::from_rows(f, vec![cur.clone()]);
            if let Some(c) = basis.solve_left(&target) {
                let k = rows.len();
                let mut coeffs = vec![f.zero(); k + 1];
                for i in 0..k {
                    coeffs[i] = f.neg(c.get(0, i));
                }
                coeffs[k] = f.one();
                return Poly::from_coeffs(f, coeffs);
            }
            rows.push(cur.clone());
            cur = self.mul(&cur, x);
            if rows.len() > self.dim {
                unreachable!("powers cannot stay independent beyond the dimension");
            }
        }
    }

    pub fn eval_poly(&self, p: &Poly, x: &[Scalar]) -> Vec<Scalar> {
        let mut acc = self.zero_elem();
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            let c1 = self.scale(c, &self.one);
            acc = self.add(&acc, &c1);
        }
        acc
    }

    /// Left regular representation: `R_x` with `coords(z x) = coords(z) R_x`;
    /// faithful because the algebra is unital.
    pub fn regular_mat(&self, x: &[Scalar]) -> Mat {
        let rows: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| self.mul(&self.unit(j), x))
            .collect();
        Mat::from_rows(self.field, rows)
    }

    /// The center as a subalgebra, together with its basis rows in the
    /// coordinates of `self`.
    pub fn center(&self) -> Result<(FdAlgebra, Mat)> {
        let f = self.field;
        let d = self.dim;
        let mut sys = Mat::zeros(f, d, d * d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let v = f.sub(&self.mult[i][j][k], &self.mult[j][i][k]);
                    sys.set(i, j * d + k, v);
                }
            }
        }
        let rows = sys.left_null_basis();
        let sub = self.subalgebra_on_rows(&rows)?;
        Ok((sub, rows))
    }

    /// Builds the algebra structure on a subspace that is closed under
    /// multiplication and contains the identity.
    fn subalgebra_on_rows(&self, rows: &Mat) -> Result<FdAlgebra> {
        let f = self.field;
        let m = rows.rows();
        let mut mult = vec![vec![Vec::new(); m]; m];
        for i in 0..m {
            for j in 0..m {
                let prod = self.mul(rows.row(i), rows.row(j));
                let c = rows
                    .solve_left(&Mat::from_rows(f, vec![prod]))
                    .ok_or_else(|| internal("subspace is not closed under multiplication"))?;
                mult[i][j] = c.row(0).to_vec();
            }
        }
        let one = rows
            .solve_left(&Mat::from_rows(f, vec![self.one()]))
            .ok_or_else(|| internal("subspace does not contain the identity"))?
            .row(0)
            .to_vec();
        FdAlgebra::new(f, mult, one)
    }

    /// Quotient by a two-sided ideal given by row vectors.
    pub fn quotient_by_ideal(&self, rows: &Mat) -> Result<QuotientAlgebra> {
        let f = self.field;
        let basis = rows.row_basis();
        // Verify the ideal property; a violation is a caller bug.
        for r in 0..basis.rows() {
            for i in 0..self.dim {
                for prod in [
                    self.mul(basis.row(r), &self.unit(i)),
                    self.mul(&self.unit(i), basis.row(r)),
                ] {
                    if basis
                        .solve_left(&Mat::from_rows(f, vec![prod]))
                        .is_none()
                    {
                        return Err(internal("rows do not span a two-sided ideal"));
                    }
                }
            }
        }
        let complement = complement_rows(f, &basis, self.dim);
        let t = Mat::vstack(f, &[&basis, &complement]);
        let tinv = t
            .inverse()
            .ok_or_else(|| internal("ideal basis plus complement is not a basis"))?;
        let k = basis.rows();
        let q = complement.rows();
        let mut sel = Mat::zeros(f, self.dim, q);
        for j in 0..q {
            sel.set(k + j, j, f.one());
        }
        let proj = tinv.mul(&sel);
        let project = |x: &[Scalar]| -> Vec<Scalar> {
            Mat::from_rows(f, vec![x.to_vec()]).mul(&proj).row(0).to_vec()
        };
        let mut mult = vec![vec![Vec::new(); q]; q];
        for i in 0..q {
            for j in 0..q {
                mult[i][j] = project(&self.mul(complement.row(i), complement.row(j)));
            }
        }
        let one = project(&self.one());
        Ok(QuotientAlgebra {
            fd: FdAlgebra::new(f, mult, one)?,
            complement,
            proj,
        })
    }

    /// Fixed space of the Frobenius `x -> x^p` on a commutative algebra
    /// over a prime field, as rows. Its dimension counts the simple factors
    /// when the algebra is semisimple.
    pub fn frobenius_fixed_rows(&self) -> Mat {
        let f = self.field;
        let p = f.characteristic();
        assert!(p > 0 && self.is_commutative());
        let rows: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|i| self.pow(&self.unit(i), p))
            .collect();
        let frob = Mat::from_rows(f, rows);
        frob.sub(&Mat::identity(f, self.dim)).left_null_basis()
    }
}

/// A quotient of an [`FdAlgebra`] by an ideal: the quotient algebra, the
/// canonical complement rows (lifting quotient coordinates to the parent),
/// and the projection matrix (parent coordinates to quotient coordinates).
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    pub fd: FdAlgebra,
    pub complement: Mat,
    pub proj: Mat,
}

impl QuotientAlgebra {
    pub fn lift(&self, x: &[Scalar]) -> Vec<Scalar> {
        Mat::from_rows(self.fd.field, vec![x.to_vec()])
            .mul(&self.complement)
            .row(0)
            .to_vec()
    }

    pub fn project(&self, x: &[Scalar]) -> Vec<Scalar> {
        Mat::from_rows(self.fd.field, vec![x.to_vec()])
            .mul(&self.proj)
            .row(0)
            .to_vec()
    }
}

// ---------------------------------------------------------------------------
// Radical computation.
// ---------------------------------------------------------------------------

/// Square integer matrix with entries reduced modulo some `u128` modulus.
#[derive(Clone)]
struct IMat {
    n: usize,
    d: Vec<u128>,
}

impl IMat {
    fn from_mat(m: &Mat, field: FieldSpec) -> IMat {
        assert!(m.is_square());
        let n = m.rows();
        let mut d = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                d.push(field.residue(m.get(i, j)) as u128);
            }
        }
        IMat { n, d }
    }

    fn identity(n: usize) -> IMat {
        let mut d = vec![0u128; n * n];
        for i in 0..n {
            d[i * n + i] = 1;
        }
        IMat { n, d }
    }

    fn mul(&self, other: &IMat, modulus: u128) -> IMat {
        let n = self.n;
        let mut d = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.d[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.d[k * n + j];
                    if b == 0 {
                        continue;
                    }
                    d[i * n + j] = (d[i * n + j] + a * b) % modulus;
                }
            }
        }
        IMat { n, d }
    }

    fn pow(&self, e: u64, modulus: u128) -> IMat {
        let mut acc = IMat::identity(self.n);
        let mut base = self.clone();
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, modulus);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, modulus);
            }
        }
        acc
    }

    fn trace(&self, modulus: u128) -> u128 {
        let mut t = 0u128;
        for i in 0..self.n {
            t = (t + self.d[i * self.n + i]) % modulus;
        }
        t
    }
}

/// Radical rows for an algebra presented by a faithful block-matrix
/// representation: `basis_blocks[i]` lists the blocks of basis element `i`.
fn radical_rows_from_rep(
    field: FieldSpec,
    e_dim: usize,
    basis_blocks: &[Vec<Mat>],
    total_n: usize,
) -> Result<Mat> {
    match field {
        FieldSpec::Rationals => {
            let mut g = Mat::zeros(field, e_dim, e_dim);
            for i in 0..e_dim {
                for j in 0..e_dim {
                    let mut t = field.zero();
                    for (a, b) in basis_blocks[i].iter().zip(&basis_blocks[j]) {
                        let prod = a.mul(b);
                        for k in 0..prod.rows() {
                            t = field.add(&t, prod.get(k, k));
                        }
                    }
                    g.set(i, j, t);
                }
            }
            Ok(g.left_null_basis())
        }
        FieldSpec::Prime(p) => {
            let p128 = p as u128;
            let mut cur = Mat::identity(field, e_dim);
            let mut p_pow_i: u128 = 1;
            loop {
                let r = cur.rows();
                if r == 0 {
                    break;
                }
                let modulus = p_pow_i * p128;
                // Faithful blocks of the current stage elements, lifted.
                let elem_blocks: Vec<Vec<IMat>> = (0..r)
                    .map(|e| {
                        let coords = cur.row(e);
                        basis_blocks[0]
                            .iter()
                            .enumerate()
                            .map(|(blk, first)| {
                                let mut acc =
                                    Mat::zeros(field, first.rows(), first.cols());
                                for (i, c) in coords.iter().enumerate() {
                                    if !field.is_zero(c) {
                                        acc = acc.add(&basis_blocks[i][blk].scale(c));
                                    }
                                }
                                IMat::from_mat(&acc, field)
                            })
                            .collect()
                    })
                    .collect();
                let mut c = Mat::zeros(field, r, r);
                for j in 0..r {
                    for l in 0..r {
                        let mut t: u128 = 0;
                        for (a, b) in elem_blocks[j].iter().zip(&elem_blocks[l]) {
                            let prod = a.mul(b, modulus);
                            let pw = prod.pow(p_pow_i as u64, modulus);
                            t = (t + pw.trace(modulus)) % modulus;
                        }
                        if t % p_pow_i != 0 {
                            return Err(internal(
                                "staged trace is not divisible by its stage power",
                            ));
                        }
                        let q = (t / p_pow_i) % p128;
                        c.set(j, l, Scalar::Fp(q as u64));
                    }
                }
                let lambda = c.left_null_basis();
                cur = lambda.mul(&cur);
                p_pow_i *= p128;
                if p_pow_i > total_n as u128 {
                    break;
                }
            }
            Ok(cur.row_basis())
        }
    }
}

/// Radical of a structure-constant algebra via its regular representation.
pub fn fd_radical_rows(fd: &FdAlgebra) -> Result<Mat> {
    if fd.dim == 0 {
        return Ok(Mat::zeros(fd.field, 0, 0));
    }
    let blocks: Vec<Vec<Mat>> = (0..fd.dim)
        .map(|i| vec![fd.regular_mat(&fd.unit(i))])
        .collect();
    radical_rows_from_rep(fd.field, fd.dim, &blocks, fd.dim)
}

/// Brute-force radical oracle for small algebras over `F_p`: an element
/// lies in the radical exactly when the two-sided ideal it generates is
/// nil. Returns `None` when the element count exceeds `cap`.
pub fn fd_radical_bruteforce(fd: &FdAlgebra, cap: u128) -> Option<Mat> {
    let p = match fd.field {
        FieldSpec::Prime(p) => p as u128,
        FieldSpec::Rationals => return None,
    };
    let total = p.checked_pow(fd.dim as u32)?;
    if total > cap {
        return None;
    }
    let f = fd.field;
    let mut members: Vec<Vec<Scalar>> = Vec::new();
    for idx in 0..total {
        let x = decode_coords(fd, idx, p);
        if fd.is_zero_elem(&x) {
            continue;
        }
        // Span of b_i x b_j is the two-sided ideal generated by x.
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for i in 0..fd.dim {
            for j in 0..fd.dim {
                gens.push(fd.mul(&fd.mul(&fd.unit(i), &x), &fd.unit(j)));
            }
        }
        let ideal = Mat::from_rows(f, gens).row_basis();
        let k = ideal.rows() as u32;
        let count = p.checked_pow(k)?;
        if count > cap {
            return None;
        }
        let mut nil = true;
        'elems: for e in 0..count {
            let mut y = fd.zero_elem();
            let mut rem = e;
            for r in 0..k as usize {
                let digit = (rem % p) as i64;
                rem /= p;
                let c = f.from_i64(digit);
                y = fd.add(&y, &fd.scale(&c, ideal.row(r)));
            }
            if !fd.is_nilpotent(&y) {
                nil = false;
                break 'elems;
            }
        }
        if nil {
            members.push(x);
        }
    }
    if members.is_empty() {
        return Some(Mat::zeros(f, 0, fd.dim));
    }
    Some(Mat::from_rows(f, members).row_basis())
}

fn decode_coords(fd: &FdAlgebra, mut idx: u128, p: u128) -> Vec<Scalar> {
    let mut x = Vec::with_capacity(fd.dim);
    for _ in 0..fd.dim {
        x.push(fd.field.from_i64((idx % p) as i64));
        idx /= p;
    }
    x
}

// ---------------------------------------------------------------------------
// Division-ring certification and idempotent search (on semisimple input).
// ---------------------------------------------------------------------------

/// Outcome of analysing a semisimple algebra.
#[derive(Debug, Clone)]
pub enum DivisionStatus {
    /// Certified division algebra.
    Division,
    /// Certified not a division algebra; carries a nontrivial idempotent
    /// when one could be constructed within the deterministic search caps.
    NotDivision(Option<Vec<Scalar>>),
    /// Out of scope: cannot decide (noncommutative candidates over `Q`
    /// whose minimal polynomials are all irreducible).
    Unknown(String),
}

/// Decides whether a **semisimple** algebra is a division algebra, and
/// otherwise tries to construct a nontrivial idempotent.
pub fn division_or_idempotent(fd: &FdAlgebra) -> Result<DivisionStatus> {
    if fd.dim == 0 {
        return Err(internal("division analysis of the zero algebra"));
    }
    if fd.dim == 1 {
        return Ok(DivisionStatus::Division);
    }
    if fd.is_commutative() {
        return commutative_case(fd);
    }
    let (z, z_rows) = fd.center()?;
    if z.dim > 1 {
        match commutative_case(&z)? {
            DivisionStatus::Division => {}
            DivisionStatus::NotDivision(Some(e_z)) => {
                let e = Mat::from_rows(fd.field, vec![e_z]).mul(&z_rows).row(0).to_vec();
                return Ok(DivisionStatus::NotDivision(Some(e)));
            }
            DivisionStatus::NotDivision(None) => {
                return Ok(DivisionStatus::NotDivision(None));
            }
            DivisionStatus::Unknown(m) => return Ok(DivisionStatus::Unknown(m)),
        }
    }
    // The center is a field, so the algebra is simple and noncommutative.
    match fd.field {
        FieldSpec::Prime(_) => {
            // A finite division ring is commutative, so this cannot be one.
            Ok(DivisionStatus::NotDivision(search_idempotent(fd)?))
        }
        FieldSpec::Rationals => {
            let mut not_division = false;
            for x in candidates(fd) {
                let mu = fd.minpoly(&x);
                if mu.degree() == Some(1) {
                    continue;
                }
                if let Some(e) = idempotent_from_element(fd, &x, &mu)? {
                    return Ok(DivisionStatus::NotDivision(Some(e)));
                }
                if !poly_certainly_irreducible(&mu) {
                    not_division = true;
                }
            }
            if not_division {
                Ok(DivisionStatus::NotDivision(None))
            } else {
                Ok(DivisionStatus::Unknown(
                    "noncommutative algebra over Q with only irreducible minimal polynomials; \
                     deciding division would require quaternion-style invariants"
                        .into(),
                ))
            }
        }
    }
}

fn poly_certainly_irreducible(mu: &Poly) -> bool {
    if mu.squarefree_part().degree() != mu.degree() {
        return false;
    }
    match mu.field() {
        FieldSpec::Rationals => factor_squarefree_rationals(mu).len() == 1,
        FieldSpec::Prime(_) => factor_squarefree_fp(mu).len() == 1,
    }
}

/// Commutative semisimple algebra: field or split?
fn commutative_case(fd: &FdAlgebra) -> Result<DivisionStatus> {
    if fd.dim == 1 {
        return Ok(DivisionStatus::Division);
    }
    match fd.field {
        FieldSpec::Prime(p) => {
            let fixed = fd.frobenius_fixed_rows();
            if fixed.rows() == 1 {
                return Ok(DivisionStatus::Division);
            }
            // More than one simple factor: certainly not a field. Find a
            // fixed element outside the scalars and split its minimal
            // polynomial (distinct linear factors) if the prime is small
            // enough to scan.
            if p > ROOT_SCAN_CAP {
                return Ok(DivisionStatus::NotDivision(None));
            }
            let one_row = Mat::from_rows(fd.field, vec![fd.one()]);
            for r in 0..fixed.rows() {
                let cand = Mat::from_rows(fd.field, vec![fixed.row(r).to_vec()]);
                if Mat::vstack(fd.field, &[&one_row, &cand]).rank() != 2 {
                    continue;
                }
                let z = fixed.row(r).to_vec();
                let mu = fd.minpoly(&z);
                let factors = factor_squarefree_fp(&mu);
                if factors.len() < 2 {
                    return Err(internal(
                        "fixed non-scalar element has irreducible minimal polynomial",
                    ));
                }
                let f1 = factors[0].clone();
                let f2 = mu.div_exact(&f1);
                let e = split_idempotent(fd, &z, &f1, &f2)?;
                return Ok(DivisionStatus::NotDivision(Some(e)));
            }
            Err(internal("no non-scalar Frobenius-fixed element found"))
        }
        FieldSpec::Rationals => {
            for i in 0..fd.dim {
                let x = fd.unit(i);
                let mu = fd.minpoly(&x);
                if mu.degree() == Some(1) {
                    continue;
                }
                if mu.squarefree_part().degree() != mu.degree() {
                    return Err(internal(
                        "non-squarefree minimal polynomial in a semisimple commutative algebra",
                    ));
                }
                let factors = factor_squarefree_rationals(&mu);
                if factors.len() >= 2 {
                    let f1 = factors[0].clone();
                    let f2 = mu.div_exact(&f1);
                    let e = split_idempotent(fd, &x, &f1, &f2)?;
                    return Ok(DivisionStatus::NotDivision(Some(e)));
                }
            }
            // Every basis element has an irreducible minimal polynomial;
            // for commutative semisimple algebras over Q this forces a field.
            Ok(DivisionStatus::Division)
        }
    }
}

/// Deterministic idempotent search over `F_p`: structured candidates first,
/// then bounded exhaustive enumeration.
fn search_idempotent(fd: &FdAlgebra) -> Result<Option<Vec<Scalar>>> {
    for x in candidates(fd) {
        let mu = fd.minpoly(&x);
        if mu.degree() == Some(1) {
            continue;
        }
        if let Some(e) = idempotent_from_element(fd, &x, &mu)? {
            return Ok(Some(e));
        }
    }
    if let FieldSpec::Prime(p) = fd.field {
        let total = (p as u128).checked_pow(fd.dim as u32);
        if let Some(total) = total {
            if total <= ENUM_CAP {
                for idx in 1..total {
                    let x = decode_coords(fd, idx, p as u128);
                    let mu = fd.minpoly(&x);
                    if mu.degree() == Some(1) {
                        continue;
                    }
                    if let Some(e) = idempotent_from_element(fd, &x, &mu)? {
                        return Ok(Some(e));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn candidates(fd: &FdAlgebra) -> Vec<Vec<Scalar>> {
    let mut out: Vec<Vec<Scalar>> = (0..fd.dim).map(|i| fd.unit(i)).collect();
    for i in 0..fd.dim {
        for j in 0..fd.dim {
            if i != j {
                out.push(fd.mul(&fd.unit(i), &fd.unit(j)));
            }
        }
    }
    for i in 0..fd.dim {
        for j in i + 1..fd.dim {
            out.push(fd.add(&fd.unit(i), &fd.unit(j)));
        }
    }
    out
}

/// Tries to turn one element with reducible structure into an idempotent:
/// either its minimal polynomial splits into coprime factors directly, or
/// it has a nilpotent part that leads to an element whose minimal
/// polynomial is `t^a * h` with `h(0) != 0`.
fn idempotent_from_element(
    fd: &FdAlgebra,
    x: &[Scalar],
    mu: &Poly,
) -> Result<Option<Vec<Scalar>>> {
    let sf = mu.squarefree_part();
    if sf.degree() != mu.degree() {
        let y = fd.eval_poly(&sf, x);
        if fd.is_zero_elem(&y) {
            return Err(internal("squarefree part evaluated to zero unexpectedly"));
        }
        // y is nilpotent and nonzero; in a semisimple algebra some y*b is
        // not nilpotent, and being a multiple of a nilpotent it is not
        // invertible either, so its minimal polynomial is t^a * h.
        for i in 0..fd.dim {
            let z = fd.mul(&y, &fd.unit(i));
            if fd.is_zero_elem(&z) || fd.is_nilpotent(&z) {
                continue;
            }
            let muz = fd.minpoly(&z);
            let (ta, h) = split_off_t_power(&muz);
            if ta.degree().map_or(true, |d| d == 0) || h.degree().map_or(true, |d| d == 0) {
                continue;
            }
            let e = split_idempotent(fd, &z, &ta, &h)?;
            return Ok(Some(e));
        }
        return Ok(None);
    }
    // Squarefree minimal polynomial: look for a coprime split.
    match fd.field {
        FieldSpec::Prime(p) => {
            let d = mu.degree().unwrap();
            // Distinct-degree splitting works for any prime size.
            for j in 1..d {
                let tq = Poly::frobenius_power(j, mu);
                let g = mu.gcd(&tq.sub(&Poly::x(fd.field)));
                if let Some(dg) = g.degree() {
                    if dg > 0 && dg < d {
                        let f2 = mu.div_exact(&g);
                        let e = split_idempotent(fd, x, &g, &f2)?;
                        return Ok(Some(e));
                    }
                }
            }
            // Equal-degree factors: complete factorization for small p.
            if p <= ROOT_SCAN_CAP {
                let factors = factor_squarefree_fp(mu);
                if factors.len() >= 2 {
                    let f1 = factors[0].clone();
                    let f2 = mu.div_exact(&f1);
                    let e = split_idempotent(fd, x, &f1, &f2)?;
                    return Ok(Some(e));
                }
            }
            Ok(None)
        }
        FieldSpec::Rationals => {
            let factors = factor_squarefree_rationals(mu);
            if factors.len() >= 2 {
                let f1 = factors[0].clone();
                let f2 = mu.div_exact(&f1);
                let e = split_idempotent(fd, x, &f1, &f2)?;
                return Ok(Some(e));
            }
            Ok(None)
        }
    }
}

/// Writes `mu = t^a * h` with `h(0) != 0`.
fn split_off_t_power(mu: &Poly) -> (Poly, Poly) {
    let f = mu.field();
    let mut a = 0usize;
    let coeffs = mu.coeffs();
    while a < coeffs.len() && f.is_zero(&coeffs[a]) {
        a += 1;
    }
    let h = Poly::from_coeffs(f, coeffs[a..].to_vec());
    let mut ta = vec![f.zero(); a + 1];
    ta[a] = f.one();
    (Poly::from_coeffs(f, ta), h)
}

/// Given `x` with minimal polynomial `f1 * f2`, coprime, builds the
/// idempotent projecting onto the `f2`-component: `e = (u f1)(x)` where
/// `u f1 + v f2 = 1`.
fn split_idempotent(fd: &FdAlgebra, x: &[Scalar], f1: &Poly, f2: &Poly) -> Result<Vec<Scalar>> {
    let (g, u, _v) = f1.xgcd(f2);
    if g.degree() != Some(0) {
        return Err(internal("claimed coprime factors are not coprime"));
    }
    let ur = u.rem(f2);
    let e = fd.eval_poly(&ur.mul(f1), x);
    let e2 = fd.mul(&e, &e);
    if e2 != e || fd.is_zero_elem(&e) || e == fd.one() {
        return Err(internal("constructed element is not a nontrivial idempotent"));
    }
    Ok(e)
}

// ---------------------------------------------------------------------------
// Endomorphism algebras of representations.
// ---------------------------------------------------------------------------

/// The endomorphism algebra of a representation, with its morphism basis
/// and structure constants.
#[derive(Debug, Clone)]
pub struct EndoAlgebra {
    pub fd: FdAlgebra,
    pub basis: Vec<RepMap>,
    rep_dims: Vec<usize>,
    basis_flat: Mat,
}

impl EndoAlgebra {
    pub fn of(alg: &PathAlgebra, m: &Representation) -> Result<EndoAlgebra> {
        if m.is_zero() {
            return Err(AlgebraError::ZeroModule);
        }
        let f = alg.field();
        let basis = hom_space(alg, m, m).maps;
        let dim = basis.len();
        let flat_rows: Vec<Vec<Scalar>> = basis
            .iter()
            .map(|b| b.mats.iter().flat_map(Mat::flatten).collect())
            .collect();
        let basis_flat = Mat::from_rows(f, flat_rows);
        // Express all pairwise products and the identity in the basis by
        // one shared solve.
        let mut rhs_rows: Vec<Vec<Scalar>> = Vec::with_capacity(dim * dim + 1);
        for i in 0..dim {
            for j in 0..dim {
                let prod = basis[i].then(&basis[j]);
                rhs_rows.push(prod.mats.iter().flat_map(Mat::flatten).collect());
            }
        }
        let id = RepMap::identity(f, m);
        rhs_rows.push(id.mats.iter().flat_map(Mat::flatten).collect());
        let rhs = Mat::from_rows(f, rhs_rows);
        let sol = basis_flat
            .solve_left(&rhs)
            .ok_or_else(|| internal("products or identity escape the endomorphism space"))?;
        let mut mult = vec![vec![Vec::new(); dim]; dim];
        for i in 0..dim {
            for j in 0..dim {
                mult[i][j] = sol.row(i * dim + j).to_vec();
            }
        }
        let one = sol.row(dim * dim).to_vec();
        Ok(EndoAlgebra {
            fd: FdAlgebra::new(f, mult, one)?,
            basis,
            rep_dims: m.dims.clone(),
            basis_flat,
        })
    }

    pub fn dim(&self) -> usize {
        self.fd.dim
    }

    /// The morphism with the given coordinates.
    pub fn to_repmap(&self, coords: &[Scalar]) -> RepMap {
        let f = self.fd.field;
        let mats = (0..self.rep_dims.len())
            .map(|v| {
                let mut acc = Mat::zeros(f, self.rep_dims[v], self.rep_dims[v]);
                for (i, c) in coords.iter().enumerate() {
                    if !f.is_zero(c) {
                        acc = acc.add(&self.basis[i].mats[v].scale(c));
                    }
                }
                acc
            })
            .collect();
        RepMap { mats }
    }

    /// Coordinates of an endomorphism in the basis, if it lies in the space.
    pub fn coords_of(&self, map: &RepMap) -> Option<Vec<Scalar>> {
        let f = self.fd.field;
        let flat: Vec<Scalar> = map.mats.iter().flat_map(Mat::flatten).collect();
        self.basis_flat
            .solve_left(&Mat::from_rows(f, vec![flat]))
            .map(|c| c.row(0).to_vec())
    }

    /// Rows (coordinates) of the Jacobson radical.
    pub fn radical_rows(&self) -> Result<Mat> {
        let blocks: Vec<Vec<Mat>> = self.basis.iter().map(|b| b.mats.clone()).collect();
        let total: usize = self.rep_dims.iter().sum();
        radical_rows_from_rep(self.fd.field, self.fd.dim, &blocks, total)
    }

    /// The semisimple quotient `End / rad` with lifting data.
    pub fn semisimple_quotient(&self) -> Result<QuotientAlgebra> {
        let rad = self.radical_rows()?;
        self.fd.quotient_by_ideal(&rad)
    }
}

/// Newton iteration `e <- 3e^2 - 2e^3` lifting an idempotent of
/// `End / rad` to a genuine idempotent endomorphism.
pub fn lift_idempotent(endo: &EndoAlgebra, approx: &RepMap) -> Result<RepMap> {
    let f = endo.fd.field;
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    let mut r = approx.clone();
    for _ in 0..endo.fd.dim + 4 {
        let r2 = r.then(&r);
        if r2 == r {
            return Ok(r);
        }
        let r3 = r2.then(&r);
        r = r2.scale(&three).sub(&r3.scale(&two));
    }
    Err(AlgebraError::DecompositionFailure {
        reason: "idempotent lifting did not converge within the iteration bound".into(),
    })
}

/// Basis of the radical of `End(M)` as morphisms.
pub fn radical_basis(alg: &PathAlgebra, m: &Representation) -> Result<Vec<RepMap>> {
    let endo = EndoAlgebra::of(alg, m)?;
    let rad = endo.radical_rows()?;
    Ok((0..rad.rows())
        .map(|i| endo.to_repmap(rad.row(i)))
        .collect())
}

/// Is `M` a brick, i.e. is `End(M)` a division ring?
pub fn is_brick(alg: &PathAlgebra, m: &Representation) -> Result<bool> {
    if m.is_zero() {
        return Err(AlgebraError::ZeroModule);
    }
    let endo = EndoAlgebra::of(alg, m)?;
    if endo.fd.dim == 1 {
        return Ok(true);
    }
    let rad = endo.radical_rows()?;
    if rad.rows() > 0 {
        return Ok(false);
    }
    match division_or_idempotent(&endo.fd)? {
        DivisionStatus::Division => Ok(true),
        DivisionStatus::NotDivision(_) => Ok(false),
        DivisionStatus::Unknown(reason) => Err(AlgebraError::EndUndecidable { reason }),
    }
}

/// The brick quotient `M / rad_E(M) M`: the quotient by the joint image of
/// the radical of the endomorphism algebra.
pub fn brick_quotient(alg: &PathAlgebra, m: &Representation) -> Result<Representation> {
    if m.is_zero() {
        return Err(AlgebraError::ZeroModule);
    }
    let f = alg.field();
    let rad = radical_basis(alg, m)?;
    let n = alg.vertex_count();
    let rows: Vec<Mat> = (0..n)
        .map(|v| {
            if rad.is_empty() {
                Mat::zeros(f, 0, m.dims[v])
            } else {
                let blocks: Vec<&Mat> = rad.iter().map(|psi| &psi.mats[v]).collect();
                Mat::vstack(f, &blocks).row_basis()
            }
        })
        .collect();
    Ok(quotient_rep(alg, m, &rows)?.0)
}
