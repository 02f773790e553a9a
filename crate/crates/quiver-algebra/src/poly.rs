//! Univariate polynomials over a [`FieldSpec`], plus the factorization
//! routines the endomorphism analysis needs: squarefree parts in any
//! characteristic, Berlekamp factorization over small prime fields, and
//! factorization over `Q` by reduction mod p, Hensel lifting and factor
//! recombination.

use crate::field::{FieldSpec, Scalar};
use num::{BigInt, BigRational, Integer, One, Zero};

/// A polynomial with coefficients listed from the constant term upward.
/// The representation is normalized: no trailing zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn zero(field: FieldSpec) -> Poly {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: FieldSpec, c: Scalar) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }

    pub fn one(field: FieldSpec) -> Poly {
        Poly::constant(field, field.one())
    }

    pub fn x(field: FieldSpec) -> Poly {
        Poly::from_coeffs(field, vec![field.zero(), field.one()])
    }

    pub fn from_coeffs(field: FieldSpec, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(f, (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::from_coeffs(f, (0..n).map(|i| f.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let f = self.field;
        if self.is_zero() || other.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, out)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        let f = self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|a| f.mul(c, a)).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&self.field.inv(l)),
        }
    }

    /// Euclidean division; panics if `divisor` is zero.
    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        let f = self.field;
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree().unwrap();
        let lead_inv = f.inv(divisor.leading().unwrap());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![f.zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let c = f.mul(&rem[rem.len() - 1], &lead_inv);
            if !f.is_zero(&c) {
                quot[k] = c.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let idx = k + i;
                    rem[idx] = f.sub(&rem[idx], &f.mul(&c, b));
                }
            }
            rem.pop();
        }
        (Poly::from_coeffs(f, quot), Poly::from_coeffs(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divmod(divisor).1
    }

    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divmod(divisor);
        assert!(r.is_zero(), "division was not exact");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, u, v)` monic with `u*self + v*other = g`.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (Poly::one(f), Poly::zero(f));
        let (mut v0, mut v1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            let nu = u0.sub(&q.mul(&u1));
            let nv = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = nu;
            v0 = v1;
            v1 = nv;
        }
        if let Some(l) = r0.leading() {
            let inv = f.inv(l);
            let c = Scalar::clone(&inv);
            return (r0.scale(&c), u0.scale(&c), v0.scale(&c));
        }
        (r0, u0, v0)
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(&f.from_i64(i as i64), c))
            .collect();
        Poly::from_coeffs(f, coeffs)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let f = self.field;
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// `self^e mod modulus` by repeated squaring.
    pub fn pow_mod(&self, e: u64, modulus: &Poly) -> Poly {
        let mut acc = Poly::one(self.field).rem(modulus);
        let mut base = self.rem(modulus);
        let mut k = e;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    /// `t^(p^j) mod modulus` over `F_p`, by iterating the Frobenius.
    pub fn frobenius_power(j: usize, modulus: &Poly) -> Poly {
        let f = modulus.field();
        let p = f.characteristic();
        assert!(p > 0, "frobenius_power needs positive characteristic");
        let mut cur = Poly::x(f).rem(modulus);
        for _ in 0..j {
            cur = cur.pow_mod(p, modulus);
        }
        cur
    }

    /// The squarefree part: the product of the distinct monic irreducible
    /// factors, correct in characteristic zero and p alike.
    pub fn squarefree_part(&self) -> Poly {
        let f = self.field;
        let me = self.monic();
        let deg = match me.degree() {
            None | Some(0) => return Poly::one(f),
            Some(d) => d,
        };
        if deg == 1 {
            return me;
        }
        let d = me.derivative();
        if d.is_zero() {
            // Characteristic p with f = g(t^p); over the prime field the
            // coefficientwise p-th root is the identity.
            return pth_root(&me).squarefree_part();
        }
        let g = me.gcd(&d);
        let w = me.div_exact(&g);
        // Strip every factor shared with w from g; what survives is the part
        // of f whose multiplicities are divisible by p, a perfect p-th power.
        let mut c = g;
        loop {
            let s = c.gcd(&w);
            match s.degree() {
                None | Some(0) => break,
                _ => c = c.div_exact(&s),
            }
        }
        match c.degree() {
            None | Some(0) => w,
            _ => w.mul(&pth_root(&c).squarefree_part()),
        }
    }
}

/// Coefficientwise p-th root of a polynomial in `t^p` over the prime field.
fn pth_root(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.characteristic() as usize;
    assert!(p > 0);
    let mut coeffs = Vec::new();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i % p == 0 {
            coeffs.push(c.clone());
        } else {
            assert!(field.is_zero(c), "polynomial is not a p-th power");
        }
    }
    Poly::from_coeffs(field, coeffs)
}

/// Complete factorization of a squarefree monic polynomial over a prime
/// field `F_p` with `p` small, by Berlekamp's algorithm. Factors are monic
/// irreducible, sorted by degree then coefficients.
pub fn factor_squarefree_fp(f: &Poly) -> Vec<Poly> {
    let field = f.field();
    let p = field.characteristic();
    assert!(p > 0, "factor_squarefree_fp needs a prime field");
    let me = f.monic();
    let n = match me.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![me],
        Some(n) => n,
    };
    // Frobenius matrix on F_p[t]/(f): row i holds t^(ip) mod f.
    let mut frob = crate::matrix::Mat::zeros(field, n, n);
    let tp = Poly::x(field).pow_mod(p, &me);
    let mut cur = Poly::one(field);
    for i in 0..n {
        for j in 0..n {
            frob.set(i, j, cur.coeff(j));
        }
        if i + 1 < n {
            cur = cur.mul(&tp).rem(&me);
        }
    }
    let fixed = frob
        .sub(&crate::matrix::Mat::identity(field, n))
        .left_null_basis();
    let r = fixed.rows();
    if r == 1 {
        return vec![me];
    }
    let mut factors = vec![me.clone()];
    for b in 0..r {
        if factors.len() == r {
            break;
        }
        let h = Poly::from_coeffs(field, fixed.row(b).to_vec());
        if h.degree().map_or(true, |d| d == 0) {
            continue;
        }
        let mut next = Vec::new();
        for w in factors {
            if w.degree() == Some(1) {
                next.push(w);
                continue;
            }
            let mut pieces = vec![w];
            for c in 0..p {
                if pieces.iter().all(|q| q.degree() == Some(1)) {
                    break;
                }
                let shift = h.sub(&Poly::constant(field, Scalar::Fp(c)));
                let mut refined = Vec::new();
                for q in pieces {
                    let g = q.gcd(&shift);
                    match g.degree() {
                        None | Some(0) => refined.push(q),
                        Some(d) if d == q.degree().unwrap() => refined.push(q),
                        _ => {
                            let rest = q.div_exact(&g);
                            refined.push(g.monic());
                            refined.push(rest.monic());
                        }
                    }
                }
                pieces = refined;
            }
            next.extend(pieces);
        }
        factors = next;
    }
    sort_polys(&mut factors);
    factors
}

/// Advances `combo` to the next k-subset of `0..n` in lexicographic order.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] != i + n - k {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn sort_polys(v: &mut [Poly]) {
    v.sort_by(|a, b| {
        let da = a.degree().map_or(0, |d| d);
        let db = b.degree().map_or(0, |d| d);
        da.cmp(&db).then_with(|| {
            for i in 0..=da.max(db) {
                let ca = scalar_key(&a.coeff(i));
                let cb = scalar_key(&b.coeff(i));
                match ca.cmp(&cb) {
                    std::cmp::Ordering::Equal => continue,
                    o => return o,
                }
            }
            std::cmp::Ordering::Equal
        })
    });
}

fn scalar_key(s: &Scalar) -> (i8, BigRational) {
    match s {
        Scalar::Fp(v) => (0, BigRational::from_integer(BigInt::from(*v))),
        Scalar::Rat(r) => (0, r.clone()),
    }
}

// ---------------------------------------------------------------------------
// Factorization over Q: reduce mod p, Berlekamp, Hensel lift, recombine.
// ---------------------------------------------------------------------------

type ZPoly = Vec<BigInt>;

fn z_norm(mut v: ZPoly) -> ZPoly {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn z_mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    z_norm(out)
}

fn z_sub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.len().max(b.len());
    let get = |v: &ZPoly, i: usize| v.get(i).cloned().unwrap_or_else(BigInt::zero);
    z_norm((0..n).map(|i| get(a, i) - get(b, i)).collect())
}

fn z_mod(a: &ZPoly, m: &BigInt) -> ZPoly {
    z_norm(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn z_center(a: &ZPoly, m: &BigInt) -> ZPoly {
    let half = m / 2;
    z_norm(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division with remainder by a monic divisor, coefficients mod `m`.
fn z_divmod_monic(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    assert!(b.last().is_some_and(One::is_one), "divisor must be monic");
    let d = b.len() - 1;
    let mut rem: ZPoly = a.iter().map(|c| c.mod_floor(m)).collect();
    let mut quot = vec![BigInt::zero(); rem.len().saturating_sub(d)];
    while rem.len() > d {
        let k = rem.len() - 1 - d;
        let c = rem[rem.len() - 1].clone();
        if !c.is_zero() {
            quot[k] = c.clone();
            for (i, bc) in b.iter().enumerate() {
                let idx = k + i;
                rem[idx] = (&rem[idx] - &c * bc).mod_floor(m);
            }
        }
        rem.pop();
    }
    (z_norm(quot), z_norm(rem))
}

/// Exact division test in Z[t] by a monic candidate divisor.
fn z_divides_exact(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    if b.is_empty() || !b.last().unwrap().is_one() {
        return None;
    }
    let d = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - d];
    while rem.len() > d {
        let k = rem.len() - 1 - d;
        let c = rem[rem.len() - 1].clone();
        quot[k] = c.clone();
        for (i, bc) in b.iter().enumerate() {
            let idx = k + i;
            rem[idx] = &rem[idx] - &c * bc;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        if rem.len() > d + k {
            return None;
        }
    }
    if rem.is_empty() {
        Some(z_norm(quot))
    } else {
        None
    }
}

fn fp_to_z(f: &Poly) -> ZPoly {
    z_norm(
        f.coeffs()
            .iter()
            .map(|c| match c {
                Scalar::Fp(v) => BigInt::from(*v),
                Scalar::Rat(_) => unreachable!("fp_to_z on a rational poly"),
            })
            .collect(),
    )
}

fn z_to_fp(f: &ZPoly, field: FieldSpec) -> Poly {
    let p = BigInt::from(field.characteristic());
    Poly::from_coeffs(
        field,
        f.iter()
            .map(|c| {
                let r = c.mod_floor(&p);
                Scalar::Fp(u64::try_from(r).expect("residue fits"))
            })
            .collect(),
    )
}

/// One quadratic Hensel step: from a factorization and Bezout data mod `m`
/// to the same data mod `m^2` (von zur Gathen's monic lifting step).
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &ZPoly,
    g: &ZPoly,
    h: &ZPoly,
    s: &ZPoly,
    t: &ZPoly,
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = z_mod(&z_sub(f, &z_mul(g, h)), &m2);
    let (q, r) = z_divmod_monic(&z_mul(s, &e), h, &m2);
    let g1 = z_mod(
        &z_norm({
            let mut v = z_mul(t, &e);
            let qg = z_mul(&q, g);
            let n = v.len().max(qg.len()).max(g.len());
            v.resize(n, BigInt::zero());
            for (i, c) in qg.iter().enumerate() {
                v[i] += c;
            }
            for (i, c) in g.iter().enumerate() {
                v[i] += c;
            }
            v
        }),
        &m2,
    );
    let h1 = z_mod(
        &z_norm({
            let mut v = r;
            let n = v.len().max(h.len());
            v.resize(n, BigInt::zero());
            for (i, c) in h.iter().enumerate() {
                v[i] += c;
            }
            v
        }),
        &m2,
    );
    // Lift the Bezout identity alongside.
    let one: ZPoly = vec![BigInt::one()];
    let b = z_mod(
        &z_sub(
            &{
                let mut v = z_mul(s, &g1);
                let th = z_mul(t, &h1);
                let n = v.len().max(th.len());
                v.resize(n, BigInt::zero());
                for (i, c) in th.iter().enumerate() {
                    v[i] += c;
                }
                z_norm(v)
            },
            &one,
        ),
        &m2,
    );
    let (c, d) = z_divmod_monic(&z_mul(s, &b), &h1, &m2);
    let s1 = z_mod(&z_sub(s, &d), &m2);
    let t1 = z_mod(&z_sub(&z_sub(t, &z_mul(t, &b)), &z_mul(&c, &g1)), &m2);
    (g1, h1, s1, t1)
}

/// Lifts a mod-p factorization of monic `target` to mod `p^K >= bound`,
/// splitting the factor list as a binary tree of pairwise lifts.
fn hensel_tree(target: &ZPoly, list: &[Poly], p: u64, modulus: &BigInt) -> Vec<ZPoly> {
    if list.len() == 1 {
        return vec![z_mod(target, modulus)];
    }
    let field = list[0].field();
    let mid = list.len() / 2;
    let (left, right) = list.split_at(mid);
    let a0: Poly = left.iter().fold(Poly::one(field), |acc, q| acc.mul(q));
    let b0: Poly = right.iter().fold(Poly::one(field), |acc, q| acc.mul(q));
    let (g, s0, t0) = a0.xgcd(&b0);
    assert_eq!(g.degree(), Some(0), "factors are not coprime mod p");
    let (mut ga, mut gb) = (fp_to_z(&a0), fp_to_z(&b0));
    let (mut s, mut t) = (fp_to_z(&s0), fp_to_z(&t0));
    let mut m = BigInt::from(p);
    while &m < modulus {
        let (ga1, gb1, s1, t1) = hensel_step(target, &ga, &gb, &s, &t, &m);
        ga = ga1;
        gb = gb1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let ga = z_mod(&ga, modulus);
    let gb = z_mod(&gb, modulus);
    let mut out = hensel_tree(&ga, left, p, modulus);
    out.extend(hensel_tree(&gb, right, p, modulus));
    out
}

fn is_small_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Factors a monic squarefree polynomial over `Q` into monic irreducibles,
/// sorted by degree then coefficients.
pub fn factor_squarefree_rationals(f: &Poly) -> Vec<Poly> {
    assert_eq!(f.field(), FieldSpec::Rationals);
    let deg = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.monic()],
        Some(d) => d,
    };
    let me = f.monic();
    // Monicize over Z: substitute t -> s/N where N clears all denominators.
    let mut n = BigInt::one();
    for c in me.coeffs() {
        if let Scalar::Rat(r) = c {
            n = n.lcm(r.denom());
        }
    }
    let mut h: ZPoly = Vec::with_capacity(deg + 1);
    for (i, c) in me.coeffs().iter().enumerate() {
        let Scalar::Rat(r) = c else { unreachable!() };
        let scaled = r * BigRational::from_integer(n.pow((deg - i) as u32));
        assert!(scaled.denom().is_one(), "monicization failed");
        h.push(scaled.numer().clone());
    }
    assert!(h.last().unwrap().is_one());

    // A prime where h stays squarefree.
    let mut p = 3u64;
    let (_fp_field, h_mod) = loop {
        if is_small_prime(p) {
            if let Ok(field) = FieldSpec::prime(p) {
                let hp = z_to_fp(&h, field);
                if hp.degree() == Some(deg) && hp.gcd(&hp.derivative()).degree() == Some(0) {
                    break (field, hp);
                }
            }
        }
        p += 2;
        assert!(p < 100_000, "no squarefree reduction prime found");
    };

    let modular = factor_squarefree_fp(&h_mod);
    if modular.len() == 1 {
        return vec![me];
    }

    // Landau-Mignotte style bound on factor coefficients: 2^deg * ||h||_2.
    let norm_sq: BigInt = h.iter().map(|c| c * c).sum();
    let mut root = BigInt::one();
    while &root * &root < norm_sq {
        root += 1;
    }
    let bound = (BigInt::from(2).pow(deg as u32) * root + 1) * 2;
    let mut modulus = BigInt::from(p);
    while modulus < bound {
        modulus = &modulus * &modulus;
    }

    let lifted = hensel_tree(&h, &modular, p, &modulus);

    // Recombine modular factors into true integer factors.
    let mut remaining: Vec<ZPoly> = lifted;
    let mut target = h;
    let mut found: Vec<ZPoly> = Vec::new();
    'outer: loop {
        if remaining.len() <= 1 {
            if !target.is_empty() && target.len() > 1 {
                found.push(target.clone());
            }
            break;
        }
        let r = remaining.len();
        for size in 1..=r / 2 {
            let mut combo: Vec<usize> = (0..size).collect();
            loop {
                let mut prod: ZPoly = vec![BigInt::one()];
                for &i in &combo {
                    prod = z_mod(&z_mul(&prod, &remaining[i]), &modulus);
                }
                let cand = z_center(&prod, &modulus);
                if let Some(quot) = z_divides_exact(&target, &cand) {
                    found.push(cand);
                    target = quot;
                    for &i in combo.iter().rev() {
                        remaining.remove(i);
                    }
                    continue 'outer;
                }
                if !next_combination(&mut combo, r) {
                    break;
                }
            }
        }
        // No proper subset divides: the rest is irreducible.
        found.push(target.clone());
        break;
    }

    // Map factors back through t -> N t and normalize to monic over Q.
    let mut out: Vec<Poly> = found
        .into_iter()
        .map(|zf| {
            let d = zf.len() - 1;
            let coeffs: Vec<Scalar> = zf
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    Scalar::Rat(BigRational::new(c.clone(), n.pow((d - i) as u32)))
                })
                .collect();
            Poly::from_coeffs(FieldSpec::Rationals, coeffs).monic()
        })
        .collect();
    sort_polys(&mut out);
    out
}
