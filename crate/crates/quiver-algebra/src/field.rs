//! Exact coefficient fields: prime fields `F_p` and the rationals `Q`.

use crate::{AlgebraError, Result};
use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// The coefficient field of a computation.
///
/// `Prime(p)` is the field with `p` elements (`p` a prime below `2^31`),
/// `Rationals` is `Q` with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Prime(u64),
    Rationals,
}

/// One field element. `Fp` residues are kept reduced to `0..p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Fp(u64),
    Rat(BigRational),
}

impl FieldSpec {
    /// Builds `F_p`, rejecting non-primes and oversized moduli.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p < 2 {
            return Err(AlgebraError::InvalidPresentation {
                reason: format!("characteristic {p} is not a prime"),
            });
        }
        if p >= 1 << 31 {
            return Err(AlgebraError::InvalidPresentation {
                reason: format!("characteristic {p} exceeds the supported bound 2^31"),
            });
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(AlgebraError::InvalidPresentation {
                    reason: format!("characteristic {p} is not a prime"),
                });
            }
            d += 1;
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Fp(0),
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Prime(_) => Scalar::Fp(1),
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Prime(p) => {
                let r = v.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn is_zero(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Fp(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + p - y) % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x - y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Prime(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x * y) % p),
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    /// Multiplicative inverse. Panics on zero: callers must test first.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Prime(p), Scalar::Fp(x)) => {
                assert!(*x != 0, "inverse of zero in F_{p}");
                Scalar::Fp(pow_mod(*x, p - 2, *p))
            }
            (FieldSpec::Rationals, Scalar::Rat(x)) => {
                assert!(!x.is_zero(), "inverse of zero in Q");
                Scalar::Rat(x.recip())
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    /// Residue in `0..p` for prime fields; panics over `Q`.
    pub fn residue(&self, a: &Scalar) -> u64 {
        match a {
            Scalar::Fp(x) => *x,
            Scalar::Rat(_) => panic!("residue of a rational scalar"),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fp(v) => write!(f, "{v}"),
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.is_negative() {
                    write!(f, "-{}/{}", r.numer().abs(), r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(97).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(15).is_err());
        assert!(FieldSpec::prime(1 << 32).is_err());
    }

    #[test]
    fn fp_arithmetic() {
        let f = FieldSpec::prime(7).unwrap();
        let three = f.from_i64(3);
        let five = f.from_i64(-2);
        assert_eq!(five, Scalar::Fp(5));
        assert_eq!(f.add(&three, &five), Scalar::Fp(1));
        assert_eq!(f.mul(&three, &five), Scalar::Fp(1));
        assert_eq!(f.inv(&three), Scalar::Fp(5));
        assert_eq!(f.mul(&f.inv(&three), &three), f.one());
    }

    #[test]
    fn rational_arithmetic() {
        let f = FieldSpec::Rationals;
        let half = f.div(&f.one(), &f.from_i64(2));
        let sum = f.add(&half, &half);
        assert_eq!(sum, f.one());
        assert_eq!(format!("{half}"), "1/2");
        assert_eq!(format!("{}", f.from_i64(-3)), "-3");
    }
}
