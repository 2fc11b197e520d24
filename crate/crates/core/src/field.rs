//! Coefficient fields: prime fields GF(p) with p < 2^31, and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field polynomial coefficients live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Prime(u64),
    Rational,
}

/// A field element in canonical form: a reduced residue or a reduced fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Mod(u64),
    Rat(BigRational),
}

impl Field {
    /// GF(p); `p` must be a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn rationals() -> Self {
        Field::Rational
    }

    /// `0` selects the rationals, otherwise a prime field.
    pub fn from_characteristic(c: u64) -> Result<Self> {
        if c == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(c)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Prime(_) => FieldElement::Mod(0),
            Field::Rational => FieldElement::Rat(BigRational::zero()),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self {
            Field::Prime(_) => FieldElement::Mod(1),
            Field::Rational => FieldElement::Rat(BigRational::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> FieldElement {
        match self {
            Field::Prime(p) => FieldElement::Mod(v.rem_euclid(*p as i64) as u64),
            Field::Rational => FieldElement::Rat(BigRational::from_integer(BigInt::from(v))),
        }
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldElement {
        match self {
            Field::Prime(p) => {
                let r = v % BigInt::from(*p);
                let r = if r.is_negative() { r + BigInt::from(*p) } else { r };
                FieldElement::Mod(r.try_into().expect("residue fits in u64"))
            }
            Field::Rational => FieldElement::Rat(BigRational::from_integer(v.clone())),
        }
    }

    /// `num / den` mapped into the field.
    pub fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Result<FieldElement> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match self {
            Field::Rational => Ok(FieldElement::Rat(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(_) => {
                let n = self.from_bigint(num);
                let d = self.from_bigint(den);
                self.div(&n, &d)
            }
        }
    }

    pub fn is_zero(&self, a: &FieldElement) -> bool {
        a.is_zero()
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => {
                let s = x + y;
                FieldElement::Mod(if s >= *p { s - p } else { s })
            }
            (Field::Rational, FieldElement::Rat(x), FieldElement::Rat(y)) => FieldElement::Rat(x + y),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        match (self, a) {
            (Field::Prime(p), FieldElement::Mod(x)) => FieldElement::Mod(if *x == 0 { 0 } else { p - x }),
            (Field::Rational, FieldElement::Rat(x)) => FieldElement::Rat(-x),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (self, a, b) {
            (Field::Prime(p), FieldElement::Mod(x), FieldElement::Mod(y)) => FieldElement::Mod(x * y % p),
            (Field::Rational, FieldElement::Rat(x), FieldElement::Rat(y)) => FieldElement::Rat(x * y),
            _ => panic!("field element does not belong to {self}"),
        }
    }

    pub fn inverse(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, a) {
            (Field::Prime(p), FieldElement::Mod(x)) => FieldElement::Mod(pow_mod(*x, p - 2, *p)),
            (Field::Rational, FieldElement::Rat(x)) => FieldElement::Rat(x.recip()),
            _ => panic!("field element does not belong to {self}"),
        })
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, &self.inverse(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// The h-th roots of unity `ζ^0, ..., ζ^(h-1)`.
    ///
    /// Over GF(p), `ζ = g^((p-1)/h)` for the smallest primitive root `g`, which
    /// needs `h | p-1`. Over the rationals only `h <= 2` is available.
    pub fn roots_of_unity(&self, h: usize) -> Result<Vec<FieldElement>> {
        let unavailable = || Error::RootsUnavailable { h, field: self.to_string() };
        if h == 0 {
            return Err(unavailable());
        }
        match self {
            Field::Rational => match h {
                1 => Ok(vec![self.one()]),
                2 => Ok(vec![self.one(), self.from_i64(-1)]),
                _ => Err(unavailable()),
            },
            Field::Prime(p) => {
                let h64 = h as u64;
                if (p - 1) % h64 != 0 {
                    return Err(unavailable());
                }
                let zeta = pow_mod(primitive_root(*p), (p - 1) / h64, *p);
                let mut out = Vec::with_capacity(h);
                let mut cur = 1u64;
                for _ in 0..h {
                    out.push(FieldElement::Mod(cur));
                    cur = cur * zeta % p;
                }
                Ok(out)
            }
        }
    }

    /// All `N`-th roots of unity for the smallest available order `N >= h`
    /// (`N | p-1` over GF(p), `N <= 2` over the rationals).
    pub fn roots_of_unity_at_least(&self, h: usize) -> Result<Vec<FieldElement>> {
        let limit = match self {
            Field::Rational => 2,
            Field::Prime(p) => (p - 1) as usize,
        };
        (h.max(1)..=limit)
            .find_map(|n| self.roots_of_unity(n).ok())
            .ok_or(Error::RootsUnavailable { h, field: self.to_string() })
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rational => write!(f, "QQ"),
        }
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Mod(x) => *x == 0,
            FieldElement::Rat(x) => x.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Mod(x) => *x == 1,
            FieldElement::Rat(x) => x.is_one(),
        }
    }

    /// Whether the canonical text starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            FieldElement::Mod(_) => false,
            FieldElement::Rat(x) => x.is_negative(),
        }
    }

    /// Absolute value for display (identity on residues).
    pub fn abs(&self) -> FieldElement {
        match self {
            FieldElement::Mod(x) => FieldElement::Mod(*x),
            FieldElement::Rat(x) => FieldElement::Rat(x.abs()),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Mod(x) => write!(f, "{x}"),
            FieldElement::Rat(x) => write!(f, "{x}"),
        }
    }
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set {2, 3, 5, 7} is exact below 3.2e9.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            out.push(q);
            while n % q == 0 {
                n /= q;
            }
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of the multiplicative group of GF(p).
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime field has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> FieldElement {
        FieldElement::Rat(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn small_examples() {
        let f7 = Field::prime(7).unwrap();
        assert_eq!(f7.mul(&FieldElement::Mod(3), &FieldElement::Mod(5)), FieldElement::Mod(1));
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(2, 4).to_string(), "1/2");
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.inverse(&FieldElement::Mod(2)).unwrap(), FieldElement::Mod(3));
        assert_eq!(f5.inverse(&FieldElement::Mod(0)), Err(Error::DivisionByZero));
        assert_eq!(Field::Rational.div(&rat(1, 1), &rat(0, 1)), Err(Error::DivisionByZero));
    }

    #[test]
    fn primality() {
        assert!(Field::prime(2).is_ok());
        assert!(Field::prime(101).is_ok());
        assert!(Field::prime(2_147_483_647).is_ok());
        assert!(Field::prime(2_147_483_659).is_err());
        assert!(Field::prime(91).is_err());
        assert!(Field::prime(1).is_err());
        let brute = |n: u64| n >= 2 && (2..n).take_while(|q| q * q <= n).all(|q| n % q != 0);
        for n in 0..5000 {
            assert_eq!(is_prime(n), brute(n), "{n}");
        }
        assert!(is_prime(2_147_483_629));
        // strong pseudoprime to bases 2, 3, 5
        assert!(!is_prime(25_326_001));
    }

    #[test]
    fn roots_of_unity_examples() {
        let q = Field::Rational;
        assert_eq!(q.roots_of_unity(2).unwrap(), vec![rat(1, 1), rat(-1, 1)]);
        assert_eq!(q.roots_of_unity(1).unwrap(), vec![rat(1, 1)]);
        assert!(q.roots_of_unity(3).is_err());
        let f5 = Field::prime(5).unwrap();
        let brute: Vec<u64> = (0..4).map(|k| pow_mod(2, k, 5)).collect();
        assert_eq!(brute, vec![1, 2, 4, 3]);
        assert_eq!(
            f5.roots_of_unity(4).unwrap(),
            brute.into_iter().map(FieldElement::Mod).collect::<Vec<_>>()
        );
        assert_eq!(Field::prime(2).unwrap().roots_of_unity(1).unwrap(), vec![FieldElement::Mod(1)]);
        assert!(Field::prime(7).unwrap().roots_of_unity(4).is_err());
    }

    #[test]
    fn primitive_roots_brute_force() {
        for p in [3u64, 5, 7, 11, 13, 101, 103] {
            let g = primitive_root(p);
            let order = (1..p).find(|&k| pow_mod(g, k, p) == 1).unwrap();
            assert_eq!(order, p - 1);
            for smaller in 2..g {
                let o = (1..p).find(|&k| pow_mod(smaller, k, p) == 1).unwrap();
                assert!(o < p - 1);
            }
        }
    }

    #[test]
    fn roots_of_unity_properties() {
        for (p, h) in [(101u64, 4usize), (101, 5), (13, 6), (31, 3), (7, 2)] {
            let f = Field::prime(p).unwrap();
            let roots = f.roots_of_unity(h).unwrap();
            for w in &roots {
                assert!(f.pow(w, h as u64).is_one());
            }
            let mut sorted: Vec<_> = roots.iter().map(|r| r.to_string()).collect();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), h);
        }
    }

    fn gf_elem(p: u64) -> impl Strategy<Value = FieldElement> {
        (0..p).prop_map(FieldElement::Mod)
    }

    fn q_elem() -> impl Strategy<Value = FieldElement> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    fn check_axioms(f: Field, a: &FieldElement, b: &FieldElement, c: &FieldElement) {
        assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
        assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
        assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
        assert_eq!(f.add(a, &f.neg(a)), f.zero());
        assert_eq!(f.sub(&f.add(a, b), b), *a);
        if !a.is_zero() {
            assert!(f.mul(a, &f.inverse(a).unwrap()).is_one());
        }
    }

    proptest! {
        #[test]
        fn gf_axioms(a in gf_elem(31), b in gf_elem(31), c in gf_elem(31)) {
            check_axioms(Field::Prime(31), &a, &b, &c);
        }

        #[test]
        fn q_axioms(a in q_elem(), b in q_elem(), c in q_elem()) {
            check_axioms(Field::Rational, &a, &b, &c);
        }
    }
}
