//! Arithmetic in the prime field F_p and the chain ring R = F_p + uF_p
//! (u² = 0), together with the automorphisms θ_s(a + ub) = a + usb of R.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The prime field F_p for an odd prime p. Residues are canonical in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::NotUnit);
        }
        Ok(self.pow(a, (self.p - 2) as u64))
    }

    /// Multiplicative order of a nonzero residue.
    pub fn order(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.p) {
            return Err(Error::NotUnit);
        }
        let mut x = a % self.p;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Ok(k)
    }

    // Operations on R = F_p + uF_p.

    #[inline]
    pub fn r_add(&self, x: RingElement, y: RingElement) -> RingElement {
        RingElement::new(self.add(x.a, y.a), self.add(x.b, y.b))
    }

    #[inline]
    pub fn r_sub(&self, x: RingElement, y: RingElement) -> RingElement {
        RingElement::new(self.sub(x.a, y.a), self.sub(x.b, y.b))
    }

    #[inline]
    pub fn r_neg(&self, x: RingElement) -> RingElement {
        RingElement::new(self.neg(x.a), self.neg(x.b))
    }

    /// (a + ub)(c + ud) = ac + u(ad + bc).
    #[inline]
    pub fn r_mul(&self, x: RingElement, y: RingElement) -> RingElement {
        let p = self.p as u64;
        let a = (x.a as u64 * y.a as u64) % p;
        let b = (x.a as u64 * y.b as u64 + x.b as u64 * y.a as u64) % p;
        RingElement::new(a as u32, b as u32)
    }

    #[inline]
    pub fn r_scale(&self, k: u32, x: RingElement) -> RingElement {
        RingElement::new(self.mul(k, x.a), self.mul(k, x.b))
    }

    /// Inverse of a unit a + ub: a⁻¹ − u·b·a⁻².
    pub fn r_inv(&self, x: RingElement) -> Result<RingElement> {
        let ai = self.inv(x.a)?;
        let b = self.neg(self.mul(x.b, self.mul(ai, ai)));
        Ok(RingElement::new(ai, b))
    }

    /// Checks that both components are canonical residues.
    pub fn contains(&self, x: RingElement) -> bool {
        x.a < self.p && x.b < self.p
    }

    /// All p² elements in (a, b) lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = RingElement> {
        let p = self.p;
        (0..p).flat_map(move |a| (0..p).map(move |b| RingElement::new(a, b)))
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element a + ub of R. Arithmetic goes through [`PrimeField`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct RingElement {
    pub a: u32,
    pub b: u32,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement { a: 0, b: 0 };
    pub const ONE: RingElement = RingElement { a: 1, b: 0 };
    pub const U: RingElement = RingElement { a: 0, b: 1 };

    #[inline]
    pub const fn new(a: u32, b: u32) -> Self {
        RingElement { a, b }
    }

    #[inline]
    pub fn scalar(a: u32) -> Self {
        RingElement { a, b: 0 }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    #[inline]
    pub fn is_unit(&self) -> bool {
        self.a != 0
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "u"),
            (0, b) => write!(f, "{b}*u"),
            (a, 1) => write!(f, "({a}+u)"),
            (a, b) => write!(f, "({a}+{b}*u)"),
        }
    }
}

/// The automorphism θ(a + ub) = a + usb of R, with s ≠ 1.
///
/// Stores s⁰, …, s^{e−1} where e is the order of s, so θ^i costs one
/// table lookup and one multiplication.
#[derive(Clone)]
pub struct Automorphism {
    field: PrimeField,
    s: u32,
    powers: Arc<[u32]>,
}

impl Automorphism {
    pub fn new(p: u32, s: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let s_red = s % p;
        if s_red == 0 || s_red == 1 {
            return Err(Error::TrivialAutomorphism { p, s });
        }
        let e = field.order(s_red)?;
        let powers: Vec<u32> = (0..e).map(|i| field.pow(s_red, i as u64)).collect();
        Ok(Automorphism { field, s: s_red, powers: powers.into() })
    }

    /// Every nontrivial automorphism of F_p + uF_p, ordered by s.
    pub fn all(p: u32) -> Result<Vec<Automorphism>> {
        PrimeField::new(p)?;
        (2..p).map(|s| Automorphism::new(p, s)).collect()
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    #[inline]
    pub fn s(&self) -> u32 {
        self.s
    }

    /// The order e of θ (the multiplicative order of s).
    #[inline]
    pub fn order(&self) -> usize {
        self.powers.len()
    }

    /// s^i mod p.
    #[inline]
    pub fn s_pow(&self, i: usize) -> u32 {
        self.powers[i % self.powers.len()]
    }

    /// θ^i(a + ub) = a + u s^i b.
    #[inline]
    pub fn apply(&self, i: usize, c: RingElement) -> RingElement {
        RingElement::new(c.a, self.field.mul(self.s_pow(i), c.b))
    }

    /// θ^{-i}, i.e. θ^{e - (i mod e)}.
    #[inline]
    pub fn apply_inverse(&self, i: usize, c: RingElement) -> RingElement {
        let e = self.order();
        self.apply((e - i % e) % e, c)
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.s == other.s
    }
}

impl Eq for Automorphism {}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Automorphism(p={}, s={}, e={})", self.p(), self.s, self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_moduli() {
        assert_eq!(PrimeField::new(2), Err(Error::CharacteristicTwo));
        assert_eq!(PrimeField::new(9), Err(Error::NotPrime(9)));
        assert!(Automorphism::new(5, 1).is_err());
        assert!(Automorphism::new(5, 0).is_err());
        assert!(Automorphism::new(5, 6).is_err());
    }

    #[test]
    fn theta_examples() {
        let t = Automorphism::new(3, 2).unwrap();
        assert_eq!(t.apply(1, RingElement::U), RingElement::new(0, 2));
        for a in 0..3 {
            assert_eq!(t.apply(1, RingElement::scalar(a)), RingElement::scalar(a));
        }
        let t5 = Automorphism::new(5, 2).unwrap();
        assert_eq!(t5.order(), 4);
        assert_eq!(t5.apply(4, RingElement::new(1, 1)), RingElement::new(1, 1));
        assert_eq!(t5.apply(0, RingElement::new(3, 2)), RingElement::new(3, 2));
    }

    #[test]
    fn invert_unit_examples() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.r_inv(RingElement::new(1, 1)), Ok(RingElement::new(1, 2)));
        assert_eq!(f3.r_inv(RingElement::U), Err(Error::NotUnit));
        let f5 = PrimeField::new(5).unwrap();
        assert_eq!(f5.r_inv(RingElement::scalar(2)), Ok(RingElement::scalar(3)));
    }

    #[test]
    fn ring_laws_exhaustive() {
        for p in [3u32, 5, 7] {
            let f = PrimeField::new(p).unwrap();
            assert_eq!(f.r_mul(RingElement::U, RingElement::U), RingElement::ZERO);
            let elems: Vec<_> = f.elements().collect();
            assert_eq!(elems.len(), (p * p) as usize);
            for aut in Automorphism::all(p).unwrap() {
                for &c in &elems {
                    assert_eq!(aut.apply(aut.order(), c), c);
                    assert_eq!(aut.apply_inverse(1, aut.apply(1, c)), c);
                    for &d in &elems {
                        let sum = f.r_add(c, d);
                        let prod = f.r_mul(c, d);
                        assert!(f.contains(sum) && f.contains(prod));
                        for i in 0..aut.order() {
                            assert_eq!(
                                aut.apply(i, prod),
                                f.r_mul(aut.apply(i, c), aut.apply(i, d))
                            );
                            assert_eq!(
                                aut.apply(i, sum),
                                f.r_add(aut.apply(i, c), aut.apply(i, d))
                            );
                        }
                    }
                }
            }
            let mut units = 0;
            for &c in &elems {
                match f.r_inv(c) {
                    Ok(ci) => {
                        units += 1;
                        assert_eq!(f.r_mul(c, ci), RingElement::ONE);
                    }
                    Err(e) => {
                        assert_eq!(e, Error::NotUnit);
                        assert_eq!(c.a, 0);
                    }
                }
            }
            assert_eq!(units, p * p - p);
        }
    }
}
