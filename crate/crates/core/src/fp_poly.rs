//! Commutative polynomials over F_p, factorization of x^n − 1 and
//! enumeration of its monic divisors.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ring::PrimeField;

/// Default cap on the number of monic divisors [`monic_divisors`] will build.
pub const DIVISOR_LIMIT: usize = 1 << 24;

const SPLIT_SEED: u64 = 0x5eed_f00d;

/// A polynomial over F_p with ascending coefficients and no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl FpPoly {
    pub fn zero(field: PrimeField) -> Self {
        FpPoly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    /// x^k
    pub fn monomial(field: PrimeField, k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        FpPoly { field, coeffs: c }
    }

    /// x^n − 1
    pub fn x_n_minus_one(field: PrimeField, n: usize) -> Self {
        let mut c = vec![0; n + 1];
        c[0] = field.neg(1);
        c[n] = 1;
        Self::new(field, c)
    }

    /// Builds from ascending coefficients, reducing mod p and trimming.
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let p = field.p();
        let mut coeffs: Vec<u32> = coeffs.into_iter().map(|c| c % p).collect();
        trim(&mut coeffs);
        FpPoly { field, coeffs }
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.reduce(c)).collect())
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    #[inline]
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree of the zero polynomial.
    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Self::new(f, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Self::new(f, c)
    }

    pub fn neg(&self) -> Self {
        let f = self.field;
        FpPoly { field: f, coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn scale(&self, k: u32) -> Self {
        let f = self.field;
        Self::new(f, self.coeffs.iter().map(|&c| f.mul(c, k)).collect())
    }

    /// Multiplication by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        FpPoly { field: self.field, coeffs: c }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.field);
        }
        let p = self.field.p() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        Self::new(self.field, acc.into_iter().map(|c| c as u32).collect())
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = self.field;
        let m = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv = f.inv(divisor.leading())?;
        let mut r = self.coeffs.clone();
        if r.len() <= m {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut q = vec![0u32; r.len() - m];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + m], inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                r[k + j] = f.sub(r[k + j], f.mul(c, d));
            }
        }
        r.truncate(m);
        Ok((Self::new(f, q), Self::new(f, r)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// `Some(q)` when `divisor · q = self`.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Reduction modulo x^n − 1 by folding exponents.
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        let f = self.field;
        let mut c = vec![0u32; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i % n] = f.add(c[i % n], a);
        }
        Self::new(f, c)
    }

    /// Monic gcd (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Self {
        self.mul(other).rem(modulus).expect("nonzero modulus")
    }

    pub fn pow_mod(&self, mut exp: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus).expect("nonzero modulus");
        let mut acc = Self::one(self.field).rem(modulus).expect("nonzero modulus");
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            exp >>= 1;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let f = self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, (i as u64 % f.p() as u64) as u32))
            .collect();
        Self::new(f, c)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Canonical order: degree first, then coefficients compared from the
    /// constant term upward.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

fn trim(c: &mut Vec<u32>) {
    while c.last() == Some(&0) {
        c.pop();
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpPoly[p={}]({})", self.field.p(), self)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Complete factorization of x^n − 1 into monic irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub field: PrimeField,
    pub n: usize,
    /// Distinct monic irreducible factors with multiplicities, in canonical order.
    pub factors: Vec<(FpPoly, u32)>,
}

impl Factorization {
    pub fn product(&self) -> FpPoly {
        let mut acc = FpPoly::one(self.field);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|(_, m)| *m as u128 + 1).product()
    }
}

/// Factors x^n − 1 over F_p. Writing n = m·p^k with p ∤ m, x^n − 1 =
/// (x^m − 1)^{p^k}; the square-free x^m − 1 is split by distinct-degree
/// then equal-degree factorization with a fixed-seed generator.
pub fn factor_xn_minus_1(field: PrimeField, n: usize) -> Factorization {
    assert!(n >= 1, "n must be positive");
    let p = field.p() as usize;
    let mut m = n;
    let mut mult = 1u32;
    while m.is_multiple_of(p) {
        m /= p;
        mult *= p as u32;
    }
    let sqfree = FpPoly::x_n_minus_one(field, m);
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED ^ ((field.p() as u64) << 32) ^ n as u64);
    let mut factors: Vec<FpPoly> = Vec::new();
    for (d, block) in distinct_degree(&sqfree) {
        equal_degree(&block, d, &mut rng, &mut factors);
    }
    factors.sort_by(|a, b| a.canonical_cmp(b));
    Factorization { field, n, factors: factors.into_iter().map(|f| (f, mult)).collect() }
}

/// Splits a monic square-free polynomial into (d, product of its degree-d
/// irreducible factors).
fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let field = f.field();
    let p = field.p() as u64;
    let x = FpPoly::monomial(field, 1);
    let mut out = Vec::new();
    let mut rest = f.monic();
    let mut xq = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        xq = xq.pow_mod(p, &rest);
        let g = xq.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            xq = xq.rem(&rest).expect("nonzero modulus");
            out.push((d, g));
        }
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((deg, rest));
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting for odd p.
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        out.push(f.monic());
        return;
    }
    let field = f.field();
    let p = field.p() as u64;
    loop {
        let a = FpPoly::new(field, (0..deg).map(|_| rng.gen_range(0..field.p())).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        // a^{(p^d − 1)/2} = (a^{1 + p + … + p^{d−1}})^{(p−1)/2}
        let mut t = a.clone();
        let mut norm = a.clone();
        for _ in 1..d {
            t = t.pow_mod(p, f);
            norm = norm.mul_mod(&t, f);
        }
        let b = norm.pow_mod((p - 1) / 2, f);
        let g = b.sub(&FpPoly::one(field)).gcd(f);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < deg {
            let h = f.exact_div(&g).expect("gcd divides");
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Every monic divisor ∏ fᵢ^{eᵢ}, 0 ≤ eᵢ ≤ multᵢ, ordered by degree and then
/// by coefficients from the constant term upward.
pub fn monic_divisors(fact: &Factorization) -> Result<Vec<FpPoly>> {
    monic_divisors_capped(fact, DIVISOR_LIMIT)
}

pub fn monic_divisors_capped(fact: &Factorization, limit: usize) -> Result<Vec<FpPoly>> {
    if fact.divisor_count() > limit as u128 {
        return Err(Error::DivisorExplosion { limit });
    }
    let mut divisors = vec![FpPoly::one(fact.field)];
    for (f, m) in &fact.factors {
        let mut next = Vec::with_capacity(divisors.len() * (*m as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..*m {
                acc = acc.mul(f);
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors.sort_by(|a, b| a.canonical_cmp(b));
    Ok(divisors)
}
