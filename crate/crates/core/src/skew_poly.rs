//! The skew polynomial ring R[x;θ] with (a x^i) ∗ (b x^j) = a θ^i(b) x^{i+j}.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fp_poly::FpPoly;
use crate::ring::{Automorphism, PrimeField, RingElement};

/// Default cap on the number of candidates [`lift_divisors`] will test.
pub const LIFT_CAP: u128 = 10_000_000;

/// A polynomial over R = F_p + uF_p, multiplied with the θ-twist.
///
/// Coefficients are ascending with no trailing zeros. Every binary
/// operation checks that both operands carry the same automorphism.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    aut: Automorphism,
    coeffs: Vec<RingElement>,
}

impl SkewPoly {
    pub fn new(aut: &Automorphism, coeffs: Vec<RingElement>) -> Self {
        let p = aut.p();
        let mut coeffs: Vec<RingElement> =
            coeffs.into_iter().map(|c| RingElement::new(c.a % p, c.b % p)).collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { aut: aut.clone(), coeffs }
    }

    /// Builds from `(a, b)` pairs, ascending.
    pub fn from_pairs(aut: &Automorphism, pairs: &[(i64, i64)]) -> Self {
        let f = aut.field();
        Self::new(
            aut,
            pairs.iter().map(|&(a, b)| RingElement::new(f.reduce(a), f.reduce(b))).collect(),
        )
    }

    pub fn zero(aut: &Automorphism) -> Self {
        SkewPoly { aut: aut.clone(), coeffs: Vec::new() }
    }

    pub fn one(aut: &Automorphism) -> Self {
        Self::constant(aut, RingElement::ONE)
    }

    pub fn constant(aut: &Automorphism, c: RingElement) -> Self {
        Self::new(aut, vec![c])
    }

    pub fn monomial(aut: &Automorphism, c: RingElement, k: usize) -> Self {
        let mut v = vec![RingElement::ZERO; k + 1];
        v[k] = c;
        Self::new(aut, v)
    }

    pub fn x_n_minus_one(aut: &Automorphism, n: usize) -> Self {
        Self::from_fp(aut, &FpPoly::x_n_minus_one(*aut.field(), n))
    }

    /// Embeds F_p[x] as a subring.
    pub fn from_fp(aut: &Automorphism, f: &FpPoly) -> Self {
        Self::new(aut, f.coeffs().iter().map(|&a| RingElement::scalar(a)).collect())
    }

    /// a(x) + u·b(x).
    pub fn from_parts(aut: &Automorphism, a: &FpPoly, b: &FpPoly) -> Self {
        let n = a.coeffs().len().max(b.coeffs().len());
        Self::new(aut, (0..n).map(|i| RingElement::new(a.coeff(i), b.coeff(i))).collect())
    }

    /// u·f for f ∈ F_p[x].
    pub fn u_times(aut: &Automorphism, f: &FpPoly) -> Self {
        Self::from_parts(aut, &FpPoly::zero(*aut.field()), f)
    }

    /// Polynomial from a length-n vector, `v[i]` the coefficient of x^i.
    pub fn from_vector(aut: &Automorphism, v: &[RingElement]) -> Self {
        Self::new(aut, v.to_vec())
    }

    #[inline]
    pub fn aut(&self) -> &Automorphism {
        &self.aut
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        self.aut.field()
    }

    #[inline]
    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    #[inline]
    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs.get(i).copied().unwrap_or(RingElement::ZERO)
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    #[inline]
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> RingElement {
        self.coeffs.last().copied().unwrap_or(RingElement::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == RingElement::ONE
    }

    /// The F_p-part a(x) of a(x) + u b(x) (reduction mod u).
    pub fn fp_part(&self) -> FpPoly {
        FpPoly::new(*self.field(), self.coeffs.iter().map(|c| c.a).collect())
    }

    /// The u-part b(x) of a(x) + u b(x).
    pub fn u_part(&self) -> FpPoly {
        FpPoly::new(*self.field(), self.coeffs.iter().map(|c| c.b).collect())
    }

    /// Coefficient vector padded or truncated to length n.
    pub fn to_vector(&self, n: usize) -> Vec<RingElement> {
        (0..n).map(|i| self.coeff(i)).collect()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.aut == other.aut {
            Ok(())
        } else {
            Err(Error::AutomorphismMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field();
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(&self.aut, (0..n).map(|i| f.r_add(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field();
        let n = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(&self.aut, (0..n).map(|i| f.r_sub(self.coeff(i), other.coeff(i))).collect()))
    }

    pub fn neg(&self) -> Self {
        let f = *self.field();
        Self::new(&self.aut, self.coeffs.iter().map(|&c| f.r_neg(c)).collect())
    }

    /// c · self (scalar on the left).
    pub fn scale_left(&self, c: RingElement) -> Self {
        let f = *self.field();
        Self::new(&self.aut, self.coeffs.iter().map(|&a| f.r_mul(c, a)).collect())
    }

    /// x^k ∗ self: shifts exponents and twists every coefficient by θ^k.
    pub fn x_pow_times(&self, k: usize) -> Self {
        let mut v = vec![RingElement::ZERO; k];
        v.extend(self.coeffs.iter().map(|&c| self.aut.apply(k, c)));
        Self::new(&self.aut, v)
    }

    /// The skew product self ∗ other.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.aut));
        }
        let f = self.field();
        let p = f.p() as u64;
        let mut acc = vec![(0u64, 0u64); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let si = self.aut.s_pow(i) as u64;
            for (j, &b) in other.coeffs.iter().enumerate() {
                // a · θ^i(b) = (a.a + u a.b)(b.a + u s^i b.b)
                let tb = si * b.b as u64 % p;
                let slot = &mut acc[i + j];
                slot.0 = (slot.0 + a.a as u64 * b.a as u64) % p;
                slot.1 = (slot.1 + a.a as u64 * tb + a.b as u64 * b.a as u64) % p;
            }
        }
        Ok(Self::new(
            &self.aut,
            acc.into_iter().map(|(a, b)| RingElement::new(a as u32, b as u32)).collect(),
        ))
    }

    /// Right division: `self = q ∗ divisor + r` with `deg r < deg divisor`.
    pub fn right_divide(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let m = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading();
        if !lead.is_unit() {
            return Err(Error::NonUnitLeadingCoefficient);
        }
        let f = *self.field();
        let aut = &self.aut;
        let mut r = self.coeffs.clone();
        if r.len() <= m {
            return Ok((Self::zero(aut), self.clone()));
        }
        let mut q = vec![RingElement::ZERO; r.len() - m];
        for k in (0..q.len()).rev() {
            let top = r[k + m];
            if top.is_zero() {
                continue;
            }
            // q_k = top · θ^k(lead)^{-1}
            let qk = f.r_mul(top, f.r_inv(aut.apply(k, lead))?);
            q[k] = qk;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                r[k + j] = f.r_sub(r[k + j], f.r_mul(qk, aut.apply(k, d)));
            }
        }
        r.truncate(m);
        Ok((Self::new(aut, q), Self::new(aut, r)))
    }

    /// Left division: `self = divisor ∗ q + r` with `deg r < deg divisor`.
    pub fn left_divide(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let m = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.leading();
        if !lead.is_unit() {
            return Err(Error::NonUnitLeadingCoefficient);
        }
        let f = *self.field();
        let aut = &self.aut;
        let lead_inv = f.r_inv(lead)?;
        let mut r = self.coeffs.clone();
        if r.len() <= m {
            return Ok((Self::zero(aut), self.clone()));
        }
        let mut q = vec![RingElement::ZERO; r.len() - m];
        for k in (0..q.len()).rev() {
            let top = r[k + m];
            if top.is_zero() {
                continue;
            }
            // divisor ∗ (c x^k) leads with lead·θ^m(c); solve for c.
            let c = aut.apply_inverse(m, f.r_mul(lead_inv, top));
            q[k] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                r[k + j] = f.r_sub(r[k + j], f.r_mul(d, aut.apply(j, c)));
            }
        }
        r.truncate(m);
        Ok((Self::new(aut, q), Self::new(aut, r)))
    }

    /// The partaker g′ ∈ F_p[x], the unique polynomial with g ∗ u = u·g′:
    /// g′_i = (F_p-part of g_i)·s^i.
    pub fn partaker(&self) -> FpPoly {
        let f = self.field();
        FpPoly::new(
            *f,
            self.coeffs.iter().enumerate().map(|(i, c)| f.mul(c.a, self.aut.s_pow(i))).collect(),
        )
    }

    /// Units of R[x;θ] are exactly a + u h(x) with a ∈ F_p*.
    pub fn is_unit(&self) -> bool {
        self.coeffs.first().is_some_and(|c| c.a != 0) && self.coeffs.iter().skip(1).all(|c| c.a == 0)
    }

    /// Membership in the center F_p[x^e].
    pub fn is_central(&self) -> bool {
        let e = self.aut.order();
        self.coeffs.iter().enumerate().all(|(i, c)| c.b == 0 && (c.a == 0 || i % e == 0))
    }

    /// `Some(k)` with x^n − 1 = k ∗ self when self right-divides x^n − 1.
    pub fn right_divides_xn(&self, n: usize) -> Result<Option<SkewPoly>> {
        let (q, r) = Self::x_n_minus_one(&self.aut, n).right_divide(self)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Reduction modulo x^n − 1 (exponents folded, coefficients unchanged).
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        let f = *self.field();
        let mut v = vec![RingElement::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i % n] = f.r_add(v[i % n], c);
        }
        Self::new(&self.aut, v)
    }
}

/// Inverse of the partaker map on F_p[x]: returns h with partaker(h) = f.
pub fn inverse_partaker(aut: &Automorphism, f: &FpPoly) -> FpPoly {
    let field = aut.field();
    FpPoly::new(
        *field,
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| field.mul(c, field.inv(aut.s_pow(i)).expect("s is a unit")))
            .collect(),
    )
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly[p={}, s={}]({})", self.aut.p(), self.aut.s(), self)
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_polynomial(self))
    }
}

/// All u-lifts of a divisor g₁ of x^n − 1: the polynomials l with
/// deg l < deg g₁ such that g₁ + u·l right-divides x^n − 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftSet {
    pub base: FpPoly,
    pub n: usize,
    /// Valid lifts in the canonical order of [`FpPoly::canonical_cmp`].
    pub lifts: Vec<FpPoly>,
}

impl LiftSet {
    pub fn generators(&self, aut: &Automorphism) -> Vec<SkewPoly> {
        self.lifts.iter().map(|l| SkewPoly::from_parts(aut, &self.base, l)).collect()
    }
}

/// Exhaustive search over the p^{deg g₁} candidate lifts, capped at [`LIFT_CAP`].
pub fn lift_divisors(g1: &FpPoly, n: usize, aut: &Automorphism) -> Result<LiftSet> {
    lift_divisors_capped(g1, n, aut, LIFT_CAP)
}

pub fn lift_divisors_capped(g1: &FpPoly, n: usize, aut: &Automorphism, cap: u128) -> Result<LiftSet> {
    let field = *aut.field();
    if g1.field() != field {
        return Err(Error::AutomorphismMismatch);
    }
    let target = FpPoly::x_n_minus_one(field, n);
    if !g1.is_monic() || !g1.divides(&target) {
        return Err(Error::NotADivisor(g1.to_string()));
    }
    let deg = g1.degree().expect("monic");
    let p = field.p() as u128;
    let needed = p.checked_pow(deg as u32).unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::LiftBudgetExceeded { needed, cap });
    }
    let xn = SkewPoly::x_n_minus_one(aut, n);
    let mut lifts: Vec<FpPoly> = (0..needed as u64)
        .into_par_iter()
        .filter_map(|idx| {
            let l = index_to_poly(field, idx, deg);
            let g = SkewPoly::from_parts(aut, g1, &l);
            let (_, r) = xn.right_divide(&g).expect("monic divisor");
            r.is_zero().then_some(l)
        })
        .collect();
    lifts.sort_by(|a, b| a.canonical_cmp(b));
    Ok(LiftSet { base: g1.clone(), n, lifts })
}

/// Base-p digits of `idx` as an F_p polynomial of degree < len.
pub(crate) fn index_to_poly(field: PrimeField, mut idx: u64, len: usize) -> FpPoly {
    let p = field.p() as u64;
    let mut c = Vec::with_capacity(len);
    for _ in 0..len {
        c.push((idx % p) as u32);
        idx /= p;
    }
    FpPoly::new(field, c)
}
