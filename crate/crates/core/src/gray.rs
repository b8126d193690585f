//! Gray map φ_ℓ : R → F_p^ℓ, Gray images of codes and minimum distance.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::codes::SkewCyclicCode;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, Echelon};
use crate::ring::{PrimeField, RingElement};

/// Default cap on p^K for exhaustive enumeration.
pub const EXHAUSTIVE_BUDGET: u128 = 20_000_000;

/// Default cap on enumerated support prefixes per weight in bounded search.
pub const COMBINATORIAL_BUDGET: u128 = 2_000_000_000;

fn check_ell(field: &PrimeField, ell: usize) -> Result<()> {
    if ell < 2 || ell > field.p() as usize {
        return Err(Error::EllOutOfRange { ell, p: field.p() });
    }
    Ok(())
}

/// φ_ℓ(a + ub) = (b, b + a, b + 2a, …, b + (ℓ−1)a).
pub fn gray_map_elem(field: &PrimeField, ell: usize, c: RingElement) -> Result<Vec<u32>> {
    check_ell(field, ell)?;
    let mut out = Vec::with_capacity(ell);
    let mut x = c.b % field.p();
    for _ in 0..ell {
        out.push(x);
        x = field.add(x, c.a);
    }
    Ok(out)
}

/// Hamming weight of φ_ℓ(c).
pub fn gray_weight(field: &PrimeField, ell: usize, c: RingElement) -> Result<usize> {
    Ok(gray_map_elem(field, ell, c)?.iter().filter(|&&x| x != 0).count())
}

/// Coordinatewise image of a word, length ℓ·n.
pub fn gray_map_word(field: &PrimeField, ell: usize, word: &[RingElement]) -> Result<Vec<u32>> {
    let mut out = Vec::with_capacity(ell * word.len());
    for &c in word {
        out.extend(gray_map_elem(field, ell, c)?);
    }
    Ok(out)
}

/// Outcome of [`GrayImageCode::min_weight_bounded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundedWeight {
    /// d is exact; `witness` is a codeword of that weight.
    Exact { d: usize, witness: Vec<u32> },
    /// No nonzero codeword of weight ≤ w_max exists.
    Exceeds(usize),
}

/// A linear code over F_p given by independent generator rows.
#[derive(Debug, Clone)]
pub struct GrayImageCode {
    field: PrimeField,
    ell: usize,
    rows: Vec<Vec<u32>>,
    length: usize,
}

impl GrayImageCode {
    /// Image of an F_p-basis of `code` under φ_ℓ.
    pub fn from_code(code: &SkewCyclicCode, ell: usize) -> Result<Self> {
        let field = *code.field();
        check_ell(&field, ell)?;
        let rows = code
            .fp_basis()
            .iter()
            .map(|w| gray_map_word(&field, ell, w))
            .collect::<Result<Vec<_>>>()?;
        let mut image = Self::from_rows(field, ell * code.n(), rows)?;
        image.ell = ell;
        Ok(image)
    }

    /// Wraps generator rows; they must be F_p-independent.
    pub fn from_rows(field: PrimeField, length: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        for r in &rows {
            if r.len() != length {
                return Err(Error::LengthMismatch { expected: length, got: r.len() });
            }
        }
        let rows: Vec<Vec<u32>> = rows.into_iter().map(|r| r.into_iter().map(|x| x % field.p()).collect()).collect();
        let rank = Echelon::from_rows(field, length, &rows).rank();
        if rank != rows.len() {
            return Err(Error::Record(format!("generator rows are dependent: rank {rank} of {}", rows.len())));
        }
        Ok(GrayImageCode { field, ell: 0, rows, length })
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    /// ℓ used to build the image, or 0 for codes built from raw rows.
    pub fn ell(&self) -> usize {
        self.ell
    }

    /// N
    pub fn length(&self) -> usize {
        self.length
    }

    /// K
    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.length && Echelon::from_rows(self.field, self.length, &self.rows).contains(v)
    }

    pub fn min_distance_exhaustive(&self) -> Result<usize> {
        self.min_distance_exhaustive_with(EXHAUSTIVE_BUDGET)
    }

    /// Minimum weight over all p^K − 1 nonzero codewords. Messages are
    /// walked in modular Gray-code order, so each step adds one row.
    pub fn min_distance_exhaustive_with(&self, budget: u128) -> Result<usize> {
        let k = self.dimension();
        if k == 0 {
            return Err(Error::EmptyCode);
        }
        let p = self.field.p() as u64;
        let needed = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
        if needed > budget {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        // Fix the top digits per task; the bottom `low` digits are walked.
        let mut top = 0;
        while top < k && p.pow(top as u32) < 256 {
            top += 1;
        }
        let low = k - top;
        let best = AtomicUsize::new(self.length);
        (0..p.pow(top as u32)).into_par_iter().for_each(|prefix| {
            let mut word = vec![0u32; self.length];
            let mut digits = prefix;
            for j in 0..top {
                let d = (digits % p) as u32;
                digits /= p;
                if d != 0 {
                    self.add_row(&mut word, low + j, d);
                }
            }
            let mut local = self.length;
            if prefix != 0 {
                local = weight(&word);
            }
            let steps = p.pow(low as u32);
            for t in 1..steps {
                let j = t.trailing_zeros_base(p);
                self.add_row(&mut word, j, 1);
                let w = weight(&word);
                if w < local {
                    local = w;
                }
            }
            best.fetch_min(local, Ordering::Relaxed);
        });
        Ok(best.into_inner())
    }

    fn add_row(&self, word: &mut [u32], row: usize, times: u32) {
        let f = self.field;
        for (x, &r) in word.iter_mut().zip(&self.rows[row]) {
            *x = f.add(*x, f.mul(r, times));
        }
    }

    pub fn min_weight_bounded(&self, w_max: usize) -> Result<BoundedWeight> {
        self.min_weight_bounded_with(w_max, COMBINATORIAL_BUDGET)
    }

    /// Searches weights 1..=w_max for a nonzero codeword via the
    /// parity-check matrix. Candidates are enumerated up to scalars (first
    /// nonzero entry 1); the last coordinate is found by table lookup.
    pub fn min_weight_bounded_with(&self, w_max: usize, budget: u128) -> Result<BoundedWeight> {
        if self.dimension() == 0 {
            return Err(Error::EmptyCode);
        }
        let f = self.field;
        let n = self.length;
        let h = nullspace(f, n, &self.rows);
        let columns: Vec<Vec<u32>> = (0..n).map(|i| h.iter().map(|row| row[i]).collect()).collect();
        // normalized column -> [(index, scale)] with column = scale · normalized
        let mut table: HashMap<Vec<u32>, Vec<(usize, u32)>> = HashMap::new();
        for (i, col) in columns.iter().enumerate() {
            let (norm, scale) = normalize(&f, col);
            table.entry(norm).or_default().push((i, scale));
        }
        let search = Search { field: f, n, columns: &columns, table: &table };
        for w in 1..=w_max {
            let prefixes = prefix_count(n, w, f.p());
            if prefixes > budget {
                return Err(Error::CombinatorialBudgetExceeded { budget });
            }
            if let Some(witness) = search.weight(w) {
                return Ok(BoundedWeight::Exact { d: w, witness });
            }
        }
        Ok(BoundedWeight::Exceeds(w_max))
    }
}

fn weight(word: &[u32]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

trait BaseValuation {
    fn trailing_zeros_base(self, p: u64) -> usize;
}

impl BaseValuation for u64 {
    /// Number of trailing zero digits of `self` in base p.
    fn trailing_zeros_base(mut self, p: u64) -> usize {
        let mut k = 0;
        while self.is_multiple_of(p) {
            self /= p;
            k += 1;
        }
        k
    }
}

/// Scales `v` so its first nonzero entry is 1; returns (normalized, scale).
fn normalize(f: &PrimeField, v: &[u32]) -> (Vec<u32>, u32) {
    match v.iter().find(|&&x| x != 0) {
        None => (v.to_vec(), 1),
        Some(&lead) => {
            let inv = f.inv(lead).expect("nonzero");
            (v.iter().map(|&x| f.mul(x, inv)).collect(), lead)
        }
    }
}

/// Number of (w−1)-coordinate prefixes, up to scalars: C(n, w−1)·(p−1)^{w−2}.
fn prefix_count(n: usize, w: usize, p: u32) -> u128 {
    if w == 1 {
        return 1;
    }
    let m = w - 1;
    let mut c: u128 = 1;
    for i in 0..m {
        c = c.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    c.saturating_mul((p as u128 - 1).saturating_pow(m as u32 - 1))
}

struct Search<'a> {
    field: PrimeField,
    n: usize,
    columns: &'a [Vec<u32>],
    table: &'a HashMap<Vec<u32>, Vec<(usize, u32)>>,
}

impl Search<'_> {
    /// A codeword of weight exactly `w`, assuming none of smaller weight exists.
    fn weight(&self, w: usize) -> Option<Vec<u32>> {
        let rows = self.columns.first().map_or(0, Vec::len);
        if w == 1 {
            return self.complete(&vec![0; rows], &[], 0);
        }
        (0..self.n).into_par_iter().find_map_first(|first| {
            let mut chosen = vec![(first, 1u32)];
            let partial = self.columns[first].clone();
            self.extend(&mut chosen, partial, w - 1)
        })
    }

    fn extend(&self, chosen: &mut Vec<(usize, u32)>, partial: Vec<u32>, prefix_len: usize) -> Option<Vec<u32>> {
        let last = chosen.last().expect("nonempty").0;
        if chosen.len() == prefix_len {
            return self.complete(&partial, chosen, last + 1);
        }
        let f = self.field;
        for i in last + 1..self.n {
            for c in 1..f.p() {
                let next: Vec<u32> =
                    partial.iter().zip(&self.columns[i]).map(|(&x, &y)| f.add(x, f.mul(c, y))).collect();
                chosen.push((i, c));
                let found = self.extend(chosen, next, prefix_len);
                chosen.pop();
                if found.is_some() {
                    return found;
                }
            }
        }
        None
    }

    /// Finds a column index ≥ `from` and a scalar c ≠ 0 with partial + c·h = 0.
    fn complete(&self, partial: &[u32], chosen: &[(usize, u32)], from: usize) -> Option<Vec<u32>> {
        let f = self.field;
        let target: Vec<u32> = partial.iter().map(|&x| f.neg(x)).collect();
        let (norm, scale) = normalize(&f, &target);
        let zero_target = target.iter().all(|&x| x == 0);
        let hits = self.table.get(&norm)?;
        let &(idx, col_scale) = hits.iter().find(|&&(i, _)| i >= from)?;
        // target = scale·norm and h_idx = col_scale·norm, so c = scale / col_scale
        let c = if zero_target {
            // only a zero column can complete a zero partial sum; w = 1 here
            1
        } else {
            f.mul(scale, f.inv(col_scale).expect("nonzero"))
        };
        if zero_target && !self.columns[idx].iter().all(|&x| x == 0) {
            return None;
        }
        let mut word = vec![0u32; self.n];
        for &(i, v) in chosen {
            word[i] = v;
        }
        word[idx] = c;
        Some(word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{GeneratorForm, SkewCyclicCode};
    use crate::ring::Automorphism;
    use crate::text::parse_polynomial;

    fn field(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Piecewise weight: 0 for c = 0, ℓ−1 when a ≠ 0 and −b/a ∈ {0, …, ℓ−1}, else ℓ.
    fn piecewise_weight(f: &PrimeField, ell: usize, c: RingElement) -> usize {
        if c.is_zero() {
            return 0;
        }
        if c.a != 0 {
            let lambda = f.mul(f.neg(c.b), f.inv(c.a).unwrap());
            if (lambda as usize) < ell {
                return ell - 1;
            }
        }
        ell
    }

    #[test]
    fn map_examples() {
        assert_eq!(gray_map_elem(&field(3), 2, RingElement::new(1, 2)).unwrap(), vec![2, 0]);
        assert_eq!(gray_map_elem(&field(5), 3, RingElement::U).unwrap(), vec![1, 1, 1]);
        assert_eq!(gray_map_elem(&field(3), 2, RingElement::ZERO).unwrap(), vec![0, 0]);
        assert_eq!(gray_weight(&field(3), 2, RingElement::ZERO).unwrap(), 0);
        assert_eq!(gray_weight(&field(3), 2, RingElement::ONE).unwrap(), 1);
        for ell in 2..=5 {
            assert_eq!(gray_weight(&field(5), ell, RingElement::U).unwrap(), ell);
        }
        assert_eq!(gray_map_elem(&field(3), 4, RingElement::ONE), Err(Error::EllOutOfRange { ell: 4, p: 3 }));
        assert!(gray_map_elem(&field(3), 1, RingElement::ONE).is_err());
    }

    #[test]
    fn isometry_linearity_injectivity() {
        for p in [3, 5, 7] {
            let f = field(p);
            for ell in 2..=p as usize {
                for c in f.elements() {
                    let img = gray_map_elem(&f, ell, c).unwrap();
                    assert_eq!(gray_weight(&f, ell, c).unwrap(), piecewise_weight(&f, ell, c));
                    assert_eq!(img.iter().all(|&x| x == 0), c.is_zero());
                    for gamma in 0..p {
                        let scaled = gray_map_elem(&f, ell, f.r_scale(gamma, c)).unwrap();
                        assert_eq!(scaled, img.iter().map(|&x| f.mul(gamma, x)).collect::<Vec<_>>());
                    }
                    for d in f.elements() {
                        let sum = gray_map_elem(&f, ell, f.r_add(c, d)).unwrap();
                        let other = gray_map_elem(&f, ell, d).unwrap();
                        let want: Vec<u32> = img.iter().zip(&other).map(|(&x, &y)| f.add(x, y)).collect();
                        assert_eq!(sum, want);
                    }
                }
            }
        }
    }

    fn brute_min_weight(code: &GrayImageCode) -> usize {
        let f = *code.field();
        let k = code.dimension();
        let p = f.p() as u64;
        let mut best = usize::MAX;
        for m in 1..p.pow(k as u32) {
            let mut word = vec![0u32; code.length()];
            let mut t = m;
            for row in code.rows() {
                let d = (t % p) as u32;
                t /= p;
                for (x, &r) in word.iter_mut().zip(row) {
                    *x = f.add(*x, f.mul(d, r));
                }
            }
            best = best.min(weight(&word));
        }
        best
    }

    #[test]
    fn engines_agree_with_brute_force() {
        let f = field(3);
        let code = GrayImageCode::from_rows(f, 4, vec![vec![2, 0, 0, 0]]).unwrap();
        assert_eq!(code.min_distance_exhaustive().unwrap(), 1);
        assert_eq!(code.min_weight_bounded(3).unwrap(), BoundedWeight::Exact { d: 1, witness: vec![1, 0, 0, 0] });

        let a = Automorphism::new(3, 2).unwrap();
        let g = parse_polynomial("x^4 + 2*x^3 + 2*u*x^2 + x + (2+u)", &a).unwrap();
        let c = SkewCyclicCode::construct(&a, 6, GeneratorForm::Monic { g }).unwrap();
        let img = GrayImageCode::from_code(&c, 2).unwrap();
        assert_eq!((img.length(), img.dimension()), (12, 4));
        assert_eq!(img.min_distance_exhaustive().unwrap(), 6);
        assert_eq!(brute_min_weight(&img), 6);
        assert_eq!(img.min_weight_bounded(2).unwrap(), BoundedWeight::Exceeds(2));
        match img.min_weight_bounded(6).unwrap() {
            BoundedWeight::Exact { d, witness } => {
                assert_eq!(d, 6);
                assert_eq!(weight(&witness), 6);
                assert!(img.contains(&witness));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(img.min_distance_exhaustive_with(10), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(img.min_weight_bounded_with(6, 10), Err(Error::CombinatorialBudgetExceeded { .. })));
    }

    #[test]
    fn random_codes_cross_check() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let p = [3u32, 5][rng.gen_range(0..2)];
            let f = field(p);
            let n = rng.gen_range(2..9);
            let k = rng.gen_range(1..=n.min(5));
            let mut e = Echelon::new(f, n);
            let mut rows = Vec::new();
            while rows.len() < k {
                let r: Vec<u32> = (0..n).map(|_| rng.gen_range(0..p)).collect();
                if e.insert(r.clone()) {
                    rows.push(r);
                }
            }
            let code = GrayImageCode::from_rows(f, n, rows).unwrap();
            let d = brute_min_weight(&code);
            assert_eq!(code.min_distance_exhaustive().unwrap(), d);
            match code.min_weight_bounded(n).unwrap() {
                BoundedWeight::Exact { d: b, witness } => {
                    assert_eq!(b, d);
                    assert!(code.contains(&witness));
                }
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn zero_code_and_dependent_rows() {
        let a = Automorphism::new(3, 2).unwrap();
        let zero = SkewCyclicCode::construct(
            &a,
            4,
            GeneratorForm::NonMonic { abar: crate::fp_poly::FpPoly::x_n_minus_one(*a.field(), 4) },
        )
        .unwrap();
        let img = GrayImageCode::from_code(&zero, 2).unwrap();
        assert_eq!(img.dimension(), 0);
        assert_eq!(img.min_distance_exhaustive(), Err(Error::EmptyCode));
        assert!(GrayImageCode::from_rows(field(3), 2, vec![vec![1, 1], vec![2, 2]]).is_err());
    }

    #[test]
    fn base_valuation() {
        assert_eq!(9u64.trailing_zeros_base(3), 2);
        assert_eq!(10u64.trailing_zeros_base(3), 0);
        assert_eq!(prefix_count(36, 4, 5), 7140 * 16);
    }
}
