//! Dense linear algebra over F_p: incremental reduced row echelon form,
//! null spaces and systematic parity-check matrices.

use crate::ring::PrimeField;

/// A subspace of F_p^width kept in reduced row echelon form. The pivot of
/// a row is its first nonzero coordinate.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Echelon { field, width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows(field: PrimeField, width: usize, rows: &[Vec<u32>]) -> Self {
        let mut e = Self::new(field, width);
        for r in rows {
            e.insert(r.clone());
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Rows ordered by pivot position.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis in place.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c == 0 {
                continue;
            }
            for (x, &r) in v.iter_mut().zip(row).skip(piv) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span. Returns false when it was already contained.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        assert_eq!(v.len(), self.width);
        let f = self.field;
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[piv]).expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c == 0 {
                continue;
            }
            for (x, &r) in row.iter_mut().zip(&v).skip(piv) {
                *x = f.sub(*x, f.mul(c, r));
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        true
    }
}

pub fn rank(field: PrimeField, width: usize, rows: &[Vec<u32>]) -> usize {
    Echelon::from_rows(field, width, rows).rank()
}

/// Basis of { y : row · y = 0 for every row }.
pub fn nullspace(field: PrimeField, width: usize, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let e = Echelon::from_rows(field, width, rows);
    let pivots = e.pivots();
    let mut out = Vec::new();
    for free in (0..width).filter(|c| !pivots.contains(c)) {
        let mut y = vec![0u32; width];
        y[free] = 1;
        for (row, &piv) in e.rows().iter().zip(pivots) {
            y[piv] = field.neg(row[free]);
        }
        out.push(y);
    }
    out
}

/// A parity-check matrix (as rows) for the code spanned by `rows`.
pub fn parity_check(field: PrimeField, width: usize, rows: &[Vec<u32>]) -> Vec<Vec<u32>> {
    nullspace(field, width, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn echelon_and_nullspace() {
        let f = PrimeField::new(3).unwrap();
        let rows = vec![vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 1, 1, 0]];
        let e = Echelon::from_rows(f, 4, &rows);
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[1, 0, 1, 1]));
        let h = nullspace(f, 4, &rows);
        assert_eq!(h.len(), 2);
        for r in &rows {
            for y in &h {
                let dot = r.iter().zip(y).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(dot, 0);
            }
        }
        assert_eq!(rank(f, 4, &h), 2);
    }
}
