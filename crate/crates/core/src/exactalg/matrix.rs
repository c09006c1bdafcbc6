use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use super::MultiPoly;
use crate::error::{HessexError, Result};

/// Dense matrix of polynomials. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { rows, cols, entries: vec![MultiPoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> PolyMatrix {
        PolyMatrix::from_fn(n, n, |r, c| if r == c { MultiPoly::one() } else { MultiPoly::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> MultiPoly) -> PolyMatrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        PolyMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<PolyMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(HessexError::DimensionMismatch("ragged rows".into()));
        }
        Ok(PolyMatrix { rows: nrows, cols: ncols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &MultiPoly {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: MultiPoly) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMatrix::identity(self.rows) && self.rows == self.cols
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(HessexError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(PolyMatrix::from_fn(self.rows, other.cols, |r, c| {
            let mut acc = MultiPoly::zero();
            for k in 0..self.cols {
                let (a, b) = (self.get(r, k), other.get(k, c));
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.add(&a.mul(b));
                }
            }
            acc
        }))
    }

    pub fn determinant(&self) -> Result<MultiPoly> {
        self.require_square()?;
        let mut minors = Minors::new(self);
        let full = (1u64 << self.rows) - 1;
        Ok(minors.get(full, full))
    }

    /// Inverse of a matrix whose determinant is a nonzero constant, via the adjugate.
    pub fn unimodular_inverse(&self) -> Result<PolyMatrix> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(PolyMatrix::zeros(0, 0));
        }
        let mut minors = Minors::new(self);
        let full = (1u64 << n) - 1;
        let det = minors.get(full, full);
        let det = match det.constant_value() {
            Some(d) if !d.is_zero() => d,
            Some(_) => return Err(HessexError::NotUnimodular("determinant is zero".into())),
            None => return Err(HessexError::NotUnimodular(format!("determinant {det} is not constant"))),
        };
        let inv_det = det.recip();
        let mut inverse = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = minors.get(full & !(1 << i), full & !(1 << j));
                let cofactor = if (i + j) % 2 == 0 { minor } else { minor.neg() };
                inverse.set(j, i, cofactor.scale(&inv_det));
            }
        }
        Ok(inverse)
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(HessexError::DimensionMismatch(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        if self.rows > 63 {
            return Err(HessexError::DimensionMismatch("matrix too large".into()));
        }
        Ok(())
    }
}

/// Memoised Laplace expansion: minors keyed by (row mask, column mask).
struct Minors<'a> {
    m: &'a PolyMatrix,
    memo: HashMap<(u64, u64), MultiPoly>,
}

impl<'a> Minors<'a> {
    fn new(m: &'a PolyMatrix) -> Self {
        Minors { m, memo: HashMap::new() }
    }

    fn get(&mut self, rows: u64, cols: u64) -> MultiPoly {
        if rows == 0 {
            return MultiPoly::one();
        }
        if let Some(v) = self.memo.get(&(rows, cols)) {
            return v.clone();
        }
        let r = rows.trailing_zeros() as usize;
        let rest = rows & !(1 << r);
        let mut acc = MultiPoly::zero();
        let mut sign_pos = 0;
        for c in 0..self.m.cols {
            if cols & (1 << c) == 0 {
                continue;
            }
            let a = self.m.get(r, c);
            if !a.is_zero() {
                let sub = self.get(rest, cols & !(1 << c));
                if !sub.is_zero() {
                    let term = a.mul(&sub);
                    acc = if sign_pos % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
                }
            }
            sign_pos += 1;
        }
        self.memo.insert((rows, cols), acc.clone());
        acc
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| MultiPoly::parse(s).unwrap()).collect()).collect())
            .unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(&[&["x", "1"], &["y^2", "t"]]);
        assert_eq!(a.mul(&PolyMatrix::identity(2)).unwrap(), a);
        assert!(PolyMatrix::identity(3).unimodular_inverse().unwrap().is_identity());
    }

    #[test]
    fn permutation_matrices_compose() {
        let p = m(&[&["0", "1", "0"], &["0", "0", "1"], &["1", "0", "0"]]);
        let p2 = m(&[&["0", "0", "1"], &["1", "0", "0"], &["0", "1", "0"]]);
        assert_eq!(p.mul(&p).unwrap(), p2);
        assert!(p.mul(&p2).unwrap().is_identity());
    }

    #[test]
    fn dimension_checks() {
        let a = PolyMatrix::zeros(2, 3);
        assert!(matches!(a.mul(&a), Err(HessexError::DimensionMismatch(_))));
        assert!(matches!(a.unimodular_inverse(), Err(HessexError::DimensionMismatch(_))));
    }

    #[test]
    fn rejects_non_unimodular() {
        let a = m(&[&["x", "1"], &["0", "1"]]);
        assert!(matches!(a.unimodular_inverse(), Err(HessexError::NotUnimodular(_))));
        let z = m(&[&["1", "1"], &["1", "1"]]);
        assert!(matches!(z.unimodular_inverse(), Err(HessexError::NotUnimodular(_))));
    }

    #[test]
    fn three_by_three_antidiagonal_chart() {
        let a = m(&[&["x_{1,1}", "x_{1,2}", "1"], &["x_{2,1}", "1", "0"], &["1", "0", "0"]]);
        let inv = a.unimodular_inverse().unwrap();
        let expected = m(&[
            &["0", "0", "1"],
            &["0", "1", "-x_{2,1}"],
            &["1", "-x_{1,2}", "-x_{1,1} + x_{1,2}*x_{2,1}"],
        ]);
        assert_eq!(inv, expected);
        assert!(a.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn determinant_with_scalar_unit() {
        let a = m(&[&["2", "x"], &["0", "1/2"]]);
        assert_eq!(a.determinant().unwrap(), MultiPoly::one());
        let inv = a.unimodular_inverse().unwrap();
        assert!(inv.mul(&a).unwrap().is_identity());
        let b = m(&[&["0", "3"], &["1", "x"]]);
        assert!(b.mul(&b.unimodular_inverse().unwrap()).unwrap().is_identity());
    }
}
