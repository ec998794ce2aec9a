//! Small dense exact linear algebra over Q(√2,√3): Gauss-Jordan elimination
//! with first-nonzero pivoting. No tolerances exist anywhere.

use crate::field::FieldElement;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![FieldElement::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = FieldElement::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &FieldElement {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut FieldElement {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    *out.at_mut(i, j) += &prod;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Matrix {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElement::is_zero)
    }

    pub fn trace(&self) -> FieldElement {
        assert_eq!(self.rows, self.cols);
        let mut t = FieldElement::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }
}

/// Reduced row echelon form computed in place. Returns the pivot columns in
/// order; the rank is their count.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols() {
        let Some(pivot_row) = (row..m.rows()).find(|&r| !m.at(r, col).is_zero()) else {
            continue;
        };
        // swap rows
        if pivot_row != row {
            for c in 0..m.cols() {
                let tmp = m.at(pivot_row, c).clone();
                *m.at_mut(pivot_row, c) = m.at(row, c).clone();
                *m.at_mut(row, c) = tmp;
            }
        }
        let inv = m.at(row, col).inv().expect("pivot is nonzero");
        for c in 0..m.cols() {
            *m.at_mut(row, c) = &*m.at(row, c) * &inv;
        }
        for r in 0..m.rows() {
            if r == row || m.at(r, col).is_zero() {
                continue;
            }
            let factor = m.at(r, col).clone();
            for c in 0..m.cols() {
                let delta = &factor * m.at(row, c);
                *m.at_mut(r, c) -= &delta;
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.rows() {
            break;
        }
    }
    pivots
}

/// Residue of `v` modulo the row space of an RREF matrix: pivot coordinates
/// are eliminated, leaving support only on the free columns.
pub fn reduce_mod_rowspace(rref_m: &Matrix, pivots: &[usize], v: &[FieldElement]) -> Vec<FieldElement> {
    assert_eq!(v.len(), rref_m.cols());
    let mut out = v.to_vec();
    for (row, &col) in pivots.iter().enumerate() {
        if out[col].is_zero() {
            continue;
        }
        let factor = out[col].clone();
        for c in 0..rref_m.cols() {
            let delta = &factor * rref_m.at(row, c);
            out[c] -= &delta;
        }
    }
    out
}

/// A basis of the right nullspace of `m`.
pub fn nullspace(m: &Matrix) -> Vec<Vec<FieldElement>> {
    let mut e = m.clone();
    let pivots = rref(&mut e);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![FieldElement::zero(); m.cols()];
        v[f] = FieldElement::one();
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = -e.at(row, f);
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(n: i64, d: i64) -> FieldElement {
        FieldElement::of(n, d)
    }

    #[test]
    fn rref_and_rank() {
        let mut m = Matrix::from_rows(vec![
            vec![fe(1, 1), fe(2, 1), fe(3, 1)],
            vec![fe(2, 1), fe(4, 1), fe(6, 1)],
            vec![fe(0, 1), fe(1, 1), fe(1, 1)],
        ]);
        let pivots = rref(&mut m);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn nullspace_of_singular_matrix() {
        let m = Matrix::from_rows(vec![
            vec![fe(1, 1), FieldElement::of_sqrt2(1, 1), fe(0, 1)],
            vec![fe(0, 1), fe(0, 1), fe(1, 1)],
        ]);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 1);
        for v in &ns {
            // check m v = 0
            for r in 0..m.rows() {
                let mut acc = FieldElement::zero();
                for c in 0..m.cols() {
                    acc += &(m.at(r, c) * &v[c]);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn reduction_kills_rowspace_members() {
        let mut m = Matrix::from_rows(vec![
            vec![fe(1, 1), fe(1, 1), fe(0, 1)],
            vec![fe(0, 1), fe(1, 1), fe(1, 1)],
        ]);
        let pivots = rref(&mut m);
        let member = vec![fe(1, 1), fe(2, 1), fe(1, 1)];
        assert!(reduce_mod_rowspace(&m, &pivots, &member)
            .iter()
            .all(FieldElement::is_zero));
        let outside = vec![fe(1, 1), fe(0, 1), fe(0, 1)];
        assert!(!reduce_mod_rowspace(&m, &pivots, &outside)
            .iter()
            .all(FieldElement::is_zero));
    }
}
