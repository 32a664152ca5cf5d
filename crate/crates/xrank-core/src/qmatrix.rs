//! Exact rational matrices.
//!
//! Rank and kernels via fraction-free (Bareiss-style) forward elimination on
//! denominator-cleared integer rows, followed by exact back-substitution.
//! Kernel bases come out reduced-echelon normalized: one basis vector per
//! free column, with a 1 in that column and zeros in the other free columns,
//! so bases are canonical and reproducible.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::dpoly::ExactRing;
use crate::rat::{clear_denominators, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>, // row-major
}

impl QMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows_in: &[Vec<Rational>]) -> Self {
        let rows = rows_in.len();
        let cols = rows_in.first().map_or(0, |r| r.len());
        assert!(rows_in.iter().all(|r| r.len() == cols), "ragged matrix");
        let mut data = Vec::with_capacity(rows * cols);
        for r in rows_in {
            data.extend(r.iter().cloned());
        }
        QMatrix { rows, cols, data }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> Vec<Rational> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::new(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::new(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.at(k, j);
                    *out.at_mut(i, j) += &add;
                }
            }
        }
        out
    }

    /// Appends `other`'s rows below `self`'s.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        QMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form and the pivot columns. The forward pass runs
    /// fraction-free on integer-scaled rows; normalization to RREF happens in
    /// a final exact pass.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        // forward, fraction-free
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| clear_denominators(&self.row(r)))
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut prev = BigInt::from(1);
        let mut pr = 0usize;
        for pc in 0..self.cols {
            // find pivot in column pc at/below row pr
            let Some(pivot_row) = (pr..self.rows).find(|&r| !Zero::is_zero(&m[r][pc])) else {
                continue;
            };
            m.swap(pr, pivot_row);
            for r in pr + 1..self.rows {
                for c in pc + 1..self.cols {
                    let num = &m[r][c] * &m[pr][pc] - &m[r][pc] * &m[pr][c];
                    m[r][c] = num.exact_div(&prev);
                }
                m[r][pc] = <BigInt as Zero>::zero();
            }
            prev = m[pr][pc].clone();
            pivots.push((pr, pc));
            pr += 1;
            if pr == self.rows {
                break;
            }
        }
        // back-substitute exactly over Q
        let mut q: Vec<Vec<Rational>> = m
            .into_iter()
            .map(|row| row.into_iter().map(Rational::from_bigint).collect())
            .collect();
        for &(r, c) in pivots.iter().rev() {
            let inv = q[r][c].recip().expect("pivot nonzero");
            for cc in 0..self.cols {
                q[r][cc] = &q[r][cc] * &inv;
            }
            for rr in 0..r {
                let factor = q[rr][c].clone();
                if factor.is_zero() {
                    continue;
                }
                for cc in 0..self.cols {
                    let sub = &factor * &q[r][cc];
                    q[rr][cc] = &q[rr][cc] - &sub;
                }
            }
        }
        (
            QMatrix::from_rows(&q),
            pivots.iter().map(|&(_, c)| c).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// `(rank, kernel basis)`; basis vectors are reduced-echelon normalized.
    pub fn kernel(&self) -> (usize, Vec<Vec<Rational>>) {
        let (r, pivots) = self.rref();
        let rank = pivots.len();
        let mut basis = Vec::new();
        let piv_set: Vec<usize> = pivots.clone();
        for free in 0..self.cols {
            if piv_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &pc) in piv_set.iter().enumerate() {
                v[pc] = -r.at(i, free);
            }
            basis.push(v);
        }
        (rank, basis)
    }

    /// Determinant (square only) by fraction-free elimination.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        // scale rows to integers, tracking the scalar
        let mut scale = Rational::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for r in 0..n {
            let row = self.row(r);
            if row.iter().all(|x| x.is_zero()) {
                return Rational::zero();
            }
            let ints = clear_denominators(&row);
            // row = (ints) * (row[j0] / ints[j0]) for the first nonzero j0
            let j0 = row.iter().position(|x| !x.is_zero()).unwrap();
            let factor = &row[j0] / &Rational::from_bigint(ints[j0].clone());
            scale = &scale * &factor;
            m.push(ints);
        }
        let mut sign = false;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if Zero::is_zero(&m[k][k]) {
                let Some(r) = (k + 1..n).find(|&r| !Zero::is_zero(&m[r][k])) else {
                    return Rational::zero();
                };
                m.swap(k, r);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num.exact_div(&prev);
                }
                m[i][k] = <BigInt as Zero>::zero();
            }
            prev = m[k][k].clone();
        }
        let d = Rational::from_bigint(m[n - 1][n - 1].clone());
        let d = &d * &scale;
        if sign {
            -d
        } else {
            d
        }
    }

    /// Solves `self * x = b` (any one solution); `None` if inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let mut aug_rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = self.row(r);
            row.push(b[r].clone());
            aug_rows.push(row);
        }
        let aug = QMatrix::from_rows(&aug_rows);
        let (rr, pivots) = aug.rref();
        // inconsistent iff a pivot lands in the last column
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = rr.at(i, self.cols).clone();
        }
        Some(x)
    }
}

/// Is `v` in the row span of `basis`?
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if basis.is_empty() {
        return v.iter().all(|c| c.is_zero());
    }
    let m = QMatrix::from_rows(basis);
    let mut with = basis.to_vec();
    with.push(v.to_vec());
    m.rank() == QMatrix::from_rows(&with).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn rank_and_kernel_shape() {
        // rows: (1,2,3), (2,4,6), (0,1,1) -> rank 2, kernel dim 1
        let m = QMatrix::from_rows(&[
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ]);
        let (rank, ker) = m.kernel();
        assert_eq!(rank, 2);
        assert_eq!(ker.len(), 1);
        // kernel vector is echelon-normalized: free column gets 1
        let v = &ker[0];
        assert_eq!(v[2], Rational::one());
        // check M v = 0
        for r in 0..3 {
            let dot = (0..3).fold(Rational::zero(), |acc, c| &acc + &(m.at(r, c) * &v[c]));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn rref_is_canonical() {
        let m = QMatrix::from_rows(&[vec![q(0), q(2), q(4)], vec![q(1), q(1), q(1)]]);
        let (r, pivots) = m.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(r.row(0), vec![q(1), q(0), q(-1)]);
        assert_eq!(r.row(1), vec![q(0), q(1), q(2)]);
    }

    #[test]
    fn determinant_with_fractions() {
        let m = QMatrix::from_rows(&[
            vec![Rational::new(1, 2), q(1)],
            vec![q(1), Rational::new(2, 3)],
        ]);
        assert_eq!(m.det(), Rational::new(-2, 3));
        let singular = QMatrix::from_rows(&[vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(singular.det().is_zero());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = QMatrix::from_rows(&[vec![q(1), q(1)], vec![q(1), q(-1)]]);
        let x = m.solve(&[q(3), q(1)]).unwrap();
        assert_eq!(x, vec![q(2), q(1)]);
        let sing = QMatrix::from_rows(&[vec![q(1), q(1)], vec![q(2), q(2)]]);
        assert!(sing.solve(&[q(1), q(3)]).is_none());
        assert!(sing.solve(&[q(1), q(2)]).is_some());
    }

    #[test]
    fn span_membership() {
        let basis = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        assert!(in_span(&basis, &[q(2), q(3), q(5)]));
        assert!(!in_span(&basis, &[q(0), q(0), q(1)]));
    }
}
