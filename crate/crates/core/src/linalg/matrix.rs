// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::ops::{Index, IndexMut};

use super::Rational;
use crate::error::{Error, Result};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RatMatrix { rows, cols, data })
    }

    /// Builds a matrix from rows of equal length. Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        RatMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Rational] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &RatMatrix) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(self
            .iter_rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect())
    }

    /// Columns `start..end` as a new matrix.
    pub fn column_block(&self, start: usize, end: usize) -> Self {
        let mut out = Self::zeros(self.rows, end - start);
        for i in 0..self.rows {
            for j in start..end {
                out[(i, j - start)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn hstack(&self, rhs: &RatMatrix) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "hstack of {} and {} rows",
                self.rows, rhs.rows
            )));
        }
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    /// Row-reduces in place, returning pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                self.swap_rows(p, r);
            }
            let inv = self[(r, c)].recip().expect("nonzero pivot");
            if !inv.is_one() {
                for j in c..self.cols {
                    let x = &self[(r, j)] * &inv;
                    self[(r, j)] = x;
                }
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &self[(r, j)];
                    self[(i, j)] -= &delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "inverse of non-square {}x{}",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let (reduced, pivots) = self.hstack(&Self::identity(n))?.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        Ok(reduced.column_block(n, 2 * n))
    }

    /// Determinant by fraction-tracking elimination.
    pub fn determinant(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] / &pivot;
                for j in c..n {
                    let delta = &factor * &m[(c, j)];
                    m[(i, j)] -= &delta;
                }
            }
        }
        Ok(det)
    }

    /// The nonzero rows of the reduced row-echelon form: a canonical key for the row space.
    pub fn rowspace_key(&self) -> RatMatrix {
        let (mut reduced, pivots) = self.rref();
        reduced.rows = pivots.len();
        reduced.data.truncate(reduced.rows * reduced.cols);
        reduced
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }
}

/// True iff `a` and `b` span the same row space.
pub fn rowspace_equal(a: &RatMatrix, b: &RatMatrix) -> Result<bool> {
    if a.cols != b.cols {
        return Err(Error::DimensionMismatch(format!(
            "row spaces in {} and {} columns",
            a.cols, b.cols
        )));
    }
    Ok(a.rowspace_key() == b.rowspace_key())
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.iter_rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        RatMatrix::from_i64_rows(rows)
    }

    #[test]
    fn rref_examples() {
        assert_eq!(
            m(&[&[0, 0], &[0, 0]]).rref(),
            (m(&[&[0, 0], &[0, 0]]), vec![])
        );
        assert_eq!(
            m(&[&[2, 4], &[1, 2]]).rref(),
            (m(&[&[1, 2], &[0, 0]]), vec![0])
        );
        assert_eq!(
            m(&[&[0, 1], &[1, 0]]).rref(),
            (m(&[&[1, 0], &[0, 1]]), vec![0, 1])
        );
    }

    #[test]
    fn rowspace_examples() {
        assert!(rowspace_equal(&m(&[&[1, 1]]), &m(&[&[2, 2]])).unwrap());
        assert!(!rowspace_equal(&m(&[&[1, 0]]), &m(&[&[0, 1]])).unwrap());
        let a = m(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        let mut b = a.clone();
        for j in 0..3 {
            let v = &b[(0, j)] + &(Rational::from_integer(3) * &a[(2, j)]);
            b[(0, j)] = v;
        }
        assert!(rowspace_equal(&a, &b).unwrap());
        assert!(matches!(
            rowspace_equal(&m(&[&[1, 0]]), &m(&[&[1, 0, 0]])),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn rank_and_inverse_examples() {
        assert_eq!(RatMatrix::identity(4).rank(), 4);
        let d = RatMatrix::from_rows(vec![
            vec![Rational::from_integer(2), Rational::zero()],
            vec![Rational::zero(), Rational::new(1, 2)],
        ]);
        let dinv = RatMatrix::from_rows(vec![
            vec![Rational::new(1, 2), Rational::zero()],
            vec![Rational::zero(), Rational::from_integer(2)],
        ]);
        assert_eq!(d.inverse().unwrap(), dinv);
        assert_eq!(
            m(&[&[1, 1], &[0, 1]]).inverse().unwrap(),
            m(&[&[1, -1], &[0, 1]])
        );
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::SingularMatrix));
        assert!(m(&[&[1, 2, 3]]).inverse().is_err());
    }

    #[test]
    fn determinant_small() {
        assert_eq!(
            m(&[&[0, 1], &[-1, 0]]).determinant().unwrap(),
            Rational::one()
        );
        assert_eq!(
            m(&[&[1, 2], &[2, 4]]).determinant().unwrap(),
            Rational::zero()
        );
        assert_eq!(
            m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])
                .determinant()
                .unwrap(),
            Rational::from_integer(6)
        );
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RatMatrix> {
        (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
            prop::collection::vec(rational(), r * c)
                .prop_map(move |data| RatMatrix::from_vec(r, c, data).unwrap())
        })
    }

    /// Random invertible matrix: unit lower times unit upper times a diagonal, then a row swap.
    fn invertible(max_n: usize) -> impl Strategy<Value = RatMatrix> {
        (1..=max_n).prop_flat_map(|n| {
            (
                prop::collection::vec(rational(), n * n),
                prop::collection::vec(rational(), n * n),
                prop::collection::vec((1i64..=5, 1i64..=3), n),
                0..n,
            )
                .prop_map(move |(l, u, d, swap)| {
                    let mut lower = RatMatrix::identity(n);
                    let mut upper = RatMatrix::identity(n);
                    for i in 0..n {
                        for j in 0..n {
                            if i > j {
                                lower[(i, j)] = l[i * n + j].clone();
                            } else if i < j {
                                upper[(i, j)] = u[i * n + j].clone();
                            } else {
                                upper[(i, j)] = Rational::new(d[i].0, d[i].1);
                            }
                        }
                    }
                    let mut out = lower.mul(&upper).unwrap();
                    out.swap_rows(0, swap);
                    out
                })
        })
    }

    proptest! {
        #[test]
        fn rref_idempotent(a in matrix(5, 7)) {
            let (r1, p1) = a.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn rowspace_equal_is_equivalence(a in matrix(4, 5), mix in prop::collection::vec(rational(), 16)) {
            // b and c are random re-bases of the row space of a
            let r = a.rows();
            let rebase = |offset: usize| {
                let mut t = RatMatrix::identity(r);
                for i in 0..r {
                    for j in 0..r {
                        if i < j {
                            t[(i, j)] = mix[(offset + i * r + j) % mix.len()].clone();
                        }
                    }
                }
                t.mul(&a).unwrap()
            };
            let b = rebase(0);
            let c = rebase(5);
            prop_assert!(rowspace_equal(&a, &a).unwrap());
            prop_assert_eq!(rowspace_equal(&a, &b).unwrap(), rowspace_equal(&b, &a).unwrap());
            prop_assert!(rowspace_equal(&a, &b).unwrap());
            prop_assert!(rowspace_equal(&b, &c).unwrap());
            prop_assert!(rowspace_equal(&a, &c).unwrap());
        }

        #[test]
        fn inverse_roundtrip(a in invertible(8)) {
            let inv = a.inverse().unwrap();
            let n = a.rows();
            prop_assert_eq!(inv.mul(&a).unwrap(), RatMatrix::identity(n));
            prop_assert_eq!(a.mul(&inv).unwrap(), RatMatrix::identity(n));
        }
    }
}
