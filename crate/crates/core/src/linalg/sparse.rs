use std::fmt;

use rayon::prelude::*;

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A sparse vector: `(index, value)` pairs sorted by index, no stored zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Sorts, merges duplicate indices and drops zeros.
pub fn normalize_vec(mut v: Vec<(usize, Scalar)>) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, s) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += &s,
            _ => out.push((i, s)),
        }
    }
    out.retain(|(_, s)| !s.is_zero());
    out
}

/// `y + a·x` for sorted sparse vectors.
pub fn axpy(y: &[(usize, Scalar)], a: &Scalar, x: &[(usize, Scalar)]) -> SparseVec {
    if a.is_zero() {
        return y.to_vec();
    }
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        let take_y = j == x.len() || (i < y.len() && y[i].0 < x[j].0);
        let take_x = i == y.len() || (j < x.len() && x[j].0 < y[i].0);
        if take_y {
            out.push(y[i].clone());
            i += 1;
        } else if take_x {
            out.push((x[j].0, a * &x[j].1));
            j += 1;
        } else {
            let v = &y[i].1 + &(a * &x[j].1);
            if !v.is_zero() {
                out.push((y[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// An exact sparse matrix stored column by column.
///
/// Columns are the images of source basis vectors, which is the order in
/// which operator matrices get assembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, cols: vec![Vec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Scalar::one())
    }

    pub fn scalar(n: usize, s: &Scalar) -> Self {
        let cols = (0..n)
            .map(|i| if s.is_zero() { Vec::new() } else { vec![(i, s.clone())] })
            .collect();
        SparseMatrix { nrows: n, ncols: n, cols }
    }

    /// Builds a matrix from (unnormalized) columns.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(usize, Scalar)>>) -> Result<Self> {
        let ncols = cols.len();
        let cols: Vec<SparseVec> = cols.into_iter().map(normalize_vec).collect();
        for c in &cols {
            if let Some((r, _)) = c.last() {
                if *r >= nrows {
                    return Err(Error::IndexOutOfRange(format!("row {r} >= {nrows}")));
                }
            }
        }
        Ok(SparseMatrix { nrows, ncols, cols })
    }

    /// Builds a matrix from rows; convenient for pullback-style operators.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<(usize, Scalar)>>) -> Result<Self> {
        let nrows = rows.len();
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
        for (r, row) in rows.into_iter().enumerate() {
            for (c, s) in row {
                if c >= ncols {
                    return Err(Error::IndexOutOfRange(format!("column {c} >= {ncols}")));
                }
                cols[c].push((r, s));
            }
        }
        Self::from_columns(nrows, cols)
    }

    pub fn from_triplets(
        nrows: usize,
        ncols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
        for (r, c, s) in entries {
            if c >= ncols {
                return Err(Error::IndexOutOfRange(format!("column {c} >= {ncols}")));
            }
            cols[c].push((r, s));
        }
        Self::from_columns(nrows, cols)
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged dense matrix".into()));
        }
        Self::from_triplets(
            rows.len(),
            ncols,
            rows.iter()
                .enumerate()
                .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, s)| (r, c, s.clone()))),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        match self.cols[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(pos) => self.cols[c][pos].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Nonzero entries as `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, s)| (*r, c, s)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.nrows];
        for (r, c, s) in self.entries() {
            cols[r].push((c, s.clone()));
        }
        SparseMatrix { nrows: self.ncols, ncols: self.nrows, cols }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![Scalar::zero(); self.ncols]; self.nrows];
        for (r, c, s) in self.entries() {
            rows[r][c] = s.clone();
        }
        rows
    }

    /// Applies the matrix to a sparse vector.
    pub fn apply(&self, v: &[(usize, Scalar)]) -> Result<SparseVec> {
        if let Some((i, _)) = v.last() {
            if *i >= self.ncols {
                return Err(Error::DimensionMismatch(format!(
                    "vector index {i} for matrix with {} columns",
                    self.ncols
                )));
            }
        }
        let mut acc = Accumulator::new(self.nrows);
        for (k, a) in v {
            acc.add_scaled(a, &self.cols[*k]);
        }
        Ok(acc.take())
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols != rhs.nrows {
            return Err(Error::DimensionMismatch(format!(
                "({}x{}) * ({}x{})",
                self.nrows, self.ncols, rhs.nrows, rhs.ncols
            )));
        }
        let cols: Vec<SparseVec> = rhs
            .cols
            .par_iter()
            .map_init(
                || Accumulator::new(self.nrows),
                |acc, col| {
                    for (k, a) in col {
                        acc.add_scaled(a, &self.cols[*k]);
                    }
                    acc.take()
                },
            )
            .collect();
        Ok(SparseMatrix { nrows: self.nrows, ncols: rhs.ncols, cols })
    }

    /// `self^k` for a square matrix.
    pub fn pow(&self, k: usize) -> Result<SparseMatrix> {
        if self.nrows != self.ncols {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut out = SparseMatrix::identity(self.nrows);
        for _ in 0..k {
            out = self.mul(&out)?;
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &SparseMatrix) -> Result<()> {
        if self.nrows != other.nrows || self.ncols != other.ncols {
            return Err(Error::DimensionMismatch(format!(
                "({}x{}) vs ({}x{})",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        Ok(())
    }

    /// `self + a·other`.
    pub fn add_scaled(&self, a: &Scalar, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.check_same_shape(other)?;
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(x, y)| axpy(x, a, y))
            .collect();
        Ok(SparseMatrix { nrows: self.nrows, ncols: self.ncols, cols })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add_scaled(&Scalar::from_int(-1), other)
    }

    pub fn scale(&self, a: &Scalar) -> SparseMatrix {
        if a.is_zero() {
            return SparseMatrix::zeros(self.nrows, self.ncols);
        }
        let cols = self
            .cols
            .iter()
            .map(|c| c.iter().map(|(i, s)| (*i, a * s)).collect())
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, cols }
    }

    /// First column (in index order) where the two matrices differ.
    pub fn first_difference(&self, other: &SparseMatrix) -> Result<Option<usize>> {
        self.check_same_shape(other)?;
        Ok((0..self.ncols).find(|&c| self.cols[c] != other.cols[c]))
    }
}

impl fmt::Display for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Dense scratch vector for sparse column accumulation.
struct Accumulator {
    values: Vec<Option<Scalar>>,
    touched: Vec<usize>,
}

impl Accumulator {
    fn new(n: usize) -> Self {
        Accumulator { values: vec![None; n], touched: Vec::new() }
    }

    fn add_scaled(&mut self, a: &Scalar, col: &[(usize, Scalar)]) {
        for (i, s) in col {
            let term = a * s;
            match &mut self.values[*i] {
                Some(v) => *v += &term,
                slot @ None => {
                    *slot = Some(term);
                    self.touched.push(*i);
                }
            }
        }
    }

    fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for i in self.touched.drain(..) {
            if let Some(v) = self.values[i].take() {
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        let dense: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        SparseMatrix::from_dense(&dense).unwrap()
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[1, 0], &[3, 1]]);
        assert_eq!(a.mul(&b).unwrap(), m(&[&[7, 2], &[3, 1]]));
        assert_eq!(a.transpose(), m(&[&[1, 0], &[2, 1]]));
        assert!(a.mul(&m(&[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn no_stored_zeros_after_cancellation() {
        let a = m(&[&[1, -1], &[2, 5]]);
        let d = a.sub(&a).unwrap();
        assert!(d.is_zero());
        assert_eq!(d.nnz(), 0);
    }

    #[test]
    fn first_difference_reports_column() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let b = m(&[&[1, 0], &[0, 2]]);
        assert_eq!(a.first_difference(&b).unwrap(), Some(1));
        assert_eq!(a.first_difference(&a).unwrap(), None);
    }
}
