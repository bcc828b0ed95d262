//! Exact rank and kernel computations.
//!
//! Two interchangeable paths: a sparse incremental echelon form and a dense
//! Gaussian elimination used for narrow matrices. Both pivot
//! deterministically (lowest column first, then lowest row) and produce the
//! kernel basis read off the unique reduced row echelon form, so their
//! outputs are identical.

use std::collections::BTreeMap;

use super::scalar::Scalar;
use super::sparse::{axpy, SparseMatrix, SparseVec};

/// Tuning knobs for elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EliminationConfig {
    /// Matrices with at most this many columns use the dense path.
    pub dense_threshold: usize,
}

impl Default for EliminationConfig {
    fn default() -> Self {
        EliminationConfig { dense_threshold: 512 }
    }
}

impl EliminationConfig {
    pub fn sparse_only() -> Self {
        EliminationConfig { dense_threshold: 0 }
    }

    pub fn dense_only() -> Self {
        EliminationConfig { dense_threshold: usize::MAX }
    }

    fn use_dense(&self, m: &SparseMatrix) -> bool {
        m.ncols() <= self.dense_threshold
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    rank_with(m, &EliminationConfig::default())
}

pub fn rank_with(m: &SparseMatrix, config: &EliminationConfig) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    if config.use_dense(m) {
        return DenseEchelon::new(m.to_dense()).rank();
    }
    // rank(M) = rank(Mᵀ): eliminate whichever side has fewer vectors
    if m.ncols() <= m.nrows() {
        Echelon::build(m.columns().iter().cloned()).rank()
    } else {
        Echelon::build(m.transpose().columns().iter().cloned()).rank()
    }
}

/// Basis of `ker(M)`, one sparse vector (indexed by column) per free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    kernel_basis_with(m, &EliminationConfig::default())
}

pub fn kernel_basis_with(m: &SparseMatrix, config: &EliminationConfig) -> Vec<SparseVec> {
    let pivots: BTreeMap<usize, SparseVec> = if config.use_dense(m) {
        DenseEchelon::new(m.to_dense()).into_rref_rows()
    } else {
        let mut e = Echelon::build(m.transpose().columns().iter().cloned());
        e.reduce_fully();
        e.pivots
    };
    kernel_from_rref(m.ncols(), &pivots)
}

/// Kernel basis as the columns of a matrix (`ncols × nullity`).
pub fn kernel_matrix(m: &SparseMatrix, config: &EliminationConfig) -> SparseMatrix {
    let basis = kernel_basis_with(m, config);
    SparseMatrix::from_columns(m.ncols(), basis).expect("kernel vectors are in range")
}

fn kernel_from_rref(ncols: usize, pivots: &BTreeMap<usize, SparseVec>) -> Vec<SparseVec> {
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains_key(c)) {
        let mut v: SparseVec = vec![(free, Scalar::one())];
        for (lead, row) in pivots {
            if let Ok(pos) = row.binary_search_by_key(&free, |(i, _)| *i) {
                v.push((*lead, -&row[pos].1));
            }
        }
        v.sort_by_key(|(i, _)| *i);
        out.push(v);
    }
    out
}

/// Incremental echelon form over sparse vectors; each stored vector is keyed
/// by its leading index and scaled so the leading entry is one.
struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    fn build(vectors: impl Iterator<Item = SparseVec>) -> Self {
        let mut e = Echelon { pivots: BTreeMap::new() };
        for v in vectors {
            e.insert(v);
        }
        e
    }

    fn insert(&mut self, mut v: SparseVec) {
        while let Some((lead, coef)) = v.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => v = axpy(&v, &-&coef, p),
                None => {
                    let inv = coef.inv();
                    let v = v.into_iter().map(|(i, s)| (i, &s * &inv)).collect();
                    self.pivots.insert(lead, v);
                    return;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Clears every pivot column from all other stored vectors.
    fn reduce_fully(&mut self) {
        let leads: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for lead in leads {
            let p = self.pivots[&lead].clone();
            for (_, row) in self.pivots.range_mut(..lead) {
                if let Ok(pos) = row.binary_search_by_key(&lead, |(i, _)| *i) {
                    let c = row[pos].1.clone();
                    *row = axpy(row, &-&c, &p);
                }
            }
        }
    }
}

struct DenseEchelon {
    rows: Vec<Vec<Scalar>>,
    ncols: usize,
}

impl DenseEchelon {
    fn new(rows: Vec<Vec<Scalar>>) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        DenseEchelon { rows, ncols }
    }

    /// Reduced row echelon form; returns pivot column → normalized row.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].inv();
            for x in self.rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    if !y.is_zero() {
                        *x -= &(&f * y);
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
        }
        pivot_cols
    }

    fn rank(mut self) -> usize {
        self.rref().len()
    }

    fn into_rref_rows(mut self) -> BTreeMap<usize, SparseVec> {
        let pivot_cols = self.rref();
        pivot_cols
            .into_iter()
            .zip(self.rows)
            .map(|(c, row)| {
                let sparse = row
                    .into_iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .collect();
                (c, sparse)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        let dense: Vec<Vec<Scalar>> =
            rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        SparseMatrix::from_dense(&dense).unwrap()
    }

    fn configs() -> [EliminationConfig; 2] {
        [EliminationConfig::sparse_only(), EliminationConfig::dense_only()]
    }

    #[test]
    fn rank_examples() {
        for cfg in configs() {
            assert_eq!(rank_with(&SparseMatrix::zeros(3, 3), &cfg), 0);
            assert_eq!(rank_with(&SparseMatrix::identity(4), &cfg), 4);
            assert_eq!(rank_with(&m(&[&[1, 2], &[2, 4]]), &cfg), 1);
        }
    }

    #[test]
    fn kernel_examples() {
        for cfg in configs() {
            assert!(kernel_basis_with(&SparseMatrix::identity(3), &cfg).is_empty());
            assert_eq!(kernel_basis_with(&SparseMatrix::zeros(2, 2), &cfg).len(), 2);
            let k = kernel_basis_with(&m(&[&[1, 1]]), &cfg);
            assert_eq!(k, vec![vec![(0, Scalar::from_int(-1)), (1, Scalar::one())]]);
        }
    }

    fn small_matrix() -> impl Strategy<Value = SparseMatrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            // mostly zeros so that rank deficiency is common
            prop::collection::vec(prop_oneof![4 => Just(0i64), 1 => -3i64..4], r * c).prop_map(
                move |vals| {
                    SparseMatrix::from_triplets(
                        r,
                        c,
                        vals.into_iter()
                            .enumerate()
                            .map(|(k, v)| (k / c, k % c, Scalar::from_int(v))),
                    )
                    .unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(mat in small_matrix()) {
            for cfg in configs() {
                let r = rank_with(&mat, &cfg);
                let ker = kernel_basis_with(&mat, &cfg);
                prop_assert_eq!(r + ker.len(), mat.ncols());
                for v in &ker {
                    prop_assert!(mat.apply(v).unwrap().is_empty());
                }
            }
        }

        #[test]
        fn rank_of_transpose(mat in small_matrix()) {
            prop_assert_eq!(rank(&mat), rank(&mat.transpose()));
        }

        #[test]
        fn dense_and_sparse_paths_agree(mat in small_matrix()) {
            let [s, d] = configs();
            prop_assert_eq!(rank_with(&mat, &s), rank_with(&mat, &d));
            prop_assert_eq!(kernel_basis_with(&mat, &s), kernel_basis_with(&mat, &d));
        }
    }
}
