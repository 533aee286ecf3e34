//! Exact linear algebra: small dense matrices and an incremental sparse
//! reduced row echelon form used for nullspaces and spans.

use std::ops::Mul;


use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
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

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Gauss-Jordan reduction in place; returns the pivot columns.
    fn reduce(&mut self) -> Vec<usize> {
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
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = F::one() / self[(r, c)].clone();
            for j in c..self.cols {
                self[(r, j)] = self[(r, j)].clone() * inv.clone();
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let f = self[(i, c)].clone();
                for j in c..self.cols {
                    let v = self[(r, j)].clone();
                    self[(i, j)] = self[(i, j)].clone() - f.clone() * v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let pivots = aug.reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Scalar> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * rhs[(k, j)].clone();
                }
            }
        }
        out
    }
}

/// Sparse vector: `(index, value)` pairs, strictly increasing indices, no
/// stored zeros.
pub type SparseVec<F> = Vec<(usize, F)>;

pub fn sparse_get<F: Scalar>(v: &SparseVec<F>, i: usize) -> Option<&F> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

/// `a - c * b`.
fn axpy<F: Scalar>(a: &SparseVec<F>, c: &F, b: &SparseVec<F>) -> SparseVec<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map_or(usize::MAX, |e| e.0);
        let kb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ka < kb {
            out.push(a[i].clone());
            i += 1;
        } else if kb < ka {
            out.push((kb, -(c.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - c.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((ka, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally maintained reduced row echelon basis of a row space.
///
/// Every stored row has a 1 at its pivot column and 0 at every other row's
/// pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    ncols: usize,
    rows: Vec<SparseVec<F>>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` against the current basis.
    pub fn reduce(&self, mut v: SparseVec<F>) -> SparseVec<F> {
        let hits: Vec<(usize, F)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row[*c].map(|r| (r, x.clone())))
            .collect();
        for (r, x) in hits {
            v = axpy(&v, &x, &self.rows[r]);
        }
        v
    }

    pub fn contains(&self, v: SparseVec<F>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the spanned space; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let v = self.reduce(v);
        // pivot on the last nonzero column
        let Some((p, lead)) = v.last().cloned() else {
            return false;
        };
        let inv = F::one() / lead;
        let v: SparseVec<F> = v.into_iter().map(|(c, x)| (c, x * inv.clone())).collect();
        for r in 0..self.rows.len() {
            if let Some(x) = sparse_get(&self.rows[r], p).cloned() {
                self.rows[r] = axpy(&self.rows[r], &x, &v);
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.pivots.push(p);
        self.rows.push(v);
        true
    }

    /// Basis of `{x : row . x = 0 for every row}`.
    pub fn nullspace(&self) -> Subspace<F> {
        let mut basis = Vec::new();
        let mut coords = Vec::new();
        let mut column_entries: Vec<Vec<(usize, F)>> = vec![Vec::new(); self.ncols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row {
                if self.pivot_row[*c].is_none() {
                    column_entries[*c].push((self.pivots[r], -x.clone()));
                }
            }
        }
        for f in 0..self.ncols {
            if self.pivot_row[f].is_some() {
                continue;
            }
            let mut v = std::mem::take(&mut column_entries[f]);
            v.push((f, F::one()));
            v.sort_unstable_by_key(|e| e.0);
            basis.push(v);
            coords.push(f);
        }
        Subspace {
            ambient: self.ncols,
            basis,
            coords,
        }
    }

    /// The row space itself as a [`Subspace`].
    pub fn into_subspace(self) -> Subspace<F> {
        Subspace {
            ambient: self.ncols,
            basis: self.rows,
            coords: self.pivots,
        }
    }
}

/// A subspace of `F^ambient` with a basis `b_0, .., b_{k-1}` and coordinate
/// indices `c_0, .., c_{k-1}` such that `b_j[c_l] = [j == l]`. Reading a
/// vector of the subspace at the `c_l` gives its coordinates in the basis.
#[derive(Clone, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Vec<SparseVec<F>>,
    coords: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            coords: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[SparseVec<F>] {
        &self.basis
    }

    pub fn coordinate_indices(&self) -> &[usize] {
        &self.coords
    }

    /// Coordinates of `v` assuming `v` lies in the subspace.
    pub fn coordinates(&self, v: &SparseVec<F>) -> Vec<F> {
        self.coords
            .iter()
            .map(|&c| sparse_get(v, c).cloned().unwrap_or_else(F::zero))
            .collect()
    }

    /// Trace of a coordinate permutation restricted to the subspace, which
    /// must be stable under it. `preimage[c]` is the coordinate sent to `c`,
    /// i.e. the operator is `(g v)[c] = v[preimage[c]]`.
    pub fn trace_of_permutation(&self, preimage: &[usize]) -> F {
        self.basis
            .iter()
            .zip(&self.coords)
            .fold(F::zero(), |acc, (b, &c)| match sparse_get(b, preimage[c]) {
                Some(x) => acc + x.clone(),
                None => acc,
            })
    }

    /// Same as [`Subspace::trace_of_permutation`] for a signed permutation
    /// `(g v)[c] = sign[c] * v[preimage[c]]`.
    pub fn trace_of_signed_permutation(&self, preimage: &[usize], sign: &[i8]) -> F {
        self.basis
            .iter()
            .zip(&self.coords)
            .fold(F::zero(), |acc, (b, &c)| match sparse_get(b, preimage[c]) {
                Some(x) if sign[c] < 0 => acc - x.clone(),
                Some(x) => acc + x.clone(),
                None => acc,
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;
    use num_rational::Ratio;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    #[test]
    fn inverse_of_small_matrix() {
        let m = Matrix::from_rows(vec![vec![q(2), q(1)], vec![q(1), q(1)]]);
        let inv = m.inverse().unwrap();
        assert!((&m * &inv).is_identity());
        let singular = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.rank(), 1);
    }

    #[test]
    fn nullspace_of_one_equation() {
        // x0 + x1 - x2 = 0 in F^3
        let mut e = Echelon::new(3);
        assert!(e.insert(vec![(0, q(1)), (1, q(1)), (2, q(-1))]));
        assert!(!e.insert(vec![(0, q(2)), (1, q(2)), (2, q(-2))]));
        let ns = e.nullspace();
        assert_eq!(ns.dim(), 2);
        for b in ns.basis() {
            let s: Q = b
                .iter()
                .map(|(c, x)| x.clone() * [q(1), q(1), q(-1)][*c].clone())
                .sum();
            assert_eq!(s, q(0));
        }
        for (j, b) in ns.basis().iter().enumerate() {
            for (l, &c) in ns.coordinate_indices().iter().enumerate() {
                let x = sparse_get(b, c).cloned().unwrap_or_else(|| q(0));
                assert_eq!(x, if j == l { q(1) } else { q(0) });
            }
        }
    }

    #[test]
    fn trace_of_swap_on_invariant_subspace() {
        // span of (1,1) in F^2, swap acts as identity on it
        let mut e = Echelon::new(2);
        e.insert(vec![(0, q(1)), (1, q(1))]);
        let s = e.into_subspace();
        assert_eq!(s.trace_of_permutation(&[1, 0]), q(1));
        // the antisymmetric line carries the sign
        let mut e = Echelon::new(2);
        e.insert(vec![(0, q(1)), (1, q(-1))]);
        let s = e.into_subspace();
        assert_eq!(s.trace_of_permutation(&[1, 0]), q(-1));
    }

    #[test]
    fn works_over_machine_ratios() {
        let m: Matrix<Ratio<i64>> = Matrix::from_rows(vec![
            vec![Ratio::from(1), Ratio::from(2)],
            vec![Ratio::from(3), Ratio::from(4)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv[(0, 0)], Ratio::from(-2));
        assert_eq!(inv[(1, 0)], Ratio::new(3, 2));
    }
}
