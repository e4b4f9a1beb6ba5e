//! Dense exact linear algebra over a [`Field`]: row reduction, rank, kernel,
//! solving, and pivot-complement quotient spaces.
//!
//! Everything is deterministic: pivots are always the first nonzero entry in
//! column order, so bases derived here are stable across runs.

use alloc::vec;
use alloc::vec::Vec;

use crate::scalars::{Elem, Field};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Elem>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, rows: &[Vec<Elem>]) -> Self {
        if rows.is_empty() {
            return Matrix::zeros(field, 0, 0);
        }
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols));
        Matrix { rows: rows.len(), cols, data: rows.concat() }
    }

    /// Integer-entry convenience constructor, row-major.
    pub fn from_i64(field: &Field, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&e| field.from_i64(e)).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self, field: &Field) -> Matrix {
        let mut out = Matrix::zeros(field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let t = field.add(out.get(i, j), &field.add(&field.mul(a, b), &field.zero()));
                    out.set(i, j, t);
                }
            }
        }
        out
    }

    pub fn apply(&self, field: &Field, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![field.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if field.is_zero(a) || field.is_zero(&v[j]) {
                    continue;
                }
                out[i] = field.add(&out[i], &field.mul(a, &v[j]));
            }
        }
        out
    }

    pub fn add(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, field.add(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    pub fn sub(&self, field: &Field, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, field.sub(self.get(i, j), other.get(i, j)));
            }
        }
        out
    }

    pub fn scale(&self, field: &Field, c: &Elem) -> Matrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, field.mul(self.get(i, j), c));
            }
        }
        out
    }

    pub fn is_zero(&self, field: &Field) -> bool {
        self.data.iter().all(|e| field.is_zero(e))
    }

    pub fn rank(&self, field: &Field) -> usize {
        let (_, pivots) = rref(field, self)
            ;
        pivots.len()
    }

    /// Column-space basis of this matrix as a new matrix (columns = basis).
    pub fn column_space(&self, field: &Field) -> Matrix {
        let (_, pivots) = rref(field, &self.transpose(field));
        // pivots of the transpose's rref index independent rows of transpose,
        // i.e. independent columns of self. Simpler: rref of self gives pivot
        // columns directly.
        let (_, piv) = rref(field, self);
        let _ = pivots;
        let mut out = Matrix::zeros(field, self.rows, piv.len());
        for (k, &j) in piv.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, k, self.get(i, j).clone());
            }
        }
        out
    }
}

/// Reduced row echelon form. Returns `(rref, pivot_columns)`.
pub fn rref(field: &Field, m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0usize;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let pivot_row = (row..a.rows).find(|&r| !field.is_zero(a.get(r, col)));
        let Some(pr) = pivot_row else { continue };
        if pr != row {
            for j in 0..a.cols {
                let tmp = a.get(pr, j).clone();
                a.set(pr, j, a.get(row, j).clone());
                a.set(row, j, tmp);
            }
        }
        let inv = field.inv(a.get(row, col));
        for j in col..a.cols {
            a.set(row, j, field.mul(a.get(row, j), &inv));
        }
        for r in 0..a.rows {
            if r == row || field.is_zero(a.get(r, col)) {
                continue;
            }
            let factor = a.get(r, col).clone();
            for j in col..a.cols {
                let t = field.sub(a.get(r, j), &field.mul(&factor, a.get(row, j)));
                a.set(r, j, t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Basis of the kernel (null space) of `m`, one vector per free column.
pub fn kernel(field: &Field, m: &Matrix) -> Vec<Vec<Elem>> {
    let n = m.cols;
    let (r, pivots) = rref(field, m);
    let mut is_pivot = vec![false; n];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![field.zero(); n];
        v[free] = field.one();
        for (ri, &pc) in pivots.iter().enumerate() {
            let c = r.get(ri, free);
            if !field.is_zero(c) {
                v[pc] = field.neg(c);
            }
        }
        basis.push(v);
    }
    basis
}

/// Solve `m x = b`; returns one solution if consistent.
pub fn solve(field: &Field, m: &Matrix, b: &[Elem]) -> Option<Vec<Elem>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Matrix::zeros(field, m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, m.cols, b[i].clone());
    }
    let (r, pivots) = rref(field, &aug);
    if pivots.contains(&m.cols) {
        return None; // no solution
    }
    let mut x = vec![field.zero(); m.cols];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = r.get(ri, m.cols).clone();
    }
    Some(x)
}

/// A subspace of an ambient coordinate space held as RREF rows, with the
/// pivot-complement coordinates giving a deterministic quotient basis.
///
/// Used everywhere a quotient `ambient / span(relations)` is needed: graded
/// ideal pieces, tensor products over an algebra, cokernels.
#[derive(Debug, Clone)]
pub struct Subspace {
    pub ambient_dim: usize,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn empty(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(field: &Field, ambient_dim: usize, vectors: &[Vec<Elem>]) -> Self {
        let mut s = Subspace::empty(ambient_dim);
        for v in vectors {
            s.insert(field, v.clone());
        }
        s
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows; returns the residue.
    pub fn reduce(&self, field: &Field, mut v: Vec<Elem>) -> Vec<Elem> {
        assert_eq!(v.len(), self.ambient_dim);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if field.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for j in 0..self.ambient_dim {
                if field.is_zero(&row[j]) {
                    continue;
                }
                v[j] = field.sub(&v[j], &field.mul(&c, &row[j]));
            }
        }
        v
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, field: &Field, v: Vec<Elem>) -> bool {
        let mut r = self.reduce(field, v);
        let Some(p) = (0..self.ambient_dim).find(|&j| !field.is_zero(&r[j])) else {
            return false;
        };
        let inv = field.inv(&r[p]);
        for x in r.iter_mut() {
            *x = field.mul(x, &inv);
        }
        // Back-substitute into existing rows to keep full reduction.
        for (row, _) in self.rows.iter_mut().zip(&self.pivots) {
            if field.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for j in 0..self.ambient_dim {
                if field.is_zero(&r[j]) {
                    continue;
                }
                row[j] = field.sub(&row[j], &field.mul(&c, &r[j]));
            }
        }
        // Keep rows ordered by pivot for determinism.
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn contains(&self, field: &Field, v: &[Elem]) -> bool {
        let r = self.reduce(field, v.to_vec());
        r.iter().all(|x| field.is_zero(x))
    }

    pub fn contains_subspace(&self, field: &Field, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(field, r))
    }

    pub fn basis(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates that are not pivots, in order: the canonical
    /// quotient basis indices.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&j| !is_pivot[j]).collect()
    }
}

/// The quotient of a coordinate space by a subspace, with a fixed section:
/// quotient basis = pivot-complement coordinates of the subspace.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    pub subspace: Subspace,
    free: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(subspace: Subspace) -> Self {
        let free = subspace.complement_indices();
        QuotientSpace { subspace, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspace.ambient_dim
    }

    /// Image of an ambient vector in quotient coordinates.
    pub fn project(&self, field: &Field, v: Vec<Elem>) -> Vec<Elem> {
        let r = self.subspace.reduce(field, v);
        self.free.iter().map(|&j| r[j].clone()).collect()
    }

    /// The chosen ambient representative of quotient basis vector `k`.
    pub fn rep(&self, field: &Field, k: usize) -> Vec<Elem> {
        let mut v = vec![field.zero(); self.ambient_dim()];
        v[self.free[k]] = field.one();
        v
    }

    pub fn free_indices(&self) -> &[usize] {
        &self.free
    }

    /// Matrix of an ambient linear operator on the quotient; the operator
    /// must map the subspace into itself (callers guarantee this).
    pub fn induced_operator(&self, field: &Field, op: impl Fn(Vec<Elem>) -> Vec<Elem>) -> Matrix {
        let mut m = Matrix::zeros(field, self.dim(), self.dim());
        for k in 0..self.dim() {
            let img = op(self.rep(field, k));
            let coords = self.project(field, img);
            for i in 0..self.dim() {
                m.set(i, k, coords[i].clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn rref_and_rank() {
        let f = f7();
        let m = Matrix::from_i64(&f, 3, 3, &[1, 2, 3, 2, 4, 6, 1, 1, 1]);
        assert_eq!(m.rank(&f), 2);
        let id = Matrix::identity(&f, 3);
        assert_eq!(id.rank(&f), 3);
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = f7();
        let m = Matrix::from_i64(&f, 1, 2, &[1, 0]);
        let k = kernel(&f, &m);
        assert_eq!(k.len(), 1);
        assert_eq!(k[0], vec![f.zero(), f.one()]);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = f7();
        let m = Matrix::from_i64(&f, 2, 2, &[1, 1, 0, 1]);
        let b = vec![f.from_i64(3), f.from_i64(2)];
        let x = solve(&f, &m, &b).unwrap();
        assert_eq!(m.apply(&f, &x), b);
        let sing = Matrix::from_i64(&f, 2, 2, &[1, 1, 2, 2]);
        let bad = vec![f.from_i64(1), f.from_i64(3)];
        assert!(solve(&f, &sing, &bad).is_none());
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let f = f7();
        let sub = Subspace::from_vectors(
            &f,
            3,
            &[vec![f.one(), f.from_i64(2), f.zero()]],
        );
        let q = QuotientSpace::new(sub);
        assert_eq!(q.dim(), 2);
        let img = q.project(&f, vec![f.from_i64(2), f.from_i64(4), f.zero()]);
        assert!(img.iter().all(|e| f.is_zero(e)));
        let img2 = q.project(&f, vec![f.zero(), f.zero(), f.one()]);
        assert_eq!(img2.iter().filter(|e| !f.is_zero(e)).count(), 1);
    }

    #[test]
    fn subspace_insert_dedupes() {
        let f = f7();
        let mut s = Subspace::empty(2);
        assert!(s.insert(&f, vec![f.one(), f.one()]));
        assert!(!s.insert(&f, vec![f.from_i64(3), f.from_i64(3)]));
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn rationals_rref() {
        let f = Field::rationals();
        let m = Matrix::from_i64(&f, 2, 3, &[2, 4, 6, 1, 3, 5]);
        assert_eq!(m.rank(&f), 2);
        let k = kernel(&f, &m);
        assert_eq!(k.len(), 1);
        // check m * k = 0
        let img = m.apply(&f, &k[0]);
        assert!(img.iter().all(|e| f.is_zero(e)));
    }
}
