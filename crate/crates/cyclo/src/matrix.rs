//! Dense matrices over the cyclotomic field and exact linear algebra.
//!
//! Products skip zero entries, which keeps the very sparse generator matrices
//! of modules cheap. Kernels and ranks go through [`Echelon`], an incremental
//! sparse row echelon form.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{height, FieldCtx, FieldElem};
use crate::FieldError;

#[derive(Clone)]
pub struct Matrix {
    ctx: &'static FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl Matrix {
    pub fn zeros(ctx: &'static FieldCtx, rows: usize, cols: usize) -> Matrix {
        Matrix { ctx, rows, cols, data: vec![ctx.zero(); rows * cols] }
    }

    pub fn identity(ctx: &'static FieldCtx, n: usize) -> Matrix {
        let mut m = Matrix::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn scalar(ctx: &'static FieldCtx, n: usize, x: &FieldElem) -> Matrix {
        let mut m = Matrix::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn diagonal(ctx: &'static FieldCtx, diag: &[FieldElem]) -> Matrix {
        let mut m = Matrix::zeros(ctx, diag.len(), diag.len());
        for (i, x) in diag.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_fn(
        ctx: &'static FieldCtx,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElem,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { ctx, rows, cols, data }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(ctx: &'static FieldCtx, rows: usize, cols: &[Vec<FieldElem>]) -> Matrix {
        Matrix::from_fn(ctx, rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn ctx(&self) -> &'static FieldCtx {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<FieldElem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<FieldElem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldElem::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Nonzero entries of row `i` as `(column, value)`.
    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, &FieldElem)> {
        self.row(i).iter().enumerate().filter(|(_, x)| !x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.ctx, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, x: &FieldElem) -> Matrix {
        if x.is_zero() {
            return Matrix::zeros(self.ctx, self.rows, self.cols);
        }
        Matrix {
            ctx: self.ctx,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| if a.is_zero() { a.clone() } else { a * x }).collect(),
        }
    }

    pub fn apply(&self, v: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(v.len(), self.cols, "apply: dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.ctx.zero();
                for (j, a) in self.row_entries(i) {
                    if !v[j].is_zero() {
                        acc += &(a * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product `self ⊗ other`, indexing `(i, k) ↦ i * other.rows + k`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.ctx, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for (j, a) in self.row_entries(i) {
                for k in 0..other.rows {
                    for (l, b) in other.row_entries(k) {
                        out.set(i * other.rows + k, j * other.cols + l, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.ctx, self.rows);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.ctx, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn hcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.ctx, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vcat(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { ctx: self.ctx, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block diagonal matrix.
    pub fn block_diag(ctx: &'static FieldCtx, blocks: &[Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(ctx, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for (j, x) in b.row_entries(i) {
                    out.set(r0 + i, c0 + j, x.clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    fn echelon_of_rows(&self) -> Echelon {
        let mut ech = Echelon::new(self.ctx, self.cols);
        for i in 0..self.rows {
            ech.add_row(self.row_entries(i).map(|(j, x)| (j, x.clone())).collect());
        }
        ech
    }

    pub fn rank(&self) -> usize {
        self.echelon_of_rows().rank()
    }

    /// Basis of `{v : self·v = 0}` as the columns of the returned matrix.
    pub fn nullspace(&self) -> Matrix {
        let basis = self.echelon_of_rows().nullspace();
        Matrix::from_columns(self.ctx, self.cols, &basis)
    }

    /// Basis of the column space, as a matrix with independent columns drawn
    /// from `self`.
    pub fn column_basis(&self) -> Matrix {
        let idx = self.transpose().echelon_pivot_rows();
        self.select(&(0..self.rows).collect::<Vec<_>>(), &idx)
    }

    /// Indices of a maximal independent subset of rows, greedily in order.
    pub fn echelon_pivot_rows(&self) -> Vec<usize> {
        let mut ech = Echelon::new(self.ctx, self.cols);
        (0..self.rows)
            .filter(|&i| ech.add_row(self.row_entries(i).map(|(j, x)| (j, x.clone())).collect()))
            .collect()
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Matrix, FieldError> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let id = Matrix::identity(self.ctx, n);
        self.solve(&id).ok_or(FieldError::Singular)
    }

    /// Solves `self · X = rhs`, returning one solution if the system is
    /// consistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve: row mismatch");
        let n = self.cols;
        let m = rhs.cols;
        let mut ech = Echelon::new(self.ctx, n + m);
        for i in 0..self.rows {
            let mut row: Vec<(usize, FieldElem)> =
                self.row_entries(i).map(|(j, x)| (j, x.clone())).collect();
            row.extend(rhs.row_entries(i).map(|(j, x)| (n + j, x.clone())));
            ech.add_row(row);
        }
        ech.reduce_fully();
        let mut x = Matrix::zeros(self.ctx, n, m);
        for (piv, row) in ech.rows() {
            if *piv >= n {
                return None;
            }
            for (c, v) in row {
                if *c >= n {
                    x.set(*piv, c - n, v.clone());
                }
            }
        }
        Some(x)
    }

    pub fn det(&self) -> FieldElem {
        assert!(self.is_square(), "det of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = self.ctx.one();
        for col in 0..n {
            let piv = (col..n)
                .filter(|&r| !a.get(r, col).is_zero())
                .min_by_key(|&r| height(a.get(r, col)));
            let Some(piv) = piv else {
                return self.ctx.zero();
            };
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                }
                det = -det;
            }
            let pv = a.get(col, col).clone();
            det = &det * &pv;
            let pinv = pv.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col) * &pinv;
                for j in col..n {
                    if !a.get(col, j).is_zero() {
                        let v = a.get(r, j) - &(&f * a.get(col, j));
                        a.set(r, j, v);
                    }
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<'a> Mul<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for (k, a) in self.row_entries(i) {
                for (j, b) in rhs.row_entries(k) {
                    let idx = i * rhs.cols + j;
                    out.data[idx] += &(a * b);
                }
            }
        }
        out
    }
}

impl<'a> Add<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum dimension mismatch");
        Matrix {
            ctx: self.ctx,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Matrix> for &'a Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference dimension mismatch");
        Matrix {
            ctx: self.ctx,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { ctx: self.ctx, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

/// Incremental row echelon form over sparse rows.
///
/// Each stored row has its pivot as its first entry, normalized to 1. Adding a
/// row reduces it against the stored pivots; rows that reduce to zero are
/// reported as dependent.
#[derive(Clone)]
pub struct Echelon {
    ctx: &'static FieldCtx,
    ncols: usize,
    rows: Vec<(usize, Vec<(usize, FieldElem)>)>,
    pivot_row: BTreeMap<usize, usize>,
}

impl Echelon {
    pub fn new(ctx: &'static FieldCtx, ncols: usize) -> Echelon {
        Echelon { ctx, ncols, rows: Vec::new(), pivot_row: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &(usize, Vec<(usize, FieldElem)>)> {
        self.rows.iter()
    }

    /// Reduces a sparse row against the stored pivots without inserting it.
    pub fn reduce(&self, row: Vec<(usize, FieldElem)>) -> BTreeMap<usize, FieldElem> {
        let mut work: BTreeMap<usize, FieldElem> =
            row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        let mut cursor = 0usize;
        loop {
            let next = work.range(cursor..).find(|(c, _)| self.pivot_row.contains_key(c)).map(|(c, _)| *c);
            let Some(c) = next else { break };
            let f = work.remove(&c).expect("present");
            let (_, prow) = &self.rows[self.pivot_row[&c]];
            for (j, v) in prow.iter().skip(1) {
                let delta = &f * v;
                let entry = work.entry(*j).or_insert_with(|| self.ctx.zero());
                *entry -= &delta;
                if entry.is_zero() {
                    work.remove(j);
                }
            }
            cursor = c + 1;
        }
        work
    }

    /// Whether the row lies in the span of the stored rows.
    pub fn contains(&self, row: Vec<(usize, FieldElem)>) -> bool {
        self.reduce(row).is_empty()
    }

    /// Adds a row; returns `true` if it was independent of the stored rows.
    pub fn add_row(&mut self, row: Vec<(usize, FieldElem)>) -> bool {
        let work = self.reduce(row);
        let Some((&piv, lead)) = work.iter().next() else {
            return false;
        };
        let inv = lead.inv().expect("leading entry is nonzero");
        let row: Vec<(usize, FieldElem)> = work
            .iter()
            .map(|(j, v)| (*j, if *j == piv { self.ctx.one() } else { v * &inv }))
            .collect();
        self.pivot_row.insert(piv, self.rows.len());
        self.rows.push((piv, row));
        true
    }

    /// Back-substitutes so every pivot column is zero outside its pivot row.
    pub fn reduce_fully(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].0));
        for &r in &order {
            let (piv, row) = self.rows[r].clone();
            let tail: Vec<(usize, FieldElem)> = row.into_iter().filter(|(j, _)| *j != piv).collect();
            let mut reduced = self.reduce(tail);
            reduced.insert(piv, self.ctx.one());
            self.rows[r].1 = reduced.into_iter().collect();
        }
    }

    /// Basis of the solution space of `row · x = 0` for all stored rows.
    pub fn nullspace(&self) -> Vec<Vec<FieldElem>> {
        let mut full = self.clone();
        full.reduce_fully();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !full.pivot_row.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.ctx.zero(); self.ncols];
                v[f] = self.ctx.one();
                for (piv, row) in &full.rows {
                    if let Some((_, x)) = row.iter().find(|(j, _)| *j == f) {
                        v[*piv] = -x;
                    }
                }
                v
            })
            .collect()
    }
}
