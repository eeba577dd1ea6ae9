//! Dense exact linear algebra over GF(q): reduced row echelon form, rank,
//! and row-space membership. Pivoting picks the first nonzero entry; over an
//! exact field no other strategy is needed.

use crate::error::{Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// Dense row-major matrix over a finite field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGF {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl MatrixGF {
    pub fn zeros(ctx: &FieldCtx, rows: usize, cols: usize) -> MatrixGF {
        MatrixGF { ctx: ctx.clone(), rows, cols, data: vec![FieldElem::ZERO; rows * cols] }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> MatrixGF {
        let mut m = MatrixGF::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    /// Matrix from explicit rows; all rows must have the same length.
    pub fn from_rows(ctx: &FieldCtx, rows: Vec<Vec<FieldElem>>) -> MatrixGF {
        let n = rows.len();
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let data = rows.into_iter().flatten().collect();
        MatrixGF { ctx: ctx.clone(), rows: n, cols, data }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Reduced row echelon form with its rank and pivot columns.
    pub fn rref(&self) -> (MatrixGF, usize, Vec<usize>) {
        let mut m = self.clone();
        let ctx = m.ctx.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pivot_row) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pivot_row);
            let inv = ctx.inv(m.get(r, col)).expect("nonzero pivot");
            m.scale_row(r, inv, &ctx);
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, col);
                    if !factor.is_zero() {
                        m.sub_scaled_row(i, r, factor, &ctx);
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// True iff v is a linear combination of the rows, by comparing the rank
    /// of the matrix with and without v appended.
    pub fn in_row_space(&self, v: &[FieldElem]) -> Result<bool> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: v.len() });
        }
        let space = RowSpace::from_rows(&self.ctx, self.cols, (0..self.rows).map(|i| self.row(i).to_vec()));
        Ok(space.contains(v))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, c: FieldElem, ctx: &FieldCtx) {
        for j in 0..self.cols {
            let v = self.get(i, j);
            self.set(i, j, ctx.mul(v, c));
        }
    }

    /// row_i -= c * row_k
    fn sub_scaled_row(&mut self, i: usize, k: usize, c: FieldElem, ctx: &FieldCtx) {
        for j in 0..self.cols {
            let v = ctx.sub(self.get(i, j), ctx.mul(c, self.get(k, j)));
            self.set(i, j, v);
        }
    }
}

/// An incrementally built row space in reduced echelon form. The workhorse
/// behind every ideal-containment test: insert spanning rows once, then
/// reduce query vectors against the pivots.
#[derive(Debug, Clone)]
pub struct RowSpace {
    ctx: FieldCtx,
    cols: usize,
    /// Echelon rows, each with a recorded pivot column, kept reduced.
    rows: Vec<(usize, Vec<FieldElem>)>,
}

impl RowSpace {
    pub fn new(ctx: &FieldCtx, cols: usize) -> RowSpace {
        RowSpace { ctx: ctx.clone(), cols, rows: Vec::new() }
    }

    pub fn from_rows<I>(ctx: &FieldCtx, cols: usize, rows: I) -> RowSpace
    where
        I: IntoIterator<Item = Vec<FieldElem>>,
    {
        let mut s = RowSpace::new(ctx, cols);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce v against the echelon rows in place; the result is the normal
    /// form of v modulo the space.
    fn reduce(&self, v: &mut [FieldElem]) {
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c.is_zero() {
                continue;
            }
            for j in *pivot..self.cols {
                v[j] = self.ctx.sub(v[j], self.ctx.mul(c, row[j]));
            }
        }
    }

    /// Insert a row; returns true if it enlarged the space.
    pub fn insert(&mut self, mut v: Vec<FieldElem>) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        self.reduce(&mut v);
        let Some(pivot) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = self.ctx.inv(v[pivot]).expect("nonzero pivot");
        for c in v.iter_mut() {
            *c = self.ctx.mul(*c, inv);
        }
        // keep existing rows reduced against the new pivot
        for (_, row) in self.rows.iter_mut() {
            let c = row[pivot];
            if !c.is_zero() {
                for j in 0..self.cols {
                    let sub = self.ctx.mul(c, v[j]);
                    row[j] = self.ctx.sub(row[j], sub);
                }
            }
        }
        self.rows.push((pivot, v));
        self.rows.sort_by_key(|(p, _)| *p);
        true
    }

    pub fn contains(&self, v: &[FieldElem]) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|c| c.is_zero())
    }
}
