//! Dense exact matrices over Q or a prime field.
//!
//! Row-major storage. Shape mismatches in operators are programming
//! errors and panic; semantic failures (inconsistent systems, singular
//! inverses) are `None`. All elimination is fraction-free only in the
//! sense that scalars stay exact; no pivoting heuristics are needed.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Field, FieldScalar};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: Vec<FieldScalar>,
}

/// Row echelon data: the reduced matrix and its pivot columns.
pub struct Rref {
    pub mat: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, entries: Vec<FieldScalar>) -> Result<Matrix> {
        if entries.len() != rows * cols {
            return Err(Error::invalid(format!(
                "matrix data has {} entries, expected {}x{}",
                entries.len(),
                rows,
                cols
            )));
        }
        for e in &entries {
            if e.field() != field {
                return Err(Error::invalid(format!(
                    "matrix entry over {} in a matrix over {}",
                    e.field(),
                    field
                )));
            }
        }
        Ok(Matrix { rows, cols, field, entries })
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldScalar,
    ) -> Matrix {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, field, entries }
    }

    /// Test helper: build from integer rows.
    pub fn from_i64_rows(field: Field, data: &[&[i64]]) -> Matrix {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        Matrix::from_fn(field, rows, cols, |i, j| field.from_i64(data[i][j]))
    }

    pub fn column_vector(field: Field, v: Vec<FieldScalar>) -> Matrix {
        let rows = v.len();
        Matrix { rows, cols: 1, field, entries: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &FieldScalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: FieldScalar) {
        debug_assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[FieldScalar] {
        &self.entries
    }

    /// Column `j` as a flat vector.
    pub fn column(&self, j: usize) -> Vec<FieldScalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in add");
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).add(other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch in sub");
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            self.get(i, j).sub(other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).neg())
    }

    pub fn scale(&self, c: &FieldScalar) -> Matrix {
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(i, j).mul(c))
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        // i-k-j order with a zero skip: structure-constant matrices are
        // sparse, so skipping zero left entries dominates the cost model.
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix power by repeated squaring; `self` must be square.
    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols, "pow of non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.matmul(&base);
            }
            base = base.matmul(&base);
            e >>= 1;
        }
        acc
    }

    /// Kronecker product with the flat convention
    /// `(A (x) B)[(i*rB+k), (j*cB+l)] = A[i,j] * B[k,l]`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (ra, ca, rb, cb) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Matrix::zeros(self.field, ra * rb, ca * cb);
        for i in 0..ra {
            for j in 0..ca {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rb {
                    for l in 0..cb {
                        let b = other.get(k, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i * rb + k, j * cb + l, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Returns the matrix whose row `r` is row `perm[r]` of `self`; this
    /// computes `P * self` for the permutation matrix `P[r, perm[r]] = 1`
    /// without materializing `P`.
    pub fn permute_rows(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.rows, "permutation length mismatch");
        Matrix::from_fn(self.field, self.rows, self.cols, |i, j| self.get(perm[i], j).clone())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    /// Reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j).sub(&f.mul(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of `{ v : self * v = 0 }` as the columns of the returned
    /// matrix (shape `cols x nullity`). Free column `f` contributes the
    /// vector with `v[f] = 1` and `v[pivot_col(r)] = -rref[r][f]`.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { mat, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(self.field, self.cols, free.len());
        for (idx, &f) in free.iter().enumerate() {
            out.set(f, idx, self.field.one());
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, idx, mat.get(r, f).neg());
            }
        }
        out
    }

    /// Solves `self * X = rhs` column by column; `None` if inconsistent.
    /// When the system is underdetermined, free variables are set to 0.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        let aug = self.hstack(rhs);
        let Rref { mat, pivots } = aug.rref();
        // Any pivot in the rhs block marks an inconsistent column.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, mat.get(r, self.cols + j).clone());
            }
        }
        Some(x)
    }

    /// Exact inverse; `None` when singular. Input must be square.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let id = Matrix::identity(self.field, self.rows);
        let aug = self.hstack(&id);
        let Rref { mat, pivots } = aug.rref();
        if pivots.len() != self.rows || pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        Some(Matrix::from_fn(self.field, self.rows, self.cols, |i, j| {
            mat.get(i, self.cols + j).clone()
        }))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {} [", self.rows, self.cols, self.field)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| self.get(i, j).to_canonical_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// The flip `V (x) W -> W (x) V`, `e_i (x) e_j -> e_j (x) e_i`, as an
/// index permutation suitable for [`Matrix::permute_rows`] applied to a
/// matrix whose rows are indexed by `V (x) W`: entry `r = i*dim_w + j`
/// maps to position `j*dim_v + i`, so the inverse image of output row
/// `j*dim_v + i` is `i*dim_w + j`.
pub fn flip_row_perm(dim_v: usize, dim_w: usize) -> Vec<usize> {
    let mut perm = vec![0usize; dim_v * dim_w];
    for j in 0..dim_w {
        for i in 0..dim_v {
            perm[j * dim_v + i] = i * dim_w + j;
        }
    }
    perm
}

/// Row permutation for `1 (x) flip (x) 1` on `A (x) B (x) C (x) D`:
/// the middle two tensor legs swap, so output legs are ordered
/// `(A, C, B, D)` and output row `((i*dc + k)*db + j)*dd + l` reads
/// input row `((i*db + j)*dc + k)*dd + l`.
pub fn middle_flip_row_perm(da: usize, db: usize, dc: usize, dd: usize) -> Vec<usize> {
    let mut perm = vec![0usize; da * db * dc * dd];
    for i in 0..da {
        for k in 0..dc {
            for j in 0..db {
                for l in 0..dd {
                    let out = ((i * dc + k) * db + j) * dd + l;
                    let inp = ((i * db + j) * dc + k) * dd + l;
                    perm[out] = inp;
                }
            }
        }
    }
    perm
}
