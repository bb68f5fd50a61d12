//! Dense matrices over GF(p^s) with plain Gaussian elimination.
//!
//! Arithmetic is exact, so there is no pivoting strategy beyond "first
//! nonzero entry in the column". Everything here is deterministic.

use crate::galois::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![FieldElement::Zero; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Matrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in &rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Empty (0 x cols) matrix, the generator of a zero code.
    pub fn empty(cols: usize) -> Matrix {
        Matrix {
            rows: 0,
            cols,
            data: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = f.mul(a, other.get(k, j));
                    out.set(i, j, f.add(out.get(i, j), prod));
                }
            }
        }
        out
    }

    /// Codeword for a message vector: m * G.
    pub fn encode(&self, message: &[FieldElement], f: &Field) -> Vec<FieldElement> {
        assert_eq!(message.len(), self.rows);
        let mut out = vec![FieldElement::Zero; self.cols];
        for (i, &m) in message.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(m, self.get(i, j)));
            }
        }
        out
    }

    /// Reduced row echelon form and the rank.
    pub fn rref(&self, f: &Field) -> (Matrix, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = f.inv(m.get(pivot_row, col));
            for j in col..m.cols {
                m.set(pivot_row, j, f.mul(inv, m.get(pivot_row, j)));
            }
            for i in 0..m.rows {
                if i == pivot_row || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col);
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(pivot_row, j)));
                    m.set(i, j, v);
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1
    }

    /// Basis of the right kernel {x : M x = 0}, one solution per row.
    pub fn right_kernel(&self, f: &Field) -> Matrix {
        let (r, rank) = self.rref(f);
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut row = 0;
        for col in 0..r.cols {
            if row < rank && !r.get(row, col).is_zero() {
                pivot_cols.push(col);
                row += 1;
            }
        }
        let free_cols: Vec<usize> = (0..r.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Matrix::zeros(free_cols.len(), r.cols);
        for (bi, &fc) in free_cols.iter().enumerate() {
            basis.set(bi, fc, FieldElement::ONE);
            for (pi, &pc) in pivot_cols.iter().enumerate() {
                basis.set(bi, pc, f.neg(r.get(pi, fc)));
            }
        }
        basis
    }

    /// Whether the row spaces of two matrices coincide.
    pub fn row_space_eq(&self, other: &Matrix, f: &Field) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let ra = self.rank(f);
        let rb = other.rank(f);
        if ra != rb {
            return false;
        }
        let mut stacked = self.clone();
        stacked.data.extend_from_slice(&other.data);
        stacked.rows += other.rows;
        stacked.rank(f) == ra
    }

    /// Row basis: RREF with zero rows dropped.
    pub fn row_basis(&self, f: &Field) -> Matrix {
        let (r, rank) = self.rref(f);
        Matrix {
            rows: rank,
            cols: r.cols,
            data: r.data[..rank * r.cols].to_vec(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}
