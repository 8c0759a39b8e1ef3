use std::fmt;

use crate::error::{Error, Result};

use super::field::{Field, Scalar, Vector};

/// Dense matrix over a single field, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vector>) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r);
        }
        Ok(Matrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    /// Square or rectangular matrix from integer rows (reduced into the field).
    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            field,
            cols,
            rows.iter().map(|r| field.vector_from_ints(r)).collect(),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Reduced row echelon form, keeping the shape (zero rows at the bottom).
    pub fn rref(&self) -> Matrix {
        self.rref_with_pivots().0
    }

    /// Reduced row echelon form plus its pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut rows = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
                continue;
            };
            rows.swap(r, k);
            let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
            rows[r] = f.scale_vector(&inv, &rows[r]);
            let pivot_row = rows[r].clone();
            for (k, row) in rows.iter_mut().enumerate() {
                if k != r && !row[c].is_zero() {
                    let c_k = f.neg(&row[c]);
                    f.axpy(row, &c_k, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let m = Matrix::from_rows(f, self.cols, rows).expect("same shape");
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// Basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> Vec<Vector> {
        let f = self.field;
        let (r, pivots) = self.rref_with_pivots();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = f.zero_vector(self.cols);
                v[fc] = f.one();
                for (k, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r.get(k, fc));
                }
                v
            })
            .collect()
    }

    /// Basis of `{y : y M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vector> {
        self.transpose().kernel()
    }

    /// `v M` for a row vector `v`.
    pub fn left_apply(&self, v: &[Scalar]) -> Vector {
        let f = self.field;
        let mut out = f.zero_vector(self.cols);
        for (i, c) in v.iter().enumerate() {
            f.axpy(&mut out, c, self.row(i));
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let rows = (0..self.rows).map(|i| other.left_apply(self.row(i))).collect();
        Matrix::from_rows(self.field, other.cols, rows)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
                format!("[{}]", r.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let f3 = Field::prime(3).unwrap();
        let m = Matrix::from_ints(f3, &[vec![1, 2], vec![1, 1]]).unwrap();
        assert_eq!(m.rref(), Matrix::identity(f3, 2));
        let z = Matrix::zeros(f3, 2, 3);
        assert_eq!(z.rref(), z);
        let q = Field::rationals();
        let m = Matrix::from_ints(q, &[vec![2, 4]]).unwrap();
        assert_eq!(m.rref(), Matrix::from_ints(q, &[vec![1, 2]]).unwrap());
    }

    #[test]
    fn kernel_is_annihilated() {
        let q = Field::rationals();
        let m = Matrix::from_ints(q, &[vec![1, 2, 3], vec![2, 4, 6]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            let col = Matrix::from_rows(q, 1, v.iter().map(|x| vec![x.clone()]).collect()).unwrap();
            assert!(m.mul(&col).unwrap().is_zero());
        }
        assert_eq!(m.left_kernel().len(), 1);
    }
}
