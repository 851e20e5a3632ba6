//! Exact Gauss-Jordan inversion over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<BigRational>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            n,
            data: vec![BigRational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = BigRational::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.n + j] = value;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.n {
                self.data.swap(a * self.n + j, b * self.n + j);
            }
        }
    }

    /// Inverse by Gauss-Jordan elimination. The pivot in each column is the
    /// non-zero entry whose numerator has the most bits; zero multipliers are
    /// skipped, which keeps sparse Laplacians cheap.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .filter(|&r| !a.get(r, col).is_zero())
                .max_by_key(|&r| a.get(r, col).numer().bits())
                .ok_or(Error::SingularSystem)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);

            let scale = a.get(col, col).recip();
            for j in 0..n {
                let idx = col * n + j;
                if !a.data[idx].is_zero() {
                    a.data[idx] *= &scale;
                }
                if !inv.data[idx].is_zero() {
                    inv.data[idx] *= &scale;
                }
            }

            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let factor = a.get(r, col).clone();
                for j in 0..n {
                    let src = col * n + j;
                    if !a.data[src].is_zero() {
                        let delta = &factor * &a.data[src];
                        a.data[r * n + j] -= delta;
                    }
                    if !inv.data[src].is_zero() {
                        let delta = &factor * &inv.data[src];
                        inv.data[r * n + j] -= delta;
                    }
                }
            }
        }
        Ok(inv)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.data[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{integer, rational};

    fn from_rows(rows: &[&[i64]]) -> Matrix {
        let mut m = Matrix::zeros(rows.len());
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, integer(x));
            }
        }
        m
    }

    #[test]
    fn inverts_exactly() {
        let m = from_rows(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        let inv = m.inverse().unwrap();
        assert_eq!(*inv.get(0, 0), rational(3, 4));
        assert_eq!(*inv.get(0, 2), rational(1, 4));
        assert_eq!(m.mul(&inv), Matrix::identity(3));
    }

    #[test]
    fn needs_row_swap() {
        let m = from_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(m.inverse().unwrap(), m);
    }

    #[test]
    fn singular() {
        let m = from_rows(&[&[1, -1], &[-1, 1]]);
        assert_eq!(m.inverse(), Err(Error::SingularSystem));
    }
}
