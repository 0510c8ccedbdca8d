//! Dense row-major matrices, the Berkowitz characteristic polynomial and
//! fraction-free rank.

use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} times {}x{} matrix",
                v.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![T::zero(); self.cols];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in self.row(i).iter().enumerate() {
                out[j] = out[j].clone() + a.clone() * b.clone();
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
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
        Ok(out)
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Determinant through the characteristic polynomial (division-free).
    pub fn det(&self) -> Result<T> {
        let p = charpoly(self)?;
        let c0 = p.coeff(0);
        Ok(if self.rows % 2 == 0 { c0 } else { -c0 })
    }
}

fn dot<T: Ring>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// Characteristic polynomial `det(xI - m)` by Berkowitz's algorithm.
///
/// Only ring operations are used, so integer input stays integral
/// throughout. Cost is `O(n^4)` ring operations.
pub fn charpoly<T: Ring>(m: &Matrix<T>) -> Result<Polynomial<T>> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    // Descending coefficients of the charpoly of the leading r x r block.
    let mut acc: Vec<T> = vec![T::one()];
    for r in 0..n {
        // Toeplitz column [1, -a_rr, -R S, -R M S, ..., -R M^{r-1} S]
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(T::one());
        toeplitz.push(-m[(r, r)].clone());
        let row: Vec<T> = (0..r).map(|j| m[(r, j)].clone()).collect();
        let mut col: Vec<T> = (0..r).map(|i| m[(i, r)].clone()).collect();
        for _ in 0..r {
            toeplitz.push(-dot(&row, &col));
            col = (0..r)
                .map(|i| {
                    (0..r).fold(T::zero(), |s, j| {
                        let a = &m[(i, j)];
                        if a.is_zero() {
                            s
                        } else {
                            s + a.clone() * col[j].clone()
                        }
                    })
                })
                .collect();
        }
        let mut next = vec![T::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, c) in acc.iter().enumerate().take(i + 1) {
                let t = &toeplitz[i - j];
                if !t.is_zero() && !c.is_zero() {
                    *slot = slot.clone() + t.clone() * c.clone();
                }
            }
        }
        acc = next;
    }
    Ok(Polynomial::from_descending(acc))
}

impl Matrix<BigInt> {
    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let Some(pivot) = (rank..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            if pivot != rank {
                for j in 0..a.cols {
                    a.data.swap(pivot * a.cols + j, rank * a.cols + j);
                }
            }
            let p = a[(rank, col)].clone();
            for i in rank + 1..a.rows {
                let f = a[(i, col)].clone();
                for j in col..a.cols {
                    let v = &p * &a[(i, j)] - &f * &a[(rank, j)];
                    // Bareiss: the division is exact
                    a[(i, j)] = v / &prev;
                }
            }
            prev = p;
            rank += 1;
        }
        rank
    }
}

/// Exact rank over the rationals: each row is scaled to integers and the
/// result eliminated fraction-free.
pub fn matrix_rank_exact(m: &Matrix<BigRational>) -> usize {
    let scaled = Matrix::from_fn(m.rows, m.cols, |i, j| {
        let lcm = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        (&m[(i, j)] * BigRational::from_integer(lcm)).to_integer()
    });
    scaled.rank()
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    #[serde(with = "super::decimal::grid")]
    entries: Vec<Vec<BigInt>>,
}

impl Serialize for Matrix<BigInt> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixRepr { rows: self.rows, cols: self.cols, entries: self.to_rows() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix<BigInt> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = MatrixRepr::deserialize(d)?;
        let m = if r.entries.is_empty() {
            Matrix::zeros(r.rows, r.cols)
        } else {
            Matrix::from_rows(r.entries).map_err(D::Error::custom)?
        };
        if m.rows != r.rows || m.cols != r.cols {
            return Err(D::Error::custom("matrix shape does not match its entries"));
        }
        Ok(m)
    }
}
