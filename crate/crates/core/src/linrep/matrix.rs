use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Rational = BigRational;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn q_frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats as `p/q` with `q > 0`, always including the denominator.
pub fn format_rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::Parse {
        text: text.to_string(),
        reason: "expected p/q".into(),
    };
    let t = text.trim();
    let (p, d) = match t.split_once('/') {
        Some((p, d)) => (p, d),
        None => (t, "1"),
    };
    let p: BigInt = p.trim().parse().map_err(|_| err())?;
    let d: BigInt = d.trim().parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(p, d))
}

/// Dense exact matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Reduced row echelon form together with derived data.
#[derive(Clone, Debug)]
pub struct Rref {
    pub echelon: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    /// Rows are the given vectors.
    pub fn from_vectors(cols: usize, vectors: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(0, cols);
        for v in vectors {
            assert_eq!(v.len(), cols);
            m.data.extend(v.iter().cloned());
            m.rows += 1;
        }
        m
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn scale(&self, k: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Product skipping zero entries of the left factor.
    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                if a.is_one() {
                    for (d, b) in dst.iter_mut().zip(row) {
                        if !b.is_zero() {
                            *d += b;
                        }
                    }
                } else {
                    for (d, b) in dst.iter_mut().zip(row) {
                        if !b.is_zero() {
                            *d += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Rows `rows`, columns `cols`.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Matrix::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            m.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        m
    }

    /// Exact reduced row echelon form by Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            if !inv.is_one() {
                for j in c..cols {
                    let x = &m.data[r * cols + j];
                    if !x.is_zero() {
                        m.data[r * cols + j] = x * &inv;
                    }
                }
            }
            let support: Vec<usize> = (c..cols).filter(|&j| !m.get(r, j).is_zero()).collect();
            let pivot_row: Vec<Rational> = support.iter().map(|&j| m.get(r, j).clone()).collect();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (&j, pv) in support.iter().zip(&pivot_row) {
                    let idx = i * cols + j;
                    m.data[idx] = &m.data[idx] - &f * pv;
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * cols);
        m.rows = r;
        Rref {
            echelon: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of `{x : self x = 0}`, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let rr = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in rr.pivots.iter().enumerate() {
                    v[p] = -rr.echelon.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Rational::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            for i in c + 1..n {
                let f = m.get(i, c) / &pivot;
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let idx = i * n + j;
                    m.data[idx] = &m.data[idx] - &f * m.get(c, j);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan on `[A | I]`.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let rr = aug.rref();
        if rr.rank < n || rr.pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(rr.echelon.submatrix(&rows, &cols))
    }

    pub fn max_abs_entry(&self) -> Rational {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.matmul(rhs)
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let rr = Matrix::identity(3).rref();
        assert_eq!(rr.rank, 3);
        assert!(Matrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn all_ones_kernel_is_a_plane() {
        let m = Matrix::from_i64(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
        assert_eq!(m.rank(), 1);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
            let s: Rational = v.iter().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Matrix::from_i64(&[&[2, 4, 1], &[1, 2, 0], &[3, 6, 1]]);
        let r1 = m.rref();
        let r2 = r1.echelon.rref();
        assert_eq!(r1.echelon, r2.echelon);
        assert_eq!(r1.pivots, vec![0, 2]);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(Matrix::from_i64(&[&[0, 1], &[1, 0]]).determinant(), q(-1));
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&q_frac(-2, 4)), "-1/2");
        assert_eq!(format_rational(&q(3)), "3/1");
        assert_eq!(parse_rational("6/-4").unwrap(), q_frac(-3, 2));
        assert_eq!(parse_rational("5").unwrap(), q(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn kronecker_shape() {
        let a = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let b = Matrix::identity(3);
        let k = a.kronecker(&b);
        assert_eq!((k.rows(), k.cols()), (6, 6));
        assert_eq!(k.trace(), q(0));
        assert_eq!(a.kronecker(&a).trace(), q(0));
        assert_eq!(b.kronecker(&b).trace(), q(9));
    }
}
