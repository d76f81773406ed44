use num_traits::{One, Zero};

use super::matrix::{Matrix, Rational};

/// A subspace of `Q^n`, stored as the nonzero rows of its reduced row
/// echelon form. Two subspaces are equal iff their bases are identical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        Self::from_rows(&Matrix::from_vectors(ambient, vectors))
    }

    /// Row space of `m`.
    pub fn from_rows(m: &Matrix) -> Self {
        let rr = m.rref();
        Subspace {
            ambient: m.cols(),
            basis: rr.echelon,
            pivots: rr.pivots,
        }
    }

    /// Column space of `m`.
    pub fn column_space(m: &Matrix) -> Self {
        Self::from_rows(&m.transpose())
    }

    pub fn kernel(m: &Matrix) -> Self {
        Self::span(m.cols(), &m.kernel_basis())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Basis rows in echelon form.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the basis components of `v`, leaving a vector that vanishes
    /// on every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = r[p].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in r.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::from_rows(&self.basis.vstack(&other.basis))
    }

    /// Annihilator `{x : b·x = 0 for every basis row b}`.
    pub fn annihilator(&self) -> Subspace {
        Subspace::kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Standard basis indices completing this subspace to the whole space.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    pub fn add_vector(&self, v: &[Rational]) -> Subspace {
        if self.contains(v) {
            return self.clone();
        }
        self.sum(&Subspace::span(self.ambient, &[v.to_vec()]))
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
