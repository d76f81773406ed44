use std::collections::VecDeque;
use std::sync::Arc;

use num_traits::One;

use super::matrix::{Matrix, Rational};
use super::subspace::Subspace;
use crate::elements::{Monoid, MonoidTable, PartialBijection, Permutation, Transformation};
use crate::error::{Error, Result};

/// A monoid homomorphism `S -> End(Q^dim)` stored as one matrix per element.
/// Matrices act on column vectors.
#[derive(Clone, Debug)]
pub struct Representation {
    dim: usize,
    monoid: MonoidTable,
    matrices: Arc<[Matrix]>,
}

/// Trace of every monoid element, in monoid index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Character(pub Vec<Rational>);

impl Character {
    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self, identity: usize) -> &Rational {
        &self.0[identity]
    }

    pub fn add(&self, other: &Character) -> Character {
        Character(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

pub fn char_equal(a: &Character, b: &Character) -> bool {
    a == b
}

impl Representation {
    /// Builds and verifies a representation. Every `φ(s)φ(g) = φ(sg)` for `g`
    /// a generator, together with `φ(1) = I`, implies the law for all pairs
    /// once the generators are known to generate; otherwise all pairs are
    /// checked.
    pub fn new<M: Monoid>(monoid: &M, matrices: Vec<Matrix>) -> Result<Self> {
        let rep = Self::new_unverified(monoid.handle(), matrices)?;
        rep.verify()?;
        Ok(rep)
    }

    pub(crate) fn new_unverified(monoid: MonoidTable, matrices: Vec<Matrix>) -> Result<Self> {
        if matrices.len() != monoid.order() {
            return Err(Error::Verification(format!(
                "{} matrices for a monoid of order {}",
                matrices.len(),
                monoid.order()
            )));
        }
        let dim = matrices[0].rows();
        if dim == 0 {
            return Err(Error::NullRepresentation);
        }
        if matrices.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Verification("matrices of mixed shape".into()));
        }
        Ok(Representation {
            dim,
            monoid,
            matrices: matrices.into(),
        })
    }

    /// Builds the matrix of every element from generator images by walking a
    /// right-multiplication search tree, then verifies.
    pub fn from_generator_images<M: Monoid>(monoid: &M, images: &[Matrix]) -> Result<Self> {
        let table = monoid.handle();
        let gens = table.generators().to_vec();
        if gens.len() != images.len() || images.is_empty() {
            return Err(Error::Verification("one image per generator expected".into()));
        }
        let dim = images[0].rows();
        let mut mats: Vec<Option<Matrix>> = vec![None; table.order()];
        mats[table.identity()] = Some(Matrix::identity(dim));
        let mut queue = VecDeque::from([table.identity()]);
        while let Some(x) = queue.pop_front() {
            for (k, &g) in gens.iter().enumerate() {
                let y = table.mul(x, g);
                if mats[y].is_none() {
                    mats[y] = Some(mats[x].as_ref().unwrap() * &images[k]);
                    queue.push_back(y);
                }
            }
        }
        let matrices = mats
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Verification("generators do not generate".into()))?;
        Self::new(&table, matrices)
    }

    pub fn from_fn<M: Monoid>(monoid: &M, f: impl Fn(usize) -> Matrix) -> Result<Self> {
        Self::new(monoid, (0..monoid.order()).map(f).collect())
    }

    /// The 1-dimensional representation sending every element to 1.
    pub fn trivial<M: Monoid>(monoid: &M) -> Self {
        Self::from_fn(monoid, |_| Matrix::identity(1)).expect("trivial representation")
    }

    fn verify(&self) -> Result<()> {
        let m = &self.monoid;
        if self.matrices[m.identity()] != Matrix::identity(self.dim) {
            return Err(Error::Verification("identity does not act as I".into()));
        }
        if !generators_generate(m) {
            return self.verify_all_pairs();
        }
        for s in 0..m.order() {
            for &g in m.generators() {
                if &self.matrices[s] * &self.matrices[g] != self.matrices[m.mul(s, g)] {
                    return Err(Error::Verification(format!(
                        "homomorphism law fails at ({s}, {g})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Checks `φ(s)φ(t) = φ(st)` for every pair.
    pub fn verify_all_pairs(&self) -> Result<()> {
        let m = &self.monoid;
        for s in 0..m.order() {
            for t in 0..m.order() {
                if &self.matrices[s] * &self.matrices[t] != self.matrices[m.mul(s, t)] {
                    return Err(Error::Verification(format!(
                        "homomorphism law fails at ({s}, {t})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn monoid(&self) -> &MonoidTable {
        &self.monoid
    }

    pub fn matrix(&self, s: usize) -> &Matrix {
        &self.matrices[s]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn character(&self) -> Character {
        Character(self.matrices.iter().map(|m| m.trace()).collect())
    }

    fn check_same(&self, other: &Representation) -> Result<()> {
        if self.monoid.same_as(&other.monoid) {
            Ok(())
        } else {
            Err(Error::MonoidMismatch(self.monoid.order(), other.monoid.order()))
        }
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation> {
        self.check_same(other)?;
        let matrices = self
            .matrices
            .iter()
            .zip(other.matrices.iter())
            .map(|(a, b)| a.block_diag(b))
            .collect();
        Representation::new(&self.monoid, matrices)
    }

    pub fn is_invariant(&self, u: &Subspace) -> bool {
        let gens = self.monoid.generators();
        let basis = u.basis_vectors();
        let check = |s: usize| basis.iter().all(|b| u.contains(&self.matrices[s].mul_vec(b)));
        if generators_generate(&self.monoid) {
            gens.iter().all(|&g| check(g))
        } else {
            (0..self.monoid.order()).all(check)
        }
    }

    /// The subrepresentation on `u`, in coordinates of its echelon basis.
    pub fn restrict(&self, u: &Subspace) -> Result<Representation> {
        if u.is_zero() {
            return Err(Error::NullRepresentation);
        }
        if !self.is_invariant(u) {
            return Err(Error::NotInvariant);
        }
        let basis = u.basis_vectors();
        let d = basis.len();
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                let mut out = Matrix::zeros(d, d);
                for (j, b) in basis.iter().enumerate() {
                    let c = u.coords(&m.mul_vec(b)).expect("invariant");
                    for (i, x) in c.into_iter().enumerate() {
                        out.set(i, j, x);
                    }
                }
                out
            })
            .collect();
        Representation::new(&self.monoid, matrices)
    }

    /// `V/U` on the classes of the standard vectors at non-pivot indices of `u`.
    pub fn quotient(&self, u: &Subspace) -> Result<Representation> {
        if u.is_full() {
            return Err(Error::NullRepresentation);
        }
        if !self.is_invariant(u) {
            return Err(Error::NotInvariant);
        }
        let comp = u.complement_indices();
        let d = comp.len();
        let matrices = self
            .matrices
            .iter()
            .map(|m| {
                let mut out = Matrix::zeros(d, d);
                for (j, &c) in comp.iter().enumerate() {
                    let w = u.reduce(&m.column(c));
                    for (i, &r) in comp.iter().enumerate() {
                        out.set(i, j, w[r].clone());
                    }
                }
                out
            })
            .collect();
        Representation::new(&self.monoid, matrices)
    }

    /// `P^{-1} φ(s) P` for an invertible `p`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Representation> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Invalid("change of basis is singular".into()))?;
        let matrices = self.matrices.iter().map(|m| &(&inv * m) * p).collect();
        Representation::new(&self.monoid, matrices)
    }

    /// The same matrices viewed over another handle of the same table.
    pub fn rebind(&self, monoid: &MonoidTable) -> Result<Representation> {
        if !self.monoid.same_as(monoid) {
            return Err(Error::MonoidMismatch(self.monoid.order(), monoid.order()));
        }
        Ok(Representation {
            dim: self.dim,
            monoid: monoid.clone(),
            matrices: self.matrices.clone(),
        })
    }
}

/// True when every element is reached from the identity by right
/// multiplication with generators.
pub(crate) fn generators_generate<M: Monoid>(m: &M) -> bool {
    let mut seen = vec![false; m.order()];
    seen[m.identity()] = true;
    let mut stack = vec![m.identity()];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &g in m.generators() {
            let y = m.mul(x, g);
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == m.order()
}

/// Elements acting on points `1..=n`, possibly partially.
pub trait PointMap {
    fn degree(&self) -> usize;
    fn image_of(&self, i: usize) -> Option<usize>;
}

impl PointMap for PartialBijection {
    fn degree(&self) -> usize {
        PartialBijection::degree(self)
    }
    fn image_of(&self, i: usize) -> Option<usize> {
        self.apply(i)
    }
}

impl PointMap for Transformation {
    fn degree(&self) -> usize {
        Transformation::degree(self)
    }
    fn image_of(&self, i: usize) -> Option<usize> {
        Some(self.apply(i))
    }
}

impl PointMap for Permutation {
    fn degree(&self) -> usize {
        Permutation::degree(self)
    }
    fn image_of(&self, i: usize) -> Option<usize> {
        Some(self.apply(i))
    }
}

/// The matrix with `v_i -> v_{s(i)}` for `i` in the domain and `v_i -> 0`
/// otherwise.
pub fn mapping_matrix<E: PointMap>(s: &E) -> Matrix {
    let n = s.degree();
    let mut m = Matrix::zeros(n, n);
    for i in 1..=n {
        if let Some(j) = s.image_of(i) {
            m.set(j - 1, i - 1, Rational::one());
        }
    }
    m
}

/// The mapping representation of an enumerated monoid of point maps.
pub fn mapping_rep<E>(monoid: &crate::elements::FiniteMonoid<E>) -> Result<Representation>
where
    E: PointMap + Clone + Eq + std::hash::Hash,
{
    Representation::from_fn(monoid, |s| mapping_matrix(monoid.element(s)))
}
