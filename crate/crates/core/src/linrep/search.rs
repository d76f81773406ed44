//! Invariant subspaces, intertwiners and isomorphism tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::{q, Matrix, Rational};
use super::rep::{generators_generate, Representation};
use super::subspace::{unit_vector, Subspace};
use crate::elements::{Monoid, MonoidTable};
use crate::error::{Error, Result};

/// Evidence that the algebra of a monoid over `Q` is semisimple. Only the
/// semisimplicity predicate can issue one.
#[derive(Clone, Debug)]
pub struct SemisimpleCertificate {
    monoid: MonoidTable,
    reason: String,
}

impl SemisimpleCertificate {
    pub(crate) fn issue(monoid: MonoidTable, reason: String) -> Self {
        SemisimpleCertificate { monoid, reason }
    }

    pub fn reason(&self) -> &str {
        &self.reason
    }

    pub fn covers(&self, monoid: &MonoidTable) -> bool {
        self.monoid.same_as(monoid)
    }

    fn check(&self, rep: &Representation) -> Result<()> {
        if self.covers(rep.monoid()) {
            Ok(())
        } else {
            Err(Error::CertificateMismatch)
        }
    }
}

/// Elements whose matrices determine the whole representation.
fn acting_elements(m: &MonoidTable) -> Vec<usize> {
    if generators_generate(m) {
        m.generators().to_vec()
    } else {
        (0..m.order()).collect()
    }
}

/// Least invariant subspace containing the seeds.
pub fn spin(rep: &Representation, seeds: &[Vec<Rational>]) -> Subspace {
    let gens = acting_elements(rep.monoid());
    let mut span = Subspace::zero(rep.dim());
    let mut pending: Vec<Vec<Rational>> = seeds.to_vec();
    while let Some(v) = pending.pop() {
        if span.contains(&v) {
            continue;
        }
        span = span.add_vector(&v);
        for &g in &gens {
            pending.push(rep.matrix(g).mul_vec(&v));
        }
    }
    span
}

/// Basis of `{X : X φ_V(s) = φ_U(s) X for all s}`, matrices of shape
/// `dim U × dim V`.
pub fn intertwiner_space(v: &Representation, u: &Representation) -> Result<Vec<Matrix>> {
    if !v.monoid().same_as(u.monoid()) {
        return Err(Error::MonoidMismatch(v.monoid().order(), u.monoid().order()));
    }
    let (dv, du) = (v.dim(), u.dim());
    let unknowns = dv * du;
    let unflatten = |x: &[Rational]| {
        let mut m = Matrix::zeros(du, dv);
        for (k, val) in x.iter().enumerate() {
            if !val.is_zero() {
                m.set(k / dv, k % dv, val.clone());
            }
        }
        m
    };
    let mut basis: Vec<Matrix> = (0..unknowns)
        .map(|k| unflatten(&unit_vector(unknowns, k)))
        .collect();
    for s in acting_elements(v.monoid()) {
        if basis.is_empty() {
            break;
        }
        let residues: Vec<Matrix> = basis
            .iter()
            .map(|x| &(x * v.matrix(s)) - &(u.matrix(s) * x))
            .collect();
        let mut system = Matrix::zeros(unknowns, basis.len());
        for (j, r) in residues.iter().enumerate() {
            for a in 0..du {
                for b in 0..dv {
                    let val = r.get(a, b);
                    if !val.is_zero() {
                        system.set(a * dv + b, j, val.clone());
                    }
                }
            }
        }
        let kernel = system.kernel_basis();
        basis = kernel
            .iter()
            .map(|c| {
                let mut acc = Matrix::zeros(du, dv);
                for (ci, x) in c.iter().zip(&basis) {
                    if !ci.is_zero() {
                        acc = &acc + &x.scale(ci);
                    }
                }
                acc
            })
            .collect();
    }
    Ok(basis)
}

pub fn hom_space(v: &Representation, u: &Representation) -> Result<Vec<Matrix>> {
    intertwiner_space(v, u)
}

pub fn commutant(rep: &Representation) -> Vec<Matrix> {
    intertwiner_space(rep, rep).expect("same monoid")
}

pub fn commutant_dim(rep: &Representation) -> usize {
    commutant(rep).len()
}

/// A family of invariant lines: every nonzero vector of `space` spans a
/// line on which the generators act by `scalars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineFamily {
    pub generators: Vec<usize>,
    pub scalars: Vec<i64>,
    pub space: Subspace,
}

/// All 1-dimensional subrepresentations, grouped by the scalar each
/// generator acts by. In a finite monoid `s^(k+p) = s^k`, so a rational
/// scalar is 0 or a root of unity, hence one of -1, 0, 1.
pub fn one_dim_invariant_lines(rep: &Representation) -> Vec<LineFamily> {
    let gens = acting_elements(rep.monoid());
    let m = rep.monoid();
    let candidates: Vec<Vec<i64>> = gens
        .iter()
        .map(|&g| {
            let g2 = m.mul(g, g);
            if g2 == g {
                vec![0, 1]
            } else if is_unit(m, g) {
                vec![-1, 1]
            } else {
                vec![-1, 0, 1]
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut scalars = Vec::new();
    lines_dfs(rep, &gens, &candidates, Subspace::full(rep.dim()), &mut scalars, &mut out);
    out
}

fn is_unit(m: &MonoidTable, g: usize) -> bool {
    (0..m.order()).any(|h| m.mul(g, h) == m.identity())
}

fn lines_dfs(
    rep: &Representation,
    gens: &[usize],
    candidates: &[Vec<i64>],
    current: Subspace,
    scalars: &mut Vec<i64>,
    out: &mut Vec<LineFamily>,
) {
    let k = scalars.len();
    if k == gens.len() {
        out.push(LineFamily {
            generators: gens.to_vec(),
            scalars: scalars.clone(),
            space: current,
        });
        return;
    }
    for &lambda in &candidates[k] {
        let shifted = rep.matrix(gens[k]) - &Matrix::identity(rep.dim()).scale(&q(lambda));
        let next = current.intersect(&Subspace::kernel(&shifted));
        if next.is_zero() {
            continue;
        }
        scalars.push(lambda);
        lines_dfs(rep, gens, candidates, next, scalars, out);
        scalars.pop();
    }
}

/// Characteristic polynomial coefficients `c_0..=c_n` (monic) by the
/// Faddeev-LeVerrier recurrence.
pub fn characteristic_polynomial(a: &Matrix) -> Vec<Rational> {
    let n = a.rows();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut mk = Matrix::zeros(n, n);
    let id = Matrix::identity(n);
    for k in 1..=n {
        mk = &(a * &mk) + &id.scale(&c[n - k + 1]);
        let t = (a * &mk).trace();
        c[n - k] = -t / q(k as i64);
    }
    c
}

fn eval_poly(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, ci| acc * x + ci)
}

/// Rational eigenvalues of `a`, ascending. Candidates are integers of the
/// integral matrix `d·a` bounded by its absolute row sums; the search is
/// abandoned above a fixed bound.
pub fn rational_eigenvalues(a: &Matrix) -> Vec<Rational> {
    let n = a.rows();
    if n == 0 {
        return Vec::new();
    }
    let mut d = BigInt::one();
    for i in 0..n {
        for x in a.row(i) {
            d = d.lcm(x.denom());
        }
    }
    let dq = Rational::from_integer(d.clone());
    let b = a.scale(&dq);
    let bound = (0..n)
        .map(|i| b.row(i).iter().map(|x| x.abs()).sum::<Rational>())
        .max()
        .unwrap_or_else(Rational::zero);
    let Some(bound) = bound.to_integer().to_i64().filter(|&x| x <= 10_000) else {
        return Vec::new();
    };
    let poly = characteristic_polynomial(&b);
    (-bound..=bound)
        .filter(|&t| eval_poly(&poly, &q(t)).is_zero())
        .map(|t| q(t) / &dq)
        .collect()
}

/// Proper invariant subspaces cut out by commutant elements: kernels of
/// `X - λI` for rational eigenvalues `λ`.
pub fn commutant_splittings(rep: &Representation) -> Vec<Subspace> {
    let d = rep.dim();
    let mut out: Vec<Subspace> = Vec::new();
    for x in commutant(rep) {
        for lambda in rational_eigenvalues(&x) {
            let k = Subspace::kernel(&(&x - &Matrix::identity(d).scale(&lambda)));
            if !k.is_zero() && !k.is_full() && !out.contains(&k) {
                out.push(k);
            }
        }
    }
    out
}

/// Outcome of an irreducibility query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Yes,
    No(Subspace),
    Undetermined,
}

#[derive(Clone, Copy, Debug)]
pub enum IrreducibilityMode<'a> {
    Semisimple(&'a SemisimpleCertificate),
    Search,
}

/// Seeds tried by the witness search: standard vectors and eigenvectors of
/// every element for eigenvalues -1, 0, 1.
fn seed_family(rep: &Representation) -> Vec<Vec<Rational>> {
    let d = rep.dim();
    let mut seeds: Vec<Vec<Rational>> = (0..d).map(|i| unit_vector(d, i)).collect();
    for s in 0..rep.monoid().order() {
        for lambda in [-1, 0, 1] {
            let shifted = rep.matrix(s) - &Matrix::identity(d).scale(&q(lambda));
            for v in shifted.kernel_basis() {
                if !seeds.contains(&v) {
                    seeds.push(v);
                }
            }
        }
    }
    seeds
}

/// Order in which the witness search visits its seeds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedOrder {
    Forward,
    Reverse,
}

/// A proper nonzero invariant subspace, if the search finds one.
pub fn find_invariant_subspace(rep: &Representation) -> Option<Subspace> {
    find_invariant_subspace_with(rep, SeedOrder::Forward)
}

pub fn find_invariant_subspace_with(rep: &Representation, order: SeedOrder) -> Option<Subspace> {
    let d = rep.dim();
    if d == 1 {
        return None;
    }
    let lines = one_dim_invariant_lines(rep);
    let family = match order {
        SeedOrder::Forward => lines.first(),
        SeedOrder::Reverse => lines.last(),
    };
    if let Some(f) = family {
        let basis = f.space.basis();
        let row = match order {
            SeedOrder::Forward => 0,
            SeedOrder::Reverse => basis.rows() - 1,
        };
        return Some(Subspace::span(d, &[basis.row(row).to_vec()]));
    }
    let mut seeds = seed_family(rep);
    if order == SeedOrder::Reverse {
        seeds.reverse();
    }
    for seed in seeds {
        let u = spin(rep, &[seed]);
        if !u.is_zero() && !u.is_full() {
            return Some(u);
        }
    }
    commutant_splittings(rep).into_iter().next()
}

pub fn is_irreducible(rep: &Representation, mode: IrreducibilityMode<'_>) -> Result<Irreducibility> {
    if rep.dim() == 1 {
        return Ok(Irreducibility::Yes);
    }
    match mode {
        IrreducibilityMode::Semisimple(cert) => {
            cert.check(rep)?;
            if commutant_dim(rep) == 1 {
                Ok(Irreducibility::Yes)
            } else {
                Ok(find_invariant_subspace(rep).map_or(Irreducibility::Undetermined, Irreducibility::No))
            }
        }
        IrreducibilityMode::Search => {
            Ok(find_invariant_subspace(rep).map_or(Irreducibility::Undetermined, Irreducibility::No))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoResult {
    /// Isomorphic; the witness `X` satisfies `X φ_V(s) = φ_U(s) X` when found.
    Iso(Option<Matrix>),
    NotIso,
    Undetermined,
}

const WITNESS_SAMPLES: usize = 2000;

pub fn iso_test(
    v: &Representation,
    u: &Representation,
    cert: Option<&SemisimpleCertificate>,
) -> Result<IsoResult> {
    if !v.monoid().same_as(u.monoid()) {
        return Err(Error::MonoidMismatch(v.monoid().order(), u.monoid().order()));
    }
    if let Some(c) = cert {
        c.check(v)?;
    }
    if v.dim() != u.dim() || v.character() != u.character() {
        return Ok(IsoResult::NotIso);
    }
    let basis = intertwiner_space(v, u)?;
    if let Some(x) = invertible_combination(&basis) {
        return Ok(IsoResult::Iso(Some(x)));
    }
    if cert.is_some() {
        Ok(IsoResult::Iso(None))
    } else {
        Ok(IsoResult::Undetermined)
    }
}

/// Searches small integer combinations (coefficients -2..=2) of `basis` for
/// an invertible matrix.
fn invertible_combination(basis: &[Matrix]) -> Option<Matrix> {
    let k = basis.len();
    if k == 0 {
        return None;
    }
    let combine = |c: &[i64]| {
        let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
        for (ci, x) in c.iter().zip(basis) {
            if *ci != 0 {
                acc = &acc + &x.scale(&q(*ci));
            }
        }
        acc
    };
    for x in basis {
        if x.is_invertible() {
            return Some(x.clone());
        }
    }
    let all = combine(&vec![1; k]);
    if all.is_invertible() {
        return Some(all);
    }
    if k <= 6 {
        let mut c = vec![-2i64; k];
        loop {
            let x = combine(&c);
            if x.is_invertible() {
                return Some(x);
            }
            let mut i = 0;
            while i < k && c[i] == 2 {
                c[i] = -2;
                i += 1;
            }
            if i == k {
                return None;
            }
            c[i] += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1505);
    for _ in 0..WITNESS_SAMPLES {
        let c: Vec<i64> = (0..k).map(|_| rng.gen_range(-2..=2)).collect();
        let x = combine(&c);
        if x.is_invertible() {
            return Some(x);
        }
    }
    None
}

/// An equivariant projection onto the invariant subspace `u`: an element of
/// the commutant fixing `u` pointwise with image inside `u`.
pub fn equivariant_projection(rep: &Representation, u: &Subspace) -> Option<Matrix> {
    let d = rep.dim();
    let comm = commutant(rep);
    let k = comm.len();
    let ub = u.basis_vectors();
    let ann = u.annihilator().basis_vectors();
    // unknowns c_1..c_k with sum c_i X_i b = b and a·(sum c_i X_i) e_j = 0
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for b in &ub {
        let images: Vec<Vec<Rational>> = comm.iter().map(|x| x.mul_vec(b)).collect();
        for r in 0..d {
            let mut row: Vec<Rational> = images.iter().map(|im| im[r].clone()).collect();
            row.push(b[r].clone());
            rows.push(row);
        }
    }
    for a in &ann {
        for j in 0..d {
            let mut row: Vec<Rational> = comm
                .iter()
                .map(|x| (0..d).map(|r| &a[r] * x.get(r, j)).sum())
                .collect();
            row.push(Rational::zero());
            rows.push(row);
        }
    }
    let aug = Matrix::from_vectors(k + 1, &rows);
    let rr = aug.rref();
    if rr.pivots.contains(&k) {
        return None;
    }
    let mut c = vec![Rational::zero(); k];
    for (i, &p) in rr.pivots.iter().enumerate() {
        c[p] = rr.echelon.get(i, k).clone();
    }
    let mut p = Matrix::zeros(d, d);
    for (ci, x) in c.iter().zip(&comm) {
        if !ci.is_zero() {
            p = &p + &x.scale(ci);
        }
    }
    Some(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::{full_transformation_monoid, symmetric_group, symmetric_inverse_monoid};
    use crate::linrep::rep::mapping_rep;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn spin_examples() {
        let s4 = symmetric_group(4);
        let v4 = mapping_rep(&s4).unwrap();
        assert_eq!(spin(&v4, &[v(&[1, 1, 1, 1])]).dim(), 1);
        let i3 = symmetric_inverse_monoid(3);
        let w = mapping_rep(&i3).unwrap();
        for seed in [v(&[1, 0, 0]), v(&[1, -1, 0]), v(&[2, 5, -1])] {
            assert!(spin(&w, &[seed]).is_full());
        }
        let t3 = full_transformation_monoid(3);
        let m = mapping_rep(&t3).unwrap();
        let wsp = spin(&m, &[v(&[1, -1, 0])]);
        assert_eq!(wsp.dim(), 2);
        assert!(wsp.contains(&v(&[0, 1, -1])));
    }

    #[test]
    fn commutant_dims() {
        let s3 = symmetric_group(3);
        assert_eq!(commutant_dim(&Representation::trivial(&s3)), 1);
        for n in 2..=4 {
            let sn = symmetric_group(n);
            assert_eq!(commutant_dim(&mapping_rep(&sn).unwrap()), 2);
        }
        let i3 = symmetric_inverse_monoid(3);
        assert_eq!(commutant_dim(&mapping_rep(&i3).unwrap()), 1);
    }

    #[test]
    fn commutant_trap_on_t3() {
        let t3 = full_transformation_monoid(3);
        let m = mapping_rep(&t3).unwrap();
        assert_eq!(commutant_dim(&m), 1);
        match is_irreducible(&m, IrreducibilityMode::Search).unwrap() {
            Irreducibility::No(w) => {
                assert_eq!(w.dim(), 2);
                assert!(m.is_invariant(&w));
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn invariant_lines() {
        let t3 = full_transformation_monoid(3);
        assert!(one_dim_invariant_lines(&mapping_rep(&t3).unwrap()).is_empty());
        let s4 = symmetric_group(4);
        let lines = one_dim_invariant_lines(&mapping_rep(&s4).unwrap());
        assert_eq!(lines.len(), 1);
        assert_eq!(lines[0].space, Subspace::span(4, &[v(&[1, 1, 1, 1])]));
        let triv = one_dim_invariant_lines(&Representation::trivial(&t3));
        assert_eq!(triv.len(), 1);
        assert!(triv[0].space.is_full());
    }

    #[test]
    fn iso_with_itself_and_sum() {
        let s3 = symmetric_group(3);
        let m = mapping_rep(&s3).unwrap();
        assert!(matches!(iso_test(&m, &m, None).unwrap(), IsoResult::Iso(Some(_))));
        let t = Representation::trivial(&s3);
        assert_eq!(iso_test(&m, &t, None).unwrap(), IsoResult::NotIso);
    }

    #[test]
    fn charpoly_and_eigenvalues() {
        let a = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(characteristic_polynomial(&a), v(&[6, -5, 1]));
        assert_eq!(rational_eigenvalues(&a), v(&[2, 3]));
        let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        assert!(rational_eigenvalues(&rot).is_empty());
    }

    #[test]
    fn projection_splits_mapping_rep() {
        let s3 = symmetric_group(3);
        let m = mapping_rep(&s3).unwrap();
        let line = Subspace::span(3, &[v(&[1, 1, 1])]);
        let p = equivariant_projection(&m, &line).unwrap();
        assert_eq!(&p * &p, p);
        let comp = Subspace::kernel(&p);
        assert_eq!(comp.dim(), 2);
        assert!(m.is_invariant(&comp));
        assert!(comp.contains(&v(&[1, -1, 0])));
    }
}
