use std::collections::BTreeMap;

use super::{BuiltLattice, FiniteLattice, GroupAction, LatticeKind, LatticePoint};
use crate::elements::{closure, FiniteMonoid, Monoid, PartialBijection, Permutation};
use crate::error::{Error, Result};

/// An element `g_a` of `S(G, L)`. `g` is a group index (the least member of
/// its coset `g G^{<=a}`), `a` a lattice index. Ordered by `a`, then `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SglElement {
    pub a: u32,
    pub g: u32,
}

/// `G^a` (setwise stabilizer) and `G^{<=a}` (fixes every `c <= a`), as sorted
/// lists of group indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerPair {
    pub full: Vec<usize>,
    pub pointwise: Vec<usize>,
}

/// `G^a / G^{<=a}` presented by least coset representatives.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    pub stabilizers: StabilizerPair,
    /// Least member of each coset, sorted.
    pub coset_reps: Vec<usize>,
    /// `table[i * k + j]` is the coset of `reps[i] * reps[j]`.
    pub table: Vec<u32>,
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.coset_reps.len()
    }
}

/// The inverse monoid `S(G, L)` for a group acting on a finite lattice.
#[derive(Clone, Debug)]
pub struct SglMonoid {
    lattice: FiniteLattice,
    action: GroupAction,
    points: Option<Vec<LatticePoint>>,
    kind: Option<LatticeKind>,
    degree: usize,
    pointwise: Vec<Vec<usize>>,
    setwise: Vec<Vec<usize>>,
    canon: Vec<u32>,
}

impl SglMonoid {
    pub fn new(lattice: FiniteLattice, action: GroupAction) -> Self {
        let np = lattice.len();
        let group = action.group();
        let ng = group.len();
        let degree = group.element(0).degree();
        let mut pointwise = Vec::with_capacity(np);
        let mut setwise = Vec::with_capacity(np);
        for a in 0..np {
            let down = lattice.down_set(a);
            pointwise.push(
                (0..ng)
                    .filter(|&g| down.iter().all(|&c| action.act(g, c) == c))
                    .collect::<Vec<_>>(),
            );
            setwise.push((0..ng).filter(|&g| action.act(g, a) == a).collect::<Vec<_>>());
        }
        let mut canon = vec![0u32; np * ng];
        for a in 0..np {
            for g in 0..ng {
                let least = pointwise[a].iter().map(|&k| group.mul(g, k)).min().unwrap();
                canon[a * ng + g] = least as u32;
            }
        }
        SglMonoid {
            lattice,
            action,
            points: None,
            kind: None,
            degree,
            pointwise,
            setwise,
            canon,
        }
    }

    pub fn from_builtin(b: BuiltLattice) -> Self {
        let mut m = Self::new(b.lattice, b.action);
        m.points = Some(b.points);
        m.kind = Some(b.kind);
        m.degree = b.degree;
        m
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    pub fn group(&self) -> &FiniteMonoid<Permutation> {
        self.action.group()
    }

    pub fn kind(&self) -> Option<LatticeKind> {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn points(&self) -> Option<&[LatticePoint]> {
        self.points.as_deref()
    }

    pub fn point_label(&self, a: usize) -> String {
        match &self.points {
            Some(p) => p[a].to_string(),
            None => format!("#{a}"),
        }
    }

    pub fn permutation(&self, x: SglElement) -> &Permutation {
        self.group().element(x.g as usize)
    }

    pub fn label(&self, x: SglElement) -> String {
        format!("{}@{}", self.permutation(x), self.point_label(x.a as usize))
    }

    pub fn stabilizers(&self, a: usize) -> StabilizerPair {
        StabilizerPair {
            full: self.setwise[a].clone(),
            pointwise: self.pointwise[a].clone(),
        }
    }

    /// True when `pointwise` is a normal subgroup of `full`, both containing
    /// the identity.
    pub fn check_normal(&self, pair: &StabilizerPair) -> bool {
        let group = self.group();
        let id = group.identity();
        if !pair.full.contains(&id) || !pair.pointwise.contains(&id) {
            return false;
        }
        if !pair.pointwise.iter().all(|k| pair.full.contains(k)) {
            return false;
        }
        pair.full.iter().all(|&g| {
            let gi = self.action.group_inverse(g);
            pair.pointwise
                .iter()
                .all(|&k| pair.pointwise.contains(&group.mul(group.mul(g, k), gi)))
        })
    }

    /// `g_a` with `g` replaced by the least member of `g G^{<=a}`.
    pub fn canonical(&self, g: usize, a: usize) -> SglElement {
        let ng = self.group().len();
        SglElement {
            a: a as u32,
            g: self.canon[a * ng + g],
        }
    }

    /// The defining equality: `g_a = h_b` iff `a = b` and `g^{-1} h` fixes
    /// every `c <= a`. Computed directly, without the canonical table.
    pub fn equal_by_definition(&self, g: usize, a: usize, h: usize, b: usize) -> bool {
        if a != b {
            return false;
        }
        let group = self.group();
        let gih = group.mul(self.action.group_inverse(g), h);
        (0..self.lattice.len())
            .filter(|&c| self.lattice.leq(c, a))
            .all(|c| self.action.act(gih, c) == c)
    }

    /// `g_a h_b = (gh)_{h^{-1} a ∧ b}`.
    pub fn mul(&self, x: SglElement, y: SglElement) -> SglElement {
        let (g, a) = (x.g as usize, x.a as usize);
        let (h, b) = (y.g as usize, y.a as usize);
        let gh = self.group().mul(g, h);
        let pulled = self.action.act(self.action.group_inverse(h), a);
        self.canonical(gh, self.lattice.meet(pulled, b))
    }

    /// `(g_a)* = (g^{-1})_{g a}`.
    pub fn inv(&self, x: SglElement) -> SglElement {
        let (g, a) = (x.g as usize, x.a as usize);
        self.canonical(self.action.group_inverse(g), self.action.act(g, a))
    }

    pub fn identity_element(&self) -> SglElement {
        self.canonical(self.group().identity(), self.lattice.top())
    }

    pub fn idempotent(&self, a: usize) -> SglElement {
        self.canonical(self.group().identity(), a)
    }

    /// Units from the group generators plus one idempotent `id_a` per orbit;
    /// `g_1 id_a g^{-1}_1 = id_{g a}` and `g_1 id_a = g_a` give the rest.
    pub fn generating_set(&self) -> Vec<SglElement> {
        let top = self.lattice.top();
        let mut gens: Vec<SglElement> = self
            .group()
            .generators()
            .iter()
            .map(|&g| self.canonical(g, top))
            .collect();
        for orbit in self.action.orbits() {
            if orbit[0] != top {
                gens.push(self.idempotent(orbit[0]));
            }
        }
        gens
    }

    pub fn monoid(&self) -> Result<FiniteMonoid<SglElement>> {
        closure(&self.generating_set(), self.identity_element(), |x, y| self.mul(*x, *y))
    }

    /// All distinct canonical forms, by direct enumeration of `G × L`.
    pub fn canonical_elements(&self) -> Vec<SglElement> {
        let ng = self.group().len();
        let mut out: Vec<SglElement> = (0..self.lattice.len())
            .flat_map(|a| (0..ng).map(move |g| (g, a)))
            .map(|(g, a)| self.canonical(g, a))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `[G : G^{<=a}]` for every lattice point, and their sum.
    pub fn order_formula(&self) -> (usize, Vec<usize>) {
        let ng = self.group().len();
        let per: Vec<usize> = self.pointwise.iter().map(|k| ng / k.len()).collect();
        (per.iter().sum(), per)
    }

    /// Formula value and closure enumeration; errors if they disagree.
    pub fn order_report(&self) -> Result<OrderReport> {
        let (formula, per_point) = self.order_formula();
        let enumerated = self.monoid()?.len();
        if formula != enumerated {
            return Err(Error::Verification(format!(
                "order formula {formula} disagrees with enumeration {enumerated}"
            )));
        }
        let young_index_sum = (self.kind() == Some(LatticeKind::SetPartitions)).then(|| super::young_index_sum(self.degree()));
        Ok(OrderReport {
            formula,
            enumerated,
            per_point,
            young_index_sum,
        })
    }

    /// `G^a / G^{<=a}` with least coset representatives.
    pub fn maximal_subgroup_at(&self, a: usize) -> QuotientGroup {
        let stab = self.stabilizers(a);
        let group = self.group();
        let mut cosets: BTreeMap<u32, ()> = BTreeMap::new();
        for &g in &stab.full {
            cosets.insert(self.canonical(g, a).g, ());
        }
        let reps: Vec<usize> = cosets.keys().map(|&g| g as usize).collect();
        let k = reps.len();
        let mut table = vec![0u32; k * k];
        for (i, &x) in reps.iter().enumerate() {
            for (j, &y) in reps.iter().enumerate() {
                let prod = self.canonical(group.mul(x, y), a).g as usize;
                table[i * k + j] = reps.iter().position(|&r| r == prod).unwrap() as u32;
            }
        }
        QuotientGroup {
            stabilizers: stab,
            coset_reps: reps,
            table,
        }
    }

    /// For the subsets lattice: `g_a` as the partial bijection `g|_a`.
    pub fn to_partial(&self, x: SglElement) -> Result<PartialBijection> {
        match (&self.points, self.kind) {
            (Some(points), Some(LatticeKind::Subsets)) => {
                let LatticePoint::Subset(a) = &points[x.a as usize] else {
                    unreachable!()
                };
                let g = self.permutation(x);
                let pairs: Vec<(usize, usize)> = a.iter().map(|&i| (i, g.apply(i))).collect();
                PartialBijection::new(self.degree, &pairs)
            }
            _ => Err(Error::Invalid("restriction map needs the subsets lattice".into())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderReport {
    pub formula: usize,
    pub enumerated: usize,
    /// `[G : G^{<=a}]` per lattice point.
    pub per_point: Vec<usize>,
    /// The Young-subgroup index sum, for the partition lattice only.
    pub young_index_sum: Option<u64>,
}

impl OrderReport {
    /// Set when the definitional order of `S(S_n, Π(n))` differs from the
    /// Young-subgroup index sum.
    pub fn differs_from_young_index_sum(&self) -> bool {
        self.young_index_sum.is_some_and(|y| y != self.enumerated as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::make_lattice;

    fn sgl(kind: LatticeKind, n: usize) -> SglMonoid {
        SglMonoid::from_builtin(make_lattice(kind, n).unwrap())
    }

    fn point(m: &SglMonoid, p: LatticePoint) -> usize {
        m.points().unwrap().iter().position(|q| *q == p).unwrap()
    }

    #[test]
    fn stabilizers_of_a_two_subset() {
        let m = sgl(LatticeKind::Subsets, 3);
        let a = point(&m, LatticePoint::Subset(vec![1, 2]));
        let s = m.stabilizers(a);
        assert_eq!(s.full.len(), 2);
        assert_eq!(s.pointwise, vec![m.group().identity()]);
        assert!(m.check_normal(&s));
        assert_eq!(m.group().len() / s.pointwise.len(), 6);
    }

    #[test]
    fn zero_is_fixed_by_everything() {
        let m = sgl(LatticeKind::OrderedPartitionsZero, 3);
        let z = m.lattice().bottom();
        let s = m.stabilizers(z);
        assert_eq!(s.full.len(), 6);
        assert_eq!(s.pointwise.len(), 6);
        // all g collapse to a single zero element
        let zeros: std::collections::HashSet<_> = (0..6).map(|g| m.canonical(g, z)).collect();
        assert_eq!(zeros.len(), 1);
        for a in 0..m.lattice().len() {
            if a != z {
                assert_eq!(m.stabilizers(a).pointwise, vec![m.group().identity()]);
            }
        }
    }

    #[test]
    fn canonical_coincides_for_transposition_fixing_a_singleton() {
        let m = sgl(LatticeKind::Subsets, 3);
        let a = point(&m, LatticePoint::Subset(vec![3]));
        let id = m.group().identity();
        let swap = m
            .group()
            .index_of(&Permutation::transposition(3, 1, 2).unwrap())
            .unwrap();
        assert_eq!(m.canonical(id, a), m.canonical(swap, a));
        let top = m.lattice().top();
        assert_ne!(m.canonical(id, top), m.canonical(swap, top));
    }

    #[test]
    fn product_and_inverse_laws() {
        let m = sgl(LatticeKind::SetPartitions, 3);
        let id = m.identity_element();
        let all = m.canonical_elements();
        for &x in &all {
            assert_eq!(m.mul(id, x), x);
            let xi = m.inv(x);
            assert_eq!(m.mul(m.mul(x, xi), x), x);
            assert_eq!(m.mul(m.mul(xi, x), xi), xi);
        }
        for a in 0..m.lattice().len() {
            let e = m.idempotent(a);
            assert_eq!(m.mul(e, e), e);
            assert_eq!(m.inv(e), e);
        }
    }

    #[test]
    fn orders() {
        assert_eq!(sgl(LatticeKind::Subsets, 3).order_report().unwrap().formula, 34);
        assert_eq!(sgl(LatticeKind::SetPartitions, 3).order_report().unwrap().enumerated, 16);
        assert_eq!(sgl(LatticeKind::OrderedPartitionsZero, 3).order_report().unwrap().enumerated, 79);
        assert!(!sgl(LatticeKind::SetPartitions, 3).order_report().unwrap().differs_from_young_index_sum());
        let p4 = sgl(LatticeKind::SetPartitions, 4).order_report().unwrap();
        assert_eq!((p4.enumerated, p4.young_index_sum), (175, Some(131)));
        assert!(p4.differs_from_young_index_sum());
        assert_eq!(sgl(LatticeKind::Subsets, 3).order_report().unwrap().young_index_sum, None);
    }

    #[test]
    fn maximal_subgroups() {
        let m = sgl(LatticeKind::Subsets, 3);
        assert_eq!(m.maximal_subgroup_at(point(&m, LatticePoint::Subset(vec![1, 3]))).order(), 2);
        let r = sgl(LatticeKind::OrderedPartitionsZero, 3);
        let a = point(&r, LatticePoint::Ordered(vec![vec![1, 2], vec![3]]));
        assert_eq!(r.maximal_subgroup_at(a).order(), 2);
        assert_eq!(r.maximal_subgroup_at(r.lattice().bottom()).order(), 1);
    }
}
