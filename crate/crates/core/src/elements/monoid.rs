use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 100_000;

/// Index-level view of a finite monoid. Elements are `0..order()`.
pub trait Monoid {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn identity(&self) -> usize;
    /// Indices generating the monoid as a monoid.
    fn generators(&self) -> &[usize];
    /// A cheaply clonable, element-free copy of the multiplication table.
    fn handle(&self) -> MonoidTable;
}

/// The multiplication table of a finite monoid without its elements. Clones
/// share the table.
#[derive(Clone, Debug)]
pub struct MonoidTable {
    order: usize,
    table: Arc<[u32]>,
    identity: usize,
    generators: Arc<[usize]>,
}

impl MonoidTable {
    /// True when both handles describe the same table.
    pub fn same_as(&self, other: &MonoidTable) -> bool {
        Arc::ptr_eq(&self.table, &other.table)
            || (self.order == other.order
                && self.identity == other.identity
                && self.table == other.table)
    }

    /// Direct product, indexed `(i, j) -> i * |other| + j`.
    pub fn direct_product(&self, other: &MonoidTable) -> MonoidTable {
        let (n, m) = (self.order, other.order);
        let nm = n * m;
        let mut table = vec![0u32; nm * nm];
        for x in 0..nm {
            for y in 0..nm {
                let (x1, x2) = (x / m, x % m);
                let (y1, y2) = (y / m, y % m);
                table[x * nm + y] = (self.mul(x1, y1) * m + other.mul(x2, y2)) as u32;
            }
        }
        let mut generators: Vec<usize> = self
            .generators
            .iter()
            .map(|&g| g * m + other.identity)
            .chain(other.generators.iter().map(|&h| self.identity * m + h))
            .collect();
        generators.sort_unstable();
        generators.dedup();
        MonoidTable {
            order: nm,
            table: table.into(),
            identity: self.identity * m + other.identity,
            generators: generators.into(),
        }
    }
}

impl Monoid for MonoidTable {
    fn order(&self) -> usize {
        self.order
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    fn identity(&self) -> usize {
        self.identity
    }

    fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn handle(&self) -> MonoidTable {
        self.clone()
    }
}

/// An enumerated finite monoid with a dense multiplication table.
///
/// Elements are held in canonical (sorted) order, so indices are stable
/// across runs for the same generating set.
#[derive(Clone, Debug)]
pub struct FiniteMonoid<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    shape: MonoidTable,
}

pub fn closure<E, F>(generators: &[E], identity: E, multiply: F) -> Result<FiniteMonoid<E>>
where
    E: Clone + Eq + Hash + Ord,
    F: Fn(&E, &E) -> E,
{
    closure_with_cap(generators, identity, multiply, DEFAULT_CAP)
}

/// Breadth-first right-multiplication closure.
///
/// Only `|S| * |gens|` element products are formed. The full table is then
/// filled from the search tree: if `y = p * g` then `x * y = (x * p) * g`.
pub fn closure_with_cap<E, F>(
    generators: &[E],
    identity: E,
    multiply: F,
    cap: usize,
) -> Result<FiniteMonoid<E>>
where
    E: Clone + Eq + Hash + Ord,
    F: Fn(&E, &E) -> E,
{
    let mut gens: Vec<E> = Vec::new();
    for g in generators {
        if !gens.contains(g) {
            gens.push(g.clone());
        }
    }
    let ng = gens.len();

    let mut found: Vec<E> = vec![identity.clone()];
    let mut seen: HashMap<E, usize> = HashMap::from([(identity, 0)]);
    // parent[y] = (p, k) with found[y] = found[p] * gens[k]
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<usize> = Vec::new();

    let mut i = 0;
    while i < found.len() {
        for (k, g) in gens.iter().enumerate() {
            let p = multiply(&found[i], g);
            let idx = match seen.get(&p) {
                Some(&idx) => idx,
                None => {
                    let idx = found.len();
                    if idx >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(p.clone(), idx);
                    found.push(p);
                    parent.push(Some((i, k)));
                    idx
                }
            };
            right.push(idx);
        }
        i += 1;
    }

    let n = found.len();
    // BFS order is a valid evaluation order for the table fill.
    let mut table_bfs = vec![0usize; n * n];
    for y in 0..n {
        match parent[y] {
            None => {
                for x in 0..n {
                    table_bfs[x * n + y] = x;
                }
            }
            Some((p, k)) => {
                for x in 0..n {
                    let xp = table_bfs[x * n + p];
                    table_bfs[x * n + y] = right[xp * ng + k];
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| found[a].cmp(&found[b]));
    let mut rank = vec![0usize; n];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            table[rank[x] * n + rank[y]] = rank[table_bfs[x * n + y]] as u32;
        }
    }
    let mut slots: Vec<Option<E>> = found.into_iter().map(Some).collect();
    let elements: Vec<E> = order.iter().map(|&old| slots[old].take().unwrap()).collect();
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let mut generator_indices: Vec<usize> = gens.iter().map(|g| rank[seen[g]]).collect();
    generator_indices.sort_unstable();
    Ok(FiniteMonoid {
        shape: MonoidTable {
            order: elements.len(),
            table: table.into(),
            identity: rank[0],
            generators: generator_indices.into(),
        },
        elements,
        index,
    })
}

impl<E: Clone + Eq + Hash> FiniteMonoid<E> {
    /// Assembles a monoid from an explicit table. The table is trusted to be
    /// closed and to have `identity` as a two-sided identity; both are checked.
    pub fn from_table(
        elements: Vec<E>,
        table: Vec<u32>,
        identity: usize,
        generators: Vec<usize>,
    ) -> Result<Self> {
        let n = elements.len();
        if table.len() != n * n || identity >= n {
            return Err(Error::Invalid("table shape".into()));
        }
        if table.iter().any(|&t| t as usize >= n) {
            return Err(Error::Invalid("table not closed".into()));
        }
        for x in 0..n {
            if table[identity * n + x] as usize != x || table[x * n + identity] as usize != x {
                return Err(Error::Invalid("identity law fails".into()));
            }
        }
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(FiniteMonoid {
            shape: MonoidTable {
                order: elements.len(),
                table: table.into(),
                identity,
                generators: generators.into(),
            },
            elements,
            index,
        })
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn table(&self) -> &[u32] {
        &self.shape.table
    }

    /// Associativity on every triple when `|S| <= 200`, otherwise on
    /// `samples` seeded random triples.
    pub fn check_associativity(&self, samples: usize) -> bool {
        let n = self.len();
        let m = |a: usize, b: usize| self.shape.mul(a, b);
        if n <= 200 {
            for a in 0..n {
                for b in 0..n {
                    let ab = m(a, b);
                    for c in 0..n {
                        if m(ab, c) != m(a, m(b, c)) {
                            return false;
                        }
                    }
                }
            }
            return true;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        (0..samples).all(|_| {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            m(m(a, b), c) == m(a, m(b, c))
        })
    }

    pub fn is_idempotent(&self, i: usize) -> bool {
        self.mul(i, i) == i
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.is_idempotent(i)).collect()
    }

    /// Direct product, indexed `(i, j) -> i * |other| + j`.
    pub fn direct_product<F: Clone + Eq + Hash>(
        &self,
        other: &FiniteMonoid<F>,
    ) -> FiniteMonoid<(E, F)> {
        let mut elements = Vec::with_capacity(self.len() * other.len());
        for a in &self.elements {
            for b in &other.elements {
                elements.push((a.clone(), b.clone()));
            }
        }
        let shape = self.shape.direct_product(&other.shape);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        FiniteMonoid {
            elements,
            index,
            shape,
        }
    }
}

impl<E> Monoid for FiniteMonoid<E> {
    fn order(&self) -> usize {
        self.shape.order
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.shape.mul(a, b)
    }

    fn identity(&self) -> usize {
        self.shape.identity
    }

    fn generators(&self) -> &[usize] {
        &self.shape.generators
    }

    fn handle(&self) -> MonoidTable {
        self.shape.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::{
        full_transformation_monoid, symmetric_group, symmetric_inverse_monoid, PartialBijection,
        Permutation, Transformation,
    };

    #[test]
    fn two_generators_give_all_of_i2() {
        let swap = PartialBijection::new(2, &[(1, 2), (2, 1)]).unwrap();
        let id1 = PartialBijection::partial_identity(2, &[1]).unwrap();
        let m = closure(&[swap, id1], PartialBijection::identity(2), |a, b| {
            a.compose(b).unwrap()
        })
        .unwrap();
        assert_eq!(m.len(), 7);
        assert!(m.check_associativity(0));
    }

    #[test]
    fn t3_from_three_generators() {
        let gens = [
            Transformation::new(&[2, 3, 1]).unwrap(),
            Transformation::new(&[2, 1, 3]).unwrap(),
            Transformation::new(&[1, 1, 2]).unwrap(),
        ];
        let m = closure(&gens, Transformation::identity(3), |a, b| a.compose(b).unwrap()).unwrap();
        assert_eq!(m.len(), 27);
        assert_eq!(full_transformation_monoid(3).len(), 27);
    }

    #[test]
    fn trivial_closure() {
        let id = Permutation::identity(3);
        let m = closure(&[id.clone()], id, |a, b| a.compose(b).unwrap()).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.identity(), 0);
    }

    #[test]
    fn cap_aborts() {
        let gens = crate::elements::symmetric_group_generators(5);
        let r = closure_with_cap(&gens, Permutation::identity(5), |a, b| a.compose(b).unwrap(), 50);
        assert_eq!(r.unwrap_err(), Error::CapExceeded { cap: 50 });
    }

    #[test]
    fn table_matches_direct_products() {
        let m = symmetric_inverse_monoid(3);
        for a in 0..m.len() {
            for b in 0..m.len() {
                let direct = m.element(a).compose(m.element(b)).unwrap();
                assert_eq!(m.element(m.mul(a, b)), &direct);
            }
        }
        assert_eq!(m.element(m.identity()), &PartialBijection::identity(3));
    }

    #[test]
    fn deterministic() {
        let a = symmetric_inverse_monoid(3);
        let b = symmetric_inverse_monoid(3);
        assert_eq!(a.elements(), b.elements());
        assert_eq!(a.table(), b.table());
        let sorted = {
            let mut v = a.elements().to_vec();
            v.sort();
            v
        };
        assert_eq!(a.elements(), sorted.as_slice());
    }

    #[test]
    fn direct_product_orders() {
        let s2 = symmetric_group(2);
        let s3 = symmetric_group(3);
        let p = s2.direct_product(&s3);
        assert_eq!(p.len(), 12);
        assert!(p.check_associativity(0));
        assert_eq!(p.generators().len(), 3);
    }
}
