//! Finite lattices with a permutation-group action, and the inverse monoid
//! `S(G, L)` they define.

mod builtin;
mod sgl;

pub use builtin::{make_lattice, young_index_sum, BuiltLattice, LatticeKind, LatticePoint};
pub use sgl::{OrderReport, QuotientGroup, SglElement, SglMonoid, StabilizerPair};

use crate::elements::{FiniteMonoid, Monoid, Permutation};
use crate::error::{Error, Result};

/// A finite lattice on `0..len()` with tabulated order, meet and join.
#[derive(Clone, Debug)]
pub struct FiniteLattice {
    size: usize,
    leq: Vec<bool>,
    meet: Vec<u32>,
    join: Vec<u32>,
    top: usize,
    bottom: usize,
}

impl FiniteLattice {
    /// Builds from an order relation, computing meets and joins as the
    /// greatest lower / least upper bounds. Fails if the relation is not a
    /// partial order or some bound does not exist.
    pub fn from_order(size: usize, leq: Vec<bool>) -> Result<Self> {
        if size == 0 || leq.len() != size * size {
            return Err(Error::LatticeAxiom("empty or misshapen order".into()));
        }
        let le = |a: usize, b: usize| leq[a * size + b];
        for a in 0..size {
            if !le(a, a) {
                return Err(Error::LatticeAxiom(format!("{a} not reflexive")));
            }
            for b in 0..size {
                if a != b && le(a, b) && le(b, a) {
                    return Err(Error::LatticeAxiom(format!("{a},{b} antisymmetry")));
                }
                for c in 0..size {
                    if le(a, b) && le(b, c) && !le(a, c) {
                        return Err(Error::LatticeAxiom(format!("{a},{b},{c} transitivity")));
                    }
                }
            }
        }
        let mut meet = vec![0u32; size * size];
        let mut join = vec![0u32; size * size];
        for a in 0..size {
            for b in a..size {
                let lower: Vec<usize> = (0..size).filter(|&c| le(c, a) && le(c, b)).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&c| le(c, m)))
                    .ok_or_else(|| Error::LatticeAxiom(format!("no meet of {a},{b}")))?;
                let upper: Vec<usize> = (0..size).filter(|&c| le(a, c) && le(b, c)).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&j| upper.iter().all(|&c| le(j, c)))
                    .ok_or_else(|| Error::LatticeAxiom(format!("no join of {a},{b}")))?;
                meet[a * size + b] = glb as u32;
                meet[b * size + a] = glb as u32;
                join[a * size + b] = lub as u32;
                join[b * size + a] = lub as u32;
            }
        }
        Self::assemble(size, leq, meet, join)
    }

    /// Builds from explicit meet/join tables, then checks them exhaustively
    /// against the order.
    pub fn from_tables(size: usize, leq: Vec<bool>, meet: Vec<u32>, join: Vec<u32>) -> Result<Self> {
        let lattice = Self::assemble(size, leq, meet, join)?;
        lattice.validate()?;
        Ok(lattice)
    }

    fn assemble(size: usize, leq: Vec<bool>, meet: Vec<u32>, join: Vec<u32>) -> Result<Self> {
        let top = (0..size)
            .find(|&t| (0..size).all(|c| leq[c * size + t]))
            .ok_or_else(|| Error::LatticeAxiom("no maximum".into()))?;
        let bottom = (0..size)
            .find(|&b| (0..size).all(|c| leq[b * size + c]))
            .ok_or_else(|| Error::LatticeAxiom("no minimum".into()))?;
        Ok(FiniteLattice {
            size,
            leq,
            meet,
            join,
            top,
            bottom,
        })
    }

    /// Exhaustive check that every tabulated meet (join) is the unique
    /// greatest lower (least upper) bound.
    pub fn validate(&self) -> Result<()> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                let m = self.meet(a, b);
                let j = self.join(a, b);
                if !(self.leq(m, a) && self.leq(m, b) && self.leq(a, j) && self.leq(b, j)) {
                    return Err(Error::LatticeAxiom(format!("bounds of {a},{b}")));
                }
                for c in 0..n {
                    if self.leq(c, a) && self.leq(c, b) && !self.leq(c, m) {
                        return Err(Error::LatticeAxiom(format!("meet of {a},{b}")));
                    }
                    if self.leq(a, c) && self.leq(b, c) && !self.leq(j, c) {
                        return Err(Error::LatticeAxiom(format!("join of {a},{b}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b] as usize
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b] as usize
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// The down-set `{c : c <= a}`.
    pub fn down_set(&self, a: usize) -> Vec<usize> {
        (0..self.size).filter(|&c| self.leq(c, a)).collect()
    }
}

/// A group of permutations acting on a lattice by order automorphisms.
#[derive(Clone, Debug)]
pub struct GroupAction {
    group: FiniteMonoid<Permutation>,
    points: usize,
    act: Vec<u32>,
    inverse: Vec<usize>,
}

impl GroupAction {
    /// Tabulates `act(g, a)` and checks the action laws and that every group
    /// element is a lattice automorphism.
    pub fn new<F>(group: FiniteMonoid<Permutation>, lattice: &FiniteLattice, act: F) -> Result<Self>
    where
        F: Fn(&Permutation, usize) -> usize,
    {
        let np = lattice.len();
        let ng = group.len();
        let mut table = vec![0u32; ng * np];
        for g in 0..ng {
            for a in 0..np {
                let b = act(group.element(g), a);
                if b >= np {
                    return Err(Error::Invalid(format!("action leaves the lattice at {a}")));
                }
                table[g * np + a] = b as u32;
            }
        }
        let inverse = (0..ng)
            .map(|g| {
                (0..ng)
                    .find(|&h| group.mul(g, h) == group.identity())
                    .ok_or_else(|| Error::Invalid("acting monoid is not a group".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let action = GroupAction {
            group,
            points: np,
            act: table,
            inverse,
        };
        action.validate(lattice)?;
        Ok(action)
    }

    fn validate(&self, lattice: &FiniteLattice) -> Result<()> {
        let ng = self.group.len();
        let id = self.group.identity();
        for a in 0..self.points {
            if self.act(id, a) != a {
                return Err(Error::Invalid("identity acts nontrivially".into()));
            }
        }
        for g in 0..ng {
            for h in 0..ng {
                let gh = self.group.mul(g, h);
                for a in 0..self.points {
                    if self.act(gh, a) != self.act(g, self.act(h, a)) {
                        return Err(Error::Invalid("action is not compatible with products".into()));
                    }
                }
            }
            for a in 0..self.points {
                for b in 0..self.points {
                    if lattice.leq(a, b) != lattice.leq(self.act(g, a), self.act(g, b)) {
                        return Err(Error::Invalid(format!(
                            "{} is not an order automorphism",
                            self.group.element(g)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &FiniteMonoid<Permutation> {
        &self.group
    }

    #[inline]
    pub fn act(&self, g: usize, a: usize) -> usize {
        self.act[g * self.points + a] as usize
    }

    pub fn group_inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    /// Orbits of the action, each sorted, listed by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for a in 0..self.points {
            if seen[a] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..self.group.len()).map(|g| self.act(g, a)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &b in &orbit {
                seen[b] = true;
            }
            out.push(orbit);
        }
        out
    }
}
