use std::fmt;

use super::{FiniteLattice, GroupAction};
use crate::elements::{symmetric_group, Permutation};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    /// Subsets of `[n]` under inclusion.
    Subsets,
    /// Set partitions of `[n]`, finer below coarser.
    SetPartitions,
    /// Ordered set partitions of `[n]` with a minimum adjoined.
    OrderedPartitionsZero,
}

impl LatticeKind {
    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::Subsets => "subsets",
            LatticeKind::SetPartitions => "partitions",
            LatticeKind::OrderedPartitionsZero => "ordperm",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "subsets" => Some(LatticeKind::Subsets),
            "partitions" => Some(LatticeKind::SetPartitions),
            "ordperm" => Some(LatticeKind::OrderedPartitionsZero),
            _ => None,
        }
    }

    fn max_degree(self) -> usize {
        match self {
            LatticeKind::Subsets | LatticeKind::SetPartitions => 5,
            LatticeKind::OrderedPartitionsZero => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LatticePoint {
    Subset(Vec<usize>),
    Partition(Vec<Vec<usize>>),
    Ordered(Vec<Vec<usize>>),
    Zero,
}

impl LatticePoint {
    fn permuted(&self, g: &Permutation) -> LatticePoint {
        let map_block = |b: &Vec<usize>| {
            let mut out: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
            out.sort_unstable();
            out
        };
        match self {
            LatticePoint::Subset(s) => LatticePoint::Subset(map_block(s)),
            LatticePoint::Partition(blocks) => {
                let mut out: Vec<Vec<usize>> = blocks.iter().map(map_block).collect();
                out.sort();
                LatticePoint::Partition(out)
            }
            LatticePoint::Ordered(blocks) => LatticePoint::Ordered(blocks.iter().map(map_block).collect()),
            LatticePoint::Zero => LatticePoint::Zero,
        }
    }

    /// Blocks of a partition-like point; a subset counts as one block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        match self {
            LatticePoint::Subset(s) => vec![s.clone()],
            LatticePoint::Partition(b) | LatticePoint::Ordered(b) => b.clone(),
            LatticePoint::Zero => Vec::new(),
        }
    }

    /// Block sizes in order: the type of an ordered partition.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks().iter().map(|b| b.len()).collect()
    }

    fn sort_key(&self) -> (usize, usize, Vec<Vec<usize>>) {
        match self {
            LatticePoint::Zero => (0, 0, Vec::new()),
            LatticePoint::Subset(s) => (1, s.len(), vec![s.clone()]),
            LatticePoint::Partition(b) | LatticePoint::Ordered(b) => (1, usize::MAX - b.len(), b.clone()),
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |b: &Vec<usize>| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            LatticePoint::Zero => write!(f, "0"),
            LatticePoint::Subset(s) => write!(f, "{{{}}}", join(s)),
            LatticePoint::Partition(b) => {
                write!(f, "{{{}}}", b.iter().map(join).collect::<Vec<_>>().join("|"))
            }
            LatticePoint::Ordered(b) => {
                write!(f, "({})", b.iter().map(join).collect::<Vec<_>>().join("|"))
            }
        }
    }
}

/// A built-in lattice on `[n]` together with the natural `S_n` action.
#[derive(Clone, Debug)]
pub struct BuiltLattice {
    pub kind: LatticeKind,
    pub degree: usize,
    pub points: Vec<LatticePoint>,
    pub lattice: FiniteLattice,
    pub action: GroupAction,
}

impl BuiltLattice {
    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }
}

pub fn make_lattice(kind: LatticeKind, n: usize) -> Result<BuiltLattice> {
    if n == 0 || n > kind.max_degree() {
        return Err(Error::Invalid(format!(
            "{} lattice supports degree 1..={}, got {n}",
            kind.name(),
            kind.max_degree()
        )));
    }
    let mut points: Vec<LatticePoint> = match kind {
        LatticeKind::Subsets => (0u32..1 << n)
            .map(|mask| LatticePoint::Subset((1..=n).filter(|&i| mask >> (i - 1) & 1 == 1).collect()))
            .collect(),
        LatticeKind::SetPartitions => set_partitions(n).into_iter().map(LatticePoint::Partition).collect(),
        LatticeKind::OrderedPartitionsZero => {
            let mut pts = vec![LatticePoint::Zero];
            for p in set_partitions(n) {
                for order in permutations_of(p.len()) {
                    pts.push(LatticePoint::Ordered(order.iter().map(|&i| p[i].clone()).collect()));
                }
            }
            pts
        }
    };
    points.sort_by_key(|p| p.sort_key());

    let size = points.len();
    let mut leq = vec![false; size * size];
    for a in 0..size {
        for b in 0..size {
            leq[a * size + b] = point_leq(&points[a], &points[b]);
        }
    }
    let lattice = match kind {
        LatticeKind::Subsets => {
            let masks: Vec<u32> = points
                .iter()
                .map(|p| match p {
                    LatticePoint::Subset(s) => s.iter().map(|&x| 1u32 << (x - 1)).sum(),
                    _ => unreachable!(),
                })
                .collect();
            let position = |mask: u32| masks.iter().position(|&m| m == mask).unwrap() as u32;
            let mut meet = vec![0u32; size * size];
            let mut join = vec![0u32; size * size];
            for a in 0..size {
                for b in 0..size {
                    meet[a * size + b] = position(masks[a] & masks[b]);
                    join[a * size + b] = position(masks[a] | masks[b]);
                }
            }
            FiniteLattice::from_tables(size, leq, meet, join)?
        }
        _ => FiniteLattice::from_order(size, leq)?,
    };

    let group = symmetric_group(n);
    let action = GroupAction::new(group, &lattice, |g, a| {
        let image = points[a].permuted(g);
        points.iter().position(|q| *q == image).unwrap_or(usize::MAX)
    })?;
    Ok(BuiltLattice {
        kind,
        degree: n,
        points,
        lattice,
        action,
    })
}

fn point_leq(a: &LatticePoint, b: &LatticePoint) -> bool {
    let subset = |x: &Vec<usize>, y: &Vec<usize>| x.iter().all(|p| y.contains(p));
    match (a, b) {
        (LatticePoint::Zero, _) => true,
        (_, LatticePoint::Zero) => false,
        (LatticePoint::Subset(x), LatticePoint::Subset(y)) => subset(x, y),
        (LatticePoint::Partition(xs), LatticePoint::Partition(ys)) => {
            xs.iter().all(|x| ys.iter().any(|y| subset(x, y)))
        }
        (LatticePoint::Ordered(xs), LatticePoint::Ordered(ys)) => {
            // each block lies in some block, and the induced block map is
            // weakly increasing
            let mut last = 0usize;
            for x in xs {
                match ys.iter().position(|y| subset(x, y)) {
                    Some(j) if j >= last => last = j,
                    _ => return false,
                }
            }
            true
        }
        _ => false,
    }
}

/// Set partitions of `[n]` with blocks sorted internally and by least point.
pub(crate) fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn grow(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i > n {
            out.push(blocks.clone());
            return;
        }
        for k in 0..blocks.len() {
            blocks[k].push(i);
            grow(i + 1, n, blocks, out);
            blocks[k].pop();
        }
        blocks.push(vec![i]);
        grow(i + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    grow(1, n, &mut Vec::new(), &mut out);
    out
}

fn permutations_of(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations_of(k - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, k - 1);
            out.push(p);
        }
    }
    out.sort();
    out
}

/// `Σ_Λ [S_n : S_{λ1} × ... × S_{λp}]` over set partitions `Λ` of `[n]`:
/// the Young-subgroup index sum that is sometimes quoted as the order of the
/// uniform block permutation monoid.
pub fn young_index_sum(n: usize) -> u64 {
    let fact = |k: usize| (1..=k as u64).product::<u64>();
    set_partitions(n)
        .iter()
        .map(|p| fact(n) / p.iter().map(|b| fact(b.len())).product::<u64>())
        .sum()
}
