use std::collections::HashMap;
use std::fmt;

use super::partition::IntegerPartition;
use crate::error::{Error, Result};

/// A Young diagram filled row-wise with distinct labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        IntegerPartition::new(&lengths)?;
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("tableau entries repeat".into()));
        }
        Ok(Tableau { rows })
    }

    /// Fills `shape` row by row from `labels`.
    pub fn from_reading(shape: &IntegerPartition, labels: &[usize]) -> Result<Self> {
        if shape.n() != labels.len() {
            return Err(Error::Invalid("label count differs from shape size".into()));
        }
        let mut rows = Vec::new();
        let mut k = 0;
        for &p in shape.parts() {
            rows.push(labels[k..k + p].to_vec());
            k += p;
        }
        Self::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> IntegerPartition {
        let lengths: Vec<usize> = self.rows.iter().map(Vec::len).collect();
        IntegerPartition::new(&lengths).expect("validated shape")
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }

    /// Entries increase along rows and down columns.
    pub fn is_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
            && self.columns().iter().all(|c| c.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Tableau {
        Tableau {
            rows: self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect(),
        }
    }

    pub fn tabloid(&self) -> Tabloid {
        Tabloid::from_rows(self.rows.clone())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// A tableau up to reordering within rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn from_rows(mut rows: Vec<Vec<usize>>) -> Self {
        for r in &mut rows {
            r.sort_unstable();
        }
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Tabloid {
        Tabloid::from_rows(self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect())
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{{{}}}", rows.join(" | "))
    }
}

/// A label permutation preserving the columns of a tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnPermutation {
    map: HashMap<usize, usize>,
    pub sign: i32,
}

impl ColumnPermutation {
    pub fn apply(&self, x: usize) -> usize {
        self.map.get(&x).copied().unwrap_or(x)
    }
}

/// All orderings of `items` with the sign of the rearrangement, by inversion
/// parity.
pub(crate) fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i32)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            go(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    let mut positions: Vec<usize> = (0..items.len()).collect();
    go(&mut positions, &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..p.len())
                .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (p.into_iter().map(|i| items[i]).collect(), sign)
        })
        .collect()
}

/// The column group `c_T`: the product of the symmetric groups of the columns.
pub fn column_group(t: &Tableau) -> Vec<ColumnPermutation> {
    let mut group = vec![ColumnPermutation {
        map: HashMap::new(),
        sign: 1,
    }];
    for col in t.columns() {
        let perms = signed_permutations(&col);
        let mut next = Vec::with_capacity(group.len() * perms.len());
        for h in &group {
            for (image, sign) in &perms {
                let mut map = h.map.clone();
                for (&x, &y) in col.iter().zip(image) {
                    if x != y {
                        map.insert(x, y);
                    }
                }
                next.push(ColumnPermutation {
                    map,
                    sign: h.sign * sign,
                });
            }
        }
        group = next;
    }
    group
}

/// Every filling of `shape` by `labels`.
pub fn all_tableaux(shape: &IntegerPartition, labels: &[usize]) -> Vec<Tableau> {
    signed_permutations(labels)
        .into_iter()
        .map(|(order, _)| Tableau::from_reading(shape, &order).expect("shape matches"))
        .collect()
}

/// Number of standard tableaux, by removing the largest entry from each corner.
pub fn standard_tableaux_count(shape: &IntegerPartition) -> u64 {
    fn go(parts: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        if parts.iter().all(|&p| p == 0) {
            return 1;
        }
        if let Some(&v) = memo.get(parts) {
            return v;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let below = parts.get(i + 1).copied().unwrap_or(0);
            if parts[i] > below {
                parts[i] -= 1;
                total += go(parts, memo);
                parts[i] += 1;
            }
        }
        memo.insert(parts.clone(), total);
        total
    }
    go(&mut shape.parts().to_vec(), &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lambda(p: &[usize]) -> IntegerPartition {
        IntegerPartition::new(p).unwrap()
    }

    #[test]
    fn column_groups() {
        let row = Tableau::from_reading(&lambda(&[3]), &[1, 2, 3]).unwrap();
        assert_eq!(column_group(&row).len(), 1);
        let col = Tableau::from_reading(&lambda(&[1, 1, 1, 1]), &[1, 2, 3, 4]).unwrap();
        let g = column_group(&col);
        assert_eq!(g.len(), 24);
        assert_eq!(g.iter().filter(|h| h.sign == 1).count(), 12);
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_tableaux_count(&lambda(&[2, 1])), 2);
        assert_eq!(standard_tableaux_count(&lambda(&[3, 2])), 5);
        assert_eq!(standard_tableaux_count(&lambda(&[2, 2])), 2);
        let all = all_tableaux(&lambda(&[2, 1]), &[1, 2, 3]);
        assert_eq!(all.iter().filter(|t| t.is_standard()).count(), 2);
    }

    #[test]
    fn tabloid_ignores_row_order() {
        let a = Tableau::new(vec![vec![2, 1], vec![3]]).unwrap();
        let b = Tableau::new(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(a.tabloid(), b.tabloid());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![1, 1]]).is_err());
    }
}
