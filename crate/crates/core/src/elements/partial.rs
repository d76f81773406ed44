use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A partial bijection of `[n] = {1, ..., n}`, an element of the symmetric
/// inverse monoid `I_n`.
///
/// Stored as an image table: `map[i - 1]` is the image of `i`, or 0 when `i`
/// lies outside the domain. The zero map has an all-zero table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialBijection {
    map: Vec<u8>,
}

impl PartialBijection {
    /// Builds from explicit `(domain point, image point)` pairs.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        check_degree(n)?;
        let mut map = vec![0u8; n];
        let mut used = vec![false; n + 1];
        for &(x, y) in pairs {
            for p in [x, y] {
                if p == 0 || p > n {
                    return Err(Error::PointOutOfRange { point: p, degree: n });
                }
            }
            if map[x - 1] != 0 {
                return Err(Error::RepeatedPoint(x));
            }
            if used[y] {
                return Err(Error::RepeatedPoint(y));
            }
            used[y] = true;
            map[x - 1] = y as u8;
        }
        Ok(PartialBijection { map })
    }

    pub fn identity(n: usize) -> Self {
        PartialBijection {
            map: (1..=n as u8).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        PartialBijection { map: vec![0; n] }
    }

    /// The partial identity on the given points.
    pub fn partial_identity(n: usize, points: &[usize]) -> Result<Self> {
        let pairs: Vec<_> = points.iter().map(|&p| (p, p)).collect();
        Self::new(n, &pairs)
    }

    pub(crate) fn from_map(map: Vec<u8>) -> Self {
        PartialBijection { map }
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> Option<usize> {
        match self.map.get(i.wrapping_sub(1)) {
            Some(&y) if y != 0 => Some(y as usize),
            _ => None,
        }
    }

    pub fn domain(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&i| self.map[i - 1] != 0).collect()
    }

    /// Images listed in the order of the (increasing) domain.
    pub fn image_tuple(&self) -> Vec<usize> {
        self.map.iter().filter(|&&y| y != 0).map(|&y| y as usize).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im = self.image_tuple();
        im.sort_unstable();
        im
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.domain()
            .into_iter()
            .map(|i| (i, self.map[i - 1] as usize))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.map.iter().filter(|&&y| y != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn is_idempotent(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, &y)| y == 0 || y as usize == i + 1)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let map = other
            .map
            .iter()
            .map(|&y| if y == 0 { 0 } else { self.map[y as usize - 1] })
            .collect();
        PartialBijection { map }
    }

    /// The semigroup inverse `s*`, with domain `im s`.
    pub fn inverse(&self) -> Self {
        let mut map = vec![0u8; self.degree()];
        for (i, &y) in self.map.iter().enumerate() {
            if y != 0 {
                map[y as usize - 1] = (i + 1) as u8;
            }
        }
        PartialBijection { map }
    }
}

/// `st` in the right-to-left convention: `t` acts first.
pub fn pcompose(s: &PartialBijection, t: &PartialBijection) -> Result<PartialBijection> {
    s.compose(t)
}

pub fn pinverse(s: &PartialBijection) -> PartialBijection {
    s.inverse()
}

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n == 0 || n > u8::MAX as usize {
        return Err(Error::Invalid(format!("degree {n} must lie in 1..=255")));
    }
    Ok(())
}

impl Ord for PartialBijection {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.domain().cmp(&other.domain()))
            .then_with(|| self.image_tuple().cmp(&other.image_tuple()))
    }
}

impl PartialOrd for PartialBijection {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::notation::cycle_link_format(self))
    }
}

impl fmt::Display for PartialBijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::notation::cycle_link_format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pb(n: usize, pairs: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::new(n, pairs).unwrap()
    }

    #[test]
    fn chain_composition() {
        let s = pb(3, &[(2, 3)]);
        let t = pb(3, &[(1, 2)]);
        assert_eq!(pcompose(&s, &t).unwrap(), pb(3, &[(1, 3)]));
    }

    #[test]
    fn disjoint_composition_is_zero() {
        let s = pb(3, &[(1, 1)]);
        let t = pb(3, &[(2, 2)]);
        let st = pcompose(&s, &t).unwrap();
        assert!(st.is_zero());
        assert_eq!(st, PartialBijection::zero(3));
    }

    #[test]
    fn identity_law() {
        let s = pb(3, &[(1, 2), (3, 1)]);
        let id = PartialBijection::identity(3);
        assert_eq!(pcompose(&id, &s).unwrap(), s);
        assert_eq!(pcompose(&s, &id).unwrap(), s);
    }

    #[test]
    fn degree_mismatch() {
        let s = PartialBijection::identity(2);
        let t = PartialBijection::identity(3);
        assert_eq!(s.compose(&t), Err(Error::DegreeMismatch(2, 3)));
    }

    #[test]
    fn inverse_basics() {
        assert_eq!(pinverse(&pb(2, &[(1, 2)])), pb(2, &[(2, 1)]));
        let id_x = PartialBijection::partial_identity(4, &[1, 3]).unwrap();
        assert_eq!(pinverse(&id_x), id_x);
        let s = pb(3, &[(1, 3), (2, 1)]);
        assert_eq!(s.inverse().domain(), s.image());
    }

    #[test]
    fn rejects_bad_pairs() {
        assert!(matches!(
            PartialBijection::new(2, &[(1, 3)]),
            Err(Error::PointOutOfRange { point: 3, .. })
        ));
        assert_eq!(
            PartialBijection::new(3, &[(1, 2), (3, 2)]),
            Err(Error::RepeatedPoint(2))
        );
        assert_eq!(
            PartialBijection::new(3, &[(1, 2), (1, 3)]),
            Err(Error::RepeatedPoint(1))
        );
    }

    #[test]
    fn canonical_order_is_domain_then_images() {
        let mut v = vec![
            pb(2, &[(2, 2)]),
            pb(2, &[(1, 2), (2, 1)]),
            pb(2, &[(1, 2)]),
            PartialBijection::zero(2),
            pb(2, &[(1, 1)]),
        ];
        v.sort();
        let shown: Vec<String> = v.iter().map(|s| format!("{:?}", s.pairs())).collect();
        assert_eq!(
            shown,
            [
                "[]",
                "[(1, 1)]",
                "[(1, 2)]",
                "[(1, 2), (2, 1)]",
                "[(2, 2)]"
            ]
        );
    }
}
