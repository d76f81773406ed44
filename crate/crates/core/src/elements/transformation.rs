use std::fmt;

use super::partial::{check_degree, PartialBijection};
use crate::error::{Error, Result};

/// A total map `[n] -> [n]`, an element of the full transformation monoid
/// `T_n`. Ordered lexicographically by image tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation {
    images: Vec<u8>,
}

impl Transformation {
    /// `images[i - 1]` is the image of `i`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        check_degree(n)?;
        for &y in images {
            if y == 0 || y > n {
                return Err(Error::PointOutOfRange { point: y, degree: n });
            }
        }
        Ok(Transformation {
            images: images.iter().map(|&y| y as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        Transformation {
            images: (1..=n as u8).collect(),
        }
    }

    /// The constant map onto `c`.
    pub fn constant(n: usize, c: usize) -> Result<Self> {
        Self::new(&vec![c; n])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&y| y as usize).collect()
    }

    pub fn image_set(&self) -> Vec<usize> {
        let mut im = self.images();
        im.sort_unstable();
        im.dedup();
        im
    }

    pub fn rank(&self) -> usize {
        self.image_set().len()
    }

    /// Fibers of the map, each sorted, listed by least point.
    pub fn kernel(&self) -> Vec<Vec<usize>> {
        let mut fibers: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.degree() + 1];
        for i in 1..=self.degree() {
            let y = self.apply(i);
            if slot[y] == usize::MAX {
                slot[y] = fibers.len();
                fibers.push(Vec::new());
            }
            fibers[slot[y]].push(i);
        }
        fibers
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose_unchecked(self) == *self
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Transformation {
            images: other
                .images
                .iter()
                .map(|&y| self.images[y as usize - 1])
                .collect(),
        }
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    /// Parses the image-tuple form `[i1,...,in]`.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| err("expected [i1,...,in]"))?;
        let images = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| err("bad integer")))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&images)
    }
}

/// `st`: apply `t` first, then `s`.
pub fn tcompose(s: &Transformation, t: &Transformation) -> Result<Transformation> {
    s.compose(t)
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{y}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A bijective transformation, an element of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Transformation);

impl Permutation {
    pub fn new(images: &[usize]) -> Result<Self> {
        let t = Transformation::new(images)?;
        Self::from_transformation(t)
    }

    pub fn from_transformation(t: Transformation) -> Result<Self> {
        if !t.is_permutation() {
            return Err(Error::Invalid(format!("{t} is not a bijection")));
        }
        Ok(Permutation(t))
    }

    pub fn identity(n: usize) -> Self {
        Permutation(Transformation::identity(n))
    }

    /// Builds from disjoint cycles, e.g. `&[&[1, 2, 3]]` for `(1,2,3)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > n {
                    return Err(Error::PointOutOfRange { point: p, degree: n });
                }
                if seen[p] {
                    return Err(Error::RepeatedPoint(p));
                }
                seen[p] = true;
                images[p - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(&images)
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_cycles(n, &[&[i, j]])
    }

    pub fn degree(&self) -> usize {
        self.0.degree()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.images()
    }

    pub fn as_transformation(&self) -> &Transformation {
        &self.0
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(Permutation(self.0.compose(&other.0)?))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        Permutation(self.0.compose_unchecked(&other.0))
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0usize; self.degree()];
        for i in 1..=self.degree() {
            images[self.apply(i) - 1] = i;
        }
        Permutation(Transformation {
            images: images.into_iter().map(|y| y as u8).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        (1..=self.degree()).all(|i| self.apply(i) == i)
    }

    /// `+1` or `-1`, by inversion-count parity.
    pub fn sign(&self) -> i32 {
        let im = &self.0.images;
        let mut inversions = 0usize;
        for i in 0..im.len() {
            for j in i + 1..im.len() {
                if im[i] > im[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn to_partial(&self) -> PartialBijection {
        PartialBijection::from_map(self.0.images.clone())
    }

    /// Disjoint cycles of length at least two, each from its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Parses either cycle notation `(1,2)(3,4)` / `()` or image-tuple form.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let p = Self::from_transformation(Transformation::parse(t)?)?;
            if p.degree() != n {
                return Err(Error::DegreeMismatch(p.degree(), n));
            }
            return Ok(p);
        }
        let err = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body.find(')').ok_or_else(|| err("unclosed '('"))?;
            let inner = body[..close].trim();
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| err("bad integer")))
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = body[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(n, &refs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
