use std::fmt;

use crate::error::{Error, Result};

/// `λ_1 >= … >= λ_p > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerPartition {
    parts: Vec<usize>,
}

impl IntegerPartition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(IntegerPartition { parts: parts.to_vec() })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Conjugate partition: column lengths of the diagram.
    pub fn conjugate(&self) -> IntegerPartition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        IntegerPartition { parts }
    }

    /// Parses `(2,1)`; `()` is the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(&parse_parts(text)?)
    }
}

pub(crate) fn parse_parts(text: &str) -> Result<Vec<usize>> {
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| err("expected (a,b,...)"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| err("bad part")))
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    write!(f, "({})", s.join(","))
}

impl fmt::Display for IntegerPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// Partitions of `n`, largest first part first: `(3), (2,1), (1,1,1)`.
pub fn partitions(n: usize) -> Vec<IntegerPartition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<IntegerPartition>) {
        if rest == 0 {
            out.push(IntegerPartition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Coefficients of `prod_{k>=1} 1/(1-x^k)` up to `x^n`.
pub fn partition_generating_coefficients(n: usize) -> Vec<u64> {
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for k in 1..=n {
        for m in k..=n {
            c[m] += c[m - k];
        }
    }
    c
}

/// Number of partitions of `n`, cross-checked against the generating function.
pub fn p_count(n: usize) -> usize {
    let count = partitions(n).len();
    assert_eq!(count as u64, partition_generating_coefficients(n)[n]);
    count
}

/// Positive parts in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: &[usize]) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts: parts.to_vec() })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(&parse_parts(text)?)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

/// All compositions of `n`, lexicographically by parts.
pub fn compositions(n: usize) -> Vec<Composition> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rest == 0 {
            out.push(Composition { parts: cur.clone() });
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            go(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(p_count(0), 1);
        assert_eq!(p_count(3), 3);
        assert_eq!(p_count(4), 5);
        assert_eq!(p_count(5), 7);
        let labels: Vec<String> = partitions(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(labels, ["(3)", "(2,1)", "(1,1,1)"]);
        assert_eq!(partitions(0)[0].to_string(), "()");
    }

    #[test]
    fn parse_and_conjugate() {
        let p = IntegerPartition::parse("(3,1)").unwrap();
        assert_eq!(p.conjugate().parts(), &[2, 1, 1]);
        assert!(IntegerPartition::parse("(1,2)").is_err());
        assert!(IntegerPartition::parse("1,2").is_err());
        assert_eq!(Composition::parse("(1,2)").unwrap().to_string(), "(1,2)");
    }

    #[test]
    fn composition_count() {
        for n in 1..=6 {
            assert_eq!(compositions(n).len(), 1 << (n - 1));
        }
    }
}
