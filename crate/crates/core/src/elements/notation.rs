//! Cycle-link notation for partial bijections.
//!
//! A partial bijection decomposes uniquely into disjoint cycles `(a,b,...)`
//! and links `[a,b,...,z]`, where each listed point maps to the next and the
//! last point of a link lies outside the domain. Points outside both the
//! domain and the image are not written; the zero map is written `0`.

use super::partial::PartialBijection;
use crate::error::{Error, Result};

pub fn cycle_link_format(s: &PartialBijection) -> String {
    let n = s.degree();
    let mut in_image = vec![false; n + 1];
    for y in s.image() {
        in_image[y] = true;
    }
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    let mut links = Vec::new();

    // A link starts at a domain point that is not an image point.
    for start in 1..=n {
        if s.apply(start).is_none() || in_image[start] {
            continue;
        }
        let mut link = vec![start];
        seen[start] = true;
        let mut p = start;
        while let Some(q) = s.apply(p) {
            link.push(q);
            seen[q] = true;
            p = q;
        }
        links.push(link);
    }
    // Everything left in the domain lies on a cycle.
    for start in 1..=n {
        if seen[start] || s.apply(start).is_none() {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut p = s.apply(start).unwrap();
        while p != start {
            seen[p] = true;
            cycle.push(p);
            p = s.apply(p).unwrap();
        }
        cycles.push(cycle);
    }
    links.sort_by_key(|l| *l.iter().min().unwrap());

    if cycles.is_empty() && links.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for c in &cycles {
        out.push_str(&block('(', c, ')'));
    }
    for l in &links {
        out.push_str(&block('[', l, ']'));
    }
    out
}

fn block(open: char, points: &[usize], close: char) -> String {
    let body: Vec<String> = points.iter().map(|p| p.to_string()).collect();
    format!("{open}{}{close}", body.join(","))
}

pub fn cycle_link_parse(text: &str, n: usize) -> Result<PartialBijection> {
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Ok(PartialBijection::zero(n));
    }
    let mut pairs = Vec::new();
    let mut seen = vec![false; n + 1];
    let mut rest = trimmed;
    while !rest.is_empty() {
        let (close, cyclic) = match rest.chars().next() {
            Some('(') => (')', true),
            Some('[') => (']', false),
            _ => return Err(err("expected '(' or '['")),
        };
        let end = rest.find(close).ok_or_else(|| err("unclosed bracket"))?;
        let inner = &rest[1..end];
        if inner.contains(['(', ')', '[', ']']) {
            return Err(err("nested or mismatched brackets"));
        }
        let points = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| err("bad integer")))
            .collect::<Result<Vec<_>>>()?;
        for &p in &points {
            if p == 0 || p > n {
                return Err(Error::PointOutOfRange { point: p, degree: n });
            }
            if seen[p] {
                return Err(Error::RepeatedPoint(p));
            }
            seen[p] = true;
        }
        for w in points.windows(2) {
            pairs.push((w[0], w[1]));
        }
        if cyclic {
            pairs.push((*points.last().unwrap(), points[0]));
        }
        rest = rest[end + 1..].trim_start();
    }
    PartialBijection::new(n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pb(n: usize, pairs: &[(usize, usize)]) -> PartialBijection {
        PartialBijection::new(n, pairs).unwrap()
    }

    #[test]
    fn single_link() {
        assert_eq!(cycle_link_format(&pb(3, &[(1, 2), (2, 3)])), "[1,2,3]");
        assert_eq!(cycle_link_format(&pb(4, &[(3, 1)])), "[3,1]");
    }

    #[test]
    fn full_cycle() {
        assert_eq!(cycle_link_format(&pb(3, &[(1, 2), (2, 3), (3, 1)])), "(1,2,3)");
        assert_eq!(cycle_link_format(&pb(3, &[(3, 1), (1, 3)])), "(1,3)");
    }

    #[test]
    fn mixed_and_degenerate() {
        assert_eq!(cycle_link_format(&PartialBijection::zero(2)), "0");
        assert_eq!(cycle_link_format(&PartialBijection::identity(2)), "(1)(2)");
        let s = pb(5, &[(2, 2), (5, 1), (3, 4)]);
        assert_eq!(cycle_link_format(&s), "(2)[5,1][3,4]");
        assert_eq!(cycle_link_parse("(2)[5,1][3,4]", 5).unwrap(), s);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            cycle_link_parse("(1,2)[2,3]", 3),
            Err(Error::RepeatedPoint(2))
        ));
        assert!(matches!(
            cycle_link_parse("[1,4]", 3),
            Err(Error::PointOutOfRange { point: 4, .. })
        ));
        assert!(matches!(cycle_link_parse("(1,2", 3), Err(Error::Parse { .. })));
        assert!(matches!(cycle_link_parse("(1,[2)]", 3), Err(Error::Parse { .. })));
        assert!(matches!(cycle_link_parse("1,2", 3), Err(Error::Parse { .. })));
    }
}
