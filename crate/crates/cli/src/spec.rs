use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use regmon::cliffmunn::CatalogMonoid;
use regmon::elements::{
    closure, cycle_link_parse, full_transformation_monoid, symmetric_group, symmetric_inverse_monoid,
    FiniteMonoid, PartialBijection, Permutation, Transformation, DEFAULT_CAP,
};
use regmon::lattice::LatticeKind;
use regmon::{Error, Result};

/// Kind letter of a built-in family or a generator file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Symmetric,
    Inverse,
    Transformation,
}

impl Family {
    fn from_letter(s: &str) -> Option<Self> {
        match s {
            "S" => Some(Family::Symmetric),
            "I" => Some(Family::Inverse),
            "T" => Some(Family::Transformation),
            _ => None,
        }
    }

    fn letter(self) -> &'static str {
        match self {
            Family::Symmetric => "S",
            Family::Inverse => "I",
            Family::Transformation => "T",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidSpec {
    Builtin(Family, usize),
    Sgl(LatticeKind, usize),
    Gens(PathBuf),
}

fn parse_err(text: &str, reason: &str) -> Error {
    Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    }
}

fn degree(text: &str, field: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| parse_err(text, "degree must be a non-negative integer"))
}

impl FromStr for MonoidSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        if let Some(path) = text.strip_prefix("gens:") {
            if path.is_empty() {
                return Err(parse_err(text, "missing generator file"));
            }
            return Ok(MonoidSpec::Gens(PathBuf::from(path)));
        }
        let fields: Vec<&str> = text.split(':').collect();
        match fields.as_slice() {
            [kind, n] => {
                let family = Family::from_letter(kind)
                    .ok_or_else(|| parse_err(text, "expected S:n, I:n, T:n, SGL:<lattice>:n or gens:<file>"))?;
                Ok(MonoidSpec::Builtin(family, degree(text, n)?))
            }
            ["SGL", lattice, n] => {
                let kind = LatticeKind::from_name(lattice)
                    .ok_or_else(|| parse_err(text, "lattice must be subsets, partitions or ordperm"))?;
                Ok(MonoidSpec::Sgl(kind, degree(text, n)?))
            }
            _ => Err(parse_err(
                text,
                "expected S:n, I:n, T:n, SGL:<lattice>:n or gens:<file>",
            )),
        }
    }
}

impl fmt::Display for MonoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidSpec::Builtin(family, n) => write!(f, "{}:{n}", family.letter()),
            MonoidSpec::Sgl(kind, n) => write!(f, "SGL:{}:{n}", kind.name()),
            MonoidSpec::Gens(path) => write!(f, "gens:{}", path.display()),
        }
    }
}

/// A monoid built from a spec, keeping its concrete elements for labels.
pub enum Model {
    Catalog(CatalogMonoid),
    Transformations(FiniteMonoid<Transformation>),
}

fn factorial(n: usize) -> Option<usize> {
    (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Order of the built-in family, or `None` when it overflows.
pub fn predicted_order(family: Family, n: usize) -> Option<usize> {
    match family {
        Family::Symmetric => factorial(n),
        Family::Transformation => u32::try_from(n).ok().and_then(|e| n.checked_pow(e)),
        Family::Inverse => (0..=n).try_fold(0usize, |acc, k| {
            let c = binomial(n, k);
            c.checked_mul(c)?.checked_mul(factorial(k)?)?.checked_add(acc)
        }),
    }
}

fn check_cap(family: Family, n: usize) -> Result<()> {
    // Binomials stay exact well past the point where the order leaves the cap.
    if n > 20 {
        return Err(Error::CapExceeded { cap: DEFAULT_CAP });
    }
    match predicted_order(family, n) {
        Some(order) if order <= DEFAULT_CAP => Ok(()),
        _ => Err(Error::CapExceeded { cap: DEFAULT_CAP }),
    }
}

impl Model {
    pub fn build(spec: &MonoidSpec) -> Result<Model> {
        match spec {
            MonoidSpec::Builtin(family, n) => {
                check_cap(*family, *n)?;
                Ok(match family {
                    Family::Symmetric => Model::Catalog(CatalogMonoid::Symmetric(symmetric_group(*n))),
                    Family::Inverse => Model::Catalog(CatalogMonoid::Inverse(symmetric_inverse_monoid(*n))),
                    Family::Transformation => Model::Transformations(full_transformation_monoid(*n)),
                })
            }
            MonoidSpec::Sgl(kind, n) => Ok(Model::Catalog(CatalogMonoid::sgl(*kind, *n)?)),
            MonoidSpec::Gens(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
                parse_generator_file(&text)
            }
        }
    }

    pub fn label(&self, s: usize) -> String {
        match self {
            Model::Catalog(c) => c.element_label(s),
            Model::Transformations(m) => m.element(s).to_string(),
        }
    }
}

/// First line `S n`, `I n` or `T n`; then one generator per line. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_generator_file(text: &str) -> Result<Model> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| parse_err("", "empty generator file"))?;
    let mut words = header.split_whitespace();
    let family = words
        .next()
        .and_then(Family::from_letter)
        .ok_or_else(|| parse_err(header, "first line must be `S n`, `I n` or `T n`"))?;
    let n: usize = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| parse_err(header, "missing degree"))?;
    if words.next().is_some() {
        return Err(parse_err(header, "trailing text after degree"));
    }
    let body: Vec<&str> = lines.collect();
    match family {
        Family::Symmetric => {
            let gens = body
                .iter()
                .map(|l| Permutation::parse(l, n))
                .collect::<Result<Vec<_>>>()?;
            let m = closure(&gens, Permutation::identity(n), |a, b| {
                a.compose(b).expect("generators share a degree")
            })?;
            Ok(Model::Catalog(CatalogMonoid::Symmetric(m)))
        }
        Family::Inverse => {
            let gens = body
                .iter()
                .map(|l| cycle_link_parse(l, n))
                .collect::<Result<Vec<_>>>()?;
            let m = closure(&gens, PartialBijection::identity(n), |a, b| {
                a.compose(b).expect("generators share a degree")
            })?;
            Ok(Model::Catalog(CatalogMonoid::Inverse(m)))
        }
        Family::Transformation => {
            let gens = body
                .iter()
                .map(|l| {
                    let t = Transformation::parse(l)?;
                    if t.degree() != n {
                        return Err(Error::DegreeMismatch(t.degree(), n));
                    }
                    Ok(t)
                })
                .collect::<Result<Vec<_>>>()?;
            let m = closure(&gens, Transformation::identity(n), |a, b| {
                a.compose(b).expect("generators share a degree")
            })?;
            Ok(Model::Transformations(m))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_form() {
        assert_eq!("S:3".parse::<MonoidSpec>().unwrap(), MonoidSpec::Builtin(Family::Symmetric, 3));
        assert_eq!(
            "SGL:ordperm:3".parse::<MonoidSpec>().unwrap(),
            MonoidSpec::Sgl(LatticeKind::OrderedPartitionsZero, 3)
        );
        assert_eq!(
            "gens:x.txt".parse::<MonoidSpec>().unwrap(),
            MonoidSpec::Gens(PathBuf::from("x.txt"))
        );
        for bad in ["Q:3", "S:x", "SGL:chains:3", "S", "gens:", "S:3:1"] {
            assert!(bad.parse::<MonoidSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_roundtrips() {
        for s in ["S:3", "I:4", "T:2", "SGL:subsets:3", "gens:a/b.txt"] {
            assert_eq!(s.parse::<MonoidSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn predicted_orders() {
        assert_eq!(predicted_order(Family::Inverse, 3), Some(34));
        assert_eq!(predicted_order(Family::Transformation, 3), Some(27));
        assert_eq!(predicted_order(Family::Symmetric, 4), Some(24));
        assert!(check_cap(Family::Transformation, 7).is_err());
        assert!(check_cap(Family::Inverse, 6).is_ok());
    }

    #[test]
    fn generator_file_builds_closure() {
        let m = parse_generator_file("I 3\n(1,2)\n(1,2,3)\n[1,2]\n").unwrap();
        match m {
            Model::Catalog(CatalogMonoid::Inverse(m)) => assert!(m.len() > 6),
            _ => panic!("wrong family"),
        }
        let t = parse_generator_file("T 2\n[1,1]\n").unwrap();
        match t {
            Model::Transformations(m) => assert_eq!(m.len(), 2),
            _ => panic!("wrong family"),
        }
        assert!(parse_generator_file("X 2\n").is_err());
        assert!(parse_generator_file("T 2\n[1,1,1]\n").is_err());
    }
}
