//! Line-oriented text form of matrices and representations. Rationals are
//! written `p/q`, rows one per line, elements in monoid index order.

use std::fmt::Write;

use super::matrix::{format_rational, parse_rational, Matrix, Rational};
use super::rep::Representation;
use crate::elements::Monoid;
use crate::error::{Error, Result};

pub fn write_matrix(out: &mut String, m: &Matrix) {
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(format_rational).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
}

pub fn write_representation(rep: &Representation) -> String {
    let mut out = String::new();
    writeln!(out, "representation").unwrap();
    writeln!(out, "order {}", rep.monoid().order()).unwrap();
    writeln!(out, "dim {}", rep.dim()).unwrap();
    for (s, m) in rep.matrices().iter().enumerate() {
        writeln!(out, "element {s}").unwrap();
        write_matrix(&mut out, m);
    }
    writeln!(out, "end").unwrap();
    out
}

fn parse_err(text: &str, reason: &str) -> Error {
    Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    }
}

fn keyed(line: Option<&str>, key: &str) -> Result<usize> {
    let line = line.ok_or_else(|| parse_err("", "unexpected end of input"))?;
    line.strip_prefix(key)
        .and_then(|r| r.trim().parse().ok())
        .ok_or_else(|| parse_err(line, &format!("expected `{key} <n>`")))
}

/// Parses the output of [`write_representation`] against `monoid`, then
/// re-verifies the homomorphism law.
pub fn parse_representation<M: Monoid>(text: &str, monoid: &M) -> Result<Representation> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    match lines.next() {
        Some("representation") => {}
        other => return Err(parse_err(other.unwrap_or(""), "expected `representation`")),
    }
    let order = keyed(lines.next(), "order")?;
    if order != monoid.order() {
        return Err(Error::MonoidMismatch(order, monoid.order()));
    }
    let dim = keyed(lines.next(), "dim")?;
    let mut matrices = Vec::with_capacity(order);
    for s in 0..order {
        if keyed(lines.next(), "element")? != s {
            return Err(parse_err("", "elements out of order"));
        }
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(dim);
        for _ in 0..dim {
            let line = lines.next().ok_or_else(|| parse_err("", "missing matrix row"))?;
            let row = line
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            if row.len() != dim {
                return Err(parse_err(line, "wrong row length"));
            }
            rows.push(row);
        }
        matrices.push(Matrix::from_rows(rows));
    }
    match lines.next() {
        Some("end") => Representation::new(monoid, matrices),
        other => Err(parse_err(other.unwrap_or(""), "expected `end`")),
    }
}
