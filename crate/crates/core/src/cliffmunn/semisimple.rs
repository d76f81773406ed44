use crate::elements::Monoid;
use crate::error::{Error, Result};
use crate::green::{green_structure, idempotents};
use crate::linrep::{
    commutant_dim, equivariant_projection, find_invariant_subspace_with, Character, Representation,
    SeedOrder, SemisimpleCertificate, Subspace,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Semisimplicity {
    Semisimple,
    NotSemisimple,
    Unknown,
}

#[derive(Clone, Debug)]
pub struct SemisimpleVerdict {
    pub status: Semisimplicity,
    pub reason: String,
    /// Issued only for characteristic 0, where all computations here live.
    pub certificate: Option<SemisimpleCertificate>,
}

pub fn is_group<M: Monoid>(m: &M) -> bool {
    (0..m.order()).all(|s| (0..m.order()).any(|t| m.mul(s, t) == m.identity()))
}

/// Every element has exactly one `t` with `sts = s` and `tst = t`.
pub fn is_inverse_monoid<M: Monoid>(m: &M) -> bool {
    (0..m.order()).all(|s| {
        (0..m.order())
            .filter(|&t| m.mul(m.mul(s, t), s) == s && m.mul(m.mul(t, s), t) == t)
            .count()
            == 1
    })
}

fn divides(p: u64, n: usize) -> bool {
    p != 0 && n as u64 % p == 0
}

/// Maschke for groups, Munn-Oganesyan for inverse monoids, otherwise unknown.
pub fn semisimple_predicate<M: Monoid>(m: &M, characteristic: u64) -> SemisimpleVerdict {
    let p = characteristic;
    let verdict = |status, reason: String| {
        let certificate = (status == Semisimplicity::Semisimple && p == 0)
            .then(|| SemisimpleCertificate::issue(m.handle(), reason.clone()));
        SemisimpleVerdict {
            status,
            reason,
            certificate,
        }
    };
    if is_group(m) {
        return if divides(p, m.order()) {
            verdict(
                Semisimplicity::NotSemisimple,
                format!("group of order {} divisible by {p}", m.order()),
            )
        } else {
            verdict(
                Semisimplicity::Semisimple,
                format!("Maschke: group of order {}", m.order()),
            )
        };
    }
    if is_inverse_monoid(m) {
        let (green, _) = green_structure(m);
        let mut orders: Vec<usize> = idempotents(m)
            .iter()
            .map(|&e| green.h_members[green.hclass[e]].len())
            .collect();
        orders.sort_unstable();
        orders.dedup();
        return match orders.iter().find(|&&k| divides(p, k)) {
            Some(k) => verdict(
                Semisimplicity::NotSemisimple,
                format!("maximal subgroup of order {k} divisible by {p}"),
            ),
            None => verdict(
                Semisimplicity::Semisimple,
                format!("Munn-Oganesyan: inverse monoid, maximal subgroup orders {orders:?}"),
            ),
        };
    }
    verdict(
        Semisimplicity::Unknown,
        "not an inverse monoid; no criterion applies".into(),
    )
}

/// Splits `v` into irreducibles by repeated invariant-subspace search and
/// equivariant-projection complements.
pub fn decompose(
    v: &Representation,
    cert: &SemisimpleCertificate,
    order: SeedOrder,
) -> Result<Vec<Representation>> {
    if !cert.covers(v.monoid()) {
        return Err(Error::CertificateMismatch);
    }
    let mut done = Vec::new();
    let mut pending = vec![v.clone()];
    while let Some(rep) = pending.pop() {
        if rep.dim() == 1 || commutant_dim(&rep) == 1 {
            done.push(rep);
            continue;
        }
        let u = find_invariant_subspace_with(&rep, order)
            .ok_or_else(|| Error::SplitFailed(format!("no invariant subspace in dimension {}", rep.dim())))?;
        let p = equivariant_projection(&rep, &u)
            .ok_or_else(|| Error::SplitFailed("no equivariant projection".into()))?;
        let complement = Subspace::kernel(&p);
        if complement.dim() + u.dim() != rep.dim() {
            return Err(Error::SplitFailed("complement has the wrong dimension".into()));
        }
        pending.push(rep.restrict(&complement)?);
        pending.push(rep.restrict(&u)?);
    }
    Ok(done)
}

/// Characters of the factors, sorted, for multiset comparison.
pub fn character_multiset(factors: &[Representation]) -> Vec<Character> {
    let mut out: Vec<Character> = factors.iter().map(Representation::character).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}
