use crate::elements::{FiniteMonoid, Monoid};
use crate::error::{Error, Result};
use crate::green::{maximal_subgroup, GreenClasses, JPoset};
use crate::linrep::{Matrix, Representation, Subspace};

/// `eV` with the action of the maximal subgroup `G_e`.
#[derive(Clone, Debug)]
pub struct ReducedRep {
    pub e: usize,
    pub carrier: Subspace,
    /// `G_e` with elements given as monoid indices.
    pub group: FiniteMonoid<usize>,
    /// `None` when `eV = 0`.
    pub rep: Option<Representation>,
}

/// Restricts `v` to `eV`, the column space of `φ(e)`, as a `G_e`-representation.
pub fn reduce(v: &Representation, green: &GreenClasses, e: usize) -> Result<ReducedRep> {
    let m = v.monoid();
    if m.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    let group = maximal_subgroup(m, green, e)?;
    let carrier = Subspace::column_space(v.matrix(e));
    if carrier.is_zero() {
        return Ok(ReducedRep {
            e,
            carrier,
            group,
            rep: None,
        });
    }
    let basis = carrier.basis_vectors();
    let d = basis.len();
    let mut matrices = Vec::with_capacity(group.len());
    for &g in group.elements() {
        let mut out = Matrix::zeros(d, d);
        for (j, b) in basis.iter().enumerate() {
            let c = carrier
                .coords(&v.matrix(g).mul_vec(b))
                .ok_or_else(|| Error::Verification("G_e leaves eV".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                out.set(i, j, x);
            }
        }
        if !out.is_invertible() {
            return Err(Error::Verification(format!("element {g} of G_e is singular on eV")));
        }
        matrices.push(out);
    }
    let rep = Representation::new(&group, matrices)?;
    Ok(ReducedRep {
        e,
        carrier,
        group,
        rep: Some(rep),
    })
}

/// J-classes on which `V` is nonzero, and the least of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApexReport {
    pub apex: usize,
    pub support: Vec<usize>,
}

/// `{J : eV != 0 for e ∈ J}`, checked for every idempotent of every class.
/// Fails unless the set is upward closed with a least element.
pub fn support<M: Monoid>(m: &M, v: &Representation, green: &GreenClasses) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (j, members) in green.j_members.iter().enumerate() {
        let nonzero: Vec<bool> = members
            .iter()
            .filter(|&&x| m.mul(x, x) == x)
            .map(|&e| !v.matrix(e).is_zero())
            .collect();
        if nonzero.is_empty() {
            continue;
        }
        if nonzero.iter().any(|&b| b != nonzero[0]) {
            return Err(Error::Verification(format!(
                "idempotents of J{j} disagree on whether eV vanishes"
            )));
        }
        if nonzero[0] {
            out.push(j);
        }
    }
    Ok(out)
}

pub fn apex<M: Monoid>(m: &M, v: &Representation, green: &GreenClasses, poset: &JPoset) -> Result<ApexReport> {
    let support = support(m, v, green)?;
    let least: Vec<usize> = support
        .iter()
        .copied()
        .filter(|&j| support.iter().all(|&k| poset.leq(j, k)))
        .collect();
    let [apex] = least[..] else {
        return Err(Error::SupportNotInterval);
    };
    let has_idempotent = |j: usize| green.j_members[j].iter().any(|&x| m.mul(x, x) == x);
    let upward: Vec<usize> = (0..poset.len())
        .filter(|&k| poset.leq(apex, k) && has_idempotent(k))
        .collect();
    if upward != support {
        return Err(Error::SupportNotInterval);
    }
    Ok(ApexReport { apex, support })
}
