use crate::elements::{FiniteMonoid, Monoid, MonoidTable};
use crate::error::{Error, Result};
use crate::green::{hclass_decompose, transversal, GreenClasses, Transversal};
use crate::lattice::{SglElement, SglMonoid};
use crate::linrep::{Matrix, Representation, Subspace};

/// `U = ⊕ s_i ⊗ V` over a transversal of the H-classes in `L_e`, before
/// dividing out the annihilator.
#[derive(Clone, Debug)]
pub struct InducedRaw {
    pub e: usize,
    pub transversal: Transversal,
    pub base_dim: usize,
    /// `blocks[t][i]` is `Some((j, g))` when `t s_i = s_j g`, `None` when
    /// `t` kills the copy `V_i`.
    pub blocks: Vec<Vec<Option<(usize, usize)>>>,
    pub rep: Representation,
}

fn write_block(out: &mut Matrix, row: usize, col: usize, block: &Matrix) {
    for a in 0..block.rows() {
        for b in 0..block.cols() {
            out.set(row + a, col + b, block.get(a, b).clone());
        }
    }
}

fn group_position(group: &FiniteMonoid<usize>, g: usize) -> Result<usize> {
    group
        .index_of(&g)
        .ok_or_else(|| Error::Verification(format!("{g} is not in G_e")))
}

pub fn induce_raw<M: Monoid>(
    m: &M,
    green: &GreenClasses,
    e: usize,
    group: &FiniteMonoid<usize>,
    v: &Representation,
) -> Result<InducedRaw> {
    let trans = transversal(m, green, e)?;
    induce_raw_with(m, green, &trans, group, v)
}

/// As [`induce_raw`] with an explicit transversal.
pub fn induce_raw_with<M: Monoid>(
    m: &M,
    green: &GreenClasses,
    trans: &Transversal,
    group: &FiniteMonoid<usize>,
    v: &Representation,
) -> Result<InducedRaw> {
    let e = trans.e;
    if !v.monoid().same_as(&group.handle()) {
        return Err(Error::MonoidMismatch(v.monoid().order(), group.len()));
    }
    let k = trans.len();
    let d = v.dim();
    let le = green.lclass[e];
    let mut blocks = Vec::with_capacity(m.order());
    let mut matrices = Vec::with_capacity(m.order());
    for t in 0..m.order() {
        let mut row = Vec::with_capacity(k);
        let mut mat = Matrix::zeros(k * d, k * d);
        for (i, &s) in trans.reps.iter().enumerate() {
            let ts = m.mul(t, s);
            if green.lclass[ts] != le {
                row.push(None);
                continue;
            }
            let (j, g) = hclass_decompose(m, green, trans, ts)?;
            write_block(&mut mat, j * d, i * d, v.matrix(group_position(group, g)?));
            row.push(Some((j, g)));
        }
        blocks.push(row);
        matrices.push(mat);
    }
    let rep = Representation::new(m, matrices)?;
    Ok(InducedRaw {
        e,
        transversal: trans.clone(),
        base_dim: d,
        blocks,
        rep,
    })
}

/// `Ann_e(U)`: vectors killed by every element of `R_e`.
pub fn annihilator(raw: &InducedRaw, green: &GreenClasses) -> Subspace {
    let r_e = &green.r_members[green.rclass[raw.e]];
    let stacked = r_e
        .iter()
        .map(|&s| raw.rep.matrix(s).clone())
        .reduce(|a, b| a.vstack(&b))
        .expect("R_e contains e");
    Subspace::kernel(&stacked)
}

/// `V↑S = U / Ann_e(U)`.
pub fn induce<M: Monoid>(
    m: &M,
    green: &GreenClasses,
    e: usize,
    group: &FiniteMonoid<usize>,
    v: &Representation,
) -> Result<Representation> {
    let raw = induce_raw(m, green, e, group, v)?;
    quotient_by_annihilator(&raw, green)
}

pub fn quotient_by_annihilator(raw: &InducedRaw, green: &GreenClasses) -> Result<Representation> {
    let ann = annihilator(raw, green);
    if ann.is_zero() {
        Ok(raw.rep.clone())
    } else {
        raw.rep.quotient(&ann)
    }
}

/// Direct induction for `S(G, L)` from `G_a`: the copies are indexed by the
/// orbit `G·a`, each `b` reached by the least `β` with `β·a = b`, and
/// `g_c · (b ⊗ v) = d ⊗ (δ⁻¹ g β)_a · v` when `b <= c`, `d = g·b`.
pub fn induce_sgl(
    sgl: &SglMonoid,
    monoid: &FiniteMonoid<SglElement>,
    a: usize,
    group: &FiniteMonoid<usize>,
    v: &Representation,
) -> Result<Representation> {
    let g_table: MonoidTable = group.handle();
    if !v.monoid().same_as(&g_table) {
        return Err(Error::MonoidMismatch(v.monoid().order(), group.len()));
    }
    let action = sgl.action();
    let grp = sgl.group();
    let lattice = sgl.lattice();
    let mut orbit: Vec<(usize, usize)> = Vec::new();
    for g in 0..grp.len() {
        let b = action.act(g, a);
        if !orbit.iter().any(|&(x, _)| x == b) {
            orbit.push((b, g));
        }
    }
    orbit.sort_by_key(|&(_, beta)| beta);
    let k = orbit.len();
    let d = v.dim();
    let mut matrices = Vec::with_capacity(monoid.len());
    for x in monoid.elements() {
        let (g, c) = (x.g as usize, x.a as usize);
        let mut mat = Matrix::zeros(k * d, k * d);
        for (i, &(b, beta)) in orbit.iter().enumerate() {
            if !lattice.leq(b, c) {
                continue;
            }
            let target = action.act(g, b);
            let j = orbit
                .iter()
                .position(|&(y, _)| y == target)
                .ok_or_else(|| Error::Verification("orbit not closed".into()))?;
            let delta_inv = action.group_inverse(orbit[j].1);
            let h = grp.mul(grp.mul(delta_inv, g), beta);
            let element = sgl.canonical(h, a);
            let idx = monoid
                .index_of(&element)
                .ok_or_else(|| Error::Verification("element outside the monoid".into()))?;
            write_block(&mut mat, j * d, i * d, v.matrix(group_position(group, idx)?));
        }
        matrices.push(mat);
    }
    Representation::new(monoid, matrices)
}
