//! Green's relations, eggbox diagrams, maximal subgroups and Green's-lemma
//! decompositions for an enumerated finite monoid.
//!
//! Classes are numbered by their least member, so class 0 always contains
//! element 0 and numbering is reproducible across runs.

use std::collections::HashMap;

use crate::elements::{FiniteMonoid, Monoid};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= *b;
        }
    }
    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

/// Class index per element and member lists per class for `L`, `R`, `H`, `J`.
#[derive(Clone, Debug)]
pub struct GreenClasses {
    pub lclass: Vec<usize>,
    pub rclass: Vec<usize>,
    pub hclass: Vec<usize>,
    pub jclass: Vec<usize>,
    pub l_members: Vec<Vec<usize>>,
    pub r_members: Vec<Vec<usize>>,
    pub h_members: Vec<Vec<usize>>,
    pub j_members: Vec<Vec<usize>>,
}

impl GreenClasses {
    pub fn num_jclasses(&self) -> usize {
        self.j_members.len()
    }

    /// `L`-classes contained in J-class `j`, by least member.
    pub fn lclasses_in(&self, j: usize) -> Vec<usize> {
        distinct_in_order(self.j_members[j].iter().map(|&x| self.lclass[x]))
    }

    pub fn rclasses_in(&self, j: usize) -> Vec<usize> {
        distinct_in_order(self.j_members[j].iter().map(|&x| self.rclass[x]))
    }

    /// `H`-classes inside the `L`-class `l`, by least member.
    pub fn hclasses_in_l(&self, l: usize) -> Vec<usize> {
        distinct_in_order(self.l_members[l].iter().map(|&x| self.hclass[x]))
    }
}

fn distinct_in_order(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = it.collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Order on J-classes: `J_s <= J_t` iff `SsS ⊆ StS`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JPoset {
    size: usize,
    leq: Vec<bool>,
}

impl JPoset {
    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.size + j]
    }

    /// Covering pairs `(lower, upper)` of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.size {
            for j in 0..self.size {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let between = (0..self.size).any(|k| k != i && k != j && self.leq(i, k) && self.leq(k, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn minimum(&self) -> Option<usize> {
        (0..self.size).find(|&i| (0..self.size).all(|j| self.leq(i, j)))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.size).find(|&i| (0..self.size).all(|j| self.leq(j, i)))
    }

    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| self.leq(i, j) || self.leq(j, i)))
    }

    /// Graph description: one node per class, one edge per covering pair.
    pub fn to_graph(&self, name: &str, label: impl Fn(usize) -> String) -> String {
        let mut out = format!("digraph {name} {{\n");
        for i in 0..self.size {
            out.push_str(&format!("  J{i} [label=\"{}\"];\n", label(i)));
        }
        for (lo, hi) in self.covers() {
            out.push_str(&format!("  J{lo} -> J{hi};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn group_by_bits(bits: &[Bits]) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut ids: HashMap<&Bits, usize> = HashMap::new();
    let mut class = Vec::with_capacity(bits.len());
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (x, b) in bits.iter().enumerate() {
        let next = members.len();
        let id = *ids.entry(b).or_insert(next);
        if id == next {
            members.push(Vec::new());
        }
        members[id].push(x);
        class.push(id);
    }
    (class, members)
}

fn group_by_key<K: std::hash::Hash + Eq>(keys: impl Iterator<Item = K>) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut ids: HashMap<K, usize> = HashMap::new();
    let mut class = Vec::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for (x, k) in keys.enumerate() {
        let next = members.len();
        let id = *ids.entry(k).or_insert(next);
        if id == next {
            members.push(Vec::new());
        }
        members[id].push(x);
        class.push(id);
    }
    (class, members)
}

/// Computes `L`, `R`, `H`, `J` by comparing principal ideals as bitsets.
///
/// Two-sided ideals are formed once per class of the join of `L` and `R`
/// (`SsS = ∪_{t ∈ sS} St`), and the J-classes are read off from equality of
/// those ideals.
pub fn green_structure<M: Monoid>(m: &M) -> (GreenClasses, JPoset) {
    let n = m.order();
    let mut left = vec![Bits::new(n); n];
    let mut right = vec![Bits::new(n); n];
    for s in 0..n {
        for x in 0..n {
            left[s].set(m.mul(x, s));
            right[s].set(m.mul(s, x));
        }
    }
    let (lclass, l_members) = group_by_bits(&left);
    let (rclass, r_members) = group_by_bits(&right);
    let (hclass, h_members) = group_by_key((0..n).map(|x| (lclass[x], rclass[x])));

    // join of L and R by union-find
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for members in l_members.iter().chain(&r_members) {
        for &x in &members[1..] {
            let (a, b) = (find(&mut parent, members[0]), find(&mut parent, x));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut two_sided: HashMap<usize, Bits> = HashMap::new();
    let mut ideal_of = Vec::with_capacity(n);
    for s in 0..n {
        let root = find(&mut parent, s);
        let ideal = two_sided.entry(root).or_insert_with(|| {
            let mut b = Bits::new(n);
            for t in 0..n {
                if right[s].get(t) {
                    b.or_assign(&left[t]);
                }
            }
            b
        });
        ideal_of.push(ideal.clone());
    }
    let (jclass, j_members) = group_by_bits(&ideal_of);
    let k = j_members.len();
    let mut leq = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            let a = &ideal_of[j_members[i][0]];
            let b = &ideal_of[j_members[j][0]];
            leq[i * k + j] = a.is_subset(b);
        }
    }
    (
        GreenClasses {
            lclass,
            rclass,
            hclass,
            jclass,
            l_members,
            r_members,
            h_members,
            j_members,
        },
        JPoset { size: k, leq },
    )
}

/// One J-class drawn as a grid: rows are R-classes, columns L-classes.
#[derive(Clone, Debug)]
pub struct Eggbox {
    pub jclass: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    /// `cells[r][c]` lists the H-class at row `r`, column `c`.
    pub cells: Vec<Vec<Vec<usize>>>,
    pub idempotent: Vec<Vec<Option<usize>>>,
}

impl Eggbox {
    /// Order of the maximal subgroups in this J-class (0 when none).
    pub fn group_order(&self) -> usize {
        for (r, row) in self.idempotent.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                if e.is_some() {
                    return self.cells[r][c].len();
                }
            }
        }
        0
    }

    /// Plain text grid; idempotent cells are marked with `*`.
    pub fn render(&self, label: impl Fn(usize) -> String) -> String {
        let text: Vec<Vec<String>> = self
            .cells
            .iter()
            .enumerate()
            .map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(|(c, cell)| {
                        let mark = if self.idempotent[r][c].is_some() { "*" } else { "" };
                        let body: Vec<String> = cell.iter().map(|&x| label(x)).collect();
                        format!("{mark}{}", body.join(" "))
                    })
                    .collect()
            })
            .collect();
        let ncols = self.cols.len();
        let width: Vec<usize> = (0..ncols)
            .map(|c| text.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
            .collect();
        let rule: String = {
            let mut s = String::from("+");
            for w in &width {
                s.push_str(&"-".repeat(w + 2));
                s.push('+');
            }
            s
        };
        let mut out = String::new();
        out.push_str(&rule);
        out.push('\n');
        for row in &text {
            out.push('|');
            for (c, cell) in row.iter().enumerate() {
                let pad = width[c] - cell.chars().count();
                out.push_str(&format!(" {cell}{} |", " ".repeat(pad)));
            }
            out.push('\n');
            out.push_str(&rule);
            out.push('\n');
        }
        out
    }
}

pub fn eggbox<M: Monoid>(m: &M, green: &GreenClasses, j: usize) -> Result<Eggbox> {
    if j >= green.num_jclasses() {
        return Err(Error::Invalid(format!("no J-class {j}")));
    }
    let rows = green.rclasses_in(j);
    let cols = green.lclasses_in(j);
    let mut cells = vec![vec![Vec::new(); cols.len()]; rows.len()];
    for &x in &green.j_members[j] {
        let r = rows.binary_search(&green.rclass[x]).unwrap();
        let c = cols.binary_search(&green.lclass[x]).unwrap();
        cells[r][c].push(x);
    }
    let idempotent = cells
        .iter()
        .map(|row| {
            row.iter()
                .map(|cell: &Vec<usize>| cell.iter().copied().find(|&x| m.mul(x, x) == x))
                .collect()
        })
        .collect();
    Ok(Eggbox {
        jclass: j,
        rows,
        cols,
        cells,
        idempotent,
    })
}

pub fn idempotents<M: Monoid>(m: &M) -> Vec<usize> {
    (0..m.order()).filter(|&x| m.mul(x, x) == x).collect()
}

/// The H-class of `e` as a group with identity `e`. Elements of the returned
/// monoid are indices into `m`.
pub fn maximal_subgroup<M: Monoid>(m: &M, green: &GreenClasses, e: usize) -> Result<FiniteMonoid<usize>> {
    if m.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    let members = green.h_members[green.hclass[e]].clone();
    let k = members.len();
    let mut table = vec![0u32; k * k];
    for (i, &x) in members.iter().enumerate() {
        for (j, &y) in members.iter().enumerate() {
            let p = m.mul(x, y);
            let pos = members
                .binary_search(&p)
                .map_err(|_| Error::Verification("H-class of an idempotent not closed".into()))?;
            table[i * k + j] = pos as u32;
        }
    }
    let identity = members.binary_search(&e).unwrap();
    let group = FiniteMonoid::from_table(members, table, identity, (0..k).collect())?;
    for i in 0..k {
        if !(0..k).any(|j| group.mul(i, j) == identity && group.mul(j, i) == identity) {
            return Err(Error::Verification(format!("element {i} of H_e has no inverse")));
        }
    }
    Ok(group)
}

/// Representatives `s_i`, one per H-class of `L_e`, with `e` representing
/// its own class and the least member representing every other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    pub e: usize,
    pub reps: Vec<usize>,
    /// H-class id of each representative.
    pub hclasses: Vec<usize>,
}

impl Transversal {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn position_of_hclass(&self, h: usize) -> Option<usize> {
        self.hclasses.iter().position(|&x| x == h)
    }
}

pub fn transversal<M: Monoid>(m: &M, green: &GreenClasses, e: usize) -> Result<Transversal> {
    if m.mul(e, e) != e {
        return Err(Error::NotIdempotent(e));
    }
    let hclasses = green.hclasses_in_l(green.lclass[e]);
    let reps = hclasses
        .iter()
        .map(|&h| if h == green.hclass[e] { e } else { green.h_members[h][0] })
        .collect();
    Ok(Transversal { e, reps, hclasses })
}

/// Writes `t ∈ L_e` as `s_i g` with `g ∈ G_e`. Returns the position `i` of
/// `s_i` in the transversal and `g` (an index into `m`). Fails unless exactly
/// one such `g` exists.
pub fn hclass_decompose<M: Monoid>(
    m: &M,
    green: &GreenClasses,
    trans: &Transversal,
    t: usize,
) -> Result<(usize, usize)> {
    let e = trans.e;
    if green.lclass[t] != green.lclass[e] {
        return Err(Error::NotInLClass { t, e });
    }
    let i = trans
        .position_of_hclass(green.hclass[t])
        .ok_or(Error::NotInLClass { t, e })?;
    let s = trans.reps[i];
    let mut found = green.h_members[green.hclass[e]]
        .iter()
        .copied()
        .filter(|&g| m.mul(s, g) == t);
    let g = found
        .next()
        .ok_or_else(|| Error::Verification(format!("no g with s_i g = {t}")))?;
    if found.next().is_some() {
        return Err(Error::Verification(format!("decomposition of {t} is not unique")));
    }
    Ok((i, g))
}

/// The bijection `G_e -> G_f`, `g -> s g s*`, for `s ∈ L_e ∩ R_f`.
#[derive(Clone, Debug)]
pub struct SubgroupIso {
    pub e: usize,
    pub f: usize,
    pub s: usize,
    pub s_star: usize,
    /// `(g, s g s*)` for every `g ∈ G_e`, sorted by `g`.
    pub pairs: Vec<(usize, usize)>,
}

impl SubgroupIso {
    pub fn apply(&self, g: usize) -> Option<usize> {
        self.pairs.iter().find(|p| p.0 == g).map(|p| p.1)
    }
}

pub fn jclass_subgroup_iso<M: Monoid>(
    m: &M,
    green: &GreenClasses,
    e: usize,
    f: usize,
    s: usize,
) -> Result<SubgroupIso> {
    for x in [e, f] {
        if m.mul(x, x) != x {
            return Err(Error::NotIdempotent(x));
        }
    }
    if green.jclass[e] != green.jclass[f] {
        return Err(Error::Invalid(format!("idempotents {e} and {f} are not J-related")));
    }
    if green.lclass[s] != green.lclass[e] || green.rclass[s] != green.rclass[f] {
        return Err(Error::Invalid(format!("{s} is not in the H-class L_e ∩ R_f")));
    }
    let s_star = (0..m.order())
        .find(|&x| {
            m.mul(m.mul(s, x), s) == s
                && m.mul(m.mul(x, s), x) == x
                && m.mul(x, s) == e
                && m.mul(s, x) == f
        })
        .ok_or_else(|| Error::Verification(format!("no inverse of {s} pairing {e} and {f}")))?;
    let ge = &green.h_members[green.hclass[e]];
    let gf = &green.h_members[green.hclass[f]];
    let pairs: Vec<(usize, usize)> = ge.iter().map(|&g| (g, m.mul(m.mul(s, g), s_star))).collect();
    let mut images: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    images.sort_unstable();
    if images != *gf {
        return Err(Error::Verification("g -> s g s* is not a bijection onto G_f".into()));
    }
    for &(g1, h1) in &pairs {
        for &(g2, h2) in &pairs {
            let image = pairs.iter().find(|p| p.0 == m.mul(g1, g2)).unwrap().1;
            if image != m.mul(h1, h2) {
                return Err(Error::Verification("g -> s g s* is not multiplicative".into()));
            }
        }
        if m.mul(m.mul(s_star, h1), s) != g1 {
            return Err(Error::Verification("h -> s* h s does not invert".into()));
        }
    }
    Ok(SubgroupIso { e, f, s, s_star, pairs })
}
