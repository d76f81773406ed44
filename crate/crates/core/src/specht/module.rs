use std::collections::HashMap;

use num_traits::Zero;

use super::partition::IntegerPartition;
use super::tableau::{all_tableaux, column_group, Tableau, Tabloid};
use crate::elements::{symmetric_group, FiniteMonoid, Monoid, MonoidTable, Permutation};
use crate::error::{Error, Result};
use crate::linrep::{inner_tensor, outer_tensor, q, subsets_of_size, Matrix, Rational, Representation, Subspace};

/// Tabloids of shape `λ` on `labels`, ordered lexicographically by sorted rows.
pub fn tabloids(shape: &IntegerPartition, labels: &[usize]) -> Vec<Tabloid> {
    fn go(parts: &[usize], rest: &[usize], cur: &mut Vec<Vec<usize>>, out: &mut Vec<Tabloid>) {
        let Some((&p, tail)) = parts.split_first() else {
            out.push(Tabloid::from_rows(cur.clone()));
            return;
        };
        for pick in subsets_of_size(rest.len(), p) {
            let row: Vec<usize> = pick.iter().map(|&i| rest[i]).collect();
            let remaining: Vec<usize> = rest.iter().copied().filter(|x| !row.contains(x)).collect();
            cur.push(row);
            go(tail, &remaining, cur, out);
            cur.pop();
        }
    }
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    go(shape.parts(), &sorted, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn check_labels(shape: &IntegerPartition, labels: &[usize]) -> Result<()> {
    let mut s = labels.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != labels.len() || shape.n() != labels.len() {
        return Err(Error::Invalid(format!(
            "labels {labels:?} do not fit shape {shape}"
        )));
    }
    Ok(())
}

/// `M^λ` for a monoid acting on `labels` through `act(s, label)`, each `s`
/// permuting the labels.
pub fn tabloid_module_on<M: Monoid>(
    m: &M,
    shape: &IntegerPartition,
    labels: &[usize],
    act: &dyn Fn(usize, usize) -> usize,
) -> Result<(Vec<Tabloid>, Representation)> {
    check_labels(shape, labels)?;
    let basis = tabloids(shape, labels);
    let index: HashMap<&Tabloid, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let d = basis.len();
    let mut matrices = Vec::with_capacity(m.order());
    for s in 0..m.order() {
        let mut mat = Matrix::zeros(d, d);
        for (j, t) in basis.iter().enumerate() {
            let image = t.map(|x| act(s, x));
            let i = *index
                .get(&image)
                .ok_or_else(|| Error::Invalid("action does not permute the labels".into()))?;
            mat.set(i, j, q(1));
        }
        matrices.push(mat);
    }
    let rep = Representation::new(m, matrices)?;
    Ok((basis, rep))
}

/// The symmetric group on `labels`, as `S_k` acting through positions.
fn label_action(labels: &[usize]) -> (FiniteMonoid<Permutation>, impl Fn(usize, usize) -> usize) {
    let group = symmetric_group(labels.len());
    let position: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &x)| (x, i + 1)).collect();
    let images: Vec<Vec<usize>> = group.elements().iter().map(Permutation::images).collect();
    let labels = labels.to_vec();
    let act = move |s: usize, x: usize| labels[images[s][position[&x] - 1] - 1];
    (group, act)
}

pub fn tabloid_module(shape: &IntegerPartition, labels: &[usize]) -> Result<(Vec<Tabloid>, Representation)> {
    check_labels(shape, labels)?;
    let (group, act) = label_action(labels);
    tabloid_module_on(&group, shape, labels, &act)
}

/// `v_T = Σ_{h ∈ c_T} sign(h) {hT}` in the coordinates of `basis`.
pub fn polytabloid(t: &Tableau, basis: &[Tabloid]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); basis.len()];
    for h in column_group(t) {
        let image = t.map(|x| h.apply(x)).tabloid();
        let i = basis.binary_search(&image).expect("tabloid basis is complete");
        v[i] += q(h.sign as i64);
    }
    v
}

/// `S^λ` inside `M^λ`, with its representation on the echelon basis.
#[derive(Clone, Debug)]
pub struct SpechtData {
    pub shape: IntegerPartition,
    pub labels: Vec<usize>,
    pub tabloids: Vec<Tabloid>,
    pub module: Representation,
    pub subspace: Subspace,
    pub rep: Representation,
}

impl SpechtData {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

/// Spans the polytabloids of every tableau and restricts `M^λ` to the span.
pub fn specht_on<M: Monoid>(
    m: &M,
    shape: &IntegerPartition,
    labels: &[usize],
    act: &dyn Fn(usize, usize) -> usize,
) -> Result<SpechtData> {
    let (basis, module) = tabloid_module_on(m, shape, labels, act)?;
    let vectors: Vec<Vec<Rational>> = all_tableaux(shape, labels)
        .iter()
        .map(|t| polytabloid(t, &basis))
        .collect();
    let subspace = Subspace::span(basis.len(), &vectors);
    let rep = module.restrict(&subspace)?;
    Ok(SpechtData {
        shape: shape.clone(),
        labels: labels.to_vec(),
        tabloids: basis,
        module,
        subspace,
        rep,
    })
}

/// `S^λ` for the symmetric group on `labels` (the group of
/// [`symmetric_group`] of degree `|labels|`).
pub fn specht_rep(shape: &IntegerPartition, labels: &[usize]) -> Result<SpechtData> {
    check_labels(shape, labels)?;
    let (group, act) = label_action(labels);
    specht_on(&group, shape, labels, &act)
}

fn check_blocks(factors: &[(IntegerPartition, Vec<usize>)]) -> Result<()> {
    let mut all = Vec::new();
    for (mu, block) in factors {
        if mu.n() != block.len() {
            return Err(Error::Invalid(format!(
                "partition {mu} does not fit a block of size {}",
                block.len()
            )));
        }
        all.extend(block.iter().copied());
    }
    let k = all.len();
    all.sort_unstable();
    all.dedup();
    if all.len() != k {
        return Err(Error::Invalid("blocks are not disjoint".into()));
    }
    Ok(())
}

/// `S^{μ_1} ⊗ … ⊗ S^{μ_p}` as a representation of `S_{λ_1} × … × S_{λ_p}`,
/// the direct product of the groups of [`specht_rep`] in factor order.
pub fn young_tensor(factors: &[(IntegerPartition, Vec<usize>)]) -> Result<Representation> {
    check_blocks(factors)?;
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Invalid("no tensor factors".into()))?;
    let mut acc = specht_rep(&first.0, &first.1)?.rep;
    for (mu, block) in rest {
        acc = outer_tensor(&acc, &specht_rep(mu, block)?.rep)?;
    }
    Ok(acc)
}

/// The same tensor for a group acting on the union of the blocks and
/// preserving each one.
pub fn young_tensor_on<M: Monoid>(
    m: &M,
    factors: &[(IntegerPartition, Vec<usize>)],
    act: &dyn Fn(usize, usize) -> usize,
) -> Result<Representation> {
    check_blocks(factors)?;
    let mut acc: Option<Representation> = None;
    for (mu, block) in factors {
        let rep = specht_on(m, mu, block, act)?.rep;
        acc = Some(match acc {
            None => rep,
            Some(a) => inner_tensor(&a, &rep)?,
        });
    }
    acc.ok_or_else(|| Error::Invalid("no tensor factors".into()))
}

/// Handle of the product group used by [`young_tensor`].
pub fn young_group(block_sizes: &[usize]) -> MonoidTable {
    let mut acc = symmetric_group(block_sizes[0]).handle();
    for &k in &block_sizes[1..] {
        acc = acc.direct_product(&symmetric_group(k).handle());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linrep::{commutant_dim, mapping_rep};
    use crate::specht::partition::partitions;
    use crate::specht::tableau::standard_tableaux_count;

    fn lambda(p: &[usize]) -> IntegerPartition {
        IntegerPartition::new(p).unwrap()
    }

    #[test]
    fn tabloid_counts() {
        assert_eq!(tabloids(&lambda(&[4]), &[1, 2, 3, 4]).len(), 1);
        assert_eq!(tabloids(&lambda(&[3, 1]), &[1, 2, 3, 4]).len(), 4);
        assert_eq!(tabloids(&lambda(&[2, 2]), &[1, 2, 3, 4]).len(), 6);
        assert_eq!(tabloids(&lambda(&[2, 1, 1]), &[1, 2, 3, 4]).len(), 12);
    }

    #[test]
    fn hook_module_is_permuting_coordinates() {
        let (_, m) = tabloid_module(&lambda(&[2, 1]), &[1, 2, 3]).unwrap();
        let v = mapping_rep(&symmetric_group(3)).unwrap();
        assert_eq!(m.character(), v.character());
    }

    #[test]
    fn hook_polytabloid_is_a_difference() {
        let shape = lambda(&[2, 1]);
        let basis = tabloids(&shape, &[1, 2, 3]);
        let t = Tableau::new(vec![vec![3, 2], vec![1]]).unwrap();
        let v = polytabloid(&t, &basis);
        // {T} has second row {1}; the swap (1 3) gives second row {3}
        let i1 = basis.iter().position(|b| b.rows()[1] == [1]).unwrap();
        let i3 = basis.iter().position(|b| b.rows()[1] == [3]).unwrap();
        assert_eq!(v[i1], q(1));
        assert_eq!(v[i3], q(-1));
        assert_eq!(v.iter().filter(|x| !x.is_zero()).count(), 2);
    }

    #[test]
    fn s3_irreducibles() {
        let s3 = symmetric_group(3);
        let t = s3.index_of(&Permutation::transposition(3, 1, 2).unwrap()).unwrap();
        let c = s3.index_of(&Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap()).unwrap();
        let e = s3.identity();
        let chars: Vec<(i64, i64, i64)> = partitions(3)
            .iter()
            .map(|l| {
                let ch = specht_rep(l, &[1, 2, 3]).unwrap().rep.character();
                let f = |x: usize| ch.0[x].to_integer().try_into().unwrap();
                (f(e), f(t), f(c))
            })
            .collect();
        assert_eq!(chars, vec![(1, 1, 1), (2, 0, -1), (1, -1, 1)]);
    }

    #[test]
    fn dims_match_standard_tableaux() {
        for n in 1..=4 {
            let labels: Vec<usize> = (1..=n).collect();
            for l in partitions(n) {
                let s = specht_rep(&l, &labels).unwrap();
                assert_eq!(s.dim() as u64, standard_tableaux_count(&l));
                assert_eq!(commutant_dim(&s.rep), 1);
            }
        }
    }

    #[test]
    fn arbitrary_labels() {
        let s = specht_rep(&lambda(&[2, 1]), &[7, 3, 9]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(specht_rep(&lambda(&[2, 1]), &[7, 7, 9]).is_err());
    }

    #[test]
    fn young_tensors() {
        let r = young_tensor(&[(lambda(&[2]), vec![1, 2]), (lambda(&[1]), vec![3])]).unwrap();
        assert_eq!(r.dim(), 1);
        let g = young_group(&[2, 2]);
        let r = young_tensor(&[(lambda(&[1, 1]), vec![1, 2]), (lambda(&[2]), vec![3, 4])]).unwrap();
        assert!(r.monoid().same_as(&g));
        let s2 = symmetric_group(2);
        let swap = s2.index_of(&Permutation::transposition(2, 1, 2).unwrap()).unwrap();
        let x = swap * 2 + s2.identity();
        assert_eq!(r.character().0[x], q(-1));
        assert!(young_tensor(&[(lambda(&[2]), vec![1, 2, 3])]).is_err());
        assert!(young_tensor(&[(lambda(&[1]), vec![1]), (lambda(&[1]), vec![1])]).is_err());
    }
}
