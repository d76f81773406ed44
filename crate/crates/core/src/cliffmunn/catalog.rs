use crate::elements::{
    symmetric_group, symmetric_inverse_monoid, FiniteMonoid, Monoid, MonoidTable, PartialBijection,
    Permutation,
};
use crate::error::{Error, Result};
use crate::green::{green_structure, maximal_subgroup, GreenClasses, JPoset};
use crate::lattice::{make_lattice, LatticeKind, LatticePoint, SglElement, SglMonoid};
use crate::linrep::{
    commutant_dim, iso_test, q, Character, IsoResult, Matrix, Representation, SemisimpleCertificate,
};
use crate::specht::{partitions, young_tensor_on, Composition, IntegerPartition};

use super::induce::{induce, induce_sgl};
use super::reduce::{apex, reduce};
use super::semisimple::semisimple_predicate;

/// An inverse monoid whose maximal subgroups can be matched to Young
/// subgroups.
#[derive(Clone, Debug)]
pub enum CatalogMonoid {
    Symmetric(FiniteMonoid<Permutation>),
    Inverse(FiniteMonoid<PartialBijection>),
    Sgl(Box<SglMonoid>, FiniteMonoid<SglElement>),
}

/// `G_e` identified with `S_{B_1} × … × S_{B_p}` through its action on the
/// points of the blocks.
#[derive(Clone, Debug)]
pub struct YoungStructure {
    pub e: usize,
    pub group: FiniteMonoid<usize>,
    pub blocks: Vec<Vec<usize>>,
    /// `images[g][x]` for group index `g` and point `x` of a block.
    pub images: Vec<Vec<usize>>,
}

impl YoungStructure {
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.images[g][x]
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl CatalogMonoid {
    pub fn symmetric(n: usize) -> Self {
        CatalogMonoid::Symmetric(symmetric_group(n))
    }

    pub fn symmetric_inverse(n: usize) -> Self {
        CatalogMonoid::Inverse(symmetric_inverse_monoid(n))
    }

    pub fn sgl(kind: LatticeKind, n: usize) -> Result<Self> {
        let sgl = SglMonoid::from_builtin(make_lattice(kind, n)?);
        let monoid = sgl.monoid()?;
        Ok(CatalogMonoid::Sgl(Box::new(sgl), monoid))
    }

    pub fn table(&self) -> MonoidTable {
        match self {
            CatalogMonoid::Symmetric(m) => m.handle(),
            CatalogMonoid::Inverse(m) => m.handle(),
            CatalogMonoid::Sgl(_, m) => m.handle(),
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            CatalogMonoid::Symmetric(m) => m.element(0).degree(),
            CatalogMonoid::Inverse(m) => m.element(0).degree(),
            CatalogMonoid::Sgl(s, _) => s.degree(),
        }
    }

    pub fn element_label(&self, s: usize) -> String {
        match self {
            CatalogMonoid::Symmetric(m) => m.element(s).to_string(),
            CatalogMonoid::Inverse(m) => m.element(s).to_string(),
            CatalogMonoid::Sgl(sgl, m) => sgl.label(*m.element(s)),
        }
    }

    /// Blocks permuted by `G_e`, and the point map of each group element.
    pub fn young(&self, green: &GreenClasses, e: usize) -> Result<YoungStructure> {
        let table = self.table();
        let group = maximal_subgroup(&table, green, e)?;
        let n = self.degree();
        let point_map = |f: &dyn Fn(usize) -> Option<usize>| -> Vec<usize> {
            (0..=n).map(|x| if x == 0 { 0 } else { f(x).unwrap_or(0) }).collect()
        };
        let (blocks, images): (Vec<Vec<usize>>, Vec<Vec<usize>>) = match self {
            CatalogMonoid::Symmetric(m) => (
                vec![(1..=n).collect()],
                group
                    .elements()
                    .iter()
                    .map(|&g| point_map(&|x| Some(m.element(g).apply(x))))
                    .collect(),
            ),
            CatalogMonoid::Inverse(m) => {
                let dom = m.element(e).domain();
                let blocks = if dom.is_empty() { Vec::new() } else { vec![dom] };
                let images = group
                    .elements()
                    .iter()
                    .map(|&g| point_map(&|x| m.element(g).apply(x)))
                    .collect();
                (blocks, images)
            }
            CatalogMonoid::Sgl(sgl, m) => {
                let a = m.element(e).a as usize;
                let points = sgl.points().ok_or(Error::UnrecognizedSubgroup(e))?;
                let stab = sgl.stabilizers(a);
                let perm = |g: usize| sgl.group().element(g);
                let blocks: Vec<Vec<usize>> = points[a]
                    .blocks()
                    .into_iter()
                    .filter(|b| !b.is_empty())
                    .filter(|b| {
                        stab.full.iter().all(|&g| {
                            let mut img: Vec<usize> = b.iter().map(|&x| perm(g).apply(x)).collect();
                            img.sort_unstable();
                            img == *b
                        }) && stab
                            .pointwise
                            .iter()
                            .all(|&g| b.iter().all(|&x| perm(g).apply(x) == x))
                    })
                    .collect();
                let images = group
                    .elements()
                    .iter()
                    .map(|&x| {
                        let p = sgl.permutation(*m.element(x));
                        point_map(&|y| Some(p.apply(y)))
                    })
                    .collect();
                (blocks, images)
            }
        };
        let expected: usize = blocks.iter().map(|b| factorial(b.len())).product();
        let restrict = |img: &Vec<usize>| -> Vec<usize> { blocks.iter().flatten().map(|&x| img[x]).collect() };
        let mut restricted: Vec<Vec<usize>> = images.iter().map(restrict).collect();
        let preserves = images.iter().all(|img| {
            blocks.iter().all(|b| {
                let mut out: Vec<usize> = b.iter().map(|&x| img[x]).collect();
                out.sort_unstable();
                out == *b
            })
        });
        restricted.sort();
        restricted.dedup();
        if !preserves || restricted.len() != group.len() || group.len() != expected {
            return Err(Error::UnrecognizedSubgroup(e));
        }
        Ok(YoungStructure {
            e,
            group,
            blocks,
            images,
        })
    }

    fn induce_from(&self, table: &MonoidTable, green: &GreenClasses, young: &YoungStructure, v: &Representation) -> Result<Representation> {
        match self {
            CatalogMonoid::Sgl(sgl, m) => {
                let a = m.element(young.e).a as usize;
                induce_sgl(sgl, m, a, &young.group, v)
            }
            _ => induce(table, green, young.e, &young.group, v),
        }
    }
}

/// One irreducible: the group irreducible at the apex and its induction.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub apex: usize,
    pub idempotent: usize,
    pub blocks: Vec<Vec<usize>>,
    pub factors: Vec<IntegerPartition>,
    pub label: String,
    pub group: FiniteMonoid<usize>,
    pub group_rep: Representation,
    pub rep: Representation,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.rep.dim()
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub table: MonoidTable,
    pub green: GreenClasses,
    pub poset: JPoset,
    pub certificate: SemisimpleCertificate,
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn sum_of_squares(&self) -> usize {
        self.entries.iter().map(|e| e.dim() * e.dim()).sum()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.entries.iter().map(CatalogEntry::dim).collect()
    }

    /// Entries are pairwise non-isomorphic exactly when their characters
    /// differ, the algebra being semisimple.
    pub fn characters_distinct(&self) -> bool {
        let chars: Vec<Character> = self.entries.iter().map(|e| e.rep.character()).collect();
        (0..chars.len()).all(|i| (i + 1..chars.len()).all(|j| chars[i] != chars[j]))
    }

    pub fn match_character(&self, c: &Character) -> Option<usize> {
        self.entries.iter().position(|e| e.rep.character() == *c)
    }
}

pub fn factor_label(factors: &[IntegerPartition]) -> String {
    if factors.is_empty() {
        return "()".into();
    }
    factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("x")
}

fn factor_tuples(blocks: &[Vec<usize>]) -> Vec<Vec<IntegerPartition>> {
    let mut out: Vec<Vec<IntegerPartition>> = vec![Vec::new()];
    for b in blocks {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                partitions(b.len()).into_iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p);
                    v
                })
            })
            .collect();
    }
    out
}

/// The irreducible representations over `Q`, one per pair (J-class, group
/// irreducible at its least idempotent), sorted by apex then label order.
pub fn cm_catalog(model: &CatalogMonoid) -> Result<Catalog> {
    let table = model.table();
    let verdict = semisimple_predicate(&table, 0);
    let certificate = verdict
        .certificate
        .ok_or_else(|| Error::Invalid(format!("no semisimplicity certificate: {}", verdict.reason)))?;
    let (green, poset) = green_structure(&table);
    let mut entries = Vec::new();
    for j in 0..green.num_jclasses() {
        let e = *green.j_members[j]
            .iter()
            .find(|&&x| table.mul(x, x) == x)
            .ok_or_else(|| Error::Invalid(format!("J{j} has no idempotent")))?;
        let young = model.young(&green, e)?;
        let act = |g: usize, x: usize| young.act(g, x);
        for factors in factor_tuples(&young.blocks) {
            let group_rep = if factors.is_empty() {
                Representation::trivial(&young.group)
            } else {
                let pairs: Vec<(IntegerPartition, Vec<usize>)> =
                    factors.iter().cloned().zip(young.blocks.iter().cloned()).collect();
                young_tensor_on(&young.group, &pairs, &act)?
            };
            let rep = model.induce_from(&table, &green, &young, &group_rep)?;
            let report = apex(&table, &rep, &green, &poset)?;
            if report.apex != j {
                return Err(Error::Verification(format!(
                    "induction from J{j} has apex J{}",
                    report.apex
                )));
            }
            if commutant_dim(&rep) != 1 {
                return Err(Error::Verification(format!(
                    "induction of {} from J{j} is reducible",
                    factor_label(&factors)
                )));
            }
            entries.push(CatalogEntry {
                apex: j,
                idempotent: e,
                blocks: young.blocks.clone(),
                label: factor_label(&factors),
                factors,
                group: young.group.clone(),
                group_rep,
                rep,
            });
        }
    }
    Ok(Catalog {
        table,
        green,
        poset,
        certificate,
        entries,
    })
}

/// `(V↑S)↓G_e ≅ V` and `(W↓G_e)↑S ≅ W` for a catalog entry, both decided by
/// `iso_test` under the relevant certificates.
pub fn cm_roundtrip_check(catalog: &Catalog, index: usize) -> Result<bool> {
    let entry = &catalog.entries[index];
    let reduced = reduce(&entry.rep, &catalog.green, entry.idempotent)?;
    let Some(down) = reduced.rep.as_ref() else {
        return Ok(false);
    };
    let group_cert = semisimple_predicate(&entry.group, 0)
        .certificate
        .ok_or_else(|| Error::Verification("maximal subgroup not certified".into()))?;
    let down = down.rebind(&entry.group_rep.monoid().clone())?;
    let first = iso_test(&down, &entry.group_rep, Some(&group_cert))?;
    let up = induce(&catalog.table, &catalog.green, entry.idempotent, &reduced.group, reduced.rep.as_ref().unwrap())?;
    let up = up.rebind(entry.rep.monoid())?;
    let second = iso_test(&up, &entry.rep, Some(&catalog.certificate))?;
    Ok(matches!(first, IsoResult::Iso(_)) && matches!(second, IsoResult::Iso(_)))
}

/// `g_a · v_c = v_{g·c}` if `c <= a`, else 0, on the basis indexed by `L`.
pub fn sgl_mapping_rep(sgl: &SglMonoid, monoid: &FiniteMonoid<SglElement>) -> Result<Representation> {
    let n = sgl.lattice().len();
    Representation::from_fn(monoid, |s| {
        let x = monoid.element(s);
        let mut m = Matrix::zeros(n, n);
        for c in 0..n {
            if sgl.lattice().leq(c, x.a as usize) {
                m.set(sgl.action().act(x.g as usize, c), c, q(1));
            }
        }
        m
    })
}

/// The J-classes of `S(S_n, ordered partitions)` labelled by composition type,
/// with the check that their order is refinement with `0` adjoined below.
#[derive(Clone, Debug)]
pub struct CompositionPosetReport {
    pub types: Vec<Option<Composition>>,
    pub matches: bool,
}

/// `λ <= μ` when `λ` refines `μ` into consecutive pieces.
pub fn refines(lambda: &Composition, mu: &Composition) -> bool {
    let sums = |c: &Composition| -> Vec<usize> {
        c.parts()
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .collect()
    };
    let (l, m) = (sums(lambda), sums(mu));
    lambda.n() == mu.n() && m.iter().all(|x| l.contains(x))
}

pub fn composition_poset(sgl: &SglMonoid, monoid: &FiniteMonoid<SglElement>) -> Result<CompositionPosetReport> {
    let points = sgl
        .points()
        .ok_or_else(|| Error::Invalid("lattice has no point labels".into()))?;
    let (green, poset) = green_structure(monoid);
    let mut types = Vec::with_capacity(green.num_jclasses());
    for members in &green.j_members {
        let a = monoid.element(members[0]).a as usize;
        types.push(match &points[a] {
            LatticePoint::Zero => None,
            p => Some(Composition::new(&p.block_sizes())?),
        });
    }
    let matches = (0..types.len()).all(|i| {
        (0..types.len()).all(|j| {
            let expected = match (&types[i], &types[j]) {
                (None, _) => true,
                (Some(_), None) => false,
                (Some(l), Some(m)) => refines(l, m),
            };
            poset.leq(i, j) == expected
        })
    });
    Ok(CompositionPosetReport { types, matches })
}

#[derive(Clone, Debug)]
pub struct RennerReport {
    pub catalog: Catalog,
    pub poset: CompositionPosetReport,
}

/// Catalog of `S(S_n, ordered partitions with 0)` together with its
/// composition poset report.
pub fn renner_permutohedron_catalog(n: usize) -> Result<RennerReport> {
    let model = CatalogMonoid::sgl(LatticeKind::OrderedPartitionsZero, n)?;
    let CatalogMonoid::Sgl(sgl, monoid) = &model else {
        unreachable!()
    };
    let poset = composition_poset(sgl, monoid)?;
    let catalog = cm_catalog(&model)?;
    Ok(RennerReport { catalog, poset })
}
