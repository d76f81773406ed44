use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use regmon::cliffmunn::{
    cm_catalog, cm_roundtrip_check, reduce, semisimple_predicate, sgl_mapping_rep, CatalogMonoid,
};
use regmon::elements::Monoid;
use regmon::green::{eggbox as eggbox_of, green_structure, GreenClasses, JPoset};
use regmon::lattice::{young_index_sum, LatticeKind};
use regmon::linrep::{mapping_rep, parse_representation, write_representation, Representation};
use regmon::specht::{specht_on, standard_tableaux_count, IntegerPartition};
use regmon::Error;

use crate::spec::{MonoidSpec, Model};
use crate::{CliError, Format};

type Out = Result<String, CliError>;

fn header(out: &mut String, command: &str, spec: &MonoidSpec, order: usize) {
    writeln!(out, "command {command}").unwrap();
    writeln!(out, "monoid {spec}").unwrap();
    writeln!(out, "order {order}").unwrap();
}

fn table_order(model: &Model) -> usize {
    match model {
        Model::Catalog(c) => c.table().order(),
        Model::Transformations(m) => m.len(),
    }
}

pub fn order(spec: &MonoidSpec) -> Out {
    let model = Model::build(spec)?;
    let enumerated = table_order(&model);
    let mut out = String::new();
    header(&mut out, "order", spec, enumerated);
    if let Model::Catalog(CatalogMonoid::Sgl(sgl, _)) = &model {
        let (formula, per_point) = sgl.order_formula();
        writeln!(out, "lattice_points {}", per_point.len()).unwrap();
        for (a, count) in per_point.iter().enumerate() {
            writeln!(out, "point {} {count}", sgl.point_label(a)).unwrap();
        }
        writeln!(out, "formula {formula}").unwrap();
        writeln!(out, "enumeration {enumerated}").unwrap();
        writeln!(out, "agree {}", formula == enumerated).unwrap();
        if sgl.kind() == Some(LatticeKind::SetPartitions) {
            let y = young_index_sum(sgl.degree());
            writeln!(out, "young_index_sum {y}").unwrap();
            writeln!(out, "differs_from_young_index_sum {}", y != enumerated as u64).unwrap();
        }
        if formula != enumerated {
            return Err(CliError::Core(Error::Verification(format!(
                "order formula {formula} disagrees with enumeration {enumerated}"
            ))));
        }
    }
    Ok(out)
}

fn structure(model: &Model) -> (GreenClasses, JPoset) {
    match model {
        Model::Catalog(c) => green_structure(&c.table()),
        Model::Transformations(m) => green_structure(m),
    }
}

/// Classes listed from the bottom up: by number of classes below, then id.
fn height_order(poset: &JPoset) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..poset.len()).collect();
    ids.sort_by_key(|&j| ((0..poset.len()).filter(|&k| poset.leq(k, j)).count(), j));
    ids
}

fn resolve_jclass(text: &str, poset: &JPoset) -> Result<usize, CliError> {
    let j = match text {
        "constants" => poset.minimum(),
        "units" => poset.maximum(),
        _ => text.strip_prefix('J').unwrap_or(text).parse::<usize>().ok(),
    };
    match j {
        Some(j) if j < poset.len() => Ok(j),
        _ => Err(CliError::Usage(format!(
            "invalid J-class `{text}`: expected 0..={}, J<k>, constants or units",
            poset.len().saturating_sub(1)
        ))),
    }
}

pub fn eggbox(spec: &MonoidSpec, jclass: Option<&str>, format: Format) -> Out {
    let model = Model::build(spec)?;
    let table = match &model {
        Model::Catalog(c) => c.table(),
        Model::Transformations(m) => m.handle(),
    };
    let (green, poset) = structure(&model);
    let selected: Vec<usize> = match jclass {
        Some(text) => vec![resolve_jclass(text, &poset)?],
        None => height_order(&poset),
    };
    let boxes = selected
        .iter()
        .map(|&j| eggbox_of(&table, &green, j))
        .collect::<Result<Vec<_>, _>>()?;
    let label = |s: usize| model.label(s);
    let mut out = String::new();
    match format {
        Format::Text => {
            header(&mut out, "eggbox", spec, table.order());
            writeln!(out, "jclasses {}", poset.len()).unwrap();
            if poset.is_chain() {
                let chain: Vec<String> = height_order(&poset).iter().map(|j| format!("J{j}")).collect();
                writeln!(out, "chain {}", chain.join(" < ")).unwrap();
            } else {
                for (lo, hi) in poset.covers() {
                    writeln!(out, "cover J{lo} < J{hi}").unwrap();
                }
            }
            for b in &boxes {
                let idempotents = b.idempotent.iter().flatten().filter(|e| e.is_some()).count();
                writeln!(
                    out,
                    "class J{} size {} rows {} cols {} idempotents {} group_order {}",
                    b.jclass,
                    green.j_members[b.jclass].len(),
                    b.rows.len(),
                    b.cols.len(),
                    idempotents,
                    b.group_order()
                )
                .unwrap();
                out.push_str(&b.render(label));
            }
        }
        Format::Graph => {
            out.push_str("digraph jposet {\n");
            for j in height_order(&poset) {
                let b = eggbox_of(&table, &green, j)?;
                writeln!(
                    out,
                    "  J{j} [label=\"J{j} {}x{} |H|={}\"];",
                    b.rows.len(),
                    b.cols.len(),
                    b.group_order()
                )
                .unwrap();
            }
            for (lo, hi) in poset.covers() {
                writeln!(out, "  J{lo} -> J{hi};").unwrap();
            }
            for b in &boxes {
                let j = b.jclass;
                writeln!(out, "  subgraph cluster_J{j} {{").unwrap();
                writeln!(out, "    label=\"J{j}\";").unwrap();
                for (r, row) in b.cells.iter().enumerate() {
                    for (c, cell) in row.iter().enumerate() {
                        let mark = if b.idempotent[r][c].is_some() { "*" } else { "" };
                        let body: Vec<String> = cell.iter().map(|&x| label(x)).collect();
                        writeln!(
                            out,
                            "    J{j}_{r}_{c} [shape=box, label=\"{mark}{}\"];",
                            body.join(" ")
                        )
                        .unwrap();
                    }
                }
                writeln!(out, "  }}").unwrap();
            }
            out.push_str("}\n");
        }
    }
    Ok(out)
}

fn catalog_model(model: Model) -> Result<CatalogMonoid, CliError> {
    match model {
        Model::Catalog(c) => Ok(c),
        Model::Transformations(m) => {
            let verdict = semisimple_predicate(&m, 0);
            Err(CliError::Usage(format!(
                "irreps needs an inverse monoid ({}); the algebra of T_n is not semisimple \
                 for n >= 2, since the hyperplane of its mapping representation has no \
                 invariant complement",
                verdict.reason
            )))
        }
    }
}

pub fn irreps(spec: &MonoidSpec, check: bool) -> Out {
    let model = catalog_model(Model::build(spec)?)?;
    let catalog = cm_catalog(&model)?;
    let order = catalog.table.order();
    let mut out = String::new();
    header(&mut out, "irreps", spec, order);
    writeln!(out, "semisimple {}", catalog.certificate.reason()).unwrap();
    writeln!(out, "irreps {}", catalog.entries.len()).unwrap();
    for (i, entry) in catalog.entries.iter().enumerate() {
        writeln!(
            out,
            "entry {i} apex J{} label {} dim {}",
            entry.apex,
            entry.label,
            entry.dim()
        )
        .unwrap();
    }
    let sum = catalog.sum_of_squares();
    writeln!(out, "sum_dim_squared {sum}").unwrap();
    if !check {
        return Ok(out);
    }
    let verdict = |ok: bool| if ok { "pass" } else { "fail" };
    let mut all = sum == order;
    writeln!(out, "check sum_dim_squared {sum} = {order} {}", verdict(sum == order)).unwrap();
    for i in 0..catalog.entries.len() {
        let ok = cm_roundtrip_check(&catalog, i)?;
        all &= ok;
        writeln!(out, "check roundtrip {i} {}", verdict(ok)).unwrap();
    }
    let distinct = catalog.characters_distinct();
    all &= distinct;
    writeln!(out, "check characters_distinct {}", verdict(distinct)).unwrap();
    writeln!(out, "checks {}", verdict(all)).unwrap();
    if !all {
        print!("{out}");
        return Err(CliError::Core(Error::Verification("catalog checks failed".into())));
    }
    Ok(out)
}

enum Build {
    Mapping,
    Specht(IntegerPartition),
    Induce(String, String),
    Reduce(String),
}

fn parse_build(text: &str) -> Result<Build, CliError> {
    let usage = || {
        CliError::Usage(format!(
            "invalid --build `{text}`: expected mapping, specht:(λ), induce:J<k>:<label> or reduce:J<k>"
        ))
    };
    let mut parts = text.splitn(3, ':');
    match (parts.next(), parts.next(), parts.next()) {
        (Some("mapping"), None, None) => Ok(Build::Mapping),
        (Some("specht"), Some(shape), None) => Ok(Build::Specht(IntegerPartition::parse(shape)?)),
        (Some("induce"), Some(j), Some(label)) => Ok(Build::Induce(j.into(), label.into())),
        (Some("reduce"), Some(j), None) => Ok(Build::Reduce(j.into())),
        _ => Err(usage()),
    }
}

fn mapping(model: &Model) -> Result<Representation, CliError> {
    Ok(match model {
        Model::Catalog(CatalogMonoid::Symmetric(m)) => mapping_rep(m)?,
        Model::Catalog(CatalogMonoid::Inverse(m)) => mapping_rep(m)?,
        Model::Catalog(CatalogMonoid::Sgl(sgl, m)) => sgl_mapping_rep(sgl, m)?,
        Model::Transformations(m) => mapping_rep(m)?,
    })
}

/// Serializes `rep`, parses it back (re-running the homomorphism check) and
/// confirms the matrices survived the round trip.
fn verified_text(rep: &Representation) -> Result<String, CliError> {
    let text = write_representation(rep);
    let back = parse_representation(&text, rep.monoid()).map_err(|e| match e {
        Error::Verification(_) => e,
        other => Error::Verification(format!("re-reading the representation failed: {other}")),
    })?;
    if back.matrices() != rep.matrices() {
        return Err(Error::Verification("serialized matrices differ".into()).into());
    }
    Ok(text)
}

pub fn rep(spec: &MonoidSpec, build: &str, out_path: Option<&Path>) -> Out {
    let build = parse_build(build)?;
    let model = Model::build(spec)?;
    let order = table_order(&model);
    let mut out = String::new();
    header(&mut out, "rep", spec, order);
    // Index lines name the elements the serialized matrices belong to.
    let (rep, index): (Representation, Vec<(usize, String)>) = match build {
        Build::Mapping => {
            writeln!(out, "build mapping").unwrap();
            let rep = mapping(&model)?;
            let index = (0..order).map(|s| (s, model.label(s))).collect();
            (rep, index)
        }
        Build::Specht(shape) => {
            let Model::Catalog(CatalogMonoid::Symmetric(m)) = &model else {
                return Err(CliError::Usage("specht modules are built for S:n only".into()));
            };
            let n = m.element(0).degree();
            if shape.n() != n {
                return Err(CliError::Usage(format!("partition {shape} does not have size {n}")));
            }
            let labels: Vec<usize> = (1..=n).collect();
            let act = |g: usize, x: usize| m.element(g).apply(x);
            let data = specht_on(m, &shape, &labels, &act)?;
            writeln!(out, "build specht:{shape}").unwrap();
            writeln!(out, "standard_tableaux {}", standard_tableaux_count(&shape)).unwrap();
            let index = (0..order).map(|s| (s, model.label(s))).collect();
            (data.rep, index)
        }
        Build::Induce(j, label) => {
            let catalog_monoid = catalog_model(model)?;
            let catalog = cm_catalog(&catalog_monoid)?;
            let jid = resolve_jclass(&j, &catalog.poset)?;
            let entry = catalog
                .entries
                .iter()
                .find(|e| e.apex == jid && e.label == label)
                .ok_or_else(|| {
                    let known: Vec<&str> = catalog
                        .entries
                        .iter()
                        .filter(|e| e.apex == jid)
                        .map(|e| e.label.as_str())
                        .collect();
                    CliError::Usage(format!(
                        "no irreducible with label {label} at J{jid}; available: {}",
                        known.join(" ")
                    ))
                })?;
            writeln!(out, "build induce:J{jid}:{label}").unwrap();
            writeln!(out, "apex J{jid}").unwrap();
            writeln!(out, "idempotent {}", catalog_monoid.element_label(entry.idempotent)).unwrap();
            let index = (0..order).map(|s| (s, catalog_monoid.element_label(s))).collect();
            (entry.rep.clone(), index)
        }
        Build::Reduce(j) => {
            let (green, poset) = structure(&model);
            let jid = resolve_jclass(&j, &poset)?;
            let table = mapping(&model)?;
            let e = *green.j_members[jid]
                .iter()
                .find(|&&x| table.monoid().mul(x, x) == x)
                .ok_or_else(|| CliError::Usage(format!("J{jid} contains no idempotent")))?;
            let reduced = reduce(&table, &green, e)?;
            writeln!(out, "build reduce:J{jid}").unwrap();
            writeln!(out, "source mapping").unwrap();
            writeln!(out, "idempotent {}", model.label(e)).unwrap();
            writeln!(out, "group_order {}", reduced.group.len()).unwrap();
            writeln!(out, "carrier_dim {}", reduced.carrier.dim()).unwrap();
            let Some(rep) = reduced.rep else {
                writeln!(out, "dim 0").unwrap();
                return Ok(out);
            };
            let index = reduced
                .group
                .elements()
                .iter()
                .enumerate()
                .map(|(i, &g)| (i, model.label(g)))
                .collect();
            (rep, index)
        }
    };
    writeln!(out, "dim {}", rep.dim()).unwrap();
    let text = verified_text(&rep)?;
    writeln!(out, "verified true").unwrap();
    for (i, name) in index {
        writeln!(out, "index {i} {name}").unwrap();
    }
    match out_path {
        Some(path) => {
            fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            writeln!(out, "written {}", path.display()).unwrap();
        }
        None => out.push_str(&text),
    }
    Ok(out)
}
