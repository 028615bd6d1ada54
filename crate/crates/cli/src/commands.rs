use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use catfrac::ambient::{internal_elements, internal_localize, internalize, FinMap, FinSet, InternalCategory};
use catfrac::diagram::{Pseudofunctor, Variance};
use catfrac::elements::{grothendieck, verify_oplax_colimit};
use catfrac::fincat::find_isomorphism;
use catfrac::fractions::{
    check_axioms, localize, localize_with, verify_localization_up, verify_pseudocolimit, Exhaustiveness,
    FractionsInput, LocalizedCategory,
};
use catfrac::{FinCategory, ValidationReport, VerifierReport};
use serde_json::{json, Map, Value};

use crate::error::{CliError, CliResult};
use crate::format::{category_json, functor_maps, read_document, Document};

/// Whether every checked property held.
pub type Verdict = bool;

fn print_report(what: &str, report: &ValidationReport) -> Verdict {
    if report.is_valid() {
        println!("{what}: valid");
    } else {
        println!("{what}: {} violation(s)", report.violations().len());
        print!("{report}");
    }
    report.is_valid()
}

fn summary(c: &FinCategory) -> String {
    format!("{} objects, {} arrows", c.object_count(), c.arrow_count())
}

fn diagram_of(doc: Document) -> CliResult<Arc<Pseudofunctor>> {
    match doc {
        Document::Pseudofunctor(p) => p.build(),
        Document::DiagramBundle(b) => b.diagram.build(),
        _ => Err(CliError::Usage(
            "expected a pseudofunctor or diagram-bundle file".into(),
        )),
    }
}

fn fractions_of(doc: Document) -> CliResult<FractionsInput> {
    match doc {
        Document::FractionsInput(f) => f.build(),
        _ => Err(CliError::Usage("expected a fractions-input file".into())),
    }
}

pub fn validate(path: &Path) -> CliResult<Verdict> {
    let mut report = ValidationReport::new();
    let what = match read_document(path)? {
        Document::Category(f) => {
            let c = f.build()?;
            report.extend(c.validate());
            format!("category ({})", summary(&c))
        }
        Document::Functor(f) => {
            let f = f.build()?;
            report.extend_prefixed("domain", f.dom().validate());
            report.extend_prefixed("codomain", f.cod().validate());
            report.extend(f.validate());
            "functor".to_string()
        }
        Document::Pseudofunctor(p) => {
            report.extend(p.build()?.validate());
            "pseudofunctor".to_string()
        }
        Document::FractionsInput(f) => {
            let inp = f.build()?;
            report.extend(inp.category().validate());
            format!("fractions input (|W| = {})", inp.weq().len())
        }
        Document::DiagramBundle(b) => {
            report.extend(b.diagram.build()?.validate());
            if let Some(t) = &b.target {
                report.extend_prefixed("target", t.build()?.validate());
            }
            "diagram bundle".to_string()
        }
    };
    Ok(print_report(&what, &report))
}

pub fn groth(path: &Path, contravariant: bool, as_json: bool) -> CliResult<Verdict> {
    let d = diagram_of(read_document(path)?)?;
    if contravariant && d.variance() != Variance::Contravariant {
        return Err(CliError::Usage("the cleavage needs a contravariant diagram".into()));
    }
    let gd = grothendieck(&d)?;
    let c = gd.carrier();
    let idx = d.index();
    let cleavage = if contravariant { Some(gd.cleavage()?) } else { None };
    // (category holding the base object, category holding the fiber arrow)
    let sides = |phi| match d.variance() {
        Variance::Covariant => (idx.src(phi), idx.tgt(phi)),
        Variance::Contravariant => (idx.tgt(phi), idx.src(phi)),
    };
    let object_tags: Map<String, Value> = c
        .objects()
        .map(|x| {
            let (a, o) = gd.object_tag(x);
            let tag = json!({"index": idx.object_name(a), "fiber": d.category(a).object_name(o)});
            (c.object_name(x).to_string(), tag)
        })
        .collect();
    let arrow_tags: Map<String, Value> = c
        .arrows()
        .map(|f| {
            let t = gd.arrow_tag(f);
            let tag = json!({
                "index": idx.arrow_name(t.index),
                "fiber": d.category(sides(t.index).1).arrow_name(t.fiber),
                "base": d.category(sides(t.index).0).object_name(t.base),
            });
            (c.arrow_name(f).to_string(), tag)
        })
        .collect();
    let cleavage_names: Option<Vec<String>> = cleavage
        .as_ref()
        .map(|cl| cl.members.iter().map(|&f| c.arrow_name(f).to_string()).collect());
    if as_json {
        let mut extra = Map::new();
        extra.insert("object_tags".into(), Value::Object(object_tags));
        extra.insert("arrow_tags".into(), Value::Object(arrow_tags));
        if let Some(names) = cleavage_names {
            extra.insert("cleavage".into(), json!(names));
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&category_json(c, extra)).expect("serializable")
        );
        return Ok(true);
    }
    println!("category of elements: {}", summary(c));
    for x in c.objects() {
        println!("  object {}", c.object_name(x));
    }
    for f in c.arrows() {
        println!(
            "  arrow {}: {} → {}",
            c.arrow_name(f),
            c.object_name(c.src(f)),
            c.object_name(c.tgt(f))
        );
    }
    if let Some(names) = cleavage_names {
        println!("cleavage ({} arrows): {}", names.len(), names.join(", "));
    }
    Ok(true)
}

pub fn axioms(path: &Path) -> CliResult<Verdict> {
    let inp = fractions_of(read_document(path)?)?;
    let report = check_axioms(&inp);
    print!("{report}");
    Ok(report.all_pass())
}

fn localized(inp: &FractionsInput, mode: Exhaustiveness) -> CliResult<Option<LocalizedCategory>> {
    match localize_with(inp, mode) {
        Ok(lc) => Ok(Some(lc)),
        Err(catfrac::Error::Axioms(report)) => {
            println!("cannot localize: the fractions axioms fail");
            print!("{report}");
            Ok(None)
        }
        Err(e) => Err(e.into()),
    }
}

pub fn localize_cmd(path: &Path, exhaustive: bool, as_json: bool) -> CliResult<Verdict> {
    let inp = fractions_of(read_document(path)?)?;
    let mode = if exhaustive {
        Exhaustiveness::Always
    } else {
        Exhaustiveness::Auto
    };
    let Some(lc) = localized(&inp, mode)? else {
        return Ok(false);
    };
    let (c, k) = (inp.category(), lc.carrier());
    let q = lc.quotient();
    let classes: BTreeMap<String, Vec<String>> = k
        .arrows()
        .map(|f| {
            (
                k.arrow_name(f).to_string(),
                q.members(f.0).iter().map(|s| s.describe(c)).collect(),
            )
        })
        .collect();
    let l = lc.localization_functor();
    let witness = find_isomorphism(k, c);
    if as_json {
        let (on_objects, on_arrows) = functor_maps(&l);
        let mut extra = Map::new();
        extra.insert("classes".into(), json!(classes));
        extra.insert(
            "localization".into(),
            json!({"on_objects": on_objects, "on_arrows": on_arrows}),
        );
        extra.insert("exhaustive".into(), json!(lc.checks().exhaustive));
        if let Some(w) = &witness {
            let (on_objects, on_arrows) = functor_maps(&w.forward);
            extra.insert(
                "iso_witness".into(),
                json!({"on_objects": on_objects, "on_arrows": on_arrows}),
            );
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&category_json(k, extra)).expect("serializable")
        );
        return Ok(true);
    }
    let checks = lc.checks();
    println!("localization: {}", summary(k));
    println!(
        "  checks: exhaustive = {}, {} section choices, {} composable class pairs",
        checks.exhaustive, checks.section_choices, checks.class_pairs
    );
    for f in k.arrows() {
        println!(
            "  {}: {} → {}  spans {}",
            k.arrow_name(f),
            k.object_name(k.src(f)),
            k.object_name(k.tgt(f)),
            classes[k.arrow_name(f)].join(" ")
        );
    }
    println!("L: {}", l.describe());
    if let Some(w) = witness {
        println!("isomorphic to the input category: {}", w.forward.describe());
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    Oplax,
    Localization,
    Pseudocolim,
}

pub fn verify(which: Which, path: &Path, against: Option<&Path>) -> CliResult<Verdict> {
    let doc = read_document(path)?;
    let bundled = match &doc {
        Document::DiagramBundle(b) => b.target.clone(),
        _ => None,
    };
    let x = match (against, bundled) {
        (Some(p), _) => match read_document(p)? {
            Document::Category(f) => f.build()?,
            _ => return Err(CliError::Usage("--against expects a category file".into())),
        },
        (None, Some(t)) => t.build()?,
        (None, None) => {
            return Err(CliError::Usage(
                "no test category: pass --against or use a bundle".into(),
            ))
        }
    };
    let report: VerifierReport = match which {
        Which::Oplax => verify_oplax_colimit(&diagram_of(doc)?, &x)?,
        Which::Pseudocolim => verify_pseudocolimit(&diagram_of(doc)?, &x)?,
        Which::Localization => {
            let Some(lc) = localized(&fractions_of(doc)?, Exhaustiveness::Auto)? else {
                return Ok(false);
            };
            verify_localization_up(&lc, &x)
        }
    };
    print!("{report}");
    Ok(report.passed())
}

/// Per hom-set: its size and, sorted, how many composable pairs land on
/// each of its arrows.
type HomProfile = BTreeMap<(String, String), (usize, Vec<usize>)>;

fn direct_profile(c: &FinCategory) -> HomProfile {
    let mut hits = vec![0; c.arrow_count()];
    for (f, g) in c.composable_pairs() {
        hits[c.composite(f, g).expect("composable").0] += 1;
    }
    let mut out = HomProfile::new();
    for f in c.arrows() {
        let key = (c.object_name(c.src(f)).to_string(), c.object_name(c.tgt(f)).to_string());
        let entry = out.entry(key).or_default();
        entry.0 += 1;
        entry.1.push(hits[f.0]);
    }
    out.values_mut().for_each(|(_, v)| v.sort_unstable());
    out
}

fn internal_profile(ic: &InternalCategory) -> HomProfile {
    let mut hits = vec![0; ic.c1.size];
    for &h in ic.c.table() {
        hits[h] += 1;
    }
    let mut out = HomProfile::new();
    for f in 0..ic.c1.size {
        let key = (
            ic.object_name(ic.s.apply(f)).to_string(),
            ic.object_name(ic.t.apply(f)).to_string(),
        );
        let entry = out.entry(key).or_default();
        entry.0 += 1;
        entry.1.push(hits[f]);
    }
    out.values_mut().for_each(|(_, v)| v.sort_unstable());
    out
}

/// Rewires composite entry `k` to the next arrow, as a negative control.
fn perturbed(ic: InternalCategory, k: usize) -> CliResult<InternalCategory> {
    let pairs = ic.c.dom().size;
    if pairs == 0 || ic.c1.size < 2 {
        return Err(CliError::Usage("nothing to perturb".into()));
    }
    let k = k % pairs;
    let value = (ic.c.apply(k) + 1) % ic.c1.size;
    Ok(ic.with_composite_entry(k, value)?)
}

pub fn crosscheck(path: &Path, perturb: Option<usize>) -> CliResult<Verdict> {
    let (what, internal, direct) = match read_document(path)? {
        Document::Category(f) => {
            let c = f.build()?;
            ("internalized category", internalize(&c), c)
        }
        Document::FractionsInput(f) => {
            let inp = f.build()?;
            let ic = internalize(inp.category());
            let members = inp.weq().iter().map(|a| a.0).collect();
            let w = FinMap::new(FinSet::new("W", inp.weq().len()), ic.c1.clone(), members)?;
            let il = internal_localize(&ic, &w)?;
            ("internal localization", il.category, localize(&inp)?.carrier().clone())
        }
        doc => {
            let d = diagram_of(doc)?;
            let ie = internal_elements(&d)?;
            (
                "internal category of elements",
                ie.category,
                grothendieck(&d)?.carrier().clone(),
            )
        }
    };
    let internal = match perturb {
        Some(k) => perturbed(internal, k)?,
        None => internal,
    };
    let mut report = VerifierReport::new(format!("{what} against the direct construction"));
    let (ours, theirs) = (internal_profile(&internal), direct_profile(&direct));
    let objects_agree = (0..internal.c0.size)
        .map(|x| internal.object_name(x))
        .eq(direct.objects().map(|x| direct.object_name(x)));
    if objects_agree {
        report.check("objects", true, format!("{} on both sides", direct.object_count()));
    } else {
        report.fail("objects", "object names differ");
    }
    let keys: std::collections::BTreeSet<_> = ours.keys().chain(theirs.keys()).cloned().collect();
    match keys.iter().find(|k| ours.get(k) != theirs.get(k)) {
        None => report.check("hom-sets", true, format!("{} nonempty hom-sets agree", keys.len())),
        Some((x, y)) => {
            let key = (x.clone(), y.clone());
            let describe = |p: &HomProfile| match p.get(&key) {
                None => "empty".to_string(),
                Some((n, hits)) => format!("{n} arrows hit by {hits:?} composites"),
            };
            report.fail(
                "hom-sets",
                format!(
                    "first mismatching hom is hom({x}, {y}): internal {}, direct {}",
                    describe(&ours),
                    describe(&theirs)
                ),
            );
        }
    }
    let laws = internal.validate();
    match laws.violations().first() {
        None => report.check("internal laws", true, "all hold"),
        Some(v) => report.fail("internal laws", v.to_string()),
    }
    let iso = if laws.is_valid() {
        internal
            .externalize()
            .ok()
            .and_then(|e| find_isomorphism(&Arc::new(e), &direct))
    } else {
        None
    };
    match iso {
        Some(w) => report.check("isomorphism", true, w.forward.describe()),
        None => report.fail("isomorphism", "no isomorphism of categories"),
    }
    print!("{report}");
    Ok(report.passed())
}
