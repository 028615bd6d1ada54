//! Runs the ten acceptance criteria and prints one line per criterion.
//! Exits with status 1 if any criterion fails or overruns its time budget.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use catfrac::ambient::*;
use catfrac::catalog::*;
use catfrac::diagram::*;
use catfrac::elements::{grothendieck, verify_oplax_colimit};
use catfrac::fincat::*;
use catfrac::fractions::*;
use common::span_oracle;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn iso(a: &FinCategory, b: &Arc<FinCategory>) -> bool {
    find_isomorphism(&Arc::new(a.clone()), b).is_some_and(|w| w.verify())
}

/// `(C, W)` for the cleavage of every cofiltered diagram.
fn cleavage_inputs() -> Vec<(String, FractionsInput)> {
    cofiltered_corpus()
        .into_iter()
        .map(|(name, d)| {
            let gd = grothendieck(&d).expect("valid diagram");
            let members = gd.cleavage().expect("contravariant").members;
            (
                format!("cleavage of {name}"),
                FractionsInput::new(gd.carrier().clone(), members).unwrap(),
            )
        })
        .collect()
}

fn all_inputs() -> Vec<(String, FractionsInput)> {
    fractions_corpus()
        .into_iter()
        .map(|(n, i)| (n.to_string(), i))
        .chain(cleavage_inputs())
        .collect()
}

fn localization_oracle() -> Outcome {
    let two = FractionsInput::all(walking_arrow());
    let lc = localize(&two).map_err(|e| e.to_string())?;
    let k = lc.carrier();
    ensure(k.object_count() == 2 && k.arrow_count() == 4, || {
        format!(
            "walking arrow localizes to {} objects, {} arrows",
            k.object_count(),
            k.arrow_count()
        )
    })?;
    ensure(iso(k, &walking_iso()), || "not isomorphic to the walking iso".into())?;
    let ch = chain();
    let inp = FractionsInput::from_names(ch.clone(), &["id:x", "id:y", "id:z", "f"]).unwrap();
    let lc = localize(&inp).map_err(|e| e.to_string())?;
    ensure(lc.carrier().arrow_count() == 7, || {
        format!("chain gives {} arrows", lc.carrier().arrow_count())
    })?;
    let mut compared = 0;
    for (name, inp) in all_inputs() {
        let lc = localize(&inp).map_err(|e| format!("{name}: {e}"))?;
        let oracle = span_oracle(inp.category(), inp.weq());
        let q = lc.quotient();
        let ours: BTreeSet<BTreeSet<(ArrowId, ArrowId)>> = (0..q.class_count())
            .map(|k| q.members(k).into_iter().map(|s| (s.v, s.g)).collect())
            .collect();
        let theirs: BTreeSet<_> = oracle.classes.into_iter().collect();
        ensure(ours == theirs, || {
            format!("{name}: span classes disagree with brute force")
        })?;
        compared += 1;
    }
    Ok(format!(
        "2 objects / 4 arrows, chain 7 arrows, {compared} instances match brute force"
    ))
}

fn identity_triviality() -> Outcome {
    let corpus = category_corpus();
    ensure(corpus.len() >= 10, || format!("only {} categories", corpus.len()))?;
    for (name, c) in &corpus {
        ensure(c.object_count() <= 4 && c.arrow_count() <= 14, || {
            format!("{name} is too large")
        })?;
        let lc = localize(&FractionsInput::identities(c.clone())).map_err(|e| format!("{name}: {e}"))?;
        ensure(iso(lc.carrier(), c), || format!("{name}: no iso witness"))?;
    }
    Ok(format!("{} categories", corpus.len()))
}

fn localization_universal_property() -> Outcome {
    let mut runs = 0;
    for (name, inp) in fractions_corpus() {
        ensure(check_axioms(&inp).all_pass(), || format!("{name} fails the axioms"))?;
        let lc = localize(&inp).map_err(|e| format!("{name}: {e}"))?;
        for (xname, x) in test_targets() {
            let report = verify_localization_up(&lc, &x);
            ensure(report.passed(), || format!("{name} into {xname}:\n{report}"))?;
            runs += 1;
        }
    }
    Ok(format!("{runs} (C, W, X) triples"))
}

fn has_nontrivial_coherence(d: &Pseudofunctor) -> bool {
    let idx = d.index();
    let unitors = idx.objects().any(|a| {
        let u = d.unitor(a);
        u.components().iter().any(|&f| !u.src().cod().is_identity(f))
    });
    let compositors = idx.composable_pairs().any(|(p, q)| {
        let c = d.compositor(p, q);
        c.components().iter().any(|&f| !c.src().cod().is_identity(f))
    });
    unitors || compositors
}

fn oplax_colimit() -> Outcome {
    let diagrams: Vec<_> = covariant_corpus().into_iter().chain(cofiltered_corpus()).collect();
    ensure(diagrams.len() >= 5, || "fewer than five diagrams".into())?;
    ensure(diagrams.iter().any(|(_, d)| has_nontrivial_coherence(d)), || {
        "no diagram has nontrivial unitors or compositors".into()
    })?;
    let mut runs = 0;
    for (name, d) in &diagrams {
        for (xname, x) in test_targets() {
            let report = verify_oplax_colimit(d, &x).map_err(|e| format!("{name}: {e}"))?;
            ensure(report.passed(), || format!("{name} into {xname}:\n{report}"))?;
            runs += 1;
        }
    }
    Ok(format!("{} diagrams, {runs} runs", diagrams.len()))
}

fn pseudocolimit() -> Outcome {
    let diagrams = cofiltered_corpus();
    ensure(diagrams.len() >= 3, || "fewer than three diagrams".into())?;
    for ((name, d), (_, inp)) in diagrams.iter().zip(cleavage_inputs()) {
        let axioms = check_axioms(&inp);
        ensure(axioms.all_pass(), || format!("{name}: {axioms}"))?;
        for (xname, x) in test_targets() {
            let report = verify_pseudocolimit(d, &x).map_err(|e| format!("{name}: {e}"))?;
            ensure(report.passed(), || format!("{name} into {xname}:\n{report}"))?;
        }
    }
    Ok(format!("{} cofiltered diagrams", diagrams.len()))
}

fn well_definedness() -> Outcome {
    let mut checked = 0;
    for (name, inp) in all_inputs() {
        let q = sailboat_quotient(&inp);
        if q.spans().len() > EXHAUSTIVE_SPAN_LIMIT {
            continue;
        }
        let lc = localize_with(&inp, Exhaustiveness::Always).map_err(|e| format!("{name}: {e}"))?;
        ensure(lc.checks().exhaustive, || format!("{name}: not exhaustive"))?;
        let c = inp.category();
        // every representative pair and every filler lands in one class
        for (k1, k2) in lc.carrier().composable_pairs() {
            let mut targets = BTreeSet::new();
            for s1 in q.members(k1.0) {
                for s2 in q.members(k2.0) {
                    for s in span_compose_all(&inp, s1, s2).map_err(|e| format!("{name}: {e}"))? {
                        targets.insert(q.class_of(s));
                    }
                }
            }
            ensure(targets.len() == 1, || {
                format!("{name}: composite of classes {} and {} varies", k1.0, k2.0)
            })?;
        }
        // every section choice gives the same identity class
        for x in c.objects() {
            let ids: BTreeSet<_> = inp.weq_into(x).map(|w| q.class_of(Span::new(w, w))).collect();
            ensure(ids.len() == 1, || {
                format!("{name}: identity at {} depends on the section", c.object_name(x))
            })?;
        }
        checked += 1;
    }
    Ok(format!(
        "{checked} instances with at most {EXHAUSTIVE_SPAN_LIMIT} spans"
    ))
}

/// Unit and associativity laws, written out directly.
fn is_category(c: &FinCategory) -> bool {
    let typed = c.composable_pairs().all(|(f, g)| {
        let h = c.composite(f, g).unwrap();
        c.src(h) == c.src(f) && c.tgt(h) == c.tgt(g)
    });
    let units = c
        .arrows()
        .all(|f| c.composite(c.identity(c.src(f)), f) == Some(f) && c.composite(f, c.identity(c.tgt(f))) == Some(f));
    let assoc = c.composable_pairs().all(|(f, g)| {
        c.arrows().filter(|&h| c.src(h) == c.tgt(g)).all(|h| {
            let left = c.composite(c.composite(f, g).unwrap(), h);
            let right = c.composite(f, c.composite(g, h).unwrap());
            left == right
        })
    });
    typed && units && assoc
}

fn law_suite() -> Outcome {
    let mut carriers: Vec<(String, FinCategory)> = Vec::new();
    for (name, d) in covariant_corpus().into_iter().chain(cofiltered_corpus()) {
        let gd = grothendieck(&d).map_err(|e| format!("{name}: {e}"))?;
        carriers.push((format!("elements of {name}"), (**gd.carrier()).clone()));
    }
    for (name, inp) in all_inputs() {
        let lc = localize(&inp).map_err(|e| format!("{name}: {e}"))?;
        carriers.push((format!("localization of {name}"), (**lc.carrier()).clone()));
    }
    for (name, c) in category_corpus() {
        let ext = internalize(&c).externalize().map_err(|e| e.to_string())?;
        carriers.push((format!("externalized {name}"), ext));
    }
    for (name, c) in &carriers {
        let report = c.validate();
        ensure(report.is_valid(), || format!("{name}:\n{report}"))?;
    }
    // every single-entry change is either caught or is a genuine category
    let (mut caught, mut genuine) = (0, 0);
    let fixtures = category_corpus()
        .into_iter()
        .map(|(n, c)| (n.to_string(), (*c).clone()));
    for (name, c) in fixtures.chain(carriers.into_iter().take(6)) {
        for (f, g) in c.composable_pairs() {
            for h in c.arrows().filter(|&h| Some(h) != c.composite(f, g)) {
                let bad = c.with_composite(f, g, h).map_err(|e| e.to_string())?;
                let flagged = !bad.validate().is_valid();
                let lawful = is_category(&bad);
                ensure(flagged != lawful, || {
                    format!(
                        "{name}: rewiring {};{} to {} misjudged",
                        c.arrow_name(f),
                        c.arrow_name(g),
                        c.arrow_name(h)
                    )
                })?;
                ensure(lawful || !internalize(&bad).validate().is_valid(), || {
                    format!(
                        "{name}: internal check misses a rewire of {};{}",
                        c.arrow_name(f),
                        c.arrow_name(g)
                    )
                })?;
                if c.is_identity(f) || c.is_identity(g) {
                    ensure(flagged, || format!("{name}: identity rewire not caught"))?;
                }
                if flagged {
                    caught += 1
                } else {
                    genuine += 1
                }
            }
        }
    }
    Ok(format!(
        "{caught} perturbations caught, {genuine} yield genuine categories"
    ))
}

fn w_map(ic: &InternalCategory, members: &[ArrowId]) -> FinMap {
    FinMap::new(
        FinSet::new("W", members.len()),
        ic.c1.clone(),
        members.iter().map(|a| a.0).collect(),
    )
    .unwrap()
}

fn internal_external() -> Outcome {
    for (name, d) in cofiltered_corpus() {
        let ie = internal_elements(&d).map_err(|e| format!("{name}: {e}"))?;
        let ext = ie.category.externalize().map_err(|e| e.to_string())?;
        let gd = grothendieck(&d).map_err(|e| e.to_string())?;
        ensure(iso(&ext, gd.carrier()), || format!("elements of {name} disagree"))?;
    }
    let mut instances = 0;
    for (name, inp) in all_inputs() {
        let ic = internalize(inp.category());
        let il = internal_localize(&ic, &w_map(&ic, inp.weq())).map_err(|e| format!("{name}: {e}"))?;
        let (pairs, classes) = il.composable_pairs;
        ensure(pairs == classes, || {
            format!("{name}: {pairs} pair classes against {classes}")
        })?;
        let ext = il.category.externalize().map_err(|e| e.to_string())?;
        let lc = localize(&inp).map_err(|e| e.to_string())?;
        ensure(iso(&ext, lc.carrier()), || format!("localization of {name} disagrees"))?;
        instances += 1;
    }
    Ok(format!(
        "{} diagrams, {instances} localizations",
        cofiltered_corpus().len()
    ))
}

fn inversion() -> Outcome {
    let mut inverted = 0;
    for (name, inp) in all_inputs() {
        let lc = localize(&inp).map_err(|e| format!("{name}: {e}"))?;
        let l = lc.localization_functor();
        let k = lc.carrier();
        let inv = inverts(&l, &inp).map_err(|e| e.to_string())?;
        for &w in inp.weq() {
            let lw = l.arrow(w);
            let i = inv
                .inverse_of(w)
                .ok_or_else(|| format!("{name}: L({}) has no inverse", inp.category().arrow_name(w)))?;
            let two_sided =
                k.composite(lw, i) == Some(k.identity(k.src(lw))) && k.composite(i, lw) == Some(k.identity(k.tgt(lw)));
            ensure(two_sided, || {
                format!("{name}: inverse of L({}) is one-sided", inp.category().arrow_name(w))
            })?;
            inverted += 1;
        }
    }
    Ok(format!("{inverted} inverses verified"))
}

fn cover_class() -> Outcome {
    let report = verify_cover_class(4);
    ensure(report.is_valid(), || report.to_string())?;
    Ok("surjections between sets of size at most 4".into())
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [(&str, Duration, fn() -> Outcome); 10] = [
        ("localization oracle", secs(1), localization_oracle),
        ("identity W is trivial", secs(5), identity_triviality),
        (
            "localization universal property",
            secs(20),
            localization_universal_property,
        ),
        ("oplax colimit", secs(20), oplax_colimit),
        ("pseudocolimit", secs(20), pseudocolimit),
        ("well-definedness", secs(20), well_definedness),
        ("law suite", secs(20), law_suite),
        ("internal/external agreement", secs(10), internal_external),
        ("inversion", secs(10), inversion),
        ("cover class", secs(20), cover_class),
    ];
    let mut failures = 0;
    for (i, (name, budget, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > budget => Err(format!("{detail}; over the {budget:?} budget")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({elapsed:.2?}): {detail}", i + 1);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
