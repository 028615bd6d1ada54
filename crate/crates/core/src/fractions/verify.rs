use std::collections::HashMap;
use std::sync::Arc;

use super::{check_axioms, induced_functor, inverts, localize, FractionsInput, LocalizedCategory};
use crate::diagram::{enumerate_transformations, Pseudofunctor, TransformationKind, Variance};
use crate::elements::{describe, grothendieck};
use crate::error::{Error, Result};
use crate::fincat::{check_shape, enumerate_functors, enumerate_nat_trans, Direction, FinCategory, Functor, NatTrans};
use crate::report::VerifierReport;

/// Checks that functors `C → X` inverting `W` correspond to functors
/// `C[W⁻¹] → X` via `F ↦ [F]` and `G ↦ L;G`, and that natural
/// transformations correspond functorially.
pub fn verify_localization_up(lc: &LocalizedCategory, x: &Arc<FinCategory>) -> VerifierReport {
    let l = lc.localization_functor();
    correspondence(lc.input(), lc.carrier(), &l, &|f| induced_functor(f, lc), x)
}

/// The same verifier against an arbitrary candidate `l: C → K`, with the
/// inverse map found by search. Used for negative controls.
pub fn verify_localization_up_candidate(inp: &FractionsInput, l: &Functor, x: &Arc<FinCategory>) -> VerifierReport {
    let carrier = l.cod().clone();
    let candidates = enumerate_functors(&carrier, x);
    let induce = |f: &Functor| {
        candidates
            .iter()
            .find(|g| l.then(g).map(|lg| &lg == f).unwrap_or(false))
            .cloned()
            .ok_or_else(|| Error::domain(format!("no functor out of the candidate restricts to {}", f.describe())))
    };
    correspondence(inp, &carrier, l, &induce, x)
}

fn correspondence(
    inp: &FractionsInput,
    carrier: &Arc<FinCategory>,
    l: &Functor,
    induce: &dyn Fn(&Functor) -> Result<Functor>,
    x: &Arc<FinCategory>,
) -> VerifierReport {
    let mut report = VerifierReport::new(format!(
        "functors inverting W vs functors out of the localization, into {}",
        describe(x)
    ));
    let inverting: Vec<Functor> = enumerate_functors(inp.category(), x)
        .into_iter()
        .filter(|f| inverts(f, inp).map(|i| i.inverts()).unwrap_or(false))
        .collect();
    let outgoing = enumerate_functors(carrier, x);
    let counts = format!(
        "{} inverting functors, {} functors out of the localization",
        inverting.len(),
        outgoing.len()
    );
    if inverting.len() == outgoing.len() {
        report.check("1-cell counts", true, counts);
    } else {
        report.fail("1-cell counts", counts);
        return report;
    }

    let mut induced = Vec::with_capacity(inverting.len());
    for f in &inverting {
        let g = match induce(f) {
            Ok(g) => g,
            Err(e) => {
                report.fail("F ↦ [F]", format!("{}: {e}", f.describe()));
                return report;
            }
        };
        if !g.validate().is_valid() || l.then(&g).ok().as_ref() != Some(f) {
            report.fail(
                "F ↦ [F]",
                format!("[F] is not a functor restricting to {}", f.describe()),
            );
            return report;
        }
        induced.push(g);
    }
    report.check("F ↦ [F]", true, "every inverting functor extends, and L;[F] = F");
    for g in &outgoing {
        let back = l.then(g).ok();
        let ok = back.as_ref().is_some_and(|f| {
            inverts(f, inp).map(|i| i.inverts()).unwrap_or(false) && induce(f).ok().as_ref() == Some(g)
        });
        if !ok {
            report.fail("G ↦ L;G", format!("[L;G] differs from G = {}", g.describe()));
            return report;
        }
    }
    report.check("G ↦ L;G", true, "[L;G] = G for every G");

    // 2-cells: whiskering by L is a bijection on each hom-set, and
    // preserves vertical composition
    let whisker = |tau: &NatTrans, src: &Functor, tgt: &Functor| {
        let comps = inp.category().objects().map(|o| tau.component(l.object(o))).collect();
        NatTrans::new(src.clone(), tgt.clone(), comps)
    };
    let n = inverting.len();
    let mut hom: HashMap<(usize, usize), Vec<NatTrans>> = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            let over = enumerate_nat_trans(&induced[i], &induced[j]).expect("parallel");
            let under = enumerate_nat_trans(&inverting[i], &inverting[j]).expect("parallel");
            let images: Vec<NatTrans> = over
                .iter()
                .filter_map(|t| whisker(t, &inverting[i], &inverting[j]).ok())
                .collect();
            let bijective = images.len() == over.len()
                && images.len() == under.len()
                && images.iter().all(|t| under.contains(t))
                && (1..images.len()).all(|k| !images[..k].contains(&images[k]));
            if !bijective {
                report.fail(
                    "2-cell bijection",
                    format!(
                        "{} transformations above vs {} below between {} and {}",
                        over.len(),
                        under.len(),
                        inverting[i].describe(),
                        inverting[j].describe()
                    ),
                );
                return report;
            }
            hom.insert((i, j), over);
        }
    }
    report.check(
        "2-cell bijection",
        true,
        "whiskering by L is bijective on every hom-set",
    );
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for a in &hom[&(i, j)] {
                    for b in &hom[&(j, k)] {
                        let composite = a.then(b).and_then(|ab| whisker(&ab, &inverting[i], &inverting[k]));
                        let separate = whisker(a, &inverting[i], &inverting[j])
                            .and_then(|wa| whisker(b, &inverting[j], &inverting[k]).and_then(|wb| wa.then(&wb)));
                        if composite.ok() != separate.ok() {
                            report.fail(
                                "2-cell composition",
                                format!("not preserved through {}", induced[j].describe()),
                            );
                            return report;
                        }
                    }
                }
            }
        }
    }
    report.check("2-cell composition", true, "whiskering preserves vertical composites");
    report
}

/// For a contravariant diagram over a cofiltered index, checks that the
/// localization of the category of elements at its cleavage is the
/// pseudocolimit: pseudo transformations `D ⇒ ΔX` correspond to functors
/// out of the localization.
pub fn verify_pseudocolimit(d: &Arc<Pseudofunctor>, x: &Arc<FinCategory>) -> Result<VerifierReport> {
    if d.variance() != Variance::Contravariant {
        return Err(Error::domain(
            "the pseudocolimit verifier needs a contravariant diagram",
        ));
    }
    let shape = check_shape(d.index(), Direction::Cofiltered);
    if !shape.holds {
        return Err(Error::Precondition(format!(
            "index category is not cofiltered: {}",
            shape.failure.unwrap_or_default()
        )));
    }
    let gd = grothendieck(d)?;
    let cleavage = gd.cleavage()?;
    let inp = FractionsInput::new(gd.carrier().clone(), cleavage.members.iter().copied())?;
    let mut report = VerifierReport::new(format!(
        "pseudo transformations vs functors out of the localized category of elements, into {}",
        describe(x)
    ));
    let axioms = check_axioms(&inp);
    if !axioms.all_pass() {
        report.fail("fractions axioms on the cleavage", axioms.to_string());
        return Ok(report);
    }
    report.check("fractions axioms on the cleavage", true, "all four hold");
    let lc = localize(&inp)?;
    let l = lc.localization_functor();
    let whiskered = gd.functor_to_transformation(&l)?;
    if whiskered.validate().is_valid() && whiskered.is_pseudo() {
        report.check("L-whiskered cocone", true, "two-cells are invertible");
    } else {
        report.fail("L-whiskered cocone", "a two-cell of L;ℓ is not invertible");
    }

    let pseudo = enumerate_transformations(d, x, TransformationKind::Pseudo);
    let outgoing = enumerate_functors(lc.carrier(), x);
    let counts = format!("{} pseudo transformations, {} functors", pseudo.len(), outgoing.len());
    if pseudo.len() == outgoing.len() {
        report.check("1-cell counts", true, counts);
    } else {
        report.fail("1-cell counts", counts);
        return Ok(report);
    }
    for t in &pseudo {
        let forward = gd
            .transformation_to_functor(t)
            .and_then(|theta| induced_functor(&theta, &lc));
        let ok = match &forward {
            Ok(g) => {
                outgoing.contains(g)
                    && l.then(g)
                        .and_then(|lg| gd.functor_to_transformation(&lg))
                        .is_ok_and(|back| &back == t)
            }
            Err(_) => false,
        };
        if !ok {
            report.fail(
                "transformation round trip",
                format!(
                    "lost at {:?}",
                    t.components().iter().map(Functor::describe).collect::<Vec<_>>()
                ),
            );
            return Ok(report);
        }
    }
    report.check(
        "transformation round trip",
        true,
        "identity on every pseudo transformation",
    );
    for g in &outgoing {
        let back = l.then(g).and_then(|lg| gd.functor_to_transformation(&lg));
        let ok = match &back {
            Ok(t) => {
                t.validate().is_valid()
                    && t.is_pseudo()
                    && gd
                        .transformation_to_functor(t)
                        .and_then(|theta| induced_functor(&theta, &lc))
                        .is_ok_and(|h| &h == g)
            }
            Err(_) => false,
        };
        if !ok {
            report.fail("functor round trip", format!("lost at {}", g.describe()));
            return Ok(report);
        }
    }
    report.check("functor round trip", true, "identity on every functor");
    Ok(report)
}
