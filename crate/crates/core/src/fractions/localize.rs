use std::collections::HashMap;
use std::sync::Arc;

use super::{check_axioms, sailboat_quotient, span_compose, span_compose_all, FractionsInput, Span, SpanQuotient};
use crate::error::{Error, Result};
use crate::fincat::{Arrow, ArrowId, FinCategory, Functor, ObjectId};
use crate::union_find::UnionFind;

/// Largest span count for which [`Exhaustiveness::Auto`] re-derives every
/// composite with every filler and representative.
pub const EXHAUSTIVE_SPAN_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exhaustiveness {
    /// Exhaustive iff there are at most [`EXHAUSTIVE_SPAN_LIMIT`] spans.
    #[default]
    Auto,
    Always,
    Never,
}

/// What [`localize`] verified while building the quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizationChecks {
    /// Whether every filler and representative was tried.
    pub exhaustive: bool,
    /// Number of `(object, W-arrow into it)` choices confirmed to give the
    /// same identity.
    pub section_choices: usize,
    /// Classes of composable span pairs under the squared relation.
    pub pair_classes: usize,
    /// Composable pairs of classes.
    pub class_pairs: usize,
}

/// `C[W⁻¹]`: spans modulo sailboats, composed on canonical representatives.
#[derive(Debug, Clone)]
pub struct LocalizedCategory {
    input: FractionsInput,
    quotient: SpanQuotient,
    carrier: Arc<FinCategory>,
    section: Vec<ArrowId>,
    checks: LocalizationChecks,
}

pub fn localize(inp: &FractionsInput) -> Result<LocalizedCategory> {
    localize_with(inp, Exhaustiveness::Auto)
}

/// Builds `C[W⁻¹]`. Refuses with the axiom report when an axiom fails.
/// Any failure of the internal consistency checks is an integrity error.
pub fn localize_with(inp: &FractionsInput, mode: Exhaustiveness) -> Result<LocalizedCategory> {
    let report = check_axioms(inp);
    if !report.all_pass() {
        return Err(Error::Axioms(Box::new(report)));
    }
    let c = inp.category().clone();
    let quotient = sailboat_quotient(inp);
    let section = inp.first_section().expect("section axiom holds");
    let n = quotient.class_count();
    let reps: Vec<Span> = (0..n).map(|k| quotient.representative(k)).collect();

    let arrows: Vec<Arrow> = reps
        .iter()
        .map(|s| Arrow {
            name: s.describe(&c),
            src: s.src(&c),
            tgt: s.tgt(&c),
        })
        .collect();
    let class = |s: Span| {
        quotient
            .class_of(s)
            .ok_or_else(|| Error::integrity(format!("{} is not a span", s.describe(&c))))
    };
    let identities = c
        .objects()
        .map(|x| class(Span::new(section[x.0], section[x.0])).map(ArrowId))
        .collect::<Result<Vec<_>>>()?;
    let mut table = vec![None; n * n];
    for (i, s1) in reps.iter().enumerate() {
        for (j, s2) in reps.iter().enumerate() {
            if s1.tgt(&c) == s2.src(&c) {
                table[i * n + j] = Some(ArrowId(class(span_compose(inp, *s1, *s2)?)?));
            }
        }
    }
    let objects = c.objects().map(|x| c.object_name(x).to_string()).collect();
    let carrier = FinCategory::from_table(objects, arrows, identities.clone(), table)?;
    let laws = carrier.validate();
    if !laws.is_valid() {
        return Err(Error::integrity(format!("localized category fails its laws:\n{laws}")));
    }

    // every section gives the same identities
    let mut section_choices = 0;
    for x in c.objects() {
        for b in inp.weq_into(x) {
            section_choices += 1;
            if class(Span::new(b, b))? != identities[x.0].0 {
                return Err(Error::integrity(format!(
                    "identity at {} depends on the section",
                    c.object_name(x)
                )));
            }
        }
    }

    let exhaustive = match mode {
        Exhaustiveness::Always => true,
        Exhaustiveness::Never => false,
        Exhaustiveness::Auto => quotient.spans().len() <= EXHAUSTIVE_SPAN_LIMIT,
    };
    if exhaustive {
        for &s1 in quotient.spans() {
            for &s2 in quotient.spans() {
                if s1.tgt(&c) != s2.src(&c) {
                    continue;
                }
                let expected = carrier.composite(ArrowId(class(s1)?), ArrowId(class(s2)?));
                for s in span_compose_all(inp, s1, s2)? {
                    if Some(ArrowId(class(s)?)) != expected {
                        return Err(Error::integrity(format!(
                            "composite of {} and {} depends on the choice of filler or representative",
                            s1.describe(&c),
                            s2.describe(&c)
                        )));
                    }
                }
            }
        }
    }

    let (pair_classes, class_pairs) = composable_pair_agreement(inp, &quotient, &carrier)?;
    Ok(LocalizedCategory {
        input: inp.clone(),
        quotient,
        carrier: Arc::new(carrier),
        section,
        checks: LocalizationChecks {
            exhaustive,
            section_choices,
            pair_classes,
            class_pairs,
        },
    })
}

/// Composable span pairs modulo sailboats on either side, against
/// composable pairs of classes; checked as an explicit bijection.
fn composable_pair_agreement(
    inp: &FractionsInput,
    quotient: &SpanQuotient,
    carrier: &FinCategory,
) -> Result<(usize, usize)> {
    let c = inp.category();
    let spans = quotient.spans();
    let mut pairs = Vec::new();
    for &s1 in spans {
        for &s2 in spans {
            if s1.tgt(c) == s2.src(c) {
                pairs.push((s1, s2));
            }
        }
    }
    let index: HashMap<(Span, Span), usize> = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut uf = UnionFind::new(pairs.len());
    let boats: Vec<(Span, Span)> = super::shape_instances(inp, super::ShapeKind::Sailboat)
        .into_iter()
        .map(|b| {
            let (h, v, g) = (b.payload[0], b.payload[1], b.payload[2]);
            (
                Span::new(v, g),
                Span::new(
                    c.composite(h, v).expect("composable"),
                    c.composite(h, g).expect("composable"),
                ),
            )
        })
        .collect();
    for &(b0, b1) in &boats {
        for &(e0, e1) in &boats {
            if b0.tgt(c) == e0.src(c) {
                uf.union(index[&(b0, e0)], index[&(b1, e1)]);
            }
        }
    }
    let (class_of, pair_classes) = uf.classes();
    let mut image = vec![None; pair_classes];
    for (i, &(s1, s2)) in pairs.iter().enumerate() {
        let target = (quotient.class_of(s1), quotient.class_of(s2));
        match image[class_of[i]] {
            None => image[class_of[i]] = Some(target),
            Some(t) if t == target => {}
            Some(_) => return Err(Error::integrity("span-pair classes straddle class pairs")),
        }
    }
    let class_pairs = carrier.composable_pairs().count();
    let mut seen: Vec<_> = image.into_iter().flatten().collect();
    seen.sort();
    seen.dedup();
    if seen.len() != pair_classes || pair_classes != class_pairs {
        return Err(Error::integrity(format!(
            "{pair_classes} classes of composable span pairs but {class_pairs} composable class pairs"
        )));
    }
    Ok((pair_classes, class_pairs))
}

impl LocalizedCategory {
    pub fn carrier(&self) -> &Arc<FinCategory> {
        &self.carrier
    }

    pub fn input(&self) -> &FractionsInput {
        &self.input
    }

    pub fn quotient(&self) -> &SpanQuotient {
        &self.quotient
    }

    /// The section `α` used for identities and for `L`.
    pub fn section(&self) -> &[ArrowId] {
        &self.section
    }

    pub fn checks(&self) -> &LocalizationChecks {
        &self.checks
    }

    /// The quotient map on spans.
    pub fn q(&self, s: Span) -> Option<ArrowId> {
        self.quotient.class_of(s).map(ArrowId)
    }

    pub fn class_rep(&self, f: ArrowId) -> Span {
        self.quotient.representative(f.0)
    }

    /// `L: C → C[W⁻¹]`, identity on objects, `L(g) = [α(x), α(x);g]`.
    pub fn localization_functor(&self) -> Functor {
        let c = self.input.category();
        let on_arrows = c
            .arrows()
            .map(|g| {
                let a = self.section[c.src(g).0];
                self.q(Span::new(a, c.composite(a, g).expect("composable")))
                    .expect("a span")
            })
            .collect();
        Functor::new(c.clone(), self.carrier.clone(), c.objects().collect(), on_arrows).expect("total by construction")
    }
}

/// Which images of `W` under a functor are invertible, with their inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inversion {
    pub inverses: Vec<(ArrowId, Option<ArrowId>)>,
}

impl Inversion {
    pub fn inverts(&self) -> bool {
        self.inverses.iter().all(|(_, i)| i.is_some())
    }

    /// First member of `W` whose image has no inverse.
    pub fn first_failure(&self) -> Option<ArrowId> {
        self.inverses.iter().find(|(_, i)| i.is_none()).map(|(w, _)| *w)
    }

    pub fn inverse_of(&self, w: ArrowId) -> Option<ArrowId> {
        self.inverses.iter().find(|(v, _)| *v == w).and_then(|(_, i)| *i)
    }
}

/// Looks up a two-sided inverse of `F(w)` for every `w ∈ W`.
pub fn inverts(f: &Functor, inp: &FractionsInput) -> Result<Inversion> {
    if f.dom() != inp.category() {
        return Err(Error::domain("functor is not defined on the fractions category"));
    }
    Ok(Inversion {
        inverses: inp.weq().iter().map(|&w| (w, f.cod().inverse(f.arrow(w)))).collect(),
    })
}

/// `[F]` on `C[W⁻¹]`: `[F][(v, g)] = F(v)⁻¹ ; F(g)`, checked constant on
/// every class and checked to satisfy `L;[F] = F`.
pub fn induced_functor(f: &Functor, lc: &LocalizedCategory) -> Result<Functor> {
    let inversion = inverts(f, lc.input())?;
    if let Some(w) = inversion.first_failure() {
        return Err(Error::domain(format!(
            "functor does not invert {}",
            lc.input().category().arrow_name(w)
        )));
    }
    let x = f.cod();
    let c = lc.input().category();
    let mut on_arrows = Vec::with_capacity(lc.carrier().arrow_count());
    for k in 0..lc.quotient().class_count() {
        let mut value = None;
        for s in lc.quotient().members(k) {
            let inv = inversion.inverse_of(s.v).expect("inverts W");
            let img = x.compose(inv, f.arrow(s.g))?;
            match value {
                None => value = Some(img),
                Some(prev) if prev == img => {}
                Some(_) => {
                    return Err(Error::integrity(format!(
                        "[F] is not constant on the class of {}",
                        s.describe(c)
                    )))
                }
            }
        }
        on_arrows.push(value.expect("classes are nonempty"));
    }
    let on_objects: Vec<ObjectId> = c.objects().map(|o| f.object(o)).collect();
    let induced = Functor::new(lc.carrier().clone(), x.clone(), on_objects, on_arrows)?;
    if lc.localization_functor().then(&induced)? != *f {
        return Err(Error::integrity("L;[F] differs from F"));
    }
    Ok(induced)
}
