//! The category of elements of a pseudofunctor, its canonical cocone, the
//! cleavage of cartesian arrows, and the correspondence between
//! transformations out of `D` and functors out of the category of elements.

use std::collections::HashMap;
use std::sync::Arc;

use crate::diagram::{
    enumerate_modifications, enumerate_transformations, LaxTransformation, Modification, Pseudofunctor,
    TransformationKind, Variance,
};
use crate::error::{Error, Result};
use crate::fincat::{
    enumerate_functors, enumerate_nat_trans, Arrow, ArrowId, FinCategory, Functor, NatTrans, ObjectId,
};
use crate::report::VerifierReport;

/// Tag of an arrow `(φ, f)` of the category of elements. `base` is the
/// fiber object that pins down the cofiber element: the source object `a`
/// (covariant, `f: D(φ)(a) → b`) or the target object `b` (contravariant,
/// `f: a → D(φ)(b)`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArrowTag {
    pub index: ArrowId,
    pub fiber: ArrowId,
    pub base: ObjectId,
}

/// A category of elements with the coprojection tags of each object and
/// arrow.
#[derive(Debug, Clone)]
pub struct ElementsCategory {
    carrier: Arc<FinCategory>,
    diagram: Arc<Pseudofunctor>,
    object_tags: Vec<(ObjectId, ObjectId)>,
    arrow_tags: Vec<ArrowTag>,
    object_lookup: HashMap<(ObjectId, ObjectId), ObjectId>,
    arrow_lookup: HashMap<ArrowTag, ArrowId>,
}

/// Builds the category of elements. Objects are pairs `(A, a)`; arrows are
/// tagged pairs `(φ, f)` ordered by `(φ, source object, f, base)`.
///
/// Covariant composite: `(φ,f);(ψ,g) = (φψ, δ_{φ;ψ,a} ; D(ψ)(f) ; g)`.
/// Contravariant composite: `(φ,f);(ψ,g) = (φψ, f ; D(φ)(g) ; δ⁻¹_{φ;ψ,c})`.
pub fn grothendieck(d: &Arc<Pseudofunctor>) -> Result<ElementsCategory> {
    let report = d.validate();
    if !report.is_valid() {
        return Err(Error::Precondition(format!(
            "diagram is not a pseudofunctor:\n{report}"
        )));
    }
    let idx = d.index().clone();
    let mut object_tags = Vec::new();
    let mut object_names = Vec::new();
    let mut object_lookup = HashMap::new();
    for a in idx.objects() {
        let cat = d.category(a);
        for o in cat.objects() {
            object_lookup.insert((a, o), ObjectId(object_tags.len()));
            object_tags.push((a, o));
            object_names.push(format!("({},{})", idx.object_name(a), cat.object_name(o)));
        }
    }
    let mut arrow_tags = Vec::new();
    let mut arrow_ends = Vec::new();
    for phi in idx.arrows() {
        let (a_ix, b_ix) = (idx.src(phi), idx.tgt(phi));
        let dphi = d.functor(phi);
        match d.variance() {
            Variance::Covariant => {
                let (ca, cb) = (d.category(a_ix), d.category(b_ix));
                for o in ca.objects() {
                    for &f in cb.arrows_from(dphi.object(o)) {
                        arrow_tags.push(ArrowTag {
                            index: phi,
                            fiber: f,
                            base: o,
                        });
                        arrow_ends.push((object_lookup[&(a_ix, o)], object_lookup[&(b_ix, cb.tgt(f))]));
                    }
                }
            }
            Variance::Contravariant => {
                let (ca, cb) = (d.category(a_ix), d.category(b_ix));
                for o in ca.objects() {
                    for &f in ca.arrows_from(o) {
                        for b in cb.objects().filter(|&b| dphi.object(b) == ca.tgt(f)) {
                            arrow_tags.push(ArrowTag {
                                index: phi,
                                fiber: f,
                                base: b,
                            });
                            arrow_ends.push((object_lookup[&(a_ix, o)], object_lookup[&(b_ix, b)]));
                        }
                    }
                }
            }
        }
    }
    let arrow_lookup: HashMap<ArrowTag, ArrowId> =
        arrow_tags.iter().enumerate().map(|(i, t)| (*t, ArrowId(i))).collect();
    // plain "(φ,f)" names unless a base object is needed to disambiguate
    let mut name_counts: HashMap<(ArrowId, ArrowId), usize> = HashMap::new();
    for t in &arrow_tags {
        *name_counts.entry((t.index, t.fiber)).or_default() += 1;
    }
    let arrows: Vec<Arrow> = arrow_tags
        .iter()
        .zip(&arrow_ends)
        .map(|(t, &(src, tgt))| {
            let fiber_cat = match d.variance() {
                Variance::Covariant => d.category(idx.tgt(t.index)),
                Variance::Contravariant => d.category(idx.src(t.index)),
            };
            let mut name = format!("({},{})", idx.arrow_name(t.index), fiber_cat.arrow_name(t.fiber));
            if name_counts[&(t.index, t.fiber)] > 1 {
                let base_cat = match d.variance() {
                    Variance::Covariant => d.category(idx.src(t.index)),
                    Variance::Contravariant => d.category(idx.tgt(t.index)),
                };
                name.push_str(&format!("@{}", base_cat.object_name(t.base)));
            }
            Arrow { name, src, tgt }
        })
        .collect();

    let inverse = |cat: &FinCategory, f: ArrowId| {
        cat.inverse(f)
            .ok_or_else(|| Error::Precondition("structure cell is not invertible".into()))
    };
    let mut identities = Vec::new();
    for &(a, o) in &object_tags {
        let cat = d.category(a);
        let u = d.unitor(a).component(o);
        let fiber = match d.variance() {
            Variance::Covariant => u,
            Variance::Contravariant => inverse(cat, u)?,
        };
        let tag = ArrowTag {
            index: idx.identity(a),
            fiber,
            base: o,
        };
        identities.push(
            *arrow_lookup
                .get(&tag)
                .ok_or_else(|| Error::integrity("identity tag missing"))?,
        );
    }

    let n = arrow_tags.len();
    let mut table = vec![None; n * n];
    for (i, s) in arrow_tags.iter().enumerate() {
        for (j, t) in arrow_tags.iter().enumerate() {
            if arrows[i].tgt != arrows[j].src {
                continue;
            }
            let k = idx.composite(s.index, t.index).expect("endpoints agree in the index");
            let tag = match d.variance() {
                Variance::Covariant => {
                    let c = d.category(idx.tgt(t.index));
                    let delta = d.compositor(s.index, t.index).component(s.base);
                    let fiber = c.compose_path(&[delta, d.functor(t.index).arrow(s.fiber), t.fiber]);
                    ArrowTag {
                        index: k,
                        fiber,
                        base: s.base,
                    }
                }
                Variance::Contravariant => {
                    let a_cat = d.category(idx.src(s.index));
                    let delta = d.compositor(s.index, t.index).component(t.base);
                    let fiber =
                        a_cat.compose_path(&[s.fiber, d.functor(s.index).arrow(t.fiber), inverse(a_cat, delta)?]);
                    ArrowTag {
                        index: k,
                        fiber,
                        base: t.base,
                    }
                }
            };
            table[i * n + j] = Some(
                *arrow_lookup
                    .get(&tag)
                    .ok_or_else(|| Error::integrity("composite lands outside the cofibers"))?,
            );
        }
    }
    let carrier = FinCategory::from_table(object_names, arrows, identities, table)?;
    Ok(ElementsCategory {
        carrier: Arc::new(carrier),
        diagram: d.clone(),
        object_tags,
        arrow_tags,
        object_lookup,
        arrow_lookup,
    })
}

impl ElementsCategory {
    pub fn carrier(&self) -> &Arc<FinCategory> {
        &self.carrier
    }

    pub fn diagram(&self) -> &Arc<Pseudofunctor> {
        &self.diagram
    }

    pub fn variance(&self) -> Variance {
        self.diagram.variance()
    }

    pub fn object_tag(&self, x: ObjectId) -> (ObjectId, ObjectId) {
        self.object_tags[x.0]
    }

    pub fn arrow_tag(&self, f: ArrowId) -> ArrowTag {
        self.arrow_tags[f.0]
    }

    pub fn object_of(&self, a: ObjectId, o: ObjectId) -> ObjectId {
        self.object_lookup[&(a, o)]
    }

    pub fn arrow_of(&self, tag: ArrowTag) -> Option<ArrowId> {
        self.arrow_lookup.get(&tag).copied()
    }

    /// Same tags over a different carrier with the same shape. Only for
    /// negative controls: the result is not a category of elements.
    pub fn with_carrier(&self, carrier: FinCategory) -> Result<Self> {
        if carrier.object_count() != self.carrier.object_count() || carrier.arrow_count() != self.carrier.arrow_count()
        {
            return Err(Error::domain("replacement carrier has a different size"));
        }
        Ok(ElementsCategory {
            carrier: Arc::new(carrier),
            ..self.clone()
        })
    }

    fn tagged(&self, index: ArrowId, fiber: ArrowId, base: ObjectId) -> ArrowId {
        self.arrow_lookup[&ArrowTag { index, fiber, base }]
    }

    /// The canonical transformation `ℓ: D ⇒ Δ(carrier)`: `ℓ_A(a) = (A,a)`,
    /// two-cells `(φ, 1)`.
    pub fn canonical_cocone(&self) -> LaxTransformation {
        let d = &self.diagram;
        let idx = d.index();
        let mut components = Vec::new();
        for a in idx.objects() {
            let cat = d.category(a);
            let u = d.unitor(a);
            let on_objects = cat.objects().map(|o| self.object_of(a, o)).collect();
            let on_arrows = cat
                .arrows()
                .map(|f| match d.variance() {
                    Variance::Covariant => {
                        let fiber = cat.compose(u.component(cat.src(f)), f).expect("typed unitor");
                        self.tagged(idx.identity(a), fiber, cat.src(f))
                    }
                    Variance::Contravariant => {
                        let back = cat.inverse(u.component(cat.tgt(f))).expect("invertible unitor");
                        let fiber = cat.compose(f, back).expect("typed unitor");
                        self.tagged(idx.identity(a), fiber, cat.tgt(f))
                    }
                })
                .collect();
            components.push(
                Functor::new(cat.clone(), self.carrier.clone(), on_objects, on_arrows).expect("total by construction"),
            );
        }
        let cells = idx
            .arrows()
            .map(|phi| {
                let dphi = d.functor(phi);
                dphi.dom()
                    .objects()
                    .map(|o| self.tagged(phi, dphi.cod().identity(dphi.object(o)), o))
                    .collect()
            })
            .collect();
        LaxTransformation::from_components(d.clone(), self.carrier.clone(), components, cells)
            .expect("canonical cocone is well typed")
    }

    /// The cleavage: arrows `(φ, 1_{D(φ)(b)})` for each `φ` and each
    /// object `b` of the fiber over the codomain of `φ`.
    pub fn cleavage(&self) -> Result<CleavageSet> {
        if self.variance() != Variance::Contravariant {
            return Err(Error::domain("the cleavage is defined for contravariant diagrams"));
        }
        let d = &self.diagram;
        let mut members = Vec::new();
        let mut tags = Vec::new();
        for phi in d.index().arrows() {
            let dphi = d.functor(phi);
            for b in dphi.dom().objects() {
                members.push(self.tagged(phi, dphi.cod().identity(dphi.object(b)), b));
                tags.push((phi, b));
            }
        }
        Ok(CleavageSet { members, tags })
    }

    /// The functor `θ` induced by a transformation: `θ(A,a) = x_A(a)` and
    /// `θ(φ,f) = x_{φ,a} ; x_B(f)` (covariant) or `x_A(f) ; x_{φ,b}`
    /// (contravariant).
    pub fn transformation_to_functor(&self, x: &LaxTransformation) -> Result<Functor> {
        if x.diagram() != &self.diagram {
            return Err(Error::domain("transformation is over a different diagram"));
        }
        let idx = self.diagram.index();
        let target = x.target();
        let on_objects = self
            .object_tags
            .iter()
            .map(|&(a, o)| x.component(a).object(o))
            .collect();
        let on_arrows = self
            .arrow_tags
            .iter()
            .map(|t| {
                let (a, b) = (idx.src(t.index), idx.tgt(t.index));
                let cell = x.two_cell(t.index).component(t.base);
                match self.variance() {
                    Variance::Covariant => target.compose(cell, x.component(b).arrow(t.fiber)),
                    Variance::Contravariant => target.compose(x.component(a).arrow(t.fiber), cell),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Functor::new(self.carrier.clone(), target.clone(), on_objects, on_arrows)
    }

    /// Whiskers the canonical cocone by `F`.
    pub fn functor_to_transformation(&self, f: &Functor) -> Result<LaxTransformation> {
        if f.dom() != &self.carrier {
            return Err(Error::domain("functor is not defined on this category of elements"));
        }
        let ell = self.canonical_cocone();
        let d = &self.diagram;
        let components = d
            .index()
            .objects()
            .map(|a| ell.component(a).then(f))
            .collect::<Result<Vec<_>>>()?;
        let cells = d
            .index()
            .arrows()
            .map(|phi| ell.two_cell(phi).components().iter().map(|&g| f.arrow(g)).collect())
            .collect();
        LaxTransformation::from_components(d.clone(), f.cod().clone(), components, cells)
    }

    /// The natural transformation `θ_x ⇒ θ_y` with components `α_{A,a}`.
    pub fn modification_to_nat_trans(&self, m: &Modification) -> Result<NatTrans> {
        let src = self.transformation_to_functor(m.src())?;
        let tgt = self.transformation_to_functor(m.tgt())?;
        let comps = self
            .object_tags
            .iter()
            .map(|&(a, o)| m.component(a).component(o))
            .collect();
        NatTrans::new(src, tgt, comps)
    }

    /// The modification with components `β_{(A,a)}` read off fiberwise.
    pub fn nat_trans_to_modification(
        &self,
        beta: &NatTrans,
        x: &LaxTransformation,
        y: &LaxTransformation,
    ) -> Result<Modification> {
        let d = &self.diagram;
        let comps = d
            .index()
            .objects()
            .map(|a| {
                let cs = d
                    .category(a)
                    .objects()
                    .map(|o| beta.component(self.object_of(a, o)))
                    .collect();
                NatTrans::new(x.component(a).clone(), y.component(a).clone(), cs)
            })
            .collect::<Result<Vec<_>>>()?;
        Modification::new(x.clone(), y.clone(), comps)
    }
}

/// The cleavage of a contravariant category of elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleavageSet {
    /// Member arrows in `(φ, b)` order.
    pub members: Vec<ArrowId>,
    /// The `(φ, b)` tag of each member.
    pub tags: Vec<(ArrowId, ObjectId)>,
}

/// Checks that transformations `D ⇒ ΔX` correspond to functors out of the
/// category of elements, on 1-cells and on 2-cells.
pub fn verify_oplax_colimit(d: &Arc<Pseudofunctor>, x: &Arc<FinCategory>) -> Result<VerifierReport> {
    let gd = grothendieck(d)?;
    Ok(verify_oplax_colimit_against(&gd, x))
}

/// The verifier run against a given candidate, which may be a corrupted
/// category of elements (negative controls).
pub fn verify_oplax_colimit_against(gd: &ElementsCategory, x: &Arc<FinCategory>) -> VerifierReport {
    let mut report = VerifierReport::new(format!(
        "transformations into {} vs functors out of the category of elements",
        describe(x)
    ));
    let law = gd.carrier.validate();
    if law.is_valid() {
        report.check("carrier laws", true, "category laws hold");
    } else {
        report.fail("carrier laws", format!("{}", law.violations()[0]));
    }
    let transformations = enumerate_transformations(&gd.diagram, x, TransformationKind::Lax);
    let functors = enumerate_functors(&gd.carrier, x);
    let counts = format!("{} transformations, {} functors", transformations.len(), functors.len());
    if transformations.len() == functors.len() {
        report.check("1-cell counts", true, counts);
    } else {
        report.fail("1-cell counts", counts);
    }

    let mut images = Vec::new();
    let mut ok = true;
    for t in &transformations {
        let theta = match gd.transformation_to_functor(t) {
            Ok(th) => th,
            Err(e) => {
                report.fail("transformation to functor", e.to_string());
                ok = false;
                break;
            }
        };
        if !theta.validate().is_valid() {
            report.fail(
                "transformation to functor",
                format!("image {} is not a functor", theta.describe()),
            );
            ok = false;
            break;
        }
        match gd.functor_to_transformation(&theta) {
            Ok(back) if &back == t => {}
            _ => {
                report.fail("round trip on transformations", format!("lost at {}", theta.describe()));
                ok = false;
                break;
            }
        }
        images.push(theta);
    }
    if ok {
        report.check(
            "round trip on transformations",
            true,
            "identity on every transformation",
        );
    }
    let mut ok = true;
    for f in &functors {
        let back = gd.functor_to_transformation(f).and_then(|t| {
            if !t.validate().is_valid() {
                return Err(Error::domain("whiskered transformation is not coherent"));
            }
            gd.transformation_to_functor(&t)
        });
        match back {
            Ok(g) if &g == f => {}
            Ok(_) | Err(_) => {
                report.fail("round trip on functors", format!("lost at {}", f.describe()));
                ok = false;
                break;
            }
        }
    }
    if ok {
        report.check("round trip on functors", true, "identity on every functor");
    }
    if !report.passed() {
        return report;
    }

    // 2-cells: modifications x ⇛ y against natural transformations θx ⇒ θy
    let mut pair_mods: HashMap<(usize, usize), Vec<Modification>> = HashMap::new();
    let mut ok = true;
    'pairs: for (i, tx) in transformations.iter().enumerate() {
        for (j, ty) in transformations.iter().enumerate() {
            let mods = enumerate_modifications(tx, ty).expect("parallel");
            let nats = enumerate_nat_trans(&images[i], &images[j]).expect("parallel");
            if mods.len() != nats.len() {
                report.fail(
                    "2-cell bijection",
                    format!(
                        "{} modifications vs {} transformations between {} and {}",
                        mods.len(),
                        nats.len(),
                        images[i].describe(),
                        images[j].describe()
                    ),
                );
                ok = false;
                break 'pairs;
            }
            for m in &mods {
                let round = gd
                    .modification_to_nat_trans(m)
                    .and_then(|n| gd.nat_trans_to_modification(&n, tx, ty).map(|back| (n, back)));
                match round {
                    Ok((n, back)) if &back == m && nats.contains(&n) => {}
                    _ => {
                        report.fail(
                            "2-cell bijection",
                            format!(
                                "modification round trip fails between {} and {}",
                                images[i].describe(),
                                images[j].describe()
                            ),
                        );
                        ok = false;
                        break 'pairs;
                    }
                }
            }
            pair_mods.insert((i, j), mods);
        }
    }
    if !ok {
        return report;
    }
    report.check("2-cell bijection", true, "modifications match natural transformations");

    let n = transformations.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for m1 in &pair_mods[&(i, j)] {
                    for m2 in &pair_mods[&(j, k)] {
                        let composite = m1.then(m2).and_then(|m| gd.modification_to_nat_trans(&m));
                        let separate = gd
                            .modification_to_nat_trans(m1)
                            .and_then(|a| gd.modification_to_nat_trans(m2).and_then(|b| a.then(&b)));
                        match (composite, separate) {
                            (Ok(a), Ok(b)) if a == b => {}
                            _ => {
                                report.fail(
                                    "2-cell composition",
                                    format!("composite not preserved through {}", images[j].describe()),
                                );
                                return report;
                            }
                        }
                    }
                }
            }
        }
    }
    report.check("2-cell composition", true, "vertical composites are preserved");
    report
}

pub(crate) fn describe(x: &FinCategory) -> String {
    format!(
        "a category with {} objects and {} arrows",
        x.object_count(),
        x.arrow_count()
    )
}
