use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{ArrowId, FinCategory, Functor, NatTrans, ObjectId};
use crate::report::{ValidationReport, ViolationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// A pseudofunctor with all structure stored explicitly: one category per
/// index object, one functor per index arrow (identities included), one
/// unitor per object and one compositor per composable pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pseudofunctor {
    index: Arc<FinCategory>,
    variance: Variance,
    categories: Vec<Arc<FinCategory>>,
    functors: Vec<Functor>,
    unitors: Vec<NatTrans>,
    /// Row-major over index arrow pairs, `Some` exactly on composable pairs.
    compositors: Vec<Option<NatTrans>>,
}

impl Pseudofunctor {
    /// Assembles a pseudofunctor and checks that every piece is typed
    /// correctly. Coherence is checked by [`Pseudofunctor::validate`].
    pub fn new(
        index: Arc<FinCategory>,
        variance: Variance,
        categories: Vec<Arc<FinCategory>>,
        functors: Vec<Functor>,
        unitors: Vec<NatTrans>,
        compositors: Vec<((ArrowId, ArrowId), NatTrans)>,
    ) -> Result<Self> {
        if categories.len() != index.object_count() {
            return Err(Error::input("need one category per index object"));
        }
        if functors.len() != index.arrow_count() {
            return Err(Error::input("need one functor per index arrow"));
        }
        if unitors.len() != index.object_count() {
            return Err(Error::input("need one unitor per index object"));
        }
        let mut out = Pseudofunctor {
            index: index.clone(),
            variance,
            categories,
            functors,
            unitors,
            compositors: vec![None; index.arrow_count() * index.arrow_count()],
        };
        for phi in index.arrows() {
            let (from, to) = out.fiber_endpoints(phi);
            let f = &out.functors[phi.0];
            if f.dom() != &out.categories[from.0] || f.cod() != &out.categories[to.0] {
                return Err(Error::input(format!(
                    "functor for {} has the wrong domain or codomain",
                    index.arrow_name(phi)
                )));
            }
        }
        for a in index.objects() {
            let u = &out.unitors[a.0];
            if u.src() != out.functor(index.identity(a)) || u.tgt() != &Functor::identity(out.categories[a.0].clone()) {
                return Err(Error::input(format!(
                    "unitor at {} must go from D(1) to the identity",
                    index.object_name(a)
                )));
            }
        }
        for ((phi, psi), nat) in compositors {
            let Some(k) = index.composite(phi, psi) else {
                return Err(Error::input(format!(
                    "compositor given for non-composable pair {};{}",
                    index.arrow_name(phi),
                    index.arrow_name(psi)
                )));
            };
            let (first, second) = out.application_order(phi, psi);
            let expected = out.functor(first).then(out.functor(second))?;
            if nat.src() != out.functor(k) || nat.tgt() != &expected {
                return Err(Error::input(format!(
                    "compositor at {};{} has the wrong source or target functor",
                    index.arrow_name(phi),
                    index.arrow_name(psi)
                )));
            }
            let slot = phi.0 * index.arrow_count() + psi.0;
            out.compositors[slot] = Some(nat);
        }
        if let Some((phi, psi)) = index
            .composable_pairs()
            .find(|&(p, q)| out.compositors[p.0 * index.arrow_count() + q.0].is_none())
        {
            return Err(Error::input(format!(
                "missing compositor for {};{}",
                index.arrow_name(phi),
                index.arrow_name(psi)
            )));
        }
        Ok(out)
    }

    /// A strict functor into finite categories, with identity unitors and
    /// compositors. Rejects assignments that are not strictly functorial.
    pub fn strictify(
        index: Arc<FinCategory>,
        variance: Variance,
        categories: Vec<Arc<FinCategory>>,
        functors: Vec<Functor>,
    ) -> Result<Self> {
        if functors.len() != index.arrow_count() || categories.len() != index.object_count() {
            return Err(Error::input("assignment is not total"));
        }
        for (phi, f) in functors.iter().enumerate() {
            let report = f.validate();
            if !report.is_valid() {
                return Err(Error::input(format!(
                    "functor for {} is not a functor: {}",
                    index.arrow_name(ArrowId(phi)),
                    report.violations()[0]
                )));
            }
        }
        let mut unitors = Vec::new();
        for a in index.objects() {
            let f = &functors[index.identity(a).0];
            if *f != Functor::identity(categories[a.0].clone()) {
                return Err(Error::input(format!(
                    "identity of {} is not sent to an identity functor",
                    index.object_name(a)
                )));
            }
            unitors.push(NatTrans::identity(f));
        }
        let mut compositors = Vec::new();
        for (phi, psi) in index.composable_pairs() {
            let k = index.composite(phi, psi).expect("composable");
            let (first, second) = match variance {
                Variance::Covariant => (phi, psi),
                Variance::Contravariant => (psi, phi),
            };
            let path = functors[first.0].then(&functors[second.0])?;
            if path != functors[k.0] {
                return Err(Error::input(format!(
                    "composite {};{} is not preserved strictly",
                    index.arrow_name(phi),
                    index.arrow_name(psi)
                )));
            }
            compositors.push(((phi, psi), NatTrans::identity(&path)));
        }
        Pseudofunctor::new(index, variance, categories, functors, unitors, compositors)
    }

    /// Transports the structure of `self` along natural isomorphisms
    /// `θ_φ: D'(φ) ⇒ D(φ)`, giving a pseudofunctor with the functors `D'`.
    /// Applied to a strict diagram this produces nontrivial unitors and
    /// compositors that are coherent by construction.
    pub fn twist(&self, functors: Vec<Functor>, isos: Vec<NatTrans>) -> Result<Self> {
        let index = &self.index;
        if functors.len() != index.arrow_count() || isos.len() != index.arrow_count() {
            return Err(Error::input("twist needs one functor and one iso per index arrow"));
        }
        for phi in index.arrows() {
            let theta = &isos[phi.0];
            if theta.src() != &functors[phi.0] || theta.tgt() != self.functor(phi) {
                return Err(Error::input(format!(
                    "twisting iso at {} has the wrong type",
                    index.arrow_name(phi)
                )));
            }
            if !theta.validate().is_valid() || !theta.is_invertible() {
                return Err(Error::input(format!(
                    "twisting data at {} is not a natural isomorphism",
                    index.arrow_name(phi)
                )));
            }
        }
        let inv = |cat: &FinCategory, f: ArrowId| cat.inverse(f).expect("checked invertible");
        let mut unitors = Vec::new();
        for a in index.objects() {
            let cat = &self.categories[a.0];
            let theta = &isos[index.identity(a).0];
            let comps = cat
                .objects()
                .map(|x| cat.compose(theta.component(x), self.unitors[a.0].component(x)))
                .collect::<Result<Vec<_>>>()?;
            unitors.push(NatTrans::new(
                functors[index.identity(a).0].clone(),
                Functor::identity(cat.clone()),
                comps,
            )?);
        }
        let mut compositors = Vec::new();
        for (phi, psi) in index.composable_pairs() {
            let k = index.composite(phi, psi).expect("composable");
            let (first, second) = self.application_order(phi, psi);
            let (f1, f2) = (&functors[first.0], &functors[second.0]);
            let (t1, t2) = (&isos[first.0], &isos[second.0]);
            let base = &self.categories[self.fiber_endpoints(k).0 .0];
            let mid = f1.cod();
            let top = f2.cod();
            let old = self.compositor(phi, psi);
            let comps = base
                .objects()
                .map(|x| {
                    let back2 = inv(top, t2.component(self.functor(first).object(x)));
                    let back1 = f2.arrow(inv(mid, t1.component(x)));
                    Ok(top.compose_path(&[
                        self.functor(k)
                            .cod()
                            .compose(isos[k.0].component(x), old.component(x))?,
                        back2,
                        back1,
                    ]))
                })
                .collect::<Result<Vec<_>>>()?;
            compositors.push(((phi, psi), NatTrans::new(functors[k.0].clone(), f1.then(f2)?, comps)?));
        }
        Pseudofunctor::new(
            index.clone(),
            self.variance,
            self.categories.clone(),
            functors,
            unitors,
            compositors,
        )
    }

    pub fn index(&self) -> &Arc<FinCategory> {
        &self.index
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn category(&self, a: ObjectId) -> &Arc<FinCategory> {
        &self.categories[a.0]
    }

    pub fn functor(&self, phi: ArrowId) -> &Functor {
        &self.functors[phi.0]
    }

    pub fn unitor(&self, a: ObjectId) -> &NatTrans {
        &self.unitors[a.0]
    }

    pub fn compositor(&self, phi: ArrowId, psi: ArrowId) -> &NatTrans {
        self.compositors[phi.0 * self.index.arrow_count() + psi.0]
            .as_ref()
            .expect("compositor requested for a composable pair")
    }

    /// `(domain, codomain)` index objects of the functor `D(φ)`.
    pub fn fiber_endpoints(&self, phi: ArrowId) -> (ObjectId, ObjectId) {
        let (a, b) = (self.index.src(phi), self.index.tgt(phi));
        match self.variance {
            Variance::Covariant => (a, b),
            Variance::Contravariant => (b, a),
        }
    }

    /// The pair `(φ, ψ)` in the order its functors are applied.
    pub fn application_order(&self, phi: ArrowId, psi: ArrowId) -> (ArrowId, ArrowId) {
        match self.variance {
            Variance::Covariant => (phi, psi),
            Variance::Contravariant => (psi, phi),
        }
    }

    /// Copy with one unitor component replaced. Used for perturbation tests.
    pub fn with_unitor_component(&self, a: ObjectId, x: ObjectId, arrow: ArrowId) -> Result<Self> {
        let mut out = self.clone();
        let u = &self.unitors[a.0];
        let mut comps = u.components().to_vec();
        comps[x.0] = arrow;
        out.unitors[a.0] = NatTrans::new(u.src().clone(), u.tgt().clone(), comps)?;
        Ok(out)
    }

    /// Copy with one compositor component replaced.
    pub fn with_compositor_component(&self, phi: ArrowId, psi: ArrowId, x: ObjectId, arrow: ArrowId) -> Result<Self> {
        let mut out = self.clone();
        let c = self.compositor(phi, psi);
        let mut comps = c.components().to_vec();
        comps[x.0] = arrow;
        out.compositors[phi.0 * self.index.arrow_count() + psi.0] =
            Some(NatTrans::new(c.src().clone(), c.tgt().clone(), comps)?);
        Ok(out)
    }

    /// Functoriality of each `D(φ)`, naturality and invertibility of every
    /// structure cell, both unit coherences and associativity coherence.
    pub fn validate(&self) -> ValidationReport {
        let idx = &*self.index;
        let mut report = ValidationReport::new();
        for a in idx.objects() {
            report.extend_prefixed(&format!("D({})", idx.object_name(a)), self.categories[a.0].validate());
        }
        for phi in idx.arrows() {
            report.extend_prefixed(&format!("D({})", idx.arrow_name(phi)), self.functors[phi.0].validate());
        }
        let mut cells_ok = true;
        let mut check_cell = |label: String, nat: &NatTrans, report: &mut ValidationReport| {
            let r = nat.validate();
            if !r.is_valid() {
                cells_ok = false;
                report.extend_prefixed(&label, r);
            } else if let Some(x) = nat
                .src()
                .dom()
                .objects()
                .find(|&x| !nat.src().cod().is_iso(nat.component(x)))
            {
                cells_ok = false;
                report.push(
                    ViolationKind::Invertibility,
                    format!(
                        "{label}: component at {} is not invertible",
                        nat.src().dom().object_name(x)
                    ),
                );
            }
        };
        for a in idx.objects() {
            check_cell(
                format!("unitor {}", idx.object_name(a)),
                &self.unitors[a.0],
                &mut report,
            );
        }
        for (phi, psi) in idx.composable_pairs() {
            check_cell(
                format!("compositor {};{}", idx.arrow_name(phi), idx.arrow_name(psi)),
                self.compositor(phi, psi),
                &mut report,
            );
        }
        if !cells_ok {
            return report;
        }
        self.check_unit_coherence(&mut report);
        self.check_associativity(&mut report);
        report
    }

    fn check_unit_coherence(&self, report: &mut ValidationReport) {
        let idx = &*self.index;
        for (phi, psi) in idx.composable_pairs() {
            let (first, second) = self.application_order(phi, psi);
            let delta = self.compositor(phi, psi);
            let (f1, f2) = (self.functor(first), self.functor(second));
            let dom = f1.dom();
            let cod = f2.cod();
            // D(1_X) applied first: δ_{pair,a} ; F2(δ_{X,a}) = 1
            if idx.is_identity(first) {
                let u = self.unitor(idx.src(first));
                for a in dom.objects() {
                    let lhs = cod.composite(delta.component(a), f2.arrow(u.component(a)));
                    if lhs != Some(cod.identity(f2.object(a))) {
                        report.push(
                            ViolationKind::UnitCoherence,
                            format!(
                                "unit coherence fails for {};{} at {}",
                                idx.arrow_name(phi),
                                idx.arrow_name(psi),
                                dom.object_name(a)
                            ),
                        );
                    }
                }
            }
            // D(1_Y) applied second: δ_{pair,a} ; δ_{Y,F1 a} = 1
            if idx.is_identity(second) {
                let u = self.unitor(idx.src(second));
                for a in dom.objects() {
                    let lhs = cod.composite(delta.component(a), u.component(f1.object(a)));
                    if lhs != Some(cod.identity(f1.object(a))) {
                        report.push(
                            ViolationKind::UnitCoherence,
                            format!(
                                "unit coherence fails for {};{} at {}",
                                idx.arrow_name(phi),
                                idx.arrow_name(psi),
                                dom.object_name(a)
                            ),
                        );
                    }
                }
            }
        }
    }

    fn check_associativity(&self, report: &mut ValidationReport) {
        let idx = &*self.index;
        for (phi, psi) in idx.composable_pairs() {
            let phipsi = idx.composite(phi, psi).expect("composable");
            for &gamma in idx.arrows_from(idx.tgt(psi)) {
                let psigamma = idx.composite(psi, gamma).expect("composable");
                let all = self.functor(idx.composite(phipsi, gamma).expect("composable"));
                let dom = all.dom();
                let cod = all.cod();
                for a in dom.objects() {
                    let (lhs, rhs) = match self.variance {
                        Variance::Covariant => (
                            cod.composite(
                                self.compositor(phi, psigamma).component(a),
                                self.compositor(psi, gamma).component(self.functor(phi).object(a)),
                            ),
                            cod.composite(
                                self.compositor(phipsi, gamma).component(a),
                                self.functor(gamma).arrow(self.compositor(phi, psi).component(a)),
                            ),
                        ),
                        Variance::Contravariant => (
                            cod.composite(
                                self.compositor(phi, psigamma).component(a),
                                self.functor(phi).arrow(self.compositor(psi, gamma).component(a)),
                            ),
                            cod.composite(
                                self.compositor(phipsi, gamma).component(a),
                                self.compositor(phi, psi).component(self.functor(gamma).object(a)),
                            ),
                        ),
                    };
                    if lhs.is_none() || lhs != rhs {
                        report.push(
                            ViolationKind::CompositionCoherence,
                            format!(
                                "associativity coherence fails for ({},{},{}) at {}",
                                idx.arrow_name(phi),
                                idx.arrow_name(psi),
                                idx.arrow_name(gamma),
                                dom.object_name(a)
                            ),
                        );
                    }
                }
            }
        }
    }
}
