use std::sync::Arc;

use super::{Pseudofunctor, Variance};
use crate::error::{Error, Result};
use crate::fincat::{enumerate_functors, enumerate_nat_trans, ArrowId, FinCategory, Functor, NatTrans, ObjectId};
use crate::report::{ValidationReport, ViolationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformationKind {
    Lax,
    Pseudo,
}

/// A transformation `D ⇒ ΔX` into a constant diagram.
///
/// For covariant `D` the two-cells point `x_A ⇒ D(φ);x_B` (lax). For
/// contravariant `D` they point `D(φ);x_A ⇒ x_B`, which is the oplax
/// orientation; the same type carries both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxTransformation {
    diagram: Arc<Pseudofunctor>,
    target: Arc<FinCategory>,
    components: Vec<Functor>,
    two_cells: Vec<NatTrans>,
}

/// Source and target functors of the two-cell at `φ`.
fn cell_type(d: &Pseudofunctor, comps: &[Functor], phi: ArrowId) -> Result<(Functor, Functor)> {
    let (a, b) = (d.index().src(phi), d.index().tgt(phi));
    Ok(match d.variance() {
        Variance::Covariant => (comps[a.0].clone(), d.functor(phi).then(&comps[b.0])?),
        Variance::Contravariant => (d.functor(phi).then(&comps[a.0])?, comps[b.0].clone()),
    })
}

/// The two-cell at an identity arrow that unit coherence forces, if the
/// unitor is invertible where needed.
fn forced_identity_cell(d: &Pseudofunctor, comps: &[Functor], a: ObjectId) -> Option<Vec<ArrowId>> {
    let cat = d.category(a);
    let u = d.unitor(a);
    cat.objects()
        .map(|o| {
            let arrow = match d.variance() {
                Variance::Covariant => cat.inverse(u.component(o))?,
                Variance::Contravariant => u.component(o),
            };
            Some(comps[a.0].arrow(arrow))
        })
        .collect()
}

/// Whether composition coherence holds at the pair `(φ, ψ)`.
fn pair_coherent(
    d: &Pseudofunctor,
    x: &FinCategory,
    comps: &[Functor],
    cells: &[Option<NatTrans>],
    phi: ArrowId,
    psi: ArrowId,
) -> std::result::Result<(), ObjectId> {
    let idx = d.index();
    let k = idx.composite(phi, psi).expect("composable");
    let cell = |f: ArrowId| cells[f.0].as_ref().expect("assigned");
    let delta = d.compositor(phi, psi);
    let c = idx.tgt(psi);
    let fiber = d.functor(k).dom();
    for o in fiber.objects() {
        let ok = match d.variance() {
            Variance::Covariant => {
                let lhs = x.composite(cell(k).component(o), comps[c.0].arrow(delta.component(o)));
                let rhs = x.composite(cell(phi).component(o), cell(psi).component(d.functor(phi).object(o)));
                lhs.is_some() && lhs == rhs
            }
            Variance::Contravariant => {
                let a = idx.src(phi);
                let rhs = x
                    .composite(
                        comps[a.0].arrow(delta.component(o)),
                        cell(phi).component(d.functor(psi).object(o)),
                    )
                    .and_then(|h| x.composite(h, cell(psi).component(o)));
                rhs == Some(cell(k).component(o))
            }
        };
        if !ok {
            return Err(o);
        }
    }
    Ok(())
}

impl LaxTransformation {
    pub fn new(
        diagram: Arc<Pseudofunctor>,
        target: Arc<FinCategory>,
        components: Vec<Functor>,
        two_cells: Vec<NatTrans>,
    ) -> Result<Self> {
        let idx = diagram.index().clone();
        if components.len() != idx.object_count() {
            return Err(Error::input("need one component functor per index object"));
        }
        if two_cells.len() != idx.arrow_count() {
            return Err(Error::input("need one two-cell per index arrow"));
        }
        for a in idx.objects() {
            let f = &components[a.0];
            if f.dom() != diagram.category(a) || f.cod() != &target {
                return Err(Error::input(format!(
                    "component at {} has the wrong type",
                    idx.object_name(a)
                )));
            }
        }
        for phi in idx.arrows() {
            let (src, tgt) = cell_type(&diagram, &components, phi)?;
            let cell = &two_cells[phi.0];
            if cell.src() != &src || cell.tgt() != &tgt {
                return Err(Error::input(format!(
                    "two-cell at {} has the wrong source or target",
                    idx.arrow_name(phi)
                )));
            }
        }
        Ok(LaxTransformation {
            diagram,
            target,
            components,
            two_cells,
        })
    }

    /// Builds the two-cells from raw component lists.
    pub fn from_components(
        diagram: Arc<Pseudofunctor>,
        target: Arc<FinCategory>,
        components: Vec<Functor>,
        cell_components: Vec<Vec<ArrowId>>,
    ) -> Result<Self> {
        if components.len() != diagram.index().object_count() || cell_components.len() != diagram.index().arrow_count()
        {
            return Err(Error::input("transformation data is not total"));
        }
        let two_cells = diagram
            .index()
            .arrows()
            .zip(cell_components)
            .map(|(phi, comps)| {
                let (src, tgt) = cell_type(&diagram, &components, phi)?;
                NatTrans::new(src, tgt, comps)
            })
            .collect::<Result<Vec<_>>>()?;
        LaxTransformation::new(diagram, target, components, two_cells)
    }

    pub fn diagram(&self) -> &Arc<Pseudofunctor> {
        &self.diagram
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn component(&self, a: ObjectId) -> &Functor {
        &self.components[a.0]
    }

    pub fn components(&self) -> &[Functor] {
        &self.components
    }

    pub fn two_cell(&self, phi: ArrowId) -> &NatTrans {
        &self.two_cells[phi.0]
    }

    /// Component functors, two-cell naturality, unit and composition
    /// coherence.
    pub fn validate(&self) -> ValidationReport {
        let d = &*self.diagram;
        let idx = d.index();
        let mut report = ValidationReport::new();
        for a in idx.objects() {
            report.extend_prefixed(
                &format!("component {}", idx.object_name(a)),
                self.components[a.0].validate(),
            );
        }
        for phi in idx.arrows() {
            report.extend_prefixed(
                &format!("two-cell {}", idx.arrow_name(phi)),
                self.two_cells[phi.0].validate(),
            );
        }
        if !report.is_valid() {
            return report;
        }
        for a in idx.objects() {
            let forced = forced_identity_cell(d, &self.components, a);
            let actual = self.two_cells[idx.identity(a).0].components();
            match forced {
                None => report.push(
                    ViolationKind::Invertibility,
                    format!("unitor at {} is not invertible", idx.object_name(a)),
                ),
                Some(f) if f != actual => {
                    let o = f.iter().zip(actual).position(|(p, q)| p != q).expect("differs");
                    report.push(
                        ViolationKind::UnitCoherence,
                        format!(
                            "unit coherence fails at {} on {}",
                            idx.object_name(a),
                            d.category(a).object_name(ObjectId(o))
                        ),
                    );
                }
                Some(_) => {}
            }
        }
        let cells: Vec<Option<NatTrans>> = self.two_cells.iter().cloned().map(Some).collect();
        for (phi, psi) in idx.composable_pairs() {
            if let Err(o) = pair_coherent(d, &self.target, &self.components, &cells, phi, psi) {
                let k = idx.composite(phi, psi).expect("composable");
                report.push(
                    ViolationKind::CompositionCoherence,
                    format!(
                        "composition coherence fails at {};{} on {}",
                        idx.arrow_name(phi),
                        idx.arrow_name(psi),
                        d.functor(k).dom().object_name(o)
                    ),
                );
            }
        }
        report
    }

    /// The first two-cell component without an inverse, as (index arrow,
    /// object of the fiber the component is indexed by).
    pub fn non_invertible_two_cell(&self) -> Option<(ArrowId, ObjectId)> {
        self.diagram.index().arrows().find_map(|phi| {
            let cell = &self.two_cells[phi.0];
            cell.src()
                .dom()
                .objects()
                .find(|&o| !self.target.is_iso(cell.component(o)))
                .map(|o| (phi, o))
        })
    }

    /// True iff every two-cell component is invertible.
    pub fn is_pseudo(&self) -> bool {
        self.non_invertible_two_cell().is_none()
    }
}

/// All transformations `D ⇒ ΔX` of the given kind, ordered by component
/// functors (index object order) then two-cells (index arrow order).
pub fn enumerate_transformations(
    d: &Arc<Pseudofunctor>,
    x: &Arc<FinCategory>,
    kind: TransformationKind,
) -> Vec<LaxTransformation> {
    let idx = d.index().clone();
    let choices: Vec<Vec<Functor>> = idx.objects().map(|a| enumerate_functors(d.category(a), x)).collect();
    let mut pairs_by_last: Vec<Vec<(ArrowId, ArrowId)>> = vec![Vec::new(); idx.arrow_count()];
    for (p, q) in idx.composable_pairs() {
        let k = idx.composite(p, q).expect("composable");
        pairs_by_last[p.0.max(q.0).max(k.0)].push((p, q));
    }
    let mut search = Search {
        d,
        x,
        pairs_by_last,
        comps: Vec::new(),
        cells: vec![None; idx.arrow_count()],
        out: Vec::new(),
    };
    search.objects(&choices, 0);
    match kind {
        TransformationKind::Lax => search.out,
        TransformationKind::Pseudo => search.out.into_iter().filter(|t| t.is_pseudo()).collect(),
    }
}

struct Search<'a> {
    d: &'a Arc<Pseudofunctor>,
    x: &'a Arc<FinCategory>,
    pairs_by_last: Vec<Vec<(ArrowId, ArrowId)>>,
    comps: Vec<Functor>,
    cells: Vec<Option<NatTrans>>,
    out: Vec<LaxTransformation>,
}

impl Search<'_> {
    fn objects(&mut self, choices: &[Vec<Functor>], next: usize) {
        if next == choices.len() {
            self.arrows(0);
            return;
        }
        for f in &choices[next] {
            self.comps.push(f.clone());
            self.objects(choices, next + 1);
            self.comps.pop();
        }
    }

    fn arrows(&mut self, next: usize) {
        let idx = self.d.index().clone();
        if next == idx.arrow_count() {
            let cells = self.cells.iter().map(|c| c.clone().expect("assigned")).collect();
            self.out.push(
                LaxTransformation::new(self.d.clone(), self.x.clone(), self.comps.clone(), cells)
                    .expect("enumerated data is well typed"),
            );
            return;
        }
        let phi = ArrowId(next);
        let (src, tgt) = cell_type(self.d, &self.comps, phi).expect("typed components");
        let candidates: Vec<NatTrans> = if idx.is_identity(phi) {
            forced_identity_cell(self.d, &self.comps, idx.src(phi))
                .and_then(|comps| NatTrans::new(src, tgt, comps).ok())
                .filter(|n| n.validate().is_valid())
                .into_iter()
                .collect()
        } else {
            enumerate_nat_trans(&src, &tgt).expect("parallel by construction")
        };
        for cand in candidates {
            self.cells[next] = Some(cand);
            let coherent = self.pairs_by_last[next]
                .iter()
                .all(|&(p, q)| pair_coherent(self.d, self.x, &self.comps, &self.cells, p, q).is_ok());
            if coherent {
                self.arrows(next + 1);
            }
        }
        self.cells[next] = None;
    }
}
