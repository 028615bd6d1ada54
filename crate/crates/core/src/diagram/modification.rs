use super::{LaxTransformation, Variance};
use crate::error::{Error, Result};
use crate::fincat::{enumerate_nat_trans, NatTrans, ObjectId};
use crate::report::{ValidationReport, ViolationKind};

/// A modification `x ⇛ y`: one natural transformation `x_A ⇒ y_A` per
/// index object, compatible with the two-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modification {
    src: LaxTransformation,
    tgt: LaxTransformation,
    components: Vec<NatTrans>,
}

fn parallel(x: &LaxTransformation, y: &LaxTransformation) -> bool {
    x.diagram() == y.diagram() && x.target() == y.target()
}

impl Modification {
    pub fn new(src: LaxTransformation, tgt: LaxTransformation, components: Vec<NatTrans>) -> Result<Self> {
        if !parallel(&src, &tgt) {
            return Err(Error::domain("modification between non-parallel transformations"));
        }
        let idx = src.diagram().index().clone();
        if components.len() != idx.object_count() {
            return Err(Error::input("need one component per index object"));
        }
        for a in idx.objects() {
            let c = &components[a.0];
            if c.src() != src.component(a) || c.tgt() != tgt.component(a) {
                return Err(Error::input(format!(
                    "modification component at {} has the wrong type",
                    idx.object_name(a)
                )));
            }
        }
        Ok(Modification { src, tgt, components })
    }

    pub fn identity(x: &LaxTransformation) -> Self {
        let components = x.components().iter().map(NatTrans::identity).collect();
        Modification {
            src: x.clone(),
            tgt: x.clone(),
            components,
        }
    }

    pub fn src(&self) -> &LaxTransformation {
        &self.src
    }

    pub fn tgt(&self) -> &LaxTransformation {
        &self.tgt
    }

    pub fn component(&self, a: ObjectId) -> &NatTrans {
        &self.components[a.0]
    }

    /// Vertical composite `self` then `other`.
    pub fn then(&self, other: &Modification) -> Result<Modification> {
        if self.tgt != other.src {
            return Err(Error::domain("modifications are not composable"));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.then(b))
            .collect::<Result<Vec<_>>>()?;
        Modification::new(self.src.clone(), other.tgt.clone(), components)
    }

    /// Naturality of each component and compatibility at every index arrow.
    pub fn validate(&self) -> ValidationReport {
        let idx = self.src.diagram().index().clone();
        let mut report = ValidationReport::new();
        for a in idx.objects() {
            report.extend_prefixed(
                &format!("component {}", idx.object_name(a)),
                self.components[a.0].validate(),
            );
        }
        if !report.is_valid() {
            return report;
        }
        for phi in idx.arrows() {
            if let Err(o) = compatible(&self.src, &self.tgt, &self.components, phi) {
                report.push(
                    ViolationKind::Compatibility,
                    format!(
                        "incompatible with the two-cells at {} on {}",
                        idx.arrow_name(phi),
                        self.src.two_cell(phi).src().dom().object_name(o)
                    ),
                );
            }
        }
        report
    }
}

fn compatible(
    x: &LaxTransformation,
    y: &LaxTransformation,
    comps: &[NatTrans],
    phi: crate::fincat::ArrowId,
) -> std::result::Result<(), ObjectId> {
    let d = x.diagram();
    let idx = d.index();
    let (a, b) = (idx.src(phi), idx.tgt(phi));
    let target = x.target();
    let fiber = x.two_cell(phi).src().dom().clone();
    for o in fiber.objects() {
        let (lhs, rhs) = match d.variance() {
            Variance::Covariant => (
                target.composite(comps[a.0].component(o), y.two_cell(phi).component(o)),
                target.composite(
                    x.two_cell(phi).component(o),
                    comps[b.0].component(d.functor(phi).object(o)),
                ),
            ),
            Variance::Contravariant => (
                target.composite(
                    comps[a.0].component(d.functor(phi).object(o)),
                    y.two_cell(phi).component(o),
                ),
                target.composite(x.two_cell(phi).component(o), comps[b.0].component(o)),
            ),
        };
        if lhs.is_none() || lhs != rhs {
            return Err(o);
        }
    }
    Ok(())
}

/// All modifications `x ⇛ y`, ordered by component choice.
pub fn enumerate_modifications(x: &LaxTransformation, y: &LaxTransformation) -> Result<Vec<Modification>> {
    if !parallel(x, y) {
        return Err(Error::domain(
            "cannot enumerate modifications between non-parallel transformations",
        ));
    }
    let idx = x.diagram().index().clone();
    let choices = idx
        .objects()
        .map(|a| enumerate_nat_trans(x.component(a), y.component(a)))
        .collect::<Result<Vec<_>>>()?;
    let mut by_last = vec![Vec::new(); idx.object_count()];
    for phi in idx.arrows() {
        by_last[idx.src(phi).0.max(idx.tgt(phi).0)].push(phi);
    }
    let mut out = Vec::new();
    let mut comps: Vec<NatTrans> = Vec::new();
    fn rec(
        x: &LaxTransformation,
        y: &LaxTransformation,
        choices: &[Vec<NatTrans>],
        by_last: &[Vec<crate::fincat::ArrowId>],
        comps: &mut Vec<NatTrans>,
        out: &mut Vec<Modification>,
    ) {
        let next = comps.len();
        if next == choices.len() {
            out.push(Modification {
                src: x.clone(),
                tgt: y.clone(),
                components: comps.clone(),
            });
            return;
        }
        for c in &choices[next] {
            comps.push(c.clone());
            // compatibility at arrows whose endpoints are both assigned;
            // the full slice is indexed by object id
            let ok = by_last[next].iter().all(|&phi| compatible(x, y, comps, phi).is_ok());
            if ok {
                rec(x, y, choices, by_last, comps, out);
            }
            comps.pop();
        }
    }
    rec(x, y, &choices, &by_last, &mut comps, &mut out);
    Ok(out)
}
