use std::sync::Arc;

use super::{ArrowId, FinCategory, ObjectId};
use crate::error::{Error, Result};
use crate::report::{ValidationReport, ViolationKind};

/// A total assignment of objects and arrows between finite categories.
/// Functoriality is checked by [`Functor::validate`], not on construction.
#[derive(Debug, Clone)]
pub struct Functor {
    dom: Arc<FinCategory>,
    cod: Arc<FinCategory>,
    on_objects: Vec<ObjectId>,
    on_arrows: Vec<ArrowId>,
}

fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.on_objects == other.on_objects
            && self.on_arrows == other.on_arrows
            && same_category(&self.dom, &other.dom)
            && same_category(&self.cod, &other.cod)
    }
}

impl Eq for Functor {}

impl Functor {
    pub fn new(
        dom: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        on_objects: Vec<ObjectId>,
        on_arrows: Vec<ArrowId>,
    ) -> Result<Self> {
        if on_objects.len() != dom.object_count() {
            return Err(Error::input(format!(
                "object map has {} entries for {} objects",
                on_objects.len(),
                dom.object_count()
            )));
        }
        if on_arrows.len() != dom.arrow_count() {
            return Err(Error::input(format!(
                "arrow map has {} entries for {} arrows",
                on_arrows.len(),
                dom.arrow_count()
            )));
        }
        if on_objects.iter().any(|x| x.0 >= cod.object_count()) || on_arrows.iter().any(|f| f.0 >= cod.arrow_count()) {
            return Err(Error::input("functor image outside its codomain"));
        }
        Ok(Functor {
            dom,
            cod,
            on_objects,
            on_arrows,
        })
    }

    /// Builds a functor from name pairs. Identity arrows left out of
    /// `arrows` are sent to the identity of the image object.
    pub fn from_names(
        dom: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        objects: &[(&str, &str)],
        arrows: &[(&str, &str)],
    ) -> Result<Self> {
        let mut on_objects = vec![None; dom.object_count()];
        for (x, y) in objects {
            on_objects[dom.object_named(x)?.0] = Some(cod.object_named(y)?);
        }
        let on_objects = on_objects
            .into_iter()
            .enumerate()
            .map(|(i, y)| {
                y.ok_or_else(|| Error::input(format!("object map is missing {:?}", dom.object_name(ObjectId(i)))))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut on_arrows = vec![None; dom.arrow_count()];
        for (f, g) in arrows {
            on_arrows[dom.arrow_named(f)?.0] = Some(cod.arrow_named(g)?);
        }
        for x in dom.objects() {
            on_arrows[dom.identity(x).0].get_or_insert(cod.identity(on_objects[x.0]));
        }
        let on_arrows = on_arrows
            .into_iter()
            .enumerate()
            .map(|(i, g)| {
                g.ok_or_else(|| Error::input(format!("arrow map is missing {:?}", dom.arrow_name(ArrowId(i)))))
            })
            .collect::<Result<Vec<_>>>()?;
        Functor::new(dom, cod, on_objects, on_arrows)
    }

    pub fn identity(cat: Arc<FinCategory>) -> Self {
        let on_objects = cat.objects().collect();
        let on_arrows = cat.arrows().collect();
        Functor {
            dom: cat.clone(),
            cod: cat,
            on_objects,
            on_arrows,
        }
    }

    /// The functor constant at `x`.
    pub fn constant(dom: Arc<FinCategory>, cod: Arc<FinCategory>, x: ObjectId) -> Self {
        let id = cod.identity(x);
        Functor {
            on_objects: vec![x; dom.object_count()],
            on_arrows: vec![id; dom.arrow_count()],
            dom,
            cod,
        }
    }

    pub fn dom(&self) -> &Arc<FinCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinCategory> {
        &self.cod
    }

    pub fn object(&self, x: ObjectId) -> ObjectId {
        self.on_objects[x.0]
    }

    pub fn arrow(&self, f: ArrowId) -> ArrowId {
        self.on_arrows[f.0]
    }

    pub fn object_map(&self) -> &[ObjectId] {
        &self.on_objects
    }

    pub fn arrow_map(&self) -> &[ArrowId] {
        &self.on_arrows
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if !same_category(&self.cod, &other.dom) {
            return Err(Error::domain("functors are not composable"));
        }
        Ok(Functor {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            on_objects: self.on_objects.iter().map(|&x| other.object(x)).collect(),
            on_arrows: self.on_arrows.iter().map(|&f| other.arrow(f)).collect(),
        })
    }

    /// Same assignment, re-typed against structurally equal categories.
    pub fn retarget(&self, dom: Arc<FinCategory>, cod: Arc<FinCategory>) -> Result<Functor> {
        if !same_category(&self.dom, &dom) || !same_category(&self.cod, &cod) {
            return Err(Error::domain("retarget needs equal categories"));
        }
        Ok(Functor {
            dom,
            cod,
            on_objects: self.on_objects.clone(),
            on_arrows: self.on_arrows.clone(),
        })
    }

    /// Checks preservation of endpoints, identities and composites.
    pub fn validate(&self) -> ValidationReport {
        let (c, x) = (&*self.dom, &*self.cod);
        let mut report = ValidationReport::new();
        for f in c.arrows() {
            let g = self.arrow(f);
            if x.src(g) != self.object(c.src(f)) || x.tgt(g) != self.object(c.tgt(f)) {
                report.push(
                    ViolationKind::Endpoint,
                    format!(
                        "{} ↦ {} does not respect source/target",
                        c.arrow_name(f),
                        x.arrow_name(g)
                    ),
                );
            }
        }
        for o in c.objects() {
            if self.arrow(c.identity(o)) != x.identity(self.object(o)) {
                report.push(
                    ViolationKind::Functoriality,
                    format!("identity of {} is not preserved", c.object_name(o)),
                );
            }
        }
        for (f, g) in c.composable_pairs() {
            let h = c.composite(f, g).expect("composable");
            let expected = x.composite(self.arrow(f), self.arrow(g));
            if expected != Some(self.arrow(h)) {
                report.push(
                    ViolationKind::Functoriality,
                    format!("composite {};{} is not preserved", c.arrow_name(f), c.arrow_name(g)),
                );
            }
        }
        report
    }

    pub fn describe(&self) -> String {
        let (c, x) = (&*self.dom, &*self.cod);
        let objs: Vec<String> = c
            .objects()
            .map(|o| format!("{}↦{}", c.object_name(o), x.object_name(self.object(o))))
            .collect();
        let arrs: Vec<String> = c
            .arrows()
            .filter(|&f| !c.is_identity(f))
            .map(|f| format!("{}↦{}", c.arrow_name(f), x.arrow_name(self.arrow(f))))
            .collect();
        format!("{{{}; {}}}", objs.join(", "), arrs.join(", "))
    }
}

/// A family of arrows `F(x) → G(x)` between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    src: Functor,
    tgt: Functor,
    components: Vec<ArrowId>,
}

impl NatTrans {
    pub fn new(src: Functor, tgt: Functor, components: Vec<ArrowId>) -> Result<Self> {
        if !same_category(&src.dom, &tgt.dom) || !same_category(&src.cod, &tgt.cod) {
            return Err(Error::domain("natural transformation between non-parallel functors"));
        }
        if components.len() != src.dom.object_count() {
            return Err(Error::input(format!(
                "transformation has {} components for {} objects",
                components.len(),
                src.dom.object_count()
            )));
        }
        if components.iter().any(|f| f.0 >= src.cod.arrow_count()) {
            return Err(Error::input("component outside the codomain"));
        }
        Ok(NatTrans { src, tgt, components })
    }

    pub fn identity(f: &Functor) -> Self {
        let components = f.dom.objects().map(|x| f.cod.identity(f.object(x))).collect();
        NatTrans {
            src: f.clone(),
            tgt: f.clone(),
            components,
        }
    }

    pub fn src(&self) -> &Functor {
        &self.src
    }

    pub fn tgt(&self) -> &Functor {
        &self.tgt
    }

    pub fn component(&self, x: ObjectId) -> ArrowId {
        self.components[x.0]
    }

    pub fn components(&self) -> &[ArrowId] {
        &self.components
    }

    /// Vertical composite `self` then `other`.
    pub fn then(&self, other: &NatTrans) -> Result<NatTrans> {
        if self.tgt != other.src {
            return Err(Error::domain("transformations are not vertically composable"));
        }
        let cod = &self.src.cod;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| cod.compose(a, b))
            .collect::<Result<Vec<_>>>()?;
        NatTrans::new(self.src.clone(), other.tgt.clone(), components)
    }

    /// Checks component endpoints and every naturality square.
    pub fn validate(&self) -> ValidationReport {
        let (c, x) = (&*self.src.dom, &*self.src.cod);
        let mut report = ValidationReport::new();
        let mut typed = true;
        for o in c.objects() {
            let a = self.component(o);
            if x.src(a) != self.src.object(o) || x.tgt(a) != self.tgt.object(o) {
                typed = false;
                report.push(
                    ViolationKind::Endpoint,
                    format!(
                        "component {} at {} has the wrong type",
                        x.arrow_name(a),
                        c.object_name(o)
                    ),
                );
            }
        }
        if !typed {
            return report;
        }
        for f in c.arrows() {
            let (p, q) = (c.src(f), c.tgt(f));
            let left = x.composite(self.src.arrow(f), self.component(q));
            let right = x.composite(self.component(p), self.tgt.arrow(f));
            if left.is_none() || left != right {
                report.push(
                    ViolationKind::Naturality,
                    format!("naturality square fails at {}", c.arrow_name(f)),
                );
            }
        }
        report
    }

    /// True iff every component is invertible.
    pub fn is_invertible(&self) -> bool {
        self.components.iter().all(|&a| self.src.cod.is_iso(a))
    }
}
