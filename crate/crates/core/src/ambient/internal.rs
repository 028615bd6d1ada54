use crate::error::{Error, Result};
use crate::fincat::{Arrow, ArrowId, FinCategory, ObjectId};
use crate::report::{ValidationReport, ViolationKind};

use super::finset::{pullback, FinMap, FinSet, Pullback};

/// A category object `(C0, C1, s, t, e, c)` in finite sets, with
/// `C2 = C1 ×_{C0} C1` the pullback of `t` and `s`. Element names are
/// carried for reports and externalization.
#[derive(Debug, Clone)]
pub struct InternalCategory {
    pub c0: FinSet,
    pub c1: FinSet,
    pub s: FinMap,
    pub t: FinMap,
    pub e: FinMap,
    pub c: FinMap,
    c2: Pullback,
    object_names: Vec<String>,
    arrow_names: Vec<String>,
}

impl InternalCategory {
    /// Checks that the maps are typed correctly; the laws are checked by
    /// [`InternalCategory::validate`].
    pub fn new(
        (s, t, e, c): (FinMap, FinMap, FinMap, FinMap),
        object_names: Vec<String>,
        arrow_names: Vec<String>,
    ) -> Result<Self> {
        let c0 = s.cod().clone();
        let c1 = s.dom().clone();
        if t.dom().size != c1.size || t.cod().size != c0.size {
            return Err(Error::input("target map is not C1 → C0"));
        }
        if e.dom().size != c0.size || e.cod().size != c1.size {
            return Err(Error::input("identity map is not C0 → C1"));
        }
        let c2 = pullback(&t, &s)?;
        if c.dom().size != c2.object.size || c.cod().size != c1.size {
            return Err(Error::input("composition map is not C2 → C1"));
        }
        if object_names.len() != c0.size || arrow_names.len() != c1.size {
            return Err(Error::input("element names do not match the carrier sizes"));
        }
        Ok(InternalCategory {
            c0,
            c1,
            s,
            t,
            e,
            c,
            c2,
            object_names,
            arrow_names,
        })
    }

    /// The composable-pairs pullback.
    pub fn c2(&self) -> &Pullback {
        &self.c2
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.object_names[x]
    }

    pub fn arrow_name(&self, f: usize) -> &str {
        &self.arrow_names[f]
    }

    /// Composite of `f` then `g`, if composable.
    pub fn composite(&self, f: usize, g: usize) -> Option<usize> {
        self.c2.index_of(f, g).map(|i| self.c.apply(i))
    }

    /// Replaces the composite of the `pair`-th composable pair.
    pub fn with_composite_entry(&self, pair: usize, value: usize) -> Result<Self> {
        let mut table = self.c.table().to_vec();
        if pair >= table.len() || value >= self.c1.size {
            return Err(Error::input("composite entry out of range"));
        }
        table[pair] = value;
        let mut out = self.clone();
        out.c = FinMap::new(self.c.dom().clone(), self.c1.clone(), table)?;
        Ok(out)
    }

    /// Checks the unit, endpoint, identity and associativity diagrams as
    /// equalities of tables.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let id0 = FinMap::identity(&self.c0);
        let es = self.e.then(&self.s).expect("typed");
        let et = self.e.then(&self.t).expect("typed");
        if !es.agrees_with(&id0) || !et.agrees_with(&id0) {
            let x = (0..self.c0.size)
                .find(|&x| es.apply(x) != x || et.apply(x) != x)
                .expect("differs somewhere");
            report.push(
                ViolationKind::Diagram,
                format!("e is not a common section of s and t at {}", self.object_names[x]),
            );
        }
        let cs = self.c.then(&self.s).expect("typed");
        let cs_expected = self.c2.p0.then(&self.s).expect("typed");
        let ct = self.c.then(&self.t).expect("typed");
        let ct_expected = self.c2.p1.then(&self.t).expect("typed");
        let mut endpoints_ok = true;
        for i in 0..self.c2.object.size {
            if cs.apply(i) != cs_expected.apply(i) || ct.apply(i) != ct_expected.apply(i) {
                endpoints_ok = false;
                let (f, g) = self.c2.pair(i);
                report.push(
                    ViolationKind::Endpoint,
                    format!(
                        "composite of ({}, {}) has the wrong endpoints",
                        self.arrow_names[f], self.arrow_names[g]
                    ),
                );
            }
        }
        if !report.is_valid() {
            return report;
        }
        let id1 = FinMap::identity(&self.c1);
        let left = self
            .c2
            .mediate(&self.s.then(&self.e).expect("typed"), &id1)
            .expect("e is a section");
        let right = self
            .c2
            .mediate(&id1, &self.t.then(&self.e).expect("typed"))
            .expect("e is a section");
        for (side, m) in [("left", left), ("right", right)] {
            let lc = m.then(&self.c).expect("typed");
            if let Some(f) = (0..self.c1.size).find(|&f| lc.apply(f) != f) {
                report.push(
                    ViolationKind::Identity,
                    format!("{side} identity law fails at {}", self.arrow_names[f]),
                );
            }
        }
        if !endpoints_ok {
            return report;
        }
        // C3 = C2 ×_{C1} C2 glued along the shared middle arrow
        let c3 = pullback(&self.c2.p1, &self.c2.p0).expect("common codomain");
        let first = c3.p0.then(&self.c).expect("typed");
        let last = c3.p1.then(&self.c2.p1).expect("typed");
        let c_times_1 = self.c2.mediate(&first, &last).expect("endpoints hold");
        let head = c3.p0.then(&self.c2.p0).expect("typed");
        let tail = c3.p1.then(&self.c).expect("typed");
        let one_times_c = self.c2.mediate(&head, &tail).expect("endpoints hold");
        let lhs = c_times_1.then(&self.c).expect("typed");
        let rhs = one_times_c.then(&self.c).expect("typed");
        for i in 0..c3.object.size {
            if lhs.apply(i) != rhs.apply(i) {
                let (fg, gh) = c3.pair(i);
                let (f, g) = self.c2.pair(fg);
                let h = self.c2.pair(gh).1;
                report.push(
                    ViolationKind::Associativity,
                    format!(
                        "associativity fails at ({}, {}, {})",
                        self.arrow_names[f], self.arrow_names[g], self.arrow_names[h]
                    ),
                );
            }
        }
        report
    }

    /// Reads the category object as a finite category, element by element.
    pub fn externalize(&self) -> Result<FinCategory> {
        let n = self.c1.size;
        let arrows = (0..n)
            .map(|f| Arrow {
                name: self.arrow_names[f].clone(),
                src: ObjectId(self.s.apply(f)),
                tgt: ObjectId(self.t.apply(f)),
            })
            .collect();
        let identities = (0..self.c0.size).map(|x| ArrowId(self.e.apply(x))).collect();
        let mut table = vec![None; n * n];
        for i in 0..self.c2.object.size {
            let (f, g) = self.c2.pair(i);
            table[f * n + g] = Some(ArrowId(self.c.apply(i)));
        }
        FinCategory::from_table(self.object_names.clone(), arrows, identities, table)
    }
}

/// The category object of a finite category.
pub fn internalize(cat: &FinCategory) -> InternalCategory {
    let c0 = FinSet::new("C0", cat.object_count());
    let c1 = FinSet::new("C1", cat.arrow_count());
    let s = FinMap::new(c1.clone(), c0.clone(), cat.arrows().map(|f| cat.src(f).0).collect()).expect("typed");
    let t = FinMap::new(c1.clone(), c0.clone(), cat.arrows().map(|f| cat.tgt(f).0).collect()).expect("typed");
    let e = FinMap::new(
        c0.clone(),
        c1.clone(),
        cat.objects().map(|x| cat.identity(x).0).collect(),
    )
    .expect("typed");
    let c2 = pullback(&t, &s).expect("common codomain");
    let table = (0..c2.object.size)
        .map(|i| {
            let (f, g) = c2.pair(i);
            cat.composite(ArrowId(f), ArrowId(g)).expect("composable").0
        })
        .collect();
    let c = FinMap::new(c2.object.clone(), c1, table).expect("typed");
    InternalCategory::new(
        (s, t, e, c),
        cat.objects().map(|x| cat.object_name(x).to_string()).collect(),
        cat.arrows().map(|f| cat.arrow_name(f).to_string()).collect(),
    )
    .expect("internalized tables are typed")
}

/// An internal functor `(F0, F1)`.
#[derive(Debug, Clone)]
pub struct InternalFunctor {
    pub f0: FinMap,
    pub f1: FinMap,
}

impl InternalFunctor {
    /// Checks `F1 s = s F0`, `F1 t = t F0`, `e F1 = F0 e` and
    /// preservation of composites.
    pub fn validate(&self, dom: &InternalCategory, cod: &InternalCategory) -> ValidationReport {
        let mut report = ValidationReport::new();
        if self.f0.dom().size != dom.c0.size
            || self.f0.cod().size != cod.c0.size
            || self.f1.dom().size != dom.c1.size
            || self.f1.cod().size != cod.c1.size
        {
            report.push(ViolationKind::Endpoint, "functor components have the wrong types");
            return report;
        }
        for f in 0..dom.c1.size {
            let g = self.f1.apply(f);
            if cod.s.apply(g) != self.f0.apply(dom.s.apply(f)) || cod.t.apply(g) != self.f0.apply(dom.t.apply(f)) {
                report.push(
                    ViolationKind::Endpoint,
                    format!("{} is sent off its endpoints", dom.arrow_name(f)),
                );
            }
        }
        for x in 0..dom.c0.size {
            if self.f1.apply(dom.e.apply(x)) != cod.e.apply(self.f0.apply(x)) {
                report.push(
                    ViolationKind::Functoriality,
                    format!("identity of {} not preserved", dom.object_name(x)),
                );
            }
        }
        for i in 0..dom.c2().object.size {
            let (f, g) = dom.c2().pair(i);
            if cod.composite(self.f1.apply(f), self.f1.apply(g)) != Some(self.f1.apply(dom.c.apply(i))) {
                report.push(
                    ViolationKind::Functoriality,
                    format!("composite ({}, {}) not preserved", dom.arrow_name(f), dom.arrow_name(g)),
                );
            }
        }
        report
    }
}

/// An internal natural transformation `α: C0 → D1` between internal
/// functors.
#[derive(Debug, Clone)]
pub struct InternalNatTrans {
    pub src: InternalFunctor,
    pub tgt: InternalFunctor,
    pub alpha: FinMap,
}

impl InternalNatTrans {
    /// Checks endpoints and `⟨F1, t α⟩ c = ⟨s α, G1⟩ c`.
    pub fn validate(&self, dom: &InternalCategory, cod: &InternalCategory) -> ValidationReport {
        let mut report = ValidationReport::new();
        for x in 0..dom.c0.size {
            let a = self.alpha.apply(x);
            if cod.s.apply(a) != self.src.f0.apply(x) || cod.t.apply(a) != self.tgt.f0.apply(x) {
                report.push(
                    ViolationKind::Endpoint,
                    format!("component at {} has the wrong type", dom.object_name(x)),
                );
                return report;
            }
        }
        for f in 0..dom.c1.size {
            let (p, q) = (dom.s.apply(f), dom.t.apply(f));
            let left = cod.composite(self.src.f1.apply(f), self.alpha.apply(q));
            let right = cod.composite(self.alpha.apply(p), self.tgt.f1.apply(f));
            if left.is_none() || left != right {
                report.push(
                    ViolationKind::Naturality,
                    format!("naturality fails at {}", dom.arrow_name(f)),
                );
            }
        }
        report
    }
}
